#include "refplan/closure.hpp"

namespace refplan {

namespace {

std::set<std::string> to_ids(const ValidatedSpec& spec, const IndexSet& indices) {
    std::set<std::string> out;
    for (const int p : indices) {
        out.insert(spec.phenomenon(p).id);
    }
    return out;
}

}  // namespace

RequirementClosure RequirementClosure::compute(const ValidatedSpec& spec) {
    const int n = spec.phenomenon_count();

    // Direct requirements: typing carrier sets plus the events behind
    // every transition that changes the phenomenon.
    std::vector<std::vector<int>> direct(n);
    for (int p = 0; p < n; ++p) {
        IndexSet d(spec.typed_of(p).begin(), spec.typed_of(p).end());
        for (const int t : spec.changed_by_of(p)) {
            d.insert(spec.caused_by_of(t).begin(), spec.caused_by_of(t).end());
        }
        direct[p].assign(d.begin(), d.end());
    }

    RequirementClosure closure;
    closure.req_p_.resize(n);
    for (int p = 0; p < n; ++p) {
        // Everything reachable in one or more steps. p itself enters the
        // set only when a dependency cycle reaches back to it; the
        // visited check keeps cycles from looping.
        IndexSet& reached = closure.req_p_[p];
        std::vector<int> worklist(direct[p]);
        while (!worklist.empty()) {
            const int q = worklist.back();
            worklist.pop_back();
            if (reached.insert(q).second) {
                worklist.insert(worklist.end(), direct[q].begin(), direct[q].end());
            }
        }
    }

    closure.req_a_.resize(spec.artifact_count());
    for (int a = 0; a < spec.artifact_count(); ++a) {
        IndexSet& required = closure.req_a_[a];
        for (const int p : spec.appears_of(a)) {
            required.insert(p);
            required.insert(closure.req_p_[p].begin(), closure.req_p_[p].end());
        }
    }
    return closure;
}

IndexSet RequirementClosure::req_as_by_indices(const std::vector<int>& artifact_indices) const {
    IndexSet out;
    for (const int a : artifact_indices) {
        out.insert(req_a_.at(a).begin(), req_a_.at(a).end());
    }
    return out;
}

std::set<std::string> req_p(const ValidatedSpec& spec, const std::string& phenomenon_id) {
    const int p = spec.phenomenon_index(phenomenon_id);
    return to_ids(spec, RequirementClosure::compute(spec).req_p_by_index(p));
}

std::set<std::string> req_a(const ValidatedSpec& spec, const std::string& artifact_id) {
    const int a = spec.artifact_index(artifact_id);
    return to_ids(spec, RequirementClosure::compute(spec).req_a_by_index(a));
}

std::set<std::string> req_as(const ValidatedSpec& spec, const std::set<std::string>& artifact_ids) {
    std::vector<int> indices;
    indices.reserve(artifact_ids.size());
    for (const std::string& id : artifact_ids) {
        indices.push_back(spec.artifact_index(id));
    }
    return to_ids(spec, RequirementClosure::compute(spec).req_as_by_indices(indices));
}

}  // namespace refplan
