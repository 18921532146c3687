#pragma once

#include <set>
#include <string>
#include <vector>

#include "refplan/model.hpp"

namespace refplan {

// Set of phenomenon indices. std::set keeps it ascending, which is the
// canonical (declaration) order.
using IndexSet = std::set<int>;

// Required-phenomena sets for every phenomenon and artifact of a spec.
//
// A phenomenon requires its typing carrier sets plus the events causing
// the transitions that change it, transitively: the requirement set is
// the least fixpoint of that expansion, excluding the phenomenon itself
// unless the dependency graph cycles back to it. An artifact requires
// the phenomena appearing in it plus everything those require.
//
// All sets are materialized at construction; instances are immutable
// and safe to query concurrently.
class RequirementClosure {
public:
    static RequirementClosure compute(const ValidatedSpec& spec);

    const IndexSet& req_p_by_index(int phenomenon_index) const {
        return req_p_.at(phenomenon_index);
    }
    const IndexSet& req_a_by_index(int artifact_index) const { return req_a_.at(artifact_index); }

    IndexSet req_as_by_indices(const std::vector<int>& artifact_indices) const;

private:
    RequirementClosure() = default;

    std::vector<IndexSet> req_p_;
    std::vector<IndexSet> req_a_;
};

// Id-based entry points. Each computes the closure of the given spec on
// the fly; hold a RequirementClosure for repeated queries.
std::set<std::string> req_p(const ValidatedSpec& spec, const std::string& phenomenon_id);
std::set<std::string> req_a(const ValidatedSpec& spec, const std::string& artifact_id);
std::set<std::string> req_as(const ValidatedSpec& spec, const std::set<std::string>& artifact_ids);

}  // namespace refplan
