#include "refplan/effectiveness.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace refplan {

NumsHistory::NumsHistory(std::vector<int> nums) : nums_(std::move(nums)), snums_(nums_) {
    std::sort(snums_.begin(), snums_.end(), std::greater<int>());
}

std::string to_string(EffectivenessOrdering ordering) {
    switch (ordering) {
        case EffectivenessOrdering::MoreEffective: return "more effective";
        case EffectivenessOrdering::Equal: return "equal";
        case EffectivenessOrdering::LessEffective: return "less effective";
    }
    return "unknown";
}

namespace {

std::vector<int> resolve_order(const ValidatedSpec& spec, const IntroductionOrder& order) {
    std::vector<int> indices;
    indices.reserve(order.steps.size());
    std::set<std::string> seen;
    for (const std::string& id : order.steps) {
        if (!seen.insert(id).second) {
            throw InvalidOrderError(id);
        }
        indices.push_back(spec.artifact_index(id));
    }
    return indices;
}

}  // namespace

std::set<std::string> intro_phenomena(const ValidatedSpec& spec, const IntroductionOrder& order,
                                      int step) {
    const std::vector<int> indices = resolve_order(spec, order);
    if (step < 1 || step > static_cast<int>(indices.size())) {
        throw IndexOutOfRangeError(step, static_cast<int>(indices.size()));
    }
    const RequirementClosure closure = RequirementClosure::compute(spec);
    IndexSet before;
    IndexSet after;
    for (int i = 0; i < step; ++i) {
        const IndexSet& required = closure.req_a_by_index(indices[i]);
        after.insert(required.begin(), required.end());
        if (i < step - 1) {
            before.insert(required.begin(), required.end());
        }
    }
    std::set<std::string> introduced;
    for (const int p : after) {
        if (!before.contains(p)) {
            introduced.insert(spec.phenomenon(p).id);
        }
    }
    return introduced;
}

NumsHistory nums_history(const ValidatedSpec& spec, const IntroductionOrder& order) {
    const std::vector<int> indices = resolve_order(spec, order);
    const RequirementClosure closure = RequirementClosure::compute(spec);
    const OrderEvaluator evaluator(spec, closure);
    return NumsHistory(evaluator.nums_for(indices));
}

EffectivenessOrdering compare_effectiveness(const NumsHistory& x, const NumsHistory& y) {
    const std::vector<int>& a = x.snums();
    const std::vector<int>& b = y.snums();
    const std::size_t steps = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < steps; ++i) {
        const int av = i < a.size() ? a[i] : 0;
        const int bv = i < b.size() ? b[i] : 0;
        if (av < bv) return EffectivenessOrdering::MoreEffective;
        if (av > bv) return EffectivenessOrdering::LessEffective;
    }
    return EffectivenessOrdering::Equal;
}

OrderEvaluator::OrderEvaluator(const ValidatedSpec& spec, const RequirementClosure& closure)
    : closure_(&closure) {
    IndexSet all;
    for (int a = 0; a < spec.artifact_count(); ++a) {
        all.insert(closure.req_a_by_index(a).begin(), closure.req_a_by_index(a).end());
    }
    total_ = static_cast<int>(all.size());
}

int OrderEvaluator::introduce(IndexSet& ps, int artifact_index) const {
    const std::size_t before = ps.size();
    const IndexSet& required = closure_->req_a_by_index(artifact_index);
    ps.insert(required.begin(), required.end());
    return static_cast<int>(ps.size() - before);
}

std::vector<int> OrderEvaluator::nums_for(const std::vector<int>& artifact_indices) const {
    std::vector<int> nums;
    nums.reserve(artifact_indices.size());
    IndexSet introduced;
    for (const int a : artifact_indices) {
        nums.push_back(introduce(introduced, a));
    }
    return nums;
}

}  // namespace refplan
