#pragma once

#include <set>
#include <string>
#include <vector>

#include "refplan/closure.hpp"
#include "refplan/model.hpp"

namespace refplan {

// A refinement plan: one artifact introduced per step.
struct IntroductionOrder {
    std::vector<std::string> steps;  // artifact ids, no repeats

    bool operator==(const IntroductionOrder&) const = default;
};

// Per-step counts of newly introduced phenomena, plus the same counts
// sorted descending, which is the shape the effectiveness comparison
// works on.
class NumsHistory {
public:
    NumsHistory() = default;
    explicit NumsHistory(std::vector<int> nums);

    const std::vector<int>& nums() const { return nums_; }
    const std::vector<int>& snums() const { return snums_; }

    bool operator==(const NumsHistory&) const = default;

private:
    std::vector<int> nums_;
    std::vector<int> snums_;
};

enum class EffectivenessOrdering { MoreEffective, Equal, LessEffective };

std::string to_string(EffectivenessOrdering ordering);

// Phenomena newly introduced by the step-th refinement (1-based): the
// requirement set of the first `step` artifacts minus that of the first
// step-1. Step 1 introduces into the empty model.
std::set<std::string> intro_phenomena(const ValidatedSpec& spec, const IntroductionOrder& order,
                                      int step);

// Full history of per-step introduction counts for an order.
NumsHistory nums_history(const ValidatedSpec& spec, const IntroductionOrder& order);

// An order is more effective when its descending-sorted counts are
// lexicographically smaller: a smaller worst step spreads complexity
// better. Histories of unequal length are compared as if the shorter
// one were padded with trailing zero steps.
EffectivenessOrdering compare_effectiveness(const NumsHistory& x, const NumsHistory& y);

// Resolves orders given as artifact indices to per-step counts using a
// precomputed closure. Shared by the search and the exhaustive oracle.
// Holds references; keep spec and closure alive while using it.
class OrderEvaluator {
public:
    OrderEvaluator(const ValidatedSpec& spec, const RequirementClosure& closure);

    // |req_as(all artifacts)|: the phenomenon budget every full order spends.
    int total_phenomena() const { return total_; }

    // Unions the artifact's requirements into ps, returns how many were new.
    int introduce(IndexSet& ps, int artifact_index) const;

    std::vector<int> nums_for(const std::vector<int>& artifact_indices) const;

private:
    const RequirementClosure* closure_;
    int total_;
};

}  // namespace refplan
