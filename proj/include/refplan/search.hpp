#pragma once

#include <optional>
#include <vector>

#include "refplan/effectiveness.hpp"
#include "refplan/model.hpp"

namespace refplan {

// Exhaustive enumeration refuses specs with more artifacts than this
// unless the caller raises the limit.
inline constexpr int kDefaultEnumerationGuard = 9;

// Node of the introduction-order search: a partial order plus the
// bookkeeping the dominance test needs.
struct SearchNode {
    std::vector<int> artifact_steps;  // artifact indices in introduction order
    IndexSet introduced;              // req_as of artifact_steps
    std::vector<int> nums;            // per-step newly-introduced counts
    int max_num = 0;                  // max of nums, 0 when nums is empty
    int rest = 0;                     // phenomena not introduced yet
};

// Conservative dominance test: true only when every completion of
// maybe_better is strictly more effective than every completion of
// maybe_worse; false means "not sure". A later step can introduce at
// most `rest` phenomena, so a node whose worst case stays below the
// other's current maximum wins outright; shared maxima are stripped one
// occurrence at a time and the comparison retried on the remainder.
bool certainly_better(const SearchNode& maybe_better, const SearchNode& maybe_worse);

struct OrderSummary {
    IntroductionOrder order;
    NumsHistory history;

    bool operator==(const OrderSummary&) const = default;
};

struct RankedOrderRow {
    IntroductionOrder order;
    NumsHistory history;
    int rank = 0;

    bool operator==(const RankedOrderRow&) const = default;
};

struct PlanResult {
    // The most effective orders: mutually equal under
    // compare_effectiveness and at least as effective as every other
    // full order, in canonical order (by artifact declaration positions).
    std::vector<OrderSummary> best_orders;
    // Full enumeration with effectiveness ranks, when one was produced.
    std::optional<std::vector<RankedOrderRow>> rank_table;

    bool operator==(const PlanResult&) const = default;
};

// Breadth-first search over partial introduction orders with dominance
// pruning. Returns all most effective full orders. Deterministic:
// frontier nodes and candidate artifacts expand in canonical order.
PlanResult search_best_orders(const ValidatedSpec& spec);

// Exhaustive oracle: enumerates all n! orders, ranks them, and returns
// the most effective class together with the full rank table.
PlanResult brute_force_best_orders(const ValidatedSpec& spec,
                                   int max_enumerate = kDefaultEnumerationGuard);

// Full enumeration as a ranked table: rank classes share identical
// descending-sorted counts and are numbered 1.. from most effective;
// rows within a class keep canonical order.
PlanResult rank_all_orders(const ValidatedSpec& spec, int max_enumerate = kDefaultEnumerationGuard);

}  // namespace refplan
