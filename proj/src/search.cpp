#include "refplan/search.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <list>
#include <map>
#include <numeric>
#include <utility>

namespace refplan {

namespace {

// Core of the dominance test on descending-sorted counts. Walking both
// sequences in parallel is the iterative form of stripping one shared
// maximum per round: position i holds the i-th largest remaining count.
bool certainly_better_sorted(const std::vector<int>& better_desc, int better_rest,
                             const std::vector<int>& worse_desc) {
    for (std::size_t i = 0;; ++i) {
        if (i == better_desc.size() || i == worse_desc.size()) {
            return false;  // not sure: one history ran out of steps
        }
        if (std::max(better_desc[i], better_rest) < worse_desc[i]) {
            return true;
        }
        if (better_desc[i] != worse_desc[i]) {
            return false;  // not sure
        }
    }
}

std::vector<int> sorted_descending(std::vector<int> values) {
    std::sort(values.begin(), values.end(), std::greater<int>());
    return values;
}

// Frontier entry: the node plus a cached descending sort of its counts
// (the dominance test runs O(frontier^2) times per generation) and a
// stable identity that survives container mutation.
struct FrontierNode {
    SearchNode node;
    std::vector<int> nums_desc;
    std::uint64_t id = 0;
};

IntroductionOrder order_from_indices(const ValidatedSpec& spec, const std::vector<int>& indices) {
    IntroductionOrder order;
    order.steps.reserve(indices.size());
    for (const int a : indices) {
        order.steps.push_back(spec.artifact(a).id);
    }
    return order;
}

// Keep only the compare_effectiveness-minimal class, in canonical order.
std::vector<OrderSummary> minimal_class(const ValidatedSpec& spec,
                                        std::vector<std::pair<std::vector<int>, NumsHistory>> rows) {
    std::sort(rows.begin(), rows.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
    const NumsHistory* best = nullptr;
    for (const auto& [indices, history] : rows) {
        if (best == nullptr ||
            compare_effectiveness(history, *best) == EffectivenessOrdering::MoreEffective) {
            best = &history;
        }
    }
    std::vector<OrderSummary> out;
    for (const auto& [indices, history] : rows) {
        if (best != nullptr &&
            compare_effectiveness(history, *best) == EffectivenessOrdering::Equal) {
            out.push_back({order_from_indices(spec, indices), history});
        }
    }
    return out;
}

}  // namespace

bool certainly_better(const SearchNode& maybe_better, const SearchNode& maybe_worse) {
    return certainly_better_sorted(sorted_descending(maybe_better.nums), maybe_better.rest,
                                   sorted_descending(maybe_worse.nums));
}

PlanResult search_best_orders(const ValidatedSpec& spec) {
    const int n_artif = spec.artifact_count();
    if (n_artif == 0) {
        throw NoArtifactsError();
    }
    const RequirementClosure closure = RequirementClosure::compute(spec);
    const OrderEvaluator evaluator(spec, closure);
    const int n_phen = evaluator.total_phenomena();

    std::list<FrontierNode> frontier;
    std::uint64_t next_id = 0;
    frontier.push_back({SearchNode{{}, {}, {}, 0, n_phen}, {}, next_id++});

    while (true) {
        std::size_t depth = std::numeric_limits<std::size_t>::max();
        for (const FrontierNode& f : frontier) {
            depth = std::min(depth, f.node.artifact_steps.size());
        }
        if (depth == static_cast<std::size_t>(n_artif)) {
            break;  // every surviving node is a full order
        }

        // Snapshot this generation; a node pruned by a sibling's child
        // before its own expansion must be skipped.
        std::vector<std::uint64_t> generation;
        for (const FrontierNode& f : frontier) {
            if (f.node.artifact_steps.size() == depth) {
                generation.push_back(f.id);
            }
        }

        for (const std::uint64_t id : generation) {
            const auto it = std::find_if(frontier.begin(), frontier.end(),
                                         [id](const FrontierNode& f) { return f.id == id; });
            if (it == frontier.end()) {
                continue;
            }
            const SearchNode parent = std::move(it->node);
            frontier.erase(it);

            for (int a = 0; a < n_artif; ++a) {
                if (std::find(parent.artifact_steps.begin(), parent.artifact_steps.end(), a) !=
                    parent.artifact_steps.end()) {
                    continue;
                }
                FrontierNode child;
                child.node.artifact_steps = parent.artifact_steps;
                child.node.artifact_steps.push_back(a);
                child.node.introduced = parent.introduced;
                const int added = evaluator.introduce(child.node.introduced, a);
                child.node.nums = parent.nums;
                child.node.nums.push_back(added);
                child.node.max_num = std::max(parent.max_num, added);
                child.node.rest = parent.rest - added;
                child.nums_desc = sorted_descending(child.node.nums);
                child.id = next_id++;

                const bool dominated = std::any_of(
                    frontier.begin(), frontier.end(), [&](const FrontierNode& f) {
                        return certainly_better_sorted(f.nums_desc, f.node.rest, child.nums_desc);
                    });
                if (dominated) {
                    continue;
                }
                for (auto jt = frontier.begin(); jt != frontier.end();) {
                    if (certainly_better_sorted(child.nums_desc, child.node.rest, jt->nums_desc)) {
                        jt = frontier.erase(jt);
                    } else {
                        ++jt;
                    }
                }
                frontier.push_back(std::move(child));
            }
        }
    }

    // The dominance test is conservative, so incomparable non-optimal
    // orders can survive to full length; keep the minimal class only.
    std::vector<std::pair<std::vector<int>, NumsHistory>> rows;
    rows.reserve(frontier.size());
    for (FrontierNode& f : frontier) {
        rows.emplace_back(std::move(f.node.artifact_steps), NumsHistory(std::move(f.node.nums)));
    }
    return PlanResult{minimal_class(spec, std::move(rows)), std::nullopt};
}

namespace {

PlanResult enumerate_all_orders(const ValidatedSpec& spec, int max_enumerate) {
    const int n_artif = spec.artifact_count();
    if (n_artif == 0) {
        throw NoArtifactsError();
    }
    if (n_artif > max_enumerate) {
        throw EnumerationGuardError(n_artif, max_enumerate);
    }
    const RequirementClosure closure = RequirementClosure::compute(spec);
    const OrderEvaluator evaluator(spec, closure);

    std::vector<int> permutation(n_artif);
    std::iota(permutation.begin(), permutation.end(), 0);

    // next_permutation from the sorted start enumerates canonically.
    std::vector<std::pair<std::vector<int>, NumsHistory>> rows;
    do {
        rows.emplace_back(permutation, NumsHistory(evaluator.nums_for(permutation)));
    } while (std::next_permutation(permutation.begin(), permutation.end()));

    // Rank classes by identical snums, 1 = most effective. Full orders
    // share a length, so plain lexicographic order of snums agrees with
    // the padded comparison.
    std::map<std::vector<int>, int> rank_of;
    for (const auto& [indices, history] : rows) {
        rank_of.emplace(history.snums(), 0);
    }
    int next_rank = 1;
    for (auto& [snums, rank] : rank_of) {
        rank = next_rank++;
    }

    PlanResult result;
    std::vector<RankedOrderRow> table;
    table.reserve(rows.size());
    for (const auto& [indices, history] : rows) {
        table.push_back({order_from_indices(spec, indices), history, rank_of.at(history.snums())});
    }
    std::stable_sort(table.begin(), table.end(),
                     [](const RankedOrderRow& lhs, const RankedOrderRow& rhs) {
                         return lhs.rank < rhs.rank;
                     });
    for (const RankedOrderRow& row : table) {
        if (row.rank == 1) {
            result.best_orders.push_back({row.order, row.history});
        }
    }
    result.rank_table = std::move(table);
    return result;
}

}  // namespace

PlanResult brute_force_best_orders(const ValidatedSpec& spec, int max_enumerate) {
    return enumerate_all_orders(spec, max_enumerate);
}

PlanResult rank_all_orders(const ValidatedSpec& spec, int max_enumerate) {
    return enumerate_all_orders(spec, max_enumerate);
}

}  // namespace refplan
