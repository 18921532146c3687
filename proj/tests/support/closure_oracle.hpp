#pragma once

#include <set>
#include <vector>

#include "refplan/model.hpp"

// Independent requirement-set oracle: builds the whole direct-dependency
// adjacency matrix and closes it Warshall-style, instead of the per-node
// worklist walk the library uses.

namespace refplan::testing {

inline std::vector<std::set<int>> req_p_oracle(const ValidatedSpec& spec) {
    const int n = spec.phenomenon_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int p = 0; p < n; ++p) {
        for (const int s : spec.typed_of(p)) {
            reach[p][s] = true;
        }
        for (const int t : spec.changed_by_of(p)) {
            for (const int e : spec.caused_by_of(t)) {
                reach[p][e] = true;
            }
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            if (reach[i][k]) {
                for (int j = 0; j < n; ++j) {
                    if (reach[k][j]) {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    std::vector<std::set<int>> out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (reach[i][j]) {
                out[i].insert(j);
            }
        }
    }
    return out;
}

inline std::set<int> req_a_oracle(const ValidatedSpec& spec,
                                  const std::vector<std::set<int>>& req_p, int artifact) {
    std::set<int> out;
    for (const int p : spec.appears_of(artifact)) {
        out.insert(p);
        out.insert(req_p[p].begin(), req_p[p].end());
    }
    return out;
}

}  // namespace refplan::testing
