#pragma once

// Independent brute-force oracles used by the unit tests. These deliberately
// avoid the library's search kernels: graphs come from a plain odometer,
// partitions from restricted-growth strings, and validity from first
// principles, so agreement with the fast paths is meaningful.

#include <functional>
#include <vector>

#include "mgx/core.hpp"
#include "mgx/homsearch.hpp"

namespace oracles {

// Every labeled (m,n)-mixed graph on k vertices, one callback per graph.
inline void for_all_graphs(mgx::Signature sig, int k,
                           const std::function<void(const mgx::MixedGraph&)>& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) pairs.emplace_back(u, v);
    int options = sig.span() + 1;
    unsigned long long total = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) total *= options;
    for (unsigned long long index = 0; index < total; ++index) {
        mgx::MixedGraph g(sig, k);
        unsigned long long rest = index;
        for (auto& [u, v] : pairs) {
            int t = int(rest % options);
            rest /= options;
            if (t > 0) g.set_adjacency(u, v, mgx::kind_from_index(sig, t - 1));
        }
        fn(g);
    }
}

// Every set partition of {0..k-1} via restricted-growth strings.
inline void for_all_partitions(int k, const std::function<void(const mgx::Partition&)>& fn) {
    std::vector<int> part_of(k, 0);
    std::function<void(int, int)> rec = [&](int v, int used) {
        if (v == k) {
            fn(mgx::Partition{part_of, used});
            return;
        }
        for (int p = 0; p <= used; ++p) {
            part_of[v] = p;
            rec(v + 1, std::max(used, p + 1));
        }
    };
    if (k == 0)
        fn(mgx::Partition{{}, 0});
    else
        rec(0, 0);
}

// Chromatic number by exhausting every partition; no pruning, no symmetry
// assumptions beyond the restricted-growth canonical form.
inline int brute_chromatic(const mgx::MixedGraph& g) {
    int best = g.order() + 1;
    for_all_partitions(g.order(), [&](const mgx::Partition& p) {
        if (p.count < best && mgx::is_valid_partition(g, p)) best = p.count;
    });
    return best == g.order() + 1 ? g.order() : best;
}

// True iff some valid partition merges u and v.
inline bool brute_mergeable(const mgx::MixedGraph& g, int u, int v) {
    bool found = false;
    for_all_partitions(g.order(), [&](const mgx::Partition& p) {
        if (!found && p.part_of[u] == p.part_of[v] && mgx::is_valid_partition(g, p))
            found = true;
    });
    return found;
}

}  // namespace oracles
