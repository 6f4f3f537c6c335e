#include "mgx/homsearch.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mgx {

namespace {

void check_partition_shape(const MixedGraph& g, const Partition& p) {
    if (int(p.part_of.size()) != g.order())
        throw graph_error("partition does not cover the vertex set");
    std::vector<char> seen(p.count, 0);
    for (int part : p.part_of) {
        if (part < 0 || part >= p.count) throw graph_error("part index out of range");
        seen[part] = 1;
    }
    for (int q = 0; q < p.count; ++q)
        if (!seen[q]) throw graph_error("part indices are not dense");
}

}  // namespace

bool is_valid_partition(const MixedGraph& g, const Partition& p) {
    check_partition_shape(g, p);
    // rel[a][b]: the one adjacency allowed from part a to part b, once seen.
    std::vector<Adjacency> rel(std::size_t(p.count) * p.count);
    std::vector<char> set(std::size_t(p.count) * p.count, 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            Adjacency a = g.adjacency(u, v);
            if (a.absent()) continue;
            int pu = p.part_of[u], pv = p.part_of[v];
            if (pu == pv) return false;  // would induce a loop
            std::size_t idx = std::size_t(pu) * p.count + pv;
            if (set[idx]) {
                if (rel[idx] != a) return false;  // multi-edge in the quotient
            } else {
                set[idx] = 1;
                rel[idx] = a;
                set[std::size_t(pv) * p.count + pu] = 1;
                rel[std::size_t(pv) * p.count + pu] = a.flipped();
            }
        }
    return true;
}

MixedGraph quotient(const MixedGraph& g, const Partition& p) {
    if (!is_valid_partition(g, p)) throw graph_error("invalid partition");
    MixedGraph q(g.signature(), p.count);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            Adjacency a = g.adjacency(u, v);
            if (a.absent()) continue;
            int pu = p.part_of[u], pv = p.part_of[v];
            if (q.adjacency(pu, pv).absent()) q.set_adjacency(pu, pv, a);
        }
    return q;
}

bool is_homomorphism(const MixedGraph& g, const MixedGraph& h, const std::vector<int>& f) {
    if (g.signature() != h.signature()) return false;
    if (int(f.size()) != g.order()) return false;
    for (int x : f)
        if (x < 0 || x >= h.order()) return false;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            Adjacency a = g.adjacency(u, v);
            if (a.absent()) continue;
            if (f[u] == f[v]) return false;
            if (h.adjacency(f[u], f[v]) != a) return false;
        }
    return true;
}

std::optional<std::vector<int>> find_homomorphism(const MixedGraph& g, const MixedGraph& h) {
    if (g.signature() != h.signature()) throw graph_error("signature mismatch");
    int k = g.order();
    if (k == 0) return std::vector<int>{};
    if (h.order() == 0) return std::nullopt;

    SimpleGraph under = g.underlying();
    std::vector<int> order(k);
    for (int v = 0; v < k; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return under.degree(a) > under.degree(b); });

    std::vector<int> f(k, -1);
    auto backtrack = [&](auto&& self, int pos) -> bool {
        if (pos == k) return true;
        int v = order[pos];
        for (int target = 0; target < h.order(); ++target) {
            bool ok = true;
            for (int p = 0; p < pos && ok; ++p) {
                int u = order[p];
                Adjacency a = g.adjacency(v, u);
                if (a.absent()) continue;
                if (f[u] == target || h.adjacency(target, f[u]) != a) ok = false;
            }
            if (!ok) continue;
            f[v] = target;
            if (self(self, pos + 1)) return true;
            f[v] = -1;
        }
        return false;
    };
    if (backtrack(backtrack, 0)) return f;
    return std::nullopt;
}

namespace {

// Backtracking over vertices in index order; a vertex may join an existing
// part or open the next part (first-vertex symmetry breaking). Part-pair
// relations carry the agreement constraint incrementally.
struct ChromaticSearch {
    const MixedGraph& g;
    int k;
    std::vector<int> part_of, best_part_of;
    int best;
    std::vector<Adjacency> rel;
    std::vector<int> rel_count;  // contributions per part pair; 0 = unset

    explicit ChromaticSearch(const MixedGraph& g_)
        : g(g_), k(g_.order()), part_of(k, -1), best(k + 1),
          rel(std::size_t(k) * k), rel_count(std::size_t(k) * k, 0) {}

    bool place(int v, int part, std::vector<int>& touched) {
        for (int u = 0; u < v; ++u) {
            Adjacency a = g.adjacency(v, u);  // seen from v
            int q = part_of[u];
            if (q == part) {
                if (!a.absent()) return false;
                continue;
            }
            if (a.absent()) continue;
            // Canonical cell: relation oriented from the lower part index.
            std::size_t idx;
            Adjacency oriented;
            if (part < q) {
                idx = std::size_t(part) * k + q;
                oriented = a;
            } else {
                idx = std::size_t(q) * k + part;
                oriented = a.flipped();
            }
            if (rel_count[idx] == 0) rel[idx] = oriented;
            else if (rel[idx] != oriented) return false;
            ++rel_count[idx];
            touched.push_back(int(idx));
        }
        return true;
    }

    void unplace(const std::vector<int>& touched) {
        for (int idx : touched) --rel_count[idx];
    }

    void search(int v, int used) {
        if (used >= best) return;
        if (v == k) {
            best = used;
            best_part_of = part_of;
            return;
        }
        // Parts 0..used-1 are occupied; part == used opens a new one,
        // which can only help while used+1 < best.
        for (int part = 0; part <= used; ++part) {
            if (part == used && used + 1 >= best) break;
            std::vector<int> touched;
            if (place(v, part, touched)) {
                part_of[v] = part;
                search(v + 1, std::max(used, part + 1));
                part_of[v] = -1;
            }
            unplace(touched);
        }
    }
};

}  // namespace

ChromaticResult chromatic_number(const MixedGraph& g) {
    if (g.order() == 0) return {0, Partition{{}, 0}};
    ChromaticSearch s(g);
    s.search(0, 0);
    return {s.best, Partition{s.best_part_of, s.best}};
}

MixedGraph assignment_graph(const SimpleGraph& g, Signature sig, std::uint64_t index) {
    auto edges = g.edges();
    int span = sig.span();
    MixedGraph out(sig, g.order());
    // Last edge is the fastest digit.
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
        int t = int(index % span);
        index /= span;
        out.set_adjacency(it->first, it->second, kind_from_index(sig, t));
    }
    return out;
}

namespace {

std::uint64_t assignment_count(const SimpleGraph& g, Signature sig, std::uint64_t budget) {
    int span = sig.span();
    std::uint64_t total = 1;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (total > budget / std::uint64_t(span) + 1)
            throw budget_exceeded(0, "max-chromatic assignment space exceeds budget");
        total *= std::uint64_t(span);
        if (total > budget)
            throw budget_exceeded(total, "max-chromatic assignment space exceeds budget");
    }
    return total;
}

}  // namespace

MaxChromaticResult max_chromatic_serial(const SimpleGraph& g, Signature sig,
                                        std::uint64_t budget) {
    std::uint64_t total = assignment_count(g, sig, budget);
    int best = -1;
    std::uint64_t best_index = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        int value = chromatic_number(assignment_graph(g, sig, i)).value;
        if (value > best) {
            best = value;
            best_index = i;
        }
    }
    return {best, assignment_graph(g, sig, best_index), best_index};
}

MaxChromaticResult max_chromatic(const SimpleGraph& g, Signature sig, std::uint64_t budget,
                                 int jobs) {
    std::uint64_t total = assignment_count(g, sig, budget);
    int best = -1;
    std::uint64_t best_index = 0;
#ifdef _OPENMP
    const long long n = (long long)total;
#pragma omp parallel num_threads(jobs > 0 ? jobs : omp_get_max_threads())
    {
        int local_best = -1;
        std::uint64_t local_index = 0;
#pragma omp for schedule(dynamic, 64) nowait
        for (long long i = 0; i < n; ++i) {
            int value = chromatic_number(assignment_graph(g, sig, std::uint64_t(i))).value;
            if (value > local_best ||
                (value == local_best && std::uint64_t(i) < local_index)) {
                local_best = value;
                local_index = std::uint64_t(i);
            }
        }
#pragma omp critical
        {
            if (local_best > best || (local_best == best && local_index < best_index)) {
                best = local_best;
                best_index = local_index;
            }
        }
    }
#else
    (void)jobs;
    return max_chromatic_serial(g, sig, budget);
#endif
    return {best, assignment_graph(g, sig, best_index), best_index};
}

}  // namespace mgx
