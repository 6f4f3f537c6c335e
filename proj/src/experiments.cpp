#include "mgx/experiments.hpp"

#include <cstdio>
#include <sstream>

#include "mgx/rigidity.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mgx {

namespace {

unsigned long long checked_pow(unsigned long long base, int exp, std::uint64_t budget) {
    unsigned long long out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > budget / base) throw budget_exceeded(0, "enumeration exceeds budget");
        out *= base;
    }
    if (out > budget) throw budget_exceeded(out, "enumeration exceeds budget");
    return out;
}

// Decodes a base-(2m+n+1) odometer index into a graph; pairs in
// lexicographic order, last pair fastest.
MixedGraph graph_from_index(Signature sig, int k, unsigned long long index) {
    int options = sig.span() + 1;
    MixedGraph g(sig, k);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) pairs.emplace_back(u, v);
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        int t = int(index % options);
        index /= options;
        if (t > 0) g.set_adjacency(it->first, it->second, kind_from_index(sig, t - 1));
    }
    return g;
}

}  // namespace

MixedGraph random_graph(Signature sig, int k, SplitMix64& rng) {
    int options = sig.span() + 1;
    MixedGraph g(sig, k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) {
            int t = int(rng.bounded(std::uint64_t(options)));
            if (t > 0) g.set_adjacency(u, v, kind_from_index(sig, t - 1));
        }
    return g;
}

EnumerationResult enumerate_exact_serial(Signature sig, int k, std::uint64_t budget) {
    int pairs = k * (k - 1) / 2;
    unsigned long long total = checked_pow(sig.span() + 1, pairs, budget);
    EnumerationResult out{total, 0};
    for (unsigned long long i = 0; i < total; ++i)
        if (is_clique(graph_from_index(sig, k, i)).clique) ++out.cliques;
    return out;
}

EnumerationResult enumerate_exact(Signature sig, int k, std::uint64_t budget, int jobs) {
#ifndef _OPENMP
    (void)jobs;
    return enumerate_exact_serial(sig, k, budget);
#else
    int pairs = k * (k - 1) / 2;
    unsigned long long total = checked_pow(sig.span() + 1, pairs, budget);
    unsigned long long cliques = 0;
    const long long n = (long long)total;
#pragma omp parallel for schedule(static) reduction(+ : cliques) \
    num_threads(jobs > 0 ? jobs : omp_get_max_threads())
    for (long long i = 0; i < n; ++i)
        if (is_clique(graph_from_index(sig, k, (unsigned long long)i)).clique) ++cliques;
    return {total, cliques};
#endif
}

ExperimentReport clique_fraction_serial(Signature sig, int k, std::uint64_t trials,
                                        std::uint64_t seed) {
    std::uint64_t cliques = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng = trial_stream(seed, t);
        if (is_clique(random_graph(sig, k, rng)).clique) ++cliques;
    }
    double fraction = trials == 0 ? 0.0 : double(cliques) / double(trials);
    return {sig, k, trials, cliques, fraction, seed, kRngId};
}

ExperimentReport clique_fraction(Signature sig, int k, std::uint64_t trials,
                                 std::uint64_t seed, int jobs) {
#ifndef _OPENMP
    (void)jobs;
    return clique_fraction_serial(sig, k, trials, seed);
#else
    std::uint64_t cliques = 0;
    const long long n = (long long)trials;
#pragma omp parallel for schedule(static) reduction(+ : cliques) \
    num_threads(jobs > 0 ? jobs : omp_get_max_threads())
    for (long long t = 0; t < n; ++t) {
        SplitMix64 rng = trial_stream(seed, std::uint64_t(t));
        if (is_clique(random_graph(sig, k, rng)).clique) ++cliques;
    }
    double fraction = trials == 0 ? 0.0 : double(cliques) / double(trials);
    return {sig, k, trials, cliques, fraction, seed, kRngId};
#endif
}

int nonspecial_grid_count(Signature sig) {
    int options = sig.span() + 1;
    int count = 0;
    for (int t1 = 0; t1 < options; ++t1)
        for (int t2 = 0; t2 < options; ++t2) {
            MixedGraph g(sig, 3);  // u=0, w=1, v=2
            if (t1 > 0) g.set_adjacency(0, 1, kind_from_index(sig, t1 - 1));
            if (t2 > 0) g.set_adjacency(1, 2, kind_from_index(sig, t2 - 1));
            bool special = t1 > 0 && t2 > 0 && is_special_two_path(g, 0, 1, 2);
            if (!special) ++count;
        }
    return count;
}

UnionBoundResult union_bound_check(Signature sig, int k, std::uint64_t budget) {
    if (k < 2) throw graph_error("union bound needs k >= 2");
    EnumerationResult e = enumerate_exact(sig, k, budget);
    unsigned long long per_pair = (unsigned long long)(6 * sig.arc_colors +
                                                       3 * sig.edge_colors + 1);
    unsigned long long bound = (unsigned long long)(k) * (k - 1) / 2;
    for (int i = 0; i < k - 2; ++i) bound *= per_pair;
    int rem_pairs = (k - 2) * (k - 3) / 2;
    for (int i = 0; i < rem_pairs; ++i) bound *= (unsigned long long)(sig.span() + 1);
    return {e.total - e.cliques, bound};
}

std::string format_report(const ExperimentReport& r) {
    std::ostringstream out;
    out << "m=" << r.sig.arc_colors << " n=" << r.sig.edge_colors << " k=" << r.k
        << " trials=" << r.trials << " cliques=" << r.cliques;
    char frac[32];
    std::snprintf(frac, sizeof frac, "%.6f", r.fraction);
    out << " fraction=" << frac << " seed=" << r.seed << " rng=" << r.rng_id;
    return out.str();
}

}  // namespace mgx
