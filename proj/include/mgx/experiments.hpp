#pragma once

// Uniform random (m,n)-mixed graphs, Monte-Carlo clique-fraction
// estimation, exact enumeration of all labeled graphs at tiny orders, and
// the per-pair union-bound cross-check.

#include <cstdint>
#include <string>

#include "mgx/core.hpp"
#include "mgx/rng.hpp"

namespace mgx {

// Each of the C(k,2) unordered pairs independently takes one of the
// 2m+n+1 options (absent, n edge colors, m arc colors in two directions),
// uniformly. Pairs are drawn in lexicographic order.
MixedGraph random_graph(Signature sig, int k, SplitMix64& rng);

struct EnumerationResult {
    unsigned long long total = 0;       // (2m+n+1)^C(k,2)
    unsigned long long cliques = 0;
};

inline constexpr std::uint64_t kDefaultEnumBudget = 100'000'000ULL;

// Iterates every labeled (m,n)-mixed graph on k vertices.
EnumerationResult enumerate_exact(Signature sig, int k,
                                  std::uint64_t budget = kDefaultEnumBudget, int jobs = 0);
EnumerationResult enumerate_exact_serial(Signature sig, int k,
                                         std::uint64_t budget = kDefaultEnumBudget);

struct ExperimentReport {
    Signature sig;
    int k = 0;
    std::uint64_t trials = 0;
    std::uint64_t cliques = 0;
    double fraction = 0.0;
    std::uint64_t seed = 0;
    std::string rng_id;
};

// Deterministic given (seed, parameters); trial t draws from its own
// (seed, t) stream so the result is independent of scheduling.
ExperimentReport clique_fraction(Signature sig, int k, std::uint64_t trials,
                                 std::uint64_t seed, int jobs = 0);
ExperimentReport clique_fraction_serial(Signature sig, int k, std::uint64_t trials,
                                        std::uint64_t seed);

// For a fixed non-adjacent pair and a fixed third vertex, the number of
// adjacency-type combinations creating no special 2-path: 6m+3n+1, checked
// by exhausting the (2m+n+1)^2 grid.
int nonspecial_grid_count(Signature sig);

struct UnionBoundResult {
    unsigned long long exact_noncliques = 0;
    unsigned long long bound = 0;  // C(k,2) * (6m+3n+1)^(k-2) * (2m+n+1)^C(k-2,2)
};

UnionBoundResult union_bound_check(Signature sig, int k,
                                   std::uint64_t budget = kDefaultEnumBudget);

// Single-line record with stable field order.
std::string format_report(const ExperimentReport& r);

}  // namespace mgx
