#pragma once

// Homomorphism existence, quotient/partition validity, the exact
// (m,n)-chromatic number, and the max-over-colorings chromatic number of a
// plain undirected graph.
//
// Chromatic number is computed over quotients: a minimal homomorphic image
// can be taken to be the image itself, which is a valid quotient of g.

#include <cstdint>
#include <optional>
#include <vector>

#include "mgx/core.hpp"

namespace mgx {

struct Partition {
    std::vector<int> part_of;  // vertex -> part, parts dense 0..count-1
    int count = 0;
};

// Malformed partitions (wrong size, out-of-range or non-dense parts) throw.
// Returns true iff no part holds an adjacent pair and, for every ordered
// pair of parts, all adjacencies between them agree in kind/color/direction.
bool is_valid_partition(const MixedGraph& g, const Partition& p);

// Requires a valid partition. One vertex per part; the map vertex -> part
// is a homomorphism g -> quotient.
MixedGraph quotient(const MixedGraph& g, const Partition& p);

// Backtracking search, most-constrained (highest degree) vertices first.
// Signatures must match. Returns a vertex map of g into h, or nullopt.
std::optional<std::vector<int>> find_homomorphism(const MixedGraph& g, const MixedGraph& h);

// Independent check of the homomorphism conditions for a candidate map.
bool is_homomorphism(const MixedGraph& g, const MixedGraph& h, const std::vector<int>& f);

struct ChromaticResult {
    int value = 0;
    Partition witness;
};

// Minimum part count over valid partitions, with a witness. Part indices
// appear in first-vertex order (symmetry breaking).
ChromaticResult chromatic_number(const MixedGraph& g);

struct MaxChromaticResult {
    int value = 0;
    MixedGraph argmax;           // the extremal assignment, as a mixed graph
    std::uint64_t argmax_index;  // its odometer index (lexicographically least)
};

inline constexpr std::uint64_t kDefaultChromaticBudget = std::uint64_t(1) << 24;

// Maximum chromatic number over all assignments of one of the 2m+n
// adjacency kinds to each edge of G. Enumeration is in odometer order over
// the canonical edge list (last edge fastest). Throws budget_exceeded when
// span^|E| would exceed `budget` chromatic subcalls.
MaxChromaticResult max_chromatic(const SimpleGraph& g, Signature sig,
                                 std::uint64_t budget = kDefaultChromaticBudget,
                                 int jobs = 0);  // 0 = all hardware threads

// Serial reference for the OpenMP kernel above; identical results.
MaxChromaticResult max_chromatic_serial(const SimpleGraph& g, Signature sig,
                                        std::uint64_t budget = kDefaultChromaticBudget);

// Decodes odometer index -> mixed graph over the given underlying graph.
MixedGraph assignment_graph(const SimpleGraph& g, Signature sig, std::uint64_t index);

}  // namespace mgx
