#pragma once

// Signed-clique machinery: unbalanced 4-cycles of 2-edge-colored graphs,
// the signed-clique decision, monotone NAE-3SAT, and the F -> H_F -> G_F
// reduction with constructive witnesses.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgx/core.hpp"

namespace mgx {

// Monotone 3-CNF: clauses are unordered triples of distinct 1-based
// variables, no negations.
struct NaeFormula {
    int variables = 0;
    std::vector<std::array<int, 3>> clauses;  // each sorted ascending
};

// Format: `p nae <nvars> <nclauses>`, then one clause per line as three
// positive integers terminated by 0. `#` comments and blank lines allowed.
NaeFormula parse_nae(const std::string& text);
std::string serialize_nae(const NaeFormula& f);

bool nae_satisfies(const NaeFormula& f, const std::vector<bool>& assignment);

// 2^n enumeration in counter order (bit i-1 = variable i); first satisfying
// assignment, or nullopt. Throws budget_exceeded when 2^n > budget.
std::optional<std::vector<bool>> nae_solve(const NaeFormula& f,
                                           std::uint64_t budget = std::uint64_t(1) << 24);

// Color per canonical edge index (SimpleGraph::edges order): 1 or 2,
// 0 = uncolored.
using EdgeColoring = std::vector<std::int8_t>;

struct FourCycle {
    std::array<int, 4> vertices;  // in cyclic order
    std::array<int, 4> edge_ids;
};

// Edge-id lookup for a fixed graph.
class EdgeIndex {
public:
    explicit EdgeIndex(const SimpleGraph& g);
    int id(int u, int v) const;  // -1 when non-adjacent
    int count() const { return int(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    int order_;
    std::vector<int> ids_;
    std::vector<std::pair<int, int>> edges_;
};

// All 4-cycles containing both u and v (as opposite or consecutive
// vertices), each reported once.
std::vector<FourCycle> four_cycles_through_pair(const SimpleGraph& g, const EdgeIndex& idx,
                                                int u, int v);

// Odd number of color-1 edges among the four. Throws when the four
// consecutive pairs are not all edges or the coloring is partial on them.
bool is_unbalanced_4cycle(const SimpleGraph& g, const EdgeIndex& idx,
                          const EdgeColoring& coloring, const std::array<int, 4>& cyc);

struct SignedCheck {
    bool ok = false;
    int u = -1, v = -1;  // witness pair on failure
};

// Default: every non-adjacent pair must lie on an unbalanced 4-cycle.
// all_pairs = true checks adjacent pairs too (exploratory strict mode).
SignedCheck is_signed_clique(const SimpleGraph& g, const EdgeColoring& coloring,
                             bool all_pairs = false);

// Backtracking search for a 2-edge-coloring passing is_signed_clique.
// Throws budget_exceeded when the graph has more than max_edges edges.
std::optional<EdgeColoring> signed_clique_colorable(const SimpleGraph& g, int max_edges = 24,
                                                    bool all_pairs = false);

struct ReductionArtifact {
    NaeFormula formula;

    SimpleGraph hf;
    std::vector<std::string> hf_roles;
    std::vector<std::pair<int, int>> representative_pairs;  // u<v, sorted

    // Vertex tables into hf (0-based variable/clause indices).
    int r1 = 0, r2 = 1;
    std::vector<int> u_vertex, uprime_vertex;          // per variable
    std::map<std::pair<int, int>, int> v_vertex;       // (variable, clause) -> vertex
    std::vector<int> w_vertex;                         // per clause

    // G_F part, present when built via build_gf.
    bool has_gf = false;
    SimpleGraph gf;
    std::vector<std::string> gf_roles;
    std::vector<int> a_vertex, b_vertex;               // per hf vertex
    std::vector<std::tuple<int, int, int>> c_vertices; // (u, v, c_{u,v}) with u<v

    bool is_representative(int u, int v) const;
};

// Step 1: r1, r2; u_i, u'_i and the per-clause v_{i,j} all joined to both
// r1 and r2; w_j joined to its clause's three v vertices.
ReductionArtifact build_hf(const NaeFormula& f);

// Step 2 on top of Step 1: pendant pair a_u, b_u per hf vertex, a vertex
// c_{u,v} per non-representative hf pair, all new vertices made a clique.
ReductionArtifact build_gf(const NaeFormula& f);

// Coloring of E(G_F) encoding a NAE-satisfying assignment: r1/r2 agree on
// u_i and on each v_{i,.} iff the variable is true, disagree on u'_i;
// w-edges completed by local exhaustive choice; the fixed pattern on the
// new edges (u b_u and c_{u,v} v colored 1, everything else 2).
// Throws graph_error when the assignment does not NAE-satisfy f.
EdgeColoring good_coloring_from_assignment(const ReductionArtifact& gf_artifact,
                                           const std::vector<bool>& assignment);

// Pruned backtracking: is there a 2-edge-coloring of H_F putting every
// representative pair on an unbalanced 4-cycle? Throws budget_exceeded when
// |E(H_F)| > max_edges.
std::optional<EdgeColoring> good_coloring_hf(const ReductionArtifact& art, int max_edges = 40);
bool good_coloring_exists_hf(const ReductionArtifact& art, int max_edges = 40);

// Exhaustive scan over all 2-edge-colorings of H_F, counting good ones and
// verifying, in each, that r1/r2 agreement on u_i propagates to every
// v_{i,j} and that no clause's three v vertices all agree or all disagree.
struct GoodColoringScan {
    unsigned long long good_count = 0;
    bool claim1_holds = true;  // agreement propagation
    bool claim2_holds = true;  // per-clause not-all-equal
};
GoodColoringScan scan_good_colorings(const ReductionArtifact& art, int max_edges = 26,
                                     int jobs = 0);
GoodColoringScan scan_good_colorings_serial(const ReductionArtifact& art, int max_edges = 26);

}  // namespace mgx
