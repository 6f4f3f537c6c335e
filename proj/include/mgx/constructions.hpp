#pragma once

// Generators for the extremal and comparison families: the outerplanar
// clique H on 3(2m+n)+1 vertices, the planar clique H* on
// 3(2m+n)^2+(2m+n)+1 vertices, the join A+B with its universal vertex,
// iterated joins, paths and cycles.

#include <string>
#include <vector>

#include "mgx/core.hpp"

namespace mgx {

struct LabeledMixed {
    MixedGraph graph;
    std::vector<std::string> roles;  // one label per vertex
};

struct LabeledSimple {
    SimpleGraph graph;
    std::vector<std::string> roles;
};

// Hub x plus 2m+n groups of three vertices; group i hangs off x by edge
// color i (i <= n), out-arcs (n < i <= n+m) or in-arcs of the matching arc
// color. Intra-group 2-paths are made special: edge colors 1,2 when n >= 2,
// otherwise a directed 2-path of arc color 1. Rejects (0,1).
LabeledMixed outerplanar_clique(Signature sig);

// New hub x joined to every vertex of 2m+n copies of the outerplanar
// clique, copy i by the same color rule as above. Rejects (0,1).
LabeledMixed planar_clique(Signature sig);

// Disjoint A and B plus a universal vertex; the universal vertex has index
// |A|+|B| and role "infinity".
LabeledSimple join(const SimpleGraph& a, const SimpleGraph& b);

// H_1 = H, H_k = join(H, H_{k-1}). Requires k >= 1.
SimpleGraph iterated_join(const SimpleGraph& h, int k);

SimpleGraph path(int edge_count);   // edge_count+1 vertices
SimpleGraph cycle(int length);      // requires length >= 3

}  // namespace mgx
