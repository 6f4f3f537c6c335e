#pragma once

// Special 2-paths, rigid pairs, clique verification, and the exact
// relative/absolute clique numbers of an (m,n)-colored mixed graph.
//
// Two vertices are rigid when no homomorphism can identify them: they are
// adjacent, or some midpoint joins them by a special 2-path.

#include <vector>

#include "mgx/core.hpp"

namespace mgx {

// The five special-2-path cases, with (u, mid, v) in the path roles.
// Returns false when either side of the path is absent.
bool is_special_two_path(const MixedGraph& g, int u, int mid, int v);

bool rigid_pair(const MixedGraph& g, int u, int v);

// Edge {u,v} present iff the pair is rigid in g.
SimpleGraph rigidity_graph(const MixedGraph& g);

struct CliqueWitness {
    bool clique = false;
    int u = -1, v = -1;  // failing pair when !clique
};

// Clique iff every non-adjacent pair is joined by a special 2-path.
CliqueWitness is_clique(const MixedGraph& g);

struct CliqueResult {
    int size = 0;
    std::vector<int> vertices;  // ascending
};

// Largest pairwise-rigid vertex set: exact branch-and-bound maximum clique
// on the rigidity graph, greedy-coloring upper bounds, lowest-index ties.
CliqueResult relative_clique_number(const MixedGraph& g);

// Largest S whose induced subgraph is itself a clique. Induced subgraphs
// suffice: restoring adjacencies or midpoints never destroys clique-ness.
CliqueResult absolute_clique_number(const MixedGraph& g);

// Exact maximum clique of a plain graph (shared kernel).
CliqueResult max_clique(const SimpleGraph& g);

MixedGraph induced_subgraph(const MixedGraph& g, const std::vector<int>& vertices);

}  // namespace mgx
