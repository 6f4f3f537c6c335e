#include "mgx/rigidity.hpp"

#include <algorithm>

namespace mgx {

bool is_special_two_path(const MixedGraph& g, int u, int mid, int v) {
    if (u == mid || mid == v || u == v) throw graph_error("2-path vertices must be distinct");
    Adjacency a = g.adjacency(u, mid);   // seen from u
    Adjacency b = g.adjacency(mid, v);   // seen from mid
    if (a.absent() || b.absent()) return false;

    bool a_edge = a.kind == AdjKind::Edge;
    bool b_edge = b.kind == AdjKind::Edge;
    if (a_edge && b_edge) return a.color != b.color;                    // (i)
    if (a_edge != b_edge) return true;                                  // (v)
    // Both arcs. a.kind is the direction of u--mid seen from u,
    // b.kind the direction of mid--v seen from mid.
    if (a.kind == AdjKind::ArcOut && b.kind == AdjKind::ArcOut) return true;  // u->mid->v
    if (a.kind == AdjKind::ArcIn && b.kind == AdjKind::ArcIn) return true;    // v->mid->u
    if (a.kind == AdjKind::ArcOut && b.kind == AdjKind::ArcIn)
        return a.color != b.color;  // (iii) u->mid, v->mid
    return a.color != b.color;      // (iv) mid->u, mid->v
}

bool rigid_pair(const MixedGraph& g, int u, int v) {
    if (u == v) throw graph_error("rigid_pair needs distinct vertices");
    if (g.adjacent(u, v)) return true;
    for (int mid = 0; mid < g.order(); ++mid) {
        if (mid == u || mid == v) continue;
        if (is_special_two_path(g, u, mid, v)) return true;
    }
    return false;
}

SimpleGraph rigidity_graph(const MixedGraph& g) {
    SimpleGraph r(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (rigid_pair(g, u, v)) r.add_edge(u, v);
    return r;
}

CliqueWitness is_clique(const MixedGraph& g) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!rigid_pair(g, u, v)) return {false, u, v};
    return {true};
}

namespace {

// Tomita-style branch and bound. Candidates kept in ascending vertex order
// so the reported maximum clique is deterministic.
struct MaxCliqueSearch {
    const SimpleGraph& g;
    std::vector<int> best, current;

    explicit MaxCliqueSearch(const SimpleGraph& g_) : g(g_) {}

    // Greedy coloring bound: number of color classes among candidates.
    int color_bound(const std::vector<int>& cand) const {
        std::vector<int> color(cand.size(), -1);
        int classes = 0;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            std::vector<char> used(classes, 0);
            for (std::size_t j = 0; j < i; ++j)
                if (g.adjacent(cand[i], cand[j])) used[color[j]] = 1;
            int c = 0;
            while (c < classes && used[c]) ++c;
            if (c == classes) ++classes;
            color[i] = c;
        }
        return classes;
    }

    void expand(const std::vector<int>& cand) {
        if (current.size() > best.size()) best = current;
        if (cand.empty()) return;
        if (current.size() + cand.size() <= best.size()) return;
        if (int(current.size()) + color_bound(cand) <= int(best.size())) return;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (current.size() + (cand.size() - i) <= best.size()) return;
            int v = cand[i];
            std::vector<int> next;
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (g.adjacent(v, cand[j])) next.push_back(cand[j]);
            current.push_back(v);
            expand(next);
            current.pop_back();
        }
    }
};

}  // namespace

CliqueResult max_clique(const SimpleGraph& g) {
    MaxCliqueSearch search(g);
    std::vector<int> all(g.order());
    for (int v = 0; v < g.order(); ++v) all[v] = v;
    search.expand(all);
    return {int(search.best.size()), search.best};
}

CliqueResult relative_clique_number(const MixedGraph& g) {
    return max_clique(rigidity_graph(g));
}

MixedGraph induced_subgraph(const MixedGraph& g, const std::vector<int>& vertices) {
    MixedGraph h(g.signature(), int(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            Adjacency a = g.adjacency(vertices[i], vertices[j]);
            if (!a.absent()) h.set_adjacency(int(i), int(j), a);
        }
    return h;
}

namespace {

// Enumerates subsets that are cliques of the rigidity graph (a necessary
// condition: rigidity only gains midpoints in the full graph) and keeps the
// largest one whose induced subgraph verifies as a clique.
struct AbsoluteSearch {
    const MixedGraph& g;
    const SimpleGraph rigid;
    std::vector<int> best, current;

    explicit AbsoluteSearch(const MixedGraph& g_) : g(g_), rigid(rigidity_graph(g_)) {}

    void expand(const std::vector<int>& cand) {
        if (current.size() > best.size() &&
            is_clique(induced_subgraph(g, current)).clique)
            best = current;
        if (current.size() + cand.size() <= best.size()) return;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (current.size() + (cand.size() - i) <= best.size()) return;
            int v = cand[i];
            std::vector<int> next;
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (rigid.adjacent(v, cand[j])) next.push_back(cand[j]);
            current.push_back(v);
            expand(next);
            current.pop_back();
        }
    }
};

}  // namespace

CliqueResult absolute_clique_number(const MixedGraph& g) {
    AbsoluteSearch search(g);
    std::vector<int> all(g.order());
    for (int v = 0; v < g.order(); ++v) all[v] = v;
    search.expand(all);
    return {int(search.best.size()), search.best};
}

}  // namespace mgx
