#include "mgx/constructions.hpp"

namespace mgx {

namespace {

// Joins `v` to the hub `x` according to the group index i (1-based over the
// 2m+n groups): edge color i for i <= n, out-arc for the next m groups,
// in-arc for the last m.
void attach_to_hub(MixedGraph& g, int x, int v, int group, const Signature& sig) {
    int n = sig.edge_colors, m = sig.arc_colors;
    if (group <= n)
        g.add_edge(x, v, group);
    else if (group <= n + m)
        g.add_arc(x, v, group - n);
    else
        g.add_arc(v, x, group - n - m);
}

void check_supported(const Signature& sig) {
    if (sig.arc_colors == 0 && sig.edge_colors == 1)
        throw graph_error("unsupported signature (0,1)");
}

}  // namespace

LabeledMixed outerplanar_clique(Signature sig) {
    check_supported(sig);
    int s = sig.span();
    MixedGraph g(sig, 3 * s + 1);
    std::vector<std::string> roles(g.order());
    int x = 0;
    roles[x] = "x";
    auto vid = [&](int i, int j) { return 1 + (i - 1) * 3 + (j - 1); };
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= 3; ++j) {
            int v = vid(i, j);
            roles[v] = "v_" + std::to_string(i) + "," + std::to_string(j);
            attach_to_hub(g, x, v, i, sig);
        }
    // Intra-group special 2-paths.
    for (int i = 1; i <= s; ++i) {
        if (sig.edge_colors >= 2) {
            g.add_edge(vid(i, 1), vid(i, 2), 1);
            g.add_edge(vid(i, 2), vid(i, 3), 2);
        } else {  // n <= 1, so m >= 1: directed 2-path
            g.add_arc(vid(i, 1), vid(i, 2), 1);
            g.add_arc(vid(i, 2), vid(i, 3), 1);
        }
    }
    return {std::move(g), std::move(roles)};
}

LabeledMixed planar_clique(Signature sig) {
    check_supported(sig);
    int s = sig.span();
    LabeledMixed base = outerplanar_clique(sig);
    int copy_order = base.graph.order();
    MixedGraph g(sig, s * copy_order + 1);
    std::vector<std::string> roles(g.order());
    int x = 0;
    roles[x] = "x";
    for (int i = 1; i <= s; ++i) {
        int offset = 1 + (i - 1) * copy_order;
        for (int a = 0; a < copy_order; ++a) {
            roles[offset + a] = "H" + std::to_string(i) + "." + base.roles[a];
            attach_to_hub(g, x, offset + a, i, sig);
            for (int b = a + 1; b < copy_order; ++b) {
                Adjacency rel = base.graph.adjacency(a, b);
                if (!rel.absent()) g.set_adjacency(offset + a, offset + b, rel);
            }
        }
    }
    return {std::move(g), std::move(roles)};
}

LabeledSimple join(const SimpleGraph& a, const SimpleGraph& b) {
    int na = a.order(), nb = b.order();
    SimpleGraph g(na + nb + 1);
    std::vector<std::string> roles(g.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
    int inf = na + nb;
    for (int v = 0; v < inf; ++v) g.add_edge(inf, v);
    for (int v = 0; v < na; ++v) roles[v] = "A." + std::to_string(v);
    for (int v = 0; v < nb; ++v) roles[na + v] = "B." + std::to_string(v);
    roles[inf] = "infinity";
    return {std::move(g), std::move(roles)};
}

SimpleGraph iterated_join(const SimpleGraph& h, int k) {
    if (k < 1) throw graph_error("iterated join needs k >= 1");
    SimpleGraph acc = h;
    for (int i = 2; i <= k; ++i) acc = join(h, acc).graph;
    return acc;
}

SimpleGraph path(int edge_count) {
    if (edge_count < 0) throw graph_error("negative path length");
    SimpleGraph g(edge_count + 1);
    for (int v = 0; v < edge_count; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph cycle(int length) {
    if (length < 3) throw graph_error("cycle length must be at least 3");
    SimpleGraph g(length);
    for (int v = 0; v < length; ++v) g.add_edge(v, (v + 1) % length);
    return g;
}

}  // namespace mgx
