#include "mgx/signedclique.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mgx {

namespace {

void validate_formula(const NaeFormula& f) {
    if (f.variables < 0) throw graph_error("negative variable count");
    for (auto& cl : f.clauses) {
        if (cl[0] == cl[1] || cl[1] == cl[2] || cl[0] == cl[2])
            throw graph_error("clause variables must be distinct");
        for (int x : cl)
            if (x < 1 || x > f.variables) throw graph_error("clause variable out of range");
    }
}

}  // namespace

NaeFormula parse_nae(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    NaeFormula f;
    bool have_header = false;
    int declared_clauses = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks.size() != 4 || toks[0] != "p" || toks[1] != "nae")
                throw parse_error(lineno, "expected header 'p nae <nvars> <nclauses>'");
            f.variables = std::stoi(toks[2]);
            declared_clauses = std::stoi(toks[3]);
            have_header = true;
            continue;
        }
        if (toks.size() != 4 || toks[3] != "0")
            throw parse_error(lineno, "expected clause '<a> <b> <c> 0'");
        std::array<int, 3> cl{std::stoi(toks[0]), std::stoi(toks[1]), std::stoi(toks[2])};
        std::sort(cl.begin(), cl.end());
        f.clauses.push_back(cl);
    }
    if (!have_header) throw parse_error(1, "missing 'p nae' header");
    if (int(f.clauses.size()) != declared_clauses)
        throw parse_error(lineno, "clause count does not match header");
    try {
        validate_formula(f);
    } catch (const graph_error& e) {
        throw parse_error(lineno, e.what());
    }
    return f;
}

std::string serialize_nae(const NaeFormula& f) {
    std::ostringstream out;
    out << "p nae " << f.variables << ' ' << f.clauses.size() << '\n';
    for (auto& cl : f.clauses) out << cl[0] << ' ' << cl[1] << ' ' << cl[2] << " 0\n";
    return out.str();
}

bool nae_satisfies(const NaeFormula& f, const std::vector<bool>& assignment) {
    if (int(assignment.size()) != f.variables) return false;
    for (auto& cl : f.clauses) {
        bool any_true = false, any_false = false;
        for (int x : cl) (assignment[x - 1] ? any_true : any_false) = true;
        if (!any_true || !any_false) return false;
    }
    return true;
}

std::optional<std::vector<bool>> nae_solve(const NaeFormula& f, std::uint64_t budget) {
    validate_formula(f);
    if (f.variables >= 63 || (std::uint64_t(1) << f.variables) > budget)
        throw budget_exceeded(0, "NAE assignment space exceeds budget");
    std::uint64_t total = std::uint64_t(1) << f.variables;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<bool> a(f.variables);
        for (int i = 0; i < f.variables; ++i) a[i] = (bits >> i) & 1;
        if (nae_satisfies(f, a)) return a;
    }
    return std::nullopt;
}

EdgeIndex::EdgeIndex(const SimpleGraph& g)
    : order_(g.order()), ids_(std::size_t(g.order()) * g.order(), -1), edges_(g.edges()) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        ids_[std::size_t(u) * order_ + v] = int(e);
        ids_[std::size_t(v) * order_ + u] = int(e);
    }
}

int EdgeIndex::id(int u, int v) const { return ids_[std::size_t(u) * order_ + v]; }

std::vector<FourCycle> four_cycles_through_pair(const SimpleGraph& g, const EdgeIndex& idx,
                                                int u, int v) {
    std::vector<FourCycle> out;
    auto add = [&](int a, int b, int c, int d) {
        // cycle a-b-c-d-a; all four edges must exist
        FourCycle cyc{{a, b, c, d},
                      {idx.id(a, b), idx.id(b, c), idx.id(c, d), idx.id(d, a)}};
        out.push_back(cyc);
    };
    if (!g.adjacent(u, v)) {
        // u and v sit opposite: pick two distinct common neighbors.
        std::vector<int> common;
        for (int x = 0; x < g.order(); ++x)
            if (x != u && x != v && g.adjacent(u, x) && g.adjacent(v, x)) common.push_back(x);
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j)
                add(u, common[i], v, common[j]);
    } else {
        // consecutive: u-v-x-y-u, the (x,y) pair is unique per cycle
        for (int x : g.neighbors(v)) {
            if (x == u) continue;
            for (int y : g.neighbors(u)) {
                if (y == v || y == x || !g.adjacent(x, y)) continue;
                add(u, v, x, y);
            }
        }
        // opposite cycles (not using the edge uv) exist for adjacent pairs too
        std::vector<int> common;
        for (int x = 0; x < g.order(); ++x)
            if (x != u && x != v && g.adjacent(u, x) && g.adjacent(v, x)) common.push_back(x);
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j)
                add(u, common[i], v, common[j]);
    }
    return out;
}

bool is_unbalanced_4cycle(const SimpleGraph& g, const EdgeIndex& idx,
                          const EdgeColoring& coloring, const std::array<int, 4>& cyc) {
    int ones = 0;
    for (int i = 0; i < 4; ++i) {
        int a = cyc[i], b = cyc[(i + 1) % 4];
        if (!g.adjacent(a, b)) throw graph_error("not a 4-cycle");
        std::int8_t c = coloring.at(idx.id(a, b));
        if (c != 1 && c != 2) throw graph_error("partial coloring on the cycle");
        if (c == 1) ++ones;
    }
    return ones % 2 == 1;
}

SignedCheck is_signed_clique(const SimpleGraph& g, const EdgeColoring& coloring,
                             bool all_pairs) {
    EdgeIndex idx(g);
    if (int(coloring.size()) != idx.count()) throw graph_error("coloring size mismatch");
    for (std::int8_t c : coloring)
        if (c != 1 && c != 2) throw graph_error("partial coloring");
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v) && !all_pairs) continue;
            bool found = false;
            for (auto& cyc : four_cycles_through_pair(g, idx, u, v))
                if (is_unbalanced_4cycle(g, idx, coloring, cyc.vertices)) {
                    found = true;
                    break;
                }
            if (!found) return {false, u, v};
        }
    return {true};
}

namespace {

// Backtracking search for a 2-edge-coloring under which every required pair
// lies on an unbalanced 4-cycle. Prunes as soon as some pair has all of its
// 4-cycles fully colored and balanced.
struct ColoringSearch {
    struct Cycle {
        std::array<int, 4> edge_ids;
        int pair_id;
    };
    struct PairState {
        int total = 0;
        int satisfied = 0;  // complete, unbalanced
        int dead = 0;       // complete, balanced
    };

    int edge_count;
    std::vector<Cycle> cycles;
    std::vector<std::vector<int>> cycles_of_edge;  // edge -> cycle ids
    std::vector<PairState> pairs;
    std::vector<int> cyc_colored, cyc_ones;
    EdgeColoring colors;
    std::vector<int> edge_order;

    ColoringSearch(const SimpleGraph& g, const EdgeIndex& idx,
                   const std::vector<std::pair<int, int>>& required_pairs)
        : edge_count(idx.count()), cycles_of_edge(idx.count()), colors(idx.count(), 0) {
        pairs.resize(required_pairs.size());
        for (std::size_t p = 0; p < required_pairs.size(); ++p) {
            auto [u, v] = required_pairs[p];
            for (auto& cyc : four_cycles_through_pair(g, idx, u, v)) {
                cycles.push_back({cyc.edge_ids, int(p)});
                ++pairs[p].total;
            }
        }
        for (std::size_t c = 0; c < cycles.size(); ++c)
            for (int e : cycles[c].edge_ids) cycles_of_edge[e].push_back(int(c));
        // Dedup: an edge can appear in a cycle list once only (4 distinct edges
        // per cycle), but an edge participates in many cycles; keep as-is.
        cyc_colored.assign(cycles.size(), 0);
        cyc_ones.assign(cycles.size(), 0);

        // Color constrained edges first, grouped so cycles complete early.
        std::vector<char> queued(edge_count, 0);
        for (auto& cyc : cycles)
            for (int e : cyc.edge_ids)
                if (!queued[e]) {
                    queued[e] = 1;
                    edge_order.push_back(e);
                }
        for (int e = 0; e < edge_count; ++e)
            if (!queued[e]) edge_order.push_back(e);
    }

    bool any_pair_impossible() const {
        for (auto& p : pairs)
            if (p.total == 0) return true;
        return false;
    }

    // Applies color to edge e; returns false on a dead required pair.
    bool assign(int e, std::int8_t color) {
        colors[e] = color;
        bool ok = true;
        for (int c : cycles_of_edge[e]) {
            ++cyc_colored[c];
            if (color == 1) ++cyc_ones[c];
            if (cyc_colored[c] == 4) {
                PairState& p = pairs[cycles[c].pair_id];
                if (cyc_ones[c] % 2 == 1) ++p.satisfied;
                else {
                    ++p.dead;
                    if (p.dead == p.total && p.satisfied == 0) ok = false;
                }
            }
        }
        return ok;
    }

    void unassign(int e) {
        std::int8_t color = colors[e];
        colors[e] = 0;
        for (int c : cycles_of_edge[e]) {
            if (cyc_colored[c] == 4) {
                PairState& p = pairs[cycles[c].pair_id];
                if (cyc_ones[c] % 2 == 1) --p.satisfied;
                else --p.dead;
            }
            --cyc_colored[c];
            if (color == 1) --cyc_ones[c];
        }
    }

    bool search(int pos) {
        if (pos == edge_count) {
            for (auto& p : pairs)
                if (p.satisfied == 0) return false;
            return true;
        }
        int e = edge_order[pos];
        // Global color swap is a symmetry: pin the first edge.
        int last = (pos == 0) ? 1 : 2;
        for (int color = 1; color <= last; ++color) {
            bool ok = assign(e, std::int8_t(color));
            if (ok && search(pos + 1)) return true;
            unassign(e);
        }
        return false;
    }

    std::optional<EdgeColoring> run() {
        if (any_pair_impossible()) return std::nullopt;
        if (edge_count == 0) {
            if (!pairs.empty()) return std::nullopt;
            return EdgeColoring{};
        }
        if (search(0)) return colors;
        return std::nullopt;
    }
};

std::vector<std::pair<int, int>> required_pairs_for(const SimpleGraph& g, bool all_pairs) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (all_pairs || !g.adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

}  // namespace

std::optional<EdgeColoring> signed_clique_colorable(const SimpleGraph& g, int max_edges,
                                                    bool all_pairs) {
    EdgeIndex idx(g);
    if (idx.count() > max_edges)
        throw budget_exceeded(std::uint64_t(idx.count()), "edge count exceeds search budget");
    ColoringSearch search(g, idx, required_pairs_for(g, all_pairs));
    return search.run();
}

bool ReductionArtifact::is_representative(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(representative_pairs.begin(), representative_pairs.end(),
                              std::make_pair(u, v));
}

ReductionArtifact build_hf(const NaeFormula& f) {
    validate_formula(f);
    ReductionArtifact art;
    art.formula = f;
    int n = f.variables;
    int m = int(f.clauses.size());

    // Clause memberships per variable, clause indices ascending.
    std::vector<std::vector<int>> occurs(n);
    for (int j = 0; j < m; ++j)
        for (int x : f.clauses[j]) occurs[x - 1].push_back(j);

    int count = 2 + 2 * n;
    for (int i = 0; i < n; ++i) count += int(occurs[i].size());
    count += m;

    SimpleGraph g(count);
    std::vector<std::string> roles(count);
    roles[0] = "r1";
    roles[1] = "r2";
    art.u_vertex.resize(n);
    art.uprime_vertex.resize(n);
    int next = 2;
    for (int i = 0; i < n; ++i) {
        art.u_vertex[i] = next;
        roles[next] = "u_" + std::to_string(i + 1);
        ++next;
        art.uprime_vertex[i] = next;
        roles[next] = "u'_" + std::to_string(i + 1);
        ++next;
    }
    for (int i = 0; i < n; ++i)
        for (int j : occurs[i]) {
            art.v_vertex[{i, j}] = next;
            roles[next] = "v_" + std::to_string(i + 1) + "," + std::to_string(j + 1);
            ++next;
        }
    art.w_vertex.resize(m);
    for (int j = 0; j < m; ++j) {
        art.w_vertex[j] = next;
        roles[next] = "w_" + std::to_string(j + 1);
        ++next;
    }

    for (int i = 0; i < n; ++i) {
        g.add_edge(art.r1, art.u_vertex[i]);
        g.add_edge(art.r2, art.u_vertex[i]);
        g.add_edge(art.r1, art.uprime_vertex[i]);
        g.add_edge(art.r2, art.uprime_vertex[i]);
    }
    for (auto& [key, vtx] : art.v_vertex) {
        g.add_edge(art.r1, vtx);
        g.add_edge(art.r2, vtx);
    }
    for (int j = 0; j < m; ++j)
        for (int x : f.clauses[j]) g.add_edge(art.w_vertex[j], art.v_vertex.at({x - 1, j}));

    auto pair_of = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (int i = 0; i < n; ++i) {
        art.representative_pairs.push_back(pair_of(art.u_vertex[i], art.uprime_vertex[i]));
        for (int j : occurs[i])
            art.representative_pairs.push_back(
                pair_of(art.uprime_vertex[i], art.v_vertex.at({i, j})));
    }
    for (int j = 0; j < m; ++j) {
        auto& cl = f.clauses[j];
        int a = art.v_vertex.at({cl[0] - 1, j});
        int b = art.v_vertex.at({cl[1] - 1, j});
        int c = art.v_vertex.at({cl[2] - 1, j});
        art.representative_pairs.push_back(pair_of(a, b));
        art.representative_pairs.push_back(pair_of(a, c));
        art.representative_pairs.push_back(pair_of(b, c));
    }
    std::sort(art.representative_pairs.begin(), art.representative_pairs.end());

    art.hf = std::move(g);
    art.hf_roles = std::move(roles);
    return art;
}

ReductionArtifact build_gf(const NaeFormula& f) {
    ReductionArtifact art = build_hf(f);
    int h = art.hf.order();

    std::vector<std::pair<int, int>> nonrep;
    for (int u = 0; u < h; ++u)
        for (int v = u + 1; v < h; ++v)
            if (!art.is_representative(u, v)) nonrep.emplace_back(u, v);

    int count = h + 2 * h + int(nonrep.size());
    SimpleGraph g(count);
    std::vector<std::string> roles(count);
    for (auto [u, v] : art.hf.edges()) g.add_edge(u, v);
    for (int u = 0; u < h; ++u) roles[u] = art.hf_roles[u];

    art.a_vertex.resize(h);
    art.b_vertex.resize(h);
    int next = h;
    for (int u = 0; u < h; ++u) {
        art.a_vertex[u] = next;
        roles[next] = "a_" + art.hf_roles[u];
        g.add_edge(u, next);
        ++next;
        art.b_vertex[u] = next;
        roles[next] = "b_" + art.hf_roles[u];
        g.add_edge(u, next);
        ++next;
    }
    for (auto [u, v] : nonrep) {
        art.c_vertices.emplace_back(u, v, next);
        roles[next] = "c_" + art.hf_roles[u] + "_" + art.hf_roles[v];
        g.add_edge(u, next);
        g.add_edge(v, next);
        ++next;
    }
    // All newly added vertices form a clique.
    for (int x = h; x < count; ++x)
        for (int y = x + 1; y < count; ++y) g.add_edge(x, y);

    art.has_gf = true;
    art.gf = std::move(g);
    art.gf_roles = std::move(roles);
    return art;
}

EdgeColoring good_coloring_from_assignment(const ReductionArtifact& art,
                                           const std::vector<bool>& assignment) {
    if (!art.has_gf) throw graph_error("artifact has no G_F part");
    const NaeFormula& f = art.formula;
    if (!nae_satisfies(f, assignment))
        throw graph_error("assignment does not NAE-satisfy the formula");

    EdgeIndex idx(art.gf);
    EdgeColoring colors(idx.count(), 2);  // fixed pattern default

    auto set = [&](int u, int v, int color) { colors[idx.id(u, v)] = std::int8_t(color); };
    auto agree_color = [](bool agree) { return agree ? 1 : 2; };  // r1-side is always 1

    // H_F edges: encode the assignment through r1/r2 agreement.
    for (int i = 0; i < f.variables; ++i) {
        bool value = assignment[i];
        set(art.r1, art.u_vertex[i], 1);
        set(art.r2, art.u_vertex[i], agree_color(value));
        set(art.r1, art.uprime_vertex[i], 1);
        set(art.r2, art.uprime_vertex[i], agree_color(!value));
    }
    for (auto& [key, vtx] : art.v_vertex) {
        bool value = assignment[key.first];
        set(art.r1, vtx, 1);
        set(art.r2, vtx, agree_color(value));
    }

    // w_j edges: exhaustive local choice over the 8 options so each of the
    // clause's three representative pairs lands on an unbalanced 4-cycle.
    for (int j = 0; j < int(f.clauses.size()); ++j) {
        auto& cl = f.clauses[j];
        int w = art.w_vertex[j];
        std::array<int, 3> vv{art.v_vertex.at({cl[0] - 1, j}), art.v_vertex.at({cl[1] - 1, j}),
                              art.v_vertex.at({cl[2] - 1, j})};
        bool done = false;
        for (int opt = 0; opt < 8 && !done; ++opt) {
            for (int t = 0; t < 3; ++t) set(w, vv[t], ((opt >> t) & 1) ? 1 : 2);
            bool all_ok = true;
            for (int a = 0; a < 3 && all_ok; ++a)
                for (int b = a + 1; b < 3 && all_ok; ++b) {
                    bool pair_ok = false;
                    std::array<std::array<int, 4>, 3> cycs{{{vv[a], art.r1, vv[b], art.r2},
                                                            {vv[a], w, vv[b], art.r1},
                                                            {vv[a], w, vv[b], art.r2}}};
                    for (auto& cyc : cycs)
                        if (is_unbalanced_4cycle(art.gf, idx, colors, cyc)) pair_ok = true;
                    if (!pair_ok) all_ok = false;
                }
            done = all_ok;
        }
        if (!done) throw graph_error("no local w-edge completion found");
    }

    // Fixed pattern on E(G_F) \ E(H_F): b-edges and the c->v side get 1.
    int h = art.hf.order();
    for (int u = 0; u < h; ++u) set(u, art.b_vertex[u], 1);
    for (auto [u, v, c] : art.c_vertices) set(v, c, 1);
    return colors;
}

namespace {

std::vector<std::pair<int, int>> hf_edge_colors_to_pairs(const ReductionArtifact& art) {
    return art.representative_pairs;
}

}  // namespace

std::optional<EdgeColoring> good_coloring_hf(const ReductionArtifact& art, int max_edges) {
    EdgeIndex idx(art.hf);
    if (idx.count() > max_edges)
        throw budget_exceeded(std::uint64_t(idx.count()), "H_F edge count exceeds budget");
    ColoringSearch search(art.hf, idx, hf_edge_colors_to_pairs(art));
    return search.run();
}

bool good_coloring_exists_hf(const ReductionArtifact& art, int max_edges) {
    return good_coloring_hf(art, max_edges).has_value();
}

namespace {

struct ScanContext {
    const ReductionArtifact& art;
    EdgeIndex idx;
    std::vector<std::vector<std::array<int, 4>>> pair_cycles;  // per rep pair

    explicit ScanContext(const ReductionArtifact& art_) : art(art_), idx(art_.hf) {
        for (auto [u, v] : art.representative_pairs) {
            std::vector<std::array<int, 4>> cycs;
            for (auto& c : four_cycles_through_pair(art.hf, idx, u, v))
                cycs.push_back(c.vertices);
            pair_cycles.push_back(std::move(cycs));
        }
    }

    bool good(const EdgeColoring& colors) const {
        for (auto& cycs : pair_cycles) {
            bool sat = false;
            for (auto& cyc : cycs)
                if (is_unbalanced_4cycle(art.hf, idx, colors, cyc)) {
                    sat = true;
                    break;
                }
            if (!sat) return false;
        }
        return true;
    }

    bool agree(const EdgeColoring& colors, int z) const {
        return colors[idx.id(art.r1, z)] == colors[idx.id(art.r2, z)];
    }

    bool claim1(const EdgeColoring& colors) const {
        for (int i = 0; i < art.formula.variables; ++i) {
            bool ua = agree(colors, art.u_vertex[i]);
            for (auto& [key, vtx] : art.v_vertex)
                if (key.first == i && agree(colors, vtx) != ua) return false;
        }
        return true;
    }

    bool claim2(const EdgeColoring& colors) const {
        for (int j = 0; j < int(art.formula.clauses.size()); ++j) {
            auto& cl = art.formula.clauses[j];
            bool a0 = agree(colors, art.v_vertex.at({cl[0] - 1, j}));
            bool a1 = agree(colors, art.v_vertex.at({cl[1] - 1, j}));
            bool a2 = agree(colors, art.v_vertex.at({cl[2] - 1, j}));
            if (a0 == a1 && a1 == a2) return false;
        }
        return true;
    }
};

EdgeColoring colors_from_bits(std::uint64_t bits, int edge_count) {
    // Edge 0 pinned to color 1 (global color swap symmetry); bit e-1 drives
    // edge e. Good-ness and agreement are swap-invariant.
    EdgeColoring colors(edge_count);
    colors[0] = 1;
    for (int e = 1; e < edge_count; ++e) colors[e] = ((bits >> (e - 1)) & 1) ? 2 : 1;
    return colors;
}

}  // namespace

GoodColoringScan scan_good_colorings_serial(const ReductionArtifact& art, int max_edges) {
    ScanContext ctx(art);
    int e = ctx.idx.count();
    if (e > max_edges)
        throw budget_exceeded(std::uint64_t(e), "H_F edge count exceeds scan budget");
    GoodColoringScan out;
    if (e == 0) {
        out.good_count = art.representative_pairs.empty() ? 1 : 0;
        return out;
    }
    std::uint64_t total = std::uint64_t(1) << (e - 1);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        EdgeColoring colors = colors_from_bits(bits, e);
        if (!ctx.good(colors)) continue;
        out.good_count += 2;  // the color-swapped twin is good too
        if (!ctx.claim1(colors)) out.claim1_holds = false;
        if (!ctx.claim2(colors)) out.claim2_holds = false;
    }
    return out;
}

GoodColoringScan scan_good_colorings(const ReductionArtifact& art, int max_edges, int jobs) {
#ifndef _OPENMP
    (void)jobs;
    return scan_good_colorings_serial(art, max_edges);
#else
    ScanContext ctx(art);
    int e = ctx.idx.count();
    if (e > max_edges)
        throw budget_exceeded(std::uint64_t(e), "H_F edge count exceeds scan budget");
    GoodColoringScan out;
    if (e == 0) {
        out.good_count = art.representative_pairs.empty() ? 1 : 0;
        return out;
    }
    const long long total = 1LL << (e - 1);
    unsigned long long good = 0;
    int c1 = 1, c2 = 1;
#pragma omp parallel for schedule(static) reduction(+ : good) reduction(min : c1, c2) \
    num_threads(jobs > 0 ? jobs : omp_get_max_threads())
    for (long long bits = 0; bits < total; ++bits) {
        EdgeColoring colors = colors_from_bits(std::uint64_t(bits), e);
        if (!ctx.good(colors)) continue;
        good += 2;
        if (!ctx.claim1(colors)) c1 = 0;
        if (!ctx.claim2(colors)) c2 = 0;
    }
    out.good_count = good;
    out.claim1_holds = c1 != 0;
    out.claim2_holds = c2 != 0;
    return out;
#endif
}

}  // namespace mgx
