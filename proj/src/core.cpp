#include "mgx/core.hpp"

#include <algorithm>
#include <sstream>

namespace mgx {

Adjacency kind_from_index(const Signature& sig, int t) {
    if (t < 0 || t >= sig.span()) throw graph_error("adjacency kind index out of range");
    if (t < sig.edge_colors) return edge_of(t + 1);
    t -= sig.edge_colors;
    if (t < sig.arc_colors) return arc_out(t + 1);
    return arc_in(t - sig.arc_colors + 1);
}

int index_of_kind(const Signature& sig, const Adjacency& a) {
    switch (a.kind) {
        case AdjKind::Edge: return a.color - 1;
        case AdjKind::ArcOut: return sig.edge_colors + a.color - 1;
        case AdjKind::ArcIn: return sig.edge_colors + sig.arc_colors + a.color - 1;
        default: throw graph_error("absent adjacency has no kind index");
    }
}

SimpleGraph::SimpleGraph(int k) : order_(k), adj_(std::size_t(k) * k, 0) {
    if (k < 0) throw graph_error("negative vertex count");
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= order_) throw graph_error("invalid vertex " + std::to_string(v));
}

bool SimpleGraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[std::size_t(u) * order_ + v] != 0;
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw graph_error("self-loop");
    if (adjacent(u, v)) throw graph_error("duplicate edge");
    adj_[std::size_t(u) * order_ + v] = 1;
    adj_[std::size_t(v) * order_ + u] = 1;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v)
            if (adj_[std::size_t(u) * order_ + v]) out.emplace_back(u, v);
    return out;
}

int SimpleGraph::edge_count() const {
    int c = 0;
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v)
            if (adj_[std::size_t(u) * order_ + v]) ++c;
    return c;
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 0; u < order_; ++u)
        if (u != v && adj_[std::size_t(v) * order_ + u]) out.push_back(u);
    return out;
}

int SimpleGraph::degree(int v) const { return int(neighbors(v).size()); }

MixedGraph::MixedGraph(Signature sig, int k)
    : sig_(sig), order_(k), adj_(std::size_t(k) * k) {
    if (k < 0) throw graph_error("negative vertex count");
}

void MixedGraph::check_vertex(int v) const {
    if (v < 0 || v >= order_) throw graph_error("invalid vertex " + std::to_string(v));
}

void MixedGraph::check_pair(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw graph_error("self-loop");
}

Adjacency MixedGraph::adjacency(int u, int v) const {
    check_pair(u, v);
    return adj_[std::size_t(u) * order_ + v];
}

void MixedGraph::set_adjacency(int u, int v, Adjacency a) {
    check_pair(u, v);
    if (!a.absent()) {
        int limit = (a.kind == AdjKind::Edge) ? sig_.edge_colors : sig_.arc_colors;
        if (a.color < 1 || a.color > limit)
            throw graph_error("color " + std::to_string(a.color) + " out of range");
        if (!adj_[std::size_t(u) * order_ + v].absent())
            throw graph_error("duplicate adjacency on pair {" + std::to_string(u) + "," +
                              std::to_string(v) + "}");
    }
    adj_[std::size_t(u) * order_ + v] = a;
    adj_[std::size_t(v) * order_ + u] = a.flipped();
}

void MixedGraph::add_edge(int u, int v, int c) { set_adjacency(u, v, edge_of(c)); }
void MixedGraph::add_arc(int u, int v, int c) { set_adjacency(u, v, arc_out(c)); }

std::vector<std::tuple<int, int, int>> MixedGraph::edges() const {
    std::vector<std::tuple<int, int, int>> out;
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v) {
            Adjacency a = adj_[std::size_t(u) * order_ + v];
            if (a.kind == AdjKind::Edge) out.emplace_back(u, v, a.color);
        }
    return out;
}

std::vector<std::tuple<int, int, int>> MixedGraph::arcs() const {
    std::vector<std::tuple<int, int, int>> out;
    for (int u = 0; u < order_; ++u)
        for (int v = 0; v < order_; ++v) {
            if (u == v) continue;
            Adjacency a = adj_[std::size_t(u) * order_ + v];
            if (a.kind == AdjKind::ArcOut) out.emplace_back(u, v, a.color);
        }
    std::sort(out.begin(), out.end());
    return out;
}

SimpleGraph MixedGraph::underlying() const {
    SimpleGraph g(order_);
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v)
            if (!adj_[std::size_t(u) * order_ + v].absent()) g.add_edge(u, v);
    return g;
}

std::string serialize(const MixedGraph& g) {
    std::ostringstream out;
    out << "mixed " << g.signature().arc_colors << ' ' << g.signature().edge_colors << ' '
        << g.order() << '\n';
    for (auto [u, v, c] : g.edges()) out << "e " << u << ' ' << v << ' ' << c << '\n';
    for (auto [u, v, c] : g.arcs()) out << "a " << u << ' ' << v << ' ' << c << '\n';
    return out.str();
}

std::string serialize(const SimpleGraph& g) {
    std::ostringstream out;
    out << "simple " << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

namespace {

// Splits text into (line number, tokens), skipping blanks and # comments.
std::vector<std::pair<int, std::vector<std::string>>> tokenize(const std::string& text) {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        out.emplace_back(lineno, std::move(toks));
    }
    return out;
}

int parse_int(const std::string& s, int lineno) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw parse_error(lineno, "expected integer, got '" + s + "'");
    }
}

}  // namespace

MixedGraph parse_mixed(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw parse_error(1, "empty input");
    auto& [hline, header] = lines.front();
    if (header[0] != "mixed" || header.size() != 4)
        throw parse_error(hline, "expected header 'mixed <m> <n> <k>'");
    int m = parse_int(header[1], hline);
    int n = parse_int(header[2], hline);
    int k = parse_int(header[3], hline);
    MixedGraph g;
    try {
        g = MixedGraph(Signature(m, n), k);
    } catch (const graph_error& e) {
        throw parse_error(hline, e.what());
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto& [lineno, toks] = lines[i];
        if (toks.size() != 4 || (toks[0] != "e" && toks[0] != "a"))
            throw parse_error(lineno, "expected 'e <u> <v> <c>' or 'a <u> <v> <c>'");
        int u = parse_int(toks[1], lineno);
        int v = parse_int(toks[2], lineno);
        int c = parse_int(toks[3], lineno);
        try {
            if (toks[0] == "e")
                g.add_edge(u, v, c);
            else
                g.add_arc(u, v, c);
        } catch (const graph_error& e) {
            throw parse_error(lineno, e.what());
        }
    }
    return g;
}

SimpleGraph parse_simple(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw parse_error(1, "empty input");
    auto& [hline, header] = lines.front();
    if (header[0] != "simple" || header.size() != 2)
        throw parse_error(hline, "expected header 'simple <k>'");
    int k = parse_int(header[1], hline);
    SimpleGraph g;
    try {
        g = SimpleGraph(k);
    } catch (const graph_error& e) {
        throw parse_error(hline, e.what());
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto& [lineno, toks] = lines[i];
        if (toks.size() != 3 || toks[0] != "e")
            throw parse_error(lineno, "expected 'e <u> <v>'");
        int u = parse_int(toks[1], lineno);
        int v = parse_int(toks[2], lineno);
        try {
            g.add_edge(u, v);
        } catch (const graph_error& e) {
            throw parse_error(lineno, e.what());
        }
    }
    return g;
}

}  // namespace mgx
