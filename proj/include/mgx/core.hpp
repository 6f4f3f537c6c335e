#pragma once

// Data model for (m,n)-colored mixed graphs: simple underlying graph,
// arcs in m colors, edges in n colors. Vertices are dense indices 0..k-1.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace mgx {

struct graph_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : graph_error {
    int line;
    parse_error(int line_, const std::string& what_)
        : graph_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct budget_exceeded : std::runtime_error {
    unsigned long long required;
    budget_exceeded(unsigned long long required_, const std::string& what_)
        : std::runtime_error(what_), required(required_) {}
};

// (m,n): m arc colors, n edge colors. (0,0) is rejected.
struct Signature {
    int arc_colors = 0;   // m
    int edge_colors = 0;  // n

    Signature() = default;
    Signature(int m, int n) : arc_colors(m), edge_colors(n) {
        if (m < 0 || n < 0) throw graph_error("signature components must be non-negative");
        if (m == 0 && n == 0) throw graph_error("signature (0,0) is not allowed");
    }

    // 2m+n, the number of distinct adjacency kinds between an ordered pair.
    int span() const { return 2 * arc_colors + edge_colors; }

    bool operator==(const Signature&) const = default;
};

enum class AdjKind : std::uint8_t { Absent, Edge, ArcOut, ArcIn };

// Relation between an ordered vertex pair (u,v). ArcOut(c) means an arc
// u->v of arc color c; colors are 1-based, 0 is reserved for Absent.
struct Adjacency {
    AdjKind kind = AdjKind::Absent;
    int color = 0;

    bool absent() const { return kind == AdjKind::Absent; }
    bool operator==(const Adjacency&) const = default;

    // The same relation seen from the other endpoint.
    Adjacency flipped() const {
        switch (kind) {
            case AdjKind::ArcOut: return {AdjKind::ArcIn, color};
            case AdjKind::ArcIn: return {AdjKind::ArcOut, color};
            default: return *this;
        }
    }
};

inline Adjacency absent() { return {}; }
inline Adjacency edge_of(int c) { return {AdjKind::Edge, c}; }
inline Adjacency arc_out(int c) { return {AdjKind::ArcOut, c}; }
inline Adjacency arc_in(int c) { return {AdjKind::ArcIn, c}; }

// Enumerates the 2m+n non-absent kinds for a signature, in the fixed order
// Edge(1..n), ArcOut(1..m), ArcIn(1..m). Index t is in [0, span).
Adjacency kind_from_index(const Signature& sig, int t);
int index_of_kind(const Signature& sig, const Adjacency& a);

class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int k);

    int order() const { return order_; }
    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adjacent(u, v); }

    // Edges as (u,v) with u<v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;

    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    bool operator==(const SimpleGraph&) const = default;

private:
    void check_vertex(int v) const;
    int order_ = 0;
    std::vector<std::uint8_t> adj_;  // order x order
};

class MixedGraph {
public:
    MixedGraph() : sig_(1, 0) {}
    MixedGraph(Signature sig, int k);

    const Signature& signature() const { return sig_; }
    int order() const { return order_; }

    Adjacency adjacency(int u, int v) const;
    bool adjacent(int u, int v) const { return !adjacency(u, v).absent(); }

    void add_edge(int u, int v, int c);
    void add_arc(int u, int v, int c);  // directed u -> v
    void set_adjacency(int u, int v, Adjacency a);  // a oriented from u to v

    // Edges as (u,v,c) with u<v; arcs as (u,v,c) directed u->v. Both sorted.
    std::vector<std::tuple<int, int, int>> edges() const;
    std::vector<std::tuple<int, int, int>> arcs() const;

    SimpleGraph underlying() const;

    bool operator==(const MixedGraph&) const = default;

private:
    void check_vertex(int v) const;
    void check_pair(int u, int v) const;
    Signature sig_;
    int order_ = 0;
    std::vector<Adjacency> adj_;  // order x order, antisymmetric under flip
};

// Canonical line-oriented text formats.
//   mixed <m> <n> <k>   followed by `e u v c` / `a u v c` lines
//   simple <k>          followed by `e u v` lines
// `#` starts a comment, blank lines are ignored.
std::string serialize(const MixedGraph& g);
std::string serialize(const SimpleGraph& g);
MixedGraph parse_mixed(const std::string& text);
SimpleGraph parse_simple(const std::string& text);

}  // namespace mgx
