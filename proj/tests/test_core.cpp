#include <doctest.h>

#include <set>

#include "mgx/core.hpp"

using namespace mgx;

TEST_CASE("signature validation and span") {
    CHECK_THROWS_AS(Signature(0, 0), graph_error);
    CHECK_THROWS_AS(Signature(-1, 2), graph_error);
    CHECK(Signature(1, 0).span() == 2);
    CHECK(Signature(0, 2).span() == 2);
    CHECK(Signature(1, 1).span() == 3);
    CHECK(Signature(2, 0).span() == 4);
}

TEST_CASE("new graph starts with no adjacencies") {
    MixedGraph empty(Signature(1, 0), 0);
    CHECK(empty.order() == 0);
    MixedGraph g(Signature(0, 2), 3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            if (u != v) CHECK(g.adjacency(u, v).absent());
}

TEST_CASE("edges and arcs are visible from both endpoints") {
    MixedGraph g(Signature(1, 2), 3);
    g.add_edge(0, 1, 2);
    CHECK(g.adjacency(0, 1) == edge_of(2));
    CHECK(g.adjacency(1, 0) == edge_of(2));
    g.add_arc(1, 2, 1);
    CHECK(g.adjacency(1, 2) == arc_out(1));
    CHECK(g.adjacency(2, 1) == arc_in(1));
}

TEST_CASE("construction rejects invalid mutations") {
    MixedGraph g(Signature(1, 1), 3);
    CHECK_THROWS_AS(g.add_edge(0, 0, 1), graph_error);          // self-loop
    CHECK_THROWS_AS(g.add_arc(0, 1, 2), graph_error);           // color out of range
    CHECK_THROWS_AS(g.add_edge(0, 1, 0), graph_error);          // colors are 1-based
    g.add_arc(0, 1, 1);
    CHECK_THROWS_AS(g.add_edge(0, 1, 1), graph_error);          // pair already occupied
    CHECK_THROWS_AS(g.add_arc(1, 0, 1), graph_error);
    CHECK_THROWS_AS(g.adjacency(0, 3), graph_error);            // invalid vertex
}

TEST_CASE("kind enumeration covers exactly 2m+n distinct kinds") {
    for (auto [m, n] : {std::pair{1, 0}, {0, 2}, {1, 1}, {2, 0}, {1, 2}, {0, 4}, {2, 1}}) {
        Signature sig(m, n);
        std::set<std::pair<int, int>> seen;
        for (int t = 0; t < sig.span(); ++t) {
            Adjacency a = kind_from_index(sig, t);
            CHECK(!a.absent());
            CHECK(index_of_kind(sig, a) == t);
            seen.insert({int(a.kind), a.color});
        }
        CHECK(int(seen.size()) == sig.span());
    }
}

TEST_CASE("adjacency flip is an involution matching arc direction") {
    CHECK(arc_out(1).flipped() == arc_in(1));
    CHECK(arc_in(2).flipped() == arc_out(2));
    CHECK(edge_of(1).flipped() == edge_of(1));
    CHECK(absent().flipped() == absent());
}

TEST_CASE("parse mixed graph") {
    MixedGraph g = parse_mixed("mixed 1 0 2\na 0 1 1\n");
    CHECK(g.signature() == Signature(1, 0));
    CHECK(g.order() == 2);
    CHECK(g.adjacency(0, 1) == arc_out(1));
}

TEST_CASE("serialization is canonical and round-trips") {
    MixedGraph g(Signature(2, 2), 4);
    g.add_arc(2, 1, 2);
    g.add_edge(0, 3, 1);
    g.add_edge(0, 1, 2);
    g.add_arc(3, 2, 1);
    std::string text = serialize(g);
    // Edge lines precede arc lines, each block sorted.
    CHECK(text == "mixed 2 2 4\ne 0 1 2\ne 0 3 1\na 2 1 2\na 3 2 1\n");
    CHECK(parse_mixed(text) == g);
    CHECK(serialize(parse_mixed(text)) == text);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_mixed("mixed 0 2 2\ne 0 1 3\n"), graph_error);
    try {
        parse_mixed("mixed 1 0 2\n# fine\nbogus line\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(parse_mixed("mixed 0 0 2\n"), graph_error);
    CHECK_THROWS_AS(parse_simple("mixed 1 0 2\n"), parse_error);
}

TEST_CASE("simple graph format") {
    SimpleGraph g = parse_simple("simple 3\n# comment\ne 0 1\n\ne 1 2\n");
    CHECK(g.order() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK(!g.adjacent(0, 2));
    CHECK(serialize(g) == "simple 3\ne 0 1\ne 1 2\n");
    CHECK(parse_simple(serialize(g)) == g);
}

TEST_CASE("underlying graph has one edge per non-absent pair") {
    MixedGraph g(Signature(1, 1), 4);
    g.add_arc(0, 1, 1);
    g.add_edge(2, 3, 1);
    SimpleGraph u = g.underlying();
    CHECK(u.order() == 4);
    CHECK(u.edge_count() == 2);
    CHECK(u.adjacent(0, 1));
    CHECK(u.adjacent(2, 3));
    CHECK(!u.adjacent(1, 2));
    CHECK(MixedGraph(Signature(1, 0), 3).underlying().edge_count() == 0);
}

TEST_CASE("every pair carries at most one adjacency") {
    MixedGraph g(Signature(1, 1), 5);
    g.add_edge(0, 1, 1);
    g.add_arc(1, 2, 1);
    g.add_arc(3, 1, 1);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            CHECK(g.adjacency(u, v) == g.adjacency(v, u).flipped());
    CHECK(g.edges().size() + g.arcs().size() == 3);
}
