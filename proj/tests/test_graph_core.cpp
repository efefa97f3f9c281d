#include <doctest.h>

#include <sstream>

#include "cyclekit/graph.hpp"
#include "cyclekit/io.hpp"
#include "support/test_graphs.hpp"

using namespace cyclekit;
using namespace testsupport;

TEST_CASE("edge list loads the smallest cyclic graph") {
    std::istringstream in("0 1 1.0\n1 2 1.0\n2 0 1.0");
    WeightedGraph g = load_graph(in, GraphFormat::EdgeList);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.label(0) == "0");
    CHECK(g.find_edge(2, 0).has_value());
}

TEST_CASE("edge list supports comments and arbitrary labels") {
    std::istringstream in("# header comment\nalpha beta 1.5 # trailing\nbeta gamma 2.5\n");
    WeightedGraph g = load_graph(in, GraphFormat::EdgeList);
    CHECK(g.vertex_count() == 3);
    CHECK(g.label(0) == "alpha");
    CHECK(g.label(2) == "gamma");
    CHECK(g.weight(*g.find_edge(0, 1)) == 1.5);
}

TEST_CASE("edge list rejects self-loops with line context") {
    std::istringstream in("0 1 1.0\n3 3 2.0\n");
    CHECK_THROWS_WITH_AS(load_graph(in, GraphFormat::EdgeList),
                         doctest::Contains("line 2"), ParseError);
}

TEST_CASE("duplicate unordered pairs are rejected") {
    std::istringstream in("0 1 1.0\n1 0 2.0\n");
    CHECK_THROWS_AS(load_graph(in, GraphFormat::EdgeList), ValidationError);
}

TEST_CASE("nonpositive weights are rejected") {
    CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 1, 0.0}}), ValidationError);
    CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 1, -1.0}}), ValidationError);
}

TEST_CASE("malformed lines report their position") {
    std::istringstream in("0 1\n");
    CHECK_THROWS_AS(load_graph(in, GraphFormat::EdgeList), ParseError);
    std::istringstream bad_weight("0 1 abc\n");
    CHECK_THROWS_AS(load_graph(bad_weight, GraphFormat::EdgeList), ParseError);
}

TEST_CASE("canonicalization is rotation and orientation invariant") {
    WeightedGraph tri = unit_triangle();
    auto a = canonicalize_cycle(std::vector<VertexId>{2, 0, 1}, tri);
    auto b = canonicalize_cycle(std::vector<VertexId>{0, 2, 1}, tri);
    CHECK(a.vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(b.vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(a.length == 3.0);
    CHECK(b.length == 3.0);
}

TEST_CASE("canonical length sums the given weights") {
    WeightedGraph sq =
        WeightedGraph::from_edges(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {3, 0, 4}});
    auto rec = canonicalize_cycle(std::vector<VertexId>{2, 3, 0, 1}, sq);
    CHECK(rec.length == 10.0);
    CHECK(rec.vertices == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("canonicalization rejects bad sequences") {
    WeightedGraph tri = unit_triangle();
    CHECK_THROWS_AS(canonicalize_cycle(std::vector<VertexId>{0, 1}, tri), ValidationError);
    CHECK_THROWS_AS(canonicalize_cycle(std::vector<VertexId>{0, 1, 1}, tri), ValidationError);
    WeightedGraph path = unit_path(4);
    CHECK_THROWS_AS(canonicalize_cycle(std::vector<VertexId>{0, 1, 3}, path), ValidationError);
}

TEST_CASE("all rotations and reflections canonicalize identically") {
    WeightedGraph g = random_er(10, 0.5, 99);
    auto cycles = enumerate_cycles(g);
    REQUIRE(!cycles.empty());
    for (const auto& c : cycles) {
        std::vector<VertexId> seq = c.vertices;
        for (size_t r = 0; r < seq.size(); ++r) {
            std::rotate(seq.begin(), seq.begin() + 1, seq.end());
            CHECK(canonicalize_cycle(seq, g).vertices == c.vertices);
            std::vector<VertexId> rev(seq.rbegin(), seq.rend());
            CHECK(canonicalize_cycle(rev, g).vertices == c.vertices);
        }
    }
}

TEST_CASE("edge list round trip is exact") {
    WeightedGraph g = random_er(12, 0.4, 5, 0.5, 2.0);
    std::ostringstream out;
    save_graph(out, g, GraphFormat::EdgeList);
    std::istringstream in(out.str());
    WeightedGraph back = load_graph(in, GraphFormat::EdgeList);
    CHECK(back == g);
    std::ostringstream out2;
    save_graph(out2, back, GraphFormat::EdgeList);
    CHECK(out.str() == out2.str());
}

TEST_CASE("json round trip is exact, isolated vertices included") {
    WeightedGraph g =
        WeightedGraph::from_edges(4, {{0, 2, 0.1}, {2, 3, 1e-17}}); // awkward doubles on purpose
    std::ostringstream out;
    save_graph(out, g, GraphFormat::Json);
    std::istringstream in(out.str());
    WeightedGraph back = load_graph(in, GraphFormat::Json);
    CHECK(back == g);
    CHECK(back.weight(1) == 1e-17);
    CHECK(back.degree(1) == 0);
}

TEST_CASE("edge list round trip covers isolated and out-of-order vertices") {
    WeightedGraph g = WeightedGraph::from_edges(5, {{3, 1, 2.0}, {0, 3, 1.0}});
    std::ostringstream out;
    save_graph(out, g, GraphFormat::EdgeList);
    std::istringstream in(out.str());
    CHECK(load_graph(in, GraphFormat::EdgeList) == g);
}
