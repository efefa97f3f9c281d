#include <doctest.h>

#include <random>

#include "cyclekit/prune.hpp"
#include "cyclekit/oracles.hpp"
#include "support/test_graphs.hpp"

using namespace cyclekit;
using namespace testsupport;

namespace {

int mask_count(const std::vector<char>& mask) {
    int n = 0;
    for (char c : mask) n += c;
    return n;
}

}  // namespace

TEST_CASE("a view seeded with every vertex is the whole graph") {
    WeightedGraph g = unit_cycle(8);
    std::vector<VertexId> seeds(8);
    std::iota(seeds.begin(), seeds.end(), 0);
    PruneConfig cfg{true, 5, 0, 0.3};
    auto view = build_view(g, seeds, cfg);
    REQUIRE(view.has_value());
    CHECK(mask_count(*view) == 8);
}

TEST_CASE("the minimum-fraction boundary keeps an exact hit") {
    WeightedGraph g = unit_path(10);
    PruneConfig cfg{true, 5, 2, 0.3};
    auto view = build_view(g, std::vector<VertexId>{0}, cfg); // ball {0,1,2}, 3 >= 0.3*10
    REQUIRE(view.has_value());
    CHECK(mask_count(*view) == 3);

    PruneConfig tighter = cfg;
    tighter.min_fraction = 0.31; // now 3 < 3.1 rejects
    CHECK(!build_view(g, std::vector<VertexId>{0}, tighter).has_value());
}

TEST_CASE("view membership equals the reference BFS ball") {
    WeightedGraph g = generate(parse_graph_spec("grid:10"));
    const int d = 10;
    const VertexId corner = d * d - 1;
    std::vector<VertexId> seeds = {corner, corner - 1, corner - d, corner - d - 1};
    PruneConfig cfg{true, 5, 3, 0.0};
    auto view = build_view(g, seeds, cfg);
    REQUIRE(view.has_value());
    auto hops = reference_bfs_hops(g, seeds);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const bool inside = hops[static_cast<size_t>(v)] >= 0 && hops[static_cast<size_t>(v)] <= 3;
        CHECK(static_cast<bool>((*view)[static_cast<size_t>(v)]) == inside);
    }
}

TEST_CASE("scope stepping uses the view for the whole interval then resets") {
    WeightedGraph g = unit_cycle(6);
    PruneConfig cfg{true, 3, 2, 0.3};
    PruneState st;
    install_view(st, g, std::vector<VertexId>{0}, cfg);
    REQUIRE(st.view.has_value());
    CHECK(prune_step(st, cfg) == SearchScope::View);
    CHECK(st.steps_in_view == 1);
    CHECK(prune_step(st, cfg) == SearchScope::View);
    CHECK(prune_step(st, cfg) == SearchScope::View);
    CHECK(prune_step(st, cfg) == SearchScope::Full);
    CHECK(!st.view.has_value());
    CHECK(st.steps_in_view == 0);
}

TEST_CASE("disabled pruning always searches the full graph") {
    PruneConfig cfg; // disabled
    PruneState st;
    WeightedGraph g = unit_cycle(6);
    install_view(st, g, std::vector<VertexId>{0}, cfg);
    CHECK(!st.view.has_value());
    for (int i = 0; i < 5; ++i) CHECK(prune_step(st, cfg) == SearchScope::Full);
}

TEST_CASE("an over-aggressive ball forces full scope until the next install") {
    WeightedGraph g = generate(parse_graph_spec("grid:10"));
    PruneConfig cfg{true, 4, 1, 0.3}; // radius-1 ball around one corner is tiny
    PruneState st;
    install_view(st, g, std::vector<VertexId>{0}, cfg);
    CHECK(!st.view.has_value());
    CHECK(prune_step(st, cfg) == SearchScope::Full);
    CHECK(prune_step(st, cfg) == SearchScope::Full);
}

TEST_CASE("never more than reset_interval consecutive view scopes") {
    WeightedGraph g = generate(parse_graph_spec("grid:8"));
    PruneConfig cfg{true, 3, 4, 0.1};
    PruneState st;
    std::mt19937_64 rng(7);
    int consecutive_views = 0;
    for (int step = 0; step < 200; ++step) {
        if (!st.view && rng() % 3 == 0)
            install_view(st, g, std::vector<VertexId>{static_cast<VertexId>(rng() % 64)}, cfg);
        if (prune_step(st, cfg) == SearchScope::View) {
            ++consecutive_views;
            CHECK(consecutive_views <= cfg.reset_interval);
        } else {
            consecutive_views = 0;
        }
    }
}
