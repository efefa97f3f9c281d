#include "cyclekit/oracles.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace cyclekit {

namespace {

// Dijkstra from `source` with one edge masked; stops once `target` (if >= 0)
// is finalized. Lazy binary heap, ties broken by vertex id.
std::vector<double> masked_dijkstra(const WeightedGraph& g, VertexId source, EdgeId masked,
                                    VertexId target, std::uint64_t* pops,
                                    std::vector<VertexId>* pred) {
    const int n = g.vertex_count();
    std::vector<double> dist(static_cast<size_t>(n), kInf);
    std::vector<char> done(static_cast<size_t>(n), 0);
    if (pred) pred->assign(static_cast<size_t>(n), -1);
    std::priority_queue<std::pair<double, VertexId>, std::vector<std::pair<double, VertexId>>,
                        std::greater<>>
        heap;
    dist[static_cast<size_t>(source)] = 0.0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (done[static_cast<size_t>(u)]) continue;
        done[static_cast<size_t>(u)] = 1;
        if (pops) ++*pops;
        if (u == target) break;
        for (const Neighbor& nb : g.neighbors(u)) {
            if (nb.edge == masked) continue;
            const double nd = d + g.weight(nb.edge);
            if (nd < dist[static_cast<size_t>(nb.to)]) {
                dist[static_cast<size_t>(nb.to)] = nd;
                if (pred) (*pred)[static_cast<size_t>(nb.to)] = u;
                heap.emplace(nd, nb.to);
            }
        }
    }
    return dist;
}

}  // namespace

MwcResult rooted_girth(const WeightedGraph& graph) {
    MwcResult result;
    EdgeId best_edge = -1;
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        const Edge& edge = graph.edge(e);
        ++result.stats.inner_searches;
        auto dist = masked_dijkstra(graph, edge.u, e, edge.v, &result.stats.argmin_extractions,
                                    nullptr);
        const double detour = dist[static_cast<size_t>(edge.v)];
        if (detour == kInf) continue;
        const double candidate = detour + edge.w;
        if (candidate < result.gamma) {
            result.gamma = candidate;
            best_edge = e;
        }
    }
    if (best_edge >= 0) {
        const Edge& edge = graph.edge(best_edge);
        std::vector<VertexId> pred;
        masked_dijkstra(graph, edge.u, best_edge, edge.v, nullptr, &pred);
        std::vector<VertexId> path;
        for (VertexId v = edge.v; v != -1; v = pred[static_cast<size_t>(v)]) path.push_back(v);
        CycleRecord rec = canonicalize_cycle(path, graph);
        result.gamma = rec.length;
        result.witness = std::move(rec);
    }
    return result;
}

std::vector<CycleRecord> enumerate_cycles(const WeightedGraph& graph, int max_vertices) {
    if (graph.vertex_count() > max_vertices)
        throw std::invalid_argument("enumerate_cycles: graph exceeds the size guard (" +
                                    std::to_string(graph.vertex_count()) + " > " +
                                    std::to_string(max_vertices) + " vertices)");
    std::vector<CycleRecord> cycles;
    const int n = graph.vertex_count();
    std::vector<char> on_path(static_cast<size_t>(n), 0);
    std::vector<VertexId> path;

    // DFS restricted to vertices > start; `start` is the minimum id of every
    // cycle it emits, and closing only when path[1] < path.back() emits each
    // cycle in exactly one orientation.
    std::function<void(VertexId, VertexId)> dfs = [&](VertexId start, VertexId u) {
        for (const Neighbor& nb : graph.neighbors(u)) {
            const VertexId v = nb.to;
            if (v == start && path.size() >= 3 && path[1] < path.back()) {
                cycles.push_back(canonicalize_cycle(path, graph));
                continue;
            }
            if (v <= start || on_path[static_cast<size_t>(v)]) continue;
            on_path[static_cast<size_t>(v)] = 1;
            path.push_back(v);
            dfs(start, v);
            path.pop_back();
            on_path[static_cast<size_t>(v)] = 0;
        }
    };

    for (VertexId start = 0; start < n; ++start) {
        on_path[static_cast<size_t>(start)] = 1;
        path.assign(1, start);
        dfs(start, start);
        on_path[static_cast<size_t>(start)] = 0;
    }
    return cycles;
}

std::vector<double> reference_dijkstra(const WeightedGraph& graph, VertexId source) {
    return masked_dijkstra(graph, source, -1, -1, nullptr, nullptr);
}

std::vector<int> reference_bfs_hops(const WeightedGraph& graph,
                                    std::span<const VertexId> seeds) {
    std::vector<int> hops(static_cast<size_t>(graph.vertex_count()), -1);
    std::queue<VertexId> q;
    for (VertexId s : seeds)
        if (hops[static_cast<size_t>(s)] < 0) {
            hops[static_cast<size_t>(s)] = 0;
            q.push(s);
        }
    while (!q.empty()) {
        VertexId u = q.front();
        q.pop();
        for (const Neighbor& nb : graph.neighbors(u))
            if (hops[static_cast<size_t>(nb.to)] < 0) {
                hops[static_cast<size_t>(nb.to)] = hops[static_cast<size_t>(u)] + 1;
                q.push(nb.to);
            }
    }
    return hops;
}

double FFactorCurve::area() const {
    if (fractions.empty()) return 0.0;
    double sum = 0.0;
    for (double f : fractions) sum += f;
    return sum / static_cast<double>(fractions.size());
}

FFactorCurve f_factor_simulation(const WeightedGraph& graph) {
    const int n = graph.vertex_count();
    const int total_edges = graph.edge_count();
    std::vector<int> degree(static_cast<size_t>(n));
    for (VertexId v = 0; v < n; ++v) degree[static_cast<size_t>(v)] = graph.degree(v);
    std::vector<char> removed(static_cast<size_t>(n), 0);

    FFactorCurve curve;
    curve.fractions.push_back(1.0);
    int remaining_edges = total_edges;
    for (int step = 0; step < n; ++step) {
        VertexId pick = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (removed[static_cast<size_t>(v)]) continue;
            if (pick < 0 || degree[static_cast<size_t>(v)] > degree[static_cast<size_t>(pick)])
                pick = v;
        }
        removed[static_cast<size_t>(pick)] = 1;
        remaining_edges -= degree[static_cast<size_t>(pick)];
        for (const Neighbor& nb : graph.neighbors(pick))
            if (!removed[static_cast<size_t>(nb.to)]) --degree[static_cast<size_t>(nb.to)];
        curve.fractions.push_back(total_edges == 0
                                      ? 0.0
                                      : static_cast<double>(remaining_edges) /
                                            static_cast<double>(total_edges));
    }
    return curve;
}

}  // namespace cyclekit
