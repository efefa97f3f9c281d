#include "cyclekit/mwc.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace cyclekit {

void MwcSearchState::resize(int n) {
    dist.assign(static_cast<size_t>(n), kInf);
    pred.assign(static_cast<size_t>(n), -1);
    depth.assign(static_cast<size_t>(n), 0);
    finalized.assign(static_cast<size_t>(n), 0);
    finalize_order.clear();
    touched.clear();
    root = -1;
    best_composite = kInf;
    best_composite_dist = kInf;
    best_composite_len = kInf;
    best_composite_cycle.clear();
}

void MwcSearchState::reset(VertexId new_root) {
    for (VertexId v : touched) {
        dist[static_cast<size_t>(v)] = kInf;
        pred[static_cast<size_t>(v)] = -1;
        depth[static_cast<size_t>(v)] = 0;
        finalized[static_cast<size_t>(v)] = 0;
    }
    touched.clear();
    finalize_order.clear();
    root = new_root;
    dist[static_cast<size_t>(new_root)] = 0.0;
    touched.push_back(new_root);
    best_composite = kInf;
    best_composite_dist = kInf;
    best_composite_len = kInf;
    best_composite_cycle.clear();
}

VertexId lca(const MwcSearchState& state, VertexId y, VertexId z) {
    while (state.depth[static_cast<size_t>(y)] > state.depth[static_cast<size_t>(z)])
        y = state.pred[static_cast<size_t>(y)];
    while (state.depth[static_cast<size_t>(z)] > state.depth[static_cast<size_t>(y)])
        z = state.pred[static_cast<size_t>(z)];
    while (y != z) {
        y = state.pred[static_cast<size_t>(y)];
        z = state.pred[static_cast<size_t>(z)];
    }
    return y;
}

namespace {

std::vector<VertexId> build_cycle_vertices(const MwcSearchState& st, VertexId y, VertexId z,
                                           VertexId p) {
    // Sequence p -> ... -> y, then the closing edge to z, then z's chain back
    // up toward p (exclusive); cyclically adjacent throughout.
    std::vector<VertexId> out;
    for (VertexId v = y; v != p; v = st.pred[static_cast<size_t>(v)]) out.push_back(v);
    out.push_back(p);
    std::reverse(out.begin(), out.end());
    for (VertexId v = z; v != p; v = st.pred[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

struct RunControl {
    double* live_gamma = nullptr;  // live cutoff, updated on every detection
    double fixed_threshold = kInf; // cutoff when live_gamma is null
    const std::vector<char>* view = nullptr;
    SearchObserver* observer = nullptr;
    SearchStats* stats = nullptr;
    std::function<void(const CycleDetection&)> on_detect; // runs before the gamma update
};

struct SearchCore {
    const WeightedGraph& g;
    std::span<const double> ew;
    MwcSearchState st;
    std::vector<std::pair<double, VertexId>> heap; // min-heap by (dist, id)

    SearchCore(const WeightedGraph& graph, std::span<const double> edge_weights)
        : g(graph), ew(edge_weights) {
        st.resize(graph.vertex_count());
    }

    void push(double d, VertexId v) {
        heap.emplace_back(d, v);
        std::push_heap(heap.begin(), heap.end(), std::greater<>{});
    }

    // One rooted search; returns the number of cycle detections.
    int run(VertexId x, RunControl& ctl) {
        st.reset(x);
        heap.clear();
        push(0.0, x);
        int detections = 0;
        if (ctl.observer) ctl.observer->root_started(x);

        while (!heap.empty()) {
            auto [d, y] = heap.front();
            std::pop_heap(heap.begin(), heap.end(), std::greater<>{});
            heap.pop_back();
            if (st.finalized[static_cast<size_t>(y)]) continue;
            if (d != st.dist[static_cast<size_t>(y)]) continue;
            const double cutoff = ctl.live_gamma ? *ctl.live_gamma : ctl.fixed_threshold;
            if (!(d < cutoff / 2.0)) break;

            st.finalized[static_cast<size_t>(y)] = 1;
            st.finalize_order.push_back(y);
            if (ctl.stats) ++ctl.stats->argmin_extractions;
            if (ctl.observer)
                ctl.observer->extracted(st, y, ctl.live_gamma ? *ctl.live_gamma : kInf);

            for (const Neighbor& nb : g.neighbors(y)) {
                const VertexId z = nb.to;
                if (ctl.view && !(*ctl.view)[static_cast<size_t>(z)]) continue;
                const double w = ew[static_cast<size_t>(nb.edge)];
                if (!st.finalized[static_cast<size_t>(z)]) {
                    const double nd = d + w;
                    if (nd < st.dist[static_cast<size_t>(z)]) {
                        if (st.dist[static_cast<size_t>(z)] == kInf) st.touched.push_back(z);
                        st.dist[static_cast<size_t>(z)] = nd;
                        st.pred[static_cast<size_t>(z)] = y;
                        st.depth[static_cast<size_t>(z)] = st.depth[static_cast<size_t>(y)] + 1;
                        push(nd, z);
                        if (ctl.stats) ++ctl.stats->edge_relaxations;
                    }
                } else if (z != st.pred[static_cast<size_t>(y)]) {
                    const VertexId p = lca(st, y, z);
                    CycleDetection det;
                    det.y = y;
                    det.z = z;
                    det.ancestor = p;
                    det.length = st.dist[static_cast<size_t>(y)] + st.dist[static_cast<size_t>(z)] +
                                 w - 2.0 * st.dist[static_cast<size_t>(p)];
                    det.dist_to_cycle = st.dist[static_cast<size_t>(p)];
                    det.composite = det.dist_to_cycle + det.length;
                    det.vertices = build_cycle_vertices(st, y, z, p);
                    ++detections;
                    if (ctl.stats) ++ctl.stats->cycles_detected;
                    if (det.composite < st.best_composite) {
                        st.best_composite = det.composite;
                        st.best_composite_dist = det.dist_to_cycle;
                        st.best_composite_len = det.length;
                        st.best_composite_cycle = det.vertices;
                    }
                    if (ctl.on_detect) ctl.on_detect(det);
                    if (ctl.live_gamma) *ctl.live_gamma = std::min(*ctl.live_gamma, det.length);
                    if (ctl.observer)
                        ctl.observer->cycle_detected(st, det,
                                                     ctl.live_gamma ? *ctl.live_gamma : kInf);
                }
            }
        }
        if (ctl.observer) ctl.observer->root_finished(st, ctl.live_gamma ? *ctl.live_gamma : kInf);
        return detections;
    }
};

std::vector<VertexId> root_sequence(const WeightedGraph& g, RootOrder order) {
    std::vector<VertexId> roots(static_cast<size_t>(g.vertex_count()));
    std::iota(roots.begin(), roots.end(), 0);
    if (order == RootOrder::DegreeDescending) {
        std::stable_sort(roots.begin(), roots.end(), [&](VertexId a, VertexId b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
    }
    return roots;
}

}  // namespace

std::vector<VertexId> apply_discarding(const MwcSearchState& state, double gamma,
                                       ActiveSet& active, SearchObserver* observer) {
    std::vector<VertexId> removed;
    if (!(state.best_composite < kInf)) return removed;
    if (!(state.best_composite_len > gamma)) return removed;
    if (!(state.best_composite < 1.5 * gamma)) return removed;
    for (VertexId z : state.touched) {
        if (z == state.root) continue;
        if (!active.active[static_cast<size_t>(z)]) continue;
        if (active.processed[static_cast<size_t>(z)]) continue;
        if (state.dist[static_cast<size_t>(z)] <= state.best_composite_dist) {
            active.active[static_cast<size_t>(z)] = 0;
            --active.active_count;
            removed.push_back(z);
            if (observer)
                observer->discarded(state.root, z, state.dist[static_cast<size_t>(z)],
                                    state.best_composite_dist);
        }
    }
    return removed;
}

MwcResult find_mwc(const WeightedGraph& graph, const MwcOptions& options) {
    const int n = graph.vertex_count();
    MwcResult result;
    if (n == 0) return result;

    SearchCore core(graph, graph.weights());
    ActiveSet active(n);
    PruneState prune;
    double gamma = kInf;
    std::vector<VertexId> witness;

    RunControl ctl;
    ctl.live_gamma = &gamma;
    ctl.observer = options.observer;
    ctl.stats = &result.stats;
    ctl.on_detect = [&](const CycleDetection& det) {
        if (det.length < gamma) witness = det.vertices;
    };

    const std::vector<VertexId> roots = root_sequence(graph, options.order);
    std::vector<VertexId> deferred; // roots whose only search so far was view-scoped

    auto full_search = [&](VertexId x) {
        ctl.view = nullptr;
        ++result.stats.inner_searches;
        const double gamma_before = gamma;
        core.run(x, ctl);
        active.processed[static_cast<size_t>(x)] = 1;
        if (options.discarding) {
            auto removed = apply_discarding(core.st, gamma, active, options.observer);
            result.stats.vertices_discarded += removed.size();
        }
        // A strict improvement re-seeds the locality view for upcoming roots.
        if (options.prune.enabled && gamma < gamma_before && !prune.view)
            install_view(prune, graph, witness, options.prune);
    };

    std::vector<char> view_with_root;
    for (VertexId x : roots) {
        if (!active.active[static_cast<size_t>(x)]) continue;
        const SearchScope scope = prune_step(prune, options.prune);
        if (scope == SearchScope::View) {
            view_with_root = *prune.view;
            // The ball was built on hop distance alone; vertices already
            // proven off every minimum cycle drop out of the view.
            for (VertexId v = 0; v < n; ++v)
                if (!active.active[static_cast<size_t>(v)]) view_with_root[static_cast<size_t>(v)] = 0;
            view_with_root[static_cast<size_t>(x)] = 1;
            ctl.view = &view_with_root;
            ++result.stats.inner_searches;
            const int detections = core.run(x, ctl);
            deferred.push_back(x);
            // An unproductive view step falls back to full scope right away.
            if (detections == 0) expire_view(prune);
        } else {
            full_search(x);
        }
    }
    // Roots that only ever ran inside a view still owe a full-scope search;
    // gamma is final only once every surviving root has had one.
    for (VertexId x : deferred) {
        if (!active.active[static_cast<size_t>(x)]) continue;
        if (active.processed[static_cast<size_t>(x)]) continue;
        full_search(x);
    }

    if (witness.empty()) {
        result.gamma = kInf;
        return result;
    }
    CycleRecord rec = canonicalize_cycle(witness, graph);
    result.gamma = rec.length; // canonical re-sum of the found cycle
    if (options.collect_witness) result.witness = std::move(rec);
    return result;
}

InnerSearchResult inner_search(const WeightedGraph& graph, VertexId x, double gamma_in,
                               const std::vector<char>* view, SearchObserver* observer) {
    SearchCore core(graph, graph.weights());
    double gamma = gamma_in;
    InnerSearchResult out;

    std::set<std::vector<VertexId>> seen;
    RunControl ctl;
    ctl.live_gamma = &gamma;
    ctl.view = view;
    ctl.observer = observer;
    ctl.on_detect = [&](const CycleDetection& det) {
        CycleRecord rec;
        rec.vertices = canonical_cycle_order(det.vertices);
        rec.length = det.length;
        rec.root = x;
        rec.dist_to_cycle = det.dist_to_cycle;
        rec.composite = det.composite;
        if (seen.insert(rec.vertices).second) out.detected.push_back(std::move(rec));
    };
    core.run(x, ctl);
    out.gamma_out = gamma;
    out.state = std::move(core.st);
    return out;
}

std::vector<std::pair<CycleRecord, double>> find_top_k_violated(
    const WeightedGraph& graph, std::span<const double> rho, int k, double threshold,
    const std::vector<char>* scope, SearchStats* stats) {
    std::vector<std::pair<CycleRecord, double>> out;
    if (k <= 0 || graph.vertex_count() == 0) return out;

    SearchCore core(graph, rho);
    // Ordered by (rho-length, canonical vertices); doubles as the dedup set.
    std::set<std::pair<double, std::vector<VertexId>>> best;
    const size_t cap = std::max<size_t>(1024, static_cast<size_t>(k) * 8);

    RunControl ctl;
    ctl.fixed_threshold = threshold;
    ctl.stats = stats;
    ctl.on_detect = [&](const CycleDetection& det) {
        if (!(det.length < threshold)) return;
        std::vector<VertexId> canon = canonical_cycle_order(det.vertices);
        // Integrity check against the full graph: edges must exist there and
        // the rho-length must re-sum to a violating value.
        const double verified = cycle_length(canon, graph, rho);
        if (!(verified < threshold)) return;
        best.emplace(verified, std::move(canon));
        if (best.size() > cap) best.erase(std::prev(best.end()));
    };

    for (VertexId x = 0; x < graph.vertex_count(); ++x) {
        if (scope && !(*scope)[static_cast<size_t>(x)]) continue;
        ctl.view = scope;
        if (stats) ++stats->inner_searches;
        core.run(x, ctl);
    }

    for (const auto& [len, verts] : best) {
        if (static_cast<int>(out.size()) >= k) break;
        CycleRecord rec;
        rec.vertices = verts;
        rec.length = len;
        out.emplace_back(std::move(rec), len);
    }
    return out;
}

}  // namespace cyclekit
