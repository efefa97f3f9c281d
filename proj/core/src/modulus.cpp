#include "cyclekit/modulus.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include <json.hpp>

namespace cyclekit {

std::vector<CycleRecord> find_triangles(const WeightedGraph& graph) {
    std::vector<CycleRecord> out;
    for (const Edge& e : graph.edges()) {
        const VertexId u = std::min(e.u, e.v);
        const VertexId v = std::max(e.u, e.v);
        // Common neighbors above v; (u, v, z) with u < v < z is already canonical.
        for (const Neighbor& nb : graph.neighbors(v)) {
            const VertexId z = nb.to;
            if (z <= v) continue;
            if (!graph.find_edge(u, z)) continue;
            CycleRecord rec;
            rec.vertices = {u, v, z};
            rec.length = cycle_length(rec.vertices, graph, graph.weights());
            out.push_back(std::move(rec));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CycleRecord& a, const CycleRecord& b) { return a.vertices < b.vertices; });
    return out;
}

std::optional<CycleRecord> shortest_hop_cycle(const WeightedGraph& graph) {
    std::vector<Edge> unit_edges = graph.edges();
    for (Edge& e : unit_edges) e.w = 1.0;
    WeightedGraph unit = WeightedGraph::from_edges(graph.vertex_count(), std::move(unit_edges));
    MwcOptions options;
    options.collect_witness = true;
    MwcResult hop = find_mwc(unit, options);
    if (!hop.witness) return std::nullopt;
    return canonicalize_cycle(hop.witness->vertices, graph);
}

std::vector<CycleRecord> greedy_select(const WeightedGraph& graph,
                                       std::vector<CycleRecord> candidates, int target) {
    std::vector<CycleRecord> chosen;
    if (candidates.empty() || target <= 0) return chosen;

    std::vector<std::vector<EdgeId>> edge_sets(candidates.size());
    std::vector<long long> degree_sums(candidates.size(), 0);
    for (size_t i = 0; i < candidates.size(); ++i) {
        const auto& verts = candidates[i].vertices;
        for (size_t j = 0; j < verts.size(); ++j) {
            auto e = graph.find_edge(verts[j], verts[(j + 1) % verts.size()]);
            if (!e) throw ValidationError("candidate cycle edge missing from graph");
            edge_sets[i].push_back(*e);
            degree_sums[i] += graph.degree(verts[j]);
        }
    }

    std::vector<char> covered(static_cast<size_t>(graph.edge_count()), 0);
    std::vector<char> used(candidates.size(), 0);
    while (static_cast<int>(chosen.size()) < target) {
        int best = -1;
        int best_new = -1;
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (used[i]) continue;
            int fresh = 0;
            for (EdgeId e : edge_sets[i]) fresh += !covered[static_cast<size_t>(e)];
            const bool wins =
                best < 0 || fresh > best_new ||
                (fresh == best_new &&
                 (degree_sums[i] > degree_sums[static_cast<size_t>(best)] ||
                  (degree_sums[i] == degree_sums[static_cast<size_t>(best)] &&
                   candidates[i].vertices < candidates[static_cast<size_t>(best)].vertices)));
            if (wins) {
                best = static_cast<int>(i);
                best_new = fresh;
            }
        }
        if (best < 0) break;
        used[static_cast<size_t>(best)] = 1;
        for (EdgeId e : edge_sets[static_cast<size_t>(best)]) covered[static_cast<size_t>(e)] = 1;
        chosen.push_back(candidates[static_cast<size_t>(best)]);
    }
    return chosen;
}

namespace {

std::vector<EdgeId> cycle_edge_ids(const CycleRecord& rec, const WeightedGraph& graph) {
    std::vector<EdgeId> ids;
    const auto& verts = rec.vertices;
    for (size_t j = 0; j < verts.size(); ++j) {
        auto e = graph.find_edge(verts[j], verts[(j + 1) % verts.size()]);
        if (!e) throw ValidationError("constraint cycle edge missing from graph");
        ids.push_back(*e);
    }
    return ids;
}

}  // namespace

ModulusResult compute_modulus(const WeightedGraph& graph, const ModulusConfig& config) {
    const auto start_time = std::chrono::steady_clock::now();
    const int n = graph.vertex_count();
    const int edge_count = graph.edge_count();

    ModulusResult result;
    result.rho.assign(static_cast<size_t>(edge_count), 0.0);

    // Preprocessing: triangles, else the shortest hop cycle, else the graph is
    // a forest and the zero density is optimal.
    std::vector<CycleRecord> candidates = find_triangles(graph);
    if (candidates.empty()) {
        auto hop = shortest_hop_cycle(graph);
        if (hop) candidates.push_back(std::move(*hop));
    }
    if (candidates.empty()) {
        result.converged = true;
        result.total_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
        return result;
    }

    const int max_iters = config.max_iters > 0 ? config.max_iters : std::max(1, 10 * n);
    const int init_target =
        config.init_target > 0
            ? config.init_target
            : std::max(1, std::min(edge_count / 3, 50));
    const int per_iter = std::max(1, config.cycles_per_iter);
    const double threshold = 1.0 - config.epsilon;

    std::vector<CycleRecord> constraints = greedy_select(graph, std::move(candidates), init_target);
    ConstraintMatrix matrix(edge_count);
    std::set<std::vector<VertexId>> known;
    for (const CycleRecord& rec : constraints) {
        matrix.add_row(cycle_edge_ids(rec, graph));
        known.insert(rec.vertices);
    }

    QpSolution sol = solve_qp(matrix, nullptr, config.qp_tolerance);
    result.qp_solves = 1;
    result.qp_all_converged = sol.converged;

    PruneState prune;
    int k = 0;
    while (true) {
        while (k < max_iters) {
            ++k;
            const SearchScope scope = prune_step(prune, config.prune);
            const std::vector<char>* mask =
                scope == SearchScope::View ? &*prune.view : nullptr;

            ModulusIteration it;
            it.iteration = k;
            it.full_scope = scope == SearchScope::Full;
            it.view_size = scope == SearchScope::View ? prune.view_size : n;

            auto violated = find_top_k_violated(graph, sol.rho, per_iter, threshold, mask);
            it.violated_found = static_cast<int>(violated.size());
            if (!violated.empty()) it.min_rho_length = violated.front().second;
            if (violated.empty()) {
                it.modulus = sol.modulus;
                result.trace.push_back(it);
                break;
            }

            std::vector<VertexId> last_added;
            int added = 0;
            for (auto& [rec, rho_len] : violated) {
                if (known.count(rec.vertices)) continue;
                if (!matrix.add_row(cycle_edge_ids(rec, graph))) continue;
                known.insert(rec.vertices);
                last_added.insert(last_added.end(), rec.vertices.begin(), rec.vertices.end());
                constraints.push_back(rec);
                ++added;
            }
            it.added = added;
            if (added == 0) {
                it.modulus = sol.modulus;
                result.trace.push_back(it);
                break;
            }

            sol = solve_qp(matrix, &sol, config.qp_tolerance);
            ++result.qp_solves;
            result.qp_all_converged = result.qp_all_converged && sol.converged;
            it.modulus = sol.modulus;
            result.trace.push_back(it);

            if (config.prune.enabled && !prune.view && !last_added.empty()) {
                std::sort(last_added.begin(), last_added.end());
                last_added.erase(std::unique(last_added.begin(), last_added.end()),
                                 last_added.end());
                install_view(prune, graph, last_added, config.prune);
            }
        }

        // Mandatory full-graph certificate. The loop may have broken inside a
        // pruned view; if anything still violates, resume at full scope.
        auto certificate = find_top_k_violated(graph, sol.rho, per_iter, threshold, nullptr);
        if (certificate.empty()) {
            result.converged = true;
            break;
        }
        if (k >= max_iters) {
            result.converged = false;
            break;
        }
        expire_view(prune);
    }

    result.rho = sol.rho;
    result.modulus = sol.modulus;
    result.constraints = std::move(constraints);
    result.iterations = k;
    result.total_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    return result;
}

std::string modulus_report_json(const WeightedGraph& graph, const ModulusResult& result,
                                int indent) {
    nlohmann::ordered_json j;
    j["modulus"] = result.modulus;
    auto& rho = j["rho"] = nlohmann::ordered_json::array();
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        const Edge& edge = graph.edge(e);
        rho.push_back({edge.u, edge.v, result.rho[static_cast<size_t>(e)]});
    }
    auto& cons = j["constraints"] = nlohmann::ordered_json::array();
    for (const CycleRecord& rec : result.constraints) cons.push_back(rec.vertices);
    j["qp_solves"] = result.qp_solves;
    j["iterations"] = result.iterations;
    j["converged"] = result.converged;
    j["qp_all_converged"] = result.qp_all_converged;
    auto& trace = j["trace"] = nlohmann::ordered_json::array();
    for (const ModulusIteration& it : result.trace) {
        nlohmann::ordered_json entry;
        entry["iteration"] = it.iteration;
        entry["scope"] = it.full_scope ? "full" : "view";
        entry["view_size"] = it.view_size;
        entry["violated_found"] = it.violated_found;
        entry["added"] = it.added;
        if (it.min_rho_length != kInf) entry["min_rho_length"] = it.min_rho_length;
        entry["modulus"] = it.modulus;
        trace.push_back(std::move(entry));
    }
    return j.dump(indent);
}

}  // namespace cyclekit
