#include "cyclekit/generate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace cyclekit {

namespace {

// All randomness goes through these helpers; std::uniform_*_distribution is
// implementation-defined and would break bit-reproducibility across stdlibs.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform weight on the 1/64 grid inside [wmin, wmax]; exact in double.
double rand_weight(std::mt19937_64& rng, const GraphSpec& spec) {
    if (spec.wmin == spec.wmax) return spec.wmin;
    const std::int64_t lo = static_cast<std::int64_t>(std::llround(spec.wmin * 64.0));
    const std::int64_t hi = static_cast<std::int64_t>(std::llround(spec.wmax * 64.0));
    const std::int64_t steps = std::max<std::int64_t>(hi - lo + 1, 1);
    std::int64_t v = lo + static_cast<std::int64_t>(rand_below(rng, static_cast<std::uint64_t>(steps)));
    if (v < 1) v = 1;
    return static_cast<double>(v) / 64.0;
}

void fill_weights(std::vector<Edge>& edges, std::mt19937_64& rng, const GraphSpec& spec) {
    for (Edge& e : edges) e.w = rand_weight(rng, spec);
}

WeightedGraph make_grid(int d) {
    if (d < 2) throw ValidationError("grid side must be >= 2");
    auto id = [d](int r, int c) { return r * d + c; };
    auto hop_to_corner = [d](int r, int c) { return (d - 1 - r) + (d - 1 - c); };
    std::vector<Edge> edges;
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            int h = hop_to_corner(r, c);
            if (c + 1 < d) {
                int h2 = hop_to_corner(r, c + 1);
                edges.push_back({id(r, c), id(r, c + 1), std::ldexp(1.0, std::min(h, h2))});
            }
            if (r + 1 < d) {
                int h2 = hop_to_corner(r + 1, c);
                edges.push_back({id(r, c), id(r + 1, c), std::ldexp(1.0, std::min(h, h2))});
            }
        }
    }
    return WeightedGraph::from_edges(d * d, std::move(edges));
}

WeightedGraph make_cycle(int n, const GraphSpec& spec, std::mt19937_64& rng) {
    if (n < 3) throw ValidationError("cycle needs >= 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
    fill_weights(edges, rng, spec);
    return WeightedGraph::from_edges(n, std::move(edges));
}

WeightedGraph make_complete(int n, const GraphSpec& spec, std::mt19937_64& rng) {
    if (n < 1) throw ValidationError("complete graph needs >= 1 vertex");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
    fill_weights(edges, rng, spec);
    return WeightedGraph::from_edges(n, std::move(edges));
}

std::vector<std::pair<int, int>> er_pairs(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_unit(rng) < p) pairs.emplace_back(u, v);
    return pairs;
}

WeightedGraph make_er(int n, double p, const GraphSpec& spec, std::mt19937_64& rng) {
    if (n < 1) throw ValidationError("er graph needs >= 1 vertex");
    if (p < 0.0 || p > 1.0) throw ValidationError("er probability must be in [0,1]");
    std::vector<Edge> edges;
    for (auto [u, v] : er_pairs(n, p, rng)) edges.push_back({u, v, 1.0});
    fill_weights(edges, rng, spec);
    return WeightedGraph::from_edges(n, std::move(edges));
}

WeightedGraph make_ba(int n, int m, const GraphSpec& spec, std::mt19937_64& rng) {
    if (m < 1 || n <= m) throw ValidationError("ba needs 1 <= m < n");
    std::set<std::pair<int, int>> edge_set;
    std::vector<int> repeated; // one entry per edge endpoint, degree-proportional sampling
    int m0 = m + 1;
    for (int u = 0; u < m0; ++u)
        for (int v = u + 1; v < m0; ++v) {
            edge_set.insert({u, v});
            repeated.push_back(u);
            repeated.push_back(v);
        }
    for (int v = m0; v < n; ++v) {
        std::set<int> targets;
        while (static_cast<int>(targets.size()) < m) {
            int t = repeated[rand_below(rng, repeated.size())];
            targets.insert(t);
        }
        for (int t : targets) {
            edge_set.insert({std::min(v, t), std::max(v, t)});
            repeated.push_back(v);
            repeated.push_back(t);
        }
    }
    std::vector<Edge> edges;
    for (auto [u, v] : edge_set) edges.push_back({u, v, 1.0});
    fill_weights(edges, rng, spec);
    return WeightedGraph::from_edges(n, std::move(edges));
}

WeightedGraph make_ws(int n, int k, double beta, const GraphSpec& spec, std::mt19937_64& rng) {
    if (n < 3 || k < 2 || k % 2 != 0 || k >= n)
        throw ValidationError("ws needs n >= 3 and even k with 2 <= k < n");
    if (beta < 0.0 || beta > 1.0) throw ValidationError("ws beta must be in [0,1]");
    std::set<std::pair<int, int>> edge_set;
    auto key = [](int a, int b) { return std::pair{std::min(a, b), std::max(a, b)}; };
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= k / 2; ++j) edge_set.insert(key(i, (i + j) % n));
    for (int i = 0; i < n; ++i) {
        for (int j = 1; j <= k / 2; ++j) {
            int t = (i + j) % n;
            if (rand_unit(rng) >= beta) continue;
            if (!edge_set.count(key(i, t))) continue;
            // Try a handful of replacement targets; keep the edge if none fits.
            for (int attempt = 0; attempt < n; ++attempt) {
                int r = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(n)));
                if (r == i || edge_set.count(key(i, r))) continue;
                edge_set.erase(key(i, t));
                edge_set.insert(key(i, r));
                break;
            }
        }
    }
    std::vector<Edge> edges;
    for (auto [u, v] : edge_set) edges.push_back({u, v, 1.0});
    fill_weights(edges, rng, spec);
    return WeightedGraph::from_edges(n, std::move(edges));
}

bool is_connected(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n == 0) return true;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [u, v] : pairs) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[static_cast<size_t>(u)])
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                ++count;
                q.push(v);
            }
    }
    return count == n;
}

// Wilson's loop-erased random walk; uniform over spanning trees of the base.
std::vector<std::pair<int, int>> uniform_spanning_tree(
    int n, const std::vector<std::vector<int>>& adj, std::mt19937_64& rng) {
    std::vector<char> in_tree(static_cast<size_t>(n), 0);
    std::vector<int> next(static_cast<size_t>(n), -1);
    std::vector<std::pair<int, int>> tree;
    in_tree[0] = 1;
    for (int v = 1; v < n; ++v) {
        if (in_tree[static_cast<size_t>(v)]) continue;
        int u = v;
        while (!in_tree[static_cast<size_t>(u)]) {
            const auto& nb = adj[static_cast<size_t>(u)];
            next[static_cast<size_t>(u)] = nb[rand_below(rng, nb.size())];
            u = next[static_cast<size_t>(u)];
        }
        u = v;
        while (!in_tree[static_cast<size_t>(u)]) {
            in_tree[static_cast<size_t>(u)] = 1;
            tree.emplace_back(u, next[static_cast<size_t>(u)]);
            u = next[static_cast<size_t>(u)];
        }
    }
    return tree;
}

GenResult make_light_tree(int n, double base_p, std::mt19937_64& rng) {
    if (n < 3) throw ValidationError("light-tree needs >= 3 vertices");
    if (base_p <= 0.0) base_p = std::min(1.0, std::max(0.2, 3.0 * std::log(std::max(n, 2)) / n));

    std::vector<std::pair<int, int>> pairs;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        pairs = er_pairs(n, base_p, rng);
        if (static_cast<int>(pairs.size()) >= n && is_connected(n, pairs)) break;
        pairs.clear();
    }
    if (pairs.empty()) throw ValidationError("light-tree base graph never came out connected");

    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [u, v] : pairs) {
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    auto tree = uniform_spanning_tree(n, adj, rng);
    std::set<std::pair<int, int>> tree_set;
    for (auto [u, v] : tree) tree_set.insert({std::min(u, v), std::max(u, v)});

    std::vector<std::pair<int, int>> non_tree;
    for (auto [u, v] : pairs)
        if (!tree_set.count({u, v})) non_tree.emplace_back(u, v);
    auto e_nt = non_tree[rand_below(rng, non_tree.size())];

    const double heavy = static_cast<double>(n + 1);
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) {
        double w = heavy;
        if (tree_set.count({u, v}) || std::pair{u, v} == e_nt) w = 1.0;
        edges.push_back({u, v, w});
    }

    // Tree path length between the endpoints of the light non-tree edge.
    std::vector<std::vector<int>> tadj(static_cast<size_t>(n));
    for (auto [u, v] : tree) {
        tadj[static_cast<size_t>(u)].push_back(v);
        tadj[static_cast<size_t>(v)].push_back(u);
    }
    std::vector<int> hops(static_cast<size_t>(n), -1);
    std::queue<int> q;
    q.push(e_nt.first);
    hops[static_cast<size_t>(e_nt.first)] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : tadj[static_cast<size_t>(u)])
            if (hops[static_cast<size_t>(v)] < 0) {
                hops[static_cast<size_t>(v)] = hops[static_cast<size_t>(u)] + 1;
                q.push(v);
            }
    }

    GenResult result;
    result.graph = WeightedGraph::from_edges(n, std::move(edges));
    LightTreeMeta meta;
    meta.tree_edges = std::move(tree);
    meta.non_tree_edge = e_nt;
    meta.fundamental_cycle_length = static_cast<double>(hops[static_cast<size_t>(e_nt.second)] + 1);
    result.light_tree = std::move(meta);
    return result;
}

// Jittered lattice with per-cell diagonals and a few doubled diagonals:
// d*d vertices, 2*d*(d-1) + (d-1)^2 + extra edges. Distances are snapped to
// the 1/1024 grid to keep the arithmetic exact.
WeightedGraph make_proximity(int d, int extra, std::mt19937_64& rng) {
    if (d < 2) throw ValidationError("proximity side must be >= 2");
    const int cells = (d - 1) * (d - 1);
    if (extra < 0) extra = std::min(40, cells);
    if (extra > cells)
        throw ValidationError("proximity extra chords must be in [0, (d-1)^2]");
    auto id = [d](int r, int c) { return r * d + c; };
    const int n = d * d;
    std::vector<double> px(static_cast<size_t>(n)), py(static_cast<size_t>(n));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            px[static_cast<size_t>(id(r, c))] = r + 0.45 * (2.0 * rand_unit(rng) - 1.0);
            py[static_cast<size_t>(id(r, c))] = c + 0.45 * (2.0 * rand_unit(rng) - 1.0);
        }
    auto dist = [&](int a, int b) {
        double dx = px[static_cast<size_t>(a)] - px[static_cast<size_t>(b)];
        double dy = py[static_cast<size_t>(a)] - py[static_cast<size_t>(b)];
        double raw = std::sqrt(dx * dx + dy * dy);
        double snapped = std::round(raw * 1024.0) / 1024.0;
        return std::max(snapped, 1.0 / 1024.0);
    };
    std::vector<Edge> edges;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
            if (c + 1 < d) edges.push_back({id(r, c), id(r, c + 1), dist(id(r, c), id(r, c + 1))});
            if (r + 1 < d) edges.push_back({id(r, c), id(r + 1, c), dist(id(r, c), id(r + 1, c))});
        }
    std::vector<char> doubled(static_cast<size_t>(cells), 0);
    for (int picked = 0; picked < extra;) {
        int cell = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(cells)));
        if (doubled[static_cast<size_t>(cell)]) continue;
        doubled[static_cast<size_t>(cell)] = 1;
        ++picked;
    }
    for (int r = 0; r + 1 < d; ++r)
        for (int c = 0; c + 1 < d; ++c) {
            int a = id(r, c), b = id(r + 1, c + 1);
            int x = id(r, c + 1), y = id(r + 1, c);
            bool main_shorter = dist(a, b) <= dist(x, y);
            int cell = r * (d - 1) + c;
            if (main_shorter || doubled[static_cast<size_t>(cell)])
                edges.push_back({a, b, dist(a, b)});
            if (!main_shorter || doubled[static_cast<size_t>(cell)])
                edges.push_back({x, y, dist(x, y)});
        }
    return WeightedGraph::from_edges(n, std::move(edges));
}

int parse_int(const std::string& tok, const char* what) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ValidationError(std::string("bad ") + what + " '" + tok + "'");
    return v;
}

double parse_real(const std::string& tok, const char* what) {
    double v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ValidationError(std::string("bad ") + what + " '" + tok + "'");
    return v;
}

}  // namespace

std::string GraphSpec::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case GraphKind::Grid: os << "grid:" << a; break;
        case GraphKind::LightTree: os << "light-tree:" << a; break;
        case GraphKind::ErdosRenyi: os << "er:" << a << ":" << p; break;
        case GraphKind::BarabasiAlbert: os << "ba:" << a << ":" << b; break;
        case GraphKind::WattsStrogatz: os << "ws:" << a << ":" << b << ":" << p; break;
        case GraphKind::SingleCycle: os << "cycle:" << a; break;
        case GraphKind::Complete: os << "complete:" << a; break;
        case GraphKind::Proximity:
            os << "proximity:" << a;
            if (extra >= 0) os << ":extra=" << extra;
            break;
    }
    if (seed_explicit) os << ":seed=" << seed;
    if (wmin != wmax || wmin != 1.0) os << ":wmin=" << wmin << ":wmax=" << wmax;
    return os.str();
}

GraphSpec parse_graph_spec(const std::string& text) {
    std::vector<std::string> parts;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ':')) parts.push_back(tok);
    if (parts.empty()) throw ValidationError("empty graph spec");

    GraphSpec spec;
    const std::string& kind = parts[0];
    std::vector<std::string> positional;
    for (size_t i = 1; i < parts.size(); ++i) {
        auto eq = parts[i].find('=');
        if (eq == std::string::npos) {
            positional.push_back(parts[i]);
            continue;
        }
        std::string key = parts[i].substr(0, eq);
        std::string val = parts[i].substr(eq + 1);
        if (key == "seed") {
            spec.seed = static_cast<std::uint64_t>(parse_int(val, "seed"));
            spec.seed_explicit = true;
        } else if (key == "wmin") {
            spec.wmin = parse_real(val, "wmin");
        } else if (key == "wmax") {
            spec.wmax = parse_real(val, "wmax");
        } else if (key == "p") {
            spec.p = parse_real(val, "p");
        } else if (key == "extra") {
            spec.extra = parse_int(val, "extra");
        } else {
            throw ValidationError("unknown spec key '" + key + "'");
        }
    }

    auto pos_int = [&](size_t i, const char* what) {
        if (i >= positional.size()) throw ValidationError(std::string("missing ") + what);
        return parse_int(positional[i], what);
    };
    auto pos_real = [&](size_t i, const char* what) {
        if (i >= positional.size()) throw ValidationError(std::string("missing ") + what);
        return parse_real(positional[i], what);
    };

    if (kind == "grid") {
        spec.kind = GraphKind::Grid;
        spec.a = pos_int(0, "grid side");
    } else if (kind == "light-tree") {
        spec.kind = GraphKind::LightTree;
        spec.a = pos_int(0, "vertex count");
    } else if (kind == "er" || kind == "erdos-renyi") {
        spec.kind = GraphKind::ErdosRenyi;
        spec.a = pos_int(0, "vertex count");
        spec.p = pos_real(1, "edge probability");
    } else if (kind == "ba" || kind == "barabasi-albert") {
        spec.kind = GraphKind::BarabasiAlbert;
        spec.a = pos_int(0, "vertex count");
        spec.b = pos_int(1, "edges per vertex");
    } else if (kind == "ws" || kind == "watts-strogatz") {
        spec.kind = GraphKind::WattsStrogatz;
        spec.a = pos_int(0, "vertex count");
        spec.b = pos_int(1, "ring degree");
        spec.p = pos_real(2, "rewire probability");
    } else if (kind == "cycle" || kind == "single-cycle") {
        spec.kind = GraphKind::SingleCycle;
        spec.a = pos_int(0, "cycle length");
    } else if (kind == "complete" || kind == "k") {
        spec.kind = GraphKind::Complete;
        spec.a = pos_int(0, "vertex count");
    } else if (kind == "proximity") {
        spec.kind = GraphKind::Proximity;
        spec.a = pos_int(0, "lattice side");
    } else {
        throw ValidationError("unknown graph kind '" + kind + "'");
    }
    if (spec.wmax < spec.wmin) throw ValidationError("wmax < wmin");
    return spec;
}

bool spec_is_randomized(const GraphSpec& spec) {
    switch (spec.kind) {
        case GraphKind::Grid:
        case GraphKind::SingleCycle:
        case GraphKind::Complete:
            return spec.wmin != spec.wmax;
        default:
            return true;
    }
}

GenResult generate_detailed(const GraphSpec& spec) {
    std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ull);
    GenResult result;
    switch (spec.kind) {
        case GraphKind::Grid: result.graph = make_grid(spec.a); break;
        case GraphKind::LightTree: return make_light_tree(spec.a, spec.p, rng);
        case GraphKind::ErdosRenyi: result.graph = make_er(spec.a, spec.p, spec, rng); break;
        case GraphKind::BarabasiAlbert: result.graph = make_ba(spec.a, spec.b, spec, rng); break;
        case GraphKind::WattsStrogatz:
            result.graph = make_ws(spec.a, spec.b, spec.p, spec, rng);
            break;
        case GraphKind::SingleCycle: result.graph = make_cycle(spec.a, spec, rng); break;
        case GraphKind::Complete: result.graph = make_complete(spec.a, spec, rng); break;
        case GraphKind::Proximity: result.graph = make_proximity(spec.a, spec.extra, rng); break;
    }
    return result;
}

WeightedGraph generate(const GraphSpec& spec) { return generate_detailed(spec).graph; }

}  // namespace cyclekit
