#include "cyclekit/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace cyclekit {

namespace {

struct LabelInterner {
    std::unordered_map<std::string, VertexId> index;
    std::vector<std::string> labels;

    VertexId intern(const std::string& label) {
        auto [it, inserted] = index.try_emplace(label, static_cast<VertexId>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    }
};

double parse_weight(const std::string& tok, int line_no) {
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("bad weight '" + tok + "'", line_no);
    return w;
}

WeightedGraph load_edge_list(std::istream& in) {
    LabelInterner interner;
    std::vector<Edge> edges;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() == 2 && toks[0] == "node") {
            interner.intern(toks[1]);
            continue;
        }
        if (toks.size() != 3)
            throw ParseError("expected 'u v w' (or 'node <label>')", line_no);
        VertexId u = interner.intern(toks[0]);
        VertexId v = interner.intern(toks[1]);
        double w = parse_weight(toks[2], line_no);
        try {
            if (u == v) throw ValidationError("self-loop on '" + toks[0] + "'");
            edges.push_back({u, v, w});
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    const int vertex_count = static_cast<int>(interner.labels.size());
    return WeightedGraph::from_edges(vertex_count, std::move(edges), std::move(interner.labels));
}

WeightedGraph load_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
        throw ParseError("JSON graph needs 'nodes' and 'edges'");
    std::vector<std::string> labels;
    for (const auto& node : j["nodes"]) {
        if (node.is_string())
            labels.push_back(node.get<std::string>());
        else
            labels.push_back(node.dump());
    }
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3) throw ParseError("edge entries must be [u, v, w]");
        edges.push_back({e[0].get<VertexId>(), e[1].get<VertexId>(), e[2].get<double>()});
    }
    const int vertex_count = static_cast<int>(labels.size());
    return WeightedGraph::from_edges(vertex_count, std::move(edges), std::move(labels));
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

WeightedGraph load_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::EdgeList ? load_edge_list(in) : load_json(in);
}

void save_graph(std::ostream& out, const WeightedGraph& graph, GraphFormat format) {
    if (format == GraphFormat::EdgeList) {
        // Reloading renumbers labels in first-appearance order. When the edge
        // stream alone would not reproduce ids 0..n-1 in order (gaps or
        // out-of-order first appearances), declare every vertex up front.
        VertexId next_expected = 0;
        bool natural = true;
        for (const Edge& e : graph.edges()) {
            for (VertexId v : {e.u, e.v}) {
                if (v == next_expected)
                    ++next_expected;
                else if (v > next_expected)
                    natural = false;
            }
        }
        natural = natural && next_expected == graph.vertex_count();
        if (!natural)
            for (VertexId v = 0; v < graph.vertex_count(); ++v)
                out << "node " << graph.label(v) << "\n";
        for (const Edge& e : graph.edges())
            out << graph.label(e.u) << " " << graph.label(e.v) << " " << format_double(e.w)
                << "\n";
    } else {
        nlohmann::ordered_json j;
        j["nodes"] = graph.labels();
        auto& edges = j["edges"] = nlohmann::ordered_json::array();
        for (const Edge& e : graph.edges()) edges.push_back({e.u, e.v, e.w});
        out << j.dump(2) << "\n";
    }
}

WeightedGraph load_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return load_graph(in, format);
}

void save_graph_file(const std::string& path, const WeightedGraph& graph, GraphFormat format) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    save_graph(out, graph, format);
}

GraphFormat format_for_path(const std::string& path) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return GraphFormat::Json;
    return GraphFormat::EdgeList;
}

}  // namespace cyclekit
