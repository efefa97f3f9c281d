#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclekit/generate.hpp"
#include "cyclekit/graph.hpp"
#include "cyclekit/io.hpp"
#include "cyclekit/modulus.hpp"
#include "cyclekit/mwc.hpp"
#include "cyclekit/oracles.hpp"

namespace {

using nlohmann::ordered_json;
using namespace cyclekit;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoCycle = 2;
constexpr int kExitNotConverged = 3;

struct InputArgs {
    std::string file;
    std::string gen;
    bool strict = false;
};

void add_input_flags(CLI::App* cmd, InputArgs& in, bool positional_file = true) {
    CLI::Option* file = positional_file ? cmd->add_option("input", in.file, "graph file (edge list, or .json)")
                                        : cmd->add_option("--input", in.file, "graph file");
    CLI::Option* gen = cmd->add_option("--gen", in.gen, "inline generator spec, e.g. grid:5 or er:100:0.05:seed=3");
    file->excludes(gen);
    gen->excludes(file);
    cmd->add_flag("--strict", in.strict, "require an explicit seed= on randomized generator specs");
}

WeightedGraph load_input(const InputArgs& in, ordered_json& echo) {
    if (!in.gen.empty()) {
        GraphSpec spec = parse_graph_spec(in.gen);
        if (in.strict && spec_is_randomized(spec) && !spec.seed_explicit)
            throw Error("--strict: randomized spec '" + in.gen + "' needs an explicit seed=");
        echo["gen"] = spec.to_string();
        return generate(spec);
    }
    if (in.file.empty()) throw Error("no input: give a file or --gen");
    echo["input"] = in.file;
    return load_graph_file(in.file, format_for_path(in.file));
}

ordered_json gamma_json(double gamma) {
    if (gamma == kInf) return "inf";
    return gamma;
}

void write_report(const std::string& path, const ordered_json& report) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw Error("cannot write report '" + path + "'");
    out << report.dump(2) << "\n";
}

std::string label_sequence(const WeightedGraph& g, const std::vector<VertexId>& verts) {
    std::string out;
    for (size_t i = 0; i < verts.size(); ++i) {
        if (i) out += ' ';
        out += g.label(verts[i]);
    }
    return out;
}

ordered_json stats_json(const SearchStats& s) {
    return ordered_json{{"argmin_extractions", s.argmin_extractions},
                        {"edge_relaxations", s.edge_relaxations},
                        {"cycles_detected", s.cycles_detected},
                        {"vertices_discarded", s.vertices_discarded},
                        {"inner_searches", s.inner_searches}};
}

struct GirthArgs {
    InputArgs in;
    bool discarding = true;
    bool prune = false;
    int prune_dist = 3;
    int prune_interval = 5;
    double prune_min_frac = 0.3;
    std::string order = "id";
    bool witness = false;
    bool require_cycle = false;
    std::string compare;
    std::string report_path;
};

int run_girth(const GirthArgs& a) {
    ordered_json report;
    report["command"] = "girth";
    auto& cfg = report["config"];
    WeightedGraph g = load_input(a.in, cfg);
    cfg["discarding"] = a.discarding;
    cfg["prune"] = a.prune;
    if (a.prune) {
        cfg["prune_dist"] = a.prune_dist;
        cfg["prune_interval"] = a.prune_interval;
        cfg["prune_min_frac"] = a.prune_min_frac;
    }
    cfg["order"] = a.order;

    MwcOptions options;
    options.discarding = a.discarding;
    options.prune = {a.prune, a.prune_interval, a.prune_dist, a.prune_min_frac};
    options.collect_witness = true;
    options.order = a.order == "degree-desc" ? RootOrder::DegreeDescending : RootOrder::AscendingId;

    const auto t0 = std::chrono::steady_clock::now();
    MwcResult res = find_mwc(g, options);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::cout << "gamma = " << (res.gamma == kInf ? "inf" : format_double(res.gamma)) << "\n";
    if (a.witness && res.witness)
        std::cout << "cycle: " << label_sequence(g, res.witness->vertices) << "\n";

    auto& result = report["result"];
    result["gamma"] = gamma_json(res.gamma);
    if (res.witness) result["witness"] = res.witness->vertices;
    result["stats"] = stats_json(res.stats);

    if (!a.compare.empty()) {
        if (a.compare != "rooted") throw Error("unknown --compare method '" + a.compare + "'");
        MwcResult base = rooted_girth(g);
        std::cout << "rooted gamma = "
                  << (base.gamma == kInf ? "inf" : format_double(base.gamma)) << "\n";
        const double ratio =
            base.stats.argmin_extractions == 0
                ? 0.0
                : static_cast<double>(res.stats.argmin_extractions) /
                      static_cast<double>(base.stats.argmin_extractions);
        std::cout << "argmin ops: alg1=" << res.stats.argmin_extractions
                  << " rooted=" << base.stats.argmin_extractions << " ratio=" << format_double(ratio)
                  << "\n";
        auto& cmp = report["comparison"];
        cmp["rooted_gamma"] = gamma_json(base.gamma);
        cmp["alg1_argmin"] = res.stats.argmin_extractions;
        cmp["rooted_argmin"] = base.stats.argmin_extractions;
        cmp["ratio"] = ratio;
    }

    report["wall_time_s"] = secs;
    write_report(a.report_path, report);
    if (a.require_cycle && res.gamma == kInf) return kExitNoCycle;
    return kExitOk;
}

struct ModulusArgs {
    InputArgs in;
    double epsilon = 1e-6;
    int max_iters = 0;
    int init_target = 0;
    int cycles_per_iter = 5;
    bool no_prune = false;
    int prune_dist = 3;
    int prune_interval = 5;
    double prune_min_frac = 0.3;
    double qp_tol = 1e-8;
    std::string report_path;
};

int run_modulus(const ModulusArgs& a) {
    ordered_json report;
    report["command"] = "modulus";
    auto& cfg = report["config"];
    WeightedGraph g = load_input(a.in, cfg);
    ModulusConfig config;
    config.epsilon = a.epsilon;
    config.max_iters = a.max_iters;
    config.init_target = a.init_target;
    config.cycles_per_iter = a.cycles_per_iter;
    config.prune = {!a.no_prune, a.prune_interval, a.prune_dist, a.prune_min_frac};
    config.qp_tolerance = a.qp_tol;
    cfg["epsilon"] = config.epsilon;
    cfg["cycles_per_iter"] = config.cycles_per_iter;
    cfg["prune"] = config.prune.enabled;
    cfg["qp_tolerance"] = config.qp_tolerance;

    ModulusResult res = compute_modulus(g, config);

    std::cout << "modulus = " << format_double(res.modulus) << "\n";
    std::cout << "qp_solves = " << res.qp_solves << "\n";
    std::cout << "constraints = " << res.constraints.size() << "\n";
    std::cout << "iterations = " << res.iterations << "\n";
    std::cout << "converged = " << (res.converged ? "true" : "false") << "\n";
    std::cout << "total_time_s = " << format_double(res.total_seconds) << "\n";

    report["result"] = ordered_json::parse(modulus_report_json(g, res));
    report["wall_time_s"] = res.total_seconds;
    write_report(a.report_path, report);
    return res.converged ? kExitOk : kExitNotConverged;
}

struct GenArgs {
    std::string spec;
    std::string out_path;
    std::string meta_path;
    bool json = false;
    bool strict = false;
};

int run_gen(const GenArgs& a) {
    GraphSpec spec = parse_graph_spec(a.spec);
    if (a.strict && spec_is_randomized(spec) && !spec.seed_explicit)
        throw Error("--strict: randomized spec '" + a.spec + "' needs an explicit seed=");
    GenResult gen = generate_detailed(spec);
    const GraphFormat fmt = a.json ? GraphFormat::Json : GraphFormat::EdgeList;
    if (a.out_path.empty()) {
        save_graph(std::cout, gen.graph, fmt);
    } else {
        save_graph_file(a.out_path, gen.graph, a.json ? GraphFormat::Json : format_for_path(a.out_path));
    }
    if (!a.meta_path.empty()) {
        ordered_json meta;
        meta["spec"] = spec.to_string();
        meta["vertices"] = gen.graph.vertex_count();
        meta["edges"] = gen.graph.edge_count();
        if (gen.light_tree) {
            auto& lt = meta["light_tree"];
            auto& tree = lt["tree_edges"] = ordered_json::array();
            for (auto [u, v] : gen.light_tree->tree_edges) tree.push_back({u, v});
            lt["non_tree_edge"] = {gen.light_tree->non_tree_edge.first,
                                   gen.light_tree->non_tree_edge.second};
            lt["fundamental_cycle_length"] = gen.light_tree->fundamental_cycle_length;
        }
        std::ofstream out(a.meta_path);
        if (!out) throw Error("cannot write metadata '" + a.meta_path + "'");
        out << meta.dump(2) << "\n";
    }
    return kExitOk;
}

struct BenchArgs {
    std::string suite;
    std::string out_dir = ".";
};

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& lines) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << header << "\n";
    for (const auto& line : lines) out << line << "\n";
    std::cout << "wrote " << path << "\n";
}

int run_bench(const BenchArgs& a) {
    namespace fs = std::filesystem;
    fs::create_directories(a.out_dir);
    const std::string dir = a.out_dir + "/";

    if (a.suite == "grids" || a.suite == "all") {
        std::vector<std::string> lines;
        for (int d = 3; d <= 12; ++d) {
            GraphSpec spec;
            spec.kind = GraphKind::Grid;
            spec.a = d;
            WeightedGraph g = generate(spec);
            MwcResult mine = find_mwc(g);
            MwcResult base = rooted_girth(g);
            lines.push_back(std::to_string(d) + "," + std::to_string(mine.stats.argmin_extractions) +
                            "," + std::to_string(base.stats.argmin_extractions));
        }
        write_csv(dir + "grids.csv", "d,ops_alg1,ops_rooted", lines);
    }
    if (a.suite == "ffactor" || a.suite == "all") {
        const std::vector<std::pair<std::string, std::string>> models = {
            {"er", "er:200:0.05:seed=1"},
            {"ba", "ba:200:2:seed=1"},
            {"ws", "ws:200:4:0.1:seed=1"},
            {"k", "complete:20"},
        };
        for (const auto& [name, spec_text] : models) {
            WeightedGraph g = generate(parse_graph_spec(spec_text));
            FFactorCurve curve = f_factor_simulation(g);
            std::vector<std::string> lines;
            for (size_t k = 0; k < curve.fractions.size(); ++k)
                lines.push_back(std::to_string(k) + "," + format_double(curve.fractions[k]));
            write_csv(dir + "ffactor_" + name + ".csv", "k,fraction", lines);
        }
    }
    if (a.suite == "light-tree" || a.suite == "all") {
        std::vector<std::string> lines;
        for (int seed = 1; seed <= 10; ++seed) {
            GraphSpec spec = parse_graph_spec("light-tree:50:seed=" + std::to_string(seed));
            WeightedGraph g = generate(spec);
            MwcResult mine = find_mwc(g);
            MwcResult base = rooted_girth(g);
            lines.push_back(std::to_string(seed) + "," +
                            std::to_string(mine.stats.argmin_extractions) + "," +
                            std::to_string(base.stats.argmin_extractions));
        }
        write_csv(dir + "light_tree.csv", "seed,ops_alg1,ops_rooted", lines);
    }
    if (a.suite != "grids" && a.suite != "ffactor" && a.suite != "light-tree" && a.suite != "all")
        throw Error("unknown bench suite '" + a.suite + "' (grids, ffactor, light-tree, all)");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum weight cycle and loop modulus toolkit"};
    app.require_subcommand(1);

    GirthArgs girth;
    CLI::App* girth_cmd = app.add_subcommand("girth", "minimum weight cycle (weighted girth)");
    add_input_flags(girth_cmd, girth.in);
    girth_cmd->add_flag("--discarding,!--no-discarding", girth.discarding,
                        "provably safe vertex discarding (default on)");
    girth_cmd->add_flag("--prune", girth.prune, "locality pruning heuristic");
    girth_cmd->add_option("--prune-dist", girth.prune_dist, "pruning hop radius");
    girth_cmd->add_option("--prune-interval", girth.prune_interval, "steps between full resets");
    girth_cmd->add_option("--prune-min-frac", girth.prune_min_frac, "minimum view fraction");
    girth_cmd->add_option("--order", girth.order, "root order: id or degree-desc")
        ->check(CLI::IsMember({"id", "degree-desc"}));
    girth_cmd->add_flag("--witness", girth.witness, "print the cycle itself");
    girth_cmd->add_flag("--require-cycle", girth.require_cycle, "exit 2 when the graph is a forest");
    girth_cmd->add_option("--compare", girth.compare, "also run a baseline: rooted");
    girth_cmd->add_option("--report", girth.report_path, "write a JSON run report");

    ModulusArgs modulus;
    CLI::App* modulus_cmd = app.add_subcommand("modulus", "p=2 loop modulus");
    add_input_flags(modulus_cmd, modulus.in);
    modulus_cmd->add_option("--epsilon", modulus.epsilon, "violation tolerance");
    modulus_cmd->add_option("--max-iters", modulus.max_iters, "iteration cap (0: 10|V|)");
    modulus_cmd->add_option("--init-target", modulus.init_target,
                            "initial constraint target (0: min(|E|/3, 50))");
    modulus_cmd->add_option("--cycles-per-iter", modulus.cycles_per_iter,
                            "violated cycles added per iteration");
    modulus_cmd->add_flag("--no-prune", modulus.no_prune, "disable the pruning heuristic");
    bool prune_noop = false; // pruning is already modulus's default; kept for symmetry
    modulus_cmd->add_flag("--prune", prune_noop, "pruning heuristic (default on)");
    modulus_cmd->add_option("--prune-dist", modulus.prune_dist, "pruning hop radius");
    modulus_cmd->add_option("--prune-interval", modulus.prune_interval, "steps between full resets");
    modulus_cmd->add_option("--prune-min-frac", modulus.prune_min_frac, "minimum view fraction");
    modulus_cmd->add_option("--qp-tol", modulus.qp_tol, "QP solver tolerance");
    modulus_cmd->add_option("--report", modulus.report_path, "write a JSON run report");

    GenArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a benchmark graph");
    gen_cmd->add_option("spec", gen.spec, "generator spec, e.g. grid:4 or light-tree:50:seed=9")
        ->required();
    gen_cmd->add_option("-o,--out", gen.out_path, "output path (default stdout)");
    gen_cmd->add_option("--meta", gen.meta_path, "write generator metadata JSON");
    gen_cmd->add_flag("--json", gen.json, "emit the JSON graph format");
    gen_cmd->add_flag("--strict", gen.strict, "require explicit seed= on randomized specs");

    BenchArgs bench;
    CLI::App* bench_cmd = app.add_subcommand("bench", "run a benchmark suite, write CSVs");
    bench_cmd->add_option("suite", bench.suite, "grids | ffactor | light-tree | all")->required();
    bench_cmd->add_option("-o,--out", bench.out_dir, "output directory (default .)");

    try {
        app.parse(argc, argv);
        if (girth_cmd->parsed()) return run_girth(girth);
        if (modulus_cmd->parsed()) return run_modulus(modulus);
        if (gen_cmd->parsed()) return run_gen(gen);
        if (bench_cmd->parsed()) return run_bench(bench);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitOk;
}
