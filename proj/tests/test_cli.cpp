#include <doctest.h>

#include <json.hpp>

#include "cyclekit/generate.hpp"
#include "cyclekit/io.hpp"
#include "support/cli_runner.hpp"
#include "support/test_graphs.hpp"

using namespace cyclekit;
using namespace testsupport;
using nlohmann::json;

TEST_CASE("girth on a generated grid prints gamma = 6") {
    auto res = run_cli("girth --gen grid:5");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("gamma = 6\n") != std::string::npos);
}

TEST_CASE("girth prints the witness cycle for a triangle file") {
    auto graph_path = scratch_file("triangle.txt");
    std::ofstream(graph_path) << "0 1 1.0\n1 2 1.0\n2 0 1.0\n";
    auto res = run_cli("girth " + graph_path.string() + " --witness");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("gamma = 3\n") != std::string::npos);
    CHECK(res.output.find("cycle: 0 1 2\n") != std::string::npos);
}

TEST_CASE("girth comparison reports both methods and the op ratio") {
    auto report_path = scratch_file("girth-report.json");
    auto res = run_cli("girth --gen er:100:0.05:seed=3 --compare rooted --report " +
                       report_path.string());
    CHECK(res.exit_code == 0);
    json report = json::parse(slurp(report_path));
    CHECK(report["result"]["gamma"] == report["comparison"]["rooted_gamma"]);
    CHECK(report["comparison"]["alg1_argmin"].get<std::uint64_t>() > 0);
    CHECK(report["comparison"]["rooted_argmin"].get<std::uint64_t>() > 0);
}

TEST_CASE("run reports are deterministic apart from the wall time") {
    auto r1 = scratch_file("rep1.json");
    auto r2 = scratch_file("rep2.json");
    CHECK(run_cli("girth --gen er:60:0.1:seed=9 --report " + r1.string()).exit_code == 0);
    CHECK(run_cli("girth --gen er:60:0.1:seed=9 --report " + r2.string()).exit_code == 0);
    json a = json::parse(slurp(r1));
    json b = json::parse(slurp(r2));
    a.erase("wall_time_s");
    b.erase("wall_time_s");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("modulus of a 5-cycle") {
    auto report_path = scratch_file("mod-report.json");
    auto res = run_cli("modulus --gen cycle:5 --report " + report_path.string());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("modulus = 0.2") != std::string::npos);
    CHECK(res.output.find("constraints = 1") != std::string::npos);
    json report = json::parse(slurp(report_path));
    CHECK(report["result"]["converged"] == true);
    CHECK(report["result"]["qp_solves"] == 1);
    CHECK(report["result"]["rho"].size() == 5);
}

TEST_CASE("modulus agrees between pruned and unpruned runs") {
    auto g = scratch_file("grid3.txt");
    std::ofstream out(g);
    save_graph(out, generate(parse_graph_spec("grid:3")), GraphFormat::EdgeList);
    out.close();
    auto r1 = scratch_file("mp1.json");
    auto r2 = scratch_file("mp2.json");
    CHECK(run_cli("modulus " + g.string() + " --prune --report " + r1.string()).exit_code == 0);
    CHECK(run_cli("modulus " + g.string() + " --no-prune --report " + r2.string()).exit_code == 0);
    const double m1 = json::parse(slurp(r1))["result"]["modulus"].get<double>();
    const double m2 = json::parse(slurp(r2))["result"]["modulus"].get<double>();
    CHECK(std::abs(m1 - m2) <= 1e-7);
}

TEST_CASE("gen round-trips through a file") {
    auto path = scratch_file("grid4.txt");
    CHECK(run_cli("gen grid:4 -o " + path.string()).exit_code == 0);
    WeightedGraph loaded = load_graph_file(path.string(), GraphFormat::EdgeList);
    CHECK(loaded == generate(parse_graph_spec("grid:4")));
}

TEST_CASE("gen cycle:6 emits six unit-weight lines") {
    auto res = run_cli("gen cycle:6");
    CHECK(res.exit_code == 0);
    int lines = 0;
    std::istringstream in(res.output);
    std::string line;
    while (std::getline(in, line)) {
        ++lines;
        CHECK(line.substr(line.size() - 2) == " 1");
    }
    CHECK(lines == 6);
}

TEST_CASE("gen writes light-tree metadata sidecars") {
    auto graph_path = scratch_file("lt.txt");
    auto meta_path = scratch_file("lt-meta.json");
    CHECK(run_cli("gen light-tree:50:seed=9 -o " + graph_path.string() + " --meta " +
                  meta_path.string())
              .exit_code == 0);
    json meta = json::parse(slurp(meta_path));
    CHECK(meta["light_tree"]["tree_edges"].size() == 49);
    CHECK(meta["light_tree"]["non_tree_edge"].size() == 2);
    const double expected = meta["light_tree"]["fundamental_cycle_length"].get<double>();

    auto report_path = scratch_file("lt-girth.json");
    CHECK(run_cli("girth " + graph_path.string() + " --report " + report_path.string())
              .exit_code == 0);
    CHECK(json::parse(slurp(report_path))["result"]["gamma"].get<double>() == expected);
}

TEST_CASE("bench grids writes the op-count table") {
    auto dir = scratch_file("benchdir");
    auto res = run_cli("bench grids -o " + dir.string());
    CHECK(res.exit_code == 0);
    std::string csv = slurp(dir / "grids.csv");
    CHECK(csv.find("d,ops_alg1,ops_rooted") == 0);
    int rows = -1; // header
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 10);
}

TEST_CASE("bench light-tree never does worse than the rooted baseline") {
    auto dir = scratch_file("benchlt");
    CHECK(run_cli("bench light-tree -o " + dir.string()).exit_code == 0);
    std::istringstream in(slurp(dir / "light_tree.csv"));
    std::string line;
    std::getline(in, line); // header
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::istringstream fields(line);
        std::string seed, alg1, rooted;
        std::getline(fields, seed, ',');
        std::getline(fields, alg1, ',');
        std::getline(fields, rooted, ',');
        CHECK(std::stoull(alg1) <= std::stoull(rooted));
    }
    CHECK(rows == 10);
}

TEST_CASE("documented exit codes fire") {
    CHECK(run_cli("girth /nonexistent/missing.txt").exit_code == 1);

    auto bad = scratch_file("bad.txt");
    std::ofstream(bad) << "3 3 2.0\n";
    CHECK(run_cli("girth " + bad.string()).exit_code == 1);

    auto forest = scratch_file("forest.txt");
    std::ofstream(forest) << "0 1 1.0\n1 2 1.0\n";
    CHECK(run_cli("girth " + forest.string()).exit_code == 0);
    CHECK(run_cli("girth " + forest.string() + " --require-cycle").exit_code == 2);

    CHECK(run_cli("modulus --gen grid:5 --max-iters 1 --init-target 1 --cycles-per-iter 1")
              .exit_code == 3);

    CHECK(run_cli("bench nosuchsuite").exit_code == 1);
    CHECK(run_cli("girth --gen er:30:0.2 --strict").exit_code == 1);
    CHECK(run_cli("girth --gen er:30:0.2:seed=4 --strict").exit_code == 0);
}
