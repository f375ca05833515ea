#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#include "graphcurv/generators.hpp"
#include "graphcurv/json_io.hpp"

#include "fixtures.hpp"

using namespace graphcurv;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("GRAPHCURV_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string tmp_file(const std::string& name) { return "/tmp/graphcurv_test_" + name; }

}  // namespace

TEST_CASE("generate then analyze a theta graph") {
    std::string path = tmp_file("theta.json");
    RunResult gen = run_cli("generate theta --variant pl_minimal -o " + path);
    CHECK(gen.exit_code == 0);

    RunResult curv = run_cli("curvature " + path + " --json");
    CHECK(curv.exit_code == 0);
    json j = json::parse(curv.out);
    CHECK(j.at("K_total").get<double>() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(j.at("b1").get<int>() == 2);
    CHECK(j.at("tight").get<bool>());
}

TEST_CASE("morse subcommand reports the direction analysis") {
    std::string path = tmp_file("theta2.json");
    run_cli("generate theta --variant pl_minimal -o " + path);

    RunResult ok = run_cli("morse " + path + " --dir 0,1,0");
    CHECK(ok.exit_code == 0);
    json j = json::parse(ok.out);
    CHECK(j.at("w").get<int>() == 3);
    CHECK(j.at("M")[0].get<int>() == 1);
    CHECK(j.at("M")[1].get<int>() == 2);
    CHECK(j.at("chi_check").get<int>() == -1);

    // Perpendicular to the graph plane: degenerate, exit code 3.
    RunResult bad = run_cli("morse " + path + " --dir 0,0,1");
    CHECK(bad.exit_code == 3);
}

TEST_CASE("scan is byte-identical across runs and thread counts") {
    std::string path = tmp_file("meridian.json");
    run_cli("generate meridian --n 5 --m 24 -o " + path);
    RunResult a = run_cli("scan " + path + " --samples 4000 --seed 7 --threads 1");
    RunResult b = run_cli("scan " + path + " --samples 4000 --seed 7 --threads 1");
    RunResult c = run_cli("scan " + path + " --samples 4000 --seed 7 --threads 2");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    json j = json::parse(a.out);
    CHECK(j.at("samples").get<int>() == 4000);
}

TEST_CASE("tightness and link subcommands") {
    std::string path = tmp_file("square.json");
    save_graph(fixtures::unit_square(), path);
    RunResult t = run_cli("tightness " + path + " --probes 500");
    CHECK(t.exit_code == 0);
    json j = json::parse(t.out);
    CHECK(j.at("classification").get<std::string>() == "TypeS");
    CHECK(j.at("tpp_probes_passed").get<int>() == 500);

    // Two squares joined by a bridge: the basis cycles are disjoint.
    SpatialGraph two = fixtures::unit_square();
    for (int k = 0; k < 4; ++k) {
        Point3 p{(k == 1 || k == 2) ? 11.0 : 10.0, (k >= 2) ? 1.0 : 0.0, 3.0};
        two.vertices[4 + k] = p;
    }
    for (int k = 0; k < 4; ++k)
        two.edges.push_back(fixtures::straight_edge(4 + k, 4 + k, 4 + (k + 1) % 4,
                                                    two.vertices[4 + k],
                                                    two.vertices[4 + (k + 1) % 4]));
    two.edges.push_back(fixtures::straight_edge(8, 1, 4, two.vertices[1], two.vertices[4]));
    std::string path2 = tmp_file("twosquares.json");
    save_graph(two, path2);
    RunResult lk = run_cli("link " + path2 + " --cycles 0,1");
    CHECK(lk.exit_code == 0);
    CHECK(json::parse(lk.out).at("linking_number").get<int>() == 0);
}

TEST_CASE("report prints the combined summary") {
    std::string path = tmp_file("square2.json");
    save_graph(fixtures::unit_square(), path);
    RunResult r = run_cli("report " + path + " --samples 2000 --probes 200");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("chern-lashof gap") != std::string::npos);
    json j = json::parse(r.out.substr(0, r.out.find("--- summary ---")));
    CHECK(j.at("chern_lashof_gap").get<double>() == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("exit codes for bad input") {
    // Unknown flag.
    CHECK(run_cli("curvature foo.json --no-such-flag").exit_code == 64);
    // Missing / malformed file.
    CHECK(run_cli("curvature /tmp/graphcurv_missing.json").exit_code == 2);
    std::string garbled = tmp_file("garbled.json");
    {
        std::ofstream out(garbled);
        out << "{not json";
    }
    CHECK(run_cli("curvature " + garbled).exit_code == 2);
    // Structurally invalid graph (loop edge).
    std::string loop = tmp_file("loop.json");
    {
        std::ofstream out(loop);
        out << R"({"vertices":[{"id":0,"pos":[0,0,0]},{"id":1,"pos":[1,0,0]}],
                  "edges":[{"id":0,"ends":[0,0],"polyline":[[0,0,0],[0.5,1,0],[0,0,0]]}]})";
    }
    CHECK(run_cli("curvature " + loop).exit_code == 2);
}

TEST_CASE("graph json round-trips exactly") {
    for (const SpatialGraph& g : {fixtures::unit_square(), make_hopf_gamma_eps(0.3, 32),
                                  make_surgered_figure_eight(10.0, 64)}) {
        json j = graph_to_json(g);
        SpatialGraph back = graph_from_json(j);
        CHECK(graph_to_json(back) == j);
        CHECK(back.vertices.size() == g.vertices.size());
        CHECK(back.edges.size() == g.edges.size());
        for (size_t i = 0; i < g.edges.size(); ++i) {
            CHECK(back.edges[i].polyline.size() == g.edges[i].polyline.size());
            for (size_t k = 0; k < g.edges[i].polyline.size(); ++k)
                CHECK(back.edges[i].polyline[k] == g.edges[i].polyline[k]);
        }
    }
}

TEST_CASE("report json round-trips") {
    CurvatureReport r = total_curvature(make_theta_graph(ThetaVariant::pl_minimal));
    json j = to_json(r);
    json j2 = json::parse(j.dump());
    CHECK(j2 == j);
    CHECK(j2.at("K_total").get<double>() == r.K_total);  // 17-digit round trip
}
