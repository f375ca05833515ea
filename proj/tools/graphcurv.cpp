#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "graphcurv/estimators.hpp"
#include "graphcurv/generators.hpp"
#include "graphcurv/json_io.hpp"
#include "graphcurv/morse.hpp"
#include "graphcurv/tightness.hpp"
#include "graphcurv/topology.hpp"

namespace {

using namespace graphcurv;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitUsage = 64;

int resolve_threads(int flag_value) {
    if (const char* env = std::getenv("GRAPHCURV_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return flag_value;
}

SpatialGraph load_validated(const std::string& path) {
    SpatialGraph g = load_graph(path);
    auto bad = validate(g);
    if (!bad.empty()) {
        for (const auto& v : bad)
            std::cerr << "validation: " << v.rule << ": " << v.detail << "\n";
        throw std::runtime_error("graph failed validation");
    }
    return g;
}

Vec3 parse_direction(const std::string& s) {
    Vec3 u;
    if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &u.x, &u.y, &u.z) != 3)
        throw CLI::ValidationError("--dir expects x,y,z");
    if (norm(u) == 0.0) throw CLI::ValidationError("--dir must be nonzero");
    return normalized(u);
}

void print_curvature_text(const CurvatureReport& r) {
    std::cout << "chi = " << r.chi << ", b1 = " << r.b1 << "\n";
    std::cout << "K_total = " << r.K_total << "\n";
    std::cout << "crookedness_mu = " << r.crookedness_mu << "\n";
    std::cout << "taniyama_T1_over_pi = " << r.taniyama_T1_over_pi << "\n";
    std::cout << "tight = " << (r.tight ? "true" : "false") << " (|K-(1+b1)| tol "
              << r.tight_tol << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"total curvature, crookedness and tightness of embedded spatial graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // subcommands pass --threads up to the main app
    int threads = 0;    // 0: use hardware concurrency
    app.add_option("--threads", threads, "worker threads (0 = auto)");

    std::string out_path, file, variant = "pl_minimal", word_csv, cycles_csv = "0,1",
                dir_csv = "0,0,1";
    int n = 4, m = 64, samples = 20000, probes = 1000;
    double radius = 1.0, eps = 0.1, slope = 10.0, helix_a = 1.0, helix_b = 1.0, turns = 1.0;
    std::uint64_t seed = 1;
    bool as_json = false;

    auto* gen = app.add_subcommand("generate", "write a catalog graph to a JSON file");
    std::string family;
    gen->add_option("family", family,
                    "polygon | theta | suspension | meridian | helix | figure8 | hopf")
        ->required();
    gen->add_option("-o,--output", out_path, "output file")->required();
    gen->add_option("--n", n, "polygon sides / suspension arity / meridian count");
    gen->add_option("--m", m, "segments per sampled arc");
    gen->add_option("--radius", radius, "polygon radius");
    gen->add_option("--variant", variant, "theta: pl_minimal | sampled; suspension: planar | braided");
    gen->add_option("--word", word_csv, "braid word, comma-separated signed letters");
    gen->add_option("--eps", eps, "crookedness budget for the hopf family");
    gen->add_option("--slope", slope, "helix slope for figure8");
    gen->add_option("--a", helix_a, "helix radius");
    gen->add_option("--b", helix_b, "helix pitch parameter");
    gen->add_option("--turns", turns, "helix turns");

    auto* curv = app.add_subcommand("curvature", "closed-form curvature report");
    curv->add_option("file", file)->required();
    curv->add_flag("--json", as_json, "emit JSON");

    auto* morse = app.add_subcommand("morse", "per-direction stratified analysis");
    morse->add_option("file", file)->required();
    morse->add_option("--dir", dir_csv, "direction x,y,z")->required();

    auto* scan = app.add_subcommand("scan", "Monte Carlo sphere averages");
    scan->add_option("file", file)->required();
    scan->add_option("--samples", samples, "number of direction samples");
    scan->add_option("--seed", seed, "random seed");

    auto* tight = app.add_subcommand("tightness", "tightness verdict with evidence");
    tight->add_option("file", file)->required();
    tight->add_option("--probes", probes, "two-piece-property probes");
    tight->add_option("--seed", seed, "random seed");

    auto* link = app.add_subcommand("link", "linking number of two basis cycles");
    link->add_option("file", file)->required();
    link->add_option("--cycles", cycles_csv, "pair of cycle-basis indices i,j");
    link->add_option("--seed", seed, "random seed");

    auto* rep = app.add_subcommand("report", "combined summary");
    rep->add_option("file", file)->required();
    rep->add_option("--samples", samples, "scan samples");
    rep->add_option("--probes", probes, "tightness probes");
    rep->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    threads = resolve_threads(threads);

    try {
        if (gen->parsed()) {
            SpatialGraph g;
            if (family == "polygon") {
                g = make_convex_polygon(n, radius);
            } else if (family == "theta") {
                g = make_theta_graph(variant == "sampled" ? ThetaVariant::sampled
                                                          : ThetaVariant::pl_minimal,
                                     m);
            } else if (family == "suspension") {
                if (variant == "braided") {
                    std::vector<int> word;
                    std::stringstream ss(word_csv);
                    std::string tok;
                    while (std::getline(ss, tok, ','))
                        if (!tok.empty()) word.push_back(std::stoi(tok));
                    g = make_suspension_braided(n, word, m);
                } else {
                    g = make_suspension_planar(n, m);
                }
            } else if (family == "meridian") {
                g = make_meridian_graph(n, m);
            } else if (family == "helix") {
                Edge e = make_helix_arc(helix_a, helix_b, turns, m);
                g.vertices[0] = e.polyline.front();
                g.vertices[1] = e.polyline.back();
                g.edges.push_back(e);
            } else if (family == "figure8") {
                g = make_surgered_figure_eight(slope, m);
            } else if (family == "hopf") {
                g = make_hopf_gamma_eps(eps, m);
            } else {
                std::cerr << "unknown family: " << family << "\n";
                return kExitUsage;
            }
            auto bad = validate(g);
            if (!bad.empty()) {
                for (const auto& v : bad) std::cerr << v.rule << ": " << v.detail << "\n";
                return kExitValidation;
            }
            save_graph(g, out_path);
            std::cout << "wrote " << out_path << "\n";
        } else if (curv->parsed()) {
            CurvatureReport r = total_curvature(load_validated(file));
            if (as_json)
                std::cout << to_json(r).dump(2) << "\n";
            else
                print_curvature_text(r);
        } else if (morse->parsed()) {
            SpatialGraph g = load_validated(file);
            Vec3 u = parse_direction(dir_csv);
            try {
                std::cout << to_json(analyze_direction(g, u)).dump(2) << "\n";
            } catch (const DegenerateDirection& e) {
                std::cerr << e.what() << " (perturb the direction slightly)\n";
                return kExitDegenerate;
            }
        } else if (scan->parsed()) {
            EstimateReport r = estimate(load_validated(file), samples, seed, threads);
            std::cout << to_json(r).dump(2) << "\n";
        } else if (tight->parsed()) {
            TightnessVerdict v = verdict(load_validated(file), probes, seed, threads);
            std::cout << to_json(v).dump(2) << "\n";
        } else if (link->parsed()) {
            SpatialGraph g = load_validated(file);
            int ci = 0, cj = 1;
            if (std::sscanf(cycles_csv.c_str(), "%d,%d", &ci, &cj) != 2) {
                std::cerr << "--cycles expects i,j\n";
                return kExitUsage;
            }
            auto basis = cycle_basis(g);
            if (ci < 0 || cj < 0 || ci >= static_cast<int>(basis.size()) ||
                cj >= static_cast<int>(basis.size())) {
                std::cerr << "cycle index out of range (basis size " << basis.size() << ")\n";
                return kExitValidation;
            }
            int lk = linking_number(basis[ci], basis[cj], seed);
            std::cout << "{\"linking_number\": " << lk << "}\n";
        } else if (rep->parsed()) {
            SpatialGraph g = load_validated(file);
            CurvatureReport c = total_curvature(g);
            EstimateReport e = estimate(g, samples, seed, threads);
            TightnessVerdict v = verdict(g, probes, seed, threads);
            nlohmann::json j = {{"curvature", to_json(c)},
                                {"estimate", to_json(e)},
                                {"tightness", to_json(v)},
                                {"chern_lashof_gap", c.K_total - (1.0 + c.b1)}};
            std::cout << j.dump(2) << "\n";
            std::cout << "--- summary ---\n";
            print_curvature_text(c);
            std::cout << "K_hat = " << e.K_hat << " +- " << e.K_se << " (" << e.samples
                      << " samples)\n";
            std::cout << "classification = " << to_string(v.classification) << "\n";
            std::cout << "chern-lashof gap K - (1+b1) = " << c.K_total - (1.0 + c.b1) << "\n";
        }
    } catch (const DegenerateDirection& e) {
        std::cerr << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
