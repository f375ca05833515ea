#include "graphcurv/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace graphcurv {

using nlohmann::json;

namespace {

json point_json(const Point3& p) { return json::array({p.x, p.y, p.z}); }

Point3 point_from(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::runtime_error("malformed coordinate triple");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

json graph_to_json(const SpatialGraph& g) {
    json jv = json::array();
    for (const auto& [vid, p] : g.vertices) jv.push_back({{"id", vid}, {"pos", point_json(p)}});
    json je = json::array();
    for (const auto& e : g.edges) {
        json pl = json::array();
        for (const auto& p : e.polyline) pl.push_back(point_json(p));
        je.push_back({{"id", e.id}, {"ends", {e.ends[0], e.ends[1]}}, {"polyline", pl}});
    }
    return {{"vertices", jv}, {"edges", je}};
}

SpatialGraph graph_from_json(const json& j) {
    SpatialGraph g;
    if (!j.contains("vertices") || !j.contains("edges"))
        throw std::runtime_error("missing vertices/edges");
    for (const auto& v : j.at("vertices"))
        g.vertices[v.at("id").get<VertexId>()] = point_from(v.at("pos"));
    for (const auto& ej : j.at("edges")) {
        Edge e;
        e.id = ej.at("id").get<EdgeId>();
        e.ends = {ej.at("ends").at(0).get<VertexId>(), ej.at("ends").at(1).get<VertexId>()};
        for (const auto& p : ej.at("polyline")) e.polyline.push_back(point_from(p));
        g.edges.push_back(std::move(e));
    }
    return g;
}

SpatialGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return graph_from_json(j);
}

void save_graph(const SpatialGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << graph_to_json(g).dump(2) << "\n";
}

json to_json(const CurvatureReport& r) {
    json pe = json::object();
    for (const auto& [eid, k] : r.per_edge) pe[std::to_string(eid)] = k;
    json pv = json::object();
    for (const auto& [vid, s] : r.per_vertex) pv[std::to_string(vid)] = s;
    return {{"per_edge", pe},
            {"per_vertex", pv},
            {"chi", r.chi},
            {"b1", r.b1},
            {"K_total", r.K_total},
            {"crookedness_mu", r.crookedness_mu},
            {"taniyama_T1_over_pi", r.taniyama_T1_over_pi},
            {"tight", r.tight},
            {"tight_tol", r.tight_tol}};
}

json to_json(const MorseReport& r) {
    json crit = json::array();
    for (const auto& c : r.criticals) {
        json loc;
        if (c.location.kind == PointRef::Kind::vertex)
            loc = {{"vertex", c.location.vertex}};
        else
            loc = {{"edge", c.location.edge}, {"joint", c.location.joint}};
        const char* kind = c.kind == CriticalPoint::Kind::local_min ? "local_min"
                           : c.kind == CriticalPoint::Kind::other   ? "other"
                                                                    : "regular";
        crit.push_back({{"location", loc},
                        {"height", c.height},
                        {"d_minus", c.d_minus},
                        {"d_plus", c.d_plus},
                        {"kind", kind},
                        {"weight", c.weight()},
                        {"morse_poly", {c.morse_poly[0], c.morse_poly[1]}}});
    }
    return {{"direction", {r.direction.x, r.direction.y, r.direction.z}},
            {"criticals", crit},
            {"M", {r.M[0], r.M[1]}},
            {"w", r.w},
            {"mu", r.mu},
            {"chi_check", r.chi_check}};
}

json to_json(const EstimateReport& r) {
    return {{"samples", r.samples},
            {"rejected_degenerate", r.rejected_degenerate},
            {"K_hat", r.K_hat},
            {"mu_hat", r.mu_hat},
            {"T_hat_over_pi", r.T_hat_over_pi},
            {"std_errors", {{"K", r.K_se}, {"mu", r.mu_se}, {"T", r.T_se}}},
            {"seed", r.seed},
            {"max_weight_seen", r.max_weight_seen}};
}

json to_json(const TightnessVerdict& v) {
    json out = {{"tight_by_formula", v.tight_by_formula},
                {"formula_residual", v.formula_residual},
                {"tpp_probes_passed", v.tpp_passed},
                {"tpp_probes_total", v.tpp_total},
                {"classification", to_string(v.classification)}};
    if (v.type_s) {
        json he = json::array();
        for (auto [a, b] : v.type_s->hull_edges) he.push_back({a, b});
        out["type_s"] = {{"hull_corners", v.type_s->hull_corners},
                         {"hull_edges", he},
                         {"interior_vertices", v.type_s->interior_vertices}};
    }
    if (v.type_c) {
        out["type_c"] = {{"boundary_cycle", v.type_c->boundary_cycle},
                         {"plane_normal",
                          {v.type_c->plane_normal.x, v.type_c->plane_normal.y,
                           v.type_c->plane_normal.z}},
                         {"face_count", v.type_c->face_count},
                         {"convex_faces", v.type_c->convex_faces}};
    }
    out["curvature"] = to_json(v.curvature);
    return out;
}

}  // namespace graphcurv
