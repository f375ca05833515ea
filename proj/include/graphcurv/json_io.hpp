#pragma once

#include <string>

#include "json.hpp"

#include "graphcurv/curvature.hpp"
#include "graphcurv/estimators.hpp"
#include "graphcurv/graph.hpp"
#include "graphcurv/morse.hpp"
#include "graphcurv/tightness.hpp"

namespace graphcurv {

// Interchange format:
// {"vertices":[{"id":..,"pos":[x,y,z]}...],
//  "edges":[{"id":..,"ends":[v1,v2],"polyline":[[x,y,z],...]}...]}
nlohmann::json graph_to_json(const SpatialGraph& g);
SpatialGraph graph_from_json(const nlohmann::json& j);

SpatialGraph load_graph(const std::string& path);
void save_graph(const SpatialGraph& g, const std::string& path);

nlohmann::json to_json(const CurvatureReport& r);
nlohmann::json to_json(const MorseReport& r);
nlohmann::json to_json(const EstimateReport& r);
nlohmann::json to_json(const TightnessVerdict& v);

}  // namespace graphcurv
