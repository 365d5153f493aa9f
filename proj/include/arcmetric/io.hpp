#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "arcmetric/asymptotics.hpp"
#include "arcmetric/geometry.hpp"
#include "arcmetric/lamination.hpp"
#include "arcmetric/metric.hpp"
#include "arcmetric/topology.hpp"

namespace arcmetric::io {

using nlohmann::json;

/// {"signature": {...}, "decomposition": {...}, "panel": {"N": n, "entries": [...]}}
json surface_json(const Surface& s, int panel_complexity);

/// {curve-id: {"length", "twist"}, boundary-id: length}; the double lists all
/// its curves as {"length", "twist"} under the labels C, B, Cbar.
json fn_json(const Surface& s, const FNPoint& x);
FNPoint fn_from_json(const Surface& s, const json& j, const std::string& field = "point");

/// [{"class": id, "weight": w}, ...]
json lamination_json(const RationalLamination& mu);
RationalLamination lamination_from_json(const Surface& s, const json& j,
                                        const std::string& field = "lamination");

/// {curve-id: [i, theta], boundary-id: theta_hat}
json dt_json(const Surface& s, const DTCoordinates& c);

/// {"value", "maximizer", "panel_N"}
json metric_json(const MetricValue& v);

/// Typed access that reports the dotted field path on failure.
double number_at(const json& j, const std::string& field);
int integer_at(const json& j, const std::string& field);
const json& member(const json& j, const std::string& key, const std::string& field);

SurfaceSignature signature_from_json(const json& j, const std::string& field = "surface");
std::vector<double> grid_from_json(const json& j, const std::string& field = "grid");

/// Parses text, reporting syntax errors with line and column.
json parse(const std::string& text, const std::string& source);
json read_file(const std::string& path);

/// Nine significant digits, as used in every CSV table.
std::string csv_number(double v);

}  // namespace arcmetric::io
