#include "arcmetric/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "arcmetric/errors.hpp"

namespace arcmetric::io {

double number_at(const json& j, const std::string& field) {
  if (!j.is_number()) throw SchemaError(field, "expected a number");
  return j.get<double>();
}

int integer_at(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw SchemaError(field, "expected an integer");
  return j.get<int>();
}

const json& member(const json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) throw SchemaError(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(field + "." + key, "missing field");
  return *it;
}

json surface_json(const Surface& s, int panel_complexity) {
  const auto& sig = s.signature();
  const auto& d = s.decomposition();
  json pants = json::array();
  for (const auto& p : d.pants)
    pants.push_back({d.label(p.sides[0]), d.label(p.sides[1]), d.label(p.sides[2])});
  json entries = json::array();
  for (const auto& c : s.panel(panel_complexity).entries) entries.push_back(c.id);
  return {{"signature",
           {{"genus", sig.genus}, {"punctures", sig.punctures}, {"boundaries", sig.boundaries}}},
          {"decomposition",
           {{"interior", d.interior_labels},
            {"boundary", d.boundary_labels},
            {"punctures", d.puncture_labels},
            {"pants", pants}}},
          {"panel", {{"N", panel_complexity}, {"entries", entries}}}};
}

json fn_json(const Surface& s, const FNPoint& x) {
  json out = json::object();
  if (x.doubled) {
    const auto d = double_topology(s);
    for (std::size_t k = 0; k < d.decomposition.interior_labels.size(); ++k) {
      const auto i = static_cast<Eigen::Index>(k);
      out[d.decomposition.interior_labels[k]] = {{"length", x.lengths[i]}, {"twist", x.twists[i]}};
    }
    return out;
  }
  const auto& d = s.decomposition();
  for (std::size_t k = 0; k < d.interior_labels.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    out[d.interior_labels[k]] = {{"length", x.lengths[i]}, {"twist", x.twists[i]}};
  }
  for (std::size_t j = 0; j < d.boundary_labels.size(); ++j)
    out[d.boundary_labels[j]] = x.boundary_lengths[static_cast<Eigen::Index>(j)];
  return out;
}

FNPoint fn_from_json(const Surface& s, const json& j, const std::string& field) {
  if (!j.is_object()) throw SchemaError(field, "expected an object of FN coordinates");
  const auto& d = s.decomposition();
  Eigen::VectorXd l(d.interior_labels.size()), t(d.interior_labels.size()),
      b(d.boundary_labels.size());
  for (std::size_t k = 0; k < d.interior_labels.size(); ++k) {
    const std::string f = field + "." + d.interior_labels[k];
    const json& c = member(j, d.interior_labels[k], field);
    const auto i = static_cast<Eigen::Index>(k);
    l[i] = number_at(member(c, "length", f), f + ".length");
    t[i] = c.contains("twist") ? number_at(c["twist"], f + ".twist") : 0.0;
  }
  for (std::size_t k = 0; k < d.boundary_labels.size(); ++k)
    b[static_cast<Eigen::Index>(k)] =
        number_at(member(j, d.boundary_labels[k], field), field + "." + d.boundary_labels[k]);
  for (const auto& [key, value] : j.items()) {
    const bool known =
        std::find(d.interior_labels.begin(), d.interior_labels.end(), key) != d.interior_labels.end() ||
        std::find(d.boundary_labels.begin(), d.boundary_labels.end(), key) != d.boundary_labels.end();
    if (!known) throw SchemaError(field + "." + key, "unknown curve label");
  }
  return FNPoint::make(s, l, t, b);
}

json lamination_json(const RationalLamination& mu) {
  json out = json::array();
  for (const auto& t : mu.terms()) out.push_back({{"class", t.cls.id}, {"weight", t.weight}});
  return out;
}

RationalLamination lamination_from_json(const Surface& s, const json& j, const std::string& field) {
  if (!j.is_array()) throw SchemaError(field, "expected a list of {class, weight}");
  std::vector<LaminationTerm> terms;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string f = field + "[" + std::to_string(k) + "]";
    const json& id = member(j[k], "class", f);
    if (!id.is_string()) throw SchemaError(f + ".class", "expected a class id string");
    HomotopyClass cls;
    try {
      cls = s.find(id.get<std::string>());
    } catch (const UnsupportedError& e) {
      throw SchemaError(f + ".class", e.what());
    }
    terms.push_back({std::move(cls), number_at(member(j[k], "weight", f), f + ".weight")});
  }
  return RationalLamination::make(s, std::move(terms));
}

json dt_json(const Surface& s, const DTCoordinates& c) {
  const auto& d = s.decomposition();
  json out = json::object();
  for (std::size_t k = 0; k < c.interior.size(); ++k)
    out[d.interior_labels[k]] = {c.interior[k].first, c.interior[k].second};
  for (std::size_t j = 0; j < c.theta_hat.size(); ++j) out[d.boundary_labels[j]] = c.theta_hat[j];
  return out;
}

json metric_json(const MetricValue& v) {
  return {{"value", v.value}, {"maximizer", v.maximizer_id}, {"panel_N", v.panel_complexity}};
}

SurfaceSignature signature_from_json(const json& j, const std::string& field) {
  if (j.is_array()) {
    if (j.size() != 3) throw SchemaError(field, "expected [genus, punctures, boundaries]");
    return {integer_at(j[0], field + "[0]"), integer_at(j[1], field + "[1]"),
            integer_at(j[2], field + "[2]")};
  }
  return {integer_at(member(j, "genus", field), field + ".genus"),
          integer_at(member(j, "punctures", field), field + ".punctures"),
          integer_at(member(j, "boundaries", field), field + ".boundaries")};
}

std::vector<double> grid_from_json(const json& j, const std::string& field) {
  if (j.is_array()) {
    std::vector<double> g;
    for (std::size_t k = 0; k < j.size(); ++k)
      g.push_back(number_at(j[k], field + "[" + std::to_string(k) + "]"));
    return g;
  }
  return make_grid(number_at(member(j, "start", field), field + ".start"),
                   number_at(member(j, "stop", field), field + ".stop"),
                   number_at(member(j, "step", field), field + ".step"));
}

json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
    const auto nl = text.rfind('\n', upto == 0 ? 0 : upto - 1);
    const auto column = nl == std::string::npos ? upto + 1 : upto - nl;
    throw SchemaError(source + ":" + std::to_string(line) + ":" + std::to_string(column),
                      "malformed JSON");
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace arcmetric::io
