#include "acap/scene.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace acap {

using nlohmann::json;

ParamCurve realize(const CurveSpec& spec) {
  return std::visit(
      [](const auto& s) -> ParamCurve {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CircleSpec>)
          return make_circle(s.center, s.radius);
        else if constexpr (std::is_same_v<T, EllipseSpec>)
          return make_ellipse(s.center, s.a, s.b, s.angle);
        else if constexpr (std::is_same_v<T, TrigSpec>)
          return make_trig(s.coeffs);
        else
          return make_smoothed_polyline(s.points, s.smoothing);
      },
      spec);
}

PlanarDomain::PlanarDomain(std::vector<ParamCurve> curves) : curves_(std::move(curves)) {
  if (curves_.empty()) throw invalid_spec_error("domain needs at least one boundary curve");
  for (const auto& c : curves_) c.validate();
  // pairwise disjoint and non-nested
  for (size_t i = 0; i < curves_.size(); ++i) {
    for (size_t j = i + 1; j < curves_.size(); ++j) {
      const auto si = curves_[i].sample(256);
      const auto sj = curves_[j].sample(256);
      double dmin = 1e300;
      for (cx a : si) dmin = std::min(dmin, polyline_distance(sj, a, true));
      if (dmin <= 0.0) throw geometry_error("boundary curves intersect");
      if (curves_[i].contains(sj[0]) || curves_[j].contains(si[0]))
        throw geometry_error("nested boundary curves: complement not connected around infinity");
      if (dmin < 1e-12 * diameter())
        throw geometry_error("boundary curves overlap within tolerance");
    }
  }
}

double PlanarDomain::diameter() const {
  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  for (const auto& c : curves_) {
    for (cx p : c.sample(128)) {
      lo_x = std::min(lo_x, p.real());
      hi_x = std::max(hi_x, p.real());
      lo_y = std::min(lo_y, p.imag());
      hi_y = std::max(hi_y, p.imag());
    }
  }
  return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

double PlanarDomain::min_component_gap() const {
  if (curves_.size() < 2) return 1e300;
  double g = 1e300;
  for (size_t i = 0; i < curves_.size(); ++i) {
    for (size_t j = i + 1; j < curves_.size(); ++j) {
      const auto sj = curves_[j].sample(512);
      for (cx a : curves_[i].sample(512))
        g = std::min(g, polyline_distance(sj, a, true));
    }
  }
  return g;
}

bool PlanarDomain::in_domain(cx z) const {
  for (const auto& c : curves_)
    if (c.contains(z)) return false;
  return true;
}

double PlanarDomain::distance_to_boundary(cx z) const {
  double d = 1e300;
  for (const auto& c : curves_) d = std::min(d, c.distance_to(z));
  return d;
}

Cycle offset_cycle(const PlanarDomain& domain, double eps) {
  if (!(eps > 0.0)) throw geometry_error("offset must be positive");
  if (eps >= 0.5 * domain.min_component_gap())
    throw geometry_error("offset too large: offsets of distinct components collide");
  Cycle cy;
  for (const auto& c : domain.curves()) {
    ParamCurve oc = c.offset(eps);
    cy.total_length += oc.arclength();
    cy.curves.push_back(std::move(oc));
  }
  // offsets of distinct components must stay disjoint
  for (size_t i = 0; i < cy.curves.size(); ++i) {
    for (size_t j = i + 1; j < cy.curves.size(); ++j) {
      const auto sj = cy.curves[j].sample(256);
      for (cx a : cy.curves[i].sample(256))
        if (polyline_distance(sj, a, true) <= 0.0)
          throw geometry_error("offset cycles collide");
    }
  }
  return cy;
}

namespace {

json num2(cx z) { return json::array({z.real(), z.imag()}); }

cx json2cx(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw parse_error(std::string("expected [x, y] pair for ") + what);
  return cx(j[0].get<double>(), j[1].get<double>());
}

json spec_to_json(const CurveSpec& spec) {
  json j;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CircleSpec>) {
          j["kind"] = "circle";
          j["center"] = num2(s.center);
          j["radius"] = s.radius;
        } else if constexpr (std::is_same_v<T, EllipseSpec>) {
          j["kind"] = "ellipse";
          j["center"] = num2(s.center);
          j["a"] = s.a;
          j["b"] = s.b;
          j["angle"] = s.angle;
        } else if constexpr (std::is_same_v<T, TrigSpec>) {
          j["kind"] = "trig";
          json arr = json::array();
          for (cx c : s.coeffs) arr.push_back(num2(c));
          j["coeffs"] = std::move(arr);
        } else {
          j["kind"] = "polyline";
          json arr = json::array();
          for (cx p : s.points) arr.push_back(num2(p));
          j["points"] = std::move(arr);
          j["smoothing"] = s.smoothing;
        }
      },
      spec);
  return j;
}

CurveSpec spec_from_json(const json& j, int index) {
  const auto fail = [&](const std::string& msg) -> parse_error {
    std::ostringstream os;
    os << "curve " << index << ": " << msg;
    return parse_error(os.str());
  };
  if (!j.contains("kind") || !j["kind"].is_string()) throw fail("missing kind");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "circle") {
    if (!j.contains("center") || !j.contains("radius")) throw fail("circle needs center, radius");
    return CircleSpec{json2cx(j["center"], "center"), j["radius"].get<double>()};
  }
  if (kind == "ellipse") {
    for (const char* k : {"center", "a", "b", "angle"})
      if (!j.contains(k)) throw fail(std::string("ellipse needs field ") + k);
    return EllipseSpec{json2cx(j["center"], "center"), j["a"].get<double>(),
                       j["b"].get<double>(), j["angle"].get<double>()};
  }
  if (kind == "trig") {
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw fail("trig needs coeffs array");
    std::vector<cx> coeffs;
    for (const auto& e : j["coeffs"]) coeffs.push_back(json2cx(e, "coefficient"));
    return TrigSpec{std::move(coeffs)};
  }
  if (kind == "polyline") {
    if (!j.contains("points") || !j["points"].is_array() || !j.contains("smoothing"))
      throw fail("polyline needs points array and smoothing radius");
    std::vector<cx> pts;
    for (const auto& e : j["points"]) pts.push_back(json2cx(e, "point"));
    return PolylineSpec{std::move(pts), j["smoothing"].get<double>()};
  }
  throw fail("unknown kind '" + kind + "'");
}

}  // namespace

Scene scene_from_curves(std::string name, std::vector<CurveSpec> specs) {
  Scene s;
  s.name = std::move(name);
  s.specs = std::move(specs);
  std::vector<ParamCurve> curves;
  curves.reserve(s.specs.size());
  for (const auto& sp : s.specs) curves.push_back(realize(sp));
  s.domain = PlanarDomain(std::move(curves));
  return s;
}

Scene parse_scene(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("scene document: ") + e.what());
  }
  if (!j.contains("name") || !j["name"].is_string())
    throw parse_error("scene document: missing string field 'name'");
  if (!j.contains("curves") || !j["curves"].is_array() || j["curves"].empty())
    throw parse_error("scene document: missing non-empty array field 'curves'");
  std::vector<CurveSpec> specs;
  int idx = 0;
  for (const auto& e : j["curves"]) specs.push_back(spec_from_json(e, idx++));
  Scene s = scene_from_curves(j["name"].get<std::string>(), std::move(specs));
  if (j.contains("metadata")) {
    for (auto it = j["metadata"].begin(); it != j["metadata"].end(); ++it)
      s.metadata[it.key()] = it.value().is_string() ? it.value().get<std::string>()
                                                    : it.value().dump();
  }
  return s;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open scene file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str());
}

std::string emit_scene(const Scene& scene) {
  json j;
  j["name"] = scene.name;
  json curves = json::array();
  for (const auto& sp : scene.specs) curves.push_back(spec_to_json(sp));
  j["curves"] = std::move(curves);
  if (!scene.metadata.empty()) {
    json meta;
    for (const auto& [k, v] : scene.metadata) meta[k] = v;
    j["metadata"] = std::move(meta);
  }
  return j.dump(2) + "\n";
}

void save_scene(const Scene& scene, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error("cannot write scene file: " + path);
  out << emit_scene(scene);
}

Scene unit_disk_scene() { return disk_scene(0.0, 1.0); }

Scene disk_scene(cx center, double radius) {
  return scene_from_curves("disk", {CircleSpec{center, radius}});
}

Scene two_disk_scene(double c, double r) {
  return scene_from_curves("two_disks",
                           {CircleSpec{cx(-c, 0.0), r}, CircleSpec{cx(c, 0.0), r}});
}

Scene ellipse_scene(double a, double b) {
  return scene_from_curves("ellipse", {EllipseSpec{cx(0.0), a, b, 0.0}});
}

}  // namespace acap
