#pragma once

#include <map>
#include <variant>

#include "acap/curve.hpp"

namespace acap {

using CurveSpec = std::variant<CircleSpec, EllipseSpec, TrigSpec, PolylineSpec>;

ParamCurve realize(const CurveSpec& spec);

// Unbounded complement of finitely many disjoint closed curve interiors.
class PlanarDomain {
 public:
  PlanarDomain() = default;
  explicit PlanarDomain(std::vector<ParamCurve> curves);

  int connectivity() const { return static_cast<int>(curves_.size()); }
  const std::vector<ParamCurve>& curves() const { return curves_; }
  const ParamCurve& curve(int i) const { return curves_.at(i); }

  double diameter() const;          // of the union of boundary curves
  double min_component_gap() const; // min distance between distinct curves
  bool in_domain(cx z) const;       // true if z lies in the unbounded component
  double distance_to_boundary(cx z) const;

 private:
  std::vector<ParamCurve> curves_;
};

struct Scene {
  std::string name;
  PlanarDomain domain;
  std::vector<CurveSpec> specs;  // as-authored curve specs, kept for round trips
  std::map<std::string, std::string> metadata;
};

struct Cycle {
  std::vector<ParamCurve> curves;
  double total_length = 0.0;
};

// Outward eps-offset of every boundary curve. Throws geometry_error when the
// offsets collide or eps exceeds a curve's reach.
Cycle offset_cycle(const PlanarDomain& domain, double eps);

Scene parse_scene(const std::string& text);
Scene load_scene(const std::string& path);
std::string emit_scene(const Scene& scene);
void save_scene(const Scene& scene, const std::string& path);

// Ready-made scenes used across tests and experiments.
Scene scene_from_curves(std::string name, std::vector<CurveSpec> specs);
Scene unit_disk_scene();
Scene disk_scene(cx center, double radius);
Scene two_disk_scene(double c, double r);  // disks radius r at -c and +c
Scene ellipse_scene(double a, double b);

}  // namespace acap
