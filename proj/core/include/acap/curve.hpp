#pragma once

#include <functional>
#include <optional>

#include "acap/types.hpp"

namespace acap {

enum class Orientation { positive, negative };

// Closed smooth curve given by a trigonometric polynomial
//   z(t) = sum_{n=-K..K} c_n e^{int},  t in [0,2pi).
// Coefficients are stored from n=-K to n=K.
class ParamCurve {
 public:
  ParamCurve() = default;
  ParamCurve(std::vector<cx> coeffs, Orientation orient);

  int degree() const { return degree_; }
  const std::vector<cx>& coefficients() const { return coeffs_; }
  Orientation orientation() const { return orient_; }

  cx point(double t) const;
  cx velocity(double t) const;       // dz/dt
  cx acceleration(double t) const;   // d2z/dt2
  cx unit_tangent(double t) const;
  cx outward_normal(double t) const; // unit, away from the enclosed region

  double arclength() const;          // trapezoid on a fine grid (spectral)
  double diameter() const;
  double signed_area() const;        // positive for ccw parameterization

  // Uniform parameter samples, t_j = 2pi j / n.
  std::vector<cx> sample(int n) const;

  // Invariant checks: pairwise sample separation and |z'| floor, both scaled
  // by the curve diameter. Throws on violation.
  void validate(double tol_scale = 1e-9) const;

  // Reversed parameterization (t -> -t); flips orientation tag.
  ParamCurve reversed() const;
  ParamCurve translated(cx delta) const;
  ParamCurve rotated(double angle) const;   // about the origin
  ParamCurve scaled(double factor) const;

  // Outward offset by eps, refit as a trig polynomial. Throws geometry_error
  // if the offset curve fails its invariants (eps beyond the reach).
  ParamCurve offset(double eps, int fit_degree = 0) const;

  bool contains(cx z) const;         // winding-number test on the enclosed region
  double distance_to(cx z, int n_samples = 0) const;

 private:
  std::vector<cx> coeffs_;  // index i holds c_{i - degree_}
  int degree_ = 0;
  Orientation orient_ = Orientation::positive;
};

// Sampled open arc (tube centerlines and similar). Not a boundary curve.
struct OpenArc {
  std::vector<cx> points;
  std::vector<cx> tangents;   // unit, along traversal
  std::vector<double> weights; // arclength quadrature weights
  double length() const;
  cx left_normal(int j) const { return iu * tangents[j]; }
};

// Curve construction specs.
struct CircleSpec { cx center; double radius; };
struct EllipseSpec { cx center; double a; double b; double angle; };
struct TrigSpec { std::vector<cx> coeffs; };
struct PolylineSpec { std::vector<cx> points; double smoothing; };

ParamCurve make_circle(cx center, double radius);
ParamCurve make_ellipse(cx center, double a, double b, double angle);
ParamCurve make_trig(std::vector<cx> coeffs);
// Closed polyline with corners rounded by arcs of radius `smoothing`.
ParamCurve make_smoothed_polyline(const std::vector<cx>& points, double smoothing);

// Least-squares-free direct DFT fit of a closed sampled loop. Samples are
// assumed uniform in the parameter. A smoothing filter
// exp(-alpha (n/K)^p) is applied when filter_alpha > 0.
ParamCurve fit_trig_curve(const std::vector<cx>& samples, int degree,
                          double filter_alpha = 0.0, int filter_order = 8);

// Adaptive Simpson quadrature, used as the independent arclength oracle.
double adaptive_quadrature(const std::function<double(double)>& f, double a,
                           double b, double tol = 1e-12);

double polyline_distance(const std::vector<cx>& polyline, cx z, bool closed);

}  // namespace acap
