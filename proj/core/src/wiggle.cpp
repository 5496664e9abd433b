#include "acap/wiggle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "acap/distfield.hpp"

namespace acap {

namespace {

// Graph point and velocity in the parameter u = 1/x, u in [pi, pi+k].
cx graph_point(double u) { return cx(1.0, std::sin(u)) / u; }
cx graph_velocity(double u) {
  return cx(0.0, std::cos(u)) / u - cx(1.0, std::sin(u)) / (u * u);
}

std::vector<cx> graph_polyline(int k, int samples) {
  // traverse with increasing x, i.e. decreasing u
  std::vector<cx> pts(samples);
  const double u0 = pi + k, u1 = pi;
  for (int j = 0; j < samples; ++j) {
    const double u = u0 + (u1 - u0) * j / double(samples - 1);
    pts[j] = graph_point(u);
  }
  return pts;
}

int auto_samples(int k) { return std::max(1200, 600 * k); }

ParamCurve tube_boundary(const std::vector<cx>& centerline, double eps, int degree,
                         const char* what) {
  const double h = std::min(eps / 8.0, 0.004);
  auto loops = neighborhood_boundary({centerline}, {false}, eps, h);
  if (loops.size() != 1) {
    std::ostringstream os;
    os << what << ": eps-neighborhood boundary has " << loops.size()
       << " loops (fattening changes topology)";
    throw geometry_error(os.str());
  }
  const auto samples = resample_closed(loops[0], 4096);

  const bool auto_degree = degree <= 0;
  int deg = auto_degree ? 96 : degree;
  ParamCurve fit;
  for (;;) {
    fit = fit_trig_curve(samples, deg, 2.5, 10);
    double dev = 0.0;
    for (int j = 0; j < 512; ++j)
      dev = std::max(dev, polyline_distance(samples, fit.point(2.0 * pi * j / 512), true));
    bool ok = dev < eps / 8.0;
    if (ok || !auto_degree || deg >= 768) break;
    deg = deg * 3 / 2;
  }
  if (fit.signed_area() < 0.0) fit = fit.reversed();
  try {
    fit.validate();
  } catch (const geometry_error& e) {
    throw resolution_error(std::string(what) + ": boundary fit failed checks (degree too small): " + e.what());
  }
  // The smoothed boundary must still enclose the centerline with margin.
  for (size_t j = 0; j < centerline.size(); j += 7) {
    if (!fit.contains(centerline[j]))
      throw resolution_error(std::string(what) + ": smoothed boundary does not enclose the set");
  }
  double clearance = 1e300;
  for (int j = 0; j < 512; ++j)
    clearance = std::min(clearance, polyline_distance(centerline, fit.point(2.0 * pi * j / 512), false));
  if (clearance < 0.4 * eps)
    throw resolution_error(std::string(what) + ": smoothed boundary cuts into the eps tube");
  return fit;
}

}  // namespace

double wiggle_arclength(int k) {
  if (k < 1) throw invalid_spec_error("k must be >= 1");
  return adaptive_quadrature([](double u) { return std::abs(graph_velocity(u)); }, pi,
                             pi + k, 1e-12);
}

OpenArc wiggle_centerline(int k, int min_samples) {
  if (k < 1) throw invalid_spec_error("k must be >= 1");
  const int m = std::max(min_samples, auto_samples(k));
  OpenArc arc;
  arc.points.resize(m);
  arc.tangents.resize(m);
  arc.weights.resize(m);
  const double u0 = pi + k, u1 = pi;
  const double du = (u1 - u0) / (m - 1);  // negative
  for (int j = 0; j < m; ++j) {
    const double u = u0 + du * j;
    arc.points[j] = graph_point(u);
    const cx v = graph_velocity(u) * du;  // velocity along traversal
    arc.tangents[j] = v / std::abs(v);
    const double w = std::abs(graph_velocity(u)) * std::abs(du);
    arc.weights[j] = (j == 0 || j == m - 1) ? 0.5 * w : w;  // trapezoid
  }
  return arc;
}

Scene wiggle_scene(int k, WiggleVariant variant, double fatten, int degree) {
  if (k < 1) throw invalid_spec_error("k must be >= 1");
  if (!(fatten > 0.0)) throw invalid_spec_error("fatten must be positive");
  const double x_left = 1.0 / (pi + k);
  const int m = auto_samples(k);

  std::vector<CurveSpec> specs;
  std::vector<ParamCurve> curves;
  std::string name;

  if (variant == WiggleVariant::thm0) {
    name = "wiggle_thm0";
    ParamCurve wig = tube_boundary(graph_polyline(k, m), fatten, degree, "thm0 wiggle");
    // vertical segment from -i to i
    std::vector<cx> seg = {cx(0.0, -1.0), cx(0.0, 1.0)};
    ParamCurve bar = tube_boundary(seg, fatten, degree, "thm0 segment");
    curves.push_back(wig);
    curves.push_back(bar);
  } else {
    name = "wiggle_thm1";
    // hook: 0 -> -i -> 1/pi - i -> 1/pi, then the graph from x=1/pi back to
    // the truncation abscissa
    std::vector<cx> chain = {cx(0.0, 0.0), cx(0.0, -1.0), cx(1.0 / pi, -1.0),
                             cx(1.0 / pi, 0.0)};
    auto graph = graph_polyline(k, m);       // increasing x
    std::reverse(graph.begin(), graph.end()); // now from x=1/pi to the left end
    chain.insert(chain.end(), graph.begin() + 1, graph.end());
    curves.push_back(tube_boundary(chain, fatten, degree, "thm1 hook"));
  }

  for (const auto& c : curves) specs.push_back(TrigSpec{c.coefficients()});

  Scene s;
  s.name = name;
  s.specs = std::move(specs);
  s.domain = PlanarDomain(std::move(curves));  // validates disjointness

  std::ostringstream meta;
  s.metadata["variant"] = variant == WiggleVariant::thm0 ? "thm0" : "thm1";
  s.metadata["k"] = std::to_string(k);
  meta.precision(17);
  meta << fatten;
  s.metadata["fatten"] = meta.str();
  std::ostringstream tx;
  tx.precision(17);
  tx << x_left;
  s.metadata["truncation_x"] = tx.str();
  std::ostringstream wl;
  wl.precision(17);
  wl << wiggle_arclength(k);
  s.metadata["wiggle_arclength"] = wl.str();
  return s;
}

}  // namespace acap
