#include "acap/curve.hpp"

#include <algorithm>
#include <cmath>

namespace acap {

namespace {

int default_samples(int degree) { return std::max(512, 16 * std::max(1, degree)); }

}  // namespace

ParamCurve::ParamCurve(std::vector<cx> coeffs, Orientation orient)
    : coeffs_(std::move(coeffs)), orient_(orient) {
  if (coeffs_.empty() || coeffs_.size() % 2 == 0)
    throw invalid_spec_error("trig coefficient list must have odd length");
  degree_ = static_cast<int>(coeffs_.size() / 2);
}

cx ParamCurve::point(double t) const {
  // Horner in e^{it} for the positive and negative halves.
  const cx e = std::polar(1.0, t);
  const cx ec = std::conj(e);
  cx pos = 0.0, neg = 0.0;
  for (int n = degree_; n >= 1; --n) {
    pos = (pos + coeffs_[degree_ + n]) * e;
    neg = (neg + coeffs_[degree_ - n]) * ec;
  }
  return pos + neg + coeffs_[degree_];
}

cx ParamCurve::velocity(double t) const {
  const cx e = std::polar(1.0, t);
  const cx ec = std::conj(e);
  cx pos = 0.0, neg = 0.0;
  for (int n = degree_; n >= 1; --n) {
    pos = (pos + iu * double(n) * coeffs_[degree_ + n]) * e;
    neg = (neg - iu * double(n) * coeffs_[degree_ - n]) * ec;
  }
  return pos + neg;
}

cx ParamCurve::acceleration(double t) const {
  const cx e = std::polar(1.0, t);
  const cx ec = std::conj(e);
  cx pos = 0.0, neg = 0.0;
  for (int n = degree_; n >= 1; --n) {
    const double n2 = -double(n) * double(n);
    pos = (pos + n2 * coeffs_[degree_ + n]) * e;
    neg = (neg + n2 * coeffs_[degree_ - n]) * ec;
  }
  return pos + neg;
}

cx ParamCurve::unit_tangent(double t) const {
  const cx v = velocity(t);
  const double m = std::abs(v);
  if (m == 0.0) throw geometry_error("degenerate parameterization: z'(t) = 0");
  return v / m;
}

cx ParamCurve::outward_normal(double t) const {
  // For ccw parameterization the enclosed region is on the left, so the
  // outward direction is the tangent rotated by -90 degrees.
  const cx tang = unit_tangent(t);
  return orient_ == Orientation::positive ? -iu * tang : iu * tang;
}

double ParamCurve::arclength() const {
  const int n = default_samples(degree_);
  double s = 0.0;
  for (int j = 0; j < n; ++j) s += std::abs(velocity(2.0 * pi * j / n));
  return s * 2.0 * pi / n;
}

double ParamCurve::diameter() const {
  const auto pts = sample(std::max(64, 4 * degree_));
  double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
  for (cx p : pts) {
    lo_x = std::min(lo_x, p.real());
    hi_x = std::max(hi_x, p.real());
    lo_y = std::min(lo_y, p.imag());
    hi_y = std::max(hi_y, p.imag());
  }
  return std::hypot(hi_x - lo_x, hi_y - lo_y);
}

double ParamCurve::signed_area() const {
  // area = 1/2 Im( conj(z) z' ) integrated over the period
  const int n = default_samples(degree_);
  double a = 0.0;
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * pi * j / n;
    a += std::imag(std::conj(point(t)) * velocity(t));
  }
  return 0.5 * a * 2.0 * pi / n;
}

std::vector<cx> ParamCurve::sample(int n) const {
  std::vector<cx> out(n);
  for (int j = 0; j < n; ++j) out[j] = point(2.0 * pi * j / n);
  return out;
}

void ParamCurve::validate(double tol_scale) const {
  const int n = std::max(64, 8 * static_cast<int>(coeffs_.size()));
  const double diam = diameter();
  if (!(diam > 0.0)) throw geometry_error("curve has zero diameter");
  const double tol_self = tol_scale * diam;
  const double tol_deriv = tol_scale * diam;

  std::vector<cx> pts(n);
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * pi * j / n;
    pts[j] = point(t);
    if (std::abs(velocity(t)) < tol_deriv)
      throw geometry_error("derivative floor violated: |z'| < tol at a sample");
  }
  // Global injectivity: points that are far apart in parameter must be
  // separated in the plane. Nearby parameters are covered by the derivative
  // floor plus the resolved-curvature assumption of the trig representation.
  const int skip = std::max(2, n / (8 * std::max(1, degree_)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + skip; j < n; ++j) {
      if (n - (j - i) < skip) continue;  // circular distance
      const double d = std::abs(pts[i] - pts[j]);
      if (d < tol_self)
        throw geometry_error("self-intersection check failed: samples collide");
    }
  }
}

ParamCurve ParamCurve::reversed() const {
  std::vector<cx> c(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) c[coeffs_.size() - 1 - i] = coeffs_[i];
  return ParamCurve(std::move(c), orient_ == Orientation::positive
                                      ? Orientation::negative
                                      : Orientation::positive);
}

ParamCurve ParamCurve::translated(cx delta) const {
  auto c = coeffs_;
  c[degree_] += delta;
  return ParamCurve(std::move(c), orient_);
}

ParamCurve ParamCurve::rotated(double angle) const {
  auto c = coeffs_;
  const cx r = std::polar(1.0, angle);
  for (auto& v : c) v *= r;
  return ParamCurve(std::move(c), orient_);
}

ParamCurve ParamCurve::scaled(double factor) const {
  if (!(factor > 0.0)) throw invalid_spec_error("scale factor must be positive");
  auto c = coeffs_;
  for (auto& v : c) v *= factor;
  return ParamCurve(std::move(c), orient_);
}

ParamCurve ParamCurve::offset(double eps, int fit_degree) const {
  const int deg = fit_degree > 0 ? fit_degree : std::max(16, 2 * degree_);
  const int m = std::max(1024, 8 * deg);
  std::vector<cx> samples(m);
  for (int j = 0; j < m; ++j) {
    const double t = 2.0 * pi * j / m;
    samples[j] = point(t) + eps * outward_normal(t);
  }
  ParamCurve out = fit_trig_curve(samples, deg, 1e-12);
  try {
    out.validate();
  } catch (const geometry_error&) {
    throw geometry_error("offset curve self-intersects: eps exceeds the reach");
  }
  return out;
}

bool ParamCurve::contains(cx z) const {
  const int n = default_samples(degree_);
  double total = 0.0;
  cx prev = point(0.0) - z;
  for (int j = 1; j <= n; ++j) {
    const cx cur = point(2.0 * pi * j / n) - z;
    total += std::arg(cur / prev);
    prev = cur;
  }
  return std::abs(total) > pi;  // winding number +-1 vs 0
}

double ParamCurve::distance_to(cx z, int n_samples) const {
  const int n = n_samples > 0 ? n_samples : default_samples(degree_);
  double d = 1e300;
  cx prev = point(0.0);
  for (int j = 1; j <= n; ++j) {
    const cx cur = point(2.0 * pi * j / n);
    // point-segment distance on the sample polyline
    const cx ab = cur - prev;
    const double len2 = std::norm(ab);
    double s = len2 > 0 ? std::clamp(((z - prev) * std::conj(ab)).real() / len2, 0.0, 1.0) : 0.0;
    d = std::min(d, std::abs(z - (prev + s * ab)));
    prev = cur;
  }
  return d;
}

double OpenArc::length() const {
  double s = 0.0;
  for (double w : weights) s += w;
  return s;
}

ParamCurve make_circle(cx center, double radius) {
  if (!(radius > 0.0)) throw invalid_spec_error("circle radius must be positive");
  std::vector<cx> c(3, cx(0.0));
  c[1] = center;
  c[2] = radius;
  return ParamCurve(std::move(c), Orientation::positive);
}

ParamCurve make_ellipse(cx center, double a, double b, double angle) {
  if (!(a > 0.0) || !(b > 0.0)) throw invalid_spec_error("ellipse semi-axes must be positive");
  // z = center + e^{i angle} (A e^{it} + B e^{-it}), A=(a+b)/2, B=(a-b)/2
  const cx rot = std::polar(1.0, angle);
  std::vector<cx> c(3, cx(0.0));
  c[0] = rot * cx(0.5 * (a - b));
  c[1] = center;
  c[2] = rot * cx(0.5 * (a + b));
  return ParamCurve(std::move(c), Orientation::positive);
}

ParamCurve make_trig(std::vector<cx> coeffs) {
  ParamCurve c(std::move(coeffs), Orientation::positive);
  if (c.signed_area() < 0.0) c = ParamCurve(c.coefficients(), Orientation::negative);
  c.validate();
  return c;
}

ParamCurve make_smoothed_polyline(const std::vector<cx>& points, double smoothing) {
  if (points.size() < 3) throw invalid_spec_error("closed polyline needs at least 3 points");
  if (!(smoothing > 0.0)) throw invalid_spec_error("smoothing radius must be positive");
  const size_t n = points.size();
  for (size_t i = 0; i < n; ++i) {
    if (std::abs(points[i] - points[(i + 1) % n]) < 1e-14)
      throw invalid_spec_error("coincident polyline points");
  }

  // Corner rounding: at vertex V with unit edge directions u_in, u_out and
  // interior corner half-angle phi, the arc of radius r starts/ends at
  // distance d = r / tan(phi) from V along the edges.
  struct Piece {
    bool is_arc;
    cx a, b;        // segment endpoints
    cx center;      // arc data
    double r, t0, t1;
    double len;
  };
  std::vector<std::optional<Piece>> vertex_arc(n);
  std::vector<cx> tang(n);
  for (size_t i = 0; i < n; ++i) {
    cx d = points[(i + 1) % n] - points[i];
    tang[i] = d / std::abs(d);
  }
  std::vector<cx> seg_start(n), seg_end(n);
  for (size_t i = 0; i < n; ++i) {
    const size_t prev = (i + n - 1) % n;
    const cx u_in = tang[prev], u_out = tang[i];
    const double cross = (std::conj(u_in) * u_out).imag();
    const double dot = (std::conj(u_in) * u_out).real();
    const double turn = std::atan2(cross, dot);  // exterior turn angle
    if (std::abs(turn) < 1e-12) {
      seg_start[i] = points[i];
      seg_end[prev] = points[i];
      continue;
    }
    const double d = smoothing * std::tan(std::abs(turn) / 2.0);
    const double e_in = std::abs(points[i] - points[prev]);
    const double e_out = std::abs(points[(i + 1) % n] - points[i]);
    if (d > 0.5 * e_in || d > 0.5 * e_out)
      throw invalid_spec_error("smoothing radius too large for polyline edge");
    const cx p_in = points[i] - d * u_in;
    const cx p_out = points[i] + d * u_out;
    const cx nrm = (turn > 0 ? iu : -iu);
    const cx center = p_in + smoothing * (nrm * u_in);
    double t0 = std::arg(p_in - center);
    double t1 = std::arg(p_out - center);
    if (turn > 0) { while (t1 < t0) t1 += 2.0 * pi; }
    else { while (t1 > t0) t1 -= 2.0 * pi; }
    seg_end[prev] = p_in;
    seg_start[i] = p_out;
    vertex_arc[i] = Piece{true, 0, 0, center, smoothing, t0, t1,
                          smoothing * std::abs(t1 - t0)};
  }
  // Interleave in traversal order: arc at vertex i, then segment i.
  std::vector<Piece> path;
  for (size_t i = 0; i < n; ++i) {
    if (vertex_arc[i]) path.push_back(*vertex_arc[i]);
    Piece seg{false, seg_start[i], seg_end[i], 0, 0, 0, 0, std::abs(seg_end[i] - seg_start[i])};
    if (seg.len > 1e-14) path.push_back(seg);
  }

  double total = 0.0;
  for (auto& p : path) total += p.len;
  if (!(total > 0.0)) throw invalid_spec_error("degenerate polyline");

  // Sample uniformly in arclength, then fit.
  const int m = 4096;
  std::vector<cx> samples(m);
  size_t pi_idx = 0;
  double consumed = 0.0;
  for (int j = 0; j < m; ++j) {
    double s = total * j / m;
    while (pi_idx + 1 < path.size() && s > consumed + path[pi_idx].len) {
      consumed += path[pi_idx].len;
      ++pi_idx;
    }
    const Piece& p = path[pi_idx];
    const double local = std::clamp((s - consumed) / p.len, 0.0, 1.0);
    if (p.is_arc) {
      const double t = p.t0 + local * (p.t1 - p.t0);
      samples[j] = p.center + p.r * std::polar(1.0, t);
    } else {
      samples[j] = p.a + local * (p.b - p.a);
    }
  }

  int deg = 64;
  ParamCurve fit;
  for (;;) {
    fit = fit_trig_curve(samples, deg, 4.0, 10);
    double worst = 0.0;
    for (int j = 0; j < 256; ++j)
      worst = std::max(worst, polyline_distance(samples, fit.point(2.0 * pi * j / 256), true));
    if (worst < 0.05 * smoothing || deg >= 512) break;
    deg *= 2;
  }
  if (fit.signed_area() < 0) fit = fit.reversed();
  fit.validate();
  return fit;
}

ParamCurve fit_trig_curve(const std::vector<cx>& samples, int degree,
                          double filter_alpha, int filter_order) {
  const int m = static_cast<int>(samples.size());
  if (degree < 1 || 2 * degree + 1 > m)
    throw resolution_error("fit degree incompatible with sample count");
  std::vector<cx> coeffs(2 * degree + 1, cx(0.0));
  for (int n = -degree; n <= degree; ++n) {
    cx acc = 0.0;
    for (int j = 0; j < m; ++j)
      acc += samples[j] * std::polar(1.0, -n * 2.0 * pi * j / m);
    cx c = acc / double(m);
    if (filter_alpha > 0.0 && n != 0) {
      const double x = std::abs(double(n)) / double(degree);
      c *= std::exp(-filter_alpha * std::pow(x, filter_order));
    }
    coeffs[degree + n] = c;
  }
  Orientation orient = Orientation::positive;
  ParamCurve out(std::move(coeffs), orient);
  if (out.signed_area() < 0.0)
    out = ParamCurve(out.coefficients(), Orientation::negative);
  return out;
}

double adaptive_quadrature(const std::function<double(double)>& f, double a,
                           double b, double tol) {
  struct Rec {
    static double run(const std::function<double(double)>& f, double a, double b,
                      double fa, double fm, double fb, double whole, double tol,
                      int depth) {
      const double m = 0.5 * (a + b);
      const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
      const double flm = f(lm), frm = f(rm);
      const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
      const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
      if (depth > 48 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
      return run(f, a, m, fa, flm, fm, left, tol / 2.0, depth + 1) +
             run(f, m, b, fm, frm, fb, right, tol / 2.0, depth + 1);
    }
  };
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return Rec::run(f, a, b, fa, fm, fb, whole, tol, 0);
}

double polyline_distance(const std::vector<cx>& polyline, cx z, bool closed) {
  double d = 1e300;
  const size_t n = polyline.size();
  const size_t last = closed ? n : n - 1;
  for (size_t i = 0; i < last; ++i) {
    const cx a = polyline[i], b = polyline[(i + 1) % n];
    const cx ab = b - a;
    const double len2 = std::norm(ab);
    double s = len2 > 0 ? std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0) : 0.0;
    d = std::min(d, std::abs(z - (a + s * ab)));
  }
  return d;
}

}  // namespace acap
