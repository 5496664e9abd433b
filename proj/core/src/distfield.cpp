#include "acap/distfield.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace acap {

namespace {
constexpr double kFar = 1e30;
}

DistanceGrid::DistanceGrid(cx lo, cx hi, double spacing) : lo_(lo), h_(spacing) {
  if (!(spacing > 0.0)) throw geometry_error("grid spacing must be positive");
  nx_ = static_cast<int>(std::ceil((hi.real() - lo.real()) / spacing)) + 2;
  ny_ = static_cast<int>(std::ceil((hi.imag() - lo.imag()) / spacing)) + 2;
  if (nx_ < 2 || ny_ < 2 || double(nx_) * double(ny_) > 4e7)
    throw geometry_error("distance grid size out of range");
  values_.assign(size_t(nx_) * ny_, kFar);
}

void DistanceGrid::stamp_polyline(const std::vector<cx>& pts, bool closed, double band) {
  const size_t n = pts.size();
  if (n < 2) throw geometry_error("polyline needs at least 2 points");
  const size_t last = closed ? n : n - 1;
  for (size_t s = 0; s < last; ++s) {
    const cx a = pts[s], b = pts[(s + 1) % n];
    const double x0 = std::min(a.real(), b.real()) - band;
    const double x1 = std::max(a.real(), b.real()) + band;
    const double y0 = std::min(a.imag(), b.imag()) - band;
    const double y1 = std::max(a.imag(), b.imag()) + band;
    const int ix0 = std::max(0, int(std::floor((x0 - lo_.real()) / h_)));
    const int ix1 = std::min(nx_ - 1, int(std::ceil((x1 - lo_.real()) / h_)));
    const int iy0 = std::max(0, int(std::floor((y0 - lo_.imag()) / h_)));
    const int iy1 = std::min(ny_ - 1, int(std::ceil((y1 - lo_.imag()) / h_)));
    const cx ab = b - a;
    const double len2 = std::norm(ab);
    for (int iy = iy0; iy <= iy1; ++iy) {
      for (int ix = ix0; ix <= ix1; ++ix) {
        const cx p = node(ix, iy);
        double t = len2 > 0 ? std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0) : 0.0;
        const double d = std::abs(p - (a + t * ab));
        double& v = values_[size_t(iy) * nx_ + ix];
        if (d < v) v = d;
      }
    }
  }
}

std::vector<std::vector<cx>> DistanceGrid::contours(double level) const {
  // Marching squares on (value - level). Segments are chained into loops via
  // shared cell-edge keys.
  struct EdgeKey {
    int ix, iy;
    bool horizontal;
    bool operator<(const EdgeKey& o) const {
      return std::tie(ix, iy, horizontal) < std::tie(o.ix, o.iy, o.horizontal);
    }
    bool operator==(const EdgeKey& o) const {
      return ix == o.ix && iy == o.iy && horizontal == o.horizontal;
    }
  };
  auto interp = [&](int ix0, int iy0, int ix1, int iy1) -> cx {
    const double v0 = value(ix0, iy0) - level;
    const double v1 = value(ix1, iy1) - level;
    const double t = v0 / (v0 - v1);
    return node(ix0, iy0) + t * (node(ix1, iy1) - node(ix0, iy0));
  };

  std::map<EdgeKey, cx> points;
  std::map<EdgeKey, std::vector<EdgeKey>> adj;

  auto edge_point = [&](EdgeKey k) -> cx {
    auto it = points.find(k);
    if (it != points.end()) return it->second;
    cx p = k.horizontal ? interp(k.ix, k.iy, k.ix + 1, k.iy)
                        : interp(k.ix, k.iy, k.ix, k.iy + 1);
    points.emplace(k, p);
    return p;
  };
  auto link = [&](EdgeKey a, EdgeKey b) {
    edge_point(a);
    edge_point(b);
    adj[a].push_back(b);
    adj[b].push_back(a);
  };

  for (int iy = 0; iy + 1 < ny_; ++iy) {
    for (int ix = 0; ix + 1 < nx_; ++ix) {
      const double v00 = value(ix, iy), v10 = value(ix + 1, iy);
      const double v11 = value(ix + 1, iy + 1), v01 = value(ix, iy + 1);
      if (v00 >= kFar && v10 >= kFar && v11 >= kFar && v01 >= kFar) continue;
      int c = 0;
      if (v00 < level) c |= 1;
      if (v10 < level) c |= 2;
      if (v11 < level) c |= 4;
      if (v01 < level) c |= 8;
      if (c == 0 || c == 15) continue;
      const EdgeKey bottom{ix, iy, true}, top{ix, iy + 1, true};
      const EdgeKey left{ix, iy, false}, right{ix + 1, iy, false};
      switch (c) {
        case 1: case 14: link(left, bottom); break;
        case 2: case 13: link(bottom, right); break;
        case 3: case 12: link(left, right); break;
        case 4: case 11: link(right, top); break;
        case 6: case 9:  link(bottom, top); break;
        case 7: case 8:  link(left, top); break;
        case 5: case 10: {
          const double center = 0.25 * (v00 + v10 + v11 + v01);
          const bool center_in = center < level;
          if ((c == 5) == center_in) {
            link(left, top);
            link(bottom, right);
          } else {
            link(left, bottom);
            link(right, top);
          }
          break;
        }
        default: break;
      }
    }
  }

  std::vector<std::vector<cx>> loops;
  std::map<EdgeKey, bool> used;
  for (const auto& [start, nbrs] : adj) {
    if (used[start] || nbrs.size() != 2) continue;
    std::vector<cx> loop;
    EdgeKey prev = start;
    EdgeKey cur = start;
    bool closed_ok = false;
    for (size_t guard = 0; guard <= adj.size() + 2; ++guard) {
      used[cur] = true;
      loop.push_back(points[cur]);
      const auto& nb = adj[cur];
      if (nb.size() != 2) break;
      const EdgeKey next = (guard == 0 || nb[0] == prev) ? ((guard == 0) ? nb[0] : nb[1])
                                                         : nb[0];
      prev = cur;
      cur = next;
      if (cur == start) {
        closed_ok = true;
        break;
      }
    }
    if (closed_ok && loop.size() >= 8) loops.push_back(std::move(loop));
  }
  // drop tiny noise loops
  std::vector<std::vector<cx>> out;
  for (auto& l : loops) {
    double len = 0.0;
    for (size_t i = 0; i < l.size(); ++i) len += std::abs(l[(i + 1) % l.size()] - l[i]);
    if (len > 8.0 * h_) out.push_back(std::move(l));
  }
  return out;
}

std::vector<std::vector<cx>> neighborhood_boundary(
    const std::vector<std::vector<cx>>& sources, const std::vector<bool>& closed,
    double level, double grid_spacing) {
  if (sources.empty()) throw geometry_error("no source polylines");
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& poly : sources) {
    for (cx p : poly) {
      x0 = std::min(x0, p.real());
      x1 = std::max(x1, p.real());
      y0 = std::min(y0, p.imag());
      y1 = std::max(y1, p.imag());
    }
  }
  const double pad = level + 6.0 * grid_spacing;
  DistanceGrid grid(cx(x0 - pad, y0 - pad), cx(x1 + pad, y1 + pad), grid_spacing);
  for (size_t i = 0; i < sources.size(); ++i)
    grid.stamp_polyline(sources[i], closed.at(i), level + 6.0 * grid_spacing);
  return grid.contours(level);
}

std::vector<cx> resample_closed(const std::vector<cx>& loop, int n) {
  const size_t m = loop.size();
  std::vector<double> cum(m + 1, 0.0);
  for (size_t i = 0; i < m; ++i)
    cum[i + 1] = cum[i] + std::abs(loop[(i + 1) % m] - loop[i]);
  const double total = cum[m];
  if (!(total > 0.0)) throw geometry_error("degenerate loop");
  std::vector<cx> out(n);
  size_t seg = 0;
  for (int j = 0; j < n; ++j) {
    const double s = total * j / n;
    while (seg + 1 < m && cum[seg + 1] < s) ++seg;
    const double ds = cum[seg + 1] - cum[seg];
    const double t = ds > 0 ? (s - cum[seg]) / ds : 0.0;
    out[j] = loop[seg] + t * (loop[(seg + 1) % m] - loop[seg]);
  }
  return out;
}

}  // namespace acap
