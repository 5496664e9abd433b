#pragma once

#include "acap/types.hpp"

namespace acap {

// Unsigned distance field to a collection of polylines, sampled on a regular
// grid. Distances are only guaranteed within the stamped band around the
// sources; everything else reads as "far".
class DistanceGrid {
 public:
  DistanceGrid(cx lo, cx hi, double spacing);

  void stamp_polyline(const std::vector<cx>& pts, bool closed, double band);

  // Closed level-set loops of {dist = level}, each as a closed polyline
  // (last point connects to first). Tiny noise loops are dropped.
  std::vector<std::vector<cx>> contours(double level) const;

  double spacing() const { return h_; }

 private:
  double value(int ix, int iy) const { return values_[size_t(iy) * nx_ + ix]; }
  cx node(int ix, int iy) const { return lo_ + cx(ix * h_, iy * h_); }

  cx lo_;
  int nx_ = 0, ny_ = 0;
  double h_ = 0.0;
  std::vector<double> values_;
};

// Level-set loops of the distance to a set of source polylines, resampled
// uniformly by arclength with target spacing.
std::vector<std::vector<cx>> neighborhood_boundary(
    const std::vector<std::vector<cx>>& sources, const std::vector<bool>& closed,
    double level, double grid_spacing);

std::vector<cx> resample_closed(const std::vector<cx>& loop, int n);

}  // namespace acap
