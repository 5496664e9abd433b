#pragma once

#include "acap/scene.hpp"

namespace acap {

// Spectral (trapezoid) boundary quadrature, equispaced in the curve parameter.
struct BoundaryDiscretization {
  struct Block {
    std::vector<cx> nodes;
    std::vector<cx> tangents;     // unit, along the stored parameterization
    std::vector<double> weights;  // arclength
    std::vector<double> params;
  };
  std::vector<Block> blocks;
  int nodes_per_curve = 0;

  int total_nodes() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.nodes.size());
    return n;
  }
};

BoundaryDiscretization discretize(const PlanarDomain& domain, int nodes_per_curve);

}  // namespace acap
