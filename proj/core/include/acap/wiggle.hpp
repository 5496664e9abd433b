#pragma once

#include "acap/scene.hpp"

namespace acap {

enum class WiggleVariant { thm0, thm1 };

// Arclength of the oscillating graph {x + i x sin(1/x)} truncated to
// x in [1/(pi+k), 1/pi], by adaptive quadrature.
double wiggle_arclength(int k);

// Dense samples of the truncated oscillating graph, traversed left to right.
OpenArc wiggle_centerline(int k, int min_samples = 1200);

// Fattened truncations of the book-keeping sets:
//   thm0: two components, the truncated graph and the segment [-i, i];
//   thm1: one component, the hook (three segments) joined with the graph.
// Each component is replaced by the boundary of its eps-neighborhood,
// smoothed into a trig polynomial of the given degree (0 = automatic).
Scene wiggle_scene(int k, WiggleVariant variant, double fatten, int degree = 0);

}  // namespace acap
