#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace acap {

using cx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cx iu{0.0, 1.0};

// Error taxonomy. Everything fatal is an exception; recoverable numerical
// concerns are attached to results as warning strings.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invalid_spec_error : error { using error::error; };
struct geometry_error : error { using error::error; };
struct resolution_error : error { using error::error; };
struct accuracy_error : error { using error::error; };
struct evaluation_error : error { using error::error; };
struct domain_point_error : error { using error::error; };
struct solver_error : error { using error::error; };
struct parse_error : error { using error::error; };
struct shape_error : error { using error::error; };
struct unsupported_symmetry_error : error { using error::error; };

enum class CapacityMethod { szego, slit, gamma_c_lp, gamma_plus_lp };

inline const char* to_string(CapacityMethod m) {
  switch (m) {
    case CapacityMethod::szego: return "szego";
    case CapacityMethod::slit: return "slit";
    case CapacityMethod::gamma_c_lp: return "gamma_c_lp";
    case CapacityMethod::gamma_plus_lp: return "gamma_plus_lp";
  }
  return "?";
}

// A capacity value together with how it was obtained.
struct CapacityEstimate {
  double value = 0.0;
  CapacityMethod method = CapacityMethod::szego;
  int nodes = 0;
  double certification = 1.0;  // rescaling factor applied; 1 = none
  double self_error = 0.0;     // solver-reported consistency estimate
  std::vector<std::string> warnings;
};

}  // namespace acap
