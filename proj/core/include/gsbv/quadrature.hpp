#pragma once

#include <functional>
#include <span>
#include <stdexcept>

namespace gsbv::quad {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double rel_tol = 1e-6;
  double abs_floor = 1e-14;  // accept once err <= rel_tol*|I| + abs_floor
  int max_depth = 17;        // adaptive refinement levels
};

// Adaptive Gauss-Kronrod over [a, b]. Throws QuadratureError when the
// refinement limit is reached without meeting the tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt = {});

// Same, with the interval pre-split at the given breakpoints (kinks, jumps,
// atom positions). Breakpoints outside (a, b) are ignored.
double integrate_split(const std::function<double(double)>& f, double a,
                       double b, std::span<const double> breakpoints,
                       const Options& opt = {});

}  // namespace gsbv::quad
