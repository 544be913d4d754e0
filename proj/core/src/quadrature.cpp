#include "gsbv/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace gsbv::quad {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

double integrate_checked(const std::function<double(double)>& f, double a,
                         double b, const Options& opt) {
  if (!(a < b)) return 0.0;
  double error = 0.0;
  const double value =
      GK::integrate(f, a, b, static_cast<unsigned>(opt.max_depth), opt.rel_tol,
                    &error);
  if (!std::isfinite(value)) {
    throw QuadratureError("quadrature produced a non-finite value");
  }
  if (error > opt.rel_tol * std::abs(value) + opt.abs_floor) {
    throw QuadratureError(
        "quadrature refinement limit reached without meeting tolerance");
  }
  return value;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opt) {
  return integrate_checked(f, a, b, opt);
}

double integrate_split(const std::function<double(double)>& f, double a,
                       double b, std::span<const double> breakpoints,
                       const Options& opt) {
  if (!(a < b)) return 0.0;
  std::vector<double> cuts;
  cuts.reserve(breakpoints.size() + 2);
  cuts.push_back(a);
  for (double t : breakpoints) {
    if (t > a && t < b) cuts.push_back(t);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    total += integrate_checked(f, cuts[i], cuts[i + 1], opt);
  }
  return total;
}

}  // namespace gsbv::quad
