#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

namespace gsbv {

// Log-scale weight with an explicit reference anchor. The Gaussian density at
// a rhomb vertex (m^2, 0) is exp(-m^4/2)/(2*pi), which underflows double
// precision from m = 4 on, so weighted integrals are carried as
// log(value / exp(reference_log)) and only ratios are ever exponentiated.
struct LogWeight {
  double log_value = 0.0;      // log of the value relative to the anchor
  double reference_log = 0.0;  // anchor, e.g. log rho(a)

  double log_absolute() const { return log_value + reference_log; }
  double relative() const { return std::exp(log_value); }

  // Same absolute value expressed against a different anchor.
  LogWeight rebased(double new_reference) const {
    return {log_value + reference_log - new_reference, new_reference};
  }
};

inline double log_add(double a, double b) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// log(sum_i exp(args[i])) with the usual max shift.
inline double log_sum_exp(std::span<const double> args) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (args.empty()) return kNegInf;
  const double hi = *std::max_element(args.begin(), args.end());
  if (hi == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double a : args) sum += std::exp(a - hi);
  return hi + std::log(sum);
}

}  // namespace gsbv
