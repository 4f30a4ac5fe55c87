#include "bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace randcliff {

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

double binary_entropy(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("binary_entropy: p outside [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double gv_rate_bound(double delta) {
  if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("gv_rate_bound: delta outside [0,1]");
  return 1.0 - binary_entropy(delta) - delta * std::log2(3.0);
}

double log2_binomial(uint64_t n, int64_t k) {
  if (k < 0 || static_cast<uint64_t>(k) > n) {
    return -std::numeric_limits<double>::infinity();
  }
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return (std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0)) / kLn2;
}

double log2_add_exp2(double a, double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  const double hi = a > b ? a : b;
  const double lo = a > b ? b : a;
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

} // namespace randcliff
