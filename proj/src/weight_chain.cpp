#include "weight_chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "bounds.hpp"

namespace randcliff {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr double kLog2Of3 = 1.584962500721156; // log2(3)

void require_chain_args(std::size_t n, std::size_t ell) {
  if (n < 2) throw std::invalid_argument("weight chain: n must be at least 2");
  if (ell < 1 || ell > n) throw std::invalid_argument("weight chain: weight out of range");
}

// Per-weight rates for one n, as extended-precision flow coefficients.
struct ChainRates {
  std::vector<long double> down; // index = weight
  std::vector<long double> up;

  explicit ChainRates(std::size_t n) : down(n + 1, 0.0L), up(n + 1, 0.0L) {
    const long double denom = 5.0L * static_cast<long double>(n) * (n - 1);
    for (std::size_t ell = 1; ell <= n; ++ell) {
      down[ell] = 2.0L * ell * (ell - 1) / denom;
      up[ell] = 6.0L * ell * (n - ell) / denom;
    }
  }
};

// One flow step: mass moves along edges, so the total telescopes exactly.
void flow_step(const ChainRates& rates, std::vector<long double>& p,
               std::vector<long double>& scratch) {
  const std::size_t n = p.size() - 1;
  for (std::size_t ell = 0; ell <= n; ++ell) {
    long double v = p[ell] - (rates.down[ell] + rates.up[ell]) * p[ell];
    if (ell > 0) v += rates.up[ell - 1] * p[ell - 1];
    if (ell < n) v += rates.down[ell + 1] * p[ell + 1];
    scratch[ell] = v;
  }
  p.swap(scratch);
}

WeightDistribution finish_distribution(std::size_t n, const std::vector<long double>& p) {
  WeightDistribution out;
  out.n = n;
  out.probs.resize(n + 1);
  for (std::size_t w = 0; w <= n; ++w) {
    const double v = static_cast<double>(p[w]);
    if (v < -1e-14) throw std::logic_error("weight chain: negative probability beyond roundoff");
    out.probs[w] = v < 0.0 ? 0.0 : v;
  }
  return out;
}

double log2_stationary(std::size_t n, std::size_t m) {
  // log2 of C(n,m) 3^m / (4^n - 1)
  const double log2_4n_minus_1 =
      2.0 * static_cast<double>(n) + std::log1p(-std::exp2(-2.0 * static_cast<double>(n))) /
                                         0.6931471805599453;
  return log2_binomial(n, static_cast<int64_t>(m)) + static_cast<double>(m) * kLog2Of3 -
         log2_4n_minus_1;
}

cpp_int binomial_int(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  cpp_int r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= static_cast<unsigned long>(n - k + i);
    r /= static_cast<unsigned long>(i);
  }
  return r;
}

cpp_int coefficient_sum_int(std::size_t n, std::size_t k, std::size_t ell,
                            unsigned letter_factor) {
  cpp_int total = 0;
  cpp_int factor_pow = 1;
  for (std::size_t p = 0; p <= std::min(ell, k); ++p) {
    if (ell - p <= n - k) {
      total += binomial_int(k, p) * factor_pow * binomial_int(n - k, ell - p);
    }
    factor_pow *= letter_factor;
  }
  return total;
}

// Exact row numerators over denominator (5n(n-1))^t.
std::vector<cpp_int> evolve_numerators(std::size_t n, std::size_t ell0, std::size_t t) {
  require_chain_args(n, ell0);
  std::vector<cpp_int> num(n + 1, 0);
  num[ell0] = 1;
  std::vector<cpp_int> next(n + 1);
  for (std::size_t step = 0; step < t; ++step) {
    for (std::size_t ell = 0; ell <= n; ++ell) {
      cpp_int v = 0;
      if (ell >= 1) {
        const TransitionRowNumerators row = transition_row_numerators(n, ell);
        v = cpp_int(row.stay) * num[ell];
        if (ell + 1 <= n) {
          v += cpp_int(transition_row_numerators(n, ell + 1).down) * num[ell + 1];
        }
        if (ell >= 2) {
          v += cpp_int(transition_row_numerators(n, ell - 1).up) * num[ell - 1];
        }
      }
      next[ell] = v;
    }
    num.swap(next);
  }
  return num;
}

} // namespace

double WeightDistribution::total_mass() const {
  double s = 0.0;
  for (double v : probs) s += v;
  return s;
}

double WeightDistribution::tv_distance(const WeightDistribution& other) const {
  if (other.n != n) throw std::invalid_argument("tv_distance: size mismatch");
  double s = 0.0;
  for (std::size_t w = 0; w <= n; ++w) s += std::abs(probs[w] - other.probs[w]);
  return 0.5 * s;
}

TransitionRowNumerators transition_row_numerators(std::size_t n, std::size_t ell) {
  require_chain_args(n, ell);
  TransitionRowNumerators r;
  const uint64_t nn = n;
  const uint64_t ll = ell;
  r.denom = 5 * nn * (nn - 1);
  r.down = 2 * ll * (ll - 1);
  r.up = 6 * ll * (nn - ll);
  const uint64_t move = 2 * ll * (3 * nn - 2 * ll - 1);
  r.stay = r.denom - move;
  return r;
}

TransitionRow transition_row(std::size_t n, std::size_t ell) {
  const TransitionRowNumerators r = transition_row_numerators(n, ell);
  const double denom = static_cast<double>(r.denom);
  return {static_cast<double>(r.down) / denom, static_cast<double>(r.stay) / denom,
          static_cast<double>(r.up) / denom};
}

WeightDistribution point_mass(std::size_t n, std::size_t ell0) {
  require_chain_args(n, ell0);
  WeightDistribution d;
  d.n = n;
  d.probs.assign(n + 1, 0.0);
  d.probs[ell0] = 1.0;
  return d;
}

WeightDistribution evolve(std::size_t n, std::size_t ell0, std::size_t t) {
  require_chain_args(n, ell0);
  const ChainRates rates(n);
  std::vector<long double> p(n + 1, 0.0L);
  std::vector<long double> scratch(n + 1);
  p[ell0] = 1.0L;
  for (std::size_t step = 0; step < t; ++step) flow_step(rates, p, scratch);
  return finish_distribution(n, p);
}

WeightDistribution evolve_distribution(const WeightDistribution& start, std::size_t t) {
  if (start.n < 2 || start.probs.size() != start.n + 1) {
    throw std::invalid_argument("evolve_distribution: malformed start law");
  }
  if (start.probs[0] != 0.0) {
    throw std::invalid_argument("evolve_distribution: weight 0 must carry no mass");
  }
  const ChainRates rates(start.n);
  std::vector<long double> p(start.probs.begin(), start.probs.end());
  std::vector<long double> scratch(start.n + 1);
  for (std::size_t step = 0; step < t; ++step) flow_step(rates, p, scratch);
  return finish_distribution(start.n, p);
}

WeightDistribution stationary(std::size_t n) {
  if (n < 1) throw std::invalid_argument("stationary: n must be at least 1");
  WeightDistribution d;
  d.n = n;
  d.probs.assign(n + 1, 0.0);
  for (std::size_t m = 1; m <= n; ++m) {
    d.probs[m] = std::exp2(log2_stationary(n, m));
  }
  return d;
}

std::size_t gate_count_for(std::size_t n, double c) {
  if (n < 2) throw std::invalid_argument("gate_count_for: n must be at least 2");
  const double lg = std::log2(static_cast<double>(n));
  return static_cast<std::size_t>(std::ceil(c * static_cast<double>(n) * lg * lg));
}

MixingReport check_theorem2(const BoundParams& params) {
  const std::size_t n = params.n;
  if (n < 2) throw std::invalid_argument("check_theorem2: n must be at least 2");
  MixingReport report;
  report.n = n;
  report.delta = params.delta;
  report.eta = params.eta;
  report.c = params.c;
  report.t = params.t > 0 ? params.t : gate_count_for(n, params.c);

  const std::size_t m_max = (3 * n) / 4;
  const double log2_n = std::log2(static_cast<double>(n));
  const double log2_3_minus_eta = std::log2(3.0 - params.eta);
  // RHS first-term log2 per m, second-term log2 per l; both n-scale safe.
  std::vector<double> rhs_tail(m_max + 1, 0.0);
  for (std::size_t m = 1; m <= m_max; ++m) {
    rhs_tail[m] = 2.0 * params.delta * static_cast<double>(n) + log2_stationary(n, m);
  }
  for (std::size_t ell = 1; ell <= n; ++ell) {
    const WeightDistribution row = evolve(n, ell, report.t);
    const double log2_second = -(static_cast<double>(ell) * log2_3_minus_eta +
                                 log2_binomial(n, static_cast<int64_t>(ell)) + 10.0 * log2_n);
    for (std::size_t m = 1; m <= m_max; ++m) {
      const double rhs = std::exp2(log2_add_exp2(rhs_tail[m], log2_second));
      const double lhs = row.probs[m];
      if (lhs > rhs) {
        report.violations.push_back({ell, m, lhs, rhs});
      }
    }
  }
  return report;
}

double coefficient_sum_log2(std::size_t n, std::size_t k, std::size_t ell) {
  if (k > n) throw std::invalid_argument("coefficient_sum: k > n");
  if (ell > n) throw std::invalid_argument("coefficient_sum: weight > n");
  double acc = -std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p <= std::min(ell, k); ++p) {
    const double term = log2_binomial(k, static_cast<int64_t>(p)) +
                        static_cast<double>(p) * kLog2Of3 +
                        log2_binomial(n - k, static_cast<int64_t>(ell - p));
    acc = log2_add_exp2(acc, term);
  }
  return acc;
}

double coefficient_sum(std::size_t n, std::size_t k, std::size_t ell) {
  return std::exp2(coefficient_sum_log2(n, k, ell));
}

double coefficient_bound(std::size_t n, std::size_t k, std::size_t ell) {
  if (k > n) throw std::invalid_argument("coefficient_bound: k > n");
  if (ell > n) throw std::invalid_argument("coefficient_bound: weight > n");
  const double lambda =
      3.0 * static_cast<double>(k) / (static_cast<double>(n) + 2.0 * static_cast<double>(k));
  const double log2_val = std::log2(static_cast<double>(ell) + 1.0) +
                          (lambda * static_cast<double>(ell) + 1.0) * kLog2Of3 +
                          log2_binomial(n, static_cast<int64_t>(ell));
  return std::exp2(log2_val);
}

double union_bound_log2(const BoundParams& params) {
  const std::size_t n = params.n;
  if (n < 2 || params.k < 1 || params.k >= n) {
    throw std::invalid_argument("union_bound: need n >= 2 and 1 <= k < n");
  }
  if (params.d < 1 || params.d > n) throw std::invalid_argument("union_bound: d out of range");

  // u_t(l) = sum_{m <= d} P^t(l, m), grown backwards as u <- P u.
  const ChainRates rates(n);
  std::vector<long double> u(n + 1, 0.0L);
  for (std::size_t m = 1; m <= params.d; ++m) u[m] = 1.0L;
  std::vector<long double> next(n + 1, 0.0L);
  double log2_scale = 0.0;
  for (std::size_t step = 0; step < params.t; ++step) {
    for (std::size_t ell = 1; ell <= n; ++ell) {
      const long double stay = 1.0L - rates.down[ell] - rates.up[ell];
      long double v = stay * u[ell];
      if (ell >= 2) v += rates.down[ell] * u[ell - 1];
      if (ell < n) v += rates.up[ell] * u[ell + 1];
      next[ell] = v;
    }
    next[0] = 0.0L;
    u.swap(next);
    long double peak = 0.0L;
    for (std::size_t ell = 1; ell <= n; ++ell) peak = std::max(peak, u[ell]);
    if (peak > 0.0L && peak < 1e-200L) {
      for (std::size_t ell = 1; ell <= n; ++ell) u[ell] *= 0x1p+512L;
      log2_scale -= 512.0;
    }
  }

  double acc = -std::numeric_limits<double>::infinity();
  for (std::size_t ell = 1; ell <= n; ++ell) {
    if (u[ell] <= 0.0L) continue;
    const double term = coefficient_sum_log2(n, params.k, ell) +
                        std::log2(static_cast<double>(u[ell])) + log2_scale;
    acc = log2_add_exp2(acc, term);
  }
  return acc;
}

double union_bound(const BoundParams& params) {
  return std::exp2(union_bound_log2(params));
}

double closed_form_failure_bound(const BoundParams& params) {
  const std::size_t n = params.n;
  if (n < 2 || params.d > n) throw std::invalid_argument("closed_form: bad parameters");
  const double ratio = static_cast<double>(params.d) / static_cast<double>(n);
  const double exponent = static_cast<double>(params.k) -
                          static_cast<double>(n) * (gv_rate_bound(ratio) - 3.0 * params.delta);
  const double first = -8.0 * std::log2(static_cast<double>(n));
  return std::exp2(log2_add_exp2(first, exponent));
}

ExactChainRow evolve_exact(std::size_t n, std::size_t ell0, std::size_t t) {
  if (n > 64) throw std::invalid_argument("evolve_exact: n > 64 (use evolve)");
  const std::vector<cpp_int> num = evolve_numerators(n, ell0, t);
  cpp_int denom = 1;
  const cpp_int d_step = 5 * cpp_int(n) * (n - 1);
  for (std::size_t step = 0; step < t; ++step) denom *= d_step;
  ExactChainRow row;
  row.denominator = denom.str();
  row.numerators.reserve(n + 1);
  row.probs.reserve(n + 1);
  for (const cpp_int& v : num) {
    row.numerators.push_back(v.str());
    row.probs.push_back(cpp_rational(v, denom).convert_to<double>());
  }
  return row;
}

double union_bound_exact(const BoundParams& params) {
  const std::size_t n = params.n;
  if (n > 64) throw std::invalid_argument("union_bound_exact: n > 64");
  if (n < 2 || params.k < 1 || params.k >= n) {
    throw std::invalid_argument("union_bound_exact: need n >= 2 and 1 <= k < n");
  }
  if (params.d < 1 || params.d > n) {
    throw std::invalid_argument("union_bound_exact: d out of range");
  }
  cpp_int total_num = 0;
  for (std::size_t ell = 1; ell <= n; ++ell) {
    const std::vector<cpp_int> row = evolve_numerators(n, ell, params.t);
    cpp_int tail = 0;
    for (std::size_t m = 1; m <= params.d; ++m) tail += row[m];
    total_num += coefficient_sum_int(n, params.k, ell, 3) * tail;
  }
  cpp_int denom = 1;
  const cpp_int d_step = 5 * cpp_int(n) * (n - 1);
  for (std::size_t step = 0; step < params.t; ++step) denom *= d_step;
  return cpp_rational(total_num, denom).convert_to<double>();
}

std::string binomial_exact(std::size_t n, std::size_t k) { return binomial_int(n, k).str(); }

std::string coefficient_sum_exact(std::size_t n, std::size_t k, std::size_t ell,
                                  unsigned letter_factor) {
  if (k > n || ell > n) throw std::invalid_argument("coefficient_sum_exact: out of range");
  return coefficient_sum_int(n, k, ell, letter_factor).str();
}

} // namespace randcliff
