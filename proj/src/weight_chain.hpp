#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace randcliff {

/// Law of the conjugated-Pauli weight; probs[w] indexed by weight 0..n.
struct WeightDistribution {
  std::size_t n = 0;
  std::vector<double> probs;

  double total_mass() const;
  double tv_distance(const WeightDistribution& other) const;
};

struct TransitionRow {
  double down = 0.0;
  double stay = 0.0;
  double up = 0.0;
};

/// The same row as integer numerators over denom = 5n(n-1); the three
/// numerators sum to denom exactly for every valid (n, l).
struct TransitionRowNumerators {
  uint64_t down = 0;
  uint64_t stay = 0;
  uint64_t up = 0;
  uint64_t denom = 0;
};

/// One-gate weight transition probabilities:
///   down = 2l(l-1)/denom, up = 6l(n-l)/denom, stay = 1 - 2l(3n-2l-1)/denom.
TransitionRow transition_row(std::size_t n, std::size_t ell);
TransitionRowNumerators transition_row_numerators(std::size_t n, std::size_t ell);

WeightDistribution point_mass(std::size_t n, std::size_t ell0);

/// Row ell0 of the t-step transition matrix, by t tridiagonal products.
/// Internally evolved in extended precision; mass is conserved to well under
/// 1e-10 even at t = 1e6.
WeightDistribution evolve(std::size_t n, std::size_t ell0, std::size_t t);

/// t-step push-forward of an arbitrary start law (weight 0 must carry no
/// mass).
WeightDistribution evolve_distribution(const WeightDistribution& start, std::size_t t);

/// Weight law of a uniform nonidentity Pauli: probs[m] = C(n,m) 3^m / (4^n - 1).
WeightDistribution stationary(std::size_t n);

/// Free parameters of the tail bounds. t = 0 with c > 0 means
/// t = ceil(c * n * log2(n)^2).
struct BoundParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t t = 0;
  double delta = 0.0;
  double eta = 0.0;
  double c = 0.0;
};

std::size_t gate_count_for(std::size_t n, double c);

struct MixingViolation {
  std::size_t ell = 0;
  std::size_t m = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Checks, for every start weight l and every target weight m <= 3n/4,
///   P^t(l, m) <= 4^{delta n} * stationary(m) + 1/((3-eta)^l C(n,l) n^10).
struct MixingReport {
  std::size_t n = 0;
  std::size_t t = 0;
  double delta = 0.0;
  double eta = 0.0;
  double c = 0.0;
  std::vector<MixingViolation> violations;

  bool holds() const { return violations.empty(); }
};

MixingReport check_theorem2(const BoundParams& params);

/// Number of weight-l Paulis that restrict to arbitrary letters on the first
/// k qubits and {I, Z} on the rest: sum_p C(k,p) 3^p C(n-k, l-p).
double coefficient_sum(std::size_t n, std::size_t k, std::size_t ell);
double coefficient_sum_log2(std::size_t n, std::size_t k, std::size_t ell);

/// Closed-form majorant (l+1) * 3^{lambda*l + 1} * C(n,l), lambda = 3k/(n+2k).
double coefficient_bound(std::size_t n, std::size_t k, std::size_t ell);

/// Probability that a random t-gate circuit yields distance <= d, union
/// bounded: sum_l coefficient_sum(n,k,l) * sum_{m=1}^d P^t(l,m). Exact up to
/// floating point; often > 1 (vacuous) at small t.
double union_bound(const BoundParams& params);
double union_bound_log2(const BoundParams& params);

/// 1/n^8 + 2^{k - n(1 - h(d/n) - (d/n) log2 3 - 3 delta)}, in log domain.
double closed_form_failure_bound(const BoundParams& params);

/// Exact-rational references (arbitrary-precision integers), n <= 64.
/// numerators[w] / denominator reproduces evolve() bit-for-bit at the
/// rational level; denominator = (5n(n-1))^t.
struct ExactChainRow {
  std::vector<std::string> numerators;
  std::string denominator;
  std::vector<double> probs;
};

ExactChainRow evolve_exact(std::size_t n, std::size_t ell0, std::size_t t);
double union_bound_exact(const BoundParams& params);

/// Decimal strings for exact combinatorial cross-checks.
std::string binomial_exact(std::size_t n, std::size_t k);
std::string coefficient_sum_exact(std::size_t n, std::size_t k, std::size_t ell,
                                  unsigned letter_factor);

} // namespace randcliff
