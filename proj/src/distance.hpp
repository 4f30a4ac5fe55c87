#pragma once

#include <cstdint>
#include <string>

#include "circuit.hpp"
#include "pauli.hpp"
#include "rng.hpp"
#include "tableau.hpp"

namespace randcliff {

/// Code distance of the encoder U given by a tableau: logical inputs are
/// qubits 0..k-1, ancillas (initialized |0>) are qubits k..n-1. The distance
/// is the minimal weight of U sigma_nu U^dagger over nu with arbitrary
/// nonzero letters on the logical qubits and letters in {I, Z} on the
/// ancillas.
struct DistanceReport {
  std::size_t distance = 0;
  PauliString witness;       // minimizing nu, phase normalized to +1
  PauliString witness_image; // conjugated witness, sign as computed
  std::string method;        // "exact" or "monte_carlo"

  std::string to_json() const;
};

inline constexpr uint64_t kDefaultDistanceBudget = uint64_t{1} << 26;

/// Exhaustive minimum over the (4^k - 1) 2^{n-k} qualifying nu, walked in
/// Gray-code order so each step costs one Pauli multiply. Deterministic
/// (including the witness) for any worker count. Refuses when the index
/// space exceeds `budget`.
DistanceReport distance_exact(const CliffordTableau& tab, std::size_t k,
                              uint64_t budget = kDefaultDistanceBudget, unsigned workers = 0);

/// Minimum over `samples` uniform qualifying nu; an upper-bound estimate of
/// the distance (never below it only when sampling happens to cover a
/// minimizer; always >= the true distance as a min over a subset).
DistanceReport distance_monte_carlo(const CliffordTableau& tab, std::size_t k, uint64_t samples,
                                    CounterRng& rng);

inline constexpr std::size_t kOracleQubitLimit = 8;
inline constexpr double kOracleTolerance = 1e-9;

struct KlOracleReport {
  std::size_t distance = 0;      // first weight violating the codeword
                                 // conditions, or d_max + 1 if none do
  bool non_real_mean = false;    // a diagonal mean had imaginary part > tol
};

/// Dense statevector check of the codeword conditions
/// <x|sigma_mu|y> = C_mu delta_xy against all errors mu of weight 1..d_max,
/// in increasing weight, on the 2^k codewords U |x> (x) |0...0>.
KlOracleReport kl_oracle(const Circuit& c, std::size_t k, std::size_t d_max);
std::size_t kl_oracle_distance(const Circuit& c, std::size_t k, std::size_t d_max);

} // namespace randcliff
