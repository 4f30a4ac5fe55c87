#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "circuit.hpp"
#include "clifford_table.hpp"
#include "pauli.hpp"

namespace randcliff {

/// Dense 2^n-amplitude state, the independent reference implementation the
/// bit-packed fast path is validated against. Intentionally small-n only.
class StateVector {
public:
  static constexpr std::size_t kMaxQubits = 14;

  /// |0...0>.
  explicit StateVector(std::size_t n);

  /// Computational basis state; bit q of `index` is the value of qubit q.
  static StateVector basis(std::size_t n, uint64_t index);

  std::size_t num_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  std::complex<double> amplitude(uint64_t index) const { return amps_[index]; }

  void apply_elementary(ElementaryOp op, std::size_t q0, std::size_t q1);
  void apply_gate(const TwoQubitCliffordTable& table, std::size_t gate_index, std::size_t i,
                  std::size_t j);
  void apply_circuit(const TwoQubitCliffordTable& table, const Circuit& c);
  void apply_pauli(const PauliString& p);

  double norm() const;

  /// <this| p |other>.
  std::complex<double> pauli_matrix_element(const PauliString& p, const StateVector& other) const;

  /// max_b |this_b - other_b|.
  double max_abs_diff(const StateVector& other) const;

private:
  std::size_t n_;
  std::vector<std::complex<double>> amps_;
};

} // namespace randcliff
