#pragma once

#include "dense_oracle.hpp"

#include "circuit.hpp"
#include "clifford_table.hpp"
#include "pauli.hpp"
#include "rng.hpp"
#include "statevector.hpp"

namespace testutil {

inline randcliff::PauliString random_pauli(std::size_t n, randcliff::CounterRng& rng,
                                           bool hermitian = false) {
  randcliff::PauliString p(n);
  for (std::size_t q = 0; q < n; ++q) {
    std::uint64_t c = rng.next_below(4);
    p.set_x(q, (c & 1) != 0);
    p.set_z(q, (c & 2) != 0);
  }
  std::uint64_t e = rng.next_below(4);
  if (hermitian) e &= ~std::uint64_t{1};
  p.set_phase_exponent(static_cast<uint8_t>(e));
  return p;
}

inline randcliff::Circuit sample(const randcliff::TwoQubitCliffordTable& table, std::size_t n,
                                 std::size_t t, std::uint64_t seed) {
  randcliff::CounterRng rng(seed);
  randcliff::Circuit c = randcliff::sample_circuit(table, n, t, rng);
  c.seed = seed;
  return c;
}

// Dense unitary of one table gate on n qubits acting at (i, j), built by
// replaying the gate's elementary word on every basis column.
inline dense::Matrix unitary_of_gate(const randcliff::TwoQubitCliffordTable& table,
                                     std::size_t gate_index, std::size_t n, std::size_t i,
                                     std::size_t j) {
  std::size_t d = dense::dim_of(static_cast<int>(n));
  dense::Matrix u(d * d);
  for (std::size_t col = 0; col < d; ++col) {
    randcliff::StateVector v = randcliff::StateVector::basis(n, col);
    v.apply_gate(table, gate_index, i, j);
    for (std::size_t row = 0; row < d; ++row) u[row * d + col] = v.amplitude(row);
  }
  return u;
}

inline dense::Matrix unitary_of_circuit(const randcliff::TwoQubitCliffordTable& table,
                                        const randcliff::Circuit& c) {
  std::size_t d = dense::dim_of(static_cast<int>(c.n));
  dense::Matrix u(d * d);
  for (std::size_t col = 0; col < d; ++col) {
    randcliff::StateVector v = randcliff::StateVector::basis(c.n, col);
    v.apply_circuit(table, c);
    for (std::size_t row = 0; row < d; ++row) u[row * d + col] = v.amplitude(row);
  }
  return u;
}

// U M_p U^dag for a dense unitary.
inline dense::Matrix conjugated_pauli_matrix(const dense::Matrix& u,
                                             const randcliff::PauliString& p) {
  std::size_t d = dense::dim_of(static_cast<int>(p.num_qubits()));
  dense::Matrix m = dense::pauli_matrix(p);
  return dense::multiply(dense::multiply(u, m, d), dense::adjoint(u, d), d);
}

}  // namespace testutil
