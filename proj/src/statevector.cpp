#include "statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace randcliff {

namespace {

constexpr std::complex<double> kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

} // namespace

StateVector::StateVector(std::size_t n) : n_(n) {
  if (n == 0 || n > kMaxQubits) throw std::invalid_argument("statevector: qubit count out of range");
  amps_.assign(std::size_t{1} << n, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

StateVector StateVector::basis(std::size_t n, uint64_t index) {
  StateVector s(n);
  if (index >= s.dim()) throw std::invalid_argument("statevector: basis index out of range");
  s.amps_[0] = {0.0, 0.0};
  s.amps_[index] = {1.0, 0.0};
  return s;
}

void StateVector::apply_elementary(ElementaryOp op, std::size_t q0, std::size_t q1) {
  if (q0 >= n_ || q1 >= n_ || q0 == q1) throw std::invalid_argument("statevector: bad qubits");
  const uint64_t m0 = uint64_t{1} << q0;
  const uint64_t m1 = uint64_t{1} << q1;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (op) {
    case ElementaryOp::kHadamard0:
    case ElementaryOp::kHadamard1: {
      const uint64_t m = (op == ElementaryOp::kHadamard0) ? m0 : m1;
      for (uint64_t b = 0; b < amps_.size(); ++b) {
        if (b & m) continue;
        const std::complex<double> lo = amps_[b];
        const std::complex<double> hi = amps_[b | m];
        amps_[b] = (lo + hi) * inv_sqrt2;
        amps_[b | m] = (lo - hi) * inv_sqrt2;
      }
      break;
    }
    case ElementaryOp::kPhase0:
    case ElementaryOp::kPhase1: {
      const uint64_t m = (op == ElementaryOp::kPhase0) ? m0 : m1;
      for (uint64_t b = 0; b < amps_.size(); ++b) {
        if (b & m) amps_[b] *= std::complex<double>(0.0, 1.0);
      }
      break;
    }
    case ElementaryOp::kCnot01:
    case ElementaryOp::kCnot10: {
      const uint64_t control = (op == ElementaryOp::kCnot01) ? m0 : m1;
      const uint64_t target = (op == ElementaryOp::kCnot01) ? m1 : m0;
      for (uint64_t b = 0; b < amps_.size(); ++b) {
        // visit each swapped pair once, from its target-clear member
        if ((b & control) && !(b & target)) std::swap(amps_[b], amps_[b | target]);
      }
      break;
    }
  }
}

void StateVector::apply_gate(const TwoQubitCliffordTable& table, std::size_t gate_index,
                             std::size_t i, std::size_t j) {
  for (uint8_t op : table.word(gate_index)) {
    apply_elementary(static_cast<ElementaryOp>(op), i, j);
  }
}

void StateVector::apply_circuit(const TwoQubitCliffordTable& table, const Circuit& c) {
  if (c.n != n_) throw std::invalid_argument("statevector: circuit size mismatch");
  for (const Gate& g : c.gates) {
    apply_gate(table, g.clifford_index, g.i, g.j);
  }
}

void StateVector::apply_pauli(const PauliString& p) {
  if (p.num_qubits() != n_) throw std::invalid_argument("statevector: Pauli size mismatch");
  uint64_t x_mask = 0;
  uint64_t z_mask = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    if (p.x_bit(q)) x_mask |= uint64_t{1} << q;
    if (p.z_bit(q)) z_mask |= uint64_t{1} << q;
  }
  // sigma |b> = i^{e + #Y} (-1)^{|b & z|} |b ^ x>
  const std::complex<double> front = kPhases[(p.phase_exponent() + p.count_y()) & 3];
  std::vector<std::complex<double>> out(amps_.size());
  for (uint64_t b = 0; b < amps_.size(); ++b) {
    std::complex<double> v = front * amps_[b];
    if (std::popcount(b & z_mask) & 1) v = -v;
    out[b ^ x_mask] = v;
  }
  amps_ = std::move(out);
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

std::complex<double> StateVector::pauli_matrix_element(const PauliString& p,
                                                       const StateVector& other) const {
  if (p.num_qubits() != n_ || other.n_ != n_) {
    throw std::invalid_argument("statevector: size mismatch");
  }
  uint64_t x_mask = 0;
  uint64_t z_mask = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    if (p.x_bit(q)) x_mask |= uint64_t{1} << q;
    if (p.z_bit(q)) z_mask |= uint64_t{1} << q;
  }
  const std::complex<double> front = kPhases[(p.phase_exponent() + p.count_y()) & 3];
  std::complex<double> acc{0.0, 0.0};
  for (uint64_t b = 0; b < amps_.size(); ++b) {
    std::complex<double> v = other.amps_[b];
    if (std::popcount(b & z_mask) & 1) v = -v;
    acc += std::conj(amps_[b ^ x_mask]) * v;
  }
  return front * acc;
}

double StateVector::max_abs_diff(const StateVector& other) const {
  if (other.n_ != n_) throw std::invalid_argument("statevector: size mismatch");
  double best = 0.0;
  for (std::size_t b = 0; b < amps_.size(); ++b) {
    best = std::max(best, std::abs(amps_[b] - other.amps_[b]));
  }
  return best;
}

} // namespace randcliff
