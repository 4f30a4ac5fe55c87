#include "tableau.hpp"

#include <stdexcept>

#include "clifford_table.hpp"

namespace randcliff {

CliffordTableau CliffordTableau::identity(std::size_t n) {
  if (n < 1) {
    throw std::invalid_argument("tableau needs at least one qubit");
  }
  CliffordTableau t;
  t.n_ = n;
  t.x_images_.reserve(n);
  t.z_images_.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    t.x_images_.push_back(PauliString::single(n, q, 'X'));
    t.z_images_.push_back(PauliString::single(n, q, 'Z'));
  }
  return t;
}

void CliffordTableau::set_x_image(std::size_t q, PauliString p) {
  if (p.num_qubits() != n_ || !p.is_hermitian()) {
    throw std::invalid_argument("generator image must be a Hermitian n-qubit Pauli");
  }
  x_images_[q] = std::move(p);
}

void CliffordTableau::set_z_image(std::size_t q, PauliString p) {
  if (p.num_qubits() != n_ || !p.is_hermitian()) {
    throw std::invalid_argument("generator image must be a Hermitian n-qubit Pauli");
  }
  z_images_[q] = std::move(p);
}

void CliffordTableau::apply_gate(const TwoQubitCliffordTable& table,
                                 std::size_t gate_index, std::size_t i, std::size_t j) {
  if (i == j || i >= n_ || j >= n_) {
    throw std::invalid_argument("gate qubits must be distinct and in range");
  }
  for (std::size_t q = 0; q < 2 * n_; ++q) {
    PauliString& img = q < n_ ? x_images_[q] : z_images_[q - n_];
    unsigned code = table.restricted_code(img, i, j);
    if (code == 0) {
      continue; // gate support does not meet this image
    }
    uint8_t out = table.conjugate_code(gate_index, code);
    table.write_code(img, i, j, out & 0xF);
    if (out & 0x10) {
      img.set_phase_exponent(static_cast<uint8_t>(img.phase_exponent() + 2));
    }
  }
}

PauliString CliffordTableau::conjugate(const PauliString& p) const {
  if (p.num_qubits() != n_) {
    throw std::invalid_argument("Pauli dimension does not match tableau");
  }
  // p = i^e * sigma_letters and sigma_letters = i^{#Y} prod_q X_q^x Z_q^z,
  // so the image is i^{e + #Y} times the product of the selected images.
  PauliString acc(n_);
  acc.set_phase_exponent(static_cast<uint8_t>(p.phase_exponent() + p.count_y()));
  for (std::size_t q = 0; q < n_; ++q) {
    if (p.x_bit(q)) {
      acc.multiply_inplace(x_images_[q]);
    }
    if (p.z_bit(q)) {
      acc.multiply_inplace(z_images_[q]);
    }
  }
  return acc;
}

bool CliffordTableau::is_valid() const {
  for (std::size_t q = 0; q < n_; ++q) {
    if (!x_images_[q].is_hermitian() || !z_images_[q].is_hermitian()) {
      return false;
    }
  }
  for (std::size_t a = 0; a < 2 * n_; ++a) {
    const PauliString& pa = a < n_ ? x_images_[a] : z_images_[a - n_];
    for (std::size_t b = a + 1; b < 2 * n_; ++b) {
      const PauliString& pb = b < n_ ? x_images_[b] : z_images_[b - n_];
      bool conjugate_pair = b == a + n_;
      if (pa.symplectic_product(pb) != (conjugate_pair ? 1 : 0)) {
        return false;
      }
    }
  }
  return true;
}

} // namespace randcliff
