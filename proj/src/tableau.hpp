#pragma once

#include <cstdint>
#include <vector>

#include "pauli.hpp"

namespace randcliff {

class TwoQubitCliffordTable;

/// A Clifford unitary U on n qubits, represented by the signed Hermitian
/// Pauli images U X_q U^dag and U Z_q U^dag of the 2n generators. Global
/// phase is quotiented out; only the +/- signs of the images are kept.
class CliffordTableau {
public:
  CliffordTableau() : n_(0) {}

  /// Identity map: X_q -> X_q, Z_q -> Z_q, all signs +.
  static CliffordTableau identity(std::size_t n);

  std::size_t num_qubits() const { return n_; }
  const PauliString& x_image(std::size_t q) const { return x_images_[q]; }
  const PauliString& z_image(std::size_t q) const { return z_images_[q]; }

  /// Replace a generator image. The image must be Hermitian and of matching
  /// size; the symplectic condition is the caller's responsibility (checked
  /// by is_valid()).
  void set_x_image(std::size_t q, PauliString p);
  void set_z_image(std::size_t q, PauliString p);

  /// Compose with a two-qubit gate acting on qubits (i, j): the result maps
  /// each generator through this tableau and then through the gate. Only the
  /// letters on i and j change in each image.
  void apply_gate(const TwoQubitCliffordTable& table, std::size_t gate_index,
                  std::size_t i, std::size_t j);

  /// U p U^dag as a phase-tracked product of the generator images selected
  /// by p's x/z bits. Hermitian input yields a Hermitian result.
  PauliString conjugate(const PauliString& p) const;

  /// Symplectic condition plus Hermiticity of every image: x_image(q)
  /// anticommutes with z_image(q) and every other generator-image pair
  /// commutes.
  bool is_valid() const;

  bool operator==(const CliffordTableau& other) const {
    return n_ == other.n_ && x_images_ == other.x_images_ && z_images_ == other.z_images_;
  }

private:
  std::size_t n_;
  std::vector<PauliString> x_images_;
  std::vector<PauliString> z_images_;
};

} // namespace randcliff
