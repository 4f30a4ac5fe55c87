#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace randcliff {

/// An n-qubit Pauli operator in bit-packed symplectic form.
///
/// The operator is i^phase * (L_0 tensor L_1 tensor ... tensor L_{n-1}) where
/// each letter L_q is one of the Hermitian Paulis selected by the per-qubit
/// bit pair (x_q, z_q):
///
///   (0,0) -> I    (1,0) -> X    (1,1) -> Y    (0,1) -> Z
///
/// Qubit 0 is the leftmost letter in text form and the lowest bit of word 0
/// in packed form. A Hermitian operator has an even phase exponent (0 is +,
/// 2 is -); odd exponents (+i, -i) arise transiently in products and are
/// never stored as conjugation images.
///
/// Values are immutable in spirit: every operation returns a new value and
/// instances are safe to share across threads.
class PauliString {
public:
  PauliString() : n_(0) {}

  /// Identity on n qubits, phase +1.
  explicit PauliString(std::size_t n)
      : n_(n), x_(word_count(n), 0), z_(word_count(n), 0), phase_(0) {}

  /// Parse "XIZ", "-ZZ", "+iY", ... Throws std::invalid_argument on bad input.
  static PauliString parse(const std::string& text);

  /// Single-site letter, identity elsewhere. letter in {'X','Y','Z'}.
  static PauliString single(std::size_t n, std::size_t qubit, char letter);

  std::size_t num_qubits() const { return n_; }
  uint8_t phase_exponent() const { return phase_; }
  bool is_hermitian() const { return (phase_ & 1) == 0; }
  bool is_identity() const;

  bool x_bit(std::size_t q) const { return (x_[q >> 6] >> (q & 63)) & 1; }
  bool z_bit(std::size_t q) const { return (z_[q >> 6] >> (q & 63)) & 1; }
  void set_x(std::size_t q, bool v);
  void set_z(std::size_t q, bool v);
  void set_phase_exponent(uint8_t e) { phase_ = e & 3; }
  void add_phase(uint8_t e) { phase_ = (phase_ + e) & 3; }

  /// Letter code at qubit q: 0=I, 1=X, 2=Z, 3=Y (x bit low, z bit high).
  unsigned letter_code(std::size_t q) const {
    return static_cast<unsigned>(x_bit(q)) | (static_cast<unsigned>(z_bit(q)) << 1);
  }
  char letter(std::size_t q) const { return "IXZY"[letter_code(q)]; }
  void set_letter(std::size_t q, char letter);

  /// Number of non-identity letters.
  std::size_t weight() const;

  /// Number of Y letters (sites with both bits set).
  std::size_t count_y() const;

  /// Operator product this * other with the phase exponent tracked mod 4.
  PauliString multiply(const PauliString& other) const;
  void multiply_inplace(const PauliString& other);

  /// 0 if the operators commute, 1 if they anticommute.
  int symplectic_product(const PauliString& other) const;

  /// "+XIZ", "-ZZ", "+iY", ... Sign prefix is always present.
  std::string format() const;

  /// Ignores phase; true when some qubit in [begin, end) has a non-identity
  /// letter.
  bool has_support_in(std::size_t begin, std::size_t end) const;

  bool operator==(const PauliString& other) const;
  bool operator!=(const PauliString& other) const { return !(*this == other); }

  /// Total order on (x words, z words, phase); used for deterministic
  /// tie-breaking and canonical sorting.
  int compare(const PauliString& other) const;

  const std::vector<uint64_t>& x_words() const { return x_; }
  const std::vector<uint64_t>& z_words() const { return z_; }

  static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

private:
  void check_same_size(const PauliString& other) const;

  std::size_t n_;
  std::vector<uint64_t> x_;
  std::vector<uint64_t> z_;
  uint8_t phase_ = 0;
};

} // namespace randcliff
