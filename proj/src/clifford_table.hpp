#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pauli.hpp"
#include "rng.hpp"
#include "tableau.hpp"

namespace randcliff {

/// Elementary two-qubit circuit ops, acting on the (first, second) slots of a
/// gate's qubit pair. Used both to enumerate the gate group and as the
/// per-gate decomposition consumed by the dense statevector evolution.
enum class ElementaryOp : uint8_t {
  kHadamard0 = 0,
  kHadamard1 = 1,
  kPhase0 = 2,
  kPhase1 = 3,
  kCnot01 = 4, // control first slot, target second
  kCnot10 = 5,
};

/// All 11,520 distinct two-qubit Clifford unitaries modulo global phase,
/// materialized once as the closure of {Hadamard, phase, CNOT} under
/// composition.
///
/// Entries are sorted canonically: each gate packs into a 20-bit key holding
/// the image letter codes of (X0, X1, Z0, Z1) — most significant first, with
/// per-image code x0 | z0<<1 | x1<<2 | z1<<3 — followed by the four sign
/// bits. The ascending key order is part of the on-disk circuit format
/// contract; circuit files carry this table's checksum so stale gate indices
/// are detected instead of silently reinterpreted.
///
/// Immutable after construction; safe to share across threads.
class TwoQubitCliffordTable {
public:
  static constexpr std::size_t kExpectedSize = 11520;

  TwoQubitCliffordTable();

  std::size_t size() const { return keys_.size(); }

  /// Uniform gate index in [0, size()).
  std::size_t sample_gate_index(CounterRng& rng) const {
    return static_cast<std::size_t>(rng.next_below(keys_.size()));
  }

  /// Conjugation lookup: `code` encodes a nonzero unsigned two-qubit Pauli
  /// (bit 0: x on first slot, bit 1: z on first, bits 2-3 likewise for the
  /// second slot). Returns the image code in bits 0-3 and the sign in bit 4.
  uint8_t conjugate_code(std::size_t gate_index, unsigned code) const {
    return lut_[gate_index * 16 + code];
  }

  /// Extract / overwrite the two letters of p at qubits (i, j) as a code.
  static unsigned restricted_code(const PauliString& p, std::size_t i, std::size_t j) {
    return static_cast<unsigned>(p.x_bit(i)) | (static_cast<unsigned>(p.z_bit(i)) << 1) |
           (static_cast<unsigned>(p.x_bit(j)) << 2) | (static_cast<unsigned>(p.z_bit(j)) << 3);
  }
  static void write_code(PauliString& p, std::size_t i, std::size_t j, unsigned code) {
    p.set_x(i, code & 1);
    p.set_z(i, (code >> 1) & 1);
    p.set_x(j, (code >> 2) & 1);
    p.set_z(j, (code >> 3) & 1);
  }

  /// Reconstruct the gate's n=2 tableau.
  CliffordTableau tableau(std::size_t gate_index) const;

  /// Canonical index of an n=2 tableau, if it is in the group (it always is
  /// for a valid tableau; nullopt signals a non-canonical input).
  std::optional<std::size_t> find_index(const CliffordTableau& t) const;

  /// Index of the inverse gate.
  std::size_t inverse_index(std::size_t gate_index) const;

  /// Elementary-op decomposition (a shortest word found during enumeration).
  /// Applying the ops in order yields the gate's unitary up to global phase.
  const std::vector<uint8_t>& word(std::size_t gate_index) const { return words_[gate_index]; }

  /// FNV-1a 64 over the canonical serialization, as a 16-digit hex string.
  /// Identifies the table version in circuit files and reports.
  const std::string& checksum() const { return checksum_; }

  uint32_t key(std::size_t gate_index) const { return keys_[gate_index]; }

private:
  static uint32_t pack_key(const CliffordTableau& t);
  static CliffordTableau unpack_key(uint32_t key);

  std::vector<uint32_t> keys_;         // sorted ascending
  std::vector<std::vector<uint8_t>> words_;
  std::vector<uint8_t> lut_;           // size() * 16 conjugation entries
  std::string checksum_;
};

/// Process-wide shared instance (built on first use).
const TwoQubitCliffordTable& shared_gate_table();

} // namespace randcliff
