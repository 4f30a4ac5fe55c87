#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clifford_table.hpp"
#include "rng.hpp"
#include "tableau.hpp"

namespace randcliff {

struct Gate {
  uint32_t i = 0; // distinct qubit indices, order as sampled
  uint32_t j = 0;
  uint32_t clifford_index = 0;

  bool operator==(const Gate&) const = default;
};

/// An ordered two-qubit gate list. Gate indices refer to a specific canonical
/// gate table; the table checksum travels with the serialized form.
struct Circuit {
  std::size_t n = 0;
  std::vector<Gate> gates;
  std::optional<uint64_t> seed; // provenance only

  /// JSON form {"n":..,"seed":..,"gate_table_checksum":..,"gates":[{"i":..,"j":..,"c":..}]}.
  std::string to_json(const TwoQubitCliffordTable& table) const;
  static Circuit from_json(const std::string& text, const TwoQubitCliffordTable& table);

  CliffordTableau to_tableau(const TwoQubitCliffordTable& table) const;

  /// Conjugate a single Pauli through the whole circuit without building a
  /// tableau; O(1) work per gate.
  PauliString conjugate(const TwoQubitCliffordTable& table, const PauliString& p) const;
};

/// t gates; pair (i, j) uniform over the n(n-1) ordered pairs and the gate
/// index uniform over the table, all independent.
Circuit sample_circuit(const TwoQubitCliffordTable& table, std::size_t n, std::size_t t,
                       CounterRng& rng);

/// The same gates partitioned into layers of pairwise disjoint support.
/// Within each wire the source order is preserved, so the layering acts the
/// same unitary.
struct LayeredCircuit {
  std::size_t n = 0;
  std::vector<std::vector<Gate>> layers;

  std::size_t depth() const { return layers.size(); }
  std::vector<std::size_t> layer_sizes() const;
  std::vector<Gate> flatten() const;
};

/// Strict sequential leveling: scan gates in order, adding to the current
/// layer until a gate shares a qubit with one already in it; that gate closes
/// the layer and opens the next.
LayeredCircuit parallelize(const Circuit& c);

/// Comparison scheduler: each gate lands in the earliest layer after all
/// earlier gates touching its qubits. Never deeper than parallelize().
LayeredCircuit parallelize_asap(const Circuit& c);

/// Largest number of gates sharing one wire; a lower bound on any schedule's
/// depth.
std::size_t max_gates_per_wire(const Circuit& c);

} // namespace randcliff
