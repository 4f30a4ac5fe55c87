#include "circuit.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace randcliff {

std::string Circuit::to_json(const TwoQubitCliffordTable& table) const {
  nlohmann::json doc;
  doc["n"] = n;
  if (seed.has_value()) {
    doc["seed"] = *seed;
  } else {
    doc["seed"] = nullptr;
  }
  doc["gate_table_checksum"] = table.checksum();
  nlohmann::json arr = nlohmann::json::array();
  for (const Gate& g : gates) {
    arr.push_back({{"i", g.i}, {"j", g.j}, {"c", g.clifford_index}});
  }
  doc["gates"] = std::move(arr);
  return doc.dump(2) + "\n";
}

Circuit Circuit::from_json(const std::string& text, const TwoQubitCliffordTable& table) {
  nlohmann::json doc = nlohmann::json::parse(text);
  Circuit c;
  c.n = doc.at("n").get<std::size_t>();
  if (c.n < 2) throw std::invalid_argument("circuit: n must be at least 2");
  if (doc.contains("seed") && !doc.at("seed").is_null()) {
    c.seed = doc.at("seed").get<uint64_t>();
  }
  const std::string checksum = doc.at("gate_table_checksum").get<std::string>();
  if (checksum != table.checksum()) {
    throw std::invalid_argument("circuit: gate_table_checksum mismatch (file " + checksum +
                                ", table " + table.checksum() + ")");
  }
  for (const nlohmann::json& item : doc.at("gates")) {
    Gate g;
    g.i = item.at("i").get<uint32_t>();
    g.j = item.at("j").get<uint32_t>();
    g.clifford_index = item.at("c").get<uint32_t>();
    if (g.i >= c.n || g.j >= c.n) throw std::invalid_argument("circuit: qubit index out of range");
    if (g.i == g.j) throw std::invalid_argument("circuit: gate qubits must be distinct");
    if (g.clifford_index >= table.size()) {
      throw std::invalid_argument("circuit: clifford_index out of range");
    }
    c.gates.push_back(g);
  }
  return c;
}

CliffordTableau Circuit::to_tableau(const TwoQubitCliffordTable& table) const {
  CliffordTableau tab = CliffordTableau::identity(n);
  for (const Gate& g : gates) {
    tab.apply_gate(table, g.clifford_index, g.i, g.j);
  }
  return tab;
}

PauliString Circuit::conjugate(const TwoQubitCliffordTable& table, const PauliString& p) const {
  if (p.num_qubits() != n) throw std::invalid_argument("circuit: Pauli size mismatch");
  PauliString out = p;
  for (const Gate& g : gates) {
    const uint8_t code = TwoQubitCliffordTable::restricted_code(out, g.i, g.j);
    if (code == 0) continue;
    const uint8_t entry = table.conjugate_code(g.clifford_index, code);
    TwoQubitCliffordTable::write_code(out, g.i, g.j, entry & 0x0F);
    if (entry & 0x10) out.add_phase(2);
  }
  return out;
}

Circuit sample_circuit(const TwoQubitCliffordTable& table, std::size_t n, std::size_t t,
                       CounterRng& rng) {
  if (n < 2) throw std::invalid_argument("sample_circuit: n must be at least 2");
  Circuit c;
  c.n = n;
  c.gates.reserve(t);
  for (std::size_t step = 0; step < t; ++step) {
    const uint64_t r = rng.next_below(static_cast<uint64_t>(n) * (n - 1));
    const uint32_t i = static_cast<uint32_t>(r / (n - 1));
    uint32_t j = static_cast<uint32_t>(r % (n - 1));
    if (j >= i) ++j; // skip the diagonal
    Gate g;
    g.i = i;
    g.j = j;
    g.clifford_index = static_cast<uint32_t>(table.sample_gate_index(rng));
    c.gates.push_back(g);
  }
  return c;
}

std::vector<std::size_t> LayeredCircuit::layer_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(layers.size());
  for (const auto& layer : layers) sizes.push_back(layer.size());
  return sizes;
}

std::vector<Gate> LayeredCircuit::flatten() const {
  std::vector<Gate> out;
  for (const auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

LayeredCircuit parallelize(const Circuit& c) {
  LayeredCircuit out;
  out.n = c.n;
  std::vector<uint8_t> busy(c.n, 0);
  std::vector<Gate> current;
  for (const Gate& g : c.gates) {
    if (busy[g.i] || busy[g.j]) {
      out.layers.push_back(std::move(current));
      current.clear();
      std::fill(busy.begin(), busy.end(), 0);
    }
    busy[g.i] = 1;
    busy[g.j] = 1;
    current.push_back(g);
  }
  if (!current.empty()) out.layers.push_back(std::move(current));
  return out;
}

LayeredCircuit parallelize_asap(const Circuit& c) {
  LayeredCircuit out;
  out.n = c.n;
  // next_free[q] = first layer index with no earlier gate on qubit q.
  std::vector<std::size_t> next_free(c.n, 0);
  for (const Gate& g : c.gates) {
    const std::size_t layer = std::max(next_free[g.i], next_free[g.j]);
    if (layer == out.layers.size()) out.layers.emplace_back();
    out.layers[layer].push_back(g);
    next_free[g.i] = layer + 1;
    next_free[g.j] = layer + 1;
  }
  return out;
}

std::size_t max_gates_per_wire(const Circuit& c) {
  std::vector<std::size_t> count(c.n, 0);
  for (const Gate& g : c.gates) {
    ++count[g.i];
    ++count[g.j];
  }
  std::size_t best = 0;
  for (std::size_t v : count) best = std::max(best, v);
  return best;
}

} // namespace randcliff
