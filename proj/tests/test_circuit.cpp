#include "doctest.h"

#include "test_helpers.hpp"

#include "circuit.hpp"
#include "clifford_table.hpp"
#include "rng.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

using namespace randcliff;

namespace {

Circuit pairs_only(std::size_t n, std::vector<std::pair<uint32_t, uint32_t>> ps) {
  Circuit c;
  c.n = n;
  for (auto [i, j] : ps) c.gates.push_back(Gate{i, j, 0});
  return c;
}

}  // namespace

TEST_CASE("sampling with t=0 gives the empty circuit and identity tableau") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  Circuit c = testutil::sample(table, 4, 0, 1);
  CHECK(c.gates.empty());
  CHECK(c.to_tableau(table) == CliffordTableau::identity(4));
}

TEST_CASE("sampled gates are valid and pairs are uniform") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  const std::size_t n = 8;
  const std::size_t t = 200000;
  Circuit c = testutil::sample(table, n, t, 20240601);
  std::vector<std::size_t> counts(n * n, 0);
  double index_sum = 0;
  for (const Gate& g : c.gates) {
    REQUIRE(g.i < n);
    REQUIRE(g.j < n);
    REQUIRE(g.i != g.j);
    REQUIRE(g.clifford_index < table.size());
    ++counts[g.i * n + g.j];
    index_sum += g.clifford_index;
  }
  // 56 ordered pairs, expectation t/56, sigma = sqrt(t p (1-p)). The seed is
  // pinned so the 4-sigma margin is deterministic.
  const double expect = static_cast<double>(t) / 56.0;
  const double sigma = std::sqrt(static_cast<double>(t) * (1.0 / 56.0) * (55.0 / 56.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        CHECK(counts[i * n + j] == 0);
      } else {
        CHECK(std::abs(static_cast<double>(counts[i * n + j]) - expect) < 4.0 * sigma);
      }
    }
  // Mean gate index should sit near (11520-1)/2.
  const double mean = index_sum / static_cast<double>(t);
  const double sigma_mean = 11520.0 / std::sqrt(12.0 * static_cast<double>(t));
  CHECK(std::abs(mean - 5759.5) < 5.0 * sigma_mean);
}

TEST_CASE("json round trip preserves the circuit") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  Circuit c = testutil::sample(table, 5, 17, 99);
  std::string text = c.to_json(table);
  Circuit back = Circuit::from_json(text, table);
  CHECK(back.n == c.n);
  CHECK(back.seed == c.seed);
  REQUIRE(back.gates.size() == c.gates.size());
  for (std::size_t g = 0; g < c.gates.size(); ++g) CHECK(back.gates[g] == c.gates[g]);
}

TEST_CASE("json with a stale gate table checksum is rejected") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  Circuit c = testutil::sample(table, 3, 4, 7);
  std::string text = c.to_json(table);
  std::string stale = text;
  std::size_t pos = stale.find(table.checksum());
  REQUIRE(pos != std::string::npos);
  stale.replace(pos, 16, "0000000000000000");
  CHECK_THROWS_AS(Circuit::from_json(stale, table), std::invalid_argument);
}

TEST_CASE("json validation catches bad indices") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  std::string base = "{\"n\":3,\"seed\":null,\"gate_table_checksum\":\"" + table.checksum() +
                     "\",\"gates\":[GATE]}";
  auto with = [&](const std::string& gate) {
    std::string t = base;
    t.replace(t.find("GATE"), 4, gate);
    return t;
  };
  CHECK_THROWS_AS(Circuit::from_json(with("{\"i\":0,\"j\":3,\"c\":0}"), table),
                  std::invalid_argument);
  CHECK_THROWS_AS(Circuit::from_json(with("{\"i\":1,\"j\":1,\"c\":0}"), table),
                  std::invalid_argument);
  CHECK_THROWS_AS(Circuit::from_json(with("{\"i\":0,\"j\":1,\"c\":11520}"), table),
                  std::invalid_argument);
  CHECK(Circuit::from_json(with("{\"i\":0,\"j\":1,\"c\":11519}"), table).gates.size() == 1);
}

TEST_CASE("greedy leveling matches the worked examples") {
  // (0,1),(2,3),(0,2): the third gate conflicts, so depth 2 with sizes [2,1].
  LayeredCircuit a = parallelize(pairs_only(4, {{0, 1}, {2, 3}, {0, 2}}));
  CHECK(a.depth() == 2);
  CHECK(a.layer_sizes() == std::vector<std::size_t>{2, 1});

  // Repeating the same pair forces one layer per gate.
  LayeredCircuit b = parallelize(pairs_only(2, {{0, 1}, {0, 1}, {0, 1}}));
  CHECK(b.depth() == 3);

  // Disjoint pairs pack into a single layer.
  LayeredCircuit c = parallelize(pairs_only(6, {{0, 1}, {2, 3}, {4, 5}}));
  CHECK(c.depth() == 1);
  CHECK(c.layers[0].size() == 3);

  // Empty circuit has depth 0.
  CHECK(parallelize(pairs_only(3, {})).depth() == 0);
}

TEST_CASE("greedy and asap agree on the closed-the-layer example") {
  // (0,1),(0,1),(2,3): greedy closes after the repeat and files (2,3) into
  // the second layer; asap puts (2,3) into the first. Both have depth 2.
  Circuit c = pairs_only(4, {{0, 1}, {0, 1}, {2, 3}});
  LayeredCircuit greedy = parallelize(c);
  LayeredCircuit asap = parallelize_asap(c);
  CHECK(greedy.depth() == 2);
  CHECK(asap.depth() == 2);
  CHECK(greedy.layer_sizes() == std::vector<std::size_t>{1, 2});
  CHECK(asap.layer_sizes() == std::vector<std::size_t>{2, 1});
}

TEST_CASE("asap never exceeds greedy depth and both respect bounds") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Circuit c = testutil::sample(table, 9, 60, 3000 + seed);
    LayeredCircuit greedy = parallelize(c);
    LayeredCircuit asap = parallelize_asap(c);
    std::size_t wire = max_gates_per_wire(c);
    CHECK(asap.depth() <= greedy.depth());
    CHECK(greedy.depth() <= c.gates.size());
    CHECK(asap.depth() >= wire);
    CHECK(greedy.depth() >= wire);
    for (const auto& layer : greedy.layers) CHECK(!layer.empty());
    for (const auto& layer : asap.layers) CHECK(!layer.empty());
  }
}

TEST_CASE("layers partition the gates and keep per-wire order") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Circuit c = testutil::sample(table, 7, 40, 4000 + seed);
    for (bool asap : {false, true}) {
      LayeredCircuit lc = asap ? parallelize_asap(c) : parallelize(c);
      std::vector<Gate> flat = lc.flatten();
      REQUIRE(flat.size() == c.gates.size());
      if (!asap) {
        // Greedy preserves the full gate order.
        for (std::size_t g = 0; g < flat.size(); ++g) CHECK(flat[g] == c.gates[g]);
      }
      // Per wire, the flattened order must be a subsequence of the source.
      for (uint32_t q = 0; q < 7; ++q) {
        std::vector<Gate> src, out;
        for (const Gate& g : c.gates)
          if (g.i == q || g.j == q) src.push_back(g);
        for (const Gate& g : flat)
          if (g.i == q || g.j == q) out.push_back(g);
        REQUIRE(src.size() == out.size());
        for (std::size_t g = 0; g < src.size(); ++g) CHECK(src[g] == out[g]);
      }
      // Layers have disjoint support.
      for (const auto& layer : lc.layers) {
        std::vector<int> used(7, 0);
        for (const Gate& g : layer) {
          CHECK(!used[g.i]);
          CHECK(!used[g.j]);
          used[g.i] = used[g.j] = 1;
        }
      }
    }
  }
}

TEST_CASE("layered replay acts the same unitary") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  for (uint64_t seed = 0; seed < 6; ++seed) {
    Circuit c = testutil::sample(table, 6, 30, 5000 + seed);
    CliffordTableau want = c.to_tableau(table);
    for (bool asap : {false, true}) {
      LayeredCircuit lc = asap ? parallelize_asap(c) : parallelize(c);
      Circuit replay;
      replay.n = c.n;
      replay.gates = lc.flatten();
      CHECK(replay.to_tableau(table) == want);
    }
  }
}

TEST_CASE("one layer at most doubles Pauli weight") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  CounterRng rng(71);
  for (uint64_t seed = 0; seed < 8; ++seed) {
    Circuit c = testutil::sample(table, 10, 80, 6000 + seed);
    LayeredCircuit lc = parallelize_asap(c);
    for (int trial = 0; trial < 5; ++trial) {
      PauliString p = testutil::random_pauli(10, rng, /*hermitian=*/true);
      for (const auto& layer : lc.layers) {
        Circuit step;
        step.n = c.n;
        step.gates = layer;
        PauliString next = step.conjugate(table, p);
        if (p.weight() > 0) {
          CHECK(next.weight() <= 2 * p.weight());
          CHECK(next.weight() >= (p.weight() + 1) / 2);
        }
        p = next;
      }
    }
  }
}

TEST_CASE("circuit conjugate matches tableau conjugate") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  CounterRng rng(73);
  Circuit c = testutil::sample(table, 8, 50, 7777);
  CliffordTableau t = c.to_tableau(table);
  for (int trial = 0; trial < 40; ++trial) {
    PauliString p = testutil::random_pauli(8, rng, /*hermitian=*/true);
    PauliString a = c.conjugate(table, p);
    PauliString b = t.conjugate(p);
    CHECK(a == b);
    CHECK(a.phase_exponent() == b.phase_exponent());
  }
}

TEST_CASE("sampling is reproducible for a fixed seed") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  Circuit a = testutil::sample(table, 6, 25, 1234);
  Circuit b = testutil::sample(table, 6, 25, 1234);
  REQUIRE(a.gates.size() == b.gates.size());
  for (std::size_t g = 0; g < a.gates.size(); ++g) CHECK(a.gates[g] == b.gates[g]);
  Circuit d = testutil::sample(table, 6, 25, 1235);
  bool all_same = true;
  for (std::size_t g = 0; g < a.gates.size(); ++g)
    if (!(a.gates[g] == d.gates[g])) all_same = false;
  CHECK_FALSE(all_same);
}
