#include "doctest.h"

#include "test_helpers.hpp"

#include "circuit.hpp"
#include "clifford_table.hpp"
#include "pauli.hpp"
#include "rng.hpp"
#include "tableau.hpp"

using namespace randcliff;

TEST_CASE("identity tableau conjugates every Pauli to itself") {
  CliffordTableau id = CliffordTableau::identity(3);
  CounterRng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    PauliString p = testutil::random_pauli(3, rng, /*hermitian=*/true);
    PauliString q = id.conjugate(p);
    CHECK(q == p);
    CHECK(q.phase_exponent() == p.phase_exponent());
  }
  CHECK(id.is_valid());
}

TEST_CASE("single-gate conjugation matches the dense unitary model") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  CounterRng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t g = table.sample_gate_index(rng);
    CliffordTableau t = table.tableau(g);
    REQUIRE(t.is_valid());
    dense::Matrix u = testutil::unitary_of_gate(table, g, 2, 0, 1);
    for (unsigned code = 0; code < 16; ++code) {
      PauliString p(2);
      TwoQubitCliffordTable::write_code(p, 0, 1, code);
      PauliString img = t.conjugate(p);
      CHECK(img.is_hermitian());
      dense::Matrix want = testutil::conjugated_pauli_matrix(u, p);
      CHECK(dense::max_abs_diff(dense::pauli_matrix(img), want) < 1e-9);
    }
  }
}

TEST_CASE("circuit tableau conjugation matches the dense unitary model at n=3") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  CounterRng rng(101);
  for (int trial = 0; trial < 8; ++trial) {
    Circuit c = testutil::sample(table, 3, 15, 500 + static_cast<uint64_t>(trial));
    CliffordTableau t = c.to_tableau(table);
    REQUIRE(t.is_valid());
    dense::Matrix u = testutil::unitary_of_circuit(table, c);
    for (int k = 0; k < 12; ++k) {
      PauliString p = testutil::random_pauli(3, rng, /*hermitian=*/true);
      PauliString img = t.conjugate(p);
      dense::Matrix want = testutil::conjugated_pauli_matrix(u, p);
      CHECK(dense::max_abs_diff(dense::pauli_matrix(img), want) < 1e-9);
    }
  }
}

TEST_CASE("tableau conjugation agrees with direct per-gate conjugation") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  CounterRng rng(303);
  for (int trial = 0; trial < 10; ++trial) {
    Circuit c = testutil::sample(table, 6, 40, 900 + static_cast<uint64_t>(trial));
    CliffordTableau t = c.to_tableau(table);
    for (int k = 0; k < 10; ++k) {
      PauliString p = testutil::random_pauli(6, rng, /*hermitian=*/true);
      PauliString via_tableau = t.conjugate(p);
      PauliString via_gates = c.conjugate(table, p);
      CHECK(via_tableau == via_gates);
      CHECK(via_tableau.phase_exponent() == via_gates.phase_exponent());
    }
  }
}

TEST_CASE("conjugation preserves commutation relations") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  CounterRng rng(404);
  Circuit c = testutil::sample(table, 5, 30, 777);
  CliffordTableau t = c.to_tableau(table);
  for (int trial = 0; trial < 100; ++trial) {
    PauliString a = testutil::random_pauli(5, rng, /*hermitian=*/true);
    PauliString b = testutil::random_pauli(5, rng, /*hermitian=*/true);
    CHECK(a.symplectic_product(b) == t.conjugate(a).symplectic_product(t.conjugate(b)));
  }
}

TEST_CASE("conjugation is multiplicative") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  CounterRng rng(505);
  Circuit c = testutil::sample(table, 4, 25, 888);
  CliffordTableau t = c.to_tableau(table);
  for (int trial = 0; trial < 60; ++trial) {
    PauliString a = testutil::random_pauli(4, rng);
    PauliString b = testutil::random_pauli(4, rng);
    PauliString lhs = t.conjugate(a.multiply(b));
    PauliString rhs = t.conjugate(a).multiply(t.conjugate(b));
    CHECK(lhs == rhs);
    CHECK(lhs.phase_exponent() == rhs.phase_exponent());
  }
}

TEST_CASE("is_valid rejects broken tableaux") {
  CliffordTableau t = CliffordTableau::identity(2);
  REQUIRE(t.is_valid());

  CliffordTableau dup = t;
  dup.set_z_image(0, PauliString::parse("+XI"));  // collides with x_image(0)
  CHECK_FALSE(dup.is_valid());

  CliffordTableau comm = t;
  comm.set_z_image(0, PauliString::parse("+ZZ"));
  comm.set_z_image(1, PauliString::parse("+IZ"));
  // z_image(0) must anticommute with x_image(0) (it does) and commute with
  // x_image(1) (ZZ vs IX anticommute), so this is invalid.
  CHECK_FALSE(comm.is_valid());

  CliffordTableau phase_bad = t;
  PauliString odd = PauliString::parse("+iXI");
  CHECK_THROWS(phase_bad.set_x_image(0, odd));
}

TEST_CASE("random circuit tableaux stay valid at larger n") {
  const TwoQubitCliffordTable& table = shared_gate_table();
  for (uint64_t seed = 0; seed < 5; ++seed) {
    Circuit c = testutil::sample(table, 12, 100, 12000 + seed);
    CHECK(c.to_tableau(table).is_valid());
  }
}
