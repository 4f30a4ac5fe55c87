#include "doctest.h"

#include "dense_oracle.hpp"
#include "pauli.hpp"
#include "rng.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

using namespace randcliff;

namespace {

PauliString random_pauli(std::size_t n, CounterRng& rng) {
  PauliString p(n);
  for (std::size_t q = 0; q < n; ++q) {
    std::uint64_t c = rng.next_below(4);
    p.set_x(q, (c & 1) != 0);
    p.set_z(q, (c & 2) != 0);
  }
  p.set_phase_exponent(static_cast<int>(rng.next_below(4)));
  return p;
}

// codes use the packed convention: 0=I, 1=X, 2=Z, 3=Y.
PauliString from_codes(const std::vector<int>& codes, int phase) {
  PauliString p(codes.size());
  for (std::size_t q = 0; q < codes.size(); ++q) {
    int c = codes[q];
    p.set_x(q, (c & 1) != 0);
    p.set_z(q, (c & 2) != 0);
  }
  p.set_phase_exponent(static_cast<uint8_t>(phase));
  return p;
}

}  // namespace

TEST_CASE("single-letter constructors match codes") {
  PauliString x = PauliString::single(3, 0, 'X');
  PauliString y = PauliString::single(3, 1, 'Y');
  PauliString z = PauliString::single(3, 2, 'Z');
  CHECK(x.letter_code(0) == 1);
  CHECK(x.letter_code(1) == 0);
  CHECK(y.letter_code(1) == 3);
  CHECK(z.letter_code(2) == 2);
  CHECK(x.weight() == 1);
  CHECK(y.count_y() == 1);
  CHECK(z.count_y() == 0);
}

TEST_CASE("parse and format round trip") {
  const char* samples[] = {"+XIZY", "-IIII", "+iXYZI", "-iZZZZ", "+X", "-iY"};
  for (const char* s : samples) {
    PauliString p = PauliString::parse(s);
    CHECK(p.format() == s);
    CHECK(PauliString::parse(p.format()).compare(p) == 0);
  }
  // Bare strings default to +.
  CHECK(PauliString::parse("XZ").format() == "+XZ");
  CHECK_THROWS_AS(PauliString::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("+"), std::invalid_argument);
  CHECK_THROWS_AS(PauliString::parse("XQ"), std::invalid_argument);
}

TEST_CASE("weight and y-count over all two-qubit strings") {
  for (int c0 = 0; c0 < 4; ++c0)
    for (int c1 = 0; c1 < 4; ++c1) {
      PauliString p = from_codes({c0, c1}, 0);
      std::size_t want_w = (c0 != 0 ? 1u : 0u) + (c1 != 0 ? 1u : 0u);
      std::size_t want_y = (c0 == 3 ? 1u : 0u) + (c1 == 3 ? 1u : 0u);
      CHECK(p.weight() == want_w);
      CHECK(p.count_y() == want_y);
    }
}

TEST_CASE("multiplication matches the dense matrix model at n=1 and n=2") {
  for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
    std::size_t letters = std::size_t{1} << (2 * n);
    for (std::size_t a = 0; a < letters; ++a)
      for (std::size_t b = 0; b < letters; ++b)
        for (int pa = 0; pa < 4; ++pa) {
          std::vector<int> ca(n), cb(n);
          for (std::size_t q = 0; q < n; ++q) {
            ca[q] = static_cast<int>((a >> (2 * q)) & 3);
            cb[q] = static_cast<int>((b >> (2 * q)) & 3);
          }
          PauliString pl = from_codes(ca, pa);
          PauliString pr = from_codes(cb, 1);
          PauliString prod = pl.multiply(pr);
          dense::Matrix want = dense::multiply(dense::pauli_matrix(pl),
                                               dense::pauli_matrix(pr),
                                               dense::dim_of(static_cast<int>(n)));
          CHECK(dense::max_abs_diff(dense::pauli_matrix(prod), want) < 1e-12);
        }
  }
}

TEST_CASE("multiplication matches the dense matrix model at n=3 and n=4") {
  CounterRng rng(2024);
  for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
    for (int trial = 0; trial < 300; ++trial) {
      PauliString a = random_pauli(n, rng);
      PauliString b = random_pauli(n, rng);
      PauliString prod = a.multiply(b);
      dense::Matrix want = dense::multiply(dense::pauli_matrix(a),
                                           dense::pauli_matrix(b),
                                           dense::dim_of(static_cast<int>(n)));
      CHECK(dense::max_abs_diff(dense::pauli_matrix(prod), want) < 1e-12);
    }
  }
}

TEST_CASE("multiply_inplace agrees with multiply") {
  CounterRng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    PauliString a = random_pauli(9, rng);
    PauliString b = random_pauli(9, rng);
    PauliString want = a.multiply(b);
    PauliString got = a;
    got.multiply_inplace(b);
    CHECK(got.compare(want) == 0);
    CHECK(got.phase_exponent() == want.phase_exponent());
  }
}

TEST_CASE("symplectic product detects commutation") {
  CounterRng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    PauliString a = random_pauli(5, rng);
    PauliString b = random_pauli(5, rng);
    PauliString ab = a.multiply(b);
    PauliString ba = b.multiply(a);
    int sym = a.symplectic_product(b);
    CHECK(sym == b.symplectic_product(a));
    // ab and ba share letters; they differ by (-1)^sym in phase.
    CHECK(ab.x_words() == ba.x_words());
    CHECK(ab.z_words() == ba.z_words());
    int phase_diff = (ab.phase_exponent() - ba.phase_exponent() + 4) % 4;
    CHECK(phase_diff == (sym != 0 ? 2 : 0));
  }
}

TEST_CASE("phase conventions: XZ = -iY and XY = iZ") {
  PauliString x = PauliString::single(1, 0, 'X');
  PauliString y = PauliString::single(1, 0, 'Y');
  PauliString z = PauliString::single(1, 0, 'Z');
  CHECK(x.multiply(z).format() == "-iY");
  CHECK(z.multiply(x).format() == "+iY");
  CHECK(x.multiply(y).format() == "+iZ");
  CHECK(y.multiply(z).format() == "+iX");
  CHECK(x.multiply(x).format() == "+I");
}

TEST_CASE("hermiticity tracks the phase exponent") {
  CounterRng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    PauliString p = random_pauli(3, rng);
    dense::Matrix m = dense::pauli_matrix(p);
    dense::Matrix adj = dense::adjoint(m, dense::dim_of(3));
    bool herm = dense::max_abs_diff(m, adj) < 1e-12;
    CHECK(herm == p.is_hermitian());
    CHECK(herm == (p.phase_exponent() % 2 == 0));
  }
}

TEST_CASE("has_support_in checks qubit ranges") {
  PauliString p = PauliString::parse("+IXIZ");
  CHECK(p.has_support_in(1, 2));
  CHECK(p.has_support_in(3, 4));
  CHECK_FALSE(p.has_support_in(0, 1));
  CHECK_FALSE(p.has_support_in(2, 3));
}

TEST_CASE("compare orders x words before z words before phase") {
  PauliString z = PauliString::parse("+Z");
  PauliString x = PauliString::parse("+X");
  PauliString y = PauliString::parse("+Y");
  // Z has x bits 0 so it sorts before X and Y.
  CHECK(z.compare(x) < 0);
  CHECK(z.compare(y) < 0);
  CHECK(x.compare(y) < 0);  // same x word, X has smaller z word
  CHECK(x.compare(x) == 0);
  PauliString xi = PauliString::parse("+X");
  PauliString xm = PauliString::parse("-X");
  CHECK(xi.compare(xm) < 0);
  CHECK(xm.compare(xi) > 0);
}

TEST_CASE("wide strings cross the 64-qubit word boundary") {
  std::size_t n = 130;
  PauliString p(n);
  p.set_x(63, true);
  p.set_z(64, true);
  p.set_x(129, true);
  p.set_z(129, true);
  CHECK(p.weight() == 3);
  CHECK(p.count_y() == 1);
  PauliString q = p.multiply(p);
  CHECK(q.weight() == 0);
  CHECK(q.phase_exponent() == 0);

  PauliString a(n), b(n);
  a.set_x(100, true);
  b.set_z(100, true);
  CHECK(a.symplectic_product(b) == 1);
  PauliString ab = a.multiply(b);
  CHECK(ab.letter_code(100) == 3);
  CHECK(ab.phase_exponent() == 3);  // XZ = -iY
}
