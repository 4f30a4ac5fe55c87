#include "distance.hpp"

#include <bit>
#include <stdexcept>
#include <thread>
#include <vector>

#include "json.hpp"
#include "statevector.hpp"

namespace randcliff {

namespace {

// Generator layout for the qualifying-nu group, bit g of a pattern:
//   g in [0, k):      X on qubit g
//   g in [k, 2k):     Z on qubit g - k
//   g in [2k, n + k): Z on qubit g - k (ancilla)
PauliString pattern_to_nu(std::size_t n, std::size_t k, uint64_t pattern) {
  PauliString p(n);
  for (std::size_t q = 0; q < k; ++q) {
    p.set_x(q, (pattern >> q) & 1);
  }
  for (std::size_t g = k; g < n + k; ++g) {
    p.set_z(g - k, (pattern >> g) & 1);
  }
  return p;
}

PauliString generator_pauli(std::size_t n, std::size_t k, std::size_t g) {
  PauliString p(n);
  if (g < k) {
    p.set_x(g, true);
  } else {
    p.set_z(g - k, true);
  }
  return p;
}

struct SegmentBest {
  std::size_t weight = SIZE_MAX;
  uint64_t pattern = 0;
};

// Walk Gray indices [lo, hi); score patterns whose logical part is nonzero.
SegmentBest scan_segment(const CliffordTableau& tab, std::size_t k,
                         const std::vector<PauliString>& gen_images, uint64_t lo, uint64_t hi,
                         uint64_t logical_mask) {
  const std::size_t n = tab.num_qubits();
  uint64_t pattern = (lo - 1) ^ ((lo - 1) >> 1);
  PauliString img = tab.conjugate(pattern_to_nu(n, k, pattern));
  SegmentBest best;
  PauliString best_nu(n);
  for (uint64_t s = lo; s < hi; ++s) {
    const unsigned g = static_cast<unsigned>(std::countr_zero(s));
    pattern ^= uint64_t{1} << g;
    img.multiply_inplace(gen_images[g]);
    if ((pattern & logical_mask) == 0) continue;
    const std::size_t w = img.weight();
    if (w > best.weight) continue;
    if (w < best.weight) {
      best.weight = w;
      best.pattern = pattern;
      best_nu = pattern_to_nu(n, k, pattern);
      continue;
    }
    PauliString cand = pattern_to_nu(n, k, pattern);
    if (cand.compare(best_nu) < 0) {
      best.pattern = pattern;
      best_nu = std::move(cand);
    }
  }
  return best;
}

} // namespace

std::string DistanceReport::to_json() const {
  nlohmann::json doc;
  doc["method"] = method;
  doc["distance"] = distance;
  doc["witness"] = witness.format();
  doc["witness_image"] = witness_image.format();
  return doc.dump(2) + "\n";
}

DistanceReport distance_exact(const CliffordTableau& tab, std::size_t k, uint64_t budget,
                              unsigned workers) {
  const std::size_t n = tab.num_qubits();
  if (k < 1 || k > n) throw std::invalid_argument("distance: need 1 <= k <= n");
  const std::size_t bits = n + k;
  if (bits >= 63 || (uint64_t{1} << bits) > budget) {
    throw std::invalid_argument(
        "distance: enumeration space 4^k * 2^(n-k) exceeds the budget; use monte_carlo");
  }
  const uint64_t total = uint64_t{1} << bits;
  const uint64_t logical_mask = (uint64_t{1} << (2 * k)) - 1;

  std::vector<PauliString> gen_images;
  gen_images.reserve(bits);
  for (std::size_t g = 0; g < bits; ++g) {
    gen_images.push_back(tab.conjugate(generator_pauli(n, k, g)));
  }

  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  const uint64_t steps = total - 1; // Gray indices 1 .. total-1
  workers = static_cast<unsigned>(std::min<uint64_t>(workers, std::max<uint64_t>(1, steps / 4096)));

  std::vector<SegmentBest> results(workers);
  if (workers == 1) {
    results[0] = scan_segment(tab, k, gen_images, 1, total, logical_mask);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const uint64_t lo = 1 + steps * w / workers;
      const uint64_t hi = 1 + steps * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        results[w] = scan_segment(tab, k, gen_images, lo, hi, logical_mask);
      });
    }
    for (auto& th : pool) th.join();
  }

  SegmentBest best;
  PauliString best_nu(n);
  for (const SegmentBest& r : results) {
    if (r.weight > best.weight) continue;
    PauliString cand = pattern_to_nu(n, k, r.pattern);
    if (r.weight < best.weight || cand.compare(best_nu) < 0) {
      best = r;
      best_nu = std::move(cand);
    }
  }

  DistanceReport report;
  report.method = "exact";
  report.distance = best.weight;
  report.witness = best_nu;
  report.witness_image = tab.conjugate(best_nu);
  return report;
}

DistanceReport distance_monte_carlo(const CliffordTableau& tab, std::size_t k, uint64_t samples,
                                    CounterRng& rng) {
  const std::size_t n = tab.num_qubits();
  if (k < 1 || k > n) throw std::invalid_argument("distance: need 1 <= k <= n");
  if (samples < 1) throw std::invalid_argument("distance: need at least one sample");

  std::size_t best_weight = SIZE_MAX;
  PauliString best_nu(n);
  std::vector<uint8_t> letters(k);
  for (uint64_t s = 0; s < samples; ++s) {
    PauliString nu(n);
    bool nonzero = false;
    while (!nonzero) {
      for (std::size_t q = 0; q < k; ++q) {
        letters[q] = static_cast<uint8_t>(rng.next_below(4));
        nonzero = nonzero || letters[q] != 0;
      }
    }
    for (std::size_t q = 0; q < k; ++q) {
      nu.set_x(q, letters[q] == 1 || letters[q] == 2);
      nu.set_z(q, letters[q] == 2 || letters[q] == 3);
    }
    for (std::size_t q = k; q < n; ++q) {
      nu.set_z(q, rng.next_below(2) == 1);
    }
    const std::size_t w = tab.conjugate(nu).weight();
    if (w < best_weight || (w == best_weight && nu.compare(best_nu) < 0)) {
      best_weight = w;
      best_nu = nu;
    }
  }

  DistanceReport report;
  report.method = "monte_carlo";
  report.distance = best_weight;
  report.witness = best_nu;
  report.witness_image = tab.conjugate(best_nu);
  return report;
}

KlOracleReport kl_oracle(const Circuit& c, std::size_t k, std::size_t d_max) {
  const std::size_t n = c.n;
  if (n > kOracleQubitLimit) {
    throw std::invalid_argument("kl_oracle: qubit count above the dense-state limit");
  }
  if (k < 1 || k > n) throw std::invalid_argument("kl_oracle: need 1 <= k <= n");
  if (d_max > n) throw std::invalid_argument("kl_oracle: d_max > n");

  const TwoQubitCliffordTable& table = shared_gate_table();
  const std::size_t num_codewords = std::size_t{1} << k;
  std::vector<StateVector> codewords;
  codewords.reserve(num_codewords);
  for (std::size_t x = 0; x < num_codewords; ++x) {
    StateVector s = StateVector::basis(n, x);
    s.apply_circuit(table, c);
    codewords.push_back(std::move(s));
  }

  KlOracleReport report;
  std::vector<std::size_t> support(n);
  std::vector<std::complex<double>> diag(num_codewords);
  for (std::size_t w = 1; w <= d_max; ++w) {
    // supports = w-subsets of qubits, letters = {X,Y,Z}^w
    for (std::size_t i = 0; i < w; ++i) support[i] = i;
    while (true) {
      std::size_t letter_count = 1;
      for (std::size_t i = 0; i < w; ++i) letter_count *= 3;
      for (std::size_t sel = 0; sel < letter_count; ++sel) {
        PauliString mu(n);
        std::size_t rem = sel;
        for (std::size_t i = 0; i < w; ++i) {
          const std::size_t letter = rem % 3; // 0=X, 1=Y, 2=Z
          rem /= 3;
          mu.set_x(support[i], letter != 2);
          mu.set_z(support[i], letter != 0);
        }
        bool violated = false;
        for (std::size_t a = 0; a < num_codewords && !violated; ++a) {
          diag[a] = codewords[a].pauli_matrix_element(mu, codewords[a]);
          for (std::size_t b = a + 1; b < num_codewords; ++b) {
            const std::complex<double> off = codewords[a].pauli_matrix_element(mu, codewords[b]);
            if (std::abs(off) > kOracleTolerance) {
              violated = true;
              break;
            }
          }
        }
        if (!violated) {
          std::complex<double> mean{0.0, 0.0};
          for (std::size_t a = 0; a < num_codewords; ++a) mean += diag[a];
          mean /= static_cast<double>(num_codewords);
          if (std::abs(mean.imag()) > kOracleTolerance) report.non_real_mean = true;
          for (std::size_t a = 0; a < num_codewords; ++a) {
            if (std::abs(diag[a] - mean) > kOracleTolerance) {
              violated = true;
              break;
            }
          }
        }
        if (violated) {
          report.distance = w;
          return report;
        }
      }
      // next combination
      std::size_t i = w;
      while (i > 0 && support[i - 1] == n - w + (i - 1)) --i;
      if (i == 0) break;
      ++support[i - 1];
      for (std::size_t j = i; j < w; ++j) support[j] = support[j - 1] + 1;
    }
  }
  report.distance = d_max + 1;
  return report;
}

std::size_t kl_oracle_distance(const Circuit& c, std::size_t k, std::size_t d_max) {
  return kl_oracle(c, k, d_max).distance;
}

} // namespace randcliff
