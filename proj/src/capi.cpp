#include "randcliff/randcliff.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "bounds.hpp"
#include "circuit.hpp"
#include "clifford_table.hpp"
#include "distance.hpp"
#include "experiments.hpp"
#include "rng.hpp"
#include "weight_chain.hpp"

struct rc_table {
  const randcliff::TwoQubitCliffordTable* impl;
};

struct rc_circuit {
  randcliff::Circuit impl;
};

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
rc_status guard(Fn&& fn) {
  try {
    fn();
    return RC_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return RC_INVALID_ARGUMENT;
  } catch (const std::runtime_error& e) {
    g_last_error = e.what();
    return RC_RUNTIME_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RC_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return RC_INTERNAL_ERROR;
  }
}

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

} // namespace

extern "C" {

const char* rc_last_error(void) { return g_last_error.c_str(); }

void rc_string_free(char* s) { std::free(s); }

rc_status rc_table_create(rc_table** out) {
  return guard([&] {
    require(out != nullptr, "rc_table_create: out is null");
    *out = new rc_table{&randcliff::shared_gate_table()};
  });
}

void rc_table_free(rc_table* table) { delete table; }

rc_status rc_table_size(const rc_table* table, size_t* out) {
  return guard([&] {
    require(table != nullptr && out != nullptr, "rc_table_size: null argument");
    *out = table->impl->size();
  });
}

rc_status rc_table_checksum(const rc_table* table, char** out) {
  return guard([&] {
    require(table != nullptr && out != nullptr, "rc_table_checksum: null argument");
    *out = dup_string(table->impl->checksum());
  });
}

rc_status rc_table_transfer_count(const rc_table* table, unsigned mu_code, unsigned nu_code,
                                  size_t* out) {
  return guard([&] {
    require(table != nullptr && out != nullptr, "rc_table_transfer_count: null argument");
    require(mu_code >= 1 && mu_code <= 15, "rc_table_transfer_count: mu_code outside 1..15");
    require(nu_code >= 1 && nu_code <= 15, "rc_table_transfer_count: nu_code outside 1..15");
    size_t count = 0;
    for (size_t g = 0; g < table->impl->size(); ++g) {
      if ((table->impl->conjugate_code(g, mu_code) & 0x0F) == nu_code) ++count;
    }
    *out = count;
  });
}

rc_status rc_circuit_sample(const rc_table* table, size_t n, size_t t, uint64_t seed,
                            rc_circuit** out) {
  return guard([&] {
    require(table != nullptr && out != nullptr, "rc_circuit_sample: null argument");
    randcliff::CounterRng rng(seed);
    randcliff::Circuit c = randcliff::sample_circuit(*table->impl, n, t, rng);
    c.seed = seed;
    *out = new rc_circuit{std::move(c)};
  });
}

rc_status rc_circuit_from_json(const rc_table* table, const char* json, rc_circuit** out) {
  return guard([&] {
    require(table != nullptr && json != nullptr && out != nullptr,
            "rc_circuit_from_json: null argument");
    *out = new rc_circuit{randcliff::Circuit::from_json(json, *table->impl)};
  });
}

void rc_circuit_free(rc_circuit* c) { delete c; }

rc_status rc_circuit_to_json(const rc_table* table, const rc_circuit* c, char** out_json) {
  return guard([&] {
    require(table != nullptr && c != nullptr && out_json != nullptr,
            "rc_circuit_to_json: null argument");
    *out_json = dup_string(c->impl.to_json(*table->impl));
  });
}

rc_status rc_circuit_qubits(const rc_circuit* c, size_t* out) {
  return guard([&] {
    require(c != nullptr && out != nullptr, "rc_circuit_qubits: null argument");
    *out = c->impl.n;
  });
}

rc_status rc_circuit_gate_count(const rc_circuit* c, size_t* out) {
  return guard([&] {
    require(c != nullptr && out != nullptr, "rc_circuit_gate_count: null argument");
    *out = c->impl.gates.size();
  });
}

rc_status rc_circuit_parallelize(const rc_circuit* c, int asap, char** out_json) {
  return guard([&] {
    require(c != nullptr && out_json != nullptr, "rc_circuit_parallelize: null argument");
    const randcliff::LayeredCircuit lc =
        asap ? randcliff::parallelize_asap(c->impl) : randcliff::parallelize(c->impl);
    nlohmann::ordered_json doc;
    doc["scheduler"] = asap ? "asap" : "greedy";
    doc["n"] = lc.n;
    doc["gates"] = c->impl.gates.size();
    doc["depth"] = lc.depth();
    doc["layer_sizes"] = lc.layer_sizes();
    *out_json = dup_string(doc.dump(2) + "\n");
  });
}

rc_status rc_distance_exact(const rc_table* table, const rc_circuit* c, size_t k, uint64_t budget,
                            unsigned workers, char** out_json) {
  return guard([&] {
    require(table != nullptr && c != nullptr && out_json != nullptr,
            "rc_distance_exact: null argument");
    const randcliff::CliffordTableau tab = c->impl.to_tableau(*table->impl);
    const randcliff::DistanceReport report = randcliff::distance_exact(
        tab, k, budget == 0 ? randcliff::kDefaultDistanceBudget : budget, workers);
    *out_json = dup_string(report.to_json());
  });
}

rc_status rc_distance_monte_carlo(const rc_table* table, const rc_circuit* c, size_t k,
                                  uint64_t samples, uint64_t seed, char** out_json) {
  return guard([&] {
    require(table != nullptr && c != nullptr && out_json != nullptr,
            "rc_distance_monte_carlo: null argument");
    const randcliff::CliffordTableau tab = c->impl.to_tableau(*table->impl);
    randcliff::CounterRng rng(seed);
    const randcliff::DistanceReport report = randcliff::distance_monte_carlo(tab, k, samples, rng);
    *out_json = dup_string(report.to_json());
  });
}

rc_status rc_kl_oracle_distance(const rc_circuit* c, size_t k, size_t d_max, size_t* out) {
  return guard([&] {
    require(c != nullptr && out != nullptr, "rc_kl_oracle_distance: null argument");
    *out = randcliff::kl_oracle_distance(c->impl, k, d_max);
  });
}

rc_status rc_gv_rate_bound(double delta, double* out) {
  return guard([&] {
    require(out != nullptr, "rc_gv_rate_bound: null argument");
    *out = randcliff::gv_rate_bound(delta);
  });
}

rc_status rc_chain_transition_row(size_t n, size_t ell, double* down, double* stay, double* up) {
  return guard([&] {
    require(down != nullptr && stay != nullptr && up != nullptr,
            "rc_chain_transition_row: null argument");
    const randcliff::TransitionRow row = randcliff::transition_row(n, ell);
    *down = row.down;
    *stay = row.stay;
    *up = row.up;
  });
}

rc_status rc_chain_evolve(size_t n, size_t ell0, size_t t, double* probs) {
  return guard([&] {
    require(probs != nullptr, "rc_chain_evolve: null argument");
    const randcliff::WeightDistribution d = randcliff::evolve(n, ell0, t);
    for (size_t w = 0; w <= n; ++w) probs[w] = d.probs[w];
  });
}

rc_status rc_chain_stationary(size_t n, double* probs) {
  return guard([&] {
    require(probs != nullptr, "rc_chain_stationary: null argument");
    const randcliff::WeightDistribution d = randcliff::stationary(n);
    for (size_t w = 0; w <= n; ++w) probs[w] = d.probs[w];
  });
}

rc_status rc_chain_evolve_exact(size_t n, size_t ell0, size_t t, char** out_json) {
  return guard([&] {
    require(out_json != nullptr, "rc_chain_evolve_exact: null argument");
    const randcliff::ExactChainRow row = randcliff::evolve_exact(n, ell0, t);
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["l0"] = ell0;
    doc["t"] = t;
    doc["numerators"] = row.numerators;
    doc["denominator"] = row.denominator;
    doc["probs"] = row.probs;
    *out_json = dup_string(doc.dump(2) + "\n");
  });
}

rc_status rc_union_bound(size_t n, size_t k, size_t d, size_t t, double* out) {
  return guard([&] {
    require(out != nullptr, "rc_union_bound: null argument");
    randcliff::BoundParams params;
    params.n = n;
    params.k = k;
    params.d = d;
    params.t = t;
    *out = randcliff::union_bound(params);
  });
}

rc_status rc_union_bound_exact(size_t n, size_t k, size_t d, size_t t, double* out) {
  return guard([&] {
    require(out != nullptr, "rc_union_bound_exact: null argument");
    randcliff::BoundParams params;
    params.n = n;
    params.k = k;
    params.d = d;
    params.t = t;
    *out = randcliff::union_bound_exact(params);
  });
}

rc_status rc_closed_form_bound(size_t n, size_t k, size_t d, double delta, double* out) {
  return guard([&] {
    require(out != nullptr, "rc_closed_form_bound: null argument");
    randcliff::BoundParams params;
    params.n = n;
    params.k = k;
    params.d = d;
    params.delta = delta;
    *out = randcliff::closed_form_failure_bound(params);
  });
}

rc_status rc_check_mixing(size_t n, size_t t, double delta, double eta, double c,
                          char** out_json) {
  return guard([&] {
    require(out_json != nullptr, "rc_check_mixing: null argument");
    randcliff::BoundParams params;
    params.n = n;
    params.t = t;
    params.delta = delta;
    params.eta = eta;
    params.c = c;
    const randcliff::MixingReport report = randcliff::check_theorem2(params);
    nlohmann::ordered_json doc;
    doc["n"] = report.n;
    doc["t"] = report.t;
    doc["delta"] = report.delta;
    doc["eta"] = report.eta;
    doc["c"] = report.c;
    doc["holds"] = report.holds();
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"l", v.ell}, {"m", v.m}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    }
    doc["violations"] = std::move(violations);
    *out_json = dup_string(doc.dump(2) + "\n");
  });
}

rc_status rc_experiment_run(const char* config_json, char** out_report_json, int* out_ok) {
  return guard([&] {
    require(config_json != nullptr && out_report_json != nullptr && out_ok != nullptr,
            "rc_experiment_run: null argument");
    const randcliff::ExperimentConfig cfg = randcliff::ExperimentConfig::from_json(config_json);
    const randcliff::ExperimentReport report = randcliff::run_experiment(cfg);
    *out_report_json = dup_string(report.json);
    *out_ok = report.invariants_ok ? 1 : 0;
  });
}

} // extern "C"
