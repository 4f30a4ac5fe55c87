// Command-line front end; talks to the library through the C interface only.
// Exit codes: 0 success, 1 bad arguments, 2 execution error, 3 checks failed.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "randcliff/randcliff.h"

namespace {

using nlohmann::ordered_json;

[[noreturn]] void die(rc_status status) {
  std::cerr << "error: " << rc_last_error() << "\n";
  std::exit(status == RC_INVALID_ARGUMENT ? 1 : 2);
}

void check(rc_status status) {
  if (status != RC_OK) die(status);
}

std::string take_string(char* s) {
  std::string out(s);
  rc_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(2);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(2);
  }
  out << content;
}

struct TableHandle {
  rc_table* ptr = nullptr;
  TableHandle() { check(rc_table_create(&ptr)); }
  ~TableHandle() { rc_table_free(ptr); }
  TableHandle(const TableHandle&) = delete;
  TableHandle& operator=(const TableHandle&) = delete;
};

struct CircuitHandle {
  rc_circuit* ptr = nullptr;
  ~CircuitHandle() { rc_circuit_free(ptr); }
  CircuitHandle() = default;
  CircuitHandle(const CircuitHandle&) = delete;
  CircuitHandle& operator=(const CircuitHandle&) = delete;
};

int run_experiment_command(const std::string& kind, const std::string& config_path,
                           const ordered_json& overrides) {
  ordered_json cfg = ordered_json::object();
  if (!config_path.empty()) {
    cfg = ordered_json::parse(read_file(config_path));
    if (cfg.contains("kind") && cfg["kind"].get<std::string>() != kind) {
      std::cerr << "error: config kind '" << cfg["kind"].get<std::string>()
                << "' does not match subcommand '" << kind << "'\n";
      return 1;
    }
  }
  cfg["kind"] = kind;
  for (const auto& [key, value] : overrides.items()) {
    cfg[key] = value;
  }
  char* report = nullptr;
  int ok = 0;
  check(rc_experiment_run(cfg.dump().c_str(), &report, &ok));
  std::cout << take_string(report);
  return ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random two-qubit Clifford circuits: codes, distances, and weight-chain bounds"};
  app.require_subcommand(1);

  // sample-circuit
  auto* sample = app.add_subcommand("sample-circuit", "Sample a random circuit and emit JSON");
  std::size_t sc_n = 0, sc_t = 0;
  uint64_t sc_seed = 0;
  std::string sc_out;
  sample->add_option("--n", sc_n, "qubit count")->required();
  sample->add_option("--t", sc_t, "gate count")->required();
  sample->add_option("--seed", sc_seed, "RNG seed")->required();
  sample->add_option("--out", sc_out, "output path (default stdout)");

  // parallelize
  auto* par = app.add_subcommand("parallelize", "Layer a circuit and report its depth");
  std::string par_in;
  bool par_asap = false;
  par->add_option("--in", par_in, "circuit JSON file")->required();
  par->add_flag("--asap", par_asap, "earliest-layer scheduler instead of strict sequential");

  // distance
  auto* dist = app.add_subcommand("distance", "Code distance of a circuit's encoder");
  std::string dist_in;
  std::size_t dist_k = 0;
  bool dist_exact = false;
  uint64_t dist_mc = 0;
  std::size_t dist_oracle = 0;
  uint64_t dist_seed = 0;
  uint64_t dist_budget = 0;
  unsigned dist_workers = 0;
  dist->add_option("--in", dist_in, "circuit JSON file")->required();
  dist->add_option("--k", dist_k, "logical qubit count")->required();
  auto* exact_flag = dist->add_flag("--exact", dist_exact, "exhaustive enumeration (default)");
  auto* mc_opt = dist->add_option("--mc", dist_mc, "Monte Carlo with this many samples");
  auto* oracle_opt =
      dist->add_option("--oracle", dist_oracle, "also run the statevector check up to this weight");
  dist->add_option("--seed", dist_seed, "RNG seed for --mc");
  dist->add_option("--budget", dist_budget, "exact enumeration budget (0 = default)");
  dist->add_option("--workers", dist_workers, "exact enumeration threads (0 = auto)");
  exact_flag->excludes(mc_opt);

  // chain-evolve
  auto* chain = app.add_subcommand("chain-evolve", "Weight-chain row after t gates");
  std::size_t ch_n = 0, ch_l0 = 0, ch_t = 0;
  bool ch_exact = false;
  chain->add_option("--n", ch_n, "qubit count")->required();
  chain->add_option("--l0", ch_l0, "start weight")->required();
  chain->add_option("--t", ch_t, "steps")->required();
  chain->add_flag("--exact-rational", ch_exact, "exact rational arithmetic (n <= 64)");

  // bound
  auto* bound = app.add_subcommand("bound", "Union bound on Pr[distance <= d]");
  std::size_t b_n = 0, b_k = 0, b_d = 0, b_t = 0;
  bool b_closed = false, b_exact = false;
  double b_delta = 0.0;
  bound->add_option("--n", b_n, "qubit count")->required();
  bound->add_option("--k", b_k, "logical qubit count")->required();
  bound->add_option("--d", b_d, "distance threshold")->required();
  bound->add_option("--t", b_t, "gate count")->required();
  auto* closed_flag = bound->add_flag("--closed-form", b_closed, "also evaluate the closed form");
  auto* delta_opt = bound->add_option("--delta", b_delta, "slack parameter for --closed-form");
  closed_flag->needs(delta_opt);
  bound->add_flag("--exact-rational", b_exact, "also evaluate in exact rationals (n <= 64)");

  // check-thm2
  auto* mix = app.add_subcommand("check-thm2", "Mixing bound check over all start weights");
  std::size_t m_n = 0, m_t = 0;
  double m_delta = 0.0, m_eta = 0.0, m_c = 0.0;
  mix->add_option("--n", m_n, "qubit count")->required();
  mix->add_option("--delta", m_delta, "delta in (0, 1/4)")->required();
  mix->add_option("--eta", m_eta, "eta in (0, 1)")->required();
  mix->add_option("--c", m_c, "gate-count constant, t = ceil(c n log2^2 n)")->required();
  mix->add_option("--t", m_t, "explicit step count (overrides --c)");

  // gate-table
  auto* table_cmd = app.add_subcommand("gate-table", "Canonical gate table size and checksum");

  // experiment
  auto* exp = app.add_subcommand("experiment", "Batch ensemble experiments");
  exp->require_subcommand(1);
  std::string e_config, e_out, e_csv, e_start_pauli;
  std::size_t e_n = 0, e_k = 0, e_t = 0, e_d = 0, e_l0 = 0, e_trials = 0;
  std::size_t e_dist_target = 0, e_depth_target = 0;
  double e_c = 0.0, e_tv_limit = 0.0, e_ratio_limit = 0.0;
  uint64_t e_seed = 0;
  unsigned e_workers = 0;
  std::vector<std::size_t> e_n_values;
  std::vector<CLI::App*> exp_subs;
  for (const char* kind : {"chain-eq", "distance", "depth", "thm3"}) {
    auto* sub = exp->add_subcommand(kind);
    sub->add_option("--config", e_config, "config JSON file");
    sub->add_option("--n", e_n, "qubit count");
    sub->add_option("--k", e_k, "logical qubit count");
    sub->add_option("--t", e_t, "gate count");
    sub->add_option("--c", e_c, "gate-count constant when --t is absent");
    sub->add_option("--d", e_d, "largest distance threshold to report");
    sub->add_option("--l0", e_l0, "start weight (chain-eq)");
    sub->add_option("--start-pauli", e_start_pauli, "explicit start Pauli (chain-eq)");
    sub->add_option("--n-values", e_n_values, "sweep of n (depth)")->delimiter(',');
    sub->add_option("--trials", e_trials, "trial count");
    sub->add_option("--master-seed", e_seed, "ensemble master seed");
    sub->add_option("--workers", e_workers, "worker threads");
    sub->add_option("--distance-target", e_dist_target, "thm3 distance target");
    sub->add_option("--depth-target", e_depth_target, "thm3 depth target");
    sub->add_option("--tv-limit", e_tv_limit, "fail when TV exceeds this (chain-eq)");
    sub->add_option("--ratio-limit", e_ratio_limit, "fail when depth ratio exceeds this (depth)");
    sub->add_option("--out", e_out, "report path (records stream to <out>.records.jsonl)");
    sub->add_option("--emit-csv", e_csv, "directory for CSV summaries");
    exp_subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  if (sample->parsed()) {
    TableHandle table;
    CircuitHandle circuit;
    check(rc_circuit_sample(table.ptr, sc_n, sc_t, sc_seed, &circuit.ptr));
    char* json = nullptr;
    check(rc_circuit_to_json(table.ptr, circuit.ptr, &json));
    write_output(sc_out, take_string(json));
    return 0;
  }

  if (par->parsed()) {
    TableHandle table;
    CircuitHandle circuit;
    const std::string text = read_file(par_in);
    check(rc_circuit_from_json(table.ptr, text.c_str(), &circuit.ptr));
    char* json = nullptr;
    check(rc_circuit_parallelize(circuit.ptr, par_asap ? 1 : 0, &json));
    std::cout << take_string(json);
    return 0;
  }

  if (dist->parsed()) {
    TableHandle table;
    CircuitHandle circuit;
    const std::string text = read_file(dist_in);
    check(rc_circuit_from_json(table.ptr, text.c_str(), &circuit.ptr));
    char* json = nullptr;
    if (mc_opt->count() > 0) {
      check(rc_distance_monte_carlo(table.ptr, circuit.ptr, dist_k, dist_mc, dist_seed, &json));
    } else {
      check(rc_distance_exact(table.ptr, circuit.ptr, dist_k, dist_budget, dist_workers, &json));
    }
    ordered_json doc = ordered_json::parse(take_string(json));
    if (oracle_opt->count() > 0) {
      size_t oracle_distance = 0;
      check(rc_kl_oracle_distance(circuit.ptr, dist_k, dist_oracle, &oracle_distance));
      doc["oracle_d_max"] = dist_oracle;
      doc["oracle_distance"] = oracle_distance;
      if (doc["method"] == "exact") {
        doc["oracle_agrees"] = oracle_distance == doc["distance"].get<size_t>() ||
                               (oracle_distance == dist_oracle + 1 &&
                                doc["distance"].get<size_t>() > dist_oracle);
      }
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  if (chain->parsed()) {
    if (ch_exact) {
      char* json = nullptr;
      check(rc_chain_evolve_exact(ch_n, ch_l0, ch_t, &json));
      std::cout << take_string(json);
      return 0;
    }
    std::vector<double> probs(ch_n + 1, 0.0);
    check(rc_chain_evolve(ch_n, ch_l0, ch_t, probs.data()));
    ordered_json doc;
    doc["n"] = ch_n;
    doc["l0"] = ch_l0;
    doc["t"] = ch_t;
    doc["probs"] = probs;
    double mass = 0.0;
    for (double v : probs) mass += v;
    doc["mass"] = mass;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  if (bound->parsed()) {
    double value = 0.0;
    check(rc_union_bound(b_n, b_k, b_d, b_t, &value));
    ordered_json doc;
    doc["n"] = b_n;
    doc["k"] = b_k;
    doc["d"] = b_d;
    doc["t"] = b_t;
    doc["union_bound"] = value;
    if (b_exact) {
      double exact = 0.0;
      check(rc_union_bound_exact(b_n, b_k, b_d, b_t, &exact));
      doc["union_bound_exact"] = exact;
    }
    if (b_closed) {
      double closed = 0.0;
      check(rc_closed_form_bound(b_n, b_k, b_d, b_delta, &closed));
      doc["delta"] = b_delta;
      doc["closed_form"] = closed;
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  if (mix->parsed()) {
    char* json = nullptr;
    check(rc_check_mixing(m_n, m_t, m_delta, m_eta, m_c, &json));
    const std::string text = take_string(json);
    std::cout << text;
    const ordered_json doc = ordered_json::parse(text);
    return doc["holds"].get<bool>() ? 0 : 3;
  }

  if (table_cmd->parsed()) {
    TableHandle table;
    size_t size = 0;
    check(rc_table_size(table.ptr, &size));
    char* checksum = nullptr;
    check(rc_table_checksum(table.ptr, &checksum));
    ordered_json doc;
    doc["size"] = size;
    doc["checksum"] = take_string(checksum);
    std::cout << doc.dump(2) << "\n";
    return 0;
  }

  if (exp->parsed()) {
    std::string kind;
    CLI::App* active = nullptr;
    for (CLI::App* sub : exp_subs) {
      if (sub->parsed()) {
        kind = sub->get_name();
        active = sub;
      }
    }
    ordered_json overrides = ordered_json::object();
    auto passed = [&](const std::string& flag) { return active->count(flag) > 0; };
    if (passed("--n")) overrides["n"] = e_n;
    if (passed("--k")) overrides["k"] = e_k;
    if (passed("--t")) overrides["t"] = e_t;
    if (passed("--c")) overrides["c"] = e_c;
    if (passed("--d")) overrides["d"] = e_d;
    if (passed("--l0")) overrides["l0"] = e_l0;
    if (passed("--start-pauli")) overrides["start_pauli"] = e_start_pauli;
    if (passed("--n-values")) overrides["n_values"] = e_n_values;
    if (passed("--trials")) overrides["trials"] = e_trials;
    if (passed("--master-seed")) overrides["master_seed"] = e_seed;
    if (passed("--workers")) overrides["workers"] = e_workers;
    if (passed("--distance-target")) overrides["distance_target"] = e_dist_target;
    if (passed("--depth-target")) overrides["depth_target"] = e_depth_target;
    if (passed("--tv-limit")) overrides["tv_limit"] = e_tv_limit;
    if (passed("--ratio-limit")) overrides["ratio_limit"] = e_ratio_limit;
    if (passed("--out")) overrides["output_path"] = e_out;
    if (passed("--emit-csv")) overrides["csv_dir"] = e_csv;
    return run_experiment_command(kind, e_config, overrides);
  }

  return 1;
}
