// Black-box checks of the shared-library interface. Everything here goes
// through the C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "randcliff/randcliff.h"

#include "json.hpp"

#include <cmath>
#include <cstring>
#include <string>

namespace {

struct TableHandle {
  rc_table* ptr = nullptr;
  TableHandle() { REQUIRE(rc_table_create(&ptr) == RC_OK); }
  ~TableHandle() { rc_table_free(ptr); }
};

struct StringOut {
  char* s = nullptr;
  ~StringOut() { rc_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

}  // namespace

TEST_CASE("table size, checksum, and transfer counts") {
  TableHandle table;
  size_t size = 0;
  REQUIRE(rc_table_size(table.ptr, &size) == RC_OK);
  CHECK(size == 11520);

  StringOut checksum;
  REQUIRE(rc_table_checksum(table.ptr, &checksum.s) == RC_OK);
  CHECK(checksum.str().size() == 16);

  size_t count = 0;
  REQUIRE(rc_table_transfer_count(table.ptr, 1, 2, &count) == RC_OK);
  CHECK(count == 768);
  REQUIRE(rc_table_transfer_count(table.ptr, 15, 15, &count) == RC_OK);
  CHECK(count == 768);

  CHECK(rc_table_transfer_count(table.ptr, 0, 2, &count) == RC_INVALID_ARGUMENT);
  CHECK(rc_table_transfer_count(table.ptr, 1, 16, &count) == RC_INVALID_ARGUMENT);
  CHECK(std::strlen(rc_last_error()) > 0);
}

TEST_CASE("circuit sample, serialize, parse, parallelize") {
  TableHandle table;
  rc_circuit* c = nullptr;
  REQUIRE(rc_circuit_sample(table.ptr, 6, 25, 12345, &c) == RC_OK);

  size_t n = 0, t = 0;
  REQUIRE(rc_circuit_qubits(c, &n) == RC_OK);
  REQUIRE(rc_circuit_gate_count(c, &t) == RC_OK);
  CHECK(n == 6);
  CHECK(t == 25);

  StringOut json;
  REQUIRE(rc_circuit_to_json(table.ptr, c, &json.s) == RC_OK);
  rc_circuit* back = nullptr;
  REQUIRE(rc_circuit_from_json(table.ptr, json.s, &back) == RC_OK);
  StringOut json2;
  REQUIRE(rc_circuit_to_json(table.ptr, back, &json2.s) == RC_OK);
  CHECK(json.str() == json2.str());

  StringOut layers;
  REQUIRE(rc_circuit_parallelize(c, 0, &layers.s) == RC_OK);
  nlohmann::json greedy = nlohmann::json::parse(layers.str());
  StringOut layers_asap;
  REQUIRE(rc_circuit_parallelize(c, 1, &layers_asap.s) == RC_OK);
  nlohmann::json asap = nlohmann::json::parse(layers_asap.str());
  CHECK(greedy.at("scheduler") == "greedy");
  CHECK(asap.at("scheduler") == "asap");
  CHECK(asap.at("depth").get<size_t>() <= greedy.at("depth").get<size_t>());

  rc_circuit_free(back);
  rc_circuit_free(c);

  rc_circuit* bad = nullptr;
  CHECK(rc_circuit_from_json(table.ptr, "{not json", &bad) != RC_OK);
  CHECK(std::strlen(rc_last_error()) > 0);
  CHECK(rc_circuit_sample(table.ptr, 1, 5, 0, &bad) == RC_INVALID_ARGUMENT);
}

TEST_CASE("distance engines through the c interface") {
  TableHandle table;
  rc_circuit* c = nullptr;
  REQUIRE(rc_circuit_sample(table.ptr, 6, 30, 777, &c) == RC_OK);

  StringOut exact;
  REQUIRE(rc_distance_exact(table.ptr, c, 2, 0, 0, &exact.s) == RC_OK);
  nlohmann::json de = nlohmann::json::parse(exact.str());
  size_t d_exact = de.at("distance").get<size_t>();
  CHECK(d_exact >= 1);
  CHECK(de.at("method") == "exact");

  StringOut mc;
  REQUIRE(rc_distance_monte_carlo(table.ptr, c, 2, 20000, 5, &mc.s) == RC_OK);
  nlohmann::json dm = nlohmann::json::parse(mc.str());
  CHECK(dm.at("distance").get<size_t>() >= d_exact);

  size_t oracle = 0;
  REQUIRE(rc_kl_oracle_distance(c, 2, d_exact + 1, &oracle) == RC_OK);
  CHECK(oracle == d_exact);

  rc_circuit_free(c);
}

TEST_CASE("chain rows, evolution, stationary law") {
  double down = 0, stay = 0, up = 0;
  REQUIRE(rc_chain_transition_row(3, 2, &down, &stay, &up) == RC_OK);
  CHECK(down == 2.0 / 15.0);
  CHECK(stay == 7.0 / 15.0);
  CHECK(up == 6.0 / 15.0);
  CHECK(rc_chain_transition_row(3, 0, &down, &stay, &up) == RC_INVALID_ARGUMENT);

  double probs[3] = {9, 9, 9};
  REQUIRE(rc_chain_evolve(2, 1, 1, probs) == RC_OK);
  CHECK(probs[0] == 0.0);
  CHECK(std::abs(probs[1] - 0.4) < 1e-14);
  CHECK(std::abs(probs[2] - 0.6) < 1e-14);

  double stat[3] = {9, 9, 9};
  REQUIRE(rc_chain_stationary(2, stat) == RC_OK);
  CHECK(std::abs(stat[1] - 0.4) < 1e-14);
  CHECK(std::abs(stat[2] - 0.6) < 1e-14);

  StringOut exact;
  REQUIRE(rc_chain_evolve_exact(2, 1, 1, &exact.s) == RC_OK);
  nlohmann::json doc = nlohmann::json::parse(exact.str());
  CHECK(doc.at("denominator") == "10");
  CHECK(doc.at("numerators").at(1) == "4");
}

TEST_CASE("bounds through the c interface") {
  double v = 0;
  REQUIRE(rc_union_bound(2, 1, 1, 1, &v) == RC_OK);
  CHECK(std::abs(v - 2.8) < 1e-12);

  double ve = 0;
  REQUIRE(rc_union_bound_exact(10, 2, 2, 300, &ve) == RC_OK);
  double vf = 0;
  REQUIRE(rc_union_bound(10, 2, 2, 300, &vf) == RC_OK);
  CHECK(std::abs(vf - ve) / ve < 1e-10);

  double gv = 0;
  REQUIRE(rc_gv_rate_bound(0.0, &gv) == RC_OK);
  CHECK(gv == 1.0);
  CHECK(rc_gv_rate_bound(1.5, &gv) == RC_INVALID_ARGUMENT);

  double cf = 0;
  REQUIRE(rc_closed_form_bound(1024, 100, 50, 0.01, &cf) == RC_OK);
  CHECK(cf > 0.0);

  StringOut mixing;
  REQUIRE(rc_check_mixing(16, 0, 0.4, 0.5, 6.0, &mixing.s) == RC_OK);
  nlohmann::json doc = nlohmann::json::parse(mixing.str());
  CHECK(doc.contains("holds"));
  CHECK(doc.at("t").get<size_t>() > 0);
}

TEST_CASE("experiments through the c interface") {
  nlohmann::json cfg;
  cfg["kind"] = "chain-eq";
  cfg["n"] = 4;
  cfg["l0"] = 1;
  cfg["t"] = 5;
  cfg["trials"] = 500;
  cfg["master_seed"] = 99;
  cfg["tv_limit"] = 0.2;
  std::string text = cfg.dump();

  StringOut report;
  int ok = 0;
  REQUIRE(rc_experiment_run(text.c_str(), &report.s, &ok) == RC_OK);
  CHECK(ok == 1);
  nlohmann::json doc = nlohmann::json::parse(report.str());
  CHECK(doc.at("kind") == "chain-eq");
  CHECK(doc.at("invariants_ok").get<bool>());

  StringOut bad;
  int ok2 = 0;
  CHECK(rc_experiment_run("{\"kind\":\"nope\",\"n\":4}", &bad.s, &ok2) == RC_INVALID_ARGUMENT);
}

TEST_CASE("null arguments are rejected not crashed") {
  TableHandle table;
  size_t out = 0;
  CHECK(rc_table_size(nullptr, &out) == RC_INVALID_ARGUMENT);
  CHECK(rc_table_size(table.ptr, nullptr) == RC_INVALID_ARGUMENT);
  CHECK(rc_circuit_qubits(nullptr, &out) == RC_INVALID_ARGUMENT);
  double v = 0;
  CHECK(rc_union_bound(0, 0, 0, 0, &v) == RC_INVALID_ARGUMENT);
  CHECK(std::string(rc_last_error()).size() > 0);
}
