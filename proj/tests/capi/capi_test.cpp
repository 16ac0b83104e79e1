// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include "doctest.h"
#include "peersel/peersel.h"

namespace {

const char* kThreeAgent = R"({"n": 3, "relations": [[0, 2, "friend"], [1, 2, "friend"]], "needy": [0]})";

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  peersel_string_free(s);
  return out;
}

peersel_instance* parse(const char* text) {
  peersel_instance* out = nullptr;
  REQUIRE(peersel_instance_parse(text, &out) == PEERSEL_OK);
  return out;
}

// g1 where every agent receives 1/n if she reports herself needy.
int self_report(void*, int n, const peersel_message* m, int64_t* nums, int64_t* dens) {
  for (int i = 0; i < n; ++i) {
    nums[i] = (m[i].needy >> i) & 1u;
    dens[i] = n;
  }
  return 0;
}

int failing(void*, int, const peersel_message*, int64_t*, int64_t*) { return 1; }

}  // namespace

TEST_CASE("instances") {
  peersel_instance* inst = parse(kThreeAgent);
  CHECK(peersel_instance_size(inst) == 3);
  int present = 0;
  uint64_t mask = 0;
  CHECK(peersel_instance_needy(inst, &present, &mask) == PEERSEL_OK);
  CHECK(present == 1);
  CHECK(mask == 1);
  char* q = reinterpret_cast<char*>(1);
  CHECK(peersel_instance_q(inst, &q) == PEERSEL_OK);
  CHECK(q == nullptr);
  CHECK(peersel_instance_set_q(inst, "2/4") == PEERSEL_OK);
  CHECK(peersel_instance_q(inst, &q) == PEERSEL_OK);
  CHECK(take(q) == "1/2");
  CHECK(peersel_instance_set_q(inst, "3/2") == PEERSEL_ERR_INVALID_ARGUMENT);
  CHECK(peersel_instance_set_needy(inst, 1, 8) != PEERSEL_OK);
  char* text = nullptr;
  CHECK(peersel_instance_serialize(inst, &text) == PEERSEL_OK);
  CHECK(take(text).find("\"q\": \"1/2\"") != std::string::npos);
  peersel_instance_free(inst);

  peersel_instance* bad = nullptr;
  CHECK(peersel_instance_parse("{\"n\": 2", &bad) == PEERSEL_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::strlen(peersel_last_error()) > 0);
  CHECK(peersel_instance_read("/nonexistent/x.instance", &bad) != PEERSEL_OK);
  CHECK(peersel_instance_parse(nullptr, &bad) == PEERSEL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("run and evaluate") {
  peersel_instance* inst = parse(kThreeAgent);
  peersel_mechanism* g1 = nullptr;
  REQUIRE(peersel_mechanism_create("g1", -1, -1, inst, &g1) == PEERSEL_OK);
  CHECK(peersel_mechanism_mode(g1) == 0);
  char* report = nullptr;
  CHECK(peersel_run(g1, inst, 1, -1, &report) == PEERSEL_OK);
  CHECK(take(report) == "0: 1/3\n1: 0\n2: 1/3\n");
  int64_t nums[3];
  int64_t den = 0;
  CHECK(peersel_evaluate(g1, inst, 1, nums, &den) == PEERSEL_OK);
  CHECK(nums[0] * 3 == den);
  CHECK(nums[1] == 0);
  CHECK(peersel_run(g1, inst, 1, 3, &report) == PEERSEL_OK);
  CHECK(take(report) == "0: 0.333\n1: 0.000\n2: 0.333\n");
  peersel_mechanism_free(g1);

  peersel_mechanism* m = nullptr;
  CHECK(peersel_mechanism_create("g2k", -1, -1, inst, &m) == PEERSEL_ERR_INVALID_ARGUMENT);
  CHECK(peersel_mechanism_create("g1", 0, -1, inst, &m) == PEERSEL_ERR_INVALID_ARGUMENT);
  CHECK(peersel_mechanism_create("rd", -1, 0, inst, &m) == PEERSEL_ERR_DOMAIN);
  CHECK(peersel_mechanism_create("nope", -1, -1, inst, &m) != PEERSEL_OK);
  REQUIRE(peersel_mechanism_create("constant", -1, 0, inst, &m) == PEERSEL_OK);
  CHECK(peersel_mechanism_mode(m) == 0);
  peersel_mechanism_free(m);
  peersel_instance_free(inst);
}

TEST_CASE("checks") {
  peersel_instance* inst = parse(kThreeAgent);
  peersel_mechanism* g1 = nullptr;
  REQUIRE(peersel_mechanism_create("g1", -1, -1, inst, &g1) == PEERSEL_OK);
  int valid = 0;
  CHECK(peersel_check_validity(g1, inst, 0, -1, &valid, nullptr) == PEERSEL_OK);
  CHECK(valid == 1);
  peersel_dsic_options o{};
  o.exhaustive = 1;
  o.max_recorded = 8;
  int passed = 0;
  char* report = nullptr;
  CHECK(peersel_check_dsic(g1, inst, &o, -1, &passed, &report) == PEERSEL_OK);
  CHECK(passed == 1);
  CHECK(take(report).find("\"checked_profiles\": 512") != std::string::npos);
  int efficient = 1;
  CHECK(peersel_check_efficiency(g1, inst, -1, &efficient, nullptr) == PEERSEL_OK);
  CHECK(efficient == 0);
  peersel_mechanism_free(g1);
  peersel_instance_free(inst);
}

TEST_CASE("external mechanisms") {
  peersel_instance* inst = parse(kThreeAgent);
  peersel_mechanism* ext = nullptr;
  REQUIRE(peersel_mechanism_external(0, "self", self_report, nullptr, &ext) == PEERSEL_OK);
  peersel_dsic_options o{};
  o.exhaustive = 1;
  o.max_recorded = 2;
  int passed = 1;
  char* report = nullptr;
  CHECK(peersel_check_dsic(ext, inst, &o, -1, &passed, &report) == PEERSEL_OK);
  CHECK(passed == 0);
  CHECK(take(report).find("\"verdict\": \"FAIL\"") != std::string::npos);
  peersel_mechanism_free(ext);

  REQUIRE(peersel_mechanism_external(1, "broken", failing, nullptr, &ext) == PEERSEL_OK);
  CHECK(peersel_run(ext, inst, 1, -1, &report) != PEERSEL_OK);
  peersel_mechanism_free(ext);
  peersel_instance_free(inst);
}

TEST_CASE("efficiency") {
  peersel_generator spec{};
  spec.family = "complete-friend";
  spec.n = 4;
  peersel_instance* k4 = nullptr;
  REQUIRE(peersel_generate(&spec, &k4) == PEERSEL_OK);
  peersel_mechanism* rd = nullptr;
  REQUIRE(peersel_mechanism_create("rd", -1, -1, k4, &rd) == PEERSEL_OK);
  char* value = nullptr;
  CHECK(peersel_exact_efficiency(rd, k4, "1/2", -1, &value, nullptr) == PEERSEL_OK);
  CHECK(take(value) == "7/8");
  CHECK(peersel_closed_form_rd(k4, "1/2", &value) == PEERSEL_OK);
  CHECK(take(value) == "7/8");
  peersel_mc_options mc{};
  mc.samples = 20000;
  mc.seed = 2;
  double estimate = 0;
  double half = 0;
  CHECK(peersel_mc_efficiency(rd, k4, "1/2", &mc, -1, &estimate, &half, nullptr) == PEERSEL_OK);
  CHECK(half > 0);
  CHECK(std::abs(estimate - 0.875) < 0.02);
  CHECK(peersel_exact_efficiency(rd, k4, "0.5", -1, &value, nullptr) == PEERSEL_ERR_PARSE);

  const char* names[] = {"constant", "rd", "g3k"};
  const int sinks[] = {-1, -1, 0};
  char* report = nullptr;
  CHECK(peersel_compare(k4, "1/2", names, sinks, 3, nullptr, 1, -1, &report) == PEERSEL_OK);
  const std::string table = take(report);
  CHECK(table.find("g3k(0)") < table.find("rd"));
  CHECK(table.find("rd") < table.find("constant"));
  peersel_mechanism_free(rd);
  peersel_instance_free(k4);
}

TEST_CASE("structure and witnesses") {
  peersel_generator spec{};
  spec.family = "four-cliques";
  for (int k = 0; k < 4; ++k) spec.cliques[k] = 1;
  peersel_instance* inst = nullptr;
  REQUIRE(peersel_generate(&spec, &inst) == PEERSEL_OK);
  int balanced = 0;
  CHECK(peersel_balance(inst, &balanced, nullptr) == PEERSEL_OK);
  CHECK(balanced == 1);
  int admits = 1;
  char* report = nullptr;
  CHECK(peersel_classify(inst, &admits, &report) == PEERSEL_OK);
  CHECK(admits == 0);
  CHECK(take(report).find("ExactlyTwoEF") != std::string::npos);
  peersel_instance_free(inst);

  peersel_witness_options w{};
  w.construction = "enemy-block";
  w.n = 4;
  int infeasible = 0;
  int verified = 0;
  CHECK(peersel_witness(&w, &infeasible, &verified, nullptr) == PEERSEL_OK);
  CHECK(infeasible == 1);
  CHECK(verified == 1);
  w.drop_right_efficiency = 1;
  CHECK(peersel_witness(&w, &infeasible, &verified, nullptr) == PEERSEL_OK);
  CHECK(infeasible == 0);
  CHECK(verified == 1);
  w.construction = "nope";
  CHECK(peersel_witness(&w, &infeasible, &verified, nullptr) == PEERSEL_ERR_INVALID_ARGUMENT);
  w.construction = "enemy-block";
  w.n = 9;
  CHECK(peersel_witness(&w, &infeasible, &verified, nullptr) != PEERSEL_OK);
}

TEST_CASE("version") { CHECK(std::strlen(peersel_version()) > 0); }
