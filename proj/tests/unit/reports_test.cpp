// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "peersel/reports.hpp"

using namespace peersel;

TEST_CASE("rational formatting") {
  CHECK(format_rational(Rational(1, 3)) == "1/3");
  CHECK(format_rational(Rational(1, 3), {4}) == "0.3333");
  CHECK(format_rational(Rational(2, 3), {2}) == "0.67");
  CHECK(format_rational(Rational(1, 8), {2}) == "0.13");
  CHECK(format_rational(Rational(-1, 8), {2}) == "-0.13");
  CHECK(format_rational(Rational(7), {0}) == "7");
  CHECK(format_rational(Rational(-1, 1000), {2}) == "0.00");
}

TEST_CASE("distribution lines") {
  const auto g = fixtures::three_agent();
  const auto lot = make_mechanism(MechanismHandle::g1(), &g)->evaluate(
      truthful_profile({g, AgentSet{0}}, MessageMode::NeedyOnly));
  CHECK(report_distribution(lot) == "0: 1/3\n1: 0\n2: 1/3\n");
}

TEST_CASE("json reports parse") {
  const auto g = fixtures::three_agent();
  const auto g1 = make_mechanism(MechanismHandle::g1(), &g);
  const auto dsic = nlohmann::json::parse(report_dsic("g1", check_dsic(*g1, g)));
  CHECK(dsic["verdict"] == "PASS");
  CHECK(dsic["checked_profiles"] == 512);
  const auto w = nlohmann::json::parse(
      report_witness("x", impossibility_witness(enemy_block_construction(4)), true));
  CHECK(w["status"] == "INFEASIBLE");
  CHECK(w["derived"] == "0 <= -1");
  CHECK(w["certificate"].size() == w["certificate_terms"].get<std::size_t>());
  const auto c = nlohmann::json::parse(
      report_classification(classify_balanced(four_clique_network({1, 1, 1, 1}))));
  CHECK(c["summary"] == "does not admit efficient DSIC (ExactlyTwoEF)");
}
