// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "fixtures.hpp"
#include "peersel/balance_analysis.hpp"
#include "peersel/error.hpp"
#include "peersel/known_net_mechanisms.hpp"
#include "peersel/verification.hpp"

using namespace peersel;
using fixtures::network;

namespace {

// Balance by definition: every triple with two distinguished edges closes as
// the product of their signs.
bool balanced_by_triples(const RelationNetwork& g) {
  auto sign = [&](AgentId a, AgentId b) {
    const Relation r = g.relation(a, b);
    return r == Relation::Friend ? 1 : r == Relation::Enemy ? -1 : 0;
  };
  const int n = g.size();
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      for (AgentId k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const int a = sign(i, j);
        const int b = sign(j, k);
        if (a != 0 && b != 0 && sign(i, k) != a * b) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("balance examples") {
  CHECK(check_structural_balance(complete_network(4, Relation::Friend)).balanced);

  const auto path = network(3, {{0, 1, Relation::Friend}, {1, 2, Relation::Friend}});
  const auto v = check_structural_balance(path);
  CHECK_FALSE(v.balanced);
  REQUIRE(v.rule);
  CHECK(*v.rule == BalanceRule::FriendOfFriend);
  REQUIRE(v.violating_triple);

  const auto cycle = network(4, {{0, 1, Relation::Enemy},
                                 {1, 2, Relation::Enemy},
                                 {2, 3, Relation::Enemy},
                                 {0, 3, Relation::Enemy}});
  const auto c = check_structural_balance(cycle);
  CHECK_FALSE(c.balanced);
  CHECK(*c.rule == BalanceRule::EnemyOfEnemy);

  const auto mixed = network(3, {{0, 1, Relation::Friend}, {1, 2, Relation::Enemy}});
  const auto m = check_structural_balance(mixed);
  CHECK_FALSE(m.balanced);
  CHECK(*m.rule == BalanceRule::FriendOfEnemy);
}

TEST_CASE("balance agrees with the triple definition") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_signed(3 + seed % 5, Rational(1, 4), Rational(1, 4), seed);
    CHECK(check_structural_balance(g).balanced == balanced_by_triples(g));
  }
}

TEST_CASE("decomposition examples") {
  const auto matching = decompose(matching_friends(4));
  REQUIRE(matching.components.size() == 2);
  for (const auto& comp : matching.components) {
    REQUIRE(comp.cliques.size() == 1);
    CHECK(comp.cliques[0].size() == 2);
  }

  const auto two = decompose(four_clique_network({2, 2, 0, 0}));
  REQUIRE(two.components.size() == 1);
  CHECK(two.components[0].cliques.size() == 2);

  const auto singles = decompose(complete_network(5, Relation::Impartial));
  CHECK(singles.components.size() == 5);

  const auto uneven = network(3, {{0, 1, Relation::Enemy}, {0, 2, Relation::Enemy},
                                  {1, 2, Relation::Friend}});
  const auto d = decompose(uneven);
  REQUIRE(d.components.size() == 1);
  REQUIRE(d.components[0].cliques.size() == 2);
  CHECK(d.components[0].cliques[0] == std::vector<AgentId>{1, 2});
  CHECK(d.components[0].cliques[1] == std::vector<AgentId>{0});

  CHECK_THROWS_AS(decompose(network(3, {{0, 1, Relation::Friend}, {1, 2, Relation::Friend}})),
                  Error);
}

TEST_CASE("random balanced networks decompose and recompose") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int n = 1 + seed % 12;
    const auto g = random_balanced(n, seed);
    REQUIRE(check_structural_balance(g).balanced);
    const auto d = decompose(g);
    for (const auto& comp : d.components) CHECK(comp.cliques.size() <= 2);
    CHECK(recompose(n, d) == g);
  }
}

TEST_CASE("classification") {
  const auto k4 = classify_balanced(complete_network(4, Relation::Friend));
  CHECK(k4.admits);
  CHECK(k4.reason == BalanceClass::SingleFComponent);
  REQUIRE(k4.recommended);
  CHECK(k4.recommended->id == MechanismId::G3K);
  CHECK(*k4.recommended->sink == 0);

  const auto pairs = classify_balanced(matching_friends(6));
  CHECK(pairs.admits);
  CHECK(pairs.reason == BalanceClass::AtLeastThreeEfComponents);
  CHECK(pairs.recommended->id == MechanismId::G1);

  const auto b = classify_balanced(four_clique_network({1, 1, 1, 1}));
  CHECK_FALSE(b.admits);
  CHECK(b.reason == BalanceClass::ExactlyTwoEf);
  CHECK_FALSE(b.recommended);
  CHECK(to_string(b.reason) == "ExactlyTwoEF");

  const auto one = classify_balanced(four_clique_network({2, 2, 0, 0}));
  CHECK_FALSE(one.admits);
  CHECK(one.reason == BalanceClass::OneEfNotF);
}

TEST_CASE("recommended mechanisms are efficient and dsic") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 4 + seed % 2;
    const auto g = random_balanced(n, seed);
    const auto v = classify_balanced(g);
    if (!v.admits) continue;
    const auto mech = make_mechanism(*v.recommended, &g);
    CHECK(check_efficiency(*mech, g).efficient);
    DsicOptions o;
    o.exhaustive = n == 4;
    o.samples = 300;
    CHECK(check_dsic(*mech, g, o).passed());
  }
}
