// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "peersel/error.hpp"
#include "peersel/known_net_mechanisms.hpp"

using namespace peersel;
using fixtures::rationals;

namespace {

MessageProfile needy_profile(const RelationNetwork& g, AgentSet needy) {
  return truthful_profile({g, needy}, MessageMode::NeedyOnly);
}

std::vector<Rational> as_vector(const SelectionDistribution& d) { return fixtures::probs(d); }

MessageProfile random_needy_profile(int n, std::mt19937_64& rng) {
  std::vector<AgentSet> sets(n);
  for (auto& s : sets) s = AgentSet(rng() & AgentSet::all(n).bits());
  return MessageProfile::needy_only(sets, n);
}

}  // namespace

TEST_CASE("positive vote sets") {
  const auto g = fixtures::three_agent();
  const auto p = needy_profile(g, AgentSet{0});
  CHECK(positive_vote_set(g, p, {AgentSet{1}, VoteRelation::ImpartialOf}) == AgentSet{0, 1, 2});
  CHECK(positive_vote_set(g, p, {AgentSet{}, VoteRelation::ImpartialOf}) == AgentSet::all(3));

  const auto k4 = complete_network(4, Relation::Enemy);
  CHECK(positive_vote_set(k4, needy_profile(k4, AgentSet{1}),
                          {AgentSet{0, 1, 2}, VoteRelation::EnemyOf}) == AgentSet{1});
}

TEST_CASE("g1 on the three_agent network") {
  const auto g = fixtures::three_agent();
  CHECK(as_vector(mechanism_g1(g, needy_profile(g, AgentSet{0}))) ==
        rationals({Rational(1, 3), 0, Rational(1, 3)}));
}

TEST_CASE("g1 on complete impartial networks") {
  const auto g4 = complete_network(4, Relation::Impartial);
  CHECK(as_vector(mechanism_g1(g4, needy_profile(g4, AgentSet{1, 2}))) ==
        rationals({0, Rational(1, 2), Rational(1, 2), 0}));
  const auto g3 = complete_network(3, Relation::Impartial);
  CHECK(as_vector(mechanism_g1(g3, needy_profile(g3, AgentSet{}))) == rationals({0, 0, 0}));
}

TEST_CASE("g2k on the complete enemy network") {
  const auto g = complete_network(4, Relation::Enemy);
  CHECK(as_vector(mechanism_g2k(g, 3, needy_profile(g, AgentSet{1}))) == rationals({0, 1, 0, 0}));
  CHECK(as_vector(mechanism_g2k(g, 3, needy_profile(g, AgentSet{}))) == rationals({0, 0, 0, 1}));
  const Rational third(1, 3);
  CHECK(as_vector(mechanism_g2k(g, 3, needy_profile(g, AgentSet{0, 1, 2}))) ==
        rationals({third, third, third, 0}));
}

TEST_CASE("g3k on the complete friend network") {
  const auto g = complete_network(4, Relation::Friend);
  CHECK(as_vector(mechanism_g3k(g, 3, needy_profile(g, AgentSet{1}))) == rationals({0, 1, 0, 0}));
  CHECK(as_vector(mechanism_g3k(g, 3, needy_profile(g, AgentSet{}))) == rationals({0, 0, 0, 1}));
  CHECK(as_vector(mechanism_g3k(g, 0, needy_profile(g, AgentSet{0}))) == rationals({1, 0, 0, 0}));
}

TEST_CASE("known-network mechanisms reject full type profiles") {
  const auto g = complete_network(3, Relation::Impartial);
  const auto p = truthful_profile({g, AgentSet{0}}, MessageMode::FullType);
  CHECK_THROWS_AS(mechanism_g1(g, p), Error);
  CHECK_THROWS_AS(mechanism_g2k(g, 0, p), Error);
  CHECK_THROWS_AS(mechanism_g2k(g, 3, needy_profile(g, AgentSet{})), Error);
}

TEST_CASE("intersection conditions") {
  const auto three_agent = check_intersection(fixtures::three_agent(), IntersectionCondition::Impartial);
  CHECK_FALSE(three_agent.satisfied);
  REQUIRE(three_agent.witness);
  CHECK(*three_agent.witness == std::pair<AgentId, AgentId>{0, 1});

  const auto k4 = complete_network(4, Relation::Enemy);
  for (AgentId k = 0; k < 4; ++k) {
    CHECK(check_intersection(k4, IntersectionCondition::Enemy, k).satisfied);
  }
  const auto k3 = complete_network(3, Relation::Enemy);
  const auto e = check_intersection(k3, IntersectionCondition::Enemy, 2);
  CHECK_FALSE(e.satisfied);
  REQUIRE(e.witness);
  CHECK(*e.witness == std::pair<AgentId, AgentId>{0, 1});

  CHECK(check_intersection(complete_network(4, Relation::Impartial),
                           IntersectionCondition::Impartial)
            .satisfied);
  CHECK(check_intersection(complete_network(5, Relation::Friend), IntersectionCondition::Friend, 0)
            .satisfied);
}

TEST_CASE("known-network mechanisms match the oracle on random profiles") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 4;
    const auto g = random_signed(n, Rational(1, 3), Rational(1, 3), trial);
    const auto og = oracle::of(g);
    for (int r = 0; r < 20; ++r) {
      const auto p = random_needy_profile(n, rng);
      const auto m = oracle::from_profile(p);
      const auto g1 = as_vector(mechanism_g1(g, p));
      CHECK(g1 == oracle::g1(og, m));
      const AgentId k = static_cast<AgentId>(rng() % n);
      CHECK(as_vector(mechanism_g2k(g, k, p)) == oracle::sink(og, oracle::kEnemy, k, m));
      CHECK(as_vector(mechanism_g3k(g, k, p)) == oracle::sink(og, oracle::kFriend, k, m));
    }
  }
}

TEST_CASE("g1 positive votes at truth are contained in every restricted set") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 5;
    const auto g = random_signed(n, Rational(1, 4), Rational(1, 4), 100 + trial);
    const auto p = random_needy_profile(n, rng);
    const auto full = positive_vote_set(g, p, {g.agents(), VoteRelation::ImpartialOf});
    for (AgentId i = 0; i < n; ++i) {
      CHECK(full.subset_of(positive_vote_set(g, p, {g.impartials(i), VoteRelation::ImpartialOf})));
    }
  }
}

TEST_CASE("efficient under the matching condition") {
  const auto g = complete_network(5, Relation::Impartial);
  for (std::uint64_t mask = 1; mask < 32; ++mask) {
    const AgentSet needy(mask);
    const auto d = mechanism_g1(g, needy_profile(g, needy));
    CHECK(d.mass_on(needy) == 1);
    for (AgentId a : needy) CHECK(d[a] == Rational(1, needy.size()));
  }
}
