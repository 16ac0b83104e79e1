// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "peersel/error.hpp"
#include "peersel/known_net_mechanisms.hpp"
#include "peersel/verification.hpp"

using namespace peersel;

namespace {

// Reference DSIC sweep: every base profile, every agent, every alternative
// message, judged by the robust rule on exact distributions.
std::uint64_t brute_force_violations(const Mechanism& mech, const RelationNetwork& g) {
  const int n = g.size();
  std::vector<MessageSpace> spaces;
  for (AgentId i = 0; i < n; ++i) spaces.emplace_back(mech.mode(), n, i);
  std::uint64_t total = 1;
  for (const auto& s : spaces) total *= s.size();
  std::uint64_t violations = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<FullTypeMessage> msgs(n);
    std::uint64_t rest = idx;
    for (AgentId i = 0; i < n; ++i) {
      msgs[i] = spaces[i].message(rest % spaces[i].size());
      rest /= spaces[i].size();
    }
    const auto base = mech.mode() == MessageMode::FullType
                          ? MessageProfile::full_type(msgs)
                          : [&] {
                              std::vector<AgentSet> needy;
                              for (const auto& m : msgs) needy.push_back(m.reported_needy);
                              return MessageProfile::needy_only(needy, n);
                            }();
    const auto truth = mech.select(base);
    for (AgentId i = 0; i < n; ++i) {
      const AgentSet friends = mech.mode() == MessageMode::FullType ? msgs[i].reported_friends
                                                                    : g.friends(i);
      const AgentSet enemies = mech.mode() == MessageMode::FullType ? msgs[i].reported_enemies
                                                                    : g.enemies(i);
      for (std::uint64_t d = 0; d < spaces[i].size(); ++d) {
        auto dev = spaces[i].message(d);
        if (dev == msgs[i]) continue;
        auto p = base;
        p.set_message(dev);
        if (robust_improvement(i, truth, mech.select(p), friends, enemies)) ++violations;
      }
    }
  }
  return violations;
}

}  // namespace

TEST_CASE("message spaces index both ways") {
  for (const auto mode : {MessageMode::NeedyOnly, MessageMode::FullType}) {
    for (int n = 2; n <= 4; ++n) {
      for (AgentId i = 0; i < n; ++i) {
        const MessageSpace s(mode, n, i);
        CHECK(s.size() == (mode == MessageMode::NeedyOnly ? (1u << n)
                                                           : (1u << n) * (n == 2 ? 3 : n == 3 ? 9 : 27)));
        for (std::uint64_t k = 0; k < s.size(); ++k) CHECK(s.index_of(s.message(k)) == k);
      }
    }
  }
}

TEST_CASE("validity") {
  const auto g = fixtures::three_agent();
  const auto g1 = make_mechanism(MechanismHandle::g1(), &g);
  const auto truth = truthful_profile({g, AgentSet{0}}, MessageMode::NeedyOnly);
  const std::vector<MessageProfile> one{truth};
  const auto v = check_validity(*g1, one);
  CHECK(v.valid);
  CHECK(v.total == Rational(2, 3));

  const auto c = make_mechanism(MechanismHandle::constant(), nullptr);
  CHECK(check_validity_exhaustive(*c, 2).valid);

  const ExternalMechanism heavy(MessageMode::NeedyOnly, "heavy", [](const MessageProfile&) {
    return std::vector<Rational>{Rational(3, 5), Rational(3, 5), 0};
  });
  const auto bad = check_validity(heavy, one);
  CHECK_FALSE(bad.valid);
  CHECK(bad.counterexample);
  CHECK(check_validity_exhaustive(*g1, 3).valid);
  CHECK_THROWS_AS(check_validity_exhaustive(*c, 5, 1000), Error);
}

TEST_CASE("dsic on the three_agent network") {
  const auto g = fixtures::three_agent();
  const auto g1 = make_mechanism(MechanismHandle::g1(), &g);
  const auto r = check_dsic(*g1, g);
  CHECK(r.passed());
  CHECK(r.exhaustive);
  CHECK(r.checked_profiles == 512);
}

TEST_CASE("dsic of g2k on the complete enemy network") {
  const auto g = complete_network(4, Relation::Enemy);
  CHECK(check_dsic(*make_mechanism(MechanismHandle::g2k(3), &g), g).passed());
}

TEST_CASE("the self-voting variant is caught") {
  const auto g = fixtures::three_agent();
  const auto mutant = oracle::self_voting_g1(g);
  DsicOptions o;
  o.max_recorded = 4;
  const auto r = check_dsic(mutant, g, o);
  CHECK_FALSE(r.passed());
  CHECK(r.violation_count == brute_force_violations(mutant, g));
  REQUIRE(r.violations.size() == 4);
  for (const auto& v : r.violations) {
    CHECK(robust_improvement(v.delta));
    auto p = v.profile;
    const auto truth = mutant.select(p);
    p.set_message(v.deviation);
    const auto d = deviation_delta(v.agent, truth, mutant.select(p), g.friends(v.agent),
                                   g.enemies(v.agent));
    CHECK(d.own == v.delta.own);
  }
  for (std::size_t k = 1; k < r.violations.size(); ++k) {
    CHECK(r.violations[k - 1].profile_index <= r.violations[k].profile_index);
  }
}

TEST_CASE("checker counts agree with a brute-force sweep") {
  // Needy-only: the self-voting variant on several networks.
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto g = random_signed(3, Rational(1, 3), Rational(1, 3), seed);
    const auto mutant = oracle::self_voting_g1(g);
    CHECK(check_dsic(mutant, g).violation_count == brute_force_violations(mutant, g));
    const auto g1 = make_mechanism(MechanismHandle::g1(), &g);
    CHECK(brute_force_violations(*g1, g) == 0);
  }
  // Full type: agents who call themselves needy get 1/2.
  const ExternalMechanism boast(MessageMode::FullType, "boast", [](const MessageProfile& p) {
    std::vector<Rational> out;
    for (const auto& m : p.messages()) {
      out.push_back(m.reported_needy.contains(m.reporter) ? Rational(1, 2) : Rational(0));
    }
    return out;
  });
  const auto pair = complete_network(2, Relation::Impartial);
  const auto r = check_dsic(boast, pair);
  CHECK(r.violation_count == brute_force_violations(boast, pair));
  CHECK(r.violation_count > 0);
  const auto rd = make_mechanism(MechanismHandle::random_dictatorship(), nullptr);
  CHECK(brute_force_violations(*rd, pair) == 0);
  CHECK(check_dsic(*rd, pair).passed());
}

TEST_CASE("sampled dsic is reproducible") {
  const auto g = complete_network(4, Relation::Impartial);
  const auto duples = make_mechanism(MechanismHandle::duples(), nullptr);
  DsicOptions o;
  o.exhaustive = false;
  o.samples = 50;
  o.seed = 9;
  const auto a = check_dsic(*duples, g, o);
  const auto b = check_dsic(*duples, g, o);
  CHECK(a.passed());
  CHECK_FALSE(a.exhaustive);
  CHECK(a.checked_profiles == 50);
  CHECK(a.checked_deviations == b.checked_deviations);
  const auto mutant = oracle::self_voting_g1(g);
  o.samples = 200;
  const auto x = check_dsic(mutant, g, o);
  const auto y = check_dsic(mutant, g, o);
  CHECK(x.violation_count > 0);
  CHECK(x.violation_count == y.violation_count);
  REQUIRE(x.violations.size() == y.violations.size());
  for (std::size_t k = 0; k < x.violations.size(); ++k) {
    CHECK(x.violations[k].profile == y.violations[k].profile);
    CHECK(x.violations[k].deviation == y.violations[k].deviation);
  }
}

TEST_CASE("weighted dsic") {
  const auto g = complete_network(3, Relation::Impartial);
  const auto rd = make_mechanism(MechanismHandle::random_dictatorship(), nullptr);
  DsicOptions o;
  o.weights = PreferenceWeights(2, Rational(1, 3));
  CHECK(check_dsic(*rd, g, o).passed());
}

TEST_CASE("efficiency checks") {
  const auto i4 = complete_network(4, Relation::Impartial);
  CHECK(check_efficiency(*make_mechanism(MechanismHandle::g1(), &i4), i4).efficient);

  const auto g = fixtures::three_agent();
  const auto v = check_efficiency(*make_mechanism(MechanismHandle::g1(), &g), g);
  CHECK_FALSE(v.efficient);
  REQUIRE(v.counterexample);
  CHECK(*v.counterexample == AgentSet{0});
  CHECK(v.needy_mass == Rational(1, 3));

  const auto c = check_efficiency(*make_mechanism(MechanismHandle::constant(), nullptr), i4);
  CHECK_FALSE(c.efficient);
  CHECK(*c.counterexample == AgentSet{0});
  CHECK(c.needy_mass == Rational(1, 4));

  const auto k4 = complete_network(4, Relation::Enemy);
  CHECK(check_efficiency(*make_mechanism(MechanismHandle::g2k(3), &k4), k4).efficient);
  const auto f4 = complete_network(4, Relation::Friend);
  CHECK(check_efficiency(*make_mechanism(MechanismHandle::g3k(0), &f4), f4).efficient);
}

TEST_CASE("enemy block witness") {
  const auto c = enemy_block_construction(4);
  const auto w = impossibility_witness(c);
  CHECK(w.status == LpStatus::Infeasible);
  CHECK(w.verified);
  CHECK(w.combined_rhs < 0);
  CHECK(verify_certificate(w.system, w.certificate));

  WitnessOptions relaxed;
  relaxed.drop_right_efficiency = true;
  const auto r = impossibility_witness(c, relaxed);
  CHECK(r.status == LpStatus::Feasible);
  CHECK(r.verified);
  CHECK(verify_point(r.system, r.point));

  WitnessOptions weighted;
  weighted.weights = PreferenceWeights(1, 1);
  CHECK(impossibility_witness(c, weighted).status == LpStatus::Infeasible);
  CHECK(impossibility_witness(enemy_block_construction(5)).status == LpStatus::Infeasible);
  CHECK_THROWS_AS(enemy_block_construction(3), Error);
}

TEST_CASE("enemy block states") {
  const auto c = enemy_block_construction(4);
  CHECK(c.left.network.enemies(0) == AgentSet{1});
  CHECK(c.left.needy == AgentSet{0});
  CHECK(c.right.network.enemies(2) == AgentSet{3});
  CHECK(c.right.network.enemies(0).empty());
  CHECK(c.right.needy == AgentSet{3});
}

TEST_CASE("four clique witness") {
  const auto w = impossibility_witness(four_clique_construction({1, 1, 1, 1}));
  CHECK(w.status == LpStatus::Infeasible);
  CHECK(w.verified);
  CHECK_THROWS_AS(four_clique_construction({0, 1, 1, 1}), Error);
}

TEST_CASE("a feasible lattice point is a valid efficient mechanism table") {
  WitnessOptions relaxed;
  relaxed.drop_right_efficiency = true;
  const auto c = enemy_block_construction(4);
  const auto sys = build_lattice_system(c, relaxed);
  const auto r = solve_feasibility(sys);
  REQUIRE(r.status == LpStatus::Feasible);
  const int n = 4;
  for (int p = 0; p < (1 << n); ++p) {
    Rational sum = 0;
    for (int i = 0; i < n; ++i) sum += r.point[p * n + i];
    CHECK(sum <= 1);
  }
  // All agents truthful about the left state: everything on needy agent 0.
  CHECK(r.point[0 * n + 0] == 1);
}
