// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "peersel/efficiency_analysis.hpp"
#include "peersel/error.hpp"

using namespace peersel;

namespace {

Rational exact(const MechanismHandle& h, const RelationNetwork& g, Rational q) {
  return exact_efficiency(*make_mechanism(h, &g), g, NeedyPrior(std::move(q)));
}

const Rational kHalf(1, 2);

}  // namespace

TEST_CASE("degree profile counts agents") {
  const auto d = degree_profile(complete_network(4, Relation::Friend));
  CHECK(d.counts.size() == 1);
  CHECK(d.counts.at({3, 0}) == 4);
  const auto m = degree_profile(fixtures::three_agent());
  CHECK(m.counts.at({1, 1}) == 2);
  CHECK(m.counts.at({2, 0}) == 1);
}

TEST_CASE("exact efficiency examples") {
  CHECK(exact(MechanismHandle::constant(), complete_network(4, Relation::Enemy), kHalf) == kHalf);
  CHECK(exact(MechanismHandle::random_dictatorship(), complete_network(4, Relation::Friend),
              kHalf) == Rational(7, 8));
  CHECK(exact(MechanismHandle::random_dictatorship(), matching_friends(4), kHalf) == kHalf);
}

TEST_CASE("closed form examples") {
  CHECK(closed_form_prd(complete_network(4, Relation::Friend), NeedyPrior(kHalf)) == Rational(7, 8));
  CHECK(closed_form_prd(complete_network(3, Relation::Impartial), NeedyPrior(kHalf)) ==
        Rational(3, 4));
  CHECK(closed_form_prd(complete_network(4, Relation::Enemy), NeedyPrior(kHalf)) == Rational(7, 8));
}

TEST_CASE("closed form matches brute force") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + seed % 6;
    const auto g = random_signed(n, Rational(1, 3), Rational(1, 4), seed);
    for (const Rational q : {Rational(1, 4), Rational(2, 3)}) {
      const Rational brute = oracle::efficiency(oracle::of(g), q, [](const auto& m) {
        return oracle::rd(m);
      });
      CHECK(closed_form_prd(g, NeedyPrior(q)) == brute);
      CHECK(exact(MechanismHandle::random_dictatorship(), g, q) == brute);
    }
  }
}

TEST_CASE("duples efficiency matches brute force") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 2 + seed % 5;
    const auto g = random_signed(n, Rational(1, 3), Rational(1, 3), 40 + seed);
    const Rational brute = oracle::efficiency(oracle::of(g), kHalf, [](const auto& m) {
      return oracle::duples(m);
    });
    CHECK(exact(MechanismHandle::duples(), g, kHalf) == brute);
  }
}

TEST_CASE("random dictatorship is at least q, with equality on the degree condition") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 3 + seed % 5;
    const auto g = random_signed(n, Rational(1, 5), Rational(1, 5), 200 + seed);
    for (const Rational q : {Rational(1, 4), kHalf}) {
      const Rational v = closed_form_prd(g, NeedyPrior(q));
      CHECK(v >= q);
      CHECK((v == q) == rd_matches_constant(g));
    }
  }
  CHECK(rd_matches_constant(matching_friends(6)));
}

TEST_CASE("duples bound") {
  CHECK(duples_balanced_bound(4, kHalf) == Rational(13, 24));
  CHECK(duples_balanced_bound(3, kHalf) == Rational(33, 64));
  CHECK(duples_balanced_bound(5, 1) == 1);
  CHECK_THROWS_AS(duples_balanced_bound(2, kHalf), Error);
}

TEST_CASE("duples never exceeds the two-draw ceiling") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = random_signed(3 + seed % 4, Rational(1, 3), Rational(1, 3), 300 + seed);
    for (const Rational q : {Rational(1, 4), kHalf, Rational(3, 4)}) {
      CHECK(exact(MechanismHandle::duples(), g, q) <= 1 - (1 - q) * (1 - q));
    }
  }
}

TEST_CASE("efficiency from masses") {
  const auto g = complete_network(3, Relation::Impartial);
  const auto masses = needy_mass_by_size(*make_mechanism(MechanismHandle::constant(), &g), g);
  REQUIRE(masses.size() == 4);
  CHECK(masses[0] == 0);
  CHECK(masses[1] == 1);
  CHECK(masses[3] == 1);
  CHECK(efficiency_from_masses(masses, Rational(1, 3)) == Rational(1, 3));
}

TEST_CASE("monte carlo estimates") {
  const auto c30 = complete_network(30, Relation::Impartial);
  const auto constant = make_mechanism(MechanismHandle::constant(), nullptr);
  McOptions o;
  o.seed = 1;
  const auto e = mc_efficiency(*constant, c30, kHalf, o);
  CHECK(std::abs(e.estimate - 0.5) < 0.01);
  CHECK(e.half_width > 0);
  CHECK(e.lower < e.estimate);

  const auto k4 = complete_network(4, Relation::Friend);
  const auto rd = make_mechanism(MechanismHandle::random_dictatorship(), nullptr);
  const auto r = mc_efficiency(*rd, k4, kHalf, o);
  CHECK(std::abs(r.estimate - 0.875) < 0.01);

  McOptions one;
  one.samples = 1;
  one.seed = 77;
  const auto a = mc_efficiency(*rd, k4, kHalf, one);
  const auto b = mc_efficiency(*rd, k4, kHalf, one);
  CHECK(a.mean == b.mean);
  CHECK(a.half_width > 0);

  McOptions wilson = o;
  wilson.samples = 2000;
  wilson.interval = IntervalKind::Wilson;
  const auto w = mc_efficiency(*rd, k4, kHalf, wilson);
  CHECK(w.lower < w.upper);
  CHECK(w.half_width > 0);
}

TEST_CASE("monte carlo does not depend on the thread count") {
  const auto g = random_signed(6, Rational(1, 3), Rational(1, 3), 8);
  const auto duples = make_mechanism(MechanismHandle::duples(), nullptr);
  McOptions o;
  o.samples = 5000;
  o.seed = 4;
  const auto a = mc_efficiency(*duples, g, Rational(1, 3), o);
  ::setenv("PEERSEL_THREADS", "4", 1);
  const auto b = mc_efficiency(*duples, g, Rational(1, 3), o);
  ::unsetenv("PEERSEL_THREADS");
  CHECK(a.mean == b.mean);
}

TEST_CASE("comparisons rank by value") {
  const std::vector<MechanismHandle> three{MechanismHandle::random_dictatorship(),
                                           MechanismHandle::duples(), MechanismHandle::constant()};
  const auto k4 = compare_mechanisms(complete_network(4, Relation::Friend), kHalf, three);
  REQUIRE(k4.size() == 3);
  CHECK(k4[0].mechanism.id == MechanismId::RandomDictatorship);
  CHECK(k4[0].value == Rational(7, 8));
  CHECK(k4[1].value >= k4[2].value);
  CHECK(k4[2].value == kHalf);

  const auto m = compare_mechanisms(matching_friends(4), kHalf, three);
  CHECK(m[0].mechanism.id == MechanismId::Duples);
  CHECK(m[0].value > kHalf);
  CHECK(m[1].value == kHalf);
  CHECK(m[2].value == kHalf);
  CHECK(m[1].rank == 2);
  CHECK(m[2].rank == 2);
}
