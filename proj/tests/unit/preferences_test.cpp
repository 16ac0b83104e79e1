// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "peersel/error.hpp"
#include "peersel/preferences.hpp"

using namespace peersel;

namespace {

SelectionDistribution dist(std::vector<Rational> p) { return SelectionDistribution(std::move(p)); }

}  // namespace

TEST_CASE("own probability dominates") {
  const PreferenceWeights w(1, 1);
  CHECK(strictly_prefers(0, dist({1, 0, 0}), dist({0, 1, 0}), AgentSet{}, AgentSet{}, w));
  CHECK_FALSE(strictly_prefers(0, dist({0, 1, 0}), dist({1, 0, 0}), AgentSet{}, AgentSet{}, w));
}

TEST_CASE("preference is irreflexive") {
  const PreferenceWeights w(2, 3);
  const auto p = dist({Rational(1, 3), Rational(1, 3), 0});
  CHECK_FALSE(strictly_prefers(1, p, p, AgentSet{0}, AgentSet{2}, w));
  CHECK_FALSE(robust_improvement(1, p, p, AgentSet{0}, AgentSet{2}));
}

TEST_CASE("secondary criterion weighs friends against enemies") {
  const PreferenceWeights w(1, 1);
  const auto p = dist({0, Rational(1, 2), Rational(1, 4)});
  const auto p_prime = dist({0, Rational(1, 4), Rational(1, 2)});
  CHECK(strictly_prefers(0, p, p_prime, AgentSet{1}, AgentSet{2}, w));
  CHECK_FALSE(strictly_prefers(0, p_prime, p, AgentSet{1}, AgentSet{2}, w));
}

TEST_CASE("robust improvement on deltas") {
  CHECK_FALSE(robust_improvement(DeviationDelta{Rational(-1, 4), 1, -1}));
  CHECK_FALSE(robust_improvement(DeviationDelta{0, 0, 0}));
  CHECK(robust_improvement(DeviationDelta{0, Rational(-1, 3), Rational(-1, 3)}));
  CHECK(robust_improvement(DeviationDelta{0, Rational(1, 5), 0}));
  CHECK(robust_improvement(DeviationDelta{Rational(1, 9), -1, 1}));
  CHECK_FALSE(robust_improvement(DeviationDelta{0, Rational(-1, 3), 0}));
  CHECK_FALSE(robust_improvement(DeviationDelta{0, 0, Rational(1, 3)}));
}

TEST_CASE("robust improvement agrees with a weight grid") {
  std::vector<Rational> grid;
  for (int k = 1; k <= 12; ++k) {
    grid.emplace_back(k);
    grid.emplace_back(1, k);
  }
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(-3, 3);
  for (int trial = 0; trial < 400; ++trial) {
    const DeviationDelta d{pick(rng) > 1 ? Rational(pick(rng), 7) : Rational(0),
                           Rational(pick(rng), 5), Rational(pick(rng), 4)};
    bool any = false;
    for (const auto& wf : grid) {
      for (const auto& we : grid) any = any || weighted_improvement(d, PreferenceWeights(wf, we));
    }
    CHECK(any == robust_improvement(d));
  }
}

TEST_CASE("weights must be positive") {
  CHECK_THROWS_AS(PreferenceWeights(0, 1), Error);
  CHECK_THROWS_AS(PreferenceWeights(1, -1), Error);
}

TEST_CASE("deviation delta") {
  const auto from = dist({Rational(1, 4), Rational(1, 4), Rational(1, 2)});
  const auto to = dist({Rational(1, 4), Rational(1, 2), Rational(1, 4)});
  const auto d = deviation_delta(0, from, to, AgentSet{1}, AgentSet{2});
  CHECK(d.own == 0);
  CHECK(d.friend_sum == Rational(1, 4));
  CHECK(d.enemy_sum == Rational(-1, 4));
}
