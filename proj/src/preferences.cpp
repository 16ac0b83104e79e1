// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "peersel/preferences.hpp"

namespace peersel {

PreferenceWeights::PreferenceWeights(Rational friend_weight, Rational enemy_weight)
    : w_f_(std::move(friend_weight)), w_e_(std::move(enemy_weight)) {
  if (w_f_ <= 0 || w_e_ <= 0) {
    fail(ErrorCode::InvalidArgument, "preference weights must be strictly positive");
  }
}

DeviationDelta deviation_delta(AgentId i, const SelectionDistribution& from,
                               const SelectionDistribution& to, AgentSet friends,
                               AgentSet enemies) {
  if (from.size() != to.size()) {
    fail(ErrorCode::InvalidArgument, "distributions differ in length");
  }
  if (i < 0 || i >= from.size()) fail(ErrorCode::InvalidArgument, "agent out of range");
  DeviationDelta d;
  d.own = to[i] - from[i];
  d.friend_sum = to.mass_on(friends) - from.mass_on(friends);
  d.enemy_sum = to.mass_on(enemies) - from.mass_on(enemies);
  return d;
}

bool strictly_prefers(AgentId i, const SelectionDistribution& p,
                      const SelectionDistribution& p_prime, AgentSet friends,
                      AgentSet enemies, const PreferenceWeights& weights) {
  // delta = p − p'
  return weighted_improvement(deviation_delta(i, p_prime, p, friends, enemies), weights);
}

bool weighted_improvement(const DeviationDelta& delta, const PreferenceWeights& weights) {
  if (delta.own != 0) return delta.own > 0;
  return weights.friend_weight() * delta.friend_sum -
             weights.enemy_weight() * delta.enemy_sum >
         0;
}

bool robust_improvement(const DeviationDelta& delta) {
  if (delta.own != 0) return delta.own > 0;
  // w_f·A − w_e·B > 0 for some w_f, w_e > 0 iff A > 0 or B < 0.
  return delta.friend_sum > 0 || delta.enemy_sum < 0;
}

bool robust_improvement(AgentId i, const SelectionDistribution& p_truth,
                        const SelectionDistribution& p_dev, AgentSet friends,
                        AgentSet enemies) {
  return robust_improvement(deviation_delta(i, p_truth, p_dev, friends, enemies));
}

}  // namespace peersel
