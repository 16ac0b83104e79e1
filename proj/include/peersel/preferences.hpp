// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PEERSEL_PREFERENCES_HPP
#define PEERSEL_PREFERENCES_HPP

#include "peersel/core_model.hpp"

namespace peersel {

/// Secondary-criterion weights; both strictly positive.
class PreferenceWeights {
 public:
  PreferenceWeights(Rational friend_weight, Rational enemy_weight);

  const Rational& friend_weight() const { return w_f_; }
  const Rational& enemy_weight() const { return w_e_; }

 private:
  Rational w_f_;
  Rational w_e_;
};

/// Change seen by agent i when the outcome moves from `from` to `to`.
struct DeviationDelta {
  Rational own;
  Rational friend_sum;
  Rational enemy_sum;
};

DeviationDelta deviation_delta(AgentId i, const SelectionDistribution& from,
                               const SelectionDistribution& to, AgentSet friends,
                               AgentSet enemies);

/// Lexicographic preference: own probability first, then
/// w_f·Σ_F(p−p') − w_e·Σ_E(p−p') > 0.
bool strictly_prefers(AgentId i, const SelectionDistribution& p,
                      const SelectionDistribution& p_prime, AgentSet friends,
                      AgentSet enemies, const PreferenceWeights& weights);

/// True iff moving from p_truth to p_dev is a strict improvement for agent i
/// under SOME positive weights.
bool robust_improvement(AgentId i, const SelectionDistribution& p_truth,
                        const SelectionDistribution& p_dev, AgentSet friends,
                        AgentSet enemies);

/// Same test on an already computed delta (p_dev − p_truth).
bool robust_improvement(const DeviationDelta& delta);

/// Improvement for the fixed weights: own > 0, or own = 0 and
/// w_f·friend_sum − w_e·enemy_sum > 0.
bool weighted_improvement(const DeviationDelta& delta, const PreferenceWeights& weights);

}  // namespace peersel

#endif  // PEERSEL_PREFERENCES_HPP
