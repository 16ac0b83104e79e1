// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PEERSEL_TESTS_FIXTURES_HPP
#define PEERSEL_TESTS_FIXTURES_HPP

#include <vector>

#include "peersel/core_model.hpp"
#include "peersel/instance_io.hpp"
#include "peersel/mechanism.hpp"

namespace fixtures {

using namespace peersel;

// {0,1} impartial; agent 2 has no impartials.
inline RelationNetwork three_agent() {
  const std::vector<LabeledPair> pairs{{0, 2, Relation::Friend}, {1, 2, Relation::Friend}};
  return RelationNetwork::build(3, pairs);
}

inline RelationNetwork network(int n, std::vector<LabeledPair> pairs) {
  return RelationNetwork::build(n, pairs);
}

inline std::vector<Rational> probs(const SelectionDistribution& d) {
  return {d.probabilities().begin(), d.probabilities().end()};
}

inline std::vector<Rational> probs(const ScaledLottery& lot) {
  return probs(lot.to_distribution());
}

inline std::vector<Rational> rationals(std::initializer_list<Rational> values) { return values; }

inline SelectionDistribution truthful_outcome(const Mechanism& mech, const RelationNetwork& g,
                                              AgentSet needy) {
  return mech.select(truthful_profile({g, needy}, mech.mode()));
}

}  // namespace fixtures

#endif  // PEERSEL_TESTS_FIXTURES_HPP
