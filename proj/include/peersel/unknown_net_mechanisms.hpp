// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PEERSEL_UNKNOWN_NET_MECHANISMS_HPP
#define PEERSEL_UNKNOWN_NET_MECHANISMS_HPP

#include <array>

#include "peersel/core_model.hpp"
#include "peersel/mechanism.hpp"

namespace peersel {

/// Six disjoint tiers built from one reported type, best first:
/// needy friends, other friends, needy impartials, other impartials,
/// needy enemies, other enemies. Their union is V∖{reporter}.
struct ReportedHierarchy {
  std::array<AgentSet, 6> tiers;

  /// 0-based tier index of agent a; -1 for the reporter.
  int tier_of(AgentId a) const;
};

/// Needy means the reporter's own reported needy set.
ReportedHierarchy reported_hierarchy(const FullTypeMessage& msg, int n);

struct PairVoteTally {
  AgentId j = 0;
  AgentId k = 0;
  int votes_for_j = 0;  // x_jk
  int votes_for_k = 0;  // x_kj
};

SelectionDistribution mechanism_constant(int n);

/// The set dictator j chooses from: the first nonempty set among F∩N, F,
/// I∩N, I, E∩N, E of her report.
AgentSet dictator_choice_set(const FullTypeMessage& msg, int n);

/// Uniform over dictator_choice_set; sums to 1. Needs n ≥ 2.
SelectionDistribution dictator_pick(const MessageProfile& msgs, AgentId dictator);

/// Random dictatorship: each agent is dictator with probability 1/n.
SelectionDistribution mechanism_rd(const MessageProfile& msgs);

/// Votes of every i ∉ {j,k}; i abstains when j and k share a tier of H(mᵢ).
PairVoteTally duple_vote(const MessageProfile& msgs, AgentId j, AgentId k);

/// Duples: uniform pair, majority of the other agents, fair coin on ties.
SelectionDistribution mechanism_duples(const MessageProfile& msgs);

ScaledLottery constant_lottery(int n);
ScaledLottery random_dictatorship_lottery(const MessageProfile& msgs);
ScaledLottery duples_lottery(const MessageProfile& msgs);

}  // namespace peersel

#endif  // PEERSEL_UNKNOWN_NET_MECHANISMS_HPP
