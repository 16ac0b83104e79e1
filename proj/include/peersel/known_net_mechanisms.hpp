// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PEERSEL_KNOWN_NET_MECHANISMS_HPP
#define PEERSEL_KNOWN_NET_MECHANISMS_HPP

#include <optional>
#include <utility>

#include "peersel/core_model.hpp"
#include "peersel/mechanism.hpp"

namespace peersel {

/// Which relation of the voted-on agent j selects her voters: Iⱼ, Eⱼ or Fⱼ.
enum class VoteRelation { ImpartialOf, EnemyOf, FriendOf };

struct PositiveVoteQuery {
  AgentSet voters;  // the restriction set X
  VoteRelation relation = VoteRelation::ImpartialOf;
};

/// { j ∈ V : every v ∈ X ∩ R(j) reports j as needy }. Agents without any
/// voter in X ∩ R(j) are included.
AgentSet positive_vote_set(const RelationNetwork& network, const MessageProfile& msgs,
                           const PositiveVoteQuery& query);

// The three known-network mechanisms read only the reported needy sets. They
// require a NeedyOnly profile of the network's size.

ScaledLottery impartial_vote_lottery(const RelationNetwork& network,
                                     const MessageProfile& msgs);
ScaledLottery sink_vote_lottery(const RelationNetwork& network, VoteRelation relation,
                                AgentId sink, const MessageProfile& msgs);

/// g¹: votes of impartials; selects uniformly among agents approved by their
/// impartials, as seen from each candidate's own impartial set.
SelectionDistribution mechanism_g1(const RelationNetwork& network,
                                   const MessageProfile& msgs);
/// g²ᵏ: votes of enemies shared with the sink k, which absorbs the residual.
SelectionDistribution mechanism_g2k(const RelationNetwork& network, AgentId sink,
                                    const MessageProfile& msgs);
/// g³ᵏ: as g²ᵏ with friends. The denominator uses Fᵢ ∩ F_k.
SelectionDistribution mechanism_g3k(const RelationNetwork& network, AgentId sink,
                                    const MessageProfile& msgs);

enum class IntersectionCondition { Impartial, Enemy, Friend };

struct IntersectionVerdict {
  bool satisfied = true;
  /// First offending pair (i ≤ j) in lexicographic order.
  std::optional<std::pair<AgentId, AgentId>> witness;
};

/// I: Iᵢ ∩ Iⱼ ≠ ∅ for all i, j. E(k)/F(k): Rᵢ ∩ Rⱼ ∩ R_k ≠ ∅ for all
/// i, j ≠ k. Pairs include i = j.
IntersectionVerdict check_intersection(const RelationNetwork& network,
                                       IntersectionCondition which,
                                       std::optional<AgentId> sink = std::nullopt);

}  // namespace peersel

#endif  // PEERSEL_KNOWN_NET_MECHANISMS_HPP
