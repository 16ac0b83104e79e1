// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "peersel/known_net_mechanisms.hpp"

#include <array>

namespace peersel {

namespace {

// approvers[j] = { v : j ∈ m_v }
std::array<AgentSet, kMaxAgents> approvals(const MessageProfile& msgs) {
  std::array<AgentSet, kMaxAgents> approvers{};
  for (AgentId v = 0; v < msgs.size(); ++v) {
    for (AgentId j : msgs.reported_needy(v)) approvers[j].insert(v);
  }
  return approvers;
}

AgentSet related(const RelationNetwork& net, VoteRelation relation, AgentId j) {
  switch (relation) {
    case VoteRelation::ImpartialOf: return net.impartials(j);
    case VoteRelation::EnemyOf: return net.enemies(j);
    case VoteRelation::FriendOf: return net.friends(j);
  }
  return {};
}

void require_profile(const RelationNetwork& net, const MessageProfile& msgs,
                     std::string_view who) {
  detail::require_mode(msgs, MessageMode::NeedyOnly, who);
  if (msgs.size() != net.size()) {
    fail(ErrorCode::Domain, std::string(who) + ": profile size differs from network size");
  }
}

}  // namespace

AgentSet positive_vote_set(const RelationNetwork& network, const MessageProfile& msgs,
                           const PositiveVoteQuery& query) {
  require_profile(network, msgs, "positive_vote_set");
  if (!query.voters.subset_of(network.agents())) {
    fail(ErrorCode::InvalidArgument, "voter set mentions agents outside V");
  }
  const auto approvers = approvals(msgs);
  AgentSet result;
  for (AgentId j = 0; j < network.size(); ++j) {
    if ((query.voters & related(network, query.relation, j)).subset_of(approvers[j])) {
      result.insert(j);
    }
  }
  return result;
}

ScaledLottery impartial_vote_lottery(const RelationNetwork& network,
                                     const MessageProfile& msgs) {
  require_profile(network, msgs, "g1");
  const int n = network.size();
  const auto approvers = approvals(msgs);
  std::array<AgentSet, kMaxAgents> impartials{};
  for (AgentId j = 0; j < n; ++j) impartials[j] = network.impartials(j);

  std::array<int, kMaxAgents> pos_size{};
  std::int64_t denominator = 1;
  for (AgentId i = 0; i < n; ++i) {
    // i ∈ pos(m_{Iᵢ}) iff every impartial of i approves i.
    if (!impartials[i].subset_of(approvers[i])) continue;
    int count = 0;
    for (AgentId j = 0; j < n; ++j) {
      if ((impartials[i] & impartials[j]).subset_of(approvers[j])) ++count;
    }
    pos_size[i] = count;
    denominator = detail::checked_lcm(denominator, count);
  }
  ScaledLottery out;
  out.denominator = denominator;
  out.numerators.assign(n, 0);
  for (AgentId i = 0; i < n; ++i) {
    if (pos_size[i] > 0) out.numerators[i] = denominator / pos_size[i];
  }
  return out;
}

ScaledLottery sink_vote_lottery(const RelationNetwork& network, VoteRelation relation,
                                AgentId sink, const MessageProfile& msgs) {
  const char* who = relation == VoteRelation::EnemyOf ? "g2k" : "g3k";
  require_profile(network, msgs, who);
  const int n = network.size();
  if (sink < 0 || sink >= n) fail(ErrorCode::InvalidArgument, "sink out of range");
  if (relation == VoteRelation::ImpartialOf) {
    fail(ErrorCode::InvalidArgument, "sink mechanisms use enemy or friend votes");
  }
  const auto approvers = approvals(msgs);
  std::array<AgentSet, kMaxAgents> rel{};
  for (AgentId j = 0; j < n; ++j) rel[j] = related(network, relation, j);
  const AgentSet selectors = rel[sink];

  std::array<int, kMaxAgents> pos_size{};
  std::int64_t denominator = 1;
  for (AgentId i = 0; i < n; ++i) {
    if (i == sink) continue;
    // i ∈ pos(m_{R_k}): approved by all of R_i ∩ R_k.
    if (!(selectors & rel[i]).subset_of(approvers[i])) continue;
    const AgentSet voters = rel[i] & selectors;
    int count = 0;
    for (AgentId j = 0; j < n; ++j) {
      if (j != sink && (voters & rel[j]).subset_of(approvers[j])) ++count;
    }
    // i itself passes the same test, so count ≥ 1.
    if (count == 0) fail(ErrorCode::Domain, std::string(who) + ": empty denominator set");
    pos_size[i] = count;
    denominator = detail::checked_lcm(denominator, count);
  }
  ScaledLottery out;
  out.denominator = denominator;
  out.numerators.assign(n, 0);
  std::int64_t assigned = 0;
  for (AgentId i = 0; i < n; ++i) {
    if (pos_size[i] > 0) {
      out.numerators[i] = denominator / pos_size[i];
      assigned += out.numerators[i];
    }
  }
  if (assigned > denominator) {
    fail(ErrorCode::Domain, std::string(who) + ": non-sink mass exceeds 1");
  }
  out.numerators[sink] = denominator - assigned;
  return out;
}

SelectionDistribution mechanism_g1(const RelationNetwork& network,
                                   const MessageProfile& msgs) {
  return impartial_vote_lottery(network, msgs).to_distribution();
}

SelectionDistribution mechanism_g2k(const RelationNetwork& network, AgentId sink,
                                    const MessageProfile& msgs) {
  return sink_vote_lottery(network, VoteRelation::EnemyOf, sink, msgs).to_distribution();
}

SelectionDistribution mechanism_g3k(const RelationNetwork& network, AgentId sink,
                                    const MessageProfile& msgs) {
  return sink_vote_lottery(network, VoteRelation::FriendOf, sink, msgs).to_distribution();
}

IntersectionVerdict check_intersection(const RelationNetwork& network,
                                       IntersectionCondition which,
                                       std::optional<AgentId> sink) {
  const int n = network.size();
  auto rel = [&](AgentId j) {
    switch (which) {
      case IntersectionCondition::Impartial: return network.impartials(j);
      case IntersectionCondition::Enemy: return network.enemies(j);
      case IntersectionCondition::Friend: return network.friends(j);
    }
    return AgentSet{};
  };
  AgentSet restrict = network.agents();
  if (which != IntersectionCondition::Impartial) {
    if (!sink || *sink < 0 || *sink >= n) {
      fail(ErrorCode::InvalidArgument, "E(k) and F(k) conditions need a sink in range");
    }
    restrict = rel(*sink);
  } else if (sink) {
    fail(ErrorCode::InvalidArgument, "condition I takes no sink");
  }
  for (AgentId i = 0; i < n; ++i) {
    if (sink && i == *sink) continue;
    for (AgentId j = i; j < n; ++j) {
      if (sink && j == *sink) continue;
      if ((rel(i) & rel(j) & restrict).empty()) {
        return {false, std::make_pair(i, j)};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace peersel
