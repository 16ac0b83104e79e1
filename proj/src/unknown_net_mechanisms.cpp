// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "peersel/unknown_net_mechanisms.hpp"

namespace peersel {

namespace {

void require_full_type(const MessageProfile& msgs, std::string_view who) {
  detail::require_mode(msgs, MessageMode::FullType, who);
  if (msgs.size() < 2) fail(ErrorCode::Domain, std::string(who) + " needs n >= 2");
}

// tier[v * n + a] for a ≠ v.
void fill_tiers(const MessageProfile& msgs, std::array<std::uint8_t, kMaxAgents * kMaxAgents>& tier) {
  const int n = msgs.size();
  for (AgentId v = 0; v < n; ++v) {
    const FullTypeMessage& m = msgs.message(v);
    for (AgentId a = 0; a < n; ++a) {
      if (a == v) continue;
      std::uint8_t base = m.reported_friends.contains(a)   ? 0
                          : m.reported_enemies.contains(a) ? 4
                                                           : 2;
      tier[v * n + a] = base + (m.reported_needy.contains(a) ? 0 : 1);
    }
  }
}

}  // namespace

int ReportedHierarchy::tier_of(AgentId a) const {
  for (int t = 0; t < 6; ++t) {
    if (tiers[t].contains(a)) return t;
  }
  return -1;
}

ReportedHierarchy reported_hierarchy(const FullTypeMessage& msg, int n) {
  const AgentSet impartials = msg.reported_impartials(n);
  const AgentSet needy = msg.reported_needy;
  return {{msg.reported_friends & needy, msg.reported_friends - needy, impartials & needy,
           impartials - needy, msg.reported_enemies & needy,
           msg.reported_enemies - needy}};
}

AgentSet dictator_choice_set(const FullTypeMessage& msg, int n) {
  const AgentSet needy = msg.reported_needy;
  for (AgentSet group : {msg.reported_friends, msg.reported_impartials(n),
                         msg.reported_enemies}) {
    if (!group.empty()) return (group & needy).empty() ? group : (group & needy);
  }
  return {};
}

ScaledLottery constant_lottery(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "constant mechanism needs n >= 1");
  ScaledLottery out;
  out.denominator = n;
  out.numerators.assign(n, 1);
  return out;
}

SelectionDistribution mechanism_constant(int n) { return constant_lottery(n).to_distribution(); }

SelectionDistribution dictator_pick(const MessageProfile& msgs, AgentId dictator) {
  require_full_type(msgs, "dictator_pick");
  if (dictator < 0 || dictator >= msgs.size()) {
    fail(ErrorCode::InvalidArgument, "dictator out of range");
  }
  const int n = msgs.size();
  const AgentSet choice = dictator_choice_set(msgs.message(dictator), n);
  ScaledLottery out;
  out.denominator = choice.size();
  out.numerators.assign(n, 0);
  for (AgentId a : choice) out.numerators[a] = 1;
  return out.to_distribution();
}

ScaledLottery random_dictatorship_lottery(const MessageProfile& msgs) {
  require_full_type(msgs, "rd");
  const int n = msgs.size();
  std::array<AgentSet, kMaxAgents> choice{};
  std::int64_t common = 1;
  for (AgentId j = 0; j < n; ++j) {
    choice[j] = dictator_choice_set(msgs.message(j), n);
    common = detail::checked_lcm(common, choice[j].size());
  }
  ScaledLottery out;
  out.denominator = detail::checked_mul(common, n);
  out.numerators.assign(n, 0);
  for (AgentId j = 0; j < n; ++j) {
    const std::int64_t share = common / choice[j].size();
    for (AgentId a : choice[j]) out.numerators[a] += share;
  }
  return out;
}

SelectionDistribution mechanism_rd(const MessageProfile& msgs) {
  return random_dictatorship_lottery(msgs).to_distribution();
}

PairVoteTally duple_vote(const MessageProfile& msgs, AgentId j, AgentId k) {
  detail::require_mode(msgs, MessageMode::FullType, "duple_vote");
  const int n = msgs.size();
  if (j < 0 || j >= n || k < 0 || k >= n || j == k) {
    fail(ErrorCode::InvalidArgument, "duple_vote needs two distinct agents in range");
  }
  PairVoteTally tally{j, k, 0, 0};
  for (AgentId v = 0; v < n; ++v) {
    if (v == j || v == k) continue;
    const ReportedHierarchy h = reported_hierarchy(msgs.message(v), n);
    const int tj = h.tier_of(j);
    const int tk = h.tier_of(k);
    if (tj < tk) ++tally.votes_for_j;
    if (tk < tj) ++tally.votes_for_k;
  }
  return tally;
}

ScaledLottery duples_lottery(const MessageProfile& msgs) {
  require_full_type(msgs, "duples");
  const int n = msgs.size();
  std::array<std::uint8_t, kMaxAgents * kMaxAgents> tier;  // filled for a != v
  fill_tiers(msgs, tier);
  // Pair weight 2/(n(n−1)); a win is worth 1, a tie 1/2 each.
  ScaledLottery out;
  out.denominator = static_cast<std::int64_t>(n) * (n - 1);
  out.numerators.assign(n, 0);
  for (AgentId j = 0; j < n; ++j) {
    for (AgentId k = j + 1; k < n; ++k) {
      int margin = 0;
      for (AgentId v = 0; v < n; ++v) {
        if (v == j || v == k) continue;
        const int tj = tier[v * n + j];
        const int tk = tier[v * n + k];
        margin += (tj < tk) - (tk < tj);
      }
      if (margin > 0) {
        out.numerators[j] += 2;
      } else if (margin < 0) {
        out.numerators[k] += 2;
      } else {
        out.numerators[j] += 1;
        out.numerators[k] += 1;
      }
    }
  }
  return out;
}

SelectionDistribution mechanism_duples(const MessageProfile& msgs) {
  return duples_lottery(msgs).to_distribution();
}

}  // namespace peersel
