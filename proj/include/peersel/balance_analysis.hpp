// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PEERSEL_BALANCE_ANALYSIS_HPP
#define PEERSEL_BALANCE_ANALYSIS_HPP

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "peersel/core_model.hpp"
#include "peersel/mechanism.hpp"

namespace peersel {

/// 1: a friend of a friend is a friend. 2: an enemy of an enemy is a friend.
/// 3: a friend of an enemy is an enemy.
enum class BalanceRule { FriendOfFriend = 1, EnemyOfEnemy = 2, FriendOfEnemy = 3 };

struct BalanceVerdict {
  bool balanced = true;
  /// (i, j, k): the rule applied to j ∈ R(i) and k ∈ R'(j) fails for (i, k).
  std::optional<std::array<AgentId, 3>> violating_triple;
  std::optional<BalanceRule> rule;
};

/// Scans ordered triples of distinct agents lexicographically; within a
/// triple the rules are tried in order 1, 2, 3.
BalanceVerdict check_structural_balance(const RelationNetwork& network);

/// A maximal set connected by friend or enemy links: one friend clique, or
/// two cliques with complete enmity between them (larger first, ties by
/// smallest member). Clique members are sorted.
struct EfComponent {
  std::vector<std::vector<AgentId>> cliques;
};

/// Components ordered by smallest member.
struct BalanceDecomposition {
  std::vector<EfComponent> components;
};

/// Throws Error(Domain) on an unbalanced network.
BalanceDecomposition decompose(const RelationNetwork& network);

/// Inverse of decompose on balanced networks.
RelationNetwork recompose(int n, const BalanceDecomposition& decomposition);

enum class BalanceClass { SingleFComponent, AtLeastThreeEfComponents, OneEfNotF, ExactlyTwoEf };

/// "SingleFComponent", "AtLeast3EFComponents", "OneEFNotF", "ExactlyTwoEF".
std::string_view to_string(BalanceClass value);

struct ClassifyVerdict {
  bool admits = false;
  BalanceClass reason = BalanceClass::ExactlyTwoEf;
  std::optional<MechanismHandle> recommended;
};

/// Whether a balanced network with n ≥ 4 admits an efficient DSIC
/// mechanism: a single friend component (g3k with sink 0) or at least three
/// EF-components (g1). Throws Error(Domain) for n < 4 or unbalanced input.
ClassifyVerdict classify_balanced(const RelationNetwork& network);

}  // namespace peersel

#endif  // PEERSEL_BALANCE_ANALYSIS_HPP
