// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PEERSEL_INSTANCE_IO_HPP
#define PEERSEL_INSTANCE_IO_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "peersel/core_model.hpp"

namespace peersel {

// ---- generators ----------------------------------------------------------

RelationNetwork complete_network(int n, Relation relation);

/// Friend pairs {0,1}, {2,3}, ...; with odd n the last agent is impartial
/// to everyone.
RelationNetwork matching_friends(int n);

enum class StateSide { Left, Right };

/// Left: agents 0..n−3 mutually hostile, every other pair impartial, needy
/// {0}. Right: only {n−2, n−1} hostile, needy {n−1}. Needs n ≥ 4.
WorldState enemy_block_state(int n, StateSide side);

/// Friend cliques X1, X2, Y1, Y2 numbered consecutively in that order;
/// X1–X2 and Y1–Y2 hostile, X–Y impartial. Sizes may be zero, n ≥ 1.
RelationNetwork four_clique_network(const std::array<int, 4>& sizes);

/// Each pair independently friend with probability p_friend, enemy with
/// p_enemy, else impartial.
RelationNetwork random_signed(int n, const Rational& p_friend, const Rational& p_enemy,
                              std::uint64_t seed);

struct BalancedLayout {
  std::vector<std::vector<AgentId>> cliques;
  std::vector<std::pair<int, int>> hostile_pairs;  // indices into cliques
};

/// A structurally balanced network: friend cliques, some pairs of which are
/// joined by complete enmity. Clique sizes are drawn when `sizes` is empty,
/// otherwise they must sum to n. Agents are shuffled unless `shuffle` is
/// false.
RelationNetwork random_balanced(int n, std::uint64_t seed, std::span<const int> sizes = {},
                                bool shuffle = true, BalancedLayout* layout = nullptr);

enum class Family {
  CompleteFriend,
  CompleteEnemy,
  CompleteImpartial,
  MatchingFriends,
  EnemyBlock,
  FourCliques,
  RandomSigned,
  RandomBalanced,
};

/// "complete-friend", "complete-enemy", "complete-impartial",
/// "matching-friends", "enemy-block", "four-cliques", "random-signed",
/// "random-balanced".
std::string_view to_string(Family family);
Family parse_family(std::string_view text);

struct GeneratorSpec {
  Family family = Family::CompleteImpartial;
  int n = 0;                               // unused by FourCliques
  StateSide side = StateSide::Left;        // EnemyBlock
  std::array<int, 4> clique_sizes{};       // FourCliques
  Rational p_friend = 0;                   // RandomSigned
  Rational p_enemy = 0;                    // RandomSigned
  std::vector<int> balanced_sizes;         // RandomBalanced, optional
  std::uint64_t seed = 0;
};

/// The needy set is empty except for EnemyBlock.
WorldState generate(const GeneratorSpec& spec);

// ---- instance files ------------------------------------------------------

/// A network with an optional needy set and prior q.
struct InstanceFile {
  RelationNetwork network;
  std::optional<AgentSet> needy;
  std::optional<Rational> q;
};

/// JSON object with keys "n", "relations" ([[i, j, kind], ...]), optional
/// "needy" ([ids]) and optional "q" ("num/den" string). Pairs may appear in
/// either order; "impartial" entries are accepted. Unknown keys, floats for
/// q and conflicting labels are errors (Error(Parse) or
/// Error(InvalidArgument)).
InstanceFile parse_instance(std::string_view text);

/// Canonical text: pairs sorted with i < j, impartial pairs omitted, one
/// relation per line, trailing newline.
std::string serialize_instance(const InstanceFile& instance);

InstanceFile read_instance(const std::filesystem::path& path);
void write_instance(const std::filesystem::path& path, const InstanceFile& instance);

}  // namespace peersel

#endif  // PEERSEL_INSTANCE_IO_HPP
