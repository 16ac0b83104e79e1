// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PEERSEL_CORE_MODEL_HPP
#define PEERSEL_CORE_MODEL_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "peersel/error.hpp"

namespace peersel {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = boost::multiprecision::mpq_rational;

/// Parses "num/den" or "num" into an exact rational. Throws Error(Parse).
Rational parse_rational(std::string_view text);

/// Canonical "num/den" text; integers print without a denominator.
std::string to_string(const Rational& value);

/// Agents are 0-indexed. Sets of agents are bitmasks, so n is capped at 64.
using AgentId = int;
inline constexpr int kMaxAgents = 64;

/// A subset of V = {0, ..., n-1}.
class AgentSet {
 public:
  constexpr AgentSet() = default;
  constexpr explicit AgentSet(std::uint64_t bits) : bits_(bits) {}
  AgentSet(std::initializer_list<AgentId> members);

  static constexpr AgentSet all(int n) {
    return AgentSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr AgentSet single(AgentId i) {
    return AgentSet(std::uint64_t{1} << i);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(AgentId i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr void insert(AgentId i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(AgentId i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr AgentSet operator&(AgentSet o) const { return AgentSet(bits_ & o.bits_); }
  constexpr AgentSet operator|(AgentSet o) const { return AgentSet(bits_ | o.bits_); }
  /// Set difference.
  constexpr AgentSet operator-(AgentSet o) const { return AgentSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const AgentSet&) const = default;
  constexpr bool subset_of(AgentSet o) const { return (bits_ & ~o.bits_) == 0; }

  /// Smallest member; the set must be nonempty.
  constexpr AgentId first() const { return std::countr_zero(bits_); }

  class iterator {
   public:
    using value_type = AgentId;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr AgentId operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<AgentId> to_vector() const;

 private:
  std::uint64_t bits_ = 0;
};

/// "{0,2,3}"; agents 0-indexed.
std::string to_string(AgentSet set);

enum class Relation : std::uint8_t { Impartial, Friend, Enemy };

std::string_view to_string(Relation relation);
/// Accepts "friend", "enemy", "impartial". Throws Error(Parse).
Relation parse_relation(std::string_view text);

struct LabeledPair {
  AgentId i = 0;
  AgentId j = 0;
  Relation relation = Relation::Impartial;

  bool operator==(const LabeledPair&) const = default;
};

/// Fᵢ, Eᵢ, Iᵢ of one agent; together they partition V∖{i}.
struct RelationSets {
  AgentSet friends;
  AgentSet enemies;
  AgentSet impartials;
};

/// Symmetric, irreflexive, total labeling of agent pairs. Immutable.
class RelationNetwork {
 public:
  /// Unlabeled pairs are Impartial. Throws Error(InvalidArgument) on a
  /// self pair, an out-of-range id or a pair labeled twice.
  static RelationNetwork build(int n, std::span<const LabeledPair> labeled_pairs);

  int size() const { return n_; }
  AgentSet agents() const { return AgentSet::all(n_); }

  Relation relation(AgentId i, AgentId j) const;
  AgentSet friends(AgentId i) const { return friends_[check(i)]; }
  AgentSet enemies(AgentId i) const { return enemies_[check(i)]; }
  AgentSet impartials(AgentId i) const;
  RelationSets sets_of(AgentId i) const;

  /// Friend and enemy pairs (i < j), lexicographically sorted.
  std::vector<LabeledPair> distinguished_pairs() const;

  /// Relabels agent a as perm[a].
  RelationNetwork permuted(std::span<const AgentId> perm) const;

  bool operator==(const RelationNetwork&) const = default;

 private:
  RelationNetwork() = default;
  AgentId check(AgentId i) const;

  int n_ = 0;
  std::vector<AgentSet> friends_;
  std::vector<AgentSet> enemies_;
};

RelationNetwork build_network(int n, std::span<const LabeledPair> labeled_pairs);
RelationSets sets_of(const RelationNetwork& network, AgentId i);

struct WorldState {
  RelationNetwork network;
  AgentSet needy;
};

enum class MessageMode { NeedyOnly, FullType };

std::string_view to_string(MessageMode mode);

struct NeedySetMessage {
  AgentId reporter = 0;
  AgentSet reported_needy;
};

/// Reported type (F, E, N); impartials are the residual V∖({i}∪F∪E).
struct FullTypeMessage {
  AgentId reporter = 0;
  AgentSet reported_friends;
  AgentSet reported_enemies;
  AgentSet reported_needy;

  AgentSet reported_impartials(int n) const {
    return AgentSet::all(n) - AgentSet::single(reporter) - reported_friends -
           reported_enemies;
  }
  bool operator==(const FullTypeMessage&) const = default;
};

/// One message per agent, indexed by reporter. NeedyOnly profiles carry
/// empty relation sets.
class MessageProfile {
 public:
  static MessageProfile needy_only(std::span<const AgentSet> reported_needy, int n);
  static MessageProfile full_type(std::vector<FullTypeMessage> messages);

  MessageMode mode() const { return mode_; }
  int size() const { return static_cast<int>(messages_.size()); }
  const FullTypeMessage& message(AgentId i) const { return messages_[i]; }
  AgentSet reported_needy(AgentId i) const { return messages_[i].reported_needy; }
  std::span<const FullTypeMessage> messages() const { return messages_; }

  /// Unilateral replacement of the message of msg.reporter. Validated.
  void set_message(const FullTypeMessage& msg);

  bool operator==(const MessageProfile&) const = default;

 private:
  MessageProfile(MessageMode mode, std::vector<FullTypeMessage> messages)
      : mode_(mode), messages_(std::move(messages)) {}
  void validate(const FullTypeMessage& msg) const;

  MessageMode mode_ = MessageMode::NeedyOnly;
  std::vector<FullTypeMessage> messages_;
};

/// Every agent reports the true N (and, in FullType mode, her true F and E).
MessageProfile truthful_profile(const WorldState& state, MessageMode mode);

/// g(m) ∈ [0,1]^V with Σ g ≤ 1, exact.
class SelectionDistribution {
 public:
  /// Throws Error(Domain) on a negative entry, an entry above 1 or sum > 1.
  explicit SelectionDistribution(std::vector<Rational> probs);

  int size() const { return static_cast<int>(probs_.size()); }
  const Rational& operator[](AgentId i) const { return probs_[i]; }
  std::span<const Rational> probabilities() const { return probs_; }
  Rational total() const;
  Rational mass_on(AgentSet set) const;
  AgentSet support() const;

  bool operator==(const SelectionDistribution&) const = default;

 private:
  std::vector<Rational> probs_;
};

/// Prior probability q ∈ (0,1) that an agent is needy.
class NeedyPrior {
 public:
  explicit NeedyPrior(Rational q);
  const Rational& value() const { return q_; }

 private:
  Rational q_;
};

}  // namespace peersel

#endif  // PEERSEL_CORE_MODEL_HPP
