// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "peersel/core_model.hpp"

#include <algorithm>
#include <cctype>

namespace peersel {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    fail(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  }
  boost::multiprecision::mpz_int n(std::string{num});
  boost::multiprecision::mpz_int d(std::string{den});
  if (d == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) { return value.str(); }

AgentSet::AgentSet(std::initializer_list<AgentId> members) {
  for (AgentId i : members) insert(i);
}

std::vector<AgentId> AgentSet::to_vector() const { return {begin(), end()}; }

std::string to_string(AgentSet set) {
  std::string out = "{";
  bool first = true;
  for (AgentId i : set) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::Friend: return "friend";
    case Relation::Enemy: return "enemy";
    case Relation::Impartial: return "impartial";
  }
  return "impartial";
}

Relation parse_relation(std::string_view text) {
  if (text == "friend") return Relation::Friend;
  if (text == "enemy") return Relation::Enemy;
  if (text == "impartial") return Relation::Impartial;
  fail(ErrorCode::Parse, "unknown relation '" + std::string(text) + "'");
}

std::string_view to_string(MessageMode mode) {
  return mode == MessageMode::NeedyOnly ? "needy-only" : "full-type";
}

// ---------------------------------------------------------------------------

RelationNetwork RelationNetwork::build(int n, std::span<const LabeledPair> labeled_pairs) {
  if (n < 1 || n > kMaxAgents) {
    fail(ErrorCode::InvalidArgument,
         "agent count must be in [1," + std::to_string(kMaxAgents) + "], got " +
             std::to_string(n));
  }
  RelationNetwork net;
  net.n_ = n;
  net.friends_.assign(n, AgentSet{});
  net.enemies_.assign(n, AgentSet{});
  std::vector<AgentSet> labeled(n);
  for (const LabeledPair& p : labeled_pairs) {
    if (p.i < 0 || p.i >= n || p.j < 0 || p.j >= n) {
      fail(ErrorCode::InvalidArgument, "agent id out of range in pair (" +
                                           std::to_string(p.i) + "," +
                                           std::to_string(p.j) + ")");
    }
    if (p.i == p.j) {
      fail(ErrorCode::InvalidArgument, "self pair (" + std::to_string(p.i) + "," +
                                           std::to_string(p.j) + ")");
    }
    if (labeled[p.i].contains(p.j)) {
      fail(ErrorCode::InvalidArgument, "pair {" + std::to_string(p.i) + "," +
                                           std::to_string(p.j) + "} labeled twice");
    }
    labeled[p.i].insert(p.j);
    labeled[p.j].insert(p.i);
    if (p.relation == Relation::Friend) {
      net.friends_[p.i].insert(p.j);
      net.friends_[p.j].insert(p.i);
    } else if (p.relation == Relation::Enemy) {
      net.enemies_[p.i].insert(p.j);
      net.enemies_[p.j].insert(p.i);
    }
  }
  return net;
}

AgentId RelationNetwork::check(AgentId i) const {
  if (i < 0 || i >= n_) {
    fail(ErrorCode::InvalidArgument,
         "agent " + std::to_string(i) + " out of range for n=" + std::to_string(n_));
  }
  return i;
}

AgentSet RelationNetwork::impartials(AgentId i) const {
  check(i);
  return agents() - AgentSet::single(i) - friends_[i] - enemies_[i];
}

Relation RelationNetwork::relation(AgentId i, AgentId j) const {
  check(i);
  check(j);
  if (i == j) fail(ErrorCode::InvalidArgument, "relation of an agent with herself");
  if (friends_[i].contains(j)) return Relation::Friend;
  if (enemies_[i].contains(j)) return Relation::Enemy;
  return Relation::Impartial;
}

RelationSets RelationNetwork::sets_of(AgentId i) const {
  return {friends(i), enemies(i), impartials(i)};
}

std::vector<LabeledPair> RelationNetwork::distinguished_pairs() const {
  std::vector<LabeledPair> out;
  for (AgentId i = 0; i < n_; ++i) {
    for (AgentId j = i + 1; j < n_; ++j) {
      Relation r = relation(i, j);
      if (r != Relation::Impartial) out.push_back({i, j, r});
    }
  }
  return out;
}

RelationNetwork RelationNetwork::permuted(std::span<const AgentId> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    fail(ErrorCode::InvalidArgument, "permutation length differs from n");
  }
  std::vector<LabeledPair> pairs;
  for (const LabeledPair& p : distinguished_pairs()) {
    pairs.push_back({perm[p.i], perm[p.j], p.relation});
  }
  return build(n_, pairs);
}

RelationNetwork build_network(int n, std::span<const LabeledPair> labeled_pairs) {
  return RelationNetwork::build(n, labeled_pairs);
}

RelationSets sets_of(const RelationNetwork& network, AgentId i) {
  return network.sets_of(i);
}

// ---------------------------------------------------------------------------

MessageProfile MessageProfile::needy_only(std::span<const AgentSet> reported_needy, int n) {
  if (static_cast<int>(reported_needy.size()) != n) {
    fail(ErrorCode::InvalidArgument, "profile needs exactly one message per agent");
  }
  std::vector<FullTypeMessage> messages(n);
  for (AgentId i = 0; i < n; ++i) {
    messages[i].reporter = i;
    messages[i].reported_needy = reported_needy[i];
  }
  MessageProfile profile(MessageMode::NeedyOnly, std::move(messages));
  for (const auto& m : profile.messages_) profile.validate(m);
  return profile;
}

MessageProfile MessageProfile::full_type(std::vector<FullTypeMessage> messages) {
  if (messages.empty() || static_cast<int>(messages.size()) > kMaxAgents) {
    fail(ErrorCode::InvalidArgument, "profile size out of range");
  }
  for (std::size_t i = 0; i < messages.size(); ++i) {
    if (messages[i].reporter != static_cast<AgentId>(i)) {
      fail(ErrorCode::InvalidArgument, "message reporters must be 0..n-1 in order");
    }
  }
  MessageProfile profile(MessageMode::FullType, std::move(messages));
  for (const auto& m : profile.messages_) profile.validate(m);
  return profile;
}

void MessageProfile::validate(const FullTypeMessage& msg) const {
  const int n = size();
  const AgentSet all = AgentSet::all(n);
  if (msg.reporter < 0 || msg.reporter >= n) {
    fail(ErrorCode::InvalidArgument, "reporter out of range");
  }
  if (!msg.reported_needy.subset_of(all) || !msg.reported_friends.subset_of(all) ||
      !msg.reported_enemies.subset_of(all)) {
    fail(ErrorCode::InvalidArgument, "message mentions agents outside V");
  }
  if ((msg.reported_friends | msg.reported_enemies).contains(msg.reporter)) {
    fail(ErrorCode::InvalidArgument, "reporter lists herself as friend or enemy");
  }
  if (!(msg.reported_friends & msg.reported_enemies).empty()) {
    fail(ErrorCode::InvalidArgument, "reported friends and enemies overlap");
  }
  if (mode_ == MessageMode::NeedyOnly &&
      !(msg.reported_friends | msg.reported_enemies).empty()) {
    fail(ErrorCode::InvalidArgument, "needy-only message carries relation reports");
  }
}

void MessageProfile::set_message(const FullTypeMessage& msg) {
  validate(msg);
  messages_[msg.reporter] = msg;
}

MessageProfile truthful_profile(const WorldState& state, MessageMode mode) {
  const int n = state.network.size();
  if (!state.needy.subset_of(state.network.agents())) {
    fail(ErrorCode::InvalidArgument, "needy set mentions agents outside V");
  }
  if (mode == MessageMode::NeedyOnly) {
    std::vector<AgentSet> reports(n, state.needy);
    return MessageProfile::needy_only(reports, n);
  }
  std::vector<FullTypeMessage> messages(n);
  for (AgentId i = 0; i < n; ++i) {
    messages[i] = {i, state.network.friends(i), state.network.enemies(i), state.needy};
  }
  return MessageProfile::full_type(std::move(messages));
}

// ---------------------------------------------------------------------------

SelectionDistribution::SelectionDistribution(std::vector<Rational> probs)
    : probs_(std::move(probs)) {
  Rational sum = 0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i] < 0 || probs_[i] > 1) {
      fail(ErrorCode::Domain, "probability of agent " + std::to_string(i) + " is " +
                                  to_string(probs_[i]) + ", outside [0,1]");
    }
    sum += probs_[i];
  }
  if (sum > 1) fail(ErrorCode::Domain, "probabilities sum to " + to_string(sum) + " > 1");
}

Rational SelectionDistribution::total() const {
  Rational sum = 0;
  for (const Rational& p : probs_) sum += p;
  return sum;
}

Rational SelectionDistribution::mass_on(AgentSet set) const {
  Rational sum = 0;
  for (AgentId i : set) {
    if (i < size()) sum += probs_[i];
  }
  return sum;
}

AgentSet SelectionDistribution::support() const {
  AgentSet s;
  for (AgentId i = 0; i < size(); ++i) {
    if (probs_[i] != 0) s.insert(i);
  }
  return s;
}

NeedyPrior::NeedyPrior(Rational q) : q_(std::move(q)) {
  if (q_ <= 0 || q_ >= 1) {
    fail(ErrorCode::InvalidArgument, "needy prior must lie in (0,1), got " + to_string(q_));
  }
}

}  // namespace peersel
