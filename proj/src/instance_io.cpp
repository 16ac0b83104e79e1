// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "peersel/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"

#include "random.hpp"

namespace peersel {

namespace {

void require_agents(int n) {
  if (n < 1 || n > kMaxAgents) {
    fail(ErrorCode::InvalidArgument, "n must lie in [1, 64], got " + std::to_string(n));
  }
}

template <class T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t k = items.size(); k > 1; --k) {
    std::swap(items[k - 1], items[detail::bounded(rng, k)]);
  }
}

}  // namespace

RelationNetwork complete_network(int n, Relation relation) {
  require_agents(n);
  std::vector<LabeledPair> pairs;
  if (relation != Relation::Impartial) {
    for (AgentId i = 0; i < n; ++i) {
      for (AgentId j = i + 1; j < n; ++j) pairs.push_back({i, j, relation});
    }
  }
  return RelationNetwork::build(n, pairs);
}

RelationNetwork matching_friends(int n) {
  require_agents(n);
  std::vector<LabeledPair> pairs;
  for (AgentId i = 0; i + 1 < n; i += 2) pairs.push_back({i, i + 1, Relation::Friend});
  return RelationNetwork::build(n, pairs);
}

WorldState enemy_block_state(int n, StateSide side) {
  if (n < 4 || n > kMaxAgents) fail(ErrorCode::InvalidArgument, "enemy-block needs 4 <= n <= 64");
  std::vector<LabeledPair> pairs;
  if (side == StateSide::Left) {
    for (AgentId i = 0; i < n - 2; ++i) {
      for (AgentId j = i + 1; j < n - 2; ++j) pairs.push_back({i, j, Relation::Enemy});
    }
    return {RelationNetwork::build(n, pairs), AgentSet::single(0)};
  }
  pairs.push_back({n - 2, n - 1, Relation::Enemy});
  return {RelationNetwork::build(n, pairs), AgentSet::single(n - 1)};
}

RelationNetwork four_clique_network(const std::array<int, 4>& sizes) {
  int n = 0;
  std::array<int, 5> start{};
  for (int c = 0; c < 4; ++c) {
    if (sizes[c] < 0) fail(ErrorCode::InvalidArgument, "clique sizes must be >= 0");
    start[c] = n;
    n += sizes[c];
  }
  start[4] = n;
  require_agents(n);
  std::vector<int> clique_of(n);
  for (int c = 0; c < 4; ++c) {
    for (AgentId a = start[c]; a < start[c + 1]; ++a) clique_of[a] = c;
  }
  std::vector<LabeledPair> pairs;
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = i + 1; j < n; ++j) {
      const int ci = clique_of[i];
      const int cj = clique_of[j];
      if (ci == cj) {
        pairs.push_back({i, j, Relation::Friend});
      } else if (ci / 2 == cj / 2) {
        pairs.push_back({i, j, Relation::Enemy});
      }
    }
  }
  return RelationNetwork::build(n, pairs);
}

RelationNetwork random_signed(int n, const Rational& p_friend, const Rational& p_enemy,
                              std::uint64_t seed) {
  require_agents(n);
  if (p_friend < 0 || p_enemy < 0 || p_friend + p_enemy > 1) {
    fail(ErrorCode::InvalidArgument, "need p_friend, p_enemy >= 0 with sum <= 1");
  }
  const detail::ExactThreshold friend_cut(p_friend);
  const detail::ExactThreshold hostile_cut(p_friend + p_enemy);
  std::mt19937_64 rng(seed);
  std::vector<LabeledPair> pairs;
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = i + 1; j < n; ++j) {
      const std::uint64_t u = rng();
      if (friend_cut.accepts(u)) {
        pairs.push_back({i, j, Relation::Friend});
      } else if (hostile_cut.accepts(u)) {
        pairs.push_back({i, j, Relation::Enemy});
      }
    }
  }
  return RelationNetwork::build(n, pairs);
}

RelationNetwork random_balanced(int n, std::uint64_t seed, std::span<const int> sizes,
                                bool shuffle_agents, BalancedLayout* layout) {
  require_agents(n);
  std::mt19937_64 rng(seed);
  std::vector<int> clique_sizes(sizes.begin(), sizes.end());
  if (clique_sizes.empty()) {
    clique_sizes.push_back(1);
    for (int a = 1; a < n; ++a) {
      if (detail::bounded(rng, 2) == 0) {
        clique_sizes.push_back(1);
      } else {
        ++clique_sizes.back();
      }
    }
  } else if (std::any_of(clique_sizes.begin(), clique_sizes.end(), [](int s) { return s < 1; }) ||
             std::accumulate(clique_sizes.begin(), clique_sizes.end(), 0) != n) {
    fail(ErrorCode::InvalidArgument, "clique sizes must be positive and sum to n");
  }

  const int cliques = static_cast<int>(clique_sizes.size());
  std::vector<int> order(cliques);
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);
  std::vector<std::pair<int, int>> hostile;
  for (int k = 0; k + 1 < cliques; k += 2) {
    if (detail::bounded(rng, 2) == 1) {
      hostile.emplace_back(std::min(order[k], order[k + 1]), std::max(order[k], order[k + 1]));
    }
  }
  std::sort(hostile.begin(), hostile.end());

  std::vector<AgentId> label(n);
  std::iota(label.begin(), label.end(), 0);
  if (shuffle_agents) shuffle(label, rng);

  std::vector<std::vector<AgentId>> members(cliques);
  int next = 0;
  for (int c = 0; c < cliques; ++c) {
    for (int s = 0; s < clique_sizes[c]; ++s) members[c].push_back(label[next++]);
    std::sort(members[c].begin(), members[c].end());
  }
  std::vector<LabeledPair> pairs;
  auto link = [&](AgentId a, AgentId b, Relation r) {
    pairs.push_back({std::min(a, b), std::max(a, b), r});
  };
  for (const auto& clique : members) {
    for (std::size_t x = 0; x < clique.size(); ++x) {
      for (std::size_t y = x + 1; y < clique.size(); ++y) link(clique[x], clique[y], Relation::Friend);
    }
  }
  for (const auto& [c1, c2] : hostile) {
    for (AgentId a : members[c1]) {
      for (AgentId b : members[c2]) link(a, b, Relation::Enemy);
    }
  }
  if (layout != nullptr) *layout = {members, hostile};
  return RelationNetwork::build(n, pairs);
}

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 8> kFamilyNames{{
    {Family::CompleteFriend, "complete-friend"},
    {Family::CompleteEnemy, "complete-enemy"},
    {Family::CompleteImpartial, "complete-impartial"},
    {Family::MatchingFriends, "matching-friends"},
    {Family::EnemyBlock, "enemy-block"},
    {Family::FourCliques, "four-cliques"},
    {Family::RandomSigned, "random-signed"},
    {Family::RandomBalanced, "random-balanced"},
}};

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view text) {
  for (const auto& [f, name] : kFamilyNames) {
    if (name == text) return f;
  }
  fail(ErrorCode::InvalidArgument, "unknown family '" + std::string(text) + "'");
}

WorldState generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::CompleteFriend: return {complete_network(spec.n, Relation::Friend), {}};
    case Family::CompleteEnemy: return {complete_network(spec.n, Relation::Enemy), {}};
    case Family::CompleteImpartial: return {complete_network(spec.n, Relation::Impartial), {}};
    case Family::MatchingFriends: return {matching_friends(spec.n), {}};
    case Family::EnemyBlock: return enemy_block_state(spec.n, spec.side);
    case Family::FourCliques: return {four_clique_network(spec.clique_sizes), {}};
    case Family::RandomSigned:
      return {random_signed(spec.n, spec.p_friend, spec.p_enemy, spec.seed), {}};
    case Family::RandomBalanced:
      return {random_balanced(spec.n, spec.seed, spec.balanced_sizes), {}};
  }
  fail(ErrorCode::InvalidArgument, "unknown family");
}

// ---- instance files ------------------------------------------------------

namespace {

using nlohmann::json;

int agent_id(const json& value, int n, const char* where) {
  if (!value.is_number_integer()) {
    fail(ErrorCode::Parse, std::string(where) + ": agent ids must be integers");
  }
  const auto id = value.get<std::int64_t>();
  if (id < 0 || id >= n) {
    fail(ErrorCode::InvalidArgument,
         std::string(where) + ": agent " + std::to_string(id) + " out of range");
  }
  return static_cast<int>(id);
}

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("malformed instance: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::Parse, "instance must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "relations" && key != "needy" && key != "q") {
      fail(ErrorCode::Parse, "unknown key '" + key + "'");
    }
  }
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    fail(ErrorCode::Parse, "missing integer field 'n'");
  }
  const auto n64 = doc["n"].get<std::int64_t>();
  if (n64 < 1 || n64 > kMaxAgents) fail(ErrorCode::InvalidArgument, "n must lie in [1, 64]");
  const int n = static_cast<int>(n64);

  std::vector<LabeledPair> pairs;
  if (doc.contains("relations")) {
    const json& rels = doc["relations"];
    if (!rels.is_array()) fail(ErrorCode::Parse, "'relations' must be an array");
    for (const json& entry : rels) {
      if (!entry.is_array() || entry.size() != 3 || !entry[2].is_string()) {
        fail(ErrorCode::Parse, "each relation must be [i, j, \"kind\"]");
      }
      const int i = agent_id(entry[0], n, "relations");
      const int j = agent_id(entry[1], n, "relations");
      pairs.push_back({std::min(i, j), std::max(i, j),
                       parse_relation(entry[2].get<std::string>())});
    }
  }

  InstanceFile out{RelationNetwork::build(n, pairs), std::nullopt, std::nullopt};
  if (doc.contains("needy")) {
    if (!doc["needy"].is_array()) fail(ErrorCode::Parse, "'needy' must be an array");
    AgentSet needy;
    for (const json& id : doc["needy"]) {
      const int a = agent_id(id, n, "needy");
      if (needy.contains(a)) fail(ErrorCode::InvalidArgument, "needy lists an agent twice");
      needy.insert(a);
    }
    out.needy = needy;
  }
  if (doc.contains("q")) {
    if (!doc["q"].is_string()) fail(ErrorCode::Parse, "'q' must be a \"num/den\" string");
    out.q = NeedyPrior(parse_rational(doc["q"].get<std::string>())).value();
  }
  return out;
}

std::string serialize_instance(const InstanceFile& instance) {
  std::ostringstream out;
  out << "{\n  \"n\": " << instance.network.size() << ",\n  \"relations\": [";
  const auto pairs = instance.network.distinguished_pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    out << (k == 0 ? "\n" : ",\n") << "    [" << pairs[k].i << ", " << pairs[k].j << ", \""
        << to_string(pairs[k].relation) << "\"]";
  }
  out << (pairs.empty() ? "]" : "\n  ]");
  if (instance.needy) {
    out << ",\n  \"needy\": [";
    bool first = true;
    for (AgentId a : *instance.needy) {
      out << (first ? "" : ", ") << a;
      first = false;
    }
    out << "]";
  }
  if (instance.q) out << ",\n  \"q\": \"" << to_string(*instance.q) << "\"";
  out << "\n}\n";
  return out.str();
}

InstanceFile read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_instance(text.str());
}

void write_instance(const std::filesystem::path& path, const InstanceFile& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write " + path.string());
  out << serialize_instance(instance);
  if (!out) fail(ErrorCode::InvalidArgument, "write failed for " + path.string());
}

}  // namespace peersel
