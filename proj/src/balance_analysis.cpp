// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "peersel/balance_analysis.hpp"

#include <algorithm>

namespace peersel {

BalanceVerdict check_structural_balance(const RelationNetwork& network) {
  const int n = network.size();
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      if (j == i) continue;
      const Relation ij = network.relation(i, j);
      if (ij == Relation::Impartial) continue;
      for (AgentId k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const Relation jk = network.relation(j, k);
        const Relation ik = network.relation(i, k);
        std::optional<BalanceRule> broken;
        if (ij == Relation::Friend && jk == Relation::Friend && ik != Relation::Friend) {
          broken = BalanceRule::FriendOfFriend;
        } else if (ij == Relation::Enemy && jk == Relation::Enemy && ik != Relation::Friend) {
          broken = BalanceRule::EnemyOfEnemy;
        } else if (ij == Relation::Enemy && jk == Relation::Friend && ik != Relation::Enemy) {
          // k is a friend of i's enemy j
          broken = BalanceRule::FriendOfEnemy;
        }
        if (broken) return {false, std::array<AgentId, 3>{i, j, k}, broken};
      }
    }
  }
  return {};
}

BalanceDecomposition decompose(const RelationNetwork& network) {
  const BalanceVerdict verdict = check_structural_balance(network);
  if (!verdict.balanced) {
    const auto& t = *verdict.violating_triple;
    fail(ErrorCode::Domain, "network is not structurally balanced (rule " +
                                std::to_string(static_cast<int>(*verdict.rule)) + " at " +
                                std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                std::to_string(t[2]) + ")");
  }
  const int n = network.size();
  AgentSet seen;
  BalanceDecomposition out;
  for (AgentId root = 0; root < n; ++root) {
    if (seen.contains(root)) continue;
    // Under balance the friend closure of root is its clique and every
    // enemy of the clique lies in one opposite clique.
    const AgentSet own = network.friends(root) | AgentSet::single(root);
    AgentSet other = network.enemies(root);
    EfComponent component;
    component.cliques.push_back(own.to_vector());
    if (!other.empty()) component.cliques.push_back(other.to_vector());
    seen = seen | own | other;
    auto& cl = component.cliques;
    if (cl.size() == 2 && (cl[1].size() > cl[0].size() ||
                           (cl[1].size() == cl[0].size() && cl[1].front() < cl[0].front()))) {
      std::swap(cl[0], cl[1]);
    }
    out.components.push_back(std::move(component));
  }
  return out;
}

RelationNetwork recompose(int n, const BalanceDecomposition& decomposition) {
  std::vector<LabeledPair> pairs;
  auto link = [&](AgentId a, AgentId b, Relation r) {
    pairs.push_back({std::min(a, b), std::max(a, b), r});
  };
  for (const EfComponent& c : decomposition.components) {
    for (const auto& clique : c.cliques) {
      for (std::size_t x = 0; x < clique.size(); ++x) {
        for (std::size_t y = x + 1; y < clique.size(); ++y) {
          link(clique[x], clique[y], Relation::Friend);
        }
      }
    }
    if (c.cliques.size() == 2) {
      for (AgentId a : c.cliques[0]) {
        for (AgentId b : c.cliques[1]) link(a, b, Relation::Enemy);
      }
    }
  }
  return RelationNetwork::build(n, pairs);
}

std::string_view to_string(BalanceClass value) {
  switch (value) {
    case BalanceClass::SingleFComponent: return "SingleFComponent";
    case BalanceClass::AtLeastThreeEfComponents: return "AtLeast3EFComponents";
    case BalanceClass::OneEfNotF: return "OneEFNotF";
    case BalanceClass::ExactlyTwoEf: return "ExactlyTwoEF";
  }
  return "unknown";
}

ClassifyVerdict classify_balanced(const RelationNetwork& network) {
  if (network.size() < 4) fail(ErrorCode::Domain, "classification needs n >= 4");
  const BalanceDecomposition d = decompose(network);
  const auto& comps = d.components;
  if (comps.size() == 1 && comps[0].cliques.size() == 1) {
    return {true, BalanceClass::SingleFComponent, MechanismHandle::g3k(0)};
  }
  if (comps.size() >= 3) return {true, BalanceClass::AtLeastThreeEfComponents, MechanismHandle::g1()};
  if (comps.size() == 1) return {false, BalanceClass::OneEfNotF, std::nullopt};
  return {false, BalanceClass::ExactlyTwoEf, std::nullopt};
}

}  // namespace peersel
