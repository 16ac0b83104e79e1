// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PEERSEL_VERIFICATION_HPP
#define PEERSEL_VERIFICATION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "peersel/core_model.hpp"
#include "peersel/exact_lp.hpp"
#include "peersel/mechanism.hpp"
#include "peersel/preferences.hpp"

namespace peersel {

/// All messages one agent can send, indexed densely.
///
/// NeedyOnly: index = needy bitmask, 2ⁿ messages. FullType: index =
/// relation_code · 2ⁿ + needy bitmask, where relation_code is a base-3 number
/// over the other agents in increasing order (least significant first; 0
/// impartial, 1 friend, 2 enemy), 3ⁿ⁻¹ · 2ⁿ messages.
class MessageSpace {
 public:
  MessageSpace(MessageMode mode, int n, AgentId agent);

  std::uint64_t size() const { return size_; }
  FullTypeMessage message(std::uint64_t index) const;
  std::uint64_t index_of(const FullTypeMessage& msg) const;

 private:
  MessageMode mode_;
  int n_;
  AgentId agent_;
  std::uint64_t size_;
};

struct ValidityVerdict {
  bool valid = true;
  std::uint64_t checked = 0;
  /// First offending profile (by position, or by exhaustive rank).
  std::optional<MessageProfile> counterexample;
  /// Σᵢ gᵢ of the counterexample, or the largest sum seen when valid.
  Rational total = 0;
};

/// Σᵢ gᵢ(𝒎) ≤ 1 and every gᵢ ∈ [0,1], exactly, on each given profile.
ValidityVerdict check_validity(const Mechanism& mechanism,
                               std::span<const MessageProfile> profiles);
/// The same over every profile of n agents. Throws Error(Budget) past
/// `budget` profiles.
ValidityVerdict check_validity_exhaustive(const Mechanism& mechanism, int n,
                                          std::uint64_t budget = std::uint64_t{1} << 20);

struct DsicOptions {
  bool exhaustive = true;
  std::uint64_t samples = 10000;  // sampled mode only
  std::uint64_t seed = 0;         // sampled mode only
  /// Fixed weights instead of the robust (all positive weights) test.
  std::optional<PreferenceWeights> weights;
  std::uint64_t budget = std::uint64_t{1} << 20;  // exhaustive base profiles
  std::size_t max_recorded = 32;
};

struct DsicViolation {
  /// Exhaustive rank Σ idx[a]·Mᵃ of the base profile, or the sample ordinal.
  std::uint64_t profile_index = 0;
  MessageProfile profile;  // base profile; the deviator's entry is her truth
  AgentId agent = 0;
  FullTypeMessage deviation;
  DeviationDelta delta;  // deviation minus truth
};

struct DsicReport {
  bool exhaustive = true;
  std::uint64_t checked_profiles = 0;
  std::uint64_t checked_deviations = 0;
  std::uint64_t violation_count = 0;
  /// The smallest violations by (profile_index, agent, deviation index),
  /// at most DsicOptions::max_recorded.
  std::vector<DsicViolation> violations;

  bool passed() const { return violation_count == 0; }
};

/// Every base profile, every agent, every alternative message of that agent.
/// The deviator's true relation sets come from `network` in NeedyOnly mode
/// and from her own base message in FullType mode, where `network` only
/// supplies n. Sampled mode draws base profiles uniformly with
/// mt19937_64(seed) and probes every agent with every deviation.
DsicReport check_dsic(const Mechanism& mechanism, const RelationNetwork& network,
                      const DsicOptions& options = {});

struct EfficiencyVerdict {
  bool efficient = true;
  std::uint64_t checked = 0;
  std::optional<AgentSet> counterexample;  // first failing N by bitmask
  Rational needy_mass = 0;                 // at the counterexample
};

/// Needy mass 1 at the truthful profile of every nonempty N. Needs n ≤ 20.
EfficiencyVerdict check_efficiency(const Mechanism& mechanism, const RelationNetwork& network);

// ---- impossibility witnesses ---------------------------------------------

/// Two states of the world; in the profile lattice every agent reports
/// either her left or her right type.
struct TwoStateConstruction {
  WorldState left;
  WorldState right;
};

/// Left: 0..n−3 mutually hostile, needy {0}. Right: only {n−2, n−1}
/// hostile, needy {n−1}. 4 ≤ n ≤ 6.
TwoStateConstruction enemy_block_construction(int n);

/// One network of four friend cliques (all sizes ≥ 1), needy {0} on the
/// left and {n−1} on the right. n ≤ 6.
TwoStateConstruction four_clique_construction(const std::array<int, 4>& sizes);

struct WitnessOptions {
  /// Fixed-weight DSIC rows instead of the robust ones.
  std::optional<PreferenceWeights> weights;
  /// Drop the efficiency equality at the right truthful profile.
  bool drop_right_efficiency = false;
};

/// Variables gᵢ(p) with index p·n + i, where bit a of p says agent a reports
/// her right type. Rows are labeled "valid:", "efficiency:left",
/// "efficiency:right" and "dsic:".
LinearSystem build_lattice_system(const TwoStateConstruction& construction,
                                  const WitnessOptions& options = {});

struct LpWitness {
  int agents = 0;
  int variables = 0;
  int constraints = 0;
  LpStatus status = LpStatus::Feasible;
  std::vector<CertificateTerm> certificate;
  std::vector<Rational> point;
  /// Independent re-check of the certificate or the point.
  bool verified = false;
  Rational combined_rhs = 0;  // of the certificate
  LinearSystem system;
};

LpWitness impossibility_witness(const TwoStateConstruction& construction,
                                const WitnessOptions& options = {});

}  // namespace peersel

#endif  // PEERSEL_VERIFICATION_HPP
