// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PEERSEL_EFFICIENCY_ANALYSIS_HPP
#define PEERSEL_EFFICIENCY_ANALYSIS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "peersel/core_model.hpp"
#include "peersel/mechanism.hpp"

namespace peersel {

/// m_{f,i}: number of agents with f friends and i impartials.
struct DegreeProfile {
  std::map<std::pair<int, int>, int> counts;
};

DegreeProfile degree_profile(const RelationNetwork& network);

/// S[k] = Σ over needy sets N with |N| = k of the needy mass at the truthful
/// profile for N. Needs n ≤ 20.
std::vector<Rational> needy_mass_by_size(const Mechanism& mechanism,
                                         const RelationNetwork& network);

/// Σₖ qᵏ(1−q)ⁿ⁻ᵏ S[k].
Rational efficiency_from_masses(std::span<const Rational> masses, const Rational& q);

/// Probability of selecting a needy agent when each agent is needy
/// independently with probability q and everyone reports truthfully.
Rational exact_efficiency(const Mechanism& mechanism, const RelationNetwork& network,
                          const NeedyPrior& q);

/// The random dictatorship's efficiency from the degree profile alone. n ≥ 2.
Rational closed_form_prd(const RelationNetwork& network, const NeedyPrior& q);

/// True iff every agent has exactly one friend, or no friend and exactly one
/// impartial; then the random dictatorship's efficiency is exactly q.
bool rd_matches_constant(const RelationNetwork& network);

/// q + q(1−q)(3n−8)/(8(n−1)) for n ≥ 3 and q ∈ [0, 1].
Rational duples_balanced_bound(int n, const Rational& q);

enum class IntervalKind { Normal, Wilson };

struct McOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  Rational confidence{19, 20};
  IntervalKind interval = IntervalKind::Normal;
};

struct McEstimate {
  Rational mean = 0;  // exact mean of the sampled needy masses
  double estimate = 0;
  double half_width = 0;
  double lower = 0;
  double upper = 0;
  Rational confidence{19, 20};
  IntervalKind interval = IntervalKind::Normal;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate with per-(seed, sample, agent) counter-based draws,
/// so the result does not depend on the number of worker threads. A zero
/// sample variance is replaced by the worst case 1/4, keeping the half-width
/// positive.
McEstimate mc_efficiency(const Mechanism& mechanism, const RelationNetwork& network,
                         const Rational& q, const McOptions& options = {});

struct ComparisonRow {
  MechanismHandle mechanism;
  Rational value = 0;                 // exact, or the exact sample mean
  std::optional<McEstimate> estimate;  // Monte Carlo mode only
  int rank = 1;                        // equal values share a rank
};

/// Sorted by decreasing value; ties keep the input order.
std::vector<ComparisonRow> compare_mechanisms(const RelationNetwork& network, const Rational& q,
                                              std::span<const MechanismHandle> mechanisms,
                                              const std::optional<McOptions>& monte_carlo = {});

}  // namespace peersel

#endif  // PEERSEL_EFFICIENCY_ANALYSIS_HPP
