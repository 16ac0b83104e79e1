// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "peersel/efficiency_analysis.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/normal.hpp>

#include "parallel.hpp"
#include "random.hpp"

namespace peersel {

namespace {

Rational power(const Rational& base, int exp) {
  Rational out = 1;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

}  // namespace

DegreeProfile degree_profile(const RelationNetwork& network) {
  DegreeProfile out;
  for (AgentId a = 0; a < network.size(); ++a) {
    ++out.counts[{network.friends(a).size(), network.impartials(a).size()}];
  }
  return out;
}

std::vector<Rational> needy_mass_by_size(const Mechanism& mechanism,
                                         const RelationNetwork& network) {
  const int n = network.size();
  if (n > 20) fail(ErrorCode::Budget, "exact efficiency enumerates 2^n needy sets; n <= 20");
  const std::uint64_t sets = std::uint64_t{1} << n;
  const std::uint64_t block = std::max<std::uint64_t>(1, sets / 256);
  const std::size_t chunks = (sets + block - 1) / block;
  std::vector<std::vector<Rational>> parts(chunks, std::vector<Rational>(n + 1));
  detail::for_each_chunk(
      chunks,
      [&](std::size_t c) {
        const std::uint64_t end = std::min(sets, (c + 1) * block);
        for (std::uint64_t mask = c * block; mask < end; ++mask) {
          const AgentSet needy(mask);
          if (needy.empty()) continue;
          const ScaledLottery lot =
              mechanism.evaluate(truthful_profile({network, needy}, mechanism.mode()));
          if (lot.size() != n) fail(ErrorCode::Domain, mechanism.name() + " returned a malformed outcome");
          parts[c][needy.size()] += lot.mass_on(needy);
        }
      },
      mechanism.concurrent() ? 0 : 1);
  std::vector<Rational> out(n + 1);
  for (const auto& part : parts) {
    for (int k = 0; k <= n; ++k) out[k] += part[k];
  }
  return out;
}

Rational efficiency_from_masses(std::span<const Rational> masses, const Rational& q) {
  const int n = static_cast<int>(masses.size()) - 1;
  Rational total = 0;
  for (int k = 0; k <= n; ++k) {
    if (masses[k] != 0) total += power(q, k) * power(1 - q, n - k) * masses[k];
  }
  return total;
}

Rational exact_efficiency(const Mechanism& mechanism, const RelationNetwork& network,
                          const NeedyPrior& q) {
  return efficiency_from_masses(needy_mass_by_size(mechanism, network), q.value());
}

Rational closed_form_prd(const RelationNetwork& network, const NeedyPrior& q) {
  const int n = network.size();
  if (n < 2) fail(ErrorCode::Domain, "random dictatorship needs n >= 2");
  const Rational miss = 1 - q.value();
  Rational total = 0;
  for (const auto& [degrees, count] : degree_profile(network).counts) {
    const auto [f, i] = degrees;
    const int reach = f > 0 ? f : (i > 0 ? i : n - 1);
    total += count * (1 - power(miss, reach));
  }
  return total / n;
}

bool rd_matches_constant(const RelationNetwork& network) {
  for (AgentId a = 0; a < network.size(); ++a) {
    const int f = network.friends(a).size();
    if (!(f == 1 || (f == 0 && network.impartials(a).size() == 1))) return false;
  }
  return true;
}

Rational duples_balanced_bound(int n, const Rational& q) {
  if (n < 3) fail(ErrorCode::Domain, "the duples bound needs n >= 3");
  if (q < 0 || q > 1) fail(ErrorCode::InvalidArgument, "q must lie in [0, 1]");
  return q + q * (1 - q) * Rational(3 * n - 8, 8 * (n - 1));
}

McEstimate mc_efficiency(const Mechanism& mechanism, const RelationNetwork& network,
                         const Rational& q, const McOptions& options) {
  if (options.samples == 0) fail(ErrorCode::InvalidArgument, "samples must be >= 1");
  if (q < 0 || q > 1) fail(ErrorCode::InvalidArgument, "q must lie in [0, 1]");
  if (options.confidence <= 0 || options.confidence >= 1) {
    fail(ErrorCode::InvalidArgument, "confidence must lie in (0, 1)");
  }
  const int n = network.size();
  const detail::ExactThreshold needy_cut(q);
  const std::uint64_t stream = detail::splitmix64(options.seed);
  const std::uint64_t block = std::max<std::uint64_t>(1, options.samples / 256);
  const std::size_t chunks = (options.samples + block - 1) / block;
  struct Part {
    Rational sum = 0;
    Rational sum_sq = 0;
  };
  std::vector<Part> parts(chunks);
  detail::for_each_chunk(
      chunks,
      [&](std::size_t c) {
        const std::uint64_t end = std::min(options.samples, (c + 1) * block);
        for (std::uint64_t s = c * block; s < end; ++s) {
          const std::uint64_t key = detail::splitmix64(stream ^ detail::splitmix64(s));
          AgentSet needy;
          for (AgentId a = 0; a < n; ++a) {
            if (needy_cut.accepts(detail::splitmix64(key + static_cast<std::uint64_t>(a)))) {
              needy.insert(a);
            }
          }
          const ScaledLottery lot =
              mechanism.evaluate(truthful_profile({network, needy}, mechanism.mode()));
          const Rational mass = lot.mass_on(needy);
          parts[c].sum += mass;
          parts[c].sum_sq += mass * mass;
        }
      },
      mechanism.concurrent() ? 0 : 1);

  Rational sum = 0;
  Rational sum_sq = 0;
  for (const Part& p : parts) {
    sum += p.sum;
    sum_sq += p.sum_sq;
  }
  const auto count = options.samples;
  McEstimate out;
  out.mean = sum / count;
  out.estimate = out.mean.convert_to<double>();
  out.confidence = options.confidence;
  out.interval = options.interval;
  out.samples = count;
  out.seed = options.seed;

  const double level = options.confidence.convert_to<double>();
  const double z =
      boost::math::quantile(boost::math::normal_distribution<double>(), 0.5 + level / 2);
  const double sn = static_cast<double>(count);
  if (options.interval == IntervalKind::Normal) {
    Rational variance = count > 1 ? (sum_sq - sum * out.mean) / (count - 1) : Rational(0);
    if (variance <= 0) variance = Rational(1, 4);
    out.half_width = z * std::sqrt(variance.convert_to<double>() / sn);
    out.lower = out.estimate - out.half_width;
    out.upper = out.estimate + out.half_width;
  } else {
    const double p = out.estimate;
    const double z2 = z * z;
    const double denom = 1 + z2 / sn;
    const double center = (p + z2 / (2 * sn)) / denom;
    const double spread = z / denom * std::sqrt(p * (1 - p) / sn + z2 / (4 * sn * sn));
    out.lower = center - spread;
    out.upper = center + spread;
    out.half_width = std::max(out.upper - p, p - out.lower);
  }
  return out;
}

std::vector<ComparisonRow> compare_mechanisms(const RelationNetwork& network, const Rational& q,
                                              std::span<const MechanismHandle> mechanisms,
                                              const std::optional<McOptions>& monte_carlo) {
  std::vector<ComparisonRow> rows;
  for (const MechanismHandle& handle : mechanisms) {
    const auto mech = make_mechanism(handle, &network);
    ComparisonRow row;
    row.mechanism = handle;
    if (monte_carlo) {
      row.estimate = mc_efficiency(*mech, network, q, *monte_carlo);
      row.value = row.estimate->mean;
    } else {
      row.value = exact_efficiency(*mech, network, NeedyPrior(q));
    }
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ComparisonRow& a, const ComparisonRow& b) { return a.value > b.value; });
  for (std::size_t k = 0; k < rows.size(); ++k) {
    rows[k].rank = k > 0 && rows[k].value == rows[k - 1].value ? rows[k - 1].rank
                                                               : static_cast<int>(k) + 1;
  }
  return rows;
}

}  // namespace peersel
