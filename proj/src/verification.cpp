// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "peersel/verification.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "parallel.hpp"
#include "peersel/instance_io.hpp"
#include "random.hpp"

namespace peersel {

namespace {

using i128 = __int128;

// Deviation scans compare integer cross products; beyond this magnitude they
// fall back to exact rationals.
constexpr std::int64_t kNarrowLimit = std::int64_t{1} << 50;
constexpr std::uint64_t kMaxDeviations = std::uint64_t{1} << 20;

std::optional<std::uint64_t> bounded_power(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int k = 0; k < exp; ++k) {
    if (base != 0 && v > cap / base) return std::nullopt;
    v *= base;
  }
  return v;
}

Rational to_rational(i128 v) {
  const bool negative = v < 0;
  const unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v)
                                         : static_cast<unsigned __int128>(v);
  boost::multiprecision::mpz_int z = static_cast<std::uint64_t>(mag >> 64);
  z <<= 64;
  z += static_cast<std::uint64_t>(mag);
  return Rational(negative ? boost::multiprecision::mpz_int(-z) : z);
}

// Every message of every agent, plus profile assembly from message indices.
struct Lattice {
  MessageMode mode;
  int n;
  std::uint64_t m;
  std::vector<std::vector<FullTypeMessage>> messages;

  Lattice(MessageMode mode_, int n_) : mode(mode_), n(n_) {
    m = MessageSpace(mode, n, 0).size();
    if (m > kMaxDeviations) {
      fail(ErrorCode::Budget, "per-agent message space of " + std::to_string(m) +
                                  " exceeds the enumeration budget");
    }
    messages.resize(n);
    for (AgentId a = 0; a < n; ++a) {
      const MessageSpace space(mode, n, a);
      messages[a].reserve(m);
      for (std::uint64_t k = 0; k < m; ++k) messages[a].push_back(space.message(k));
    }
  }

  MessageProfile profile(std::span<const std::uint64_t> digits) const {
    if (mode == MessageMode::NeedyOnly) {
      std::vector<AgentSet> needy(n);
      for (AgentId a = 0; a < n; ++a) needy[a] = messages[a][digits[a]].reported_needy;
      return MessageProfile::needy_only(needy, n);
    }
    std::vector<FullTypeMessage> msgs(n);
    for (AgentId a = 0; a < n; ++a) msgs[a] = messages[a][digits[a]];
    return MessageProfile::full_type(std::move(msgs));
  }
};

ScaledLottery evaluate_checked(const Mechanism& mech, const MessageProfile& profile) {
  ScaledLottery lot = mech.evaluate(profile);
  if (lot.size() != profile.size() || lot.denominator <= 0) {
    fail(ErrorCode::Domain, mech.name() + " returned a malformed outcome");
  }
  return lot;
}

// Outcomes of all messages of one agent against fixed opponents.
struct Batch {
  int n = 0;
  std::vector<std::int64_t> den;
  std::vector<std::int64_t> num;  // m × n
  bool wide = false;
  std::vector<i128> friend_sum;
  std::vector<i128> enemy_sum;

  std::int64_t at(std::uint64_t d, AgentId a) const { return num[d * n + a]; }

  void fill(const Mechanism& mech, const Lattice& lat, MessageProfile& profile, AgentId i) {
    n = lat.n;
    den.resize(lat.m);
    num.resize(lat.m * n);
    wide = false;
    for (std::uint64_t d = 0; d < lat.m; ++d) {
      profile.set_message(lat.messages[i][d]);
      const ScaledLottery lot = evaluate_checked(mech, profile);
      den[d] = lot.denominator;
      wide = wide || lot.denominator >= kNarrowLimit;
      for (AgentId a = 0; a < n; ++a) {
        const std::int64_t v = lot.numerators[a];
        num[d * n + a] = v;
        wide = wide || v >= kNarrowLimit || v <= -kNarrowLimit;
      }
    }
  }

  void relation_sums(AgentSet friends, AgentSet enemies) {
    if (wide) return;
    friend_sum.assign(den.size(), 0);
    enemy_sum.assign(den.size(), 0);
    for (std::uint64_t d = 0; d < den.size(); ++d) {
      for (AgentId j : friends) friend_sum[d] += at(d, j);
      for (AgentId j : enemies) enemy_sum[d] += at(d, j);
    }
  }

  Rational probability(std::uint64_t d, AgentId a) const { return Rational(at(d, a), den[d]); }

  DeviationDelta delta(AgentId i, std::uint64_t t, std::uint64_t d, AgentSet friends,
                       AgentSet enemies) const {
    DeviationDelta out;
    out.own = probability(d, i) - probability(t, i);
    for (AgentId j : friends) out.friend_sum += probability(d, j) - probability(t, j);
    for (AgentId j : enemies) out.enemy_sum += probability(d, j) - probability(t, j);
    return out;
  }

  // Requires relation_sums for the truth's relation sets.
  bool improves(AgentId i, std::uint64_t t, std::uint64_t d, AgentSet friends, AgentSet enemies,
                const std::optional<PreferenceWeights>& weights) const {
    if (wide) {
      const DeviationDelta dd = delta(i, t, d, friends, enemies);
      return weights ? weighted_improvement(dd, *weights) : robust_improvement(dd);
    }
    const i128 own = static_cast<i128>(at(d, i)) * den[t] - static_cast<i128>(at(t, i)) * den[d];
    if (own != 0) return own > 0;
    const i128 fd = friend_sum[d] * den[t] - friend_sum[t] * den[d];
    const i128 ed = enemy_sum[d] * den[t] - enemy_sum[t] * den[d];
    if (!weights || (fd >= 0 && ed <= 0) || (fd <= 0 && ed >= 0)) return fd > 0 || ed < 0;
    return weights->friend_weight() * to_rational(fd) - weights->enemy_weight() * to_rational(ed) >
           0;
  }
};

struct Hit {
  std::uint64_t profile_index;
  AgentId agent;
  std::uint64_t deviation;
  std::vector<std::uint64_t> digits;  // base profile

  bool operator<(const Hit& o) const {
    return std::tie(profile_index, agent, deviation) <
           std::tie(o.profile_index, o.agent, o.deviation);
  }
};

struct ScanTally {
  std::uint64_t deviations = 0;
  std::uint64_t violations = 0;
  std::vector<Hit> hits;

  void record(Hit hit, std::size_t keep) {
    ++violations;
    if (keep == 0) return;
    hits.push_back(std::move(hit));
    if (hits.size() > 4 * keep) trim(keep);
  }
  void trim(std::size_t keep) {
    std::sort(hits.begin(), hits.end());
    if (hits.size() > keep) hits.resize(keep);
  }
};

struct RelationPair {
  AgentSet friends;
  AgentSet enemies;
};

RelationPair true_relations(const Lattice& lat, const RelationNetwork& network, AgentId i,
                            std::uint64_t truth) {
  if (lat.mode == MessageMode::NeedyOnly) return {network.friends(i), network.enemies(i)};
  const FullTypeMessage& m = lat.messages[i][truth];
  return {m.reported_friends, m.reported_enemies};
}

}  // namespace

// ---- MessageSpace --------------------------------------------------------

MessageSpace::MessageSpace(MessageMode mode, int n, AgentId agent)
    : mode_(mode), n_(n), agent_(agent), size_(0) {
  if (n < 1 || n > kMaxAgents) fail(ErrorCode::InvalidArgument, "n must lie in [1, 64]");
  if (agent < 0 || agent >= n) fail(ErrorCode::InvalidArgument, "agent out of range");
  if (n > 60) fail(ErrorCode::Budget, "message space too large to index");
  const std::uint64_t needy = std::uint64_t{1} << n;
  if (mode == MessageMode::NeedyOnly) {
    size_ = needy;
    return;
  }
  const auto codes = bounded_power(3, n - 1, (std::uint64_t{1} << 62) >> n);
  if (!codes) fail(ErrorCode::Budget, "message space too large to index");
  size_ = *codes << n;
}

FullTypeMessage MessageSpace::message(std::uint64_t index) const {
  if (index >= size_) fail(ErrorCode::InvalidArgument, "message index out of range");
  FullTypeMessage m;
  m.reporter = agent_;
  m.reported_needy = AgentSet(index & ((std::uint64_t{1} << n_) - 1));
  std::uint64_t code = index >> n_;
  for (AgentId a = 0; a < n_ && code != 0; ++a) {
    if (a == agent_) continue;
    const std::uint64_t digit = code % 3;
    code /= 3;
    if (digit == 1) m.reported_friends.insert(a);
    if (digit == 2) m.reported_enemies.insert(a);
  }
  return m;
}

std::uint64_t MessageSpace::index_of(const FullTypeMessage& msg) const {
  const AgentSet everyone = AgentSet::all(n_);
  if (msg.reporter != agent_ || !msg.reported_needy.subset_of(everyone) ||
      !(msg.reported_friends | msg.reported_enemies).subset_of(everyone - AgentSet::single(agent_)) ||
      !(msg.reported_friends & msg.reported_enemies).empty()) {
    fail(ErrorCode::InvalidArgument, "message does not belong to this space");
  }
  if (mode_ == MessageMode::NeedyOnly &&
      !(msg.reported_friends.empty() && msg.reported_enemies.empty())) {
    fail(ErrorCode::InvalidArgument, "needy-only messages carry no relation sets");
  }
  std::uint64_t code = 0;
  std::uint64_t place = 1;
  for (AgentId a = 0; a < n_; ++a) {
    if (a == agent_) continue;
    if (msg.reported_friends.contains(a)) code += place;
    if (msg.reported_enemies.contains(a)) code += 2 * place;
    place *= 3;
  }
  return (code << n_) | msg.reported_needy.bits();
}

// ---- validity ------------------------------------------------------------

namespace {

// Returns Σ numerators, or nullopt when some entry is outside [0, den].
std::optional<i128> valid_sum(const ScaledLottery& lot) {
  i128 sum = 0;
  for (std::int64_t v : lot.numerators) {
    if (v < 0 || v > lot.denominator) return std::nullopt;
    sum += v;
  }
  return sum;
}

Rational lottery_total(const ScaledLottery& lot) {
  Rational sum = 0;
  for (std::int64_t v : lot.numerators) sum += Rational(v, lot.denominator);
  return sum;
}

}  // namespace

ValidityVerdict check_validity(const Mechanism& mechanism,
                               std::span<const MessageProfile> profiles) {
  ValidityVerdict verdict;
  for (const MessageProfile& profile : profiles) {
    const ScaledLottery lot = evaluate_checked(mechanism, profile);
    ++verdict.checked;
    const auto sum = valid_sum(lot);
    const Rational total = lottery_total(lot);
    if (!sum || *sum > lot.denominator) {
      verdict.valid = false;
      verdict.counterexample = profile;
      verdict.total = total;
      return verdict;
    }
    if (verdict.checked == 1 || total > verdict.total) verdict.total = total;
  }
  return verdict;
}

ValidityVerdict check_validity_exhaustive(const Mechanism& mechanism, int n,
                                          std::uint64_t budget) {
  const Lattice lat(mechanism.mode(), n);
  const auto total = bounded_power(lat.m, n, budget);
  if (!total) {
    fail(ErrorCode::Budget, "exhaustive validity sweep exceeds the profile budget");
  }
  const std::uint64_t profiles = *total;
  const std::uint64_t block = std::max<std::uint64_t>(1, profiles / 256);
  const std::size_t chunks = (profiles + block - 1) / block;

  struct Part {
    std::optional<std::uint64_t> first_bad;
    Rational bad_total = 0;
    Rational max_total = 0;
  };
  std::vector<Part> parts(chunks);
  detail::for_each_chunk(
      chunks,
      [&](std::size_t c) {
        Part& part = parts[c];
        std::vector<std::uint64_t> digits(n);
        const std::uint64_t end = std::min(profiles, (c + 1) * block);
        for (std::uint64_t r = c * block; r < end; ++r) {
          std::uint64_t rest = r;
          for (AgentId a = 0; a < n; ++a) {
            digits[a] = rest % lat.m;
            rest /= lat.m;
          }
          const ScaledLottery lot = evaluate_checked(mechanism, lat.profile(digits));
          const auto sum = valid_sum(lot);
          const Rational t = lottery_total(lot);
          if (!sum || *sum > lot.denominator) {
            part.first_bad = r;
            part.bad_total = t;
            return;
          }
          if (t > part.max_total) part.max_total = t;
        }
      },
      mechanism.concurrent() ? 0 : 1);

  ValidityVerdict verdict;
  verdict.checked = profiles;
  for (const Part& part : parts) {
    if (part.first_bad) {
      std::vector<std::uint64_t> digits(n);
      std::uint64_t rest = *part.first_bad;
      for (AgentId a = 0; a < n; ++a) {
        digits[a] = rest % lat.m;
        rest /= lat.m;
      }
      verdict.valid = false;
      verdict.checked = *part.first_bad + 1;
      verdict.counterexample = lat.profile(digits);
      verdict.total = part.bad_total;
      return verdict;
    }
    if (part.max_total > verdict.total) verdict.total = part.max_total;
  }
  return verdict;
}

// ---- DSIC ----------------------------------------------------------------

DsicReport check_dsic(const Mechanism& mechanism, const RelationNetwork& network,
                      const DsicOptions& options) {
  const int n = network.size();
  const Lattice lat(mechanism.mode(), n);
  const std::uint64_t m = lat.m;
  const std::uint64_t needy_count = std::uint64_t{1} << n;
  const std::size_t keep = options.max_recorded;
  const int workers = mechanism.concurrent() ? 0 : 1;

  DsicReport report;
  report.exhaustive = options.exhaustive;
  std::vector<ScanTally> tallies;

  // Scan of one batch against truths [t_begin, t_end), which must share
  // their relation sets.
  auto scan_truths = [&](Batch& batch, AgentId i, std::uint64_t t_begin, std::uint64_t t_end,
                         auto&& index_of_truth, auto&& digits_of_truth, ScanTally& tally) {
    for (std::uint64_t t = t_begin; t < t_end; ++t) {
      const RelationPair rel = true_relations(lat, network, i, t);
      if (t == t_begin) batch.relation_sums(rel.friends, rel.enemies);
      for (std::uint64_t d = 0; d < m; ++d) {
        if (d == t) continue;
        ++tally.deviations;
        if (batch.improves(i, t, d, rel.friends, rel.enemies, options.weights)) {
          tally.record({index_of_truth(t), i, d, digits_of_truth(t)}, keep);
        }
      }
    }
  };
  // Truths in [begin, end) that share relation sets: all of them in
  // NeedyOnly mode, one relation code (2ⁿ consecutive indices) in FullType.
  const std::uint64_t group = lat.mode == MessageMode::NeedyOnly ? m : needy_count;

  if (options.exhaustive) {
    const auto total = bounded_power(m, n, options.budget);
    if (!total) {
      fail(ErrorCode::Budget, "exhaustive DSIC check needs " + std::to_string(m) + "^" +
                                  std::to_string(n) + " base profiles, over the budget of " +
                                  std::to_string(options.budget));
    }
    report.checked_profiles = *total;
    std::vector<std::uint64_t> place(n, 1);
    for (AgentId a = 1; a < n; ++a) place[a] = place[a - 1] * m;
    const std::uint64_t opponents = *total / m;
    const std::uint64_t block = std::max<std::uint64_t>(1, opponents / 64);
    const std::uint64_t blocks = (opponents + block - 1) / block;
    tallies.resize(n * blocks);
    detail::for_each_chunk(
        tallies.size(),
        [&](std::size_t c) {
          const AgentId i = static_cast<AgentId>(c / blocks);
          const std::uint64_t b = c % blocks;
          ScanTally& tally = tallies[c];
          Batch batch;
          std::vector<std::uint64_t> digits(n, 0);
          const std::uint64_t end = std::min(opponents, (b + 1) * block);
          for (std::uint64_t s = b * block; s < end; ++s) {
            std::uint64_t rest = s;
            std::uint64_t base = 0;
            for (AgentId a = 0; a < n; ++a) {
              if (a == i) continue;
              digits[a] = rest % m;
              rest /= m;
              base += digits[a] * place[a];
            }
            digits[i] = 0;
            MessageProfile profile = lat.profile(digits);
            batch.fill(mechanism, lat, profile, i);
            auto index_of = [&](std::uint64_t t) { return base + t * place[i]; };
            auto digits_of = [&](std::uint64_t t) {
              std::vector<std::uint64_t> out = digits;
              out[i] = t;
              return out;
            };
            for (std::uint64_t g = 0; g < m; g += group) {
              scan_truths(batch, i, g, g + group, index_of, digits_of, tally);
            }
          }
        },
        workers);
  } else {
    if (options.samples == 0) fail(ErrorCode::InvalidArgument, "samples must be >= 1");
    report.checked_profiles = options.samples;
    std::vector<std::uint64_t> drawn(options.samples * n);
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t& x : drawn) x = detail::bounded(rng, m);
    const std::uint64_t block = std::max<std::uint64_t>(1, options.samples / 256);
    const std::uint64_t blocks = (options.samples + block - 1) / block;
    tallies.resize(blocks);
    detail::for_each_chunk(
        blocks,
        [&](std::size_t c) {
          ScanTally& tally = tallies[c];
          Batch batch;
          const std::uint64_t end = std::min(options.samples, (c + 1) * block);
          for (std::uint64_t k = c * block; k < end; ++k) {
            const std::span<const std::uint64_t> digits(drawn.data() + k * n, n);
            for (AgentId i = 0; i < n; ++i) {
              MessageProfile profile = lat.profile(digits);
              batch.fill(mechanism, lat, profile, i);
              auto index_of = [&](std::uint64_t) { return k; };
              auto digits_of = [&](std::uint64_t) {
                return std::vector<std::uint64_t>(digits.begin(), digits.end());
              };
              scan_truths(batch, i, digits[i], digits[i] + 1, index_of, digits_of, tally);
            }
          }
        },
        workers);
  }

  ScanTally merged;
  for (ScanTally& t : tallies) {
    merged.deviations += t.deviations;
    merged.violations += t.violations;
    for (Hit& h : t.hits) merged.hits.push_back(std::move(h));
  }
  merged.trim(keep);
  report.checked_deviations = merged.deviations;
  report.violation_count = merged.violations;

  // Re-derive every recorded violation from scratch with exact rationals.
  for (const Hit& hit : merged.hits) {
    MessageProfile profile = lat.profile(hit.digits);
    const ScaledLottery truth = evaluate_checked(mechanism, profile);
    MessageProfile deviated = profile;
    deviated.set_message(lat.messages[hit.agent][hit.deviation]);
    const ScaledLottery dev = evaluate_checked(mechanism, deviated);
    const RelationPair rel = true_relations(lat, network, hit.agent, hit.digits[hit.agent]);
    DeviationDelta delta;
    delta.own = dev.probability(hit.agent) - truth.probability(hit.agent);
    delta.friend_sum = dev.mass_on(rel.friends) - truth.mass_on(rel.friends);
    delta.enemy_sum = dev.mass_on(rel.enemies) - truth.mass_on(rel.enemies);
    const bool confirmed = options.weights ? weighted_improvement(delta, *options.weights)
                                           : robust_improvement(delta);
    if (!confirmed) fail(ErrorCode::Domain, "deviation scan disagrees with the exact re-check");
    report.violations.push_back({hit.profile_index, std::move(profile), hit.agent,
                                 lat.messages[hit.agent][hit.deviation], std::move(delta)});
  }
  return report;
}

// ---- efficiency ----------------------------------------------------------

EfficiencyVerdict check_efficiency(const Mechanism& mechanism, const RelationNetwork& network) {
  const int n = network.size();
  if (n > 20) fail(ErrorCode::Budget, "efficiency check enumerates 2^n needy sets; n <= 20");
  const std::uint64_t sets = std::uint64_t{1} << n;
  const std::uint64_t block = std::max<std::uint64_t>(1, sets / 256);
  const std::size_t chunks = (sets + block - 1) / block;
  struct Part {
    std::optional<std::uint64_t> first_bad;
    Rational mass = 0;
  };
  std::vector<Part> parts(chunks);
  detail::for_each_chunk(
      chunks,
      [&](std::size_t c) {
        const std::uint64_t end = std::min(sets, (c + 1) * block);
        for (std::uint64_t mask = std::max<std::uint64_t>(1, c * block); mask < end; ++mask) {
          const AgentSet needy(mask);
          const ScaledLottery lot =
              evaluate_checked(mechanism, truthful_profile({network, needy}, mechanism.mode()));
          if (lot.numerator_mass(needy) != lot.denominator) {
            parts[c].first_bad = mask;
            parts[c].mass = lot.mass_on(needy);
            return;
          }
        }
      },
      mechanism.concurrent() ? 0 : 1);

  EfficiencyVerdict verdict;
  verdict.checked = sets - 1;
  for (const Part& part : parts) {
    if (part.first_bad) {
      verdict.efficient = false;
      verdict.checked = *part.first_bad;
      verdict.counterexample = AgentSet(*part.first_bad);
      verdict.needy_mass = part.mass;
      break;
    }
  }
  return verdict;
}

// ---- impossibility witnesses ---------------------------------------------

namespace {
constexpr int kMaxLatticeAgents = 6;
}

TwoStateConstruction enemy_block_construction(int n) {
  if (n < 4) fail(ErrorCode::InvalidArgument, "the enemy-block construction needs n >= 4");
  if (n > kMaxLatticeAgents) fail(ErrorCode::Budget, "profile lattice limited to n <= 6");
  return {enemy_block_state(n, StateSide::Left), enemy_block_state(n, StateSide::Right)};
}

TwoStateConstruction four_clique_construction(const std::array<int, 4>& sizes) {
  if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s < 1; })) {
    fail(ErrorCode::InvalidArgument, "all four clique sizes must be >= 1");
  }
  const int n = sizes[0] + sizes[1] + sizes[2] + sizes[3];
  if (n > kMaxLatticeAgents) fail(ErrorCode::Budget, "profile lattice limited to n <= 6");
  const RelationNetwork net = four_clique_network(sizes);
  return {{net, AgentSet::single(0)}, {net, AgentSet::single(n - 1)}};
}

LinearSystem build_lattice_system(const TwoStateConstruction& construction,
                                  const WitnessOptions& options) {
  const int n = construction.left.network.size();
  if (construction.right.network.size() != n) {
    fail(ErrorCode::InvalidArgument, "both states must have the same agents");
  }
  if (n > kMaxLatticeAgents) fail(ErrorCode::Budget, "profile lattice limited to n <= 6");
  const int profiles = 1 << n;
  auto var = [n](int p, AgentId i) { return p * n + i; };
  LinearSystem system(profiles * n);

  for (int p = 0; p < profiles; ++p) {
    LinearConstraint row{{}, ConstraintSense::LessEqual, 1, "valid:" + std::to_string(p)};
    for (AgentId i = 0; i < n; ++i) row.terms.emplace_back(var(p, i), 1);
    system.add(std::move(row));
  }
  auto efficiency = [&](int p, AgentSet needy, const char* label) {
    LinearConstraint row{{}, ConstraintSense::Equal, 1, label};
    for (AgentId i : needy) row.terms.emplace_back(var(p, i), 1);
    system.add(std::move(row));
  };
  efficiency(0, construction.left.needy, "efficiency:left");
  if (!options.drop_right_efficiency) {
    efficiency(profiles - 1, construction.right.needy, "efficiency:right");
  }

  for (AgentId a = 0; a < n; ++a) {
    const int bit = 1 << a;
    for (int others = 0; others < profiles; ++others) {
      if (others & bit) continue;
      for (int side = 0; side < 2; ++side) {
        const WorldState& state = side == 0 ? construction.left : construction.right;
        const int truth = side == 0 ? others : others | bit;
        const int lie = side == 0 ? others | bit : others;
        const std::string tag = ":agent=" + std::to_string(a) + ":others=" +
                                std::to_string(others) + (side == 0 ? ":left" : ":right");
        // Σ coef·(g(lie) − g(truth)) ≤ 0
        auto shift_row = [&](const std::string& what, std::vector<std::pair<AgentId, Rational>> w) {
          LinearConstraint row{{}, ConstraintSense::LessEqual, 0, "dsic:" + what + tag};
          for (auto& [j, c] : w) {
            row.terms.emplace_back(var(lie, j), c);
            row.terms.emplace_back(var(truth, j), -c);
          }
          if (!row.terms.empty()) system.add(std::move(row));
        };
        shift_row("own", {{a, 1}});
        const AgentSet friends = state.network.friends(a);
        const AgentSet enemies = state.network.enemies(a);
        if (options.weights) {
          std::vector<std::pair<AgentId, Rational>> w;
          for (AgentId j : friends) w.emplace_back(j, options.weights->friend_weight());
          for (AgentId j : enemies) w.emplace_back(j, -options.weights->enemy_weight());
          shift_row("weighted", std::move(w));
        } else {
          std::vector<std::pair<AgentId, Rational>> f;
          std::vector<std::pair<AgentId, Rational>> e;
          for (AgentId j : friends) f.emplace_back(j, 1);
          for (AgentId j : enemies) e.emplace_back(j, -1);
          shift_row("friends", std::move(f));
          shift_row("enemies", std::move(e));
        }
      }
    }
  }
  return system;
}

LpWitness impossibility_witness(const TwoStateConstruction& construction,
                                const WitnessOptions& options) {
  LpWitness out;
  out.system = build_lattice_system(construction, options);
  out.agents = construction.left.network.size();
  out.variables = out.system.variables();
  out.constraints = static_cast<int>(out.system.constraints().size());
  LpResult result = solve_feasibility(out.system);
  out.status = result.status;
  if (result.status == LpStatus::Feasible) {
    out.point = std::move(result.point);
    out.verified = verify_point(out.system, out.point);
  } else {
    out.certificate = std::move(result.certificate);
    out.verified = verify_certificate(out.system, out.certificate, &out.combined_rhs);
  }
  return out;
}

}  // namespace peersel
