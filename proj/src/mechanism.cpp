// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "peersel/mechanism.hpp"

#include <limits>
#include <numeric>

#include "peersel/known_net_mechanisms.hpp"
#include "peersel/unknown_net_mechanisms.hpp"

namespace peersel {

namespace detail {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    fail(ErrorCode::Budget, "common denominator exceeds 64 bits");
  }
  return out;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return a == 0 ? b : a;
  return checked_mul(a / std::gcd(a, b), b);
}

void require_mode(const MessageProfile& profile, MessageMode mode, std::string_view who) {
  if (profile.mode() != mode) {
    fail(ErrorCode::Domain, std::string(who) + " expects a " + std::string(to_string(mode)) +
                                " profile, got " + std::string(to_string(profile.mode())));
  }
}

}  // namespace detail

std::int64_t ScaledLottery::numerator_mass(AgentSet set) const {
  std::int64_t sum = 0;
  for (AgentId i : set) {
    if (i < size()) sum += numerators[i];
  }
  return sum;
}

SelectionDistribution ScaledLottery::to_distribution() const {
  std::vector<Rational> probs;
  probs.reserve(numerators.size());
  for (std::int64_t num : numerators) probs.emplace_back(num, denominator);
  return SelectionDistribution(std::move(probs));
}

ScaledLottery ScaledLottery::from_distribution(const SelectionDistribution& dist) {
  return from_rationals(dist.probabilities());
}

ScaledLottery ScaledLottery::from_rationals(std::span<const Rational> probs) {
  namespace mp = boost::multiprecision;
  using mp::mpz_int;
  mpz_int common = 1;
  for (const Rational& p : probs) {
    common = mp::lcm(common, mpz_int(mp::denominator(p)));
  }
  const mpz_int limit = std::numeric_limits<std::int64_t>::max();
  if (common > limit) fail(ErrorCode::Budget, "common denominator exceeds 64 bits");
  ScaledLottery out;
  out.denominator = common.convert_to<std::int64_t>();
  for (const Rational& p : probs) {
    mpz_int num = mp::numerator(p) * (common / mp::denominator(p));
    if (mp::abs(num) > limit) fail(ErrorCode::Budget, "numerator exceeds 64 bits");
    out.numerators.push_back(num.convert_to<std::int64_t>());
  }
  return out;
}

std::string MechanismHandle::name() const {
  switch (id) {
    case MechanismId::G1: return "g1";
    case MechanismId::G2K: return "g2k(" + std::to_string(sink.value_or(-1)) + ")";
    case MechanismId::G3K: return "g3k(" + std::to_string(sink.value_or(-1)) + ")";
    case MechanismId::RandomDictatorship: return "rd";
    case MechanismId::Duples: return "duples";
    case MechanismId::Constant: return "constant";
    case MechanismId::External: return "external";
  }
  return "unknown";
}

bool MechanismHandle::needs_network() const {
  return id == MechanismId::G1 || id == MechanismId::G2K || id == MechanismId::G3K;
}

MechanismHandle parse_mechanism(std::string_view name, std::optional<AgentId> sink) {
  MechanismHandle handle;
  if (name == "g1") {
    handle = MechanismHandle::g1();
  } else if (name == "g2k" || name == "g3k") {
    if (!sink) fail(ErrorCode::InvalidArgument, std::string(name) + " needs a sink");
    handle = name == "g2k" ? MechanismHandle::g2k(*sink) : MechanismHandle::g3k(*sink);
    return handle;
  } else if (name == "rd") {
    handle = MechanismHandle::random_dictatorship();
  } else if (name == "duples") {
    handle = MechanismHandle::duples();
  } else if (name == "constant") {
    handle = MechanismHandle::constant();
  } else {
    fail(ErrorCode::InvalidArgument, "unknown mechanism '" + std::string(name) + "'");
  }
  if (sink) fail(ErrorCode::InvalidArgument, std::string(name) + " takes no sink");
  return handle;
}

namespace {

class BuiltinMechanism final : public Mechanism {
 public:
  BuiltinMechanism(MechanismHandle handle, std::optional<RelationNetwork> network)
      : handle_(handle), network_(std::move(network)) {}

  MessageMode mode() const override { return handle_.mode; }
  std::string name() const override { return handle_.name(); }

  ScaledLottery evaluate(const MessageProfile& profile) const override {
    switch (handle_.id) {
      case MechanismId::G1: return impartial_vote_lottery(*network_, profile);
      case MechanismId::G2K:
        return sink_vote_lottery(*network_, VoteRelation::EnemyOf, *handle_.sink, profile);
      case MechanismId::G3K:
        return sink_vote_lottery(*network_, VoteRelation::FriendOf, *handle_.sink, profile);
      case MechanismId::RandomDictatorship: return random_dictatorship_lottery(profile);
      case MechanismId::Duples: return duples_lottery(profile);
      case MechanismId::Constant: return constant_lottery(profile.size());
      case MechanismId::External: break;
    }
    fail(ErrorCode::InvalidArgument, "external mechanisms need a callback");
  }

 private:
  MechanismHandle handle_;
  std::optional<RelationNetwork> network_;
};

}  // namespace

std::unique_ptr<Mechanism> make_mechanism(const MechanismHandle& handle,
                                          const RelationNetwork* network) {
  if (handle.id == MechanismId::External) {
    fail(ErrorCode::InvalidArgument, "external mechanisms are built with ExternalMechanism");
  }
  const bool has_sink = handle.id == MechanismId::G2K || handle.id == MechanismId::G3K;
  if (has_sink != handle.sink.has_value()) {
    fail(ErrorCode::InvalidArgument, "sink must be given exactly for g2k and g3k");
  }
  if (handle.needs_network()) {
    if (network == nullptr) {
      fail(ErrorCode::InvalidArgument, handle.name() + " needs the relation network");
    }
    if (handle.mode != MessageMode::NeedyOnly) {
      fail(ErrorCode::InvalidArgument, handle.name() + " runs on needy-only messages");
    }
    if (has_sink && (*handle.sink < 0 || *handle.sink >= network->size())) {
      fail(ErrorCode::InvalidArgument, "sink out of range");
    }
    return std::make_unique<BuiltinMechanism>(handle, *network);
  }
  if ((handle.id == MechanismId::RandomDictatorship || handle.id == MechanismId::Duples) &&
      handle.mode != MessageMode::FullType) {
    fail(ErrorCode::InvalidArgument, handle.name() + " runs on full-type messages");
  }
  return std::make_unique<BuiltinMechanism>(handle, std::nullopt);
}

ScaledLottery ExternalMechanism::evaluate(const MessageProfile& profile) const {
  detail::require_mode(profile, mode_, name_);
  const std::vector<Rational> probs = fn_(profile);
  if (static_cast<int>(probs.size()) != profile.size()) {
    fail(ErrorCode::Domain, name_ + " returned a vector of the wrong length");
  }
  return ScaledLottery::from_rationals(probs);
}

}  // namespace peersel
