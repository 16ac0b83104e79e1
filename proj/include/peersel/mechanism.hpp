// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PEERSEL_MECHANISM_HPP
#define PEERSEL_MECHANISM_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "peersel/core_model.hpp"

namespace peersel {

/// Exact selection probabilities over one common integer denominator.
///
/// All built-in mechanisms produce probabilities whose denominators divide a
/// small integer, so sweeps compare outcomes with machine integers instead of
/// arbitrary-precision rationals. Conversion to and from
/// SelectionDistribution is lossless; from_distribution throws Error(Budget)
/// when the common denominator does not fit in 64 bits.
struct ScaledLottery {
  std::int64_t denominator = 1;
  std::vector<std::int64_t> numerators;

  int size() const { return static_cast<int>(numerators.size()); }
  std::int64_t numerator_mass(AgentSet set) const;
  Rational probability(AgentId i) const { return Rational(numerators[i], denominator); }
  Rational mass_on(AgentSet set) const { return Rational(numerator_mass(set), denominator); }

  SelectionDistribution to_distribution() const;
  static ScaledLottery from_distribution(const SelectionDistribution& dist);
  /// Like from_distribution but without the validity check, so invalid
  /// outcome vectors survive to be reported by the validity checker.
  static ScaledLottery from_rationals(std::span<const Rational> probs);
};

enum class MechanismId { G1, G2K, G3K, RandomDictatorship, Duples, Constant, External };

struct MechanismHandle {
  MechanismId id = MechanismId::Constant;
  std::optional<AgentId> sink;  // present iff G2K / G3K
  MessageMode mode = MessageMode::FullType;

  static MechanismHandle g1() { return {MechanismId::G1, std::nullopt, MessageMode::NeedyOnly}; }
  static MechanismHandle g2k(AgentId k) { return {MechanismId::G2K, k, MessageMode::NeedyOnly}; }
  static MechanismHandle g3k(AgentId k) { return {MechanismId::G3K, k, MessageMode::NeedyOnly}; }
  static MechanismHandle random_dictatorship() {
    return {MechanismId::RandomDictatorship, std::nullopt, MessageMode::FullType};
  }
  static MechanismHandle duples() {
    return {MechanismId::Duples, std::nullopt, MessageMode::FullType};
  }
  static MechanismHandle constant(MessageMode mode = MessageMode::FullType) {
    return {MechanismId::Constant, std::nullopt, mode};
  }

  /// "g1", "g2k(3)", "rd", "duples", "constant", "external".
  std::string name() const;
  bool needs_network() const;
};

/// Parses a mechanism name as used on the command line: g1, g2k, g3k, rd,
/// duples, constant. The sink is required for g2k/g3k and rejected otherwise.
MechanismHandle parse_mechanism(std::string_view name, std::optional<AgentId> sink);

class Mechanism {
 public:
  virtual ~Mechanism() = default;

  virtual MessageMode mode() const = 0;
  virtual std::string name() const = 0;
  /// Throws Error(Domain) when the profile mode or size does not fit.
  virtual ScaledLottery evaluate(const MessageProfile& profile) const = 0;
  /// Whether evaluate may run on several threads at once.
  virtual bool concurrent() const { return true; }

  SelectionDistribution select(const MessageProfile& profile) const {
    return evaluate(profile).to_distribution();
  }
};

/// Binds a handle to a network. Known-network mechanisms copy the network;
/// `network` may be null for the unknown-network ones.
std::unique_ptr<Mechanism> make_mechanism(const MechanismHandle& handle,
                                          const RelationNetwork* network);

/// A caller-supplied outcome function. Its output is not validated here.
class ExternalMechanism final : public Mechanism {
 public:
  using Function = std::function<std::vector<Rational>(const MessageProfile&)>;

  ExternalMechanism(MessageMode mode, std::string name, Function fn, bool concurrent = false)
      : mode_(mode), name_(std::move(name)), fn_(std::move(fn)), concurrent_(concurrent) {}

  MessageMode mode() const override { return mode_; }
  std::string name() const override { return name_; }
  ScaledLottery evaluate(const MessageProfile& profile) const override;
  bool concurrent() const override { return concurrent_; }

 private:
  MessageMode mode_;
  std::string name_;
  Function fn_;
  bool concurrent_;
};

namespace detail {
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
void require_mode(const MessageProfile& profile, MessageMode mode, std::string_view who);
}  // namespace detail

}  // namespace peersel

#endif  // PEERSEL_MECHANISM_HPP
