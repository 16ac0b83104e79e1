// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "peersel/peersel.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "peersel/balance_analysis.hpp"
#include "peersel/efficiency_analysis.hpp"
#include "peersel/instance_io.hpp"
#include "peersel/reports.hpp"
#include "peersel/verification.hpp"

struct peersel_instance {
  peersel::InstanceFile file;
};

struct peersel_mechanism {
  std::unique_ptr<peersel::Mechanism> impl;
  std::string label;
};

namespace {

using namespace peersel;

thread_local std::string g_last_error;

peersel_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return PEERSEL_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return PEERSEL_ERR_PARSE;
    case ErrorCode::Domain: return PEERSEL_ERR_DOMAIN;
    case ErrorCode::Budget: return PEERSEL_ERR_BUDGET;
  }
  return PEERSEL_ERR_INTERNAL;
}

template <class Fn>
peersel_status guard(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return PEERSEL_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return PEERSEL_ERR_INTERNAL;
}

void require(const void* pointer, const char* what) {
  if (pointer == nullptr) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void emit(char** out, const std::string& text) {
  if (out != nullptr) *out = duplicate(text);
}

ReportStyle style(int decimals) { return ReportStyle{decimals < 0 ? -1 : decimals}; }

AgentSet needy_set(const RelationNetwork& network, std::uint64_t mask) {
  const AgentSet needy(mask);
  if (!needy.subset_of(network.agents())) {
    fail(ErrorCode::InvalidArgument, "needy set mentions agents outside V");
  }
  return needy;
}

std::optional<PreferenceWeights> weights_of(const char* friend_weight, const char* enemy_weight) {
  if (friend_weight == nullptr && enemy_weight == nullptr) return std::nullopt;
  if (friend_weight == nullptr || enemy_weight == nullptr) {
    fail(ErrorCode::InvalidArgument, "give both preference weights or neither");
  }
  return PreferenceWeights(parse_rational(friend_weight), parse_rational(enemy_weight));
}

McOptions mc_options(const peersel_mc_options& o) {
  McOptions out;
  out.samples = o.samples;
  out.seed = o.seed;
  if (o.confidence != nullptr) out.confidence = parse_rational(o.confidence);
  out.interval = o.wilson ? IntervalKind::Wilson : IntervalKind::Normal;
  return out;
}

const Mechanism& mech(const peersel_mechanism* m) {
  require(m, "mechanism");
  return *m->impl;
}

const RelationNetwork& net(const peersel_instance* i) {
  require(i, "instance");
  return i->file.network;
}

}  // namespace

extern "C" {

const char* peersel_version(void) { return "0.1.0"; }

const char* peersel_last_error(void) { return g_last_error.c_str(); }

void peersel_string_free(char* text) { std::free(text); }

peersel_status peersel_instance_parse(const char* text, peersel_instance** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new peersel_instance{parse_instance(text)};
  });
}

peersel_status peersel_instance_read(const char* path, peersel_instance** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new peersel_instance{read_instance(path)};
  });
}

void peersel_instance_free(peersel_instance* instance) { delete instance; }

peersel_status peersel_instance_serialize(const peersel_instance* instance, char** out) {
  return guard([&] {
    require(instance, "instance");
    require(out, "out");
    *out = duplicate(serialize_instance(instance->file));
  });
}

int peersel_instance_size(const peersel_instance* instance) {
  return instance == nullptr ? 0 : instance->file.network.size();
}

peersel_status peersel_instance_needy(const peersel_instance* instance, int* present,
                                      uint64_t* mask) {
  return guard([&] {
    require(instance, "instance");
    require(present, "present");
    require(mask, "mask");
    *present = instance->file.needy.has_value();
    *mask = instance->file.needy ? instance->file.needy->bits() : 0;
  });
}

peersel_status peersel_instance_q(const peersel_instance* instance, char** out) {
  return guard([&] {
    require(instance, "instance");
    require(out, "out");
    *out = instance->file.q ? duplicate(to_string(*instance->file.q)) : nullptr;
  });
}

peersel_status peersel_instance_set_needy(peersel_instance* instance, int present,
                                          uint64_t mask) {
  return guard([&] {
    require(instance, "instance");
    if (present) {
      instance->file.needy = needy_set(instance->file.network, mask);
    } else {
      instance->file.needy.reset();
    }
  });
}

peersel_status peersel_instance_set_q(peersel_instance* instance, const char* q) {
  return guard([&] {
    require(instance, "instance");
    if (q == nullptr) {
      instance->file.q.reset();
    } else {
      instance->file.q = NeedyPrior(parse_rational(q)).value();
    }
  });
}

peersel_status peersel_generate(const peersel_generator* spec, peersel_instance** out) {
  return guard([&] {
    require(spec, "spec");
    require(spec->family, "family");
    require(out, "out");
    GeneratorSpec g;
    g.family = parse_family(spec->family);
    g.n = spec->n;
    if (spec->side != nullptr) {
      const std::string side = spec->side;
      if (side != "left" && side != "right") {
        fail(ErrorCode::InvalidArgument, "side must be left or right");
      }
      g.side = side == "left" ? StateSide::Left : StateSide::Right;
    }
    for (int c = 0; c < 4; ++c) g.clique_sizes[c] = spec->cliques[c];
    if (g.family == Family::RandomSigned) {
      require(spec->p_friend, "p_friend");
      require(spec->p_enemy, "p_enemy");
      g.p_friend = parse_rational(spec->p_friend);
      g.p_enemy = parse_rational(spec->p_enemy);
    }
    if (spec->sizes_count > 0) {
      require(spec->sizes, "sizes");
      g.balanced_sizes.assign(spec->sizes, spec->sizes + spec->sizes_count);
    }
    g.seed = spec->seed;
    WorldState state = generate(g);
    InstanceFile file{std::move(state.network), std::nullopt, std::nullopt};
    if (g.family == Family::EnemyBlock) file.needy = state.needy;
    *out = new peersel_instance{std::move(file)};
  });
}

peersel_status peersel_mechanism_create(const char* name, int sink, int mode,
                                        const peersel_instance* network,
                                        peersel_mechanism** out) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    MechanismHandle handle =
        parse_mechanism(name, sink < 0 ? std::nullopt : std::optional<AgentId>(sink));
    if (mode > 1) fail(ErrorCode::InvalidArgument, "mode must be -1, 0 or 1");
    if (mode >= 0) {
      const MessageMode wanted = mode == 0 ? MessageMode::NeedyOnly : MessageMode::FullType;
      if (handle.id == MechanismId::Constant) {
        handle.mode = wanted;
      } else if (handle.mode != wanted) {
        fail(ErrorCode::Domain, handle.name() + " runs on " +
                                    std::string(to_string(handle.mode)) + " messages");
      }
    }
    const RelationNetwork* graph = network == nullptr ? nullptr : &network->file.network;
    *out = new peersel_mechanism{make_mechanism(handle, graph), handle.name()};
  });
}

peersel_status peersel_mechanism_external(int full_type, const char* name,
                                          peersel_outcome_fn fn, void* user,
                                          peersel_mechanism** out) {
  return guard([&] {
    require(name, "name");
    require(reinterpret_cast<const void*>(fn), "callback");
    require(out, "out");
    const std::string label = name;
    auto call = [fn, user, label](const MessageProfile& profile) {
      const int n = profile.size();
      std::vector<peersel_message> msgs(n);
      for (AgentId a = 0; a < n; ++a) {
        const FullTypeMessage& m = profile.message(a);
        msgs[a] = {a, m.reported_friends.bits(), m.reported_enemies.bits(),
                   m.reported_needy.bits()};
      }
      std::vector<std::int64_t> nums(n, 0);
      std::vector<std::int64_t> dens(n, 1);
      if (fn(user, n, msgs.data(), nums.data(), dens.data()) != 0) {
        fail(ErrorCode::Domain, label + ": callback reported failure");
      }
      std::vector<Rational> probs;
      for (AgentId a = 0; a < n; ++a) {
        if (dens[a] == 0) fail(ErrorCode::Domain, label + ": zero denominator");
        probs.emplace_back(nums[a], dens[a]);
      }
      return probs;
    };
    const MessageMode mode = full_type ? MessageMode::FullType : MessageMode::NeedyOnly;
    *out = new peersel_mechanism{std::make_unique<ExternalMechanism>(mode, label, call), label};
  });
}

void peersel_mechanism_free(peersel_mechanism* mechanism) { delete mechanism; }

int peersel_mechanism_mode(const peersel_mechanism* mechanism) {
  if (mechanism == nullptr) return -1;
  return mechanism->impl->mode() == MessageMode::NeedyOnly ? 0 : 1;
}

peersel_status peersel_run(const peersel_mechanism* mechanism, const peersel_instance* network,
                           uint64_t needy, int decimals, char** report) {
  return guard([&] {
    require(report, "report");
    const RelationNetwork& g = net(network);
    const ScaledLottery lot =
        mech(mechanism).evaluate(truthful_profile({g, needy_set(g, needy)}, mech(mechanism).mode()));
    *report = duplicate(report_distribution(lot, style(decimals)));
  });
}

peersel_status peersel_evaluate(const peersel_mechanism* mechanism,
                                const peersel_instance* network, uint64_t needy,
                                int64_t* numerators, int64_t* denominator) {
  return guard([&] {
    require(numerators, "numerators");
    require(denominator, "denominator");
    const RelationNetwork& g = net(network);
    const ScaledLottery lot =
        mech(mechanism).evaluate(truthful_profile({g, needy_set(g, needy)}, mech(mechanism).mode()));
    for (AgentId a = 0; a < lot.size(); ++a) numerators[a] = lot.numerators[a];
    *denominator = lot.denominator;
  });
}

peersel_status peersel_check_validity(const peersel_mechanism* mechanism,
                                      const peersel_instance* network, uint64_t budget,
                                      int decimals, int* valid, char** report) {
  return guard([&] {
    const ValidityVerdict verdict = check_validity_exhaustive(
        mech(mechanism), net(network).size(), budget == 0 ? std::uint64_t{1} << 20 : budget);
    if (valid != nullptr) *valid = verdict.valid;
    emit(report, report_validity(mechanism->label, verdict, style(decimals)));
  });
}

peersel_status peersel_check_dsic(const peersel_mechanism* mechanism,
                                  const peersel_instance* network,
                                  const peersel_dsic_options* options, int decimals, int* passed,
                                  char** report) {
  return guard([&] {
    require(options, "options");
    DsicOptions o;
    o.exhaustive = options->exhaustive != 0;
    o.samples = options->samples;
    o.seed = options->seed;
    if (options->budget != 0) o.budget = options->budget;
    o.weights = weights_of(options->friend_weight, options->enemy_weight);
    o.max_recorded = options->max_recorded;
    const DsicReport r = check_dsic(mech(mechanism), net(network), o);
    if (passed != nullptr) *passed = r.passed();
    emit(report, report_dsic(mechanism->label, r, style(decimals)));
  });
}

peersel_status peersel_check_efficiency(const peersel_mechanism* mechanism,
                                        const peersel_instance* network, int decimals,
                                        int* efficient, char** report) {
  return guard([&] {
    const EfficiencyVerdict verdict = check_efficiency(mech(mechanism), net(network));
    if (efficient != nullptr) *efficient = verdict.efficient;
    emit(report, report_efficiency_check(mechanism->label, verdict, style(decimals)));
  });
}

peersel_status peersel_exact_efficiency(const peersel_mechanism* mechanism,
                                        const peersel_instance* network, const char* q,
                                        int decimals, char** value, char** report) {
  return guard([&] {
    require(q, "q");
    const NeedyPrior prior(parse_rational(q));
    const Rational result = exact_efficiency(mech(mechanism), net(network), prior);
    const std::string text = report_exact_efficiency(mechanism->label, prior.value(), result,
                                                     style(decimals));
    emit(value, to_string(result));
    emit(report, text);
  });
}

peersel_status peersel_mc_efficiency(const peersel_mechanism* mechanism,
                                     const peersel_instance* network, const char* q,
                                     const peersel_mc_options* options, int decimals,
                                     double* estimate, double* half_width, char** report) {
  return guard([&] {
    require(q, "q");
    require(options, "options");
    const Rational prior = parse_rational(q);
    const McEstimate e = mc_efficiency(mech(mechanism), net(network), prior, mc_options(*options));
    if (estimate != nullptr) *estimate = e.estimate;
    if (half_width != nullptr) *half_width = e.half_width;
    emit(report, report_mc_efficiency(mechanism->label, prior, e, style(decimals)));
  });
}

peersel_status peersel_closed_form_rd(const peersel_instance* network, const char* q,
                                      char** value) {
  return guard([&] {
    require(q, "q");
    require(value, "value");
    *value = duplicate(to_string(closed_form_prd(net(network), NeedyPrior(parse_rational(q)))));
  });
}

peersel_status peersel_compare(const peersel_instance* network, const char* q,
                               const char* const* names, const int* sinks, size_t count,
                               const peersel_mc_options* mc, int table, int decimals,
                               char** report) {
  return guard([&] {
    require(q, "q");
    require(report, "report");
    if (count > 0) require(names, "names");
    std::vector<MechanismHandle> handles;
    for (std::size_t k = 0; k < count; ++k) {
      const int sink = sinks == nullptr ? -1 : sinks[k];
      handles.push_back(
          parse_mechanism(names[k], sink < 0 ? std::nullopt : std::optional<AgentId>(sink)));
    }
    const Rational prior = parse_rational(q);
    std::optional<McOptions> options;
    if (mc != nullptr) options = mc_options(*mc);
    const auto rows = compare_mechanisms(net(network), prior, handles, options);
    *report = duplicate(table ? comparison_table(prior, rows, style(decimals))
                              : report_comparison(prior, rows, style(decimals)));
  });
}

peersel_status peersel_balance(const peersel_instance* network, int* balanced, char** report) {
  return guard([&] {
    if (balanced != nullptr) *balanced = check_structural_balance(net(network)).balanced;
    emit(report, report_balance(net(network)));
  });
}

peersel_status peersel_classify(const peersel_instance* network, int* admits, char** report) {
  return guard([&] {
    const ClassifyVerdict verdict = classify_balanced(net(network));
    if (admits != nullptr) *admits = verdict.admits;
    emit(report, report_classification(verdict));
  });
}

peersel_status peersel_witness(const peersel_witness_options* options, int* infeasible,
                               int* verified, char** report) {
  return guard([&] {
    require(options, "options");
    require(options->construction, "construction");
    const std::string which = options->construction;
    std::string label;
    const TwoStateConstruction construction = [&] {
      if (which == "enemy-block") {
        label = "enemy-block(n=" + std::to_string(options->n) + ")";
        return enemy_block_construction(options->n);
      }
      if (which != "four-cliques") {
        fail(ErrorCode::InvalidArgument, "unknown construction '" + which + "'");
      }
      const std::array<int, 4> sizes{options->cliques[0], options->cliques[1],
                                     options->cliques[2], options->cliques[3]};
      label = "four-cliques(" + std::to_string(sizes[0]) + "," + std::to_string(sizes[1]) + "," +
              std::to_string(sizes[2]) + "," + std::to_string(sizes[3]) + ")";
      return four_clique_construction(sizes);
    }();
    WitnessOptions o;
    o.weights = weights_of(options->friend_weight, options->enemy_weight);
    o.drop_right_efficiency = options->drop_right_efficiency != 0;
    if (o.drop_right_efficiency) label += "/relaxed";
    const LpWitness w = impossibility_witness(construction, o);
    if (infeasible != nullptr) *infeasible = w.status == LpStatus::Infeasible;
    if (verified != nullptr) *verified = w.verified;
    emit(report, report_witness(label, w, options->include_certificate != 0));
  });
}

}  // extern "C"
