// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end over the peersel C API.
//
// Exit codes: 0 ok, 1 domain error or FAIL verdict, 2 usage, 3 DSIC violation,
// 4 witness anomaly.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "peersel/peersel.h"

namespace {

enum Exit { kOk = 0, kDomain = 1, kUsage = 2, kViolation = 3, kAnomaly = 4 };

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void usage(const std::string& message) { throw Failure{kUsage, message}; }

void check(peersel_status status) {
  if (status != PEERSEL_OK) throw Failure{kDomain, peersel_last_error()};
}

struct InstanceDeleter {
  void operator()(peersel_instance* p) const { peersel_instance_free(p); }
};
struct MechanismDeleter {
  void operator()(peersel_mechanism* p) const { peersel_mechanism_free(p); }
};
using Instance = std::unique_ptr<peersel_instance, InstanceDeleter>;
using Mechanism = std::unique_ptr<peersel_mechanism, MechanismDeleter>;

// Takes ownership of a string returned by the library.
std::string take(char* text) {
  if (text == nullptr) return {};
  std::string out(text);
  peersel_string_free(text);
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    usage(flag + ": '" + text + "' is not an integer");
  }
}

std::uint64_t parse_agents(const std::string& text, const std::string& flag) {
  std::uint64_t mask = 0;
  for (const std::string& item : split(text, ',')) {
    const int a = parse_int(item, flag);
    if (a < 0 || a >= 64) usage(flag + ": agent " + item + " out of range");
    mask |= std::uint64_t{1} << a;
  }
  return mask;
}

// "WF,WE" into two rational strings.
std::pair<std::string, std::string> parse_weights(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) usage("--weights expects FRIEND,ENEMY");
  return {parts[0], parts[1]};
}

Instance load(const std::string& path) {
  peersel_instance* out = nullptr;
  check(peersel_instance_read(path.c_str(), &out));
  return Instance(out);
}

int mode_code(const std::string& mode) {
  if (mode.empty()) return -1;
  if (mode == "needy") return 0;
  if (mode == "full") return 1;
  usage("--mode must be needy or full");
}

Mechanism make(const std::string& name, int sink, int mode, const peersel_instance* network) {
  const bool sinked = name == "g2k" || name == "g3k";
  if (sinked && sink < 0) usage("--sink is required for " + name);
  if (!sinked && sink >= 0) usage("--sink applies to g2k and g3k only");
  peersel_mechanism* out = nullptr;
  check(peersel_mechanism_create(name.c_str(), sink, mode, network, &out));
  return Mechanism(out);
}

// Either the flag value or the instance prior; exits with a usage error if neither.
std::string resolve_q(const std::string& flag, const peersel_instance* instance) {
  if (!flag.empty()) return flag;
  char* q = nullptr;
  check(peersel_instance_q(instance, &q));
  if (q == nullptr) usage("--q is required when the instance carries no q");
  return take(q);
}

void print(const std::string& text) { std::cout << text << std::flush; }

struct MechanismFlags {
  std::string name;
  int sink = -1;
  std::string mode;

  void attach(CLI::App* cmd, bool with_mode) {
    cmd->add_option("--mechanism", name, "g1, g2k, g3k, rd, duples or constant")->required();
    cmd->add_option("--sink", sink, "sink agent of g2k and g3k")->check(CLI::NonNegativeNumber);
    if (with_mode) {
      cmd->add_option("--mode", mode, "message mode: needy or full")
          ->check(CLI::IsMember({"needy", "full"}));
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Peer selection mechanisms over signed networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(peersel_version()));
  int decimals = -1;
  app.add_option("--decimals", decimals, "print rounded decimals instead of num/den")
      ->check(CLI::Range(0, 30));

  // run
  auto* run = app.add_subcommand("run", "Outcome of a mechanism at a truthful profile");
  MechanismFlags run_mech;
  std::string run_network;
  std::optional<std::string> run_needy;
  run_mech.attach(run, true);
  run->add_option("--network", run_network, "instance file")->required();
  run->add_option("--needy", run_needy, "comma-separated needy agents (default: instance)");

  // check
  auto* chk = app.add_subcommand("check", "Validity and efficiency check of a mechanism");
  MechanismFlags chk_mech;
  std::string chk_network;
  std::uint64_t chk_budget = std::uint64_t{1} << 20;
  chk_mech.attach(chk, true);
  chk->add_option("--network", chk_network, "instance file")->required();
  chk->add_option("--budget", chk_budget, "largest profile count swept for validity");

  // dsic
  auto* dsic = app.add_subcommand("dsic", "Robust or weighted DSIC check");
  MechanismFlags dsic_mech;
  std::string dsic_network;
  bool dsic_exhaustive = false;
  std::uint64_t dsic_samples = 10000;
  std::uint64_t dsic_seed = 0;
  std::uint64_t dsic_budget = 0;
  std::size_t dsic_recorded = 32;
  std::string dsic_weights;
  dsic_mech.attach(dsic, true);
  dsic->add_option("--network", dsic_network, "instance file")->required();
  auto* ex_flag =
      dsic->add_flag("--exhaustive", dsic_exhaustive, "sweep every base profile (default)");
  auto* samples_opt =
      dsic->add_option("--samples", dsic_samples, "sampled base profiles")->check(CLI::PositiveNumber);
  dsic->add_option("--seed", dsic_seed, "sampling seed");
  dsic->add_option("--budget", dsic_budget, "largest exhaustive profile count");
  dsic->add_option("--max-recorded", dsic_recorded, "violations listed in the report");
  dsic->add_option("--weights", dsic_weights, "FRIEND,ENEMY weights (default: robust test)");
  ex_flag->excludes(samples_opt);

  // efficiency
  auto* eff = app.add_subcommand("efficiency", "Expected needy mass under an i.i.d. prior");
  MechanismFlags eff_mech;
  std::string eff_network;
  std::string eff_q;
  bool eff_exact = false;
  bool eff_mc = false;
  std::uint64_t eff_samples = 100000;
  std::uint64_t eff_seed = 0;
  std::string eff_confidence;
  bool eff_wilson = false;
  eff_mech.attach(eff, true);
  eff->add_option("--network", eff_network, "instance file")->required();
  eff->add_option("--q", eff_q, "needy probability NUM/DEN (default: instance)");
  auto* exact_flag = eff->add_flag("--exact", eff_exact, "enumerate all needy sets (default)");
  auto* mc_flag = eff->add_flag("--mc", eff_mc, "Monte Carlo estimate");
  eff->add_option("--samples", eff_samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
  eff->add_option("--seed", eff_seed, "Monte Carlo seed");
  eff->add_option("--confidence", eff_confidence, "interval level NUM/DEN (default 19/20)");
  eff->add_flag("--wilson", eff_wilson, "Wilson interval instead of the normal one");
  exact_flag->excludes(mc_flag);

  // compare
  auto* cmp = app.add_subcommand("compare", "Rank mechanisms by efficiency");
  std::string cmp_network;
  std::string cmp_q;
  std::vector<std::string> cmp_mechs{"rd", "duples", "constant"};
  bool cmp_exact = false;
  bool cmp_mc = false;
  std::uint64_t cmp_samples = 100000;
  std::uint64_t cmp_seed = 0;
  std::string cmp_confidence;
  bool cmp_wilson = false;
  std::string cmp_format = "json";
  cmp->add_option("--network", cmp_network, "instance file")->required();
  cmp->add_option("--q", cmp_q, "needy probability NUM/DEN (default: instance)");
  cmp->add_option("--mechanisms", cmp_mechs, "NAME or NAME:SINK list")->delimiter(',');
  auto* cmp_exact_flag = cmp->add_flag("--exact", cmp_exact, "exact values (default)");
  auto* cmp_mc_flag = cmp->add_flag("--mc", cmp_mc, "Monte Carlo estimates");
  cmp->add_option("--samples", cmp_samples, "Monte Carlo samples")->check(CLI::PositiveNumber);
  cmp->add_option("--seed", cmp_seed, "Monte Carlo seed");
  cmp->add_option("--confidence", cmp_confidence, "interval level NUM/DEN (default 19/20)");
  cmp->add_flag("--wilson", cmp_wilson, "Wilson interval instead of the normal one");
  cmp->add_option("--format", cmp_format, "json or table")->check(CLI::IsMember({"json", "table"}));
  cmp_exact_flag->excludes(cmp_mc_flag);

  // balance, classify
  auto* bal = app.add_subcommand("balance", "Structural balance and EF-component decomposition");
  std::string bal_network;
  bal->add_option("--network", bal_network, "instance file")->required();
  auto* cls = app.add_subcommand("classify", "Whether a balanced network admits efficient DSIC");
  std::string cls_network;
  cls->add_option("--network", cls_network, "instance file")->required();

  // witness
  auto* wit = app.add_subcommand("witness", "Exact LP impossibility witness");
  std::string wit_construction;
  int wit_n = 4;
  std::vector<int> wit_cliques{1, 1, 1, 1};
  std::string wit_weights;
  bool wit_relaxed = false;
  bool wit_no_certificate = false;
  wit->add_option("--construction", wit_construction,
                  "theorem4 (enemy-block) or theorem5b (four-cliques)")
      ->required()
      ->check(CLI::IsMember({"theorem4", "theorem5b", "enemy-block", "four-cliques"}));
  wit->add_option("--n", wit_n, "agents of the enemy-block construction");
  wit->add_option("--cliques", wit_cliques, "X1,X2,Y1,Y2 clique sizes")
      ->delimiter(',')
      ->expected(4);
  wit->add_option("--weights", wit_weights, "FRIEND,ENEMY weights (default: robust rows)");
  wit->add_flag("--relaxed", wit_relaxed, "drop the right-state efficiency constraint");
  wit->add_flag("--no-certificate", wit_no_certificate, "omit certificate rows from the report");

  // generate
  auto* gen = app.add_subcommand("generate", "Write a generated instance");
  std::string gen_family;
  int gen_n = 4;
  std::string gen_side = "left";
  std::vector<int> gen_cliques{1, 1, 1, 1};
  std::string gen_pf = "1/3";
  std::string gen_pe = "1/3";
  std::vector<int> gen_sizes;
  std::uint64_t gen_seed = 0;
  std::optional<std::string> gen_needy;
  std::string gen_q;
  std::string gen_out;
  gen->add_option("--family", gen_family,
                  "complete-friend, complete-enemy, complete-impartial, matching-friends, "
                  "enemy-block, four-cliques, random-signed or random-balanced")
      ->required();
  gen->add_option("--n", gen_n, "number of agents");
  gen->add_option("--side", gen_side, "enemy-block state: left or right")
      ->check(CLI::IsMember({"left", "right"}));
  gen->add_option("--cliques", gen_cliques, "four-cliques sizes X1,X2,Y1,Y2")
      ->delimiter(',')
      ->expected(4);
  gen->add_option("--p-friend", gen_pf, "random-signed friend probability NUM/DEN");
  gen->add_option("--p-enemy", gen_pe, "random-signed enemy probability NUM/DEN");
  gen->add_option("--sizes", gen_sizes, "random-balanced clique sizes")->delimiter(',');
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--needy", gen_needy, "needy set to store (overrides the generator's)");
  gen->add_option("--q", gen_q, "prior to store, NUM/DEN");
  gen->add_option("--out", gen_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*run) {
      const Instance network = load(run_network);
      const Mechanism mech = make(run_mech.name, run_mech.sink, mode_code(run_mech.mode), network.get());
      std::uint64_t needy = 0;
      if (run_needy) {
        needy = parse_agents(*run_needy, "--needy");
      } else {
        int present = 0;
        check(peersel_instance_needy(network.get(), &present, &needy));
        if (!present) usage("--needy is required when the instance carries no needy set");
      }
      char* report = nullptr;
      check(peersel_run(mech.get(), network.get(), needy, decimals, &report));
      print(take(report));
      return kOk;
    }

    if (*chk) {
      const Instance network = load(chk_network);
      const Mechanism mech = make(chk_mech.name, chk_mech.sink, mode_code(chk_mech.mode), network.get());
      int valid = 1;
      char* validity = nullptr;
      std::string validity_text;
      const peersel_status vs =
          peersel_check_validity(mech.get(), network.get(), chk_budget, decimals, &valid, &validity);
      if (vs == PEERSEL_ERR_BUDGET) {
        validity_text = "{\n  \"verdict\": \"SKIPPED\",\n  \"reason\": \"profile space exceeds --budget\"\n}";
        valid = 1;
      } else {
        check(vs);
        validity_text = take(validity);
        while (!validity_text.empty() && validity_text.back() == '\n') validity_text.pop_back();
      }
      int efficient = 0;
      char* eff_report = nullptr;
      check(peersel_check_efficiency(mech.get(), network.get(), decimals, &efficient, &eff_report));
      std::string eff_text = take(eff_report);
      while (!eff_text.empty() && eff_text.back() == '\n') eff_text.pop_back();
      const bool pass = valid && efficient;
      print(std::string("{\n\"verdict\": \"") + (pass ? "PASS" : "FAIL") +
            "\",\n\"validity\": " + validity_text + ",\n\"efficiency\": " + eff_text + "\n}\n");
      return pass ? kOk : kDomain;
    }

    if (*dsic) {
      const Instance network = load(dsic_network);
      const Mechanism mech =
          make(dsic_mech.name, dsic_mech.sink, mode_code(dsic_mech.mode), network.get());
      peersel_dsic_options o{};
      o.exhaustive = samples_opt->count() == 0;
      o.samples = dsic_samples;
      o.seed = dsic_seed;
      o.budget = dsic_budget;
      o.max_recorded = dsic_recorded;
      std::pair<std::string, std::string> w;
      if (!dsic_weights.empty()) {
        w = parse_weights(dsic_weights);
        o.friend_weight = w.first.c_str();
        o.enemy_weight = w.second.c_str();
      }
      int passed = 0;
      char* report = nullptr;
      check(peersel_check_dsic(mech.get(), network.get(), &o, decimals, &passed, &report));
      print(take(report));
      return passed ? kOk : kViolation;
    }

    if (*eff) {
      const Instance network = load(eff_network);
      const Mechanism mech = make(eff_mech.name, eff_mech.sink, mode_code(eff_mech.mode), network.get());
      const std::string q = resolve_q(eff_q, network.get());
      char* report = nullptr;
      if (eff_mc) {
        peersel_mc_options o{};
        o.samples = eff_samples;
        o.seed = eff_seed;
        o.confidence = eff_confidence.empty() ? nullptr : eff_confidence.c_str();
        o.wilson = eff_wilson;
        check(peersel_mc_efficiency(mech.get(), network.get(), q.c_str(), &o, decimals, nullptr,
                                    nullptr, &report));
      } else {
        check(peersel_exact_efficiency(mech.get(), network.get(), q.c_str(), decimals, nullptr,
                                       &report));
      }
      print(take(report));
      return kOk;
    }

    if (*cmp) {
      const Instance network = load(cmp_network);
      const std::string q = resolve_q(cmp_q, network.get());
      std::vector<std::string> names;
      std::vector<int> sinks;
      for (const std::string& item : cmp_mechs) {
        const auto colon = item.find(':');
        names.push_back(item.substr(0, colon));
        sinks.push_back(colon == std::string::npos ? -1
                                                   : parse_int(item.substr(colon + 1), "--mechanisms"));
      }
      std::vector<const char*> raw;
      for (const std::string& n : names) raw.push_back(n.c_str());
      peersel_mc_options o{};
      o.samples = cmp_samples;
      o.seed = cmp_seed;
      o.confidence = cmp_confidence.empty() ? nullptr : cmp_confidence.c_str();
      o.wilson = cmp_wilson;
      char* report = nullptr;
      check(peersel_compare(network.get(), q.c_str(), raw.data(), sinks.data(), raw.size(),
                            cmp_mc ? &o : nullptr, cmp_format == "table", decimals, &report));
      print(take(report));
      return kOk;
    }

    if (*bal) {
      const Instance network = load(bal_network);
      char* report = nullptr;
      check(peersel_balance(network.get(), nullptr, &report));
      print(take(report));
      return kOk;
    }

    if (*cls) {
      const Instance network = load(cls_network);
      char* report = nullptr;
      check(peersel_classify(network.get(), nullptr, &report));
      print(take(report));
      return kOk;
    }

    if (*wit) {
      peersel_witness_options o{};
      const bool block = wit_construction == "theorem4" || wit_construction == "enemy-block";
      o.construction = block ? "enemy-block" : "four-cliques";
      o.n = wit_n;
      for (int k = 0; k < 4; ++k) o.cliques[k] = wit_cliques[k];
      std::pair<std::string, std::string> w;
      if (!wit_weights.empty()) {
        w = parse_weights(wit_weights);
        o.friend_weight = w.first.c_str();
        o.enemy_weight = w.second.c_str();
      }
      o.drop_right_efficiency = wit_relaxed;
      o.include_certificate = !wit_no_certificate;
      int infeasible = 0;
      int verified = 0;
      char* report = nullptr;
      check(peersel_witness(&o, &infeasible, &verified, &report));
      print(take(report));
      if (!verified) return kAnomaly;
      if (!wit_relaxed && !infeasible) return kAnomaly;
      return kOk;
    }

    if (*gen) {
      peersel_generator spec{};
      spec.family = gen_family.c_str();
      spec.n = gen_n;
      spec.side = gen_side.c_str();
      for (int k = 0; k < 4; ++k) spec.cliques[k] = gen_cliques[k];
      spec.p_friend = gen_pf.c_str();
      spec.p_enemy = gen_pe.c_str();
      spec.sizes = gen_sizes.empty() ? nullptr : gen_sizes.data();
      spec.sizes_count = gen_sizes.size();
      spec.seed = gen_seed;
      peersel_instance* raw = nullptr;
      check(peersel_generate(&spec, &raw));
      const Instance instance(raw);
      if (gen_needy) {
        check(peersel_instance_set_needy(instance.get(), 1, parse_agents(*gen_needy, "--needy")));
      }
      if (!gen_q.empty()) check(peersel_instance_set_q(instance.get(), gen_q.c_str()));
      char* text = nullptr;
      check(peersel_instance_serialize(instance.get(), &text));
      const std::string body = take(text);
      if (gen_out.empty()) {
        print(body);
      } else {
        std::ofstream out(gen_out, std::ios::binary);
        if (!(out << body)) throw Failure{kDomain, "cannot write " + gen_out};
      }
      return kOk;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
