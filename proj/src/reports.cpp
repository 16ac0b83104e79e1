// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "peersel/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace peersel {

namespace {

using Json = nlohmann::ordered_json;

Json agent_list(AgentSet set) {
  Json out = Json::array();
  for (AgentId a : set) out.push_back(a);
  return out;
}

Json message_json(const FullTypeMessage& m, MessageMode mode) {
  Json out;
  out["reporter"] = m.reporter;
  if (mode == MessageMode::FullType) {
    out["friends"] = agent_list(m.reported_friends);
    out["enemies"] = agent_list(m.reported_enemies);
  }
  out["needy"] = agent_list(m.reported_needy);
  return out;
}

Json profile_json(const MessageProfile& profile) {
  Json out = Json::array();
  for (const FullTypeMessage& m : profile.messages()) out.push_back(message_json(m, profile.mode()));
  return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

std::string format_rational(const Rational& value, const ReportStyle& style) {
  if (style.decimals < 0) return to_string(value);
  namespace mp = boost::multiprecision;
  const mp::mpz_int num = mp::numerator(value);
  const mp::mpz_int den = mp::denominator(value);
  mp::mpz_int scale = 1;
  for (int k = 0; k < style.decimals; ++k) scale *= 10;
  const mp::mpz_int magnitude = (2 * mp::abs(num) * scale + den) / (2 * den);
  std::string digits = magnitude.str();
  if (static_cast<int>(digits.size()) <= style.decimals) {
    digits.insert(0, style.decimals + 1 - digits.size(), '0');
  }
  if (style.decimals > 0) digits.insert(digits.size() - style.decimals, ".");
  return (num < 0 && magnitude != 0 ? "-" : "") + digits;
}

std::string report_distribution(const ScaledLottery& lottery, const ReportStyle& style) {
  std::ostringstream out;
  for (AgentId a = 0; a < lottery.size(); ++a) {
    out << a << ": " << format_rational(lottery.probability(a), style) << "\n";
  }
  return out.str();
}

std::string report_validity(const std::string& mechanism, const ValidityVerdict& verdict,
                            const ReportStyle& style) {
  Json doc;
  doc["mechanism"] = mechanism;
  doc["verdict"] = verdict.valid ? "PASS" : "FAIL";
  doc["checked_profiles"] = verdict.checked;
  doc[verdict.valid ? "largest_total" : "total"] = format_rational(verdict.total, style);
  if (verdict.counterexample) doc["counterexample"] = profile_json(*verdict.counterexample);
  return dump(doc);
}

std::string report_dsic(const std::string& mechanism, const DsicReport& report,
                        const ReportStyle& style) {
  Json doc;
  doc["mechanism"] = mechanism;
  doc["verdict"] = report.passed() ? "PASS" : "FAIL";
  doc["exhaustive"] = report.exhaustive;
  doc["checked_profiles"] = report.checked_profiles;
  doc["checked_deviations"] = report.checked_deviations;
  doc["violation_count"] = report.violation_count;
  Json list = Json::array();
  for (const DsicViolation& v : report.violations) {
    Json item;
    item["profile_index"] = v.profile_index;
    item["agent"] = v.agent;
    item["profile"] = profile_json(v.profile);
    item["deviation"] = message_json(v.deviation, v.profile.mode());
    item["delta"] = {{"own", format_rational(v.delta.own, style)},
                     {"friends", format_rational(v.delta.friend_sum, style)},
                     {"enemies", format_rational(v.delta.enemy_sum, style)}};
    list.push_back(std::move(item));
  }
  doc["violations"] = std::move(list);
  return dump(doc);
}

std::string report_efficiency_check(const std::string& mechanism,
                                    const EfficiencyVerdict& verdict,
                                    const ReportStyle& style) {
  Json doc;
  doc["mechanism"] = mechanism;
  doc["verdict"] = verdict.efficient ? "PASS" : "FAIL";
  doc["checked_needy_sets"] = verdict.checked;
  if (verdict.counterexample) {
    doc["counterexample_needy"] = agent_list(*verdict.counterexample);
    doc["needy_mass"] = format_rational(verdict.needy_mass, style);
  }
  return dump(doc);
}

std::string report_exact_efficiency(const std::string& mechanism, const Rational& q,
                                    const Rational& value, const ReportStyle& style) {
  Json doc;
  doc["mechanism"] = mechanism;
  doc["mode"] = "exact";
  doc["q"] = to_string(q);
  doc["efficiency"] = format_rational(value, style);
  return dump(doc);
}

namespace {

Json estimate_json(const McEstimate& e, const ReportStyle& style) {
  Json out;
  out["estimate"] = e.estimate;
  out["exact_sample_mean"] = format_rational(e.mean, style);
  out["half_width"] = e.half_width;
  out["lower"] = e.lower;
  out["upper"] = e.upper;
  out["confidence"] = to_string(e.confidence);
  out["interval"] = e.interval == IntervalKind::Normal ? "normal" : "wilson";
  out["samples"] = e.samples;
  out["seed"] = e.seed;
  return out;
}

}  // namespace

std::string report_mc_efficiency(const std::string& mechanism, const Rational& q,
                                 const McEstimate& estimate, const ReportStyle& style) {
  Json doc;
  doc["mechanism"] = mechanism;
  doc["mode"] = "monte-carlo";
  doc["q"] = to_string(q);
  const Json fields = estimate_json(estimate, style);
  for (const auto& [key, value] : fields.items()) doc[key] = value;
  return dump(doc);
}

std::string report_comparison(const Rational& q, std::span<const ComparisonRow> rows,
                              const ReportStyle& style) {
  Json doc;
  doc["q"] = to_string(q);
  doc["mode"] = !rows.empty() && rows.front().estimate ? "monte-carlo" : "exact";
  Json list = Json::array();
  for (const ComparisonRow& row : rows) {
    Json item;
    item["rank"] = row.rank;
    item["mechanism"] = row.mechanism.name();
    item["efficiency"] = format_rational(row.value, style);
    if (row.estimate) item["estimate"] = estimate_json(*row.estimate, style);
    list.push_back(std::move(item));
  }
  doc["ranking"] = std::move(list);
  return dump(doc);
}

std::string comparison_table(const Rational& q, std::span<const ComparisonRow> rows,
                             const ReportStyle& style) {
  std::vector<std::array<std::string, 3>> cells{{"rank", "mechanism", "efficiency"}};
  for (const ComparisonRow& row : rows) {
    std::string value = format_rational(row.value, style);
    if (row.estimate) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " (+/- %.6f)", row.estimate->half_width);
      value += buf;
    }
    cells.push_back({std::to_string(row.rank), row.mechanism.name(), value});
  }
  std::array<std::size_t, 3> width{};
  for (const auto& line : cells) {
    for (int c = 0; c < 3; ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream out;
  out << "q = " << to_string(q) << "\n";
  for (const auto& line : cells) {
    out << line[0] << std::string(width[0] - line[0].size() + 2, ' ') << line[1]
        << std::string(width[1] - line[1].size() + 2, ' ') << line[2] << "\n";
  }
  return out.str();
}

std::string report_balance(const RelationNetwork& network, const ReportStyle&) {
  const BalanceVerdict verdict = check_structural_balance(network);
  Json doc;
  doc["balanced"] = verdict.balanced;
  if (!verdict.balanced) {
    const auto& t = *verdict.violating_triple;
    doc["violating_triple"] = {t[0], t[1], t[2]};
    doc["rule"] = static_cast<int>(*verdict.rule);
    return dump(doc);
  }
  Json comps = Json::array();
  for (const EfComponent& c : decompose(network).components) {
    Json cliques = Json::array();
    for (const auto& clique : c.cliques) cliques.push_back(clique);
    comps.push_back(std::move(cliques));
  }
  doc["ef_components"] = std::move(comps);
  return dump(doc);
}

std::string report_classification(const ClassifyVerdict& verdict) {
  Json doc;
  doc["admits"] = verdict.admits;
  doc["reason"] = std::string(to_string(verdict.reason));
  if (verdict.recommended) {
    doc["recommended"] = verdict.recommended->name();
    doc["summary"] = "admits efficient DSIC via " + verdict.recommended->name() + " (" +
                     std::string(to_string(verdict.reason)) + ")";
  } else {
    doc["summary"] =
        "does not admit efficient DSIC (" + std::string(to_string(verdict.reason)) + ")";
  }
  return dump(doc);
}

std::string report_witness(const std::string& construction, const LpWitness& witness,
                           bool include_certificate, const ReportStyle& style) {
  Json doc;
  doc["construction"] = construction;
  doc["agents"] = witness.agents;
  doc["variables"] = witness.variables;
  doc["constraints"] = witness.constraints;
  doc["status"] = witness.status == LpStatus::Infeasible ? "INFEASIBLE" : "FEASIBLE";
  doc["verified"] = witness.verified;
  const auto& rows = witness.system.constraints();
  if (witness.status == LpStatus::Infeasible) {
    doc["certificate_terms"] = witness.certificate.size();
    doc["derived"] = "0 <= " + format_rational(witness.combined_rhs, style);
    if (include_certificate) {
      Json terms = Json::array();
      for (const CertificateTerm& t : witness.certificate) {
        Json item;
        if (t.kind == CertificateTerm::Kind::Constraint) {
          item["row"] = rows[t.index].label;
          item["side"] = t.sign > 0 ? "<=" : ">=";
        } else {
          item["row"] = "nonnegative";
          item["profile"] = t.index / witness.agents;
          item["agent"] = t.index % witness.agents;
        }
        item["multiplier"] = format_rational(t.multiplier, style);
        terms.push_back(std::move(item));
      }
      doc["certificate"] = std::move(terms);
    }
  } else if (include_certificate) {
    Json point = Json::array();
    for (std::size_t v = 0; v < witness.point.size(); ++v) {
      if (witness.point[v] == 0) continue;
      point.push_back({{"profile", v / witness.agents},
                       {"agent", v % witness.agents},
                       {"value", format_rational(witness.point[v], style)}});
    }
    doc["point"] = std::move(point);
  }
  return dump(doc);
}

}  // namespace peersel
