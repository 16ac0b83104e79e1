// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PEERSEL_REPORTS_HPP
#define PEERSEL_REPORTS_HPP

#include <span>
#include <string>

#include "peersel/balance_analysis.hpp"
#include "peersel/efficiency_analysis.hpp"
#include "peersel/mechanism.hpp"
#include "peersel/verification.hpp"

namespace peersel {

/// Rationals print as "num/den" unless decimals ≥ 0, in which case they are
/// rounded half away from zero to that many digits.
struct ReportStyle {
  int decimals = -1;
};

std::string format_rational(const Rational& value, const ReportStyle& style = {});

/// One "agent: probability" line per agent.
std::string report_distribution(const ScaledLottery& lottery, const ReportStyle& style = {});

// The remaining reports are pretty-printed JSON objects ending in a newline.

std::string report_validity(const std::string& mechanism, const ValidityVerdict& verdict,
                            const ReportStyle& style = {});
std::string report_dsic(const std::string& mechanism, const DsicReport& report,
                        const ReportStyle& style = {});
std::string report_efficiency_check(const std::string& mechanism,
                                    const EfficiencyVerdict& verdict,
                                    const ReportStyle& style = {});
std::string report_exact_efficiency(const std::string& mechanism, const Rational& q,
                                    const Rational& value, const ReportStyle& style = {});
std::string report_mc_efficiency(const std::string& mechanism, const Rational& q,
                                 const McEstimate& estimate, const ReportStyle& style = {});
std::string report_comparison(const Rational& q, std::span<const ComparisonRow> rows,
                              const ReportStyle& style = {});
/// Aligned text table of the same rows.
std::string comparison_table(const Rational& q, std::span<const ComparisonRow> rows,
                             const ReportStyle& style = {});
std::string report_balance(const RelationNetwork& network, const ReportStyle& style = {});
std::string report_classification(const ClassifyVerdict& verdict);
std::string report_witness(const std::string& construction, const LpWitness& witness,
                           bool include_certificate, const ReportStyle& style = {});

}  // namespace peersel

#endif  // PEERSEL_REPORTS_HPP
