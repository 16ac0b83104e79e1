// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#include "peersel/exact_lp.hpp"

#include <algorithm>

namespace peersel {

namespace {
bool is_zero(const Rational& v) { return v.is_zero(); }
}  // namespace

void LinearSystem::add(LinearConstraint constraint) {
  for (const auto& [var, coef] : constraint.terms) {
    if (var < 0 || var >= variables_) {
      fail(ErrorCode::InvalidArgument, "constraint '" + constraint.label +
                                           "' uses an unknown variable");
    }
  }
  constraints_.push_back(std::move(constraint));
}

void LinearSystem::remove_labeled(std::string_view prefix) {
  std::erase_if(constraints_, [&](const LinearConstraint& c) {
    return std::string_view(c.label).substr(0, prefix.size()) == prefix;
  });
}

std::string_view to_string(LpStatus status) {
  return status == LpStatus::Feasible ? "feasible" : "infeasible";
}

std::optional<std::vector<Rational>> find_nonnegative_solution(
    const std::vector<std::vector<Rational>>& matrix, const std::vector<Rational>& rhs) {
  const std::size_t m = matrix.size();
  if (rhs.size() != m) fail(ErrorCode::InvalidArgument, "matrix and rhs disagree in size");
  const std::size_t cols = m == 0 ? 0 : matrix.front().size();
  const std::size_t width = cols + m + 1;  // originals, artificials, rhs
  const std::size_t rhs_col = width - 1;

  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (matrix[r].size() != cols) fail(ErrorCode::InvalidArgument, "ragged matrix");
    const bool flip = rhs[r] < 0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!is_zero(matrix[r][j])) t[r][j] = flip ? Rational(-matrix[r][j]) : matrix[r][j];
    }
    t[r][cols + r] = 1;
    t[r][rhs_col] = flip ? Rational(-rhs[r]) : rhs[r];
    basis[r] = cols + r;
  }

  // Phase-one objective: minimise the artificial sum. cost[rhs_col] holds −w.
  std::vector<Rational> cost(width);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (!is_zero(t[r][j])) cost[j] -= t[r][j];
    }
    cost[rhs_col] -= t[r][rhs_col];
  }

  std::vector<std::size_t> pivot_support;
  for (;;) {
    // Bland: lowest-index improving column. Artificials never re-enter.
    std::size_t entering = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (cost[j] < 0) {
        entering = j;
        break;
      }
    }
    if (entering == cols) break;

    std::size_t leaving = m;
    Rational best_ratio;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][entering] <= 0) continue;
      Rational ratio = t[r][rhs_col] / t[r][entering];
      if (leaving == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = std::move(ratio);
      }
    }
    // The phase-one objective is bounded below by zero.
    if (leaving == m) fail(ErrorCode::Domain, "phase-one simplex became unbounded");

    std::vector<Rational>& prow = t[leaving];
    const Rational pivot = prow[entering];
    pivot_support.clear();
    for (std::size_t j = 0; j < width; ++j) {
      if (!is_zero(prow[j])) {
        prow[j] /= pivot;
        pivot_support.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (is_zero(row[entering])) return;
      const Rational factor = row[entering];
      for (std::size_t j : pivot_support) row[j] -= factor * prow[j];
    };
    for (std::size_t r = 0; r < m; ++r) {
      if (r != leaving) eliminate(t[r]);
    }
    eliminate(cost);
    basis[leaving] = entering;
  }

  if (cost[rhs_col] != 0) return std::nullopt;  // artificial sum stays positive
  std::vector<Rational> z(cols);
  for (std::size_t r = 0; r < m; ++r) {
    if (basis[r] < cols) z[basis[r]] = t[r][rhs_col];
  }
  return z;
}

namespace {

struct ExpandedRow {
  CertificateTerm::Kind kind;
  int index;
  int sign;
};

std::vector<ExpandedRow> expanded_rows(const LinearSystem& system) {
  std::vector<ExpandedRow> rows;
  const auto& cons = system.constraints();
  for (int c = 0; c < static_cast<int>(cons.size()); ++c) {
    rows.push_back({CertificateTerm::Kind::Constraint, c, 1});
    if (cons[c].sense == ConstraintSense::Equal) {
      rows.push_back({CertificateTerm::Kind::Constraint, c, -1});
    }
  }
  for (int v = 0; v < system.variables(); ++v) {
    rows.push_back({CertificateTerm::Kind::Nonnegativity, v, 1});
  }
  return rows;
}

}  // namespace

LpResult solve_feasibility(const LinearSystem& system) {
  const int n = system.variables();
  const auto& cons = system.constraints();

  // Standard form: one slack column per ≤ constraint.
  int slack_count = 0;
  for (const auto& c : cons) slack_count += c.sense == ConstraintSense::LessEqual;
  std::vector<std::vector<Rational>> matrix(cons.size(), std::vector<Rational>(n + slack_count));
  std::vector<Rational> rhs(cons.size());
  int slack = n;
  for (std::size_t r = 0; r < cons.size(); ++r) {
    for (const auto& [var, coef] : cons[r].terms) matrix[r][var] += coef;
    if (cons[r].sense == ConstraintSense::LessEqual) matrix[r][slack++] = 1;
    rhs[r] = cons[r].rhs;
  }

  LpResult result;
  if (auto z = find_nonnegative_solution(matrix, rhs)) {
    result.status = LpStatus::Feasible;
    result.point.assign(n, 0);
    std::copy_n(z->begin(), std::min<std::size_t>(n, z->size()), result.point.begin());
    return result;
  }

  // Farkas alternative: y ≥ 0 over the expanded rows, Σ y·a = 0, Σ y·b = −1.
  const std::vector<ExpandedRow> rows = expanded_rows(system);
  std::vector<std::vector<Rational>> farkas(n + 1, std::vector<Rational>(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const ExpandedRow& row = rows[k];
    if (row.kind == CertificateTerm::Kind::Nonnegativity) {
      farkas[row.index][k] = -1;
      continue;
    }
    const LinearConstraint& c = cons[row.index];
    for (const auto& [var, coef] : c.terms) farkas[var][k] += row.sign * coef;
    farkas[n][k] = row.sign * c.rhs;
  }
  std::vector<Rational> target(n + 1);
  target[n] = -1;
  auto y = find_nonnegative_solution(farkas, target);
  if (!y) fail(ErrorCode::Domain, "neither a feasible point nor a Farkas certificate found");

  result.status = LpStatus::Infeasible;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if ((*y)[k] > 0) {
      result.certificate.push_back({rows[k].kind, rows[k].index, rows[k].sign, (*y)[k]});
    }
  }
  return result;
}

bool verify_certificate(const LinearSystem& system, std::span<const CertificateTerm> certificate,
                        Rational* combined_rhs) {
  const auto& cons = system.constraints();
  std::vector<Rational> lhs(system.variables());
  Rational rhs = 0;
  for (const CertificateTerm& term : certificate) {
    if (term.multiplier <= 0) return false;
    if (term.kind == CertificateTerm::Kind::Nonnegativity) {
      if (term.index < 0 || term.index >= system.variables() || term.sign != 1) return false;
      lhs[term.index] -= term.multiplier;
      continue;
    }
    if (term.index < 0 || term.index >= static_cast<int>(cons.size())) return false;
    const LinearConstraint& c = cons[term.index];
    if (term.sign != 1 && !(term.sign == -1 && c.sense == ConstraintSense::Equal)) return false;
    for (const auto& [var, coef] : c.terms) lhs[var] += term.sign * term.multiplier * coef;
    rhs += term.sign * term.multiplier * c.rhs;
  }
  if (combined_rhs != nullptr) *combined_rhs = rhs;
  return std::all_of(lhs.begin(), lhs.end(), [](const Rational& v) { return is_zero(v); }) &&
         rhs < 0;
}

bool verify_point(const LinearSystem& system, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != system.variables()) return false;
  if (std::any_of(point.begin(), point.end(), [](const Rational& v) { return v < 0; })) {
    return false;
  }
  for (const LinearConstraint& c : system.constraints()) {
    Rational value = 0;
    for (const auto& [var, coef] : c.terms) value += coef * point[var];
    if (c.sense == ConstraintSense::Equal ? value != c.rhs : value > c.rhs) return false;
  }
  return true;
}

}  // namespace peersel
