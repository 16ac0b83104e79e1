// Copyright 2026 The peersel Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PEERSEL_EXACT_LP_HPP
#define PEERSEL_EXACT_LP_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "peersel/core_model.hpp"

namespace peersel {

enum class ConstraintSense { LessEqual, Equal };

struct LinearConstraint {
  std::vector<std::pair<int, Rational>> terms;  // (variable, coefficient)
  ConstraintSense sense = ConstraintSense::LessEqual;
  Rational rhs;
  std::string label;
};

/// Linear constraints over nonnegative variables.
class LinearSystem {
 public:
  explicit LinearSystem(int variables = 0) : variables_(variables) {}

  int variables() const { return variables_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  void add(LinearConstraint constraint);
  /// Removes every constraint whose label starts with `prefix`.
  void remove_labeled(std::string_view prefix);

 private:
  int variables_;
  std::vector<LinearConstraint> constraints_;
};

enum class LpStatus { Feasible, Infeasible };

std::string_view to_string(LpStatus status);

/// One row of the expanded system in which every constraint reads a·x ≤ b:
/// a LessEqual constraint (sign +1), either side of an Equal constraint
/// (sign +1 for a·x ≤ b, −1 for −a·x ≤ −b), or a nonnegativity row −x ≤ 0.
struct CertificateTerm {
  enum class Kind { Constraint, Nonnegativity };
  Kind kind = Kind::Constraint;
  int index = 0;  // constraint or variable index
  int sign = 1;
  Rational multiplier;
};

struct LpResult {
  LpStatus status = LpStatus::Feasible;
  std::vector<Rational> point;                // when feasible
  std::vector<CertificateTerm> certificate;   // when infeasible
};

/// Exact phase-one simplex (Bland's rule). On infeasibility, a Farkas
/// certificate y ≥ 0 with yᵀA = 0 and yᵀb = −1 over the expanded rows.
LpResult solve_feasibility(const LinearSystem& system);

/// Re-derives the combination Σ y·row with exact arithmetic. Returns true
/// iff every multiplier is positive, the left side cancels to the zero
/// vector and the combined right side is negative (0 ≤ negative).
bool verify_certificate(const LinearSystem& system, std::span<const CertificateTerm> certificate,
                        Rational* combined_rhs = nullptr);

bool verify_point(const LinearSystem& system, std::span<const Rational> point);

/// Finds z ≥ 0 with M z = c, or reports that none exists. Dense rows.
std::optional<std::vector<Rational>> find_nonnegative_solution(
    const std::vector<std::vector<Rational>>& matrix, const std::vector<Rational>& rhs);

}  // namespace peersel

#endif  // PEERSEL_EXACT_LP_HPP
