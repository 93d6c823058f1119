#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "thermo/rational.hpp"

namespace thermo {

/// minimize c.x  subject to  A_eq x = b_eq,  A_le x <= b_le,  x >= 0.
struct LinearProgram {
  std::size_t num_vars = 0;
  Vector objective;
  std::vector<Vector> eq_matrix;
  Vector eq_rhs;
  std::vector<Vector> le_matrix;
  Vector le_rhs;

  explicit LinearProgram(std::size_t n = 0) : num_vars(n), objective(n) {}

  void add_eq(Vector row, Rational rhs);
  void add_le(Vector row, Rational rhs);
  std::size_t num_rows() const { return eq_matrix.size() + le_matrix.size(); }

  /// Throws std::invalid_argument unless every row has num_vars entries.
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Rational> optimum;
  /// Optimal basic feasible solution; for Unbounded, the last feasible vertex.
  std::optional<Vector> point;
  /// Infeasible only: Farkas multipliers y, equality rows first then
  /// inequality rows, with y_le >= 0, y^T A >= 0 and y^T b < 0.
  std::optional<Vector> certificate;
  /// Unbounded only: direction d >= 0 with A_eq d = 0, A_le d <= 0, c.d < 0.
  std::optional<Vector> ray;
};

/// Two-phase dense-tableau simplex over exact rationals with Bland's rule.
/// A zero objective stops after phase 1 (pure feasibility).
LpSolution solve(const LinearProgram& lp);

/// Exact re-verification of a solution's point, certificate or ray against
/// the program. Any violation, however small, yields false.
bool check_solution(const LinearProgram& lp, const LpSolution& sol);

}  // namespace thermo
