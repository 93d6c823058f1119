#pragma once

// Brute-force LP oracle: enumerates every basic solution of the standard
// form. Independent of the simplex code path (no pivoting, no tableau).

#include <optional>
#include <vector>

#include "thermo/linear_program.hpp"

namespace thermo::testing {

struct OracleResult {
  LpStatus status;
  std::optional<Rational> optimum;
};

namespace detail {

// Solves A_S x = b for the columns in `cols` by Gauss-Jordan elimination.
// Returns nullopt if the columns are dependent or the system inconsistent.
inline std::optional<Vector> solve_columns(const std::vector<Vector>& A, const Vector& b,
                                           const std::vector<std::size_t>& cols) {
  const std::size_t m = A.size();
  const std::size_t k = cols.size();
  std::vector<Vector> M(m, Vector(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) M[i][j] = A[i][cols[j]];
    M[i][k] = b[i];
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = row;
    while (piv < m && M[piv][c].is_zero()) ++piv;
    if (piv == m) return std::nullopt;  // dependent columns
    std::swap(M[piv], M[row]);
    const Rational inv = Rational(1) / M[row][c];
    for (auto& x : M[row]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || M[i][c].is_zero()) continue;
      const Rational f = M[i][c];
      for (std::size_t j = 0; j <= k; ++j) M[i][j] -= f * M[row][j];
    }
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (!M[i][k].is_zero()) return std::nullopt;  // inconsistent
  Vector x(k);
  for (std::size_t j = 0; j < k; ++j) x[j] = M[j][k];
  return x;
}

// Minimum of c.x over the basic feasible solutions of {A x = b, x >= 0}.
inline std::optional<Rational> min_over_vertices(const std::vector<Vector>& A, const Vector& b, const Vector& c) {
  const std::size_t N = c.size();
  const std::size_t max_k = std::min(A.size(), N);
  std::optional<Rational> best;
  std::vector<std::size_t> cols;
  auto visit = [&](auto&& self, std::size_t start) -> void {
    if (const auto x = solve_columns(A, b, cols)) {
      bool feasible = true;
      Rational value;
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if ((*x)[j].sign() < 0) feasible = false;
        value += c[cols[j]] * (*x)[j];
      }
      if (feasible && (!best || value < *best)) best = value;
    }
    if (cols.size() == max_k) return;
    for (std::size_t j = start; j < N; ++j) {
      cols.push_back(j);
      self(self, j + 1);
      cols.pop_back();
    }
  };
  visit(visit, 0);
  return best;
}

}  // namespace detail

inline OracleResult brute_force_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars;
  const std::size_t m_le = lp.le_matrix.size();
  const std::size_t N = n + m_le;
  std::vector<Vector> A;
  Vector b;
  for (std::size_t i = 0; i < lp.eq_matrix.size(); ++i) {
    Vector row = lp.eq_matrix[i];
    row.resize(N);
    A.push_back(std::move(row));
    b.push_back(lp.eq_rhs[i]);
  }
  for (std::size_t i = 0; i < m_le; ++i) {
    Vector row = lp.le_matrix[i];
    row.resize(N);
    row[n + i] = 1;
    A.push_back(std::move(row));
    b.push_back(lp.le_rhs[i]);
  }
  Vector c = lp.objective;
  c.resize(N);

  const auto primal = detail::min_over_vertices(A, b, c);
  if (!primal) return {LpStatus::Infeasible, std::nullopt};

  // Unbounded iff some normalized recession direction d >= 0, A d = 0,
  // sum d = 1 has c.d < 0; its minimum is attained at a vertex.
  std::vector<Vector> cone = A;
  Vector cone_rhs(A.size());
  cone.push_back(Vector(N, Rational(1)));
  cone_rhs.push_back(1);
  if (const auto ray = detail::min_over_vertices(cone, cone_rhs, c); ray && ray->sign() < 0) {
    return {LpStatus::Unbounded, std::nullopt};
  }
  return {LpStatus::Optimal, primal};
}

}  // namespace thermo::testing
