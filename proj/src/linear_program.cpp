#include "thermo/linear_program.hpp"

#include <algorithm>
#include <string>

namespace thermo {

void LinearProgram::add_eq(Vector row, Rational rhs) {
  eq_matrix.push_back(std::move(row));
  eq_rhs.push_back(std::move(rhs));
}

void LinearProgram::add_le(Vector row, Rational rhs) {
  le_matrix.push_back(std::move(row));
  le_rhs.push_back(std::move(rhs));
}

void LinearProgram::validate() const {
  if (objective.size() != num_vars) throw std::invalid_argument("objective length != num_vars");
  if (eq_matrix.size() != eq_rhs.size()) throw std::invalid_argument("eq_matrix/eq_rhs size mismatch");
  if (le_matrix.size() != le_rhs.size()) throw std::invalid_argument("le_matrix/le_rhs size mismatch");
  for (const auto& row : eq_matrix)
    if (row.size() != num_vars) throw std::invalid_argument("equality row length != num_vars");
  for (const auto& row : le_matrix)
    if (row.size() != num_vars) throw std::invalid_argument("inequality row length != num_vars");
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

// Columns: [structural 0..n) [slack n..n+m_le) [artificial n+m_le..n+m_le+m)
// Each row i is scaled by sign_[i] so that its right-hand side is >= 0.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp)
      : n_(lp.num_vars), m_le_(lp.le_matrix.size()), m_(lp.num_rows()), width_(n_ + m_le_ + m_) {
    rows_.assign(m_, Vector(width_ + 1));
    sign_.assign(m_, 1);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool is_eq = i < lp.eq_matrix.size();
      const std::size_t k = is_eq ? i : i - lp.eq_matrix.size();
      const Vector& a = is_eq ? lp.eq_matrix[i] : lp.le_matrix[k];
      const Rational& b = is_eq ? lp.eq_rhs[i] : lp.le_rhs[k];
      sign_[i] = b.sign() < 0 ? -1 : 1;
      Vector& row = rows_[i];
      for (std::size_t j = 0; j < n_; ++j) row[j] = sign_[i] < 0 ? -a[j] : a[j];
      if (!is_eq) row[n_ + k] = sign_[i];
      row[n_ + m_le_ + i] = 1;
      row[width_] = b.abs();
      basis_[i] = n_ + m_le_ + i;
    }
  }

  // Phase 1: minimize the sum of artificials. Returns true if feasible.
  bool phase_one() {
    obj_.assign(width_ + 1, Rational());
    for (std::size_t j = n_ + m_le_; j < width_; ++j) obj_[j] = 1;
    for (const auto& row : rows_)
      for (std::size_t j = 0; j <= width_; ++j)
        if (!row[j].is_zero()) obj_[j] -= row[j];
    run(width_);
    return (-obj_[width_]).is_zero();
  }

  // Farkas multipliers in original row order, read off the reduced costs of
  // the artificial columns at the phase-1 optimum.
  Vector farkas() const {
    Vector y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational pi = Rational(1) - obj_[n_ + m_le_ + i];
      y[i] = sign_[i] < 0 ? pi : -pi;
    }
    return y;
  }

  // Pivots remaining (zero-valued) artificials out of the basis, dropping
  // rows that turn out to be linearly dependent.
  void expel_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < n_ + m_le_) {
        ++i;
        continue;
      }
      std::size_t col = width_;
      for (std::size_t j = 0; j < n_ + m_le_; ++j) {
        if (!rows_[i][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col == width_) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        continue;
      }
      pivot(i, col);
      ++i;
    }
  }

  // Phase 2 over structural and slack columns. Returns the entering column
  // that proved unboundedness, or nullopt at optimality.
  std::optional<std::size_t> phase_two(const Vector& c) {
    obj_.assign(width_ + 1, Rational());
    for (std::size_t j = 0; j < n_; ++j) obj_[j] = c[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t b = basis_[i];
      if (b >= n_ || c[b].is_zero()) continue;
      for (std::size_t j = 0; j <= width_; ++j)
        if (!rows_[i][j].is_zero()) obj_[j] -= c[b] * rows_[i][j];
    }
    return run(n_ + m_le_);
  }

  Vector point() const {
    Vector x(n_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][width_];
    return x;
  }

  Vector ray(std::size_t entering) const {
    Vector d(n_);
    if (entering < n_) d[entering] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < n_) d[basis_[i]] = -rows_[i][entering];
    return d;
  }

 private:
  // Bland's rule over columns [0, allowed).
  std::optional<std::size_t> run(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (obj_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return std::nullopt;

      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter].sign() <= 0) continue;
        Rational ratio = rows_[i][width_] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == rows_.size()) return enter;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Vector& prow = rows_[r];
    const Rational inv = Rational(1) / prow[c];
    for (auto& x : prow)
      if (!x.is_zero()) x *= inv;
    auto eliminate = [&](Vector& row) {
      if (row[c].is_zero()) return;
      const Rational f = row[c];
      for (std::size_t j = 0; j <= width_; ++j)
        if (!prow[j].is_zero()) row[j] -= f * prow[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (i != r) eliminate(rows_[i]);
    eliminate(obj_);
    basis_[r] = c;
  }

  std::size_t n_, m_le_, m_, width_;
  std::vector<Vector> rows_;
  Vector obj_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpSolution solve(const LinearProgram& lp) {
  lp.validate();
  Tableau tableau(lp);
  LpSolution sol;
  if (!tableau.phase_one()) {
    sol.status = LpStatus::Infeasible;
    sol.certificate = tableau.farkas();
    return sol;
  }
  tableau.expel_artificials();

  const bool pure_feasibility =
      std::all_of(lp.objective.begin(), lp.objective.end(), [](const Rational& c) { return c.is_zero(); });
  if (!pure_feasibility) {
    if (const auto entering = tableau.phase_two(lp.objective)) {
      sol.status = LpStatus::Unbounded;
      sol.point = tableau.point();
      sol.ray = tableau.ray(*entering);
      return sol;
    }
  }
  sol.status = LpStatus::Optimal;
  sol.point = tableau.point();
  sol.optimum = dot(lp.objective, *sol.point);
  return sol;
}

namespace {

bool point_feasible(const LinearProgram& lp, const Vector& x) {
  if (x.size() != lp.num_vars) return false;
  for (const auto& xi : x)
    if (xi.sign() < 0) return false;
  for (std::size_t i = 0; i < lp.eq_matrix.size(); ++i)
    if (dot(lp.eq_matrix[i], x) != lp.eq_rhs[i]) return false;
  for (std::size_t i = 0; i < lp.le_matrix.size(); ++i)
    if (dot(lp.le_matrix[i], x) > lp.le_rhs[i]) return false;
  return true;
}

bool farkas_valid(const LinearProgram& lp, const Vector& y) {
  const std::size_t m_eq = lp.eq_matrix.size();
  if (y.size() != lp.num_rows()) return false;
  for (std::size_t i = m_eq; i < y.size(); ++i)
    if (y[i].sign() < 0) return false;
  Vector combo(lp.num_vars);
  Rational rhs;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].is_zero()) continue;
    const bool is_eq = i < m_eq;
    const Vector& row = is_eq ? lp.eq_matrix[i] : lp.le_matrix[i - m_eq];
    for (std::size_t j = 0; j < lp.num_vars; ++j) combo[j] += y[i] * row[j];
    rhs += y[i] * (is_eq ? lp.eq_rhs[i] : lp.le_rhs[i - m_eq]);
  }
  return std::all_of(combo.begin(), combo.end(), [](const Rational& v) { return v.sign() >= 0; }) && rhs.sign() < 0;
}

bool ray_valid(const LinearProgram& lp, const Vector& d) {
  if (d.size() != lp.num_vars) return false;
  for (const auto& di : d)
    if (di.sign() < 0) return false;
  for (const auto& row : lp.eq_matrix)
    if (!dot(row, d).is_zero()) return false;
  for (const auto& row : lp.le_matrix)
    if (dot(row, d).sign() > 0) return false;
  return dot(lp.objective, d).sign() < 0;
}

}  // namespace

bool check_solution(const LinearProgram& lp, const LpSolution& sol) {
  switch (sol.status) {
    case LpStatus::Optimal:
      return sol.point && sol.optimum && point_feasible(lp, *sol.point) && dot(lp.objective, *sol.point) == *sol.optimum;
    case LpStatus::Infeasible:
      return sol.certificate && farkas_valid(lp, *sol.certificate);
    case LpStatus::Unbounded:
      return sol.point && sol.ray && point_feasible(lp, *sol.point) && ray_valid(lp, *sol.ray);
  }
  return false;
}

}  // namespace thermo
