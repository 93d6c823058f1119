#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "thermo/linear_program.hpp"
#include "thermo/matrix.hpp"
#include "thermo/resource.hpp"

namespace thermo {

struct LorenzPoint {
  Rational t;
  Rational L;
  friend bool operator==(const LorenzPoint&, const LorenzPoint&) = default;
};

/// Concave piecewise-linear curve from (0,0) to (1,1), stored as its
/// breakpoints with collinear interior points removed.
class LorenzCurve {
 public:
  explicit LorenzCurve(std::vector<LorenzPoint> points);

  const std::vector<LorenzPoint>& points() const { return points_; }
  /// Number of interior breakpoints.
  std::size_t kinks() const { return points_.size() - 2; }
  /// Linear interpolation; t must lie in [0, 1].
  Rational operator()(const Rational& t) const;

 private:
  std::vector<LorenzPoint> points_;
};

LorenzCurve lorenz_curve(const ResourceState& r);

/// a(t) >= b(t) on [0, 1], decided exactly at the union of breakpoints.
bool lorenz_dominates(const LorenzCurve& a, const LorenzCurve& b);

/// Column-stochastic, entrywise non-negative n'×n matrix with G g = g'.
struct GibbsStochasticMap {
  Matrix matrix;
};

/// True iff G >= 0, every column of G sums to 1, G p = p' and G g = g'.
bool is_gibbs_stochastic_witness(const Matrix& G, const ResourceState& from, const ResourceState& to);

struct Convertibility {
  bool convertible = false;
  std::optional<GibbsStochasticMap> witness;
  /// Farkas multipliers for the rows [G p = p'; G g = g'; column sums = 1]
  /// when no witness exists.
  std::optional<Vector> certificate;
};

/// Feasibility program for G: variable G(i, j) at index i * n + j, rows
/// [G p = p'; G g = g'; column sums = 1], objective zero.
LinearProgram convertibility_program(const ResourceState& from, const ResourceState& to);

/// Decides from ≻ to by searching for a Gibbs-stochastic G with the exact LP.
Convertibility convertible_lp(const ResourceState& from, const ResourceState& to);

/// sum_i g_i (r_i - t)_+
Rational hinge_sum(const ResourceState& r, const Rational& t);
/// sum_i g_i |r_i - t|
Rational abs_deviation_sum(const ResourceState& r, const Rational& t);

/// Breakpoint set {0} ∪ {r_i} ∪ {r'_i}, sorted and deduplicated.
Vector hinge_breakpoints(const ResourceState& from, const ResourceState& to);

/// sum g'(r'-t)_+ <= sum g(r-t)_+ for all real t.
bool hinge_condition_d(const ResourceState& from, const ResourceState& to);
/// sum g'|r'-t| <= sum g|r-t| for all real t.
bool hinge_condition_e(const ResourceState& from, const ResourceState& to);

class KinkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Kink of a two-level Lorenz curve. `boltzmann` is e^{-beta E} of the
/// background (> 0), `resource_boltzmann` is e^{-beta' E} of the resource
/// (>= 0; 0 is the ground state). Throws KinkError when they are equal.
LorenzPoint two_level_kink(const Rational& boltzmann, const Rational& resource_boltzmann);

/// The two-level state p = (1, e') / (1 + e') against g = (1, e) / (1 + e).
ResourceState two_level_state(const Rational& boltzmann, const Rational& resource_boltzmann);

}  // namespace thermo
