#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace turan {

/// The 2k-constraint block system over nonnegative a_1..a_k and b_ij (i < j):
///   sum_{i<=l} a_i + sum_{i<j<=l} b_ij >= c l^{3/2}        l = 1..k
///   sum_{l<i} b_li^2 + 4 a_i^2 + sum_{l>i} b_il^2 <= t + delta   i = 1..k
/// Variables are ordered a_1..a_k, then b_ij lexicographically.
class InequalitySystem {
 public:
  InequalitySystem(std::size_t k, double t, double c, double delta);

  std::size_t k() const noexcept { return k_; }
  double t() const noexcept { return t_; }
  double c() const noexcept { return c_; }
  double delta() const noexcept { return delta_; }

  std::size_t variable_count() const noexcept { return k_ + k_ * (k_ - 1) / 2; }
  std::size_t constraint_count() const noexcept { return 2 * k_; }

  /// 1-based indices, as in a_i and b_ij.
  std::size_t a_index(std::size_t i) const;
  std::size_t b_index(std::size_t i, std::size_t j) const;

  /// Right-hand side of the l-th cumulative constraint, c l^{3/2}.
  double cumulative_rhs(std::size_t l) const;
  double cap() const noexcept { return t_ + delta_; }

  /// Variables of cap constraint i: a_i first, then b_li (l < i) and b_il (l > i) by l.
  std::vector<std::size_t> cap_variables(std::size_t i) const;
  /// Variables of the l-th cumulative constraint (a_1..a_l and b_ij, j <= l).
  std::vector<std::size_t> cumulative_variables(std::size_t l) const;

 private:
  std::size_t k_;
  double t_;
  double c_;
  double delta_;
};

inline InequalitySystem build_system(std::size_t k, double t, double c, double delta) {
  return InequalitySystem(k, t, c, delta);
}

/// max(0, c l^{3/2} - cumulative_l, quad_i - (t + delta), -x_v) over all l, i, v.
/// Throws DimensionMismatch if x has the wrong length.
double evaluate_violation(const InequalitySystem& sys, std::span<const double> x);

enum class FeasibilityStatus {
  Feasible,
  InfeasibleNumeric,
  // No point within feas_tol, but the evidence falls short of the infeasibility rule.
  Inconclusive,
};

std::string_view status_name(FeasibilityStatus status) noexcept;

struct SolverOptions {
  double feas_tol = 1e-9;
  std::size_t restarts = 64;
  std::size_t max_iterations = 100000;  // projection sweeps per restart
  std::uint64_t seed = 0;
};

struct FeasibilityReport {
  FeasibilityStatus status = FeasibilityStatus::Inconclusive;
  std::vector<double> point;   // best point found (the feasible one when Feasible)
  double max_violation = 0.0;  // of `point`
  double gap = 0.0;            // smallest max violation across restarts
  std::size_t restarts = 0;    // restarts run
  std::size_t iterations = 0;  // sweeps summed over restarts
  bool converged = false;      // every restart's iterates settled
  std::uint64_t seed = 0;
};

/// Phase-1 search by cyclic projections in the scaled coordinates (2a_i, b_ij), where every
/// cap is a Euclidean ball. Feasible when some iterate re-checks to max_violation <= feas_tol;
/// InfeasibleNumeric when every restart's iterates settle with best violation above
/// 10 feas_tol. Restarts start uniformly in [0, sqrt(t + delta)]^d from substreams of `seed`.
FeasibilityReport solve_feasibility(const InequalitySystem& sys, const SolverOptions& options = {});

/// Serialized as "key: value" lines; doubles at 17 significant digits.
void write_report(std::ostream& out, const InequalitySystem& sys, const FeasibilityReport& r);

/// 13 sqrt((t + delta)/52): max of 3x + z on 4x^2 + z^2 = t + delta, x, z >= 0.
double k2_closed_form_max(double t, double delta);

/// (sqrt(13)/14)(sqrt(8) - 1) sqrt(t).
double upper_constant(double t);

/// Sufficient test that the k = 2 system is empty: c (1 + sqrt 8) exceeds the closed-form
/// maximum by more than rounding can explain.
bool k2_infeasibility_test(double t, double delta, double c);

/// 52 (sqrt(t/52) + eps/26 (1 + 2^{3/2}))^2 - t.
double delta_threshold(double t, double eps);

struct BisectionProbe {
  double c = 0.0;
  FeasibilityStatus status = FeasibilityStatus::Inconclusive;
  double max_violation = 0.0;
};

struct BisectionResult {
  double threshold = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<BisectionProbe> trace;
};

/// Bisection on c between a feasible c_lo and a non-feasible c_hi until hi - lo <= tol.
/// Throws BracketInvalid if the endpoints do not bracket.
BisectionResult bisect_threshold(std::size_t k, double t, double delta, double c_lo, double c_hi,
                                 double tol, const SolverOptions& options = {});

}  // namespace turan
