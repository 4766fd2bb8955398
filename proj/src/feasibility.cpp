#include "turan/feasibility.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <string>

#include "parallel.hpp"
#include "turan/errors.hpp"
#include "turan/random.hpp"

namespace turan {

InequalitySystem::InequalitySystem(std::size_t k, double t, double c, double delta)
    : k_(k), t_(t), c_(c), delta_(delta) {
  if (k < 1) throw DomainError("k must be at least 1");
  if (!(t >= 1.0)) throw DomainError("t must be at least 1");
  if (!(c >= 0.0)) throw DomainError("c must be nonnegative");
  if (!(delta >= 0.0)) throw DomainError("delta must be nonnegative");
}

std::size_t InequalitySystem::a_index(std::size_t i) const {
  if (i < 1 || i > k_) throw std::out_of_range("a index out of range");
  return i - 1;
}

std::size_t InequalitySystem::b_index(std::size_t i, std::size_t j) const {
  if (i < 1 || i >= j || j > k_) throw std::out_of_range("b index requires 1 <= i < j <= k");
  // Pairs (i', j') with i' < i come first: sum_{r=1}^{i-1} (k - r).
  const std::size_t before = (i - 1) * k_ - (i - 1) * i / 2;
  return k_ + before + (j - i - 1);
}

double InequalitySystem::cumulative_rhs(std::size_t l) const {
  const double ld = static_cast<double>(l);
  return c_ * ld * std::sqrt(ld);
}

std::vector<std::size_t> InequalitySystem::cap_variables(std::size_t i) const {
  std::vector<std::size_t> vars{a_index(i)};
  for (std::size_t l = 1; l <= k_; ++l) {
    if (l < i) vars.push_back(b_index(l, i));
    if (l > i) vars.push_back(b_index(i, l));
  }
  return vars;
}

std::vector<std::size_t> InequalitySystem::cumulative_variables(std::size_t l) const {
  std::vector<std::size_t> vars;
  for (std::size_t i = 1; i <= l; ++i) vars.push_back(a_index(i));
  for (std::size_t i = 1; i <= l; ++i) {
    for (std::size_t j = i + 1; j <= l; ++j) vars.push_back(b_index(i, j));
  }
  return vars;
}

double evaluate_violation(const InequalitySystem& sys, std::span<const double> x) {
  if (x.size() != sys.variable_count()) {
    throw DimensionMismatch("assignment has " + std::to_string(x.size()) +
                            " entries, system has " + std::to_string(sys.variable_count()));
  }
  const std::size_t k = sys.k();
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, -v);
  for (std::size_t l = 1; l <= k; ++l) {
    double sum = 0.0;
    for (std::size_t v : sys.cumulative_variables(l)) sum += x[v];
    worst = std::max(worst, sys.cumulative_rhs(l) - sum);
  }
  for (std::size_t i = 1; i <= k; ++i) {
    double quad = 4.0 * x[sys.a_index(i)] * x[sys.a_index(i)];
    for (std::size_t l = 1; l <= k; ++l) {
      if (l < i) quad += x[sys.b_index(l, i)] * x[sys.b_index(l, i)];
      if (l > i) quad += x[sys.b_index(i, l)] * x[sys.b_index(i, l)];
    }
    worst = std::max(worst, quad - sys.cap());
  }
  return worst;
}

std::string_view status_name(FeasibilityStatus status) noexcept {
  switch (status) {
    case FeasibilityStatus::Feasible:
      return "Feasible";
    case FeasibilityStatus::InfeasibleNumeric:
      return "InfeasibleNumeric";
    case FeasibilityStatus::Inconclusive:
      return "Inconclusive";
  }
  return "Unknown";
}

namespace {

// Iterates settle when a full sweep moves no coordinate by more than this (scaled units).
constexpr double kSettleStep = 1e-13;
// Sweeps between checks of the early-exit flag.
constexpr std::size_t kCancelCheck = 256;

// The system in coordinates y = 2a_i, b_ij, where every cap is a Euclidean ball, stored
// in column groups: group l holds (2a_l, b_1l, .., b_{l-1,l}) at offset l(l-1)/2. The l-th
// cumulative constraint then reads a prefix of y, and the normals w_l of the cumulative
// halfspaces are nested: w_m . w_l = |w_min(m,l)|^2.
class ScaledSystem {
 public:
  // Sets are tightened by `margin` in violation units so that limit points satisfy the
  // stated constraints strictly.
  ScaledSystem(const InequalitySystem& sys, double margin)
      : k_(sys.k()), dim_(sys.variable_count()), cap_(sys.cap()), margin_(margin) {
    radius_ = std::sqrt(std::max(0.0, cap_ - margin));
    norm2_.resize(k_);
    rhs_.resize(k_);
    double norm2 = 0.0;
    for (std::size_t l = 1; l <= k_; ++l) {
      norm2 += 0.25 + static_cast<double>(l - 1);
      norm2_[l - 1] = norm2;
      rhs_[l - 1] = sys.cumulative_rhs(l);
    }
    // Map between the public variable order and the grouped one.
    to_public_.resize(dim_);
    for (std::size_t l = 1; l <= k_; ++l) {
      to_public_[offset(l)] = sys.a_index(l);
      for (std::size_t i = 1; i < l; ++i) to_public_[offset(l) + i] = sys.b_index(i, l);
    }
    steps_.resize(k_);
    dots_.resize(k_);
  }

  std::size_t dim() const noexcept { return dim_; }

  std::vector<double> from_public(std::span<const double> x) const {
    std::vector<double> y(dim_);
    for (std::size_t v = 0; v < dim_; ++v) y[v] = x[to_public_[v]];
    for (std::size_t l = 1; l <= k_; ++l) y[offset(l)] *= 2.0;
    return y;
  }

  std::vector<double> to_public(std::span<const double> y) const {
    std::vector<double> x(dim_);
    for (std::size_t v = 0; v < dim_; ++v) x[to_public_[v]] = y[v];
    for (std::size_t l = 1; l <= k_; ++l) x[to_public_[offset(l)]] *= 0.5;
    return x;
  }

  /// Projects onto the cumulative halfspaces in order l = 1..k.
  void project_halfspaces(std::vector<double>& y) {
    cumulative_dots(y, dots_);
    double shift = 0.0;  // sum_{l' < l} step_l' |w_l'|^2, the change in w_l . y so far
    for (std::size_t l = 0; l < k_; ++l) {
      const double dot = dots_[l] + shift;
      const double step = std::max(0.0, (rhs_[l] + margin_ - dot) / norm2_[l]);
      steps_[l] = step;
      shift += step * norm2_[l];
    }
    // Coordinate v in group g moves by w_v * sum_{l >= g} step_l.
    double tail = 0.0;
    for (std::size_t l = k_; l >= 1; --l) {
      tail += steps_[l - 1];
      if (tail == 0.0) continue;
      double* group = y.data() + offset(l);
      group[0] += 0.5 * tail;
      for (std::size_t i = 1; i < l; ++i) group[i] += tail;
    }
  }

  /// Projects onto cap balls i = 1..k.
  void project_balls(std::vector<double>& y) const {
    for (std::size_t i = 1; i <= k_; ++i) {
      const double norm2 = ball_norm2(y, i);
      if (norm2 <= radius_ * radius_) continue;
      const double scale = radius_ / std::sqrt(norm2);
      double* group = y.data() + offset(i);
      for (std::size_t m = 0; m < i; ++m) group[m] *= scale;
      for (std::size_t l = i + 1; l <= k_; ++l) y[offset(l) + i] *= scale;
    }
  }

  /// Same quantity as evaluate_violation.
  double violation(const std::vector<double>& y) {
    double worst = 0.0;
    for (double v : y) worst = std::max(worst, -v);
    cumulative_dots(y, dots_);
    for (std::size_t l = 0; l < k_; ++l) worst = std::max(worst, rhs_[l] - dots_[l]);
    for (std::size_t i = 1; i <= k_; ++i) worst = std::max(worst, ball_norm2(y, i) - cap_);
    return worst;
  }

 private:
  static std::size_t offset(std::size_t l) noexcept { return l * (l - 1) / 2; }

  void cumulative_dots(const std::vector<double>& y, std::vector<double>& out) const {
    double running = 0.0;
    for (std::size_t l = 1; l <= k_; ++l) {
      const double* group = y.data() + offset(l);
      double sum = 0.5 * group[0];
      for (std::size_t i = 1; i < l; ++i) sum += group[i];
      running += sum;
      out[l - 1] = running;
    }
  }

  double ball_norm2(const std::vector<double>& y, std::size_t i) const {
    const double* group = y.data() + offset(i);
    double norm2 = 0.0;
    for (std::size_t m = 0; m < i; ++m) norm2 += group[m] * group[m];
    for (std::size_t l = i + 1; l <= k_; ++l) norm2 += y[offset(l) + i] * y[offset(l) + i];
    return norm2;
  }

  std::size_t k_;
  std::size_t dim_;
  double cap_;
  double margin_;
  double radius_ = 0.0;
  std::vector<double> norm2_;
  std::vector<double> rhs_;
  std::vector<std::size_t> to_public_;
  std::vector<double> steps_;
  std::vector<double> dots_;
};

struct RestartResult {
  bool feasible = false;
  bool converged = false;
  double best_violation = std::numeric_limits<double>::infinity();
  std::vector<double> best_point;
  std::size_t iterations = 0;
};

// Cyclic projections: halfspaces, balls, then the orthant, so every recorded iterate is
// nonnegative. With bounded convex sets the sweep map settles on a point of the
// intersection when it is nonempty and on a limit cycle otherwise.
RestartResult run_restart(ScaledSystem s, std::span<const double> x0,
                          const SolverOptions& options,
                          const std::atomic<std::size_t>& feasible_floor, std::size_t index) {
  std::vector<double> y = s.from_public(x0);
  std::vector<double> previous(s.dim());
  std::vector<double> best;
  RestartResult result;
  for (std::size_t sweep = 0; sweep < options.max_iterations; ++sweep) {
    if (sweep % kCancelCheck == 0 && feasible_floor.load(std::memory_order_relaxed) < index) {
      break;
    }
    previous = y;
    s.project_halfspaces(y);
    s.project_balls(y);
    double moved = 0.0;
    for (std::size_t v = 0; v < y.size(); ++v) {
      y[v] = std::max(y[v], 0.0);
      moved = std::max(moved, std::abs(y[v] - previous[v]));
    }
    ++result.iterations;

    const double violation = s.violation(y);
    if (violation < result.best_violation) {
      result.best_violation = violation;
      best = y;
    }
    if (violation <= options.feas_tol) {
      result.feasible = true;
      result.converged = true;
      break;
    }
    if (moved <= kSettleStep) {
      result.converged = true;
      break;
    }
  }
  if (!best.empty()) result.best_point = s.to_public(best);
  return result;
}

}  // namespace

FeasibilityReport solve_feasibility(const InequalitySystem& sys, const SolverOptions& options) {
  if (!(options.feas_tol > 0.0)) throw DomainError("feas_tol must be positive");
  FeasibilityReport report;
  report.seed = options.seed;

  const std::vector<double> origin(sys.variable_count(), 0.0);
  if (const double v = evaluate_violation(sys, origin); v <= options.feas_tol) {
    report.status = FeasibilityStatus::Feasible;
    report.point = origin;
    report.max_violation = v;
    report.gap = v;
    report.converged = true;
    return report;
  }

  const ScaledSystem scaled(sys, 0.5 * options.feas_tol);
  const double side = std::sqrt(sys.cap());
  std::vector<RestartResult> results(options.restarts);
  std::atomic<std::size_t> feasible_floor{std::numeric_limits<std::size_t>::max()};
  detail::parallel_for(options.restarts, [&](std::size_t r) {
    std::seed_seq seq{options.seed, static_cast<std::uint64_t>(r)};
    std::mt19937_64 rng(seq);
    std::vector<double> x0(sys.variable_count());
    for (double& v : x0) v = side * unit_double(rng);
    results[r] = run_restart(scaled, x0, options, feasible_floor, r);
    if (results[r].feasible) {
      std::size_t current = feasible_floor.load();
      while (r < current && !feasible_floor.compare_exchange_weak(current, r)) {
      }
    }
  });

  // Restarts past the first feasible one may have been cut short; they are not reported.
  const std::size_t first_feasible = feasible_floor.load();
  const std::size_t used =
      first_feasible < options.restarts ? first_feasible + 1 : options.restarts;
  report.restarts = used;
  report.converged = true;
  std::size_t best = 0;
  for (std::size_t r = 0; r < used; ++r) {
    report.iterations += results[r].iterations;
    report.converged = report.converged && results[r].converged;
    if (results[r].best_violation < results[best].best_violation) best = r;
  }
  if (first_feasible < options.restarts) best = first_feasible;
  if (used > 0) {
    report.gap = results[best].best_violation;
    report.point = results[best].best_point;
    // The report's verdict rests on an independent re-evaluation of the returned point.
    report.max_violation = evaluate_violation(sys, report.point);
  }
  if (first_feasible < options.restarts && report.max_violation <= options.feas_tol) {
    report.status = FeasibilityStatus::Feasible;
  } else if (report.converged && report.gap > 10.0 * options.feas_tol) {
    report.status = FeasibilityStatus::InfeasibleNumeric;
  } else {
    report.status = FeasibilityStatus::Inconclusive;
  }
  return report;
}

void write_report(std::ostream& out, const InequalitySystem& sys, const FeasibilityReport& r) {
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::setprecision(17);
  out << "status: " << status_name(r.status) << '\n';
  out << "k: " << sys.k() << '\n';
  out << "t: " << sys.t() << '\n';
  out << "c: " << sys.c() << '\n';
  out << "delta: " << sys.delta() << '\n';
  out << "max_violation: " << r.max_violation << '\n';
  out << "gap: " << r.gap << '\n';
  out << "restarts: " << r.restarts << '\n';
  out << "iterations: " << r.iterations << '\n';
  out << "seed: " << r.seed << '\n';
  if (r.status == FeasibilityStatus::Feasible) {
    out << "point:";
    for (double v : r.point) out << ' ' << v;
    out << '\n';
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

double k2_closed_form_max(double t, double delta) {
  if (!(t + delta > 0.0)) throw DomainError("t + delta must be positive");
  return 13.0 * std::sqrt((t + delta) / 52.0);
}

double upper_constant(double t) {
  return std::sqrt(13.0) / 14.0 * (std::sqrt(8.0) - 1.0) * std::sqrt(t);
}

bool k2_infeasibility_test(double t, double delta, double c) {
  // A few ulps of slack so rounding alone never certifies emptiness.
  constexpr double kSlack = 1e-14;
  return c * (1.0 + std::sqrt(8.0)) > k2_closed_form_max(t, delta) * (1.0 + kSlack);
}

double delta_threshold(double t, double eps) {
  const double inner = std::sqrt(t / 52.0) + eps / 26.0 * (1.0 + std::pow(2.0, 1.5));
  return 52.0 * inner * inner - t;
}

BisectionResult bisect_threshold(std::size_t k, double t, double delta, double c_lo, double c_hi,
                                 double tol, const SolverOptions& options) {
  if (!(tol > 0.0)) throw DomainError("tol must be positive");
  if (!(c_lo < c_hi)) throw BracketInvalid("c_lo must be below c_hi");
  BisectionResult result;
  auto probe = [&](double c) {
    const auto report = solve_feasibility(InequalitySystem(k, t, c, delta), options);
    result.trace.push_back({c, report.status, report.max_violation});
    return report.status == FeasibilityStatus::Feasible;
  };
  if (!probe(c_lo)) {
    throw BracketInvalid("system is not feasible at c_lo = " + std::to_string(c_lo));
  }
  if (probe(c_hi)) throw BracketInvalid("system is feasible at c_hi = " + std::to_string(c_hi));
  double lo = c_lo;
  double hi = c_hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (probe(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  result.lo = lo;
  result.hi = hi;
  result.threshold = 0.5 * (lo + hi);
  return result;
}

}  // namespace turan
