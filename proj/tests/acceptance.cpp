// Acceptance criteria, one per invocation: `acceptance N` prints a single PASS/FAIL line and
// exits nonzero on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracles.hpp"
#include "turan/analysis.hpp"
#include "turan/errors.hpp"
#include "turan/feasibility.hpp"
#include "turan/furedi.hpp"
#include "turan/layered.hpp"
#include "turan/random.hpp"

using namespace turan;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_divisor_pairs(std::uint64_t max_p) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t p = 3; p <= max_p; ++p) {
    if (!oracle::trial_division_prime(p)) continue;
    for (std::uint64_t t = 1; t < p; ++t) {
      if ((p - 1) % t == 0) out.emplace_back(p, t);
    }
  }
  return out;
}

std::string fmt(double x, int digits = 6) {
  std::ostringstream s;
  s.precision(digits);
  s << x;
  return s.str();
}

Outcome furedi_certification() {
  std::size_t graphs = 0;
  for (auto [p, t] : prime_divisor_pairs(101)) {
    const FurediGraph h = build_furedi(PrimeModulus(p), t);
    if (h.order() != (p * p - 1) / t) {
      return {false, "order mismatch at p=" + std::to_string(p) + " t=" + std::to_string(t)};
    }
    for (Vertex v = 0; v < h.order(); ++v) {
      if (h.adjacency().degree(v) != p) {
        return {false, "degree mismatch at p=" + std::to_string(p) + " t=" + std::to_string(t)};
      }
    }
    if (!is_k2_free(strip_loops(h), t)) {
      return {false, "K_{2,t+1} found at p=" + std::to_string(p) + " t=" + std::to_string(t)};
    }
    ++graphs;
  }
  return {true, std::to_string(graphs) + " graphs certified"};
}

Outcome codegree_partitions() {
  std::size_t graphs = 0;
  for (auto [p, t] : prime_divisor_pairs(61)) {
    const FurediGraph h = build_furedi(PrimeModulus(p), t);
    try {
      const auto r = codegree_partition(h);
      bool sizes = r.classes.size() == p + 1 && r.within_class_codegree == 0 &&
                   r.cross_class_codegree == t;
      for (const auto& c : r.classes) sizes = sizes && c.size() == (p - 1) / t;
      if (!sizes) return {false, "class shape at p=" + std::to_string(p)};
    } catch (const Error& e) {
      return {false, e.what()};
    }
    ++graphs;
  }
  return {true, std::to_string(graphs) + " graphs partitioned"};
}

Outcome spectra() {
  std::size_t graphs = 0;
  double worst = 0.0;
  for (auto [p, t] : prime_divisor_pairs(31)) {
    const FurediGraph h = build_furedi(PrimeModulus(p), t);
    try {
      const auto r = spectrum(h, 1e-6);
      if (r.multiplicities.front() != 1) return {false, "q not simple at p=" + std::to_string(p)};
      for (const auto& c : r.classification) worst = std::max(worst, c.distance);
    } catch (const Error& e) {
      return {false, e.what()};
    }
    ++graphs;
  }
  return {true, std::to_string(graphs) + " spectra, max distance " + fmt(worst, 3)};
}

Outcome mixing() {
  std::size_t audits = 0;
  double tightest = 0.0;
  for (std::uint64_t p : {13, 17, 29}) {
    const FurediGraph h = build_furedi(PrimeModulus(p), 1);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 200; ++i) {
      auto subset = random_permutation<Vertex>(h.order(), rng);
      subset.resize(1 + uniform_below(rng, h.order()));
      const auto audit = mixing_audit(h, subset);
      if (!audit.passes()) return {false, "violation at p=" + std::to_string(p)};
      tightest = std::max(tightest, audit.observed / audit.bound);
      ++audits;
    }
  }
  return {true, std::to_string(audits) + " subsets, max observed/bound " + fmt(tightest, 4)};
}

Outcome k30_replication() {
  const InequalitySystem hi(30, 1, 0.41, 1e-8);
  const InequalitySystem lo(30, 1, 0.40, 1e-8);
  const auto infeasible = solve_feasibility(hi);
  const auto feasible = solve_feasibility(lo);
  const bool hi_ok =
      infeasible.status == FeasibilityStatus::InfeasibleNumeric && infeasible.gap > 1e-8;
  const bool lo_ok = feasible.status == FeasibilityStatus::Feasible &&
                     feasible.max_violation <= 1e-9 &&
                     evaluate_violation(lo, feasible.point) <= 1e-9;
  return {hi_ok && lo_ok, "c=0.41 " + std::string(status_name(infeasible.status)) + " gap " +
                              fmt(infeasible.gap) + "; c=0.40 " +
                              std::string(status_name(feasible.status)) + " violation " +
                              fmt(evaluate_violation(lo, feasible.point), 3)};
}

Outcome k2_agreement() {
  const auto r = bisect_threshold(2, 1, 0, 0.40, 0.50, 1e-5);
  const double target = upper_constant(1);
  const bool near = std::abs(r.threshold - target) <= 1e-3;
  double identity = 0.0;
  for (int t = 1; t <= 10; ++t) {
    identity = std::max(identity, std::abs(upper_constant(t) * (1.0 + std::sqrt(8.0)) -
                                           13.0 * std::sqrt(t / 52.0)));
  }
  const bool identity_ok = identity <= 1e-12;
  return {near && identity_ok, "bisection " + fmt(r.threshold, 8) + " vs constant " +
                                   fmt(target, 8) + " (|diff| " +
                                   fmt(std::abs(r.threshold - target), 3) + ", tol 1e-3); identity error " +
                                   fmt(identity, 3)};
}

Outcome lower_functional() {
  const FMin m = f_min(3.58);
  const double doubled = f_min(3.58, 2048).value;
  bool bounds_ok = true;
  for (int t = 1; t <= 10; ++t) {
    std::ostringstream out;
    std::ostringstream err;
    bounds_ok = bounds_ok && cli::run({"bounds", "--t", std::to_string(t)}, out, err) == 0 &&
                out.str().find("lower_below_upper: yes") != std::string::npos;
  }
  const bool ok = m.value > 0.2306 && std::abs(m.value - doubled) <= 1e-9 && bounds_ok;
  return {ok, "f_min " + fmt(m.value, 12) + ", grid doubling change " +
                  fmt(std::abs(m.value - doubled), 3) + ", bounds t=1..10 " +
                  (bounds_ok ? "ordered" : "not ordered")};
}

Outcome empirical_density() {
  const LayeredSpec spec{5000, 3.58, 1, 4, 0, Labeling::Random};
  const Layered l = build_layered(spec);
  const auto curve = density_curve(l.graph, default_sample(l.boundaries));
  std::size_t exceed = 0;
  for (const auto& p : curve.points) exceed += layered_bound_at(spec, l.boundaries, p.n) > p.ratio;
  const double min_ratio = curve.min_ratio();
  return {min_ratio > 0.20 && exceed == 0,
          "min ratio " + fmt(min_ratio) + " over " + std::to_string(curve.points.size()) +
              " samples, bound exceeded at " + std::to_string(exceed)};
}

Outcome oracle_equivalence() {
  auto corpus = oracle::random_corpus();
  for (auto& g : oracle::structured_corpus()) corpus.push_back(std::move(g));
  std::size_t checks = 0;
  for (const Graph& g : corpus) {
    const auto m = oracle::adjacency_matrix(g);
    const OrderedGraph og(g);
    for (std::uint64_t t = 1; t <= 4; ++t) {
      if (is_k2_free(og, t) == oracle::contains_k2s(m, t + 1)) {
        return {false, "disagreement at t=" + std::to_string(t)};
      }
      ++checks;
    }
  }
  return {true, std::to_string(corpus.size()) + " graphs, " + std::to_string(checks) + " checks"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: acceptance <criterion 1-9>\n";
    return 1;
  }
  const int criterion = std::atoi(argv[1]);
  const std::pair<const char*, Outcome (*)()> table[] = {
      {"Furedi certification", furedi_certification},
      {"codegree partition", codegree_partitions},
      {"spectrum", spectra},
      {"mixing audit", mixing},
      {"k=30 feasibility replication", k30_replication},
      {"k=2 analytic/numeric agreement", k2_agreement},
      {"lower-bound functional", lower_functional},
      {"empirical density", empirical_density},
      {"oracle equivalence", oracle_equivalence},
  };
  if (criterion < 1 || criterion > 9) {
    std::cerr << "criterion must be 1-9\n";
    return 1;
  }
  const auto& [name, fn] = table[criterion - 1];
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "criterion " << criterion << " " << (o.pass ? "PASS" : "FAIL") << " " << name
            << ": " << o.detail << " [" << fmt(seconds, 3) << " s]" << std::endl;
  return o.pass ? 0 : 1;
}
