#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "turan/analysis.hpp"
#include "turan/errors.hpp"
#include "turan/furedi.hpp"
#include "turan/layered.hpp"
#include "turan/random.hpp"

using namespace turan;

namespace {

std::vector<double> eigen_oracle(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(values.rbegin(), values.rend());
  return values;
}

Graph random_graph(std::size_t n, double density, std::mt19937_64& rng, bool loops) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = loops ? u : u + 1; v < n; ++v) {
      if (unit_double(rng) < density) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("max_codegree examples") {
  CHECK(max_codegree(strip_loops(build_furedi(PrimeModulus(3), 1))) == 1);
  CHECK(max_codegree(cycle_graph(4)) == 2);
  CHECK(max_codegree(Graph::from_edges(5, {})) == 0);
  CHECK(max_codegree(Graph::from_edges(1, {})) == 0);
}

TEST_CASE("is_k2_free examples") {
  CHECK(is_k2_free(strip_loops(build_furedi(PrimeModulus(3), 1)), 1));
  CHECK_FALSE(is_k2_free(OrderedGraph(cycle_graph(4)), 1));
  CHECK(is_k2_free(strip_loops(build_furedi(PrimeModulus(5), 2)), 2));
}

TEST_CASE("max_codegree matches the brute-force table on random graphs with loops") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng() % 70;
    const Graph g = random_graph(n, 0.05 + 0.9 * unit_double(rng), rng, true);
    CHECK(max_codegree(g) == oracle::max_codegree(g));
  }
}

TEST_CASE("is_k2_free matches exhaustive K_{2,t+1} search") {
  auto corpus = oracle::random_corpus();
  for (auto& g : oracle::structured_corpus()) corpus.push_back(std::move(g));
  std::size_t mismatches = 0;
  for (const Graph& g : corpus) {
    const auto m = oracle::adjacency_matrix(g);
    const OrderedGraph og(g);
    for (std::uint64_t t = 1; t <= 4; ++t) {
      mismatches += is_k2_free(og, t) == oracle::contains_k2s(m, t + 1);
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("sparse codegree path above the dense limit") {
  const OrderedGraph h = strip_loops(build_furedi(PrimeModulus(31), 1));
  const std::size_t big = 70000;
  const Graph padded = disjoint_union(h.graph(), Graph::from_edges(big, {}));
  CHECK(max_codegree(padded) == 1);
  const Graph k23 = disjoint_union(complete_bipartite(2, 3), Graph::from_edges(big, {}));
  CHECK(max_codegree(k23) == 3);
  const Graph k23_tail = disjoint_union(Graph::from_edges(big, {}), complete_bipartite(3, 2));
  CHECK(max_codegree(k23_tail) == 3);
}

TEST_CASE("codegree_partition examples") {
  const auto r31 = codegree_partition(build_furedi(PrimeModulus(3), 1));
  CHECK(r31.classes.size() == 4);
  for (const auto& c : r31.classes) CHECK(c.size() == 2);
  CHECK(r31.within_class_codegree == 0);
  CHECK(r31.cross_class_codegree == 1);

  const auto r51 = codegree_partition(build_furedi(PrimeModulus(5), 1));
  CHECK(r51.classes.size() == 6);
  for (const auto& c : r51.classes) CHECK(c.size() == 4);

  const auto r52 = codegree_partition(build_furedi(PrimeModulus(5), 2));
  CHECK(r52.classes.size() == 6);
  for (const auto& c : r52.classes) CHECK(c.size() == 2);
  CHECK(r52.cross_class_codegree == 2);
}

TEST_CASE("codegree_partition rejects other graphs") {
  CHECK_THROWS_AS(codegree_partition(cycle_graph(8), 3, 1), PartitionViolation);
  const FurediGraph h = build_furedi(PrimeModulus(5), 1);
  CHECK_THROWS_AS(codegree_partition(h.adjacency(), 5, 2), PartitionViolation);
  // Drop one edge: some cross-class codegree falls to t - 1.
  auto edges = h.adjacency().edges();
  edges.erase(std::find_if(edges.begin(), edges.end(), [](Edge e) { return e.first != e.second; }));
  CHECK_THROWS_AS(codegree_partition(Graph::from_edges(h.order(), edges), 5, 1),
                  PartitionViolation);
}

TEST_CASE("Jacobi agrees with an independent eigensolver") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 1 + rng() % 60;
    const Graph g = random_graph(n, unit_double(rng), rng, false);
    const auto ours = adjacency_eigenvalues(g);
    const auto ref = eigen_oracle(g);
    REQUIRE(ours.size() == ref.size());
    for (std::size_t k = 0; k < n; ++k) CHECK(ours[k] == doctest::Approx(ref[k]).epsilon(1e-9));
  }
}

TEST_CASE("symmetric_eigenvalues on a dense random matrix") {
  std::mt19937_64 rng(3);
  const std::size_t n = 40;
  std::vector<double> m(n * n);
  Eigen::MatrixXd e(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double x = 2.0 * unit_double(rng) - 1.0;
      m[i * n + j] = m[j * n + i] = x;
      e(i, j) = e(j, i) = x;
    }
  }
  const auto ours = symmetric_eigenvalues(m, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e, Eigen::EigenvaluesOnly);
  for (std::size_t k = 0; k < n; ++k) {
    CHECK(std::abs(ours[k] - solver.eigenvalues()[n - 1 - k]) < 1e-10);
  }
}

TEST_CASE("spectrum examples") {
  const auto report = spectrum(build_furedi(PrimeModulus(3), 1), 1e-6);
  CHECK(report.eigenvalues.front() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(report.multiplicities.front() == 1);
  for (const auto& c : report.classification) CHECK(c.distance <= 1e-6);

  const auto k2 = adjacency_eigenvalues(OrderedGraph(complete_bipartite(1, 1)).graph());
  REQUIRE(k2.size() == 2);
  CHECK(k2[0] == doctest::Approx(1.0));
  CHECK(k2[1] == doctest::Approx(-1.0));

  for (double x : adjacency_eigenvalues(Graph::from_edges(6, {}))) CHECK(x == 0.0);

  CHECK_THROWS_AS(spectrum(build_furedi(PrimeModulus(3), 1), 0.0), DomainError);
  CHECK_THROWS_AS(spectrum(cycle_graph(8), 3, 1e-6), SpectrumViolation);
  CHECK_THROWS_AS(adjacency_eigenvalues(Graph::from_edges(kSpectralSizeCap + 1, {})), DomainError);
}

TEST_CASE("spectrum multiplicities match the trace identities") {
  // tr A = L and tr A^2 = 2E - L determine the +-sqrt(q) and +-1 counts.
  for (auto [p, t] : {std::pair{7, 1}, {7, 3}, {11, 5}, {13, 4}}) {
    const FurediGraph h = build_furedi(PrimeModulus(p), t);
    const auto r = spectrum(h, 1e-6);
    std::size_t total = 0;
    for (auto m : r.multiplicities) total += m;
    CHECK(total == h.order());
    double trace = 0.0;
    for (double x : r.eigenvalues) trace += x;
    CHECK(trace == doctest::Approx(static_cast<double>(h.loop_count())).epsilon(1e-9));
  }
}

TEST_CASE("mixing_audit examples") {
  const FurediGraph h31 = build_furedi(PrimeModulus(3), 1);
  const auto empty = mixing_audit(h31, {});
  CHECK(empty.observed == 0.0);
  CHECK(empty.bound == 0.0);
  CHECK(empty.passes());

  std::vector<Vertex> all(8);
  for (Vertex v = 0; v < 8; ++v) all[v] = v;
  const auto whole = mixing_audit(h31, all);
  CHECK(whole.subset_edges == 14);
  CHECK(whole.observed == doctest::Approx(2.0));
  CHECK(whole.bound == doctest::Approx(4.0 * std::sqrt(3.0)));
  CHECK(whole.passes());

  const std::vector<Vertex> repeated{0, 0};
  CHECK_THROWS_AS(mixing_audit(h31, repeated), DomainError);
  const std::vector<Vertex> outside{9};
  CHECK_THROWS_AS(mixing_audit(h31, outside), DomainError);
}

TEST_CASE("mixing_audit subset edges by enumeration") {
  const FurediGraph h = build_furedi(PrimeModulus(13), 1);
  const auto m = oracle::adjacency_matrix(h.adjacency());
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto subset = random_permutation<Vertex>(h.order(), rng);
    subset.resize(1 + uniform_below(rng, h.order()));
    std::uint64_t e = 0;
    for (std::size_t x = 0; x < subset.size(); ++x) {
      for (std::size_t y = x; y < subset.size(); ++y) e += m[subset[x]][subset[y]];
    }
    const auto audit = mixing_audit(h, subset);
    CHECK(audit.subset_edges == e);
    const double b = static_cast<double>(subset.size());
    CHECK(audit.observed ==
          doctest::Approx(std::abs(static_cast<double>(e) - 0.5 * b * b * 13.0 / 168.0)));
    CHECK(audit.passes());
  }
}

TEST_CASE("prefix_edge_lower_bound values") {
  CHECK(prefix_edge_lower_bound(3, 1, 0.0) == 0.0);
  CHECK(prefix_edge_lower_bound(3, 1, 1.0) ==
        doctest::Approx(12.0 - 1.5 * std::pow(3.0, 2.5)).epsilon(1e-14));
  CHECK(prefix_edge_lower_bound(3, 1, 1.0) == doctest::Approx(-11.3827).epsilon(1e-5));
  const double q = 101.0;
  CHECK(prefix_edge_lower_bound(101, 1, 0.5) ==
        doctest::Approx(q * (q * q - 1) / 2 * 0.25 - 1.5 * std::pow(q, 2.5) * 0.5));
}

TEST_CASE("every sampled eps-fraction of H_{101,1} meets the edge floor") {
  const FurediGraph h = build_furedi(PrimeModulus(101), 1);
  const OrderedGraph simple = strip_loops(h);
  std::mt19937_64 rng(101);
  for (int i = 0; i < 8; ++i) {
    const auto perm = random_permutation<Vertex>(h.order(), rng);
    const OrderedGraph relabelled(relabel(simple.graph(), perm));
    for (double eps = 0.05; eps <= 1.0; eps += 0.05) {
      const auto size = static_cast<std::size_t>(std::floor(eps * static_cast<double>(h.order())));
      const double frac = static_cast<double>(size) / static_cast<double>(h.order());
      CHECK(static_cast<double>(relabelled.prefix_edges(size)) >=
            prefix_edge_lower_bound(101, 1, frac));
    }
  }
}
