#include "turan/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "parallel.hpp"
#include "turan/errors.hpp"
#include "turan/simd.hpp"

namespace turan {

BitMatrix::BitMatrix(const Graph& g)
    : rows_(g.order()), stride_((g.order() + 255) / 256 * 4), bits_(rows_ * stride_, 0) {
  for (Vertex u = 0; u < rows_; ++u) {
    std::uint64_t* r = bits_.data() + u * stride_;
    for (Vertex v : g.neighbors(u)) r[v / 64] |= std::uint64_t{1} << (v % 64);
  }
}

std::uint64_t BitMatrix::common(std::size_t u, std::size_t v) const {
  return simd::active_kernels().and_popcount(row(u), row(v), stride_);
}

namespace {

constexpr std::size_t kDenseOrderLimit = std::size_t{1} << 16;

// Wedge counting over sorted neighbor lists.
std::uint64_t max_codegree_sparse(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> row_max(n, 0);
  std::vector<std::vector<std::uint32_t>> counters(detail::worker_count());
  detail::parallel_for_indexed(n, [&](std::size_t worker, std::size_t u) {
    auto& count = counters[worker];
    if (count.size() != n) count.assign(n, 0);
    std::vector<Vertex> touched;
    std::uint64_t best = 0;
    for (Vertex w : g.neighbors(static_cast<Vertex>(u))) {
      for (Vertex v : g.neighbors(w)) {
        if (v <= u) continue;
        if (count[v]++ == 0) touched.push_back(v);
        best = std::max<std::uint64_t>(best, count[v]);
      }
    }
    for (Vertex v : touched) count[v] = 0;
    row_max[u] = best;
  });
  return *std::max_element(row_max.begin(), row_max.end());
}

}  // namespace

std::uint64_t max_codegree(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) return 0;
  if (n > kDenseOrderLimit) return max_codegree_sparse(g);
  const BitMatrix bits(g);
  const auto& k = simd::active_kernels();
  std::vector<std::uint64_t> row_max(n, 0);
  detail::parallel_for(n, [&](std::size_t u) {
    std::uint64_t best = 0;
    for (std::size_t v = u + 1; v < n; ++v) {
      best = std::max(best, k.and_popcount(bits.row(u), bits.row(v), bits.words_per_row()));
    }
    row_max[u] = best;
  });
  return *std::max_element(row_max.begin(), row_max.end());
}

std::uint64_t max_codegree(const OrderedGraph& g) { return max_codegree(g.graph()); }

bool is_k2_free(const OrderedGraph& g, std::uint64_t t) { return max_codegree(g) <= t; }

CodegreeReport codegree_partition(const Graph& g, std::uint64_t q, std::uint64_t t) {
  const std::size_t n = g.order();
  if (t == 0 || q < 2 || (q - 1) % t != 0 || n != (q * q - 1) / t) {
    throw PartitionViolation("graph order " + std::to_string(n) + " does not match (q^2-1)/t");
  }
  const std::size_t class_size = (q - 1) / t;
  const BitMatrix bits(g);
  const auto& k = simd::active_kernels();

  // Each vertex's class is itself plus its codegree-0 partners.
  std::vector<std::vector<Vertex>> own_class(n);
  detail::parallel_for(n, [&](std::size_t u) {
    auto& cls = own_class[u];
    for (std::size_t v = 0; v < n; ++v) {
      if (v == u) {
        cls.push_back(static_cast<Vertex>(v));
        continue;
      }
      const std::uint64_t c = k.and_popcount(bits.row(u), bits.row(v), bits.words_per_row());
      if (c == 0) {
        cls.push_back(static_cast<Vertex>(v));
      } else if (c != t) {
        throw PartitionViolation("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                 " have codegree " + std::to_string(c) + ", expected 0 or " +
                                 std::to_string(t));
      }
    }
  });

  CodegreeReport report;
  report.within_class_codegree = 0;
  report.cross_class_codegree = t;
  std::vector<bool> seen(n, false);
  for (std::size_t u = 0; u < n; ++u) {
    if (seen[u]) continue;
    const auto& cls = own_class[u];
    if (cls.size() != class_size) {
      throw PartitionViolation("class of vertex " + std::to_string(u) + " has " +
                               std::to_string(cls.size()) + " members, expected " +
                               std::to_string(class_size));
    }
    for (Vertex v : cls) {
      if (own_class[v] != cls) {
        throw PartitionViolation("codegree-0 relation is not transitive at vertex " +
                                 std::to_string(v));
      }
      seen[v] = true;
    }
    report.classes.push_back(cls);
  }
  if (report.classes.size() != q + 1) {
    throw PartitionViolation("found " + std::to_string(report.classes.size()) +
                             " classes, expected " + std::to_string(q + 1));
  }
  return report;
}

CodegreeReport codegree_partition(const FurediGraph& g) {
  return codegree_partition(g.adjacency(), g.p(), g.t());
}

namespace {

// Off-diagonal mass below this fraction of the Frobenius norm ends the sweeps.
constexpr double kJacobiThreshold = 1e-12;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) sum += a[i * n + j] * a[i * n + j];
    }
  }
  return std::sqrt(sum);
}

}  // namespace

namespace {

struct Rotation {
  std::size_t p;
  std::size_t q;
  double c;
  double s;
  double app;
  double aqq;
  double tan_apq;
};

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
  if (a.size() != n * n) throw DimensionMismatch("matrix is not n x n");
  const auto& k = simd::active_kernels();
  double frobenius = 0.0;
  for (double x : a) frobenius += x * x;
  frobenius = std::sqrt(frobenius);
  const double target = kJacobiThreshold * std::max(1.0, frobenius);

  // Round-robin ordering: each step pairs every index once (slot n is a bye when n is odd),
  // and n_slots - 1 steps visit every pair.
  const std::size_t slots = n + (n & 1);
  std::vector<std::size_t> ring(slots);
  std::iota(ring.begin(), ring.end(), 0);
  std::vector<Rotation> step;
  step.reserve(slots / 2);

  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a, n) > target; ++sweep) {
    for (std::size_t round = 0; round + 1 < slots; ++round) {
      step.clear();
      for (std::size_t i = 0; i < slots / 2; ++i) {
        const std::size_t p = std::min(ring[i], ring[slots - 1 - i]);
        const std::size_t q = std::max(ring[i], ring[slots - 1 - i]);
        if (q >= n) continue;
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        double tan;
        if (std::abs(theta) > 1e150) {
          tan = 0.5 / theta;
        } else {
          tan = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(tan * tan + 1.0);
        step.push_back({p, q, c, tan * c, app, aqq, tan * apq});
      }
      std::rotate(ring.begin() + 1, ring.end() - 1, ring.end());
      if (step.empty()) continue;

      for (const auto& r : step) k.rotate(a.data() + r.p * n, a.data() + r.q * n, n, r.c, r.s);
      for (std::size_t row = 0; row < n; ++row) {
        double* x = a.data() + row * n;
        for (const auto& r : step) {
          const double xp = x[r.p];
          const double xq = x[r.q];
          x[r.p] = r.c * xp - r.s * xq;
          x[r.q] = r.s * xp + r.c * xq;
        }
      }
      for (const auto& r : step) {
        a[r.p * n + r.p] = r.app - r.tan_apq;
        a[r.q * n + r.q] = r.aqq + r.tan_apq;
        a[r.p * n + r.q] = 0.0;
        a[r.q * n + r.p] = 0.0;
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

std::vector<double> adjacency_eigenvalues(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kSpectralSizeCap) {
    throw DomainError("order " + std::to_string(n) + " exceeds the spectral size cap " +
                      std::to_string(kSpectralSizeCap));
  }
  std::vector<double> a(n * n, 0.0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) a[u * n + v] = 1.0;
  }
  return symmetric_eigenvalues(std::move(a), n);
}

SpectrumReport spectrum(const Graph& g, std::uint64_t q, double tol) {
  if (!(tol > 0)) throw DomainError("spectrum tolerance must be positive");
  SpectrumReport report;
  report.eigenvalues = adjacency_eigenvalues(g);
  const double qd = static_cast<double>(q);
  const std::array<double, 5> targets{qd, std::sqrt(qd), -std::sqrt(qd), 1.0, -1.0};
  report.multiplicities.assign(targets.size(), 0);
  for (double value : report.eigenvalues) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < targets.size(); ++i) {
      if (std::abs(value - targets[i]) < std::abs(value - targets[best])) best = i;
    }
    const double distance = std::abs(value - targets[best]);
    report.classification.push_back({value, targets[best], distance});
    if (distance > tol) {
      throw SpectrumViolation("eigenvalue " + std::to_string(value) + " is " +
                              std::to_string(distance) + " from the nearest admissible value");
    }
    ++report.multiplicities[best];
  }
  if (report.multiplicities[0] != 1 || report.classification.front().nearest != qd) {
    throw SpectrumViolation("eigenvalue " + std::to_string(q) + " has multiplicity " +
                            std::to_string(report.multiplicities[0]) + ", expected 1");
  }
  return report;
}

SpectrumReport spectrum(const FurediGraph& g, double tol) {
  return spectrum(g.adjacency(), g.p(), tol);
}

MixingAudit mixing_audit(const FurediGraph& g, std::span<const Vertex> subset) {
  const Graph& adj = g.adjacency();
  const std::size_t n = adj.order();
  std::vector<bool> member(n, false);
  for (Vertex v : subset) {
    if (v >= n) throw DomainError("subset vertex " + std::to_string(v) + " out of range");
    if (member[v]) throw DomainError("subset vertex " + std::to_string(v) + " repeated");
    member[v] = true;
  }
  MixingAudit audit;
  for (Vertex u : subset) {
    for (Vertex v : adj.neighbors(u)) {
      if (v >= u && member[v]) ++audit.subset_edges;
    }
  }
  const double q = static_cast<double>(g.p());
  const double size = static_cast<double>(subset.size());
  const double expected = 0.5 * size * size * q / static_cast<double>(n);
  audit.observed = std::abs(static_cast<double>(audit.subset_edges) - expected);
  audit.bound = 0.5 * std::sqrt(q) * size;
  return audit;
}

double prefix_edge_lower_bound(std::uint64_t q, std::uint64_t t, double eps) {
  if (eps < 0.0 || eps > 1.0) throw DomainError("eps must lie in [0, 1]");
  const double qd = static_cast<double>(q);
  return qd * (qd * qd - 1.0) / (2.0 * static_cast<double>(t)) * eps * eps -
         1.5 * std::pow(qd, 2.5) * eps;
}

}  // namespace turan
