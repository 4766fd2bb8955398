#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "turan/furedi.hpp"
#include "turan/graph.hpp"

namespace turan {

/// Dense adjacency bitsets, one row per vertex, rows padded to 256-bit multiples.
class BitMatrix {
 public:
  explicit BitMatrix(const Graph& g);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t words_per_row() const noexcept { return stride_; }
  const std::uint64_t* row(std::size_t r) const noexcept { return bits_.data() + r * stride_; }
  bool test(std::size_t r, std::size_t c) const noexcept {
    return (row(r)[c / 64] >> (c % 64)) & 1u;
  }

  /// |N(u) & N(v)| with the active SIMD kernel.
  std::uint64_t common(std::size_t u, std::size_t v) const;

 private:
  std::size_t rows_;
  std::size_t stride_;
  std::vector<std::uint64_t> bits_;
};

/// Largest |N(u) & N(v)| over unordered pairs u != v; 0 for fewer than two vertices.
/// Loops count as a vertex being its own neighbor.
std::uint64_t max_codegree(const Graph& g);
std::uint64_t max_codegree(const OrderedGraph& g);

/// K_{2,t+1}-free iff no pair has more than t common neighbors.
bool is_k2_free(const OrderedGraph& g, std::uint64_t t);

struct CodegreeReport {
  std::vector<std::vector<Vertex>> classes;
  std::uint64_t within_class_codegree = 0;
  std::uint64_t cross_class_codegree = 0;
};

/// Groups vertices with pairwise codegree 0 (loops included) and certifies q + 1 classes of
/// size (q - 1)/t with codegree exactly t across classes. Throws PartitionViolation.
CodegreeReport codegree_partition(const Graph& g, std::uint64_t q, std::uint64_t t);
CodegreeReport codegree_partition(const FurediGraph& g);

/// Dense symmetric eigensolver (cyclic Jacobi). `matrix` is row-major n x n.
/// Returns eigenvalues sorted descending.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, std::size_t n);

/// Largest order accepted by the dense eigensolver paths.
inline constexpr std::size_t kSpectralSizeCap = 4000;

/// Adjacency spectrum, loop entries 1 on the diagonal, sorted descending.
std::vector<double> adjacency_eigenvalues(const Graph& g);

struct EigenClass {
  double value = 0.0;
  double nearest = 0.0;
  double distance = 0.0;
};

struct SpectrumReport {
  std::vector<double> eigenvalues;
  std::vector<EigenClass> classification;
  // Multiplicities of q, sqrt(q), -sqrt(q), 1, -1 in that order.
  std::vector<std::size_t> multiplicities;
};

/// Certifies every eigenvalue within tol of {q, +-sqrt(q), +-1} with q simple and largest.
/// Throws SpectrumViolation otherwise, DomainError above kSpectralSizeCap or for tol <= 0.
SpectrumReport spectrum(const Graph& g, std::uint64_t q, double tol);
SpectrumReport spectrum(const FurediGraph& g, double tol);

struct MixingAudit {
  double observed = 0.0;
  double bound = 0.0;
  std::uint64_t subset_edges = 0;
  bool passes() const noexcept { return observed <= bound; }
};

/// |e(B) - b^2 d n / 2| against lambda b n / 2 with d = q, lambda = sqrt(q), b = |B|/n.
/// e(B) counts a loop inside B once. B must hold distinct vertices.
MixingAudit mixing_audit(const FurediGraph& g, std::span<const Vertex> subset);

/// q(q^2 - 1)/(2t) eps^2 - 3/2 q^{5/2} eps: the edge floor for any eps-fraction of H_{q,t}.
double prefix_edge_lower_bound(std::uint64_t q, std::uint64_t t, double eps);

}  // namespace turan
