#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

enum class Labeling {
  Random,         // seeded uniform permutation of the Furedi block
  Lexicographic,  // class-representative order
};

struct GadgetOptions {
  Labeling labeling = Labeling::Random;
  std::uint64_t seed = 0;
};

struct Gadget {
  OrderedGraph graph;
  std::uint64_t p = 0;
  std::size_t furedi_order = 0;  // (p^2 - 1)/t, the labels carrying edges
  std::size_t padding = 0;       // e(n), isolated labels after the Furedi block
};

/// H_{p,t} without loops on labels 1..(p^2-1)/t, then e(n) isolated labels up to n.
/// Throws NoPrimeInWindow, or PaddingViolation if e(n) > 2 n^{5/6} / sqrt(t).
Gadget build_gadget(std::uint64_t n, std::uint64_t t, const GadgetOptions& options = {});

struct LayeredSpec {
  std::uint64_t n = 0;  // first block size
  double c = 0.0;       // ratio between consecutive block sizes, > 1
  std::uint64_t t = 1;
  std::size_t layers = 1;
  std::uint64_t labeling_seed = 0;
  Labeling labeling = Labeling::Random;
};

/// floor(c^{j-1} n) for j = 1..layers. Throws DomainError for c <= 1 or layers == 0.
std::vector<std::uint64_t> block_sizes(const LayeredSpec& spec);

struct Layered {
  OrderedGraph graph;
  std::vector<Gadget> blocks;             // graphs of each layer before relabelling
  std::vector<std::uint64_t> block_sizes;
  std::vector<std::uint64_t> boundaries;  // cumulative block sizes, boundaries[j] = S_{j+1}
};

/// Disjoint union of gadgets on consecutive label blocks; layer j uses seed
/// labeling_seed + j.
Layered build_layered(const LayeredSpec& spec);

std::uint64_t prefix_edges(const OrderedGraph& g, std::size_t n_prefix);

struct DensityPoint {
  std::uint64_t n = 0;
  std::uint64_t edges = 0;
  double ratio = 0.0;  // edges / n^{3/2}
};

struct DensityCurve {
  std::vector<DensityPoint> points;
  double min_ratio() const;
};

/// Requires every sample in [1, order].
DensityCurve density_curve(const OrderedGraph& g, std::span<const std::uint64_t> sample);

/// Every block boundary plus `interior` geometrically spaced offsets inside blocks 2..L.
/// The interior of block 1 is left out: the density bound concerns N beyond the first block.
std::vector<std::uint64_t> default_sample(std::span<const std::uint64_t> boundaries,
                                          std::size_t interior = 64);

/// Text table, header "N,edges,ratio", ratios at 12 significant digits.
void write_density_csv(std::ostream& out, const DensityCurve& curve);

/// ((c^{3/2}-1)^{-1} + eps^2) / (2 ((c-1)^{-1} + eps)^{3/2}). Throws DomainError for c <= 1.
double f_eval(double c, double eps);

struct FMin {
  double eps = 0.0;
  double value = 0.0;
};

/// Minimum of f(c, .) on [0, 1] by a uniform grid of `grid` intervals refined with
/// golden-section search around the best grid point.
FMin f_min(double c, std::size_t grid = 1024);

/// Right-hand side of the layered ratio bound for N = n_1 + ... + n_j + eps n_{j+1}.
double asymptotic_ratio_bound(double n, double t, double c, double j, double eps);

/// Subtracted error term of asymptotic_ratio_bound.
double asymptotic_error_term(double n, double t, double c, double j);

/// asymptotic_ratio_bound at prefix N >= S_1, with N = S_j + eps n_{j+1} and 0 <= eps < 1.
double layered_bound_at(const LayeredSpec& spec, std::span<const std::uint64_t> boundaries,
                        std::uint64_t N);

/// eps^2/2 sqrt(t) n^{3/2} - 7 t^{5/4} n^{4/3}.
double gadget_prefix_bound(double n, double t, double eps);

/// prefix_edges(gadget, floor(eps n)) >= gadget_prefix_bound(n, t, eps).
bool gadget_prefix_audit(const Gadget& gadget, std::uint64_t t, double eps);

}  // namespace turan
