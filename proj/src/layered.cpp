#include "turan/layered.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>

#include "parallel.hpp"
#include "turan/errors.hpp"
#include "turan/furedi.hpp"
#include "turan/numbers.hpp"
#include "turan/random.hpp"

namespace turan {

Gadget build_gadget(std::uint64_t n, std::uint64_t t, const GadgetOptions& options) {
  const std::uint64_t p = prime_search(n, t);
  const FurediGraph h = build_furedi(PrimeModulus(p), t);
  Gadget gadget;
  gadget.p = p;
  gadget.furedi_order = h.order();
  gadget.padding = n - h.order();
  const double cap = 2.0 * std::pow(static_cast<double>(n), 5.0 / 6.0) /
                     std::sqrt(static_cast<double>(t));
  if (h.order() > n || static_cast<double>(gadget.padding) > cap) {
    throw PaddingViolation("padding " + std::to_string(gadget.padding) + " outside [0, " +
                           std::to_string(cap) + "] for n = " + std::to_string(n));
  }

  std::vector<Edge> edges;
  const Graph& adj = h.adjacency();
  std::vector<Vertex> perm;
  if (options.labeling == Labeling::Random) {
    std::mt19937_64 rng(options.seed);
    perm = random_permutation<Vertex>(h.order(), rng);
  }
  for (auto [u, v] : adj.edges()) {
    if (u == v) continue;
    if (!perm.empty()) {
      u = perm[u];
      v = perm[v];
    }
    edges.emplace_back(u, v);
  }
  gadget.graph = OrderedGraph(Graph::from_edges(n, edges));
  return gadget;
}

std::vector<std::uint64_t> block_sizes(const LayeredSpec& spec) {
  if (!(spec.c > 1.0)) throw DomainError("layer ratio c must exceed 1");
  if (spec.layers == 0) throw DomainError("at least one layer is required");
  std::vector<std::uint64_t> sizes;
  for (std::size_t j = 0; j < spec.layers; ++j) {
    const long double size =
        std::pow(static_cast<long double>(spec.c), static_cast<long double>(j)) *
        static_cast<long double>(spec.n);
    sizes.push_back(static_cast<std::uint64_t>(std::floor(size)));
  }
  return sizes;
}

Layered build_layered(const LayeredSpec& spec) {
  Layered out;
  out.block_sizes = block_sizes(spec);
  out.blocks.resize(out.block_sizes.size());
  detail::parallel_for(out.block_sizes.size(), [&](std::size_t j) {
    out.blocks[j] = build_gadget(out.block_sizes[j], spec.t,
                                 GadgetOptions{spec.labeling, spec.labeling_seed + j});
  });
  std::vector<Edge> edges;
  std::uint64_t offset = 0;
  for (std::size_t j = 0; j < out.blocks.size(); ++j) {
    for (auto [u, v] : out.blocks[j].graph.graph().edges()) {
      edges.emplace_back(static_cast<Vertex>(u + offset), static_cast<Vertex>(v + offset));
    }
    offset += out.block_sizes[j];
    out.boundaries.push_back(offset);
  }
  out.graph = OrderedGraph(Graph::from_edges(offset, edges));
  return out;
}

std::uint64_t prefix_edges(const OrderedGraph& g, std::size_t n_prefix) {
  return g.prefix_edges(n_prefix);
}

double DensityCurve::min_ratio() const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& point : points) best = std::min(best, point.ratio);
  return best;
}

DensityCurve density_curve(const OrderedGraph& g, std::span<const std::uint64_t> sample) {
  DensityCurve curve;
  curve.points.reserve(sample.size());
  for (std::uint64_t n : sample) {
    if (n < 1 || n > g.order()) {
      throw DomainError("sample point " + std::to_string(n) + " outside [1, " +
                        std::to_string(g.order()) + "]");
    }
    const std::uint64_t edges = g.prefix_edges(n);
    const double nd = static_cast<double>(n);
    curve.points.push_back({n, edges, static_cast<double>(edges) / (nd * std::sqrt(nd))});
  }
  return curve;
}

std::vector<std::uint64_t> default_sample(std::span<const std::uint64_t> boundaries,
                                          std::size_t interior) {
  std::vector<std::uint64_t> sample(boundaries.begin(), boundaries.end());
  for (std::size_t j = 1; j < boundaries.size(); ++j) {
    const std::uint64_t start = boundaries[j - 1];
    const std::uint64_t size = boundaries[j] - start;
    if (size < 2) continue;
    const double log_size = std::log(static_cast<double>(size));
    for (std::size_t k = 1; k <= interior; ++k) {
      const double offset =
          std::round(std::exp(log_size * static_cast<double>(k) / static_cast<double>(interior + 1)));
      const auto clamped = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(offset), 1, size - 1);
      sample.push_back(start + clamped);
    }
  }
  std::sort(sample.begin(), sample.end());
  sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  return sample;
}

void write_density_csv(std::ostream& out, const DensityCurve& curve) {
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << "N,edges,ratio\n";
  out << std::setprecision(12);
  for (const auto& point : curve.points) {
    out << point.n << ',' << point.edges << ',' << point.ratio << '\n';
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

double f_eval(double c, double eps) {
  if (!(c > 1.0)) throw DomainError("f requires c > 1");
  const double numerator = 1.0 / (std::pow(c, 1.5) - 1.0) + eps * eps;
  const double base = 1.0 / (c - 1.0) + eps;
  return numerator / (2.0 * std::pow(base, 1.5));
}

FMin f_min(double c, std::size_t grid) {
  if (grid < 2) grid = 2;
  std::size_t best = 0;
  double best_value = f_eval(c, 0.0);
  for (std::size_t i = 1; i <= grid; ++i) {
    const double value = f_eval(c, static_cast<double>(i) / static_cast<double>(grid));
    if (value < best_value) {
      best = i;
      best_value = value;
    }
  }
  double lo = static_cast<double>(best == 0 ? 0 : best - 1) / static_cast<double>(grid);
  double hi = static_cast<double>(std::min(best + 1, grid)) / static_cast<double>(grid);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f_eval(c, x1);
  double f2 = f_eval(c, x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f_eval(c, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f_eval(c, x2);
    }
  }
  FMin out{static_cast<double>(best) / static_cast<double>(grid), best_value};
  const double mid = 0.5 * (lo + hi);
  if (const double value = f_eval(c, mid); value < out.value) out = {mid, value};
  return out;
}

double asymptotic_error_term(double n, double t, double c, double j) {
  const double partial = (1.0 - std::pow(c, -j)) / (c - 1.0);
  return 7.0 * std::pow(c, 4.0 / 3.0) * std::pow(t, 1.25) /
         (std::pow(n, 1.0 / 6.0) * std::pow(c, j / 6.0) * std::pow(partial, 1.5));
}

double asymptotic_ratio_bound(double n, double t, double c, double j, double eps) {
  if (!(c > 1.0)) throw DomainError("c must exceed 1");
  const double cubes = (1.0 - std::pow(c, -1.5 * j)) / (std::pow(c, 1.5) - 1.0);
  const double partial = (1.0 - std::pow(c, -j)) / (c - 1.0);
  const double main = std::sqrt(t) / 2.0 * (cubes + eps * eps) / std::pow(partial + eps, 1.5);
  return main - asymptotic_error_term(n, t, c, j);
}

double layered_bound_at(const LayeredSpec& spec, std::span<const std::uint64_t> boundaries,
                        std::uint64_t N) {
  if (boundaries.empty() || N < boundaries.front() || N > boundaries.back()) {
    throw DomainError("prefix outside [S_1, S_L]");
  }
  std::size_t j = 1;
  while (j < boundaries.size() && boundaries[j] <= N) ++j;
  const double next = std::floor(static_cast<double>(
      std::pow(static_cast<long double>(spec.c), static_cast<long double>(j)) *
      static_cast<long double>(spec.n)));
  const double eps = static_cast<double>(N - boundaries[j - 1]) / next;
  return asymptotic_ratio_bound(static_cast<double>(spec.n), static_cast<double>(spec.t), spec.c,
                                static_cast<double>(j), eps);
}

double gadget_prefix_bound(double n, double t, double eps) {
  return eps * eps / 2.0 * std::sqrt(t) * std::pow(n, 1.5) -
         7.0 * std::pow(t, 1.25) * std::pow(n, 4.0 / 3.0);
}

bool gadget_prefix_audit(const Gadget& gadget, std::uint64_t t, double eps) {
  const auto n = gadget.graph.order();
  const auto prefix = static_cast<std::size_t>(std::floor(eps * static_cast<double>(n)));
  const double bound =
      gadget_prefix_bound(static_cast<double>(n), static_cast<double>(t), eps);
  return static_cast<double>(gadget.graph.prefix_edges(prefix)) >= bound;
}

}  // namespace turan
