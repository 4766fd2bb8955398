#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/numbers.hpp"

namespace turan {

/// Canonical representative of a class <a, b>: the lexicographically least pair of the orbit
/// {(g^i a, g^i b) : 0 <= i < t}.
struct ClassRep {
  std::uint64_t a = 0;
  std::uint64_t b = 0;

  friend auto operator<=>(const ClassRep&, const ClassRep&) = default;
};

/// Throws ZeroPair for (0, 0).
ClassRep canonicalize(const FieldElement& a, const FieldElement& b, const FieldElement& g,
                      std::uint64_t t);

/// H_{p,t}: vertices are the classes of F_p^2 \ {0} under the order-t subgroup X = <g>,
/// <a,b> ~ <x,y> iff ax + by lies in X. Loops are kept (a^2 + b^2 in X).
class FurediGraph {
 public:
  FurediGraph(PrimeModulus p, std::uint64_t t, FieldElement g, std::vector<ClassRep> vertices,
              Graph adjacency);

  std::uint64_t p() const noexcept { return p_.value(); }
  std::uint64_t t() const noexcept { return t_; }
  const FieldElement& generator() const noexcept { return g_; }
  const std::vector<ClassRep>& vertices() const noexcept { return vertices_; }
  const Graph& adjacency() const noexcept { return adjacency_; }
  std::size_t order() const noexcept { return vertices_.size(); }
  bool loop(Vertex v) const noexcept { return adjacency_.has_loop(v); }
  std::size_t loop_count() const noexcept { return adjacency_.loop_count(); }

  /// Index of the class containing (a, b); (a, b) must be nonzero.
  Vertex index_of(std::uint64_t a, std::uint64_t b) const;

 private:
  PrimeModulus p_;
  std::uint64_t t_;
  FieldElement g_;
  std::vector<ClassRep> vertices_;
  Graph adjacency_;
  // class_of_[a * p + b] for every nonzero pair.
  std::vector<Vertex> class_of_;
};

/// Throws OrderUnavailable unless t divides p - 1.
FurediGraph build_furedi(const PrimeModulus& p, std::uint64_t t);

/// Same vertex order, loops removed.
OrderedGraph strip_loops(const FurediGraph& g);

/// Graph file: header "p t V L", then one "u v" line per edge (u <= v, 0-based,
/// loops as "u u"), sorted lexicographically.
struct GraphFile {
  std::uint64_t p = 0;
  std::uint64_t t = 0;
  Graph graph;
};

void write_graph(std::ostream& out, std::uint64_t p, std::uint64_t t, const Graph& g);
/// Throws InvalidGraph on malformed input or a header that disagrees with the body.
GraphFile read_graph(std::istream& in);

}  // namespace turan
