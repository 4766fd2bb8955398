#include "turan/furedi.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "turan/errors.hpp"

namespace turan {

ClassRep canonicalize(const FieldElement& a, const FieldElement& b, const FieldElement& g,
                      std::uint64_t t) {
  if (a.value() == 0 && b.value() == 0) throw ZeroPair("(0, 0) has no equivalence class");
  ClassRep best{a.value(), b.value()};
  FieldElement x = a;
  FieldElement y = b;
  for (std::uint64_t i = 1; i < t; ++i) {
    x = x * g;
    y = y * g;
    best = std::min(best, ClassRep{x.value(), y.value()});
  }
  return best;
}

FurediGraph::FurediGraph(PrimeModulus p, std::uint64_t t, FieldElement g,
                         std::vector<ClassRep> vertices, Graph adjacency)
    : p_(p), t_(t), g_(g), vertices_(std::move(vertices)), adjacency_(std::move(adjacency)) {
  const std::uint64_t q = p_.value();
  class_of_.assign(q * q, std::numeric_limits<Vertex>::max());
  for (Vertex v = 0; v < vertices_.size(); ++v) {
    std::uint64_t a = vertices_[v].a;
    std::uint64_t b = vertices_[v].b;
    for (std::uint64_t i = 0; i < t_; ++i) {
      class_of_[a * q + b] = v;
      a = mul_mod(a, g_.value(), q);
      b = mul_mod(b, g_.value(), q);
    }
  }
}

Vertex FurediGraph::index_of(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t q = p_.value();
  if (a % q == 0 && b % q == 0) throw ZeroPair("(0, 0) has no equivalence class");
  return class_of_[(a % q) * q + (b % q)];
}

FurediGraph build_furedi(const PrimeModulus& p, std::uint64_t t) {
  const FieldElement g = element_of_order(p, t);
  const std::uint64_t q = p.value();

  // Enumerating pairs lexicographically meets each orbit first at its least member.
  std::vector<ClassRep> reps;
  reps.reserve((q * q - 1) / t);
  std::vector<Vertex> class_of(q * q, std::numeric_limits<Vertex>::max());
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      if ((a == 0 && b == 0) || class_of[a * q + b] != std::numeric_limits<Vertex>::max()) {
        continue;
      }
      const auto v = static_cast<Vertex>(reps.size());
      reps.push_back({a, b});
      std::uint64_t x = a;
      std::uint64_t y = b;
      for (std::uint64_t i = 0; i < t; ++i) {
        class_of[x * q + y] = v;
        x = mul_mod(x, g.value(), q);
        y = mul_mod(y, g.value(), q);
      }
    }
  }

  // ax + by lies in X iff exactly one member of <x, y> solves ax + by = 1, so the
  // neighbors of <a, b> are the classes met by that line: p of them.
  std::vector<Edge> edges;
  edges.reserve(reps.size() * (q + 1) / 2);
  for (Vertex u = 0; u < reps.size(); ++u) {
    const FieldElement a(reps[u].a, p);
    const FieldElement b(reps[u].b, p);
    const FieldElement one(1, p);
    auto add = [&](std::uint64_t x, std::uint64_t y) {
      const Vertex v = class_of[x * q + y];
      if (u <= v) edges.emplace_back(u, v);
    };
    if (a.value() != 0) {
      const FieldElement a_inv = a.inverse();
      for (std::uint64_t y = 0; y < q; ++y) {
        const FieldElement x = (one - b * FieldElement(y, p)) * a_inv;
        add(x.value(), y);
      }
    } else {
      const std::uint64_t y = b.inverse().value();
      for (std::uint64_t x = 0; x < q; ++x) add(x, y);
    }
  }
  Graph adjacency = Graph::from_edges(reps.size(), edges);
  return FurediGraph(p, t, g, std::move(reps), std::move(adjacency));
}

OrderedGraph strip_loops(const FurediGraph& g) {
  std::vector<Edge> edges;
  for (const auto& e : g.adjacency().edges()) {
    if (e.first != e.second) edges.push_back(e);
  }
  return OrderedGraph(Graph::from_edges(g.order(), edges));
}

void write_graph(std::ostream& out, std::uint64_t p, std::uint64_t t, const Graph& g) {
  out << p << ' ' << t << ' ' << g.order() << ' ' << g.loop_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

GraphFile read_graph(std::istream& in) {
  GraphFile file;
  std::string line;
  if (!std::getline(in, line)) throw InvalidGraph("empty graph file");
  std::istringstream header(line);
  std::size_t order = 0;
  std::size_t loops = 0;
  if (!(header >> file.p >> file.t >> order >> loops)) {
    throw InvalidGraph("header must be 'p t V L'");
  }
  std::vector<Edge> edges;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream row(line);
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) {
      throw InvalidGraph("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    if (u >= order || v >= order) {
      throw InvalidGraph("line " + std::to_string(line_no) + ": vertex out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  file.graph = Graph::from_edges(order, edges);
  if (file.graph.loop_count() != loops) {
    throw InvalidGraph("header declares " + std::to_string(loops) + " loops, body has " +
                       std::to_string(file.graph.loop_count()));
  }
  return file;
}

}  // namespace turan
