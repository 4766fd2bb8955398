#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "turan/analysis.hpp"
#include "turan/errors.hpp"
#include "turan/feasibility.hpp"
#include "turan/furedi.hpp"
#include "turan/layered.hpp"
#include "turan/numbers.hpp"

namespace turan::cli {

namespace {

using nlohmann::json;

// The layer ratio of the lower-bound construction.
constexpr double kLayerRatio = 3.58;

struct Manifest {
  std::string command;
  json parameters = json::object();
  std::uint64_t seed = 0;
  std::vector<std::string> outputs;
};

void write_manifest(const Manifest& m, const std::string& path) {
  json doc;
  doc["command"] = m.command;
  doc["parameters"] = m.parameters;
  doc["seed"] = m.seed;
  doc["version"] = kVersion;
  doc["outputs"] = json::array();
  for (const auto& output : m.outputs) {
    doc["outputs"].push_back({{"path", output}, {"sha256", file_digest(output)}});
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot write manifest " + path);
  file << doc.dump(2) << '\n';
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path);
  if (!file) throw Error("cannot open " + path + " for writing");
  return file;
}

int cmd_construct(std::uint64_t p, std::uint64_t t, const std::string& out_path,
                  std::ostream& out) {
  const FurediGraph g = build_furedi(PrimeModulus(p), t);
  {
    auto file = open_output(out_path);
    write_graph(file, g.p(), g.t(), g.adjacency());
  }
  std::size_t min_degree = g.p();
  std::size_t max_degree = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    min_degree = std::min(min_degree, g.adjacency().degree(v));
    max_degree = std::max(max_degree, g.adjacency().degree(v));
  }
  out << "vertices: " << g.order() << '\n';
  out << "edges: " << g.adjacency().edge_count() << '\n';
  out << "loops: " << g.loop_count() << '\n';
  out << "degree: " << (min_degree == max_degree ? std::to_string(min_degree) : "irregular")
      << '\n';
  write_manifest({"construct", {{"p", p}, {"t", t}, {"out", out_path}}, 0, {out_path}},
                 out_path + ".manifest.json");
  return kOk;
}

int cmd_certify(const std::string& graph_path, std::uint64_t t, double tol,
                std::ostream& out) {
  std::ifstream file(graph_path);
  if (!file) throw Error("cannot read " + graph_path);
  const GraphFile gf = read_graph(file);
  bool all_pass = true;

  std::vector<Edge> simple_edges;
  for (const auto& e : gf.graph.edges()) {
    if (e.first != e.second) simple_edges.push_back(e);
  }
  const OrderedGraph simple(Graph::from_edges(gf.graph.order(), simple_edges));
  const std::uint64_t codegree = max_codegree(simple);
  const bool free = codegree <= t;
  all_pass = all_pass && free;
  out << "k2_free: " << (free ? "pass" : "fail") << " (max_codegree " << codegree << ", t "
      << t << ")\n";

  const bool furedi_header = gf.p >= 3 && is_prime(gf.p);
  if (!furedi_header) {
    out << "codegree_partition: skipped (header p is not an odd prime)\n";
    out << "spectrum: skipped (header p is not an odd prime)\n";
  } else {
    try {
      const auto report = codegree_partition(gf.graph, gf.p, t);
      out << "codegree_partition: pass (" << report.classes.size() << " classes of size "
          << report.classes.front().size() << ")\n";
    } catch (const PartitionViolation& e) {
      all_pass = false;
      out << "codegree_partition: fail (" << e.what() << ")\n";
    }
    if (gf.graph.order() > kSpectralSizeCap) {
      out << "spectrum: skipped (order above " << kSpectralSizeCap << ")\n";
    } else {
      try {
        const auto report = spectrum(gf.graph, gf.p, tol);
        double worst = 0.0;
        for (const auto& c : report.classification) worst = std::max(worst, c.distance);
        out << "spectrum: pass (max distance " << worst << ", multiplicities";
        for (auto m : report.multiplicities) out << ' ' << m;
        out << ")\n";
      } catch (const SpectrumViolation& e) {
        all_pass = false;
        out << "spectrum: fail (" << e.what() << ")\n";
      }
    }
  }
  return all_pass ? kOk : kCertificationFailed;
}

int cmd_density(const LayeredSpec& spec, std::size_t interior, const std::string& out_path,
                std::ostream& out) {
  const Layered layered = build_layered(spec);
  const auto sample = default_sample(layered.boundaries, interior);
  const DensityCurve curve = density_curve(layered.graph, sample);
  {
    auto file = open_output(out_path);
    write_density_csv(file, curve);
  }
  const auto worst = std::min_element(
      curve.points.begin(), curve.points.end(),
      [](const DensityPoint& a, const DensityPoint& b) { return a.ratio < b.ratio; });
  bool bound_holds = true;
  for (const auto& point : curve.points) {
    const double bound = layered_bound_at(spec, layered.boundaries, point.n);
    bound_holds = bound_holds && bound <= point.ratio;
  }
  out << std::setprecision(12);
  out << "vertices: " << layered.graph.order() << '\n';
  out << "edges: " << layered.graph.edge_count() << '\n';
  out << "samples: " << curve.points.size() << '\n';
  out << "min_ratio: " << worst->ratio << " at N = " << worst->n << '\n';
  out << "layered_bound_holds: " << (bound_holds ? "yes" : "no") << '\n';
  json params{{"n", spec.n},
              {"c", spec.c},
              {"t", spec.t},
              {"layers", spec.layers},
              {"labeling", spec.labeling == Labeling::Random ? "random" : "lexicographic"},
              {"interior", interior},
              {"out", out_path}};
  write_manifest({"density", params, spec.labeling_seed, {out_path}},
                 out_path + ".manifest.json");
  return kOk;
}

int cmd_feasibility(std::size_t k, double t, double c, double delta, const SolverOptions& options,
                    const std::string& out_path, std::ostream& out) {
  const InequalitySystem sys(k, t, c, delta);
  const FeasibilityReport report = solve_feasibility(sys, options);
  {
    auto file = open_output(out_path);
    write_report(file, sys, report);
  }
  out << std::setprecision(6);
  out << "status: " << status_name(report.status) << '\n';
  out << "max_violation: " << report.max_violation << '\n';
  out << "gap: " << report.gap << '\n';
  out << "restarts: " << report.restarts << '\n';
  json params{{"k", k},
              {"t", t},
              {"c", c},
              {"delta", delta},
              {"tol", options.feas_tol},
              {"restarts", options.restarts},
              {"max_iterations", options.max_iterations},
              {"out", out_path}};
  write_manifest({"feasibility", params, options.seed, {out_path}},
                 out_path + ".manifest.json");
  switch (report.status) {
    case FeasibilityStatus::Feasible:
      return kOk;
    case FeasibilityStatus::InfeasibleNumeric:
      return kInfeasible;
    case FeasibilityStatus::Inconclusive:
      return kInconclusive;
  }
  return kInconclusive;
}

int cmd_bounds(std::uint64_t t, std::ostream& out) {
  const double root_t = std::sqrt(static_cast<double>(t));
  const FMin fm = f_min(kLayerRatio);
  const double lower = fm.value * root_t;
  const double upper = upper_constant(static_cast<double>(t));
  out << std::setprecision(12);
  out << "t: " << t << '\n';
  out << "lower: " << lower << " (f_min(" << kLayerRatio << ") = " << fm.value << " at eps "
      << fm.eps << ", times sqrt t)\n";
  out << "upper: " << upper << " ((sqrt13/14)(sqrt8-1) sqrt t)\n";
  const bool ordered = lower < upper;
  out << "lower_below_upper: " << (ordered ? "yes" : "no") << '\n';
  return ordered ? kOk : kCertificationFailed;
}

}  // namespace


std::string file_digest(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot read " + path);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  char buffer[1 << 15];
  while (file.read(buffer, sizeof buffer) || file.gcount() > 0) {
    EVP_DigestUpdate(ctx.get(), buffer, static_cast<std::size_t>(file.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &length);
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructions, certificates, and feasibility checks for K_{2,t+1}-free graphs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::uint64_t p = 0;
  std::uint64_t t = 1;
  std::string out_path;
  auto* construct = app.add_subcommand("construct", "Build H_{p,t} and write its edge list");
  construct->add_option("--p", p, "Prime modulus")->required();
  construct->add_option("--t", t, "Subgroup order (divides p - 1)")->capture_default_str();
  construct->add_option("--out", out_path, "Graph file")->required();

  std::string graph_path;
  double spectral_tol = 1e-6;
  auto* certify = app.add_subcommand("certify", "Certify a graph file");
  certify->add_option("graph", graph_path, "Graph file")->required();
  certify->add_option("--t", t, "Freeness level: K_{2,t+1}")->required();
  certify->add_option("--tol", spectral_tol, "Spectral tolerance")->capture_default_str();

  LayeredSpec spec;
  spec.c = kLayerRatio;
  std::string labeling = "random";
  std::size_t interior = 64;
  auto* density = app.add_subcommand("density", "Prefix density of the layered construction");
  density->add_option("--n", spec.n, "First block size")->required();
  density->add_option("--c", spec.c, "Layer ratio")->capture_default_str();
  density->add_option("--t", spec.t, "t")->capture_default_str();
  density->add_option("--layers", spec.layers, "Number of layers")->capture_default_str();
  density->add_option("--seed", spec.labeling_seed, "Labeling seed")->capture_default_str();
  density->add_option("--labeling", labeling, "random or lexicographic")
      ->check(CLI::IsMember({"random", "lexicographic"}))
      ->capture_default_str();
  density->add_option("--interior", interior, "Interior samples per block")
      ->capture_default_str();
  density->add_option("--out", out_path, "CSV file")->required();

  std::size_t k = 2;
  double t_real = 1.0;
  double c = 0.0;
  double delta = 0.0;
  SolverOptions options;
  auto* feasibility = app.add_subcommand("feasibility", "Decide the block inequality system");
  feasibility->add_option("--k", k, "Number of blocks")->required();
  feasibility->add_option("--t", t_real, "t")->capture_default_str();
  feasibility->add_option("--c", c, "Density constant")->required();
  feasibility->add_option("--delta", delta, "Slack on the caps")->capture_default_str();
  feasibility->add_option("--tol", options.feas_tol, "Feasibility tolerance")
      ->capture_default_str();
  feasibility->add_option("--restarts", options.restarts, "Random restarts")
      ->capture_default_str();
  feasibility->add_option("--max-iterations", options.max_iterations, "Sweeps per restart")
      ->capture_default_str();
  feasibility->add_option("--seed", options.seed, "Seed")->capture_default_str();
  feasibility->add_option("--out", out_path, "Report file")->required();

  auto* bounds = app.add_subcommand("bounds", "Lower and upper density constants");
  bounds->add_option("--t", t, "t")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    if (*construct) return cmd_construct(p, t, out_path, out);
    if (*certify) return cmd_certify(graph_path, t, spectral_tol, out);
    if (*density) {
      spec.labeling = labeling == "random" ? Labeling::Random : Labeling::Lexicographic;
      return cmd_density(spec, interior, out_path, out);
    }
    if (*feasibility) return cmd_feasibility(k, t_real, c, delta, options, out_path, out);
    if (*bounds) {
      if (t < 1) throw DomainError("t must be at least 1");
      return cmd_bounds(t, out);
    }
  } catch (const InvalidModulus& e) {
    err << "error: p must be prime (" << e.what() << ")\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace turan::cli
