#include "whg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "whg/bounds.hpp"
#include "whg/error.hpp"
#include "whg/generators.hpp"
#include "whg/io.hpp"
#include "whg/kernels.hpp"
#include "whg/spectral.hpp"

namespace whg::cli {

namespace {

using nlohmann::ordered_json;

struct Globals {
  bool json = false;
  int threads = 0;
};

void print_json(std::ostream& out, const ordered_json& j) {
  out << j.dump(2) << '\n';
}

std::string join(std::span<const double> xs) {
  std::ostringstream s;
  s << std::setprecision(6);
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? " " : "") << xs[i];
  return s.str();
}

template <typename T>
std::string join_int(const std::vector<T>& xs) {
  std::ostringstream s;
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? " " : "") << xs[i];
  return s.str();
}

TensorKind radius_kind(const std::string& letter) {
  const auto kind = parse_tensor_kind(letter);
  if (kind != TensorKind::Adjacency && kind != TensorKind::SignlessLaplacian) {
    throw Error(ErrorCode::UnsupportedTensorKind, "radius needs --tensor A or Q");
  }
  return kind;
}

int cmd_info(const Globals& gl, const std::string& file, std::ostream& out) {
  const auto g = load_hypergraph(file);
  const auto s = stats(g);
  const auto r = regularity(g);
  const bool connected = is_connected(g);
  const bool irreducible = is_weakly_irreducible(g);
  if (gl.json) {
    ordered_json j;
    j["k"] = g.order();
    j["n"] = g.num_vertices();
    j["m"] = g.num_edges();
    j["stats"] = to_json(s);
    j["regularity"] = to_json(r);
    j["connected"] = connected;
    j["weakly_irreducible"] = irreducible;
    j["theorem_order"] = !g.below_theorem_order();
    print_json(out, j);
    return kExitOk;
  }
  out << std::setprecision(6);
  out << "k = " << g.order() << ", n = " << g.num_vertices()
      << ", m = " << g.num_edges() << '\n'
      << "degrees:        " << join_int(s.degrees) << '\n'
      << "vertex weights: " << join(s.vertex_weights) << '\n'
      << "Delta = " << s.max_degree << ", W0 = " << s.max_edge_weight
      << ", alpha = " << s.alpha << ", delta = " << s.delta
      << ", total weight = " << s.total_edge_weight << '\n'
      << "regular = " << (r.is_regular ? "true" : "false");
  if (r.r) out << " (r = " << *r.r << ")";
  out << ", uniform weight = " << (r.is_uniform_weight ? "true" : "false");
  if (r.common_weight) out << " (w = " << *r.common_weight << ")";
  out << '\n'
      << "connected = " << (connected ? "true" : "false")
      << ", weakly irreducible = " << (irreducible ? "true" : "false") << '\n';
  if (g.below_theorem_order()) out << "warning: k < 3, theorem checks do not apply\n";
  return kExitOk;
}

int cmd_radius(const Globals& gl, const std::string& file, const std::string& tensor,
               double tol, std::size_t max_iter, std::ostream& out) {
  const auto g = load_hypergraph(file);
  PowerIterationOptions opt;
  opt.tolerance = tol;
  opt.max_iterations = max_iter;
  const auto kind = radius_kind(tensor);
  const auto r = power_iteration(g, kind, opt);
  if (gl.json) {
    auto j = to_json(r);
    j["tensor"] = std::string(to_string(kind));
    print_json(out, j);
  } else {
    out << std::setprecision(6) << "rho(" << tensor << ") = " << r.rho << '\n'
        << "x = " << join(r.x) << '\n'
        << "iterations = " << r.iterations << ", converged = "
        << (r.converged ? "true" : "false") << ", gap = " << r.final_gap << '\n';
  }
  return r.converged ? kExitOk : kExitNotConverged;
}

void print_report_table(const BoundReport& report, std::ostream& out) {
  out << std::setprecision(6);
  out << "rho(A) = " << report.adjacency_radius.rho
      << ", rho(Q) = " << report.signless_radius.rho
      << ", principal vertex = " << report.principal_vertex << '\n';
  out << std::left << std::setw(26) << "theorem" << std::setw(15) << "verdict"
      << std::setw(14) << "lower" << std::setw(14) << "upper" << std::setw(14)
      << "measured" << "slack\n";
  auto cell = [&](const std::optional<double>& v) {
    std::ostringstream s;
    s << std::setprecision(6);
    if (v) s << *v; else s << "-";
    return s.str();
  };
  for (const auto& e : report.entries) {
    out << std::setw(26) << e.theorem_id << std::setw(15) << to_string(e.verdict);
    if (e.value) {
      out << "n(k-1)^(n-1) = " << *e.value << '\n';
      continue;
    }
    out << std::setw(14) << cell(e.lower) << std::setw(14) << cell(e.upper)
        << std::setw(14) << cell(e.measured) << e.slack << '\n';
  }
  out << (report.all_hold() ? "all verdicts hold\n" : "VIOLATION\n");
}

int cmd_bounds(const Globals& gl, const std::string& file, std::size_t oracle,
               std::uint64_t seed, bool verify, std::ostream& out) {
  const auto g = load_hypergraph(file);
  BoundOptions opt;
  opt.oracle_restarts = oracle;
  opt.seed = seed;
  const auto report = bound_report(g, opt);
  if (gl.json) {
    print_json(out, to_json(report));
  } else {
    print_report_table(report, out);
  }
  if (verify && !report.all_hold()) return kExitViolated;
  return kExitOk;
}

int cmd_eigenpairs(const Globals& gl, const std::string& file,
                   const std::string& tensor, bool oracle, std::size_t restarts,
                   std::uint64_t seed, std::ostream& out) {
  const auto g = load_hypergraph(file);
  const auto kind = parse_tensor_kind(tensor);
  const auto known = known_eigenpairs(g, kind);
  std::vector<Eigenpair> found;
  if (oracle) found = newton_eigenpair_search(g, kind, restarts, seed);
  if (gl.json) {
    ordered_json j;
    j["tensor"] = std::string(to_string(kind));
    j["known"] = to_json(known);
    if (oracle) j["oracle"] = to_json(found);
    print_json(out, j);
    return kExitOk;
  }
  auto table = [&](const char* title, const std::vector<Eigenpair>& pairs) {
    out << title << " (" << pairs.size() << ")\n" << std::setprecision(6);
    for (const auto& p : pairs) {
      out << "  " << std::left << std::setw(4) << to_string(p.eigen_class)
          << " lambda = " << std::setw(12) << p.lambda << " residual = "
          << std::setw(12) << p.residual << " x = " << join(p.x) << '\n';
    }
  };
  table("known eigenpairs", known);
  if (oracle) table("oracle eigenpairs", found);
  return kExitOk;
}

struct GenerateArgs {
  std::string spec_file;
  std::string family = "single-edge";
  std::size_t k = 3;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t length = 0;
  std::size_t degree = 0;
  double weight = 1.0;
  std::vector<double> weight_range;
  std::vector<double> weights;
  std::uint64_t seed = 1;
  std::string out_file;
  std::string format = "json";
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  GeneratorSpec spec;
  if (!a.spec_file.empty()) {
    std::ifstream in(a.spec_file);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + a.spec_file);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    spec = generator_spec_from_json(j);
  } else {
    spec.family = parse_family(a.family);
    spec.k = a.k;
    spec.n = a.n;
    spec.m = a.m;
    spec.length = a.length;
    spec.degree = a.degree;
    spec.seed = a.seed;
    if (!a.weights.empty()) {
      spec.weights = WeightScheme::explicit_list(a.weights);
    } else if (!a.weight_range.empty()) {
      spec.weights = WeightScheme::range(a.weight_range[0], a.weight_range[1]);
    } else {
      spec.weights = WeightScheme::uniform(a.weight);
    }
  }
  const auto g = generate(spec);
  const std::string text =
      a.format == "text" ? to_plain_text(g) : to_whg_json(g).dump(2) + "\n";
  if (a.out_file.empty()) {
    out << text;
  } else {
    std::ofstream f(a.out_file, std::ios::binary);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + a.out_file);
    f << text;
  }
  return kExitOk;
}

void report_error(const Globals& gl, std::string_view code, const std::string& message,
                  std::ostream& err) {
  if (gl.json) {
    ordered_json j;
    j["error"] = {{"code", std::string(code)}, {"message", message}};
    err << j.dump() << '\n';
  } else {
    err << "error[" << code << "]: " << message << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral checks for k-uniform weighted hypergraphs", "whg"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_flag("--json", gl.json, "Emit JSON instead of a table");
  app.add_option("--threads", gl.threads, "OpenMP threads (never changes results)")
      ->check(CLI::PositiveNumber);

  std::string file;
  std::string tensor;
  auto* info = app.add_subcommand("info", "Degrees, weights, regularity, connectivity");
  info->add_option("file", file, "whg-1 JSON or plain-text hypergraph")->required();

  double tol = 1e-10;
  std::size_t max_iter = 1'000'000;
  auto* radius = app.add_subcommand("radius", "Spectral radius by power iteration");
  radius->add_option("file", file)->required();
  radius->add_option("--tensor", tensor, "A or Q")->required();
  radius->add_option("--tol", tol, "Ratio-gap tolerance")->check(CLI::PositiveNumber);
  radius->add_option("--max-iter", max_iter)->check(CLI::PositiveNumber);

  std::size_t oracle_restarts = 0;
  std::uint64_t seed = 1;
  auto* bounds = app.add_subcommand("bounds", "Evaluate every bound and print the report");
  auto* verify = app.add_subcommand("verify", "Like bounds; exit 1 if any verdict is violated");
  for (auto* sub : {bounds, verify}) {
    sub->add_option("file", file)->required();
    sub->add_option("--oracle", oracle_restarts,
                    "Also run the Newton oracle with this many restarts (n <= 8)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "Oracle seed (default 1)");
  }

  bool use_oracle = false;
  std::size_t restarts = 200;
  auto* eig = app.add_subcommand("eigenpairs", "Structural (and optional oracle) eigenpairs");
  eig->add_option("file", file)->required();
  eig->add_option("--tensor", tensor, "A, L or Q")->required();
  eig->add_flag("--oracle", use_oracle, "Add Newton-oracle eigenpairs");
  eig->add_option("--restarts", restarts, "Oracle restarts (default 200)")
      ->check(CLI::PositiveNumber);
  eig->add_option("--seed", seed, "Oracle seed (default 1)");

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a generated hypergraph");
  generate_cmd->add_option("--spec", gen.spec_file, "GeneratorSpec JSON file");
  generate_cmd->add_option("--family", gen.family,
                           "single-edge|complete|loose-path|hyperstar|random-connected|random-regular");
  generate_cmd->add_option("--k", gen.k)->check(CLI::PositiveNumber);
  generate_cmd->add_option("--n", gen.n)->check(CLI::PositiveNumber);
  generate_cmd->add_option("--m", gen.m)->check(CLI::PositiveNumber);
  generate_cmd->add_option("--length", gen.length, "Loose-path length or hyperstar edge count")
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("--degree", gen.degree, "Degree for random-regular")
      ->check(CLI::PositiveNumber);
  auto* w_opt = generate_cmd->add_option("--weight", gen.weight, "Uniform edge weight")
                    ->check(CLI::PositiveNumber);
  auto* wr_opt = generate_cmd->add_option("--weight-range", gen.weight_range, "LO HI")
                     ->expected(2)
                     ->check(CLI::PositiveNumber);
  auto* ws_opt = generate_cmd->add_option("--weights", gen.weights, "Per-edge weights")
                     ->delimiter(',')
                     ->check(CLI::PositiveNumber);
  w_opt->excludes(wr_opt)->excludes(ws_opt);
  wr_opt->excludes(ws_opt);
  generate_cmd->add_option("--seed", gen.seed, "RNG seed (default 1)");
  generate_cmd->add_option("--out", gen.out_file, "Output path (default stdout)");
  generate_cmd->add_option("--format", gen.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report_error(gl, "UsageError", e.what(), err);
    return kExitInputError;
  }
  if (gl.threads > 0) kernels::set_num_threads(gl.threads);

  try {
    if (info->parsed()) return cmd_info(gl, file, out);
    if (radius->parsed()) return cmd_radius(gl, file, tensor, tol, max_iter, out);
    if (bounds->parsed()) return cmd_bounds(gl, file, oracle_restarts, seed, false, out);
    if (verify->parsed()) return cmd_bounds(gl, file, oracle_restarts, seed, true, out);
    if (eig->parsed()) {
      return cmd_eigenpairs(gl, file, tensor, use_oracle, restarts, seed, out);
    }
    if (generate_cmd->parsed()) return cmd_generate(gen, out);
  } catch (const Error& e) {
    report_error(gl, to_string(e.code()), e.what(), err);
    return e.code() == ErrorCode::MaxIterationsExceeded ? kExitNotConverged
                                                        : kExitInputError;
  }
  return kExitInputError;
}

}  // namespace whg::cli
