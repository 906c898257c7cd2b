#include "whg/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "whg/error.hpp"

namespace whg {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

std::int64_t require_integer(const json& j, const char* key) {
  if (!j.contains(key)) parse_error(std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_integer()) {
    parse_error(std::string("field '") + key + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

template <typename T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

RawHypergraph parse_whg_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) parse_error("top level must be an object");
  if (!j.contains("format") || j.at("format") != "whg-1") {
    parse_error("expected \"format\": \"whg-1\"");
  }
  RawHypergraph raw;
  raw.k = require_integer(j, "k");
  raw.n = require_integer(j, "n");
  if (!j.contains("edges") || !j.at("edges").is_array()) {
    parse_error("field 'edges' must be an array");
  }
  for (const auto& e : j.at("edges")) {
    if (!e.is_object() || !e.contains("v") || !e.contains("w")) {
      parse_error("each edge needs fields 'v' and 'w'");
    }
    RawHypergraph::Edge edge;
    if (!e.at("v").is_array()) parse_error("edge field 'v' must be an array");
    for (const auto& v : e.at("v")) {
      if (!v.is_number_integer()) parse_error("vertex indices must be integers");
      edge.vertices.push_back(v.get<std::int64_t>());
    }
    if (!e.at("w").is_number()) parse_error("edge weight must be a number");
    edge.weight = e.at("w").get<double>();
    raw.edges.push_back(std::move(edge));
  }
  return raw;
}

RawHypergraph parse_plain_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) parse_error("empty hypergraph file");

  RawHypergraph raw;
  std::int64_t m = 0;
  {
    std::istringstream header(lines[0]);
    std::string extra;
    if (!(header >> raw.k >> raw.n >> m) || (header >> extra)) {
      parse_error("header must be \"k n m\"");
    }
  }
  if (m < 0 || static_cast<std::size_t>(m) != lines.size() - 1) {
    parse_error("header announces " + std::to_string(m) + " edges, found " +
                std::to_string(lines.size() - 1));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    std::vector<std::string> tokens;
    for (std::string t; row >> t;) tokens.push_back(t);
    if (tokens.size() < 2) parse_error("edge line " + std::to_string(i) + " is too short");
    RawHypergraph::Edge edge;
    try {
      for (std::size_t t = 0; t + 1 < tokens.size(); ++t) {
        std::size_t used = 0;
        edge.vertices.push_back(std::stoll(tokens[t], &used));
        if (used != tokens[t].size()) throw std::invalid_argument("trailing");
      }
      std::size_t used = 0;
      edge.weight = std::stod(tokens.back(), &used);
      if (used != tokens.back().size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      parse_error("edge line " + std::to_string(i) + " has a malformed number");
    }
    raw.edges.push_back(std::move(edge));
  }
  return raw;
}

RawHypergraph parse_hypergraph(std::string_view text) {
  for (const char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_whg_json(text) : parse_plain_text(text);
  }
  parse_error("empty hypergraph file");
}

WeightedHypergraph load_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return validate(parse_hypergraph(buffer.str()));
}

ordered_json to_whg_json(const WeightedHypergraph& g) {
  ordered_json j;
  j["format"] = "whg-1";
  j["k"] = g.order();
  j["n"] = g.num_vertices();
  auto edges = ordered_json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto vs = g.edge(e);
    edges.push_back({{"v", std::vector<Vertex>(vs.begin(), vs.end())},
                     {"w", g.weight(e)}});
  }
  j["edges"] = std::move(edges);
  return j;
}

std::string to_plain_text(const WeightedHypergraph& g) {
  std::ostringstream out;
  out.precision(17);
  out << g.order() << ' ' << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (const auto v : g.edge(e)) out << v << ' ';
    out << g.weight(e) << '\n';
  }
  return out.str();
}

ordered_json to_json(const HypergraphStats& s) {
  return {{"degrees", s.degrees},
          {"vertex_weights", s.vertex_weights},
          {"max_degree", s.max_degree},
          {"max_edge_weight", s.max_edge_weight},
          {"alpha", s.alpha},
          {"delta", s.delta},
          {"total_edge_weight", s.total_edge_weight}};
}

ordered_json to_json(const RegularityInfo& r) {
  return {{"is_regular", r.is_regular},
          {"r", optional_json(r.r)},
          {"is_uniform_weight", r.is_uniform_weight},
          {"common_weight", optional_json(r.common_weight)}};
}

ordered_json to_json(const PowerIterationResult& r) {
  return {{"rho", r.rho},
          {"x", r.x},
          {"iterations", r.iterations},
          {"converged", r.converged},
          {"final_gap", r.final_gap},
          {"shift", r.shift}};
}

ordered_json to_json(const Eigenpair& p) {
  return {{"lambda", p.lambda},
          {"x", p.x},
          {"class", std::string(to_string(p.eigen_class))},
          {"residual", p.residual}};
}

ordered_json to_json(const std::vector<Eigenpair>& pairs) {
  auto out = ordered_json::array();
  for (const auto& p : pairs) out.push_back(to_json(p));
  return out;
}

ordered_json to_json(const BoundReport& report) {
  auto entries = ordered_json::array();
  for (const auto& e : report.entries) {
    ordered_json j;
    j["theorem_id"] = e.theorem_id;
    j["statement"] = e.statement;
    j["bound"] = {optional_json(e.lower), optional_json(e.upper)};
    j["measured"] = optional_json(e.measured);
    j["verdict"] = std::string(to_string(e.verdict));
    j["slack"] = e.slack;
    j["min_slack"] = e.min_slack;
    if (e.value) j["value"] = *e.value;
    entries.push_back(std::move(j));
  }
  return {{"stats", to_json(report.stats)},
          {"regularity", to_json(report.regularity)},
          {"rho_adjacency", to_json(report.adjacency_radius)},
          {"rho_signless_laplacian", to_json(report.signless_radius)},
          {"principal_vertex", report.principal_vertex},
          {"entries", std::move(entries)},
          {"all_hold", report.all_hold()}};
}

ordered_json to_json(const DenseTensor& t) {
  auto entries = ordered_json::array();
  std::vector<std::size_t> idx(t.order());
  const auto values = t.entries();
  for (std::size_t lin = 0; lin < values.size(); ++lin) {
    if (values[lin] == 0.0) continue;
    t.unravel(lin, idx);
    entries.push_back({{"idx", idx}, {"val", values[lin]}});
  }
  return {{"k", t.order()}, {"n", t.dimension()}, {"entries", std::move(entries)}};
}

ordered_json to_json(const GeneratorSpec& spec) {
  ordered_json w;
  switch (spec.weights.kind) {
    case WeightScheme::Kind::Uniform:
      w = {{"scheme", "uniform"}, {"value", spec.weights.value}};
      break;
    case WeightScheme::Kind::RandomRange:
      w = {{"scheme", "range"}, {"lo", spec.weights.lo}, {"hi", spec.weights.hi}};
      break;
    case WeightScheme::Kind::Explicit:
      w = {{"scheme", "explicit"}, {"values", spec.weights.list}};
      break;
  }
  return {{"family", std::string(to_string(spec.family))},
          {"k", spec.k},
          {"n", spec.n},
          {"m", spec.m},
          {"length", spec.length},
          {"degree", spec.degree},
          {"weights", std::move(w)},
          {"seed", spec.seed}};
}

GeneratorSpec generator_spec_from_json(const json& j) {
  if (!j.is_object()) parse_error("generator spec must be an object");
  GeneratorSpec spec;
  try {
    spec.family = parse_family(j.at("family").get<std::string>());
    spec.k = j.at("k").get<std::size_t>();
    spec.n = j.value("n", std::size_t{0});
    spec.m = j.value("m", std::size_t{0});
    spec.length = j.value("length", std::size_t{0});
    spec.degree = j.value("degree", std::size_t{0});
    spec.seed = j.value("seed", std::uint64_t{1});
    if (j.contains("weights")) {
      const auto& w = j.at("weights");
      const auto scheme = w.at("scheme").get<std::string>();
      if (scheme == "uniform") {
        spec.weights = WeightScheme::uniform(w.at("value").get<double>());
      } else if (scheme == "range") {
        spec.weights = WeightScheme::range(w.at("lo").get<double>(),
                                           w.at("hi").get<double>());
      } else if (scheme == "explicit") {
        spec.weights =
            WeightScheme::explicit_list(w.at("values").get<std::vector<double>>());
      } else {
        parse_error("unknown weight scheme '" + scheme + "'");
      }
    }
  } catch (const json::exception& e) {
    parse_error(std::string("malformed generator spec: ") + e.what());
  }
  return spec;
}

}  // namespace whg
