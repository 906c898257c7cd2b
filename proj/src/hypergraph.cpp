#include "whg/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "whg/error.hpp"

namespace whg {

namespace {

std::string edge_label(std::size_t index) {
  return "edge " + std::to_string(index);
}

void check_vertex(const WeightedHypergraph& g, Vertex v) {
  if (v >= g.num_vertices()) {
    throw Error(ErrorCode::VertexIndexOutOfRange,
                "vertex " + std::to_string(v) + " not in [0, " +
                    std::to_string(g.num_vertices()) + ")");
  }
}

}  // namespace

bool WeightedHypergraph::contains(EdgeId e, Vertex v) const noexcept {
  const auto vs = edge(e);
  return std::binary_search(vs.begin(), vs.end(), v);
}

WeightedHypergraph validate(const RawHypergraph& raw) {
  if (raw.k < 2) {
    throw Error(ErrorCode::InvalidOrder,
                "edge cardinality k must be >= 2, got " + std::to_string(raw.k));
  }
  if (raw.n < 1) {
    throw Error(ErrorCode::InvalidOrder,
                "vertex count n must be >= 1, got " + std::to_string(raw.n));
  }
  if (raw.n > static_cast<std::int64_t>(UINT32_MAX)) {
    throw Error(ErrorCode::InvalidOrder, "vertex count too large");
  }

  WeightedHypergraph g;
  g.n_ = static_cast<std::size_t>(raw.n);
  g.k_ = static_cast<std::size_t>(raw.k);
  g.vertices_.reserve(raw.edges.size() * g.k_);
  g.weights_.reserve(raw.edges.size());

  std::set<std::vector<Vertex>> seen;
  std::vector<Vertex> sorted;
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    const auto& e = raw.edges[i];
    if (e.vertices.size() != g.k_) {
      throw Error(ErrorCode::NonUniformEdge,
                  edge_label(i) + " has " + std::to_string(e.vertices.size()) +
                      " vertices, expected k = " + std::to_string(g.k_));
    }
    sorted.clear();
    for (const auto v : e.vertices) {
      if (v < 0 || v >= raw.n) {
        throw Error(ErrorCode::VertexIndexOutOfRange,
                    edge_label(i) + " references vertex " + std::to_string(v) +
                        " outside [0, " + std::to_string(raw.n) + ")");
      }
      sorted.push_back(static_cast<Vertex>(v));
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::RepeatedVertexInEdge,
                  edge_label(i) + " repeats a vertex");
    }
    if (!std::isfinite(e.weight)) {
      throw Error(ErrorCode::NonFiniteWeight,
                  edge_label(i) + " has a non-finite weight");
    }
    if (e.weight <= 0.0) {
      std::ostringstream msg;
      msg << edge_label(i) << " has non-positive weight " << e.weight;
      throw Error(ErrorCode::NonPositiveWeight, msg.str());
    }
    if (!seen.insert(sorted).second) {
      throw Error(ErrorCode::DuplicateEdge,
                  edge_label(i) + " repeats an earlier vertex set");
    }
    g.vertices_.insert(g.vertices_.end(), sorted.begin(), sorted.end());
    g.weights_.push_back(e.weight);
  }

  // CSR incidence, edge ids ascending within each vertex.
  std::vector<std::size_t> counts(g.n_, 0);
  for (const auto v : g.vertices_) ++counts[v];
  for (Vertex v = 0; v < g.n_; ++v) {
    if (counts[v] == 0) {
      throw Error(ErrorCode::IsolatedVertex,
                  "vertex " + std::to_string(v) + " lies on no edge");
    }
  }
  g.incidence_offsets_.assign(g.n_ + 1, 0);
  for (std::size_t v = 0; v < g.n_; ++v) {
    g.incidence_offsets_[v + 1] = g.incidence_offsets_[v] + counts[v];
  }
  g.incidence_.resize(g.vertices_.size());
  std::vector<std::size_t> cursor(g.incidence_offsets_.begin(),
                                  g.incidence_offsets_.end() - 1);
  const auto m = static_cast<EdgeId>(g.weights_.size());
  for (EdgeId e = 0; e < m; ++e) {
    for (const auto v : g.edge(e)) g.incidence_[cursor[v]++] = e;
  }

  g.vertex_weights_.assign(g.n_, 0.0);
  for (Vertex v = 0; v < g.n_; ++v) {
    double sum = 0.0;
    for (const auto e : g.incident(v)) sum += g.weights_[e];
    g.vertex_weights_[v] = sum;
  }
  return g;
}

RawHypergraph to_raw(const WeightedHypergraph& g) {
  RawHypergraph raw;
  raw.k = static_cast<std::int64_t>(g.order());
  raw.n = static_cast<std::int64_t>(g.num_vertices());
  raw.edges.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    RawHypergraph::Edge out;
    for (const auto v : g.edge(e)) out.vertices.push_back(v);
    out.weight = g.weight(e);
    raw.edges.push_back(std::move(out));
  }
  return raw;
}

HypergraphStats stats(const WeightedHypergraph& g) {
  HypergraphStats s;
  const auto n = g.num_vertices();
  s.degrees.resize(n);
  s.vertex_weights.assign(g.vertex_weights().begin(), g.vertex_weights().end());
  for (Vertex v = 0; v < n; ++v) {
    s.degrees[v] = g.degree(v);
    s.max_degree = std::max(s.max_degree, s.degrees[v]);
  }
  for (const auto w : g.weights()) {
    s.max_edge_weight = std::max(s.max_edge_weight, w);
    s.total_edge_weight += w;
  }
  s.alpha = *std::max_element(s.vertex_weights.begin(), s.vertex_weights.end());
  s.delta = *std::min_element(s.vertex_weights.begin(), s.vertex_weights.end());
  return s;
}

RegularityInfo regularity(const WeightedHypergraph& g) {
  RegularityInfo info;
  const auto r = g.degree(0);
  info.is_regular = true;
  for (Vertex v = 1; v < g.num_vertices(); ++v) {
    if (g.degree(v) != r) {
      info.is_regular = false;
      break;
    }
  }
  if (info.is_regular) info.r = r;

  const auto w = g.weights();
  info.is_uniform_weight =
      std::all_of(w.begin(), w.end(), [&](double x) { return x == w[0]; });
  if (info.is_uniform_weight) info.common_weight = w[0];
  return info;
}

bool is_connected(const WeightedHypergraph& g) {
  const auto n = g.num_vertices();
  std::vector<char> seen_vertex(n, 0);
  std::vector<char> seen_edge(g.num_edges(), 0);
  std::vector<Vertex> stack{0};
  seen_vertex[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto e : g.incident(v)) {
      if (seen_edge[e]) continue;
      seen_edge[e] = 1;
      for (const auto u : g.edge(e)) {
        if (!seen_vertex[u]) {
          seen_vertex[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
  }
  return reached == n;
}

std::vector<Vertex> neighbors(const WeightedHypergraph& g, Vertex u) {
  check_vertex(g, u);
  std::vector<Vertex> out;
  for (const auto e : g.incident(u)) {
    for (const auto v : g.edge(e)) {
      if (v != u) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t codegree(const WeightedHypergraph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) {
    throw Error(ErrorCode::SameVertex, "codegree needs two distinct vertices");
  }
  // Walk the shorter incidence list.
  if (g.degree(v) < g.degree(u)) std::swap(u, v);
  std::size_t count = 0;
  for (const auto e : g.incident(u)) {
    if (g.contains(e, v)) ++count;
  }
  return count;
}

std::vector<EdgeId> edges_meeting(const WeightedHypergraph& g,
                                  std::span<const Vertex> vertex_set,
                                  std::size_t t) {
  if (vertex_set.empty()) {
    throw Error(ErrorCode::EmptySet, "edges_meeting needs a nonempty set");
  }
  if (t < 1 || t > g.order()) {
    throw Error(ErrorCode::TOutOfRange,
                "t must be in [1, k], got " + std::to_string(t));
  }
  std::vector<char> member(g.num_vertices(), 0);
  for (const auto v : vertex_set) {
    check_vertex(g, v);
    member[v] = 1;
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    std::size_t hits = 0;
    for (const auto v : g.edge(e)) hits += member[v];
    if (hits == t) out.push_back(e);
  }
  return out;
}

}  // namespace whg
