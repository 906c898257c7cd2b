#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace whg {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Untrusted description of a hypergraph, as produced by the file parsers.
// Vertex indices are kept signed so out-of-range input survives until
// validation can report it.
struct RawHypergraph {
  struct Edge {
    std::vector<std::int64_t> vertices;
    double weight = 0.0;
  };
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::vector<Edge> edges;
};

// Simple k-uniform hypergraph with strictly positive edge weights.
//
// Instances can only be obtained through validate(), so every object
// satisfies: each edge has k distinct in-range vertices (stored sorted),
// no two edges share a vertex set, all weights are finite and > 0, and every
// vertex lies on at least one edge. Connectivity is not required.
//
// Edges keep their input order; that order fixes the summation order of every
// tensor kernel.
class WeightedHypergraph {
 public:
  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t order() const noexcept { return k_; }
  std::size_t num_edges() const noexcept { return weights_.size(); }

  std::span<const Vertex> edge(EdgeId e) const noexcept {
    return {vertices_.data() + static_cast<std::size_t>(e) * k_, k_};
  }
  double weight(EdgeId e) const noexcept { return weights_[e]; }
  std::span<const double> weights() const noexcept { return weights_; }

  // Edges containing v, in edge-list order.
  std::span<const EdgeId> incident(Vertex v) const noexcept {
    return {incidence_.data() + incidence_offsets_[v],
            incidence_offsets_[v + 1] - incidence_offsets_[v]};
  }
  std::size_t degree(Vertex v) const noexcept {
    return incidence_offsets_[v + 1] - incidence_offsets_[v];
  }
  // w_v: sum of weights of the edges through v, summed in edge-list order.
  double vertex_weight(Vertex v) const noexcept { return vertex_weights_[v]; }
  std::span<const double> vertex_weights() const noexcept {
    return vertex_weights_;
  }

  bool contains(EdgeId e, Vertex v) const noexcept;

  // The bound theorems are stated for k >= 3; k = 2 (ordinary graphs) is
  // accepted for sanity checks only.
  bool below_theorem_order() const noexcept { return k_ < 3; }

  friend WeightedHypergraph validate(const RawHypergraph& raw);

 private:
  WeightedHypergraph() = default;

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<Vertex> vertices_;  // m * k, each edge sorted ascending
  std::vector<double> weights_;
  std::vector<std::size_t> incidence_offsets_;
  std::vector<EdgeId> incidence_;
  std::vector<double> vertex_weights_;
};

// Throws Error with one of: InvalidOrder, NonUniformEdge,
// RepeatedVertexInEdge, DuplicateEdge, NonPositiveWeight, NonFiniteWeight,
// VertexIndexOutOfRange, IsolatedVertex.
WeightedHypergraph validate(const RawHypergraph& raw);

// Round trip back to the untrusted form (sorted vertex lists).
RawHypergraph to_raw(const WeightedHypergraph& g);

struct HypergraphStats {
  std::vector<std::size_t> degrees;
  std::vector<double> vertex_weights;
  std::size_t max_degree = 0;      // Delta
  double max_edge_weight = 0.0;    // W0
  double alpha = 0.0;              // max vertex weight
  double delta = 0.0;              // min vertex weight
  double total_edge_weight = 0.0;
};

HypergraphStats stats(const WeightedHypergraph& g);

struct RegularityInfo {
  bool is_regular = false;
  std::optional<std::size_t> r;
  bool is_uniform_weight = false;
  std::optional<double> common_weight;

  bool regular_and_uniform() const noexcept {
    return is_regular && is_uniform_weight;
  }
};

RegularityInfo regularity(const WeightedHypergraph& g);

// True iff the vertex/edge incidence structure has a single component.
bool is_connected(const WeightedHypergraph& g);

// N_G(u), ascending.
std::vector<Vertex> neighbors(const WeightedHypergraph& g, Vertex u);

// e_G(u, v): number of edges containing both u and v.
std::size_t codegree(const WeightedHypergraph& g, Vertex u, Vertex v);

// E_t(X): edges e with |e ∩ X| == t, in edge-list order.
std::vector<EdgeId> edges_meeting(const WeightedHypergraph& g,
                                  std::span<const Vertex> vertex_set,
                                  std::size_t t);

}  // namespace whg
