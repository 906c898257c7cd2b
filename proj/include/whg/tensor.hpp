#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "whg/hypergraph.hpp"

namespace whg {

enum class TensorKind { Adjacency, Degree, Laplacian, SignlessLaplacian };

std::string_view to_string(TensorKind kind) noexcept;
// Accepts the short CLI letters A, D, L, Q as well as the full names.
TensorKind parse_tensor_kind(std::string_view text);

// (T x)_i for T in {A, D, L, Q}, evaluated from the edge list in
// O(sum_e k). Bit-reproducible: each component sums its incident edges in
// edge-list order regardless of thread count.
std::vector<double> apply(const WeightedHypergraph& g, TensorKind kind,
                          std::span<const double> x);

// x^T (T x) in closed form: k * sum_e w(e) x^e for the adjacency part and
// sum_i w_i x_i^k for the degree part.
double quadratic_form(const WeightedHypergraph& g, TensorKind kind,
                      std::span<const double> x);

// d(T x)_i / d x_j as a dense row-major n x n matrix.
std::vector<double> apply_jacobian(const WeightedHypergraph& g,
                                   TensorKind kind, std::span<const double> x);

// Order-k, dimension-n array stored row-major: the linear index of
// (i1, ..., ik) is i1 n^{k-1} + ... + ik.
class DenseTensor {
 public:
  DenseTensor(std::size_t order, std::size_t dimension);

  std::size_t order() const noexcept { return order_; }
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return entries_.size(); }

  double& operator[](std::span<const std::size_t> index);
  double operator[](std::span<const std::size_t> index) const;
  std::span<double> entries() noexcept { return entries_; }
  std::span<const double> entries() const noexcept { return entries_; }

  std::size_t linear_index(std::span<const std::size_t> index) const;
  void unravel(std::size_t linear, std::span<std::size_t> index) const;

 private:
  std::size_t order_;
  std::size_t dimension_;
  std::vector<double> entries_;
};

inline constexpr std::size_t kDefaultDenseCap = 10'000'000;

// Throws TooLarge when n^k exceeds `max_entries`.
DenseTensor materialize(const WeightedHypergraph& g, TensorKind kind,
                        std::size_t max_entries = kDefaultDenseCap);

// General contraction (T x)_i = sum_{i2..ik} t_{i i2 .. ik} x_{i2} ... x_{ik}.
std::vector<double> contract(const DenseTensor& t, std::span<const double> x);

// Gamma_A: arc (i, j), i != j, whenever some edge holds both v_i and v_j.
// Self-arcs are omitted; they never affect strong connectivity.
struct ComparabilityDigraph {
  std::size_t num_vertices = 0;
  std::vector<std::vector<Vertex>> successors;  // ascending per vertex

  std::size_t num_arcs() const noexcept;
  bool has_arc(Vertex from, Vertex to) const;
};

ComparabilityDigraph comparability_digraph(const WeightedHypergraph& g);

// Same digraph read off the entries of a materialized tensor: (i, j) is an
// arc iff some t_{i i2 .. ik} > 0 with j in {i2, .., ik}, j != i.
ComparabilityDigraph digraph_from_entries(const DenseTensor& t);

// Tarjan's algorithm; components are returned in reverse topological order.
std::vector<std::vector<Vertex>> strongly_connected_components(
    const ComparabilityDigraph& graph);

bool is_weakly_irreducible(const WeightedHypergraph& g);

}  // namespace whg
