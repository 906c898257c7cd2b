#include "whg/tensor.hpp"

#include <algorithm>
#include <limits>
#include <stack>
#include <string>

#include "kernel_terms.hpp"
#include "whg/error.hpp"
#include "whg/kernels.hpp"

namespace whg {

std::string_view to_string(TensorKind kind) noexcept {
  switch (kind) {
    case TensorKind::Adjacency: return "adjacency";
    case TensorKind::Degree: return "degree";
    case TensorKind::Laplacian: return "laplacian";
    case TensorKind::SignlessLaplacian: return "signless_laplacian";
  }
  return "unknown";
}

TensorKind parse_tensor_kind(std::string_view text) {
  if (text == "A" || text == "adjacency") return TensorKind::Adjacency;
  if (text == "D" || text == "degree") return TensorKind::Degree;
  if (text == "L" || text == "laplacian") return TensorKind::Laplacian;
  if (text == "Q" || text == "signless_laplacian") {
    return TensorKind::SignlessLaplacian;
  }
  throw Error(ErrorCode::UnsupportedTensorKind,
              "unknown tensor kind '" + std::string(text) + "'");
}

namespace {

void check_length(const WeightedHypergraph& g, std::span<const double> x) {
  if (x.size() != g.num_vertices()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector has length " + std::to_string(x.size()) +
                    ", hypergraph has " + std::to_string(g.num_vertices()) +
                    " vertices");
  }
}

std::size_t factorial(std::size_t k) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<double> apply(const WeightedHypergraph& g, TensorKind kind,
                          std::span<const double> x) {
  check_length(g, x);
  std::vector<double> out(g.num_vertices());
  kernels::omp::apply(g, kind, x, out);
  return out;
}

double quadratic_form(const WeightedHypergraph& g, TensorKind kind,
                      std::span<const double> x) {
  check_length(g, x);
  return kernels::omp::quadratic_form(g, kind, x);
}

std::vector<double> apply_jacobian(const WeightedHypergraph& g,
                                   TensorKind kind, std::span<const double> x) {
  check_length(g, x);
  const auto n = g.num_vertices();
  const auto k = g.order();
  std::vector<double> jac(n * n, 0.0);

  if (kind != TensorKind::Degree) {
    const double sign = kind == TensorKind::Laplacian ? -1.0 : 1.0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto vs = g.edge(e);
      const double w = sign * g.weight(e);
      for (const auto i : vs) {
        for (const auto j : vs) {
          if (j == i) continue;
          double p = w;
          for (const auto v : vs) {
            if (v != i && v != j) p *= x[v];
          }
          jac[i * n + j] += p;
        }
      }
    }
  }
  if (detail::has_degree_part(kind)) {
    for (Vertex i = 0; i < n; ++i) {
      jac[i * n + i] += static_cast<double>(k - 1) * g.vertex_weight(i) *
                        detail::ipow(x[i], k - 2);
    }
  }
  return jac;
}

DenseTensor::DenseTensor(std::size_t order, std::size_t dimension)
    : order_(order), dimension_(dimension) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < order; ++i) {
    if (dimension != 0 &&
        total > std::numeric_limits<std::size_t>::max() / dimension) {
      throw Error(ErrorCode::TooLarge, "tensor size overflows");
    }
    total *= dimension;
  }
  entries_.assign(total, 0.0);
}

std::size_t DenseTensor::linear_index(
    std::span<const std::size_t> index) const {
  if (index.size() != order_) {
    throw Error(ErrorCode::DimensionMismatch, "index has wrong order");
  }
  std::size_t lin = 0;
  for (const auto i : index) {
    if (i >= dimension_) {
      throw Error(ErrorCode::VertexIndexOutOfRange, "tensor index out of range");
    }
    lin = lin * dimension_ + i;
  }
  return lin;
}

void DenseTensor::unravel(std::size_t linear,
                          std::span<std::size_t> index) const {
  for (std::size_t d = order_; d-- > 0;) {
    index[d] = linear % dimension_;
    linear /= dimension_;
  }
}

double& DenseTensor::operator[](std::span<const std::size_t> index) {
  return entries_[linear_index(index)];
}

double DenseTensor::operator[](std::span<const std::size_t> index) const {
  return entries_[linear_index(index)];
}

DenseTensor materialize(const WeightedHypergraph& g, TensorKind kind,
                        std::size_t max_entries) {
  const auto n = g.num_vertices();
  const auto k = g.order();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > max_entries / n) {
      throw Error(ErrorCode::TooLarge,
                  "n^k = " + std::to_string(n) + "^" + std::to_string(k) +
                      " exceeds the cap of " + std::to_string(max_entries) +
                      " entries");
    }
    total *= n;
  }

  DenseTensor t(k, n);
  std::vector<std::size_t> idx(k);
  if (detail::has_degree_part(kind)) {
    for (Vertex i = 0; i < n; ++i) {
      std::fill(idx.begin(), idx.end(), i);
      t[idx] = g.vertex_weight(i);
    }
  }
  if (kind != TensorKind::Degree) {
    const double sign = kind == TensorKind::Laplacian ? -1.0 : 1.0;
    const auto perms = static_cast<double>(factorial(k - 1));
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto vs = g.edge(e);
      const double value = sign * (g.weight(e) / perms);
      std::copy(vs.begin(), vs.end(), idx.begin());
      do {
        t[idx] = value;
      } while (std::next_permutation(idx.begin(), idx.end()));
    }
  }
  return t;
}

std::vector<double> contract(const DenseTensor& t, std::span<const double> x) {
  if (x.size() != t.dimension()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector length does not match tensor dimension");
  }
  std::vector<double> out(t.dimension());
  kernels::omp::contract(t, x, out);
  return out;
}

std::size_t ComparabilityDigraph::num_arcs() const noexcept {
  std::size_t total = 0;
  for (const auto& s : successors) total += s.size();
  return total;
}

bool ComparabilityDigraph::has_arc(Vertex from, Vertex to) const {
  const auto& s = successors.at(from);
  return std::binary_search(s.begin(), s.end(), to);
}

ComparabilityDigraph comparability_digraph(const WeightedHypergraph& g) {
  ComparabilityDigraph graph;
  graph.num_vertices = g.num_vertices();
  graph.successors.resize(g.num_vertices());
  for (Vertex i = 0; i < g.num_vertices(); ++i) {
    graph.successors[i] = neighbors(g, i);
  }
  return graph;
}

ComparabilityDigraph digraph_from_entries(const DenseTensor& t) {
  const auto n = t.dimension();
  const auto k = t.order();
  std::vector<std::vector<char>> arc(n, std::vector<char>(n, 0));
  std::vector<std::size_t> idx(k);
  const auto entries = t.entries();
  for (std::size_t lin = 0; lin < entries.size(); ++lin) {
    if (!(entries[lin] > 0.0)) continue;
    t.unravel(lin, idx);
    for (std::size_t d = 1; d < k; ++d) {
      if (idx[d] != idx[0]) arc[idx[0]][idx[d]] = 1;
    }
  }
  ComparabilityDigraph graph;
  graph.num_vertices = n;
  graph.successors.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (arc[i][j]) graph.successors[i].push_back(static_cast<Vertex>(j));
    }
  }
  return graph;
}

std::vector<std::vector<Vertex>> strongly_connected_components(
    const ComparabilityDigraph& graph) {
  const auto n = graph.num_vertices;
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> scc_stack;
  std::vector<std::vector<Vertex>> components;
  std::size_t next_index = 0;

  // Explicit DFS frames: (vertex, next successor position).
  std::vector<std::pair<Vertex, std::size_t>> frames;
  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = lowlink[root] = next_index++;
    scc_stack.push_back(root);
    on_stack[root] = 1;

    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& succ = graph.successors[v];
      if (pos < succ.size()) {
        const auto w = succ[pos++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          scc_stack.push_back(w);
          on_stack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      const auto done = v;
      frames.pop_back();
      if (!frames.empty()) {
        auto& parent = frames.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
      }
      if (lowlink[done] == index[done]) {
        std::vector<Vertex> component;
        Vertex w;
        do {
          w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != done);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

bool is_weakly_irreducible(const WeightedHypergraph& g) {
  return strongly_connected_components(comparability_digraph(g)).size() == 1;
}

}  // namespace whg
