#include <omp.h>

#include <algorithm>
#include <cstdint>

#include "kernel_terms.hpp"
#include "whg/kernels.hpp"

namespace whg::kernels {

void set_num_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int num_threads() { return omp_get_max_threads(); }

namespace omp {

void apply(const WeightedHypergraph& g, TensorKind kind,
           std::span<const double> x, std::span<double> out) {
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  const auto k = g.order();
  const bool with_adjacency = kind != TensorKind::Degree;

#pragma omp parallel for schedule(static) if (n >= static_cast<std::int64_t>(kParallelThreshold))
  for (std::int64_t ii = 0; ii < n; ++ii) {
    const auto i = static_cast<Vertex>(ii);
    double adjacency = 0.0;
    if (with_adjacency) {
      for (const auto e : g.incident(i)) {
        adjacency += g.weight(e) * detail::product_excluding(g.edge(e), i, x);
      }
    }
    out[i] = detail::combine(kind, g.vertex_weight(i), x[i], k, adjacency);
  }
}

double quadratic_form(const WeightedHypergraph& g, TensorKind kind,
                      std::span<const double> x) {
  const auto k = g.order();
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  const auto m = static_cast<std::int64_t>(g.num_edges());

  // Terms are produced in parallel and reduced sequentially so the sum
  // order matches the serial kernel.
  std::vector<double> vertex_terms;
  if (detail::has_degree_part(kind)) {
    vertex_terms.resize(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) if (n >= static_cast<std::int64_t>(kParallelThreshold))
    for (std::int64_t i = 0; i < n; ++i) {
      vertex_terms[i] = g.vertex_weight(static_cast<Vertex>(i)) *
                        detail::ipow(x[i], k);
    }
  }
  std::vector<double> edge_terms;
  if (kind != TensorKind::Degree) {
    edge_terms.resize(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(static) if (m >= static_cast<std::int64_t>(kParallelThreshold))
    for (std::int64_t e = 0; e < m; ++e) {
      const auto id = static_cast<EdgeId>(e);
      edge_terms[e] = g.weight(id) * detail::product(g.edge(id), x);
    }
  }

  double degree_part = 0.0;
  for (const auto t : vertex_terms) degree_part += t;
  double adjacency_part = 0.0;
  for (const auto t : edge_terms) adjacency_part += t;
  adjacency_part *= static_cast<double>(k);

  switch (kind) {
    case TensorKind::Adjacency: return adjacency_part;
    case TensorKind::Degree: return degree_part;
    case TensorKind::Laplacian: return degree_part - adjacency_part;
    case TensorKind::SignlessLaplacian: return degree_part + adjacency_part;
  }
  return 0.0;
}

void contract(const DenseTensor& t, std::span<const double> x,
              std::span<double> out) {
  const auto n = static_cast<std::int64_t>(t.dimension());
  const auto tail_len = t.order() - 1;
  std::size_t tails = 1;
  for (std::size_t j = 0; j < tail_len; ++j) tails *= t.dimension();
  const auto entries = t.entries();

  // Rows are independent; each row keeps the serial tail order.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    std::vector<std::size_t> idx(tail_len, 0);
    detail::CompensatedSum acc;
    for (std::size_t lin = 0; lin < tails; ++lin) {
      const double a = entries[static_cast<std::size_t>(i) * tails + lin];
      if (a != 0.0) {
        double p = a;
        for (const auto j : idx) p *= x[j];
        acc.add(p);
      }
      for (std::size_t d = tail_len; d-- > 0;) {
        if (++idx[d] < t.dimension()) break;
        idx[d] = 0;
      }
    }
    out[i] = acc.value();
  }
}

}  // namespace omp
}  // namespace whg::kernels
