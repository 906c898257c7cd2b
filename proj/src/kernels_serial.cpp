#include <algorithm>

#include "kernel_terms.hpp"
#include "whg/kernels.hpp"

namespace whg::kernels::serial {

void apply(const WeightedHypergraph& g, TensorKind kind,
           std::span<const double> x, std::span<double> out) {
  const auto n = g.num_vertices();
  const auto k = g.order();
  std::vector<double> adjacency(n, 0.0);
  if (kind != TensorKind::Degree) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto vs = g.edge(e);
      const auto w = g.weight(e);
      for (const auto i : vs) {
        adjacency[i] += w * detail::product_excluding(vs, i, x);
      }
    }
  }
  for (Vertex i = 0; i < n; ++i) {
    out[i] = detail::combine(kind, g.vertex_weight(i), x[i], k, adjacency[i]);
  }
}

double quadratic_form(const WeightedHypergraph& g, TensorKind kind,
                      std::span<const double> x) {
  const auto k = g.order();
  double degree_part = 0.0;
  if (detail::has_degree_part(kind)) {
    for (Vertex i = 0; i < g.num_vertices(); ++i) {
      degree_part += g.vertex_weight(i) * detail::ipow(x[i], k);
    }
  }
  double adjacency_part = 0.0;
  if (kind != TensorKind::Degree) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      adjacency_part += g.weight(e) * detail::product(g.edge(e), x);
    }
    adjacency_part *= static_cast<double>(k);
  }
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
  const auto n = t.dimension();
  const auto tail_len = t.order() - 1;
  std::size_t tails = 1;
  for (std::size_t j = 0; j < tail_len; ++j) tails *= n;

  const auto entries = t.entries();
  std::vector<std::size_t> idx(tail_len);
  for (std::size_t i = 0; i < n; ++i) {
    detail::CompensatedSum acc;
    std::fill(idx.begin(), idx.end(), 0);
    for (std::size_t lin = 0; lin < tails; ++lin) {
      const double a = entries[i * tails + lin];
      if (a != 0.0) {
        double p = a;
        for (const auto j : idx) p *= x[j];
        acc.add(p);
      }
      // odometer over (i2, .., ik), last index fastest
      for (std::size_t d = tail_len; d-- > 0;) {
        if (++idx[d] < n) break;
        idx[d] = 0;
      }
    }
    out[i] = acc.value();
  }
}

}  // namespace whg::kernels::serial
