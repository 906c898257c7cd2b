#pragma once

// Shared scalar building blocks for the serial and OpenMP kernels. Both
// flavours must call exactly these so their floating-point results match.

#include <cmath>
#include <cstddef>
#include <span>

#include "whg/hypergraph.hpp"
#include "whg/tensor.hpp"

namespace whg::detail {

inline double ipow(double x, std::size_t p) noexcept {
  double r = 1.0;
  for (std::size_t i = 0; i < p; ++i) r *= x;
  return r;
}

// x^{e \ {skip}}, factors taken in ascending vertex order.
inline double product_excluding(std::span<const Vertex> edge, Vertex skip,
                                std::span<const double> x) noexcept {
  double p = 1.0;
  for (const auto v : edge) {
    if (v != skip) p *= x[v];
  }
  return p;
}

inline double product(std::span<const Vertex> edge,
                      std::span<const double> x) noexcept {
  double p = 1.0;
  for (const auto v : edge) p *= x[v];
  return p;
}

inline bool has_degree_part(TensorKind kind) noexcept {
  return kind != TensorKind::Adjacency;
}

// Combines the degree and adjacency parts of component i.
inline double combine(TensorKind kind, double vertex_weight, double xi,
                      std::size_t k, double adjacency) noexcept {
  switch (kind) {
    case TensorKind::Adjacency: return adjacency;
    case TensorKind::Degree: return vertex_weight * ipow(xi, k - 1);
    case TensorKind::Laplacian:
      return vertex_weight * ipow(xi, k - 1) - adjacency;
    case TensorKind::SignlessLaplacian:
      return vertex_weight * ipow(xi, k - 1) + adjacency;
  }
  return 0.0;
}

// Neumaier summation. The dense contraction adds (k-1)! copies of every
// edge term, so plain accumulation drifts by many ulps on large rows.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace whg::detail
