#include "whg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kernel_terms.hpp"
#include "whg/error.hpp"

namespace whg {

std::string_view to_string(EigenClass c) noexcept {
  switch (c) {
    case EigenClass::H: return "H";
    case EigenClass::HPlus: return "H+";
    case EigenClass::HPlusPlus: return "H++";
  }
  return "?";
}

namespace {

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (const auto v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

std::vector<double> normalize_max_abs(std::span<const double> x) {
  const double scale = max_abs(x);
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::ZeroVector, "vector is zero or not finite");
  }
  std::vector<double> y(x.begin(), x.end());
  for (auto& v : y) v /= scale;
  return y;
}

Vertex argmax_component(std::span<const double> x) {
  Vertex best = 0;
  for (Vertex i = 1; i < x.size(); ++i) {
    if (x[i] > x[best]) best = i;
  }
  return best;
}

double residual(const WeightedHypergraph& g, TensorKind kind, double lambda,
                std::span<const double> x) {
  if (x.size() != g.num_vertices()) {
    throw Error(ErrorCode::DimensionMismatch,
                "eigenvector length does not match vertex count");
  }
  const auto y = normalize_max_abs(x);
  const auto ty = apply(g, kind, y);
  const auto k = g.order();
  double worst = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    worst = std::max(worst, std::abs(ty[i] - lambda * detail::ipow(y[i], k - 1)));
  }
  return worst;
}

EigenClass classify(std::span<const double> x, double tolerance) {
  const auto y = normalize_max_abs(x);
  const bool all_positive =
      std::all_of(y.begin(), y.end(), [&](double v) { return v > tolerance; });
  if (all_positive) return EigenClass::HPlusPlus;
  const bool all_nonnegative =
      std::all_of(y.begin(), y.end(), [&](double v) { return v >= -tolerance; });
  return all_nonnegative ? EigenClass::HPlus : EigenClass::H;
}

PowerIterationResult power_iteration(const WeightedHypergraph& g,
                                     TensorKind kind,
                                     const PowerIterationOptions& options) {
  if (kind != TensorKind::Adjacency && kind != TensorKind::SignlessLaplacian) {
    throw Error(ErrorCode::UnsupportedTensorKind,
                "power iteration supports the adjacency and signless "
                "Laplacian tensors only");
  }
  if (!is_connected(g)) {
    throw Error(ErrorCode::Disconnected,
                "power iteration needs a connected hypergraph");
  }
  const auto n = g.num_vertices();
  const auto k = g.order();
  const auto s = stats(g);

  PowerIterationResult result;
  result.shift =
      std::max(1.0, s.max_edge_weight * static_cast<double>(s.max_degree));

  std::vector<double> x;
  if (options.start.empty()) {
    x.assign(n, 1.0);
  } else {
    if (options.start.size() != n) {
      throw Error(ErrorCode::DimensionMismatch,
                  "start vector length does not match vertex count");
    }
    if (!std::all_of(options.start.begin(), options.start.end(),
                     [](double v) { return v > 0.0 && std::isfinite(v); })) {
      throw Error(ErrorCode::InconsistentParameters,
                  "start vector must be strictly positive");
    }
    x = normalize_max_abs(options.start);
  }

  const double root = 1.0 / static_cast<double>(k - 1);
  std::vector<double> y(n);
  double lower = 0.0;
  double upper = 0.0;
  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    const auto tx = apply(g, kind, x);
    lower = std::numeric_limits<double>::infinity();
    upper = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const double xk = detail::ipow(x[i], k - 1);
      y[i] = tx[i] + result.shift * xk;
      const double ratio = y[i] / xk;
      lower = std::min(lower, ratio);
      upper = std::max(upper, ratio);
    }
    if (options.on_bracket) options.on_bracket(it, lower, upper);
    result.iterations = it + 1;
    result.final_gap = upper - lower;
    if (result.final_gap < options.tolerance) {
      result.converged = true;
      break;
    }
    double top = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = std::pow(y[i], root);
      top = std::max(top, y[i]);
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / top;
  }
  result.rho = 0.5 * (lower + upper) - result.shift;
  result.x = std::move(x);
  return result;
}

std::vector<Eigenpair> known_eigenpairs(const WeightedHypergraph& g,
                                        TensorKind kind) {
  const auto n = g.num_vertices();
  std::vector<Eigenpair> out;
  auto push = [&](double lambda, std::vector<double> x, EigenClass c) {
    Eigenpair p;
    p.lambda = lambda;
    p.residual = residual(g, kind, lambda, x);
    p.x = std::move(x);
    p.kind = kind;
    p.eigen_class = c;
    out.push_back(std::move(p));
  };
  auto unit = [&](Vertex i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    return e;
  };

  const auto reg = regularity(g);
  switch (kind) {
    case TensorKind::Laplacian:
      push(0.0, std::vector<double>(n, 1.0), EigenClass::HPlusPlus);
      for (Vertex i = 0; i < n; ++i) {
        push(g.vertex_weight(i), unit(i), EigenClass::HPlus);
      }
      break;
    case TensorKind::SignlessLaplacian:
    case TensorKind::Degree:
      for (Vertex i = 0; i < n; ++i) {
        push(g.vertex_weight(i), unit(i), EigenClass::HPlus);
      }
      if (kind == TensorKind::SignlessLaplacian && reg.regular_and_uniform()) {
        push(2.0 * *reg.common_weight * static_cast<double>(*reg.r),
             std::vector<double>(n, 1.0), EigenClass::HPlusPlus);
      }
      break;
    case TensorKind::Adjacency:
      for (Vertex i = 0; i < n; ++i) push(0.0, unit(i), EigenClass::HPlus);
      if (reg.regular_and_uniform()) {
        push(*reg.common_weight * static_cast<double>(*reg.r),
             std::vector<double>(n, 1.0), EigenClass::HPlusPlus);
      }
      break;
  }
  return out;
}

ShiftedEigenvalues shift_relation(const WeightedHypergraph& g, double lambda,
                                  std::span<const double> x,
                                  double tolerance) {
  const auto reg = regularity(g);
  if (!reg.regular_and_uniform()) {
    throw Error(ErrorCode::NotRegularUniform,
                "shift relation needs an r-regular hypergraph with a single "
                "edge weight");
  }
  const double res = residual(g, TensorKind::Laplacian, lambda, x);
  if (!(res < tolerance)) {
    throw Error(ErrorCode::NotAnEigenpair,
                "(lambda, x) is not a Laplacian eigenpair: residual " +
                    std::to_string(res));
  }
  const double w0r = *reg.common_weight * static_cast<double>(*reg.r);
  return {2.0 * w0r - lambda, w0r - lambda};
}

}  // namespace whg
