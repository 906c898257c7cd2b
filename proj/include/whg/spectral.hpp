#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "whg/hypergraph.hpp"
#include "whg/tensor.hpp"

namespace whg {

// H: real eigenvector; HPlus: nonnegative; HPlusPlus: strictly positive.
enum class EigenClass { H, HPlus, HPlusPlus };

std::string_view to_string(EigenClass c) noexcept;

inline constexpr double kClassifyThreshold = 1e-9;

struct Eigenpair {
  double lambda = 0.0;
  std::vector<double> x;  // unit max-absolute-component
  TensorKind kind = TensorKind::Adjacency;
  EigenClass eigen_class = EigenClass::H;
  double residual = 0.0;
};

// max_i |(T y)_i - lambda y_i^{k-1}| with y = x / max_i |x_i|.
// Throws ZeroVector or DimensionMismatch.
double residual(const WeightedHypergraph& g, TensorKind kind, double lambda,
                std::span<const double> x);

// Thresholds apply after scaling x to unit max-absolute-component.
EigenClass classify(std::span<const double> x,
                    double tolerance = kClassifyThreshold);

// Scales x by a positive factor so max_i |x_i| = 1.
std::vector<double> normalize_max_abs(std::span<const double> x);

// Index of the largest component, smallest index on ties.
Vertex argmax_component(std::span<const double> x);

struct PowerIterationOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 1'000'000;
  // Strictly positive starting vector; empty means all ones.
  std::vector<double> start;
  // Called once per iteration with the Collatz-Wielandt bracket
  // [min_i y_i / x_i^{k-1}, max_i y_i / x_i^{k-1}] of the shifted map.
  std::function<void(std::size_t iteration, double lower, double upper)>
      on_bracket;
};

struct PowerIterationResult {
  double rho = 0.0;
  std::vector<double> x;  // positive, unit max component
  std::size_t iterations = 0;
  bool converged = false;
  double final_gap = 0.0;
  double shift = 0.0;
};

// Shifted nonnegative-tensor power method for rho(A) or rho(Q):
//   y = T x + s x^{[k-1]},  x <- normalize(y^{[1/(k-1)]}),
// with s = max(1, W0 * Delta). Stops when the ratio bracket of y against
// x^{[k-1]} is narrower than the tolerance; rho is the bracket midpoint
// minus s. Throws Disconnected or UnsupportedTensorKind. Running out of
// iterations is reported through `converged = false`.
PowerIterationResult power_iteration(const WeightedHypergraph& g,
                                     TensorKind kind,
                                     const PowerIterationOptions& options = {});

// Eigenpairs that exist for every connected instance, each with its residual:
//   Laplacian:          (0, 1) and (w_i, e_i) for each i
//   SignlessLaplacian:  (w_i, e_i) for each i, plus (2 W0 r, 1) if regular
//   Adjacency:          (0, e_i) for each i, plus (W0 r, 1) if regular
//   Degree:             (w_i, e_i) for each i
// "regular" meaning r-regular with a single common edge weight W0.
std::vector<Eigenpair> known_eigenpairs(const WeightedHypergraph& g,
                                        TensorKind kind);

struct ShiftedEigenvalues {
  double signless = 0.0;   // 2 W0 r - lambda
  double adjacency = 0.0;  // W0 r - lambda
};

// For an r-regular uniform-weight hypergraph maps a Laplacian H-eigenpair
// (lambda, x) to the signless Laplacian and adjacency eigenvalues sharing x.
// Throws NotRegularUniform, or NotAnEigenpair when the Laplacian residual of
// (lambda, x) is not below `tolerance`.
ShiftedEigenvalues shift_relation(const WeightedHypergraph& g, double lambda,
                                  std::span<const double> x,
                                  double tolerance = 1e-10);

struct NewtonOptions {
  std::size_t restarts = 200;
  std::uint64_t seed = 1;
  std::size_t max_iterations = 200;
  double accept_residual = 1e-9;
  double dedup_lambda = 1e-6;
  double dedup_angle = 1e-4;
};

// Desk-scale oracle: damped Newton on T x = lambda x^{[k-1]}, sum x_i^k = 1
// from seeded random starts. Returns deduplicated real eigenpairs with
// residual below `accept_residual`, sorted by (lambda, x). Not exhaustive.
std::vector<Eigenpair> newton_eigenpair_search(const WeightedHypergraph& g,
                                               TensorKind kind,
                                               const NewtonOptions& options);

inline std::vector<Eigenpair> newton_eigenpair_search(
    const WeightedHypergraph& g, TensorKind kind, std::size_t restarts,
    std::uint64_t seed) {
  NewtonOptions options;
  options.restarts = restarts;
  options.seed = seed;
  return newton_eigenpair_search(g, kind, options);
}

}  // namespace whg
