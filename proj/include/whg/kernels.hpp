#pragma once

// Tensor kernels in two flavours. `serial` is the reference: a plain
// edge-scatter loop that is easy to audit. `omp` is what the library uses;
// it gathers per vertex over the incidence lists so each output component is
// written by one thread, and every component is summed in the same order as
// the reference. The two produce bit-identical results.

#include <span>

#include "whg/hypergraph.hpp"
#include "whg/tensor.hpp"

namespace whg::kernels {

namespace serial {

void apply(const WeightedHypergraph& g, TensorKind kind,
           std::span<const double> x, std::span<double> out);
double quadratic_form(const WeightedHypergraph& g, TensorKind kind,
                      std::span<const double> x);
void contract(const DenseTensor& t, std::span<const double> x,
              std::span<double> out);

}  // namespace serial

namespace omp {

void apply(const WeightedHypergraph& g, TensorKind kind,
           std::span<const double> x, std::span<double> out);
double quadratic_form(const WeightedHypergraph& g, TensorKind kind,
                      std::span<const double> x);
void contract(const DenseTensor& t, std::span<const double> x,
              std::span<double> out);

}  // namespace omp

// Thin wrappers over the OpenMP runtime; thread count never changes results.
void set_num_threads(int threads);
int num_threads();

// Work below this many output rows runs on the calling thread only.
inline constexpr std::size_t kParallelThreshold = 256;

}  // namespace whg::kernels
