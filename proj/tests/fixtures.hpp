#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "whg/generators.hpp"
#include "whg/hypergraph.hpp"

namespace whg::test {

using EdgeList = std::vector<std::pair<std::vector<std::int64_t>, double>>;

inline RawHypergraph raw(std::int64_t k, std::int64_t n, const EdgeList& edges) {
  RawHypergraph r;
  r.k = k;
  r.n = n;
  for (const auto& [vs, w] : edges) r.edges.push_back({vs, w});
  return r;
}

inline WeightedHypergraph make(std::int64_t k, std::int64_t n, const EdgeList& edges) {
  return validate(raw(k, n, edges));
}

// Single edge {0,1,2}, weight 2.
inline WeightedHypergraph e1() { return make(3, 3, {{{0, 1, 2}, 2.0}}); }

// Loose path {0,1,2} w=1, {2,3,4} w=2.
inline WeightedHypergraph p2() {
  return make(3, 5, {{{0, 1, 2}, 1.0}, {{2, 3, 4}, 2.0}});
}

// Complete 3-uniform hypergraph on 4 vertices, unit weights.
inline WeightedHypergraph c4() {
  return make(3, 4, {{{0, 1, 2}, 1.0}, {{0, 1, 3}, 1.0}, {{0, 2, 3}, 1.0},
                     {{1, 2, 3}, 1.0}});
}

inline WeightedHypergraph two_components() {
  return make(3, 6, {{{0, 1, 2}, 1.0}, {{3, 4, 5}, 1.0}});
}

inline std::vector<double> random_vector(Rng& rng, std::size_t n, double lo = -1.0,
                                         double hi = 1.0) {
  std::vector<double> x(n);
  for (auto& v : x) v = rng.uniform(lo, hi);
  return x;
}

// A small corpus of connected instances for property tests.
inline std::vector<WeightedHypergraph> small_corpus() {
  std::vector<WeightedHypergraph> out{e1(), p2(), c4()};
  std::uint64_t seed = 100;
  for (std::size_t k : {3, 4}) {
    for (std::size_t n : {5, 7}) {
      const std::size_t m = (n - 1 + k - 2) / (k - 1) + 2;
      out.push_back(random_connected(k, n, m, 0.5, 2.0, seed++));
    }
  }
  return out;
}

}  // namespace whg::test
