#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "whg/hypergraph.hpp"

namespace whg {

// Portable seeded RNG. The engine is std::mt19937_64, whose output sequence
// is fixed by the C++ standard; the conversions below are written out here
// instead of using <random> distributions, whose algorithms are
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform in [lo, hi]; returns lo exactly when lo == hi.
  double uniform(double lo, double hi) {
    return lo == hi ? lo : lo + (hi - lo) * uniform01();
  }
  // Uniform integer in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

enum class Family { SingleEdge, Complete, LoosePath, Hyperstar, RandomConnected,
                    RandomRegular };

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view text);

struct WeightScheme {
  enum class Kind { Uniform, RandomRange, Explicit };
  Kind kind = Kind::Uniform;
  double value = 1.0;             // Uniform
  double lo = 1.0, hi = 1.0;      // RandomRange
  std::vector<double> list;       // Explicit, one weight per edge

  static WeightScheme uniform(double w) { return {Kind::Uniform, w, 1.0, 1.0, {}}; }
  static WeightScheme range(double lo, double hi) {
    return {Kind::RandomRange, 1.0, lo, hi, {}};
  }
  static WeightScheme explicit_list(std::vector<double> w) {
    return {Kind::Explicit, 1.0, 1.0, 1.0, std::move(w)};
  }
};

// Size parameters by family:
//   SingleEdge       k                      (n = k)
//   Complete         k, n                   (all C(n, k) edges)
//   LoosePath        k, length              (n = length (k-1) + 1)
//   Hyperstar        k, length = #edges     (n = length (k-1) + 1)
//   RandomConnected  k, n, m
//   RandomRegular    k, n, degree           (k divides n)
struct GeneratorSpec {
  Family family = Family::SingleEdge;
  std::size_t k = 3;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t length = 0;
  std::size_t degree = 0;
  WeightScheme weights;
  std::uint64_t seed = 1;
};

// Deterministic for a fixed spec. Throws InconsistentParameters or
// ConnectivityUnreachable.
WeightedHypergraph generate(const GeneratorSpec& spec);

// Connected, simple, k-uniform with weights uniform in [lo, hi].
WeightedHypergraph random_connected(std::size_t k, std::size_t n, std::size_t m,
                                    double lo, double hi, std::uint64_t seed);

// r-regular: union of r random partitions of the vertex set into n/k edges,
// resampled until simple and connected.
WeightedHypergraph random_regular(std::size_t k, std::size_t n, std::size_t r,
                                  const WeightScheme& weights,
                                  std::uint64_t seed);

}  // namespace whg
