#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "whg/error.hpp"
#include "whg/generators.hpp"

namespace whg {
namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool same(const WeightedHypergraph& a, const WeightedHypergraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (EdgeId e = 0; e < a.num_edges(); ++e) {
    if (!std::ranges::equal(a.edge(e), b.edge(e)) || a.weight(e) != b.weight(e)) {
      return false;
    }
  }
  return true;
}

ErrorCode error_of(const GeneratorSpec& spec) {
  try {
    generate(spec);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "generate accepted inconsistent parameters";
  return ErrorCode::ParseError;
}

TEST(Rng, ReferenceSequence) {
  // std::mt19937_64 fixes its 10000th output for the default seed.
  Rng rng(5489);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng.next();
  EXPECT_EQ(v, 9981545732273789042ULL);
}

TEST(Rng, RangesAndBelow) {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(rng.below(7), 7u);
  }
  EXPECT_EQ(rng.uniform(2.5, 2.5), 2.5);
}

TEST(Generate, SingleEdge) {
  GeneratorSpec spec;
  spec.weights = WeightScheme::uniform(2.0);
  EXPECT_TRUE(same(generate(spec), test::e1()));
}

TEST(Generate, Complete) {
  GeneratorSpec spec;
  spec.family = Family::Complete;
  spec.n = 4;
  const auto g = generate(spec);
  EXPECT_TRUE(same(g, test::c4()));
  const auto r = regularity(g);
  EXPECT_EQ(r.r, 3u);
  EXPECT_TRUE(r.is_uniform_weight);
}

TEST(Generate, CompleteIsRegular) {
  for (std::size_t k = 3; k <= 5; ++k) {
    for (std::size_t n = k; n <= 8; ++n) {
      GeneratorSpec spec;
      spec.family = Family::Complete;
      spec.k = k;
      spec.n = n;
      spec.weights = WeightScheme::uniform(0.7);
      const auto g = generate(spec);
      EXPECT_EQ(g.num_edges(), binomial(n, k));
      const auto r = regularity(g);
      EXPECT_EQ(r.r, binomial(n - 1, k - 1));
      EXPECT_EQ(r.common_weight, 0.7);
    }
  }
}

TEST(Generate, LoosePath) {
  GeneratorSpec spec;
  spec.family = Family::LoosePath;
  spec.length = 2;
  spec.weights = WeightScheme::explicit_list({1.0, 2.0});
  EXPECT_TRUE(same(generate(spec), test::p2()));
}

TEST(Generate, LoosePathDegreeProfile) {
  for (std::size_t k = 3; k <= 5; ++k) {
    for (std::size_t p = 1; p <= 6; ++p) {
      GeneratorSpec spec;
      spec.family = Family::LoosePath;
      spec.k = k;
      spec.length = p;
      const auto g = generate(spec);
      ASSERT_EQ(g.num_vertices(), p * (k - 1) + 1);
      ASSERT_TRUE(is_connected(g));
      std::size_t junctions = 0;
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        EXPECT_LE(g.degree(v), 2u);
        junctions += g.degree(v) == 2;
      }
      EXPECT_EQ(junctions, p - 1);
      EXPECT_EQ(g.degree(0), 1u);
      EXPECT_EQ(g.degree(static_cast<Vertex>(g.num_vertices() - 1)), 1u);
      for (EdgeId e = 0; e + 1 < g.num_edges(); ++e) {
        std::vector<Vertex> common;
        std::ranges::set_intersection(g.edge(e), g.edge(e + 1), std::back_inserter(common));
        EXPECT_EQ(common.size(), 1u);
      }
    }
  }
}

TEST(Generate, Hyperstar) {
  GeneratorSpec spec;
  spec.family = Family::Hyperstar;
  spec.k = 4;
  spec.length = 5;
  const auto g = generate(spec);
  EXPECT_EQ(g.num_vertices(), 16u);
  EXPECT_EQ(g.degree(0), 5u);
  for (Vertex v = 1; v < 16; ++v) EXPECT_EQ(g.degree(v), 1u);
  for (EdgeId e = 0; e < 5; ++e) EXPECT_TRUE(g.contains(e, 0));
}

TEST(Generate, RandomRangeWeights) {
  GeneratorSpec spec;
  spec.family = Family::RandomConnected;
  spec.k = 3;
  spec.n = 10;
  spec.m = 12;
  spec.weights = WeightScheme::range(0.5, 2.0);
  spec.seed = 3;
  const auto g = generate(spec);
  for (const double w : g.weights()) {
    EXPECT_GE(w, 0.5);
    EXPECT_LE(w, 2.0);
  }
  EXPECT_TRUE(same(g, generate(spec)));
}

TEST(Generate, InconsistentParameters) {
  GeneratorSpec path;
  path.family = Family::LoosePath;
  path.length = 0;
  EXPECT_EQ(error_of(path), ErrorCode::InconsistentParameters);

  GeneratorSpec wrong_count;
  wrong_count.family = Family::LoosePath;
  wrong_count.length = 3;
  wrong_count.weights = WeightScheme::explicit_list({1.0});
  EXPECT_EQ(error_of(wrong_count), ErrorCode::InconsistentParameters);

  GeneratorSpec small;
  small.family = Family::Complete;
  small.k = 4;
  small.n = 3;
  EXPECT_EQ(error_of(small), ErrorCode::InconsistentParameters);

  GeneratorSpec bad_weight;
  bad_weight.weights = WeightScheme::uniform(-1.0);
  EXPECT_THROW(generate(bad_weight), Error);
}

TEST(RandomConnected, ExamplesAndDeterminism) {
  const auto a = random_connected(3, 6, 4, 0.5, 2.0, 7);
  const auto b = random_connected(3, 6, 4, 0.5, 2.0, 7);
  EXPECT_TRUE(same(a, b));
  EXPECT_TRUE(is_connected(a));
  EXPECT_EQ(a.num_edges(), 4u);
  EXPECT_FALSE(same(a, random_connected(3, 6, 4, 0.5, 2.0, 8)));

  try {
    random_connected(3, 7, 2, 0.5, 2.0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InconsistentParameters);
  }

  const auto u = random_connected(4, 8, 5, 1.0, 1.0, 1);
  EXPECT_TRUE(regularity(u).is_uniform_weight);
  EXPECT_TRUE(is_connected(u));
}

TEST(RandomConnected, TooManyEdges) {
  EXPECT_THROW(random_connected(3, 5, 11, 1.0, 1.0, 1), Error);
  EXPECT_NO_THROW(random_connected(3, 5, 10, 1.0, 1.0, 1));
}

TEST(RandomConnected, AlwaysValidAndConnected) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t k = 3 + seed % 3;
    const std::size_t n = 4 + seed % 9;
    if (n < k) continue;
    const std::size_t min_m = (n - 1 + k - 2) / (k - 1);
    const std::size_t m = std::min(min_m + seed % 4, binomial(n, k));
    const auto g = random_connected(k, n, m, 0.1, 3.0, seed);
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g.num_edges(), m);
    EXPECT_NO_THROW(validate(to_raw(g)));
  }
}

TEST(RandomRegular, RegularConnectedUniform) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::size_t k = 3 + seed % 2;
    const std::size_t n = k * (2 + seed % 3);
    const std::size_t r = 2 + seed % 2;
    const auto g = random_regular(k, n, r, WeightScheme::uniform(1.25), seed);
    const auto info = regularity(g);
    EXPECT_EQ(info.r, r);
    EXPECT_EQ(info.common_weight, 1.25);
    EXPECT_TRUE(is_connected(g));
  }
}

TEST(RandomRegular, RejectsIndivisible) {
  EXPECT_THROW(random_regular(3, 7, 2, WeightScheme::uniform(1.0), 1), Error);
}

TEST(Family, Names) {
  for (const auto f : {Family::SingleEdge, Family::Complete, Family::LoosePath,
                       Family::Hyperstar, Family::RandomConnected, Family::RandomRegular}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_THROW(parse_family("sunflower"), Error);
}

}  // namespace
}  // namespace whg
