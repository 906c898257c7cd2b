#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "fixtures.hpp"
#include "whg/spectral.hpp"

namespace whg {
namespace {

bool found(const std::vector<Eigenpair>& pairs, double lambda) {
  return std::ranges::any_of(pairs, [&](const Eigenpair& p) {
    return std::abs(p.lambda - lambda) < 1e-6;
  });
}

TEST(Newton, SingleEdgeLaplacian) {
  const auto pairs = newton_eigenpair_search(test::e1(), TensorKind::Laplacian, 500, 1);
  EXPECT_TRUE(found(pairs, 0.0));
  EXPECT_TRUE(found(pairs, 2.0));
}

TEST(Newton, SingleEdgeAdjacency) {
  const auto pairs = newton_eigenpair_search(test::e1(), TensorKind::Adjacency, 200, 1);
  EXPECT_TRUE(found(pairs, 0.0));
  EXPECT_TRUE(found(pairs, 2.0));
}

TEST(Newton, LoosePathSignlessHPlusRange) {
  const auto pairs =
      newton_eigenpair_search(test::p2(), TensorKind::SignlessLaplacian, 300, 2);
  ASSERT_FALSE(pairs.empty());
  for (const auto& p : pairs) {
    if (p.eigen_class == EigenClass::H) continue;
    EXPECT_GE(p.lambda, 1.0 - 1e-8);
    EXPECT_LE(p.lambda, 6.0 + 1e-8);
  }
}

TEST(Newton, PairsAreAcceptedSortedAndDistinct) {
  for (const auto kind : {TensorKind::Adjacency, TensorKind::Laplacian,
                          TensorKind::SignlessLaplacian}) {
    const auto pairs = newton_eigenpair_search(test::c4(), kind, 150, 3);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& p = pairs[i];
      EXPECT_EQ(p.kind, kind);
      EXPECT_LT(p.residual, 1e-9);
      EXPECT_NEAR(residual(test::c4(), kind, p.lambda, p.x), p.residual, 1e-12);
      EXPECT_EQ(p.eigen_class, classify(p.x));
      if (i > 0) EXPECT_LE(pairs[i - 1].lambda, p.lambda);
    }
  }
}

TEST(Newton, DeterministicPerSeed) {
  const auto a = newton_eigenpair_search(test::p2(), TensorKind::Laplacian, 100, 9);
  const auto b = newton_eigenpair_search(test::p2(), TensorKind::Laplacian, 100, 9);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].lambda, b[i].lambda);
    EXPECT_EQ(a[i].x, b[i].x);
  }
}

TEST(Newton, RediscoversKnownEigenvalues) {
  for (const auto& g : {test::e1(), test::p2(), test::c4(),
                        random_connected(3, 6, 4, 0.5, 2.0, 17)}) {
    for (const auto kind : {TensorKind::Adjacency, TensorKind::Laplacian,
                            TensorKind::SignlessLaplacian}) {
      const auto pairs = newton_eigenpair_search(g, kind, 200, 1);
      for (const auto& known : known_eigenpairs(g, kind)) {
        EXPECT_TRUE(found(pairs, known.lambda))
            << to_string(kind) << " lambda=" << known.lambda;
      }
    }
  }
}

}  // namespace
}  // namespace whg
