#include "whg/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "whg/error.hpp"

namespace whg {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Largest multiple of bound that fits; reject the tail.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::SingleEdge: return "single-edge";
    case Family::Complete: return "complete";
    case Family::LoosePath: return "loose-path";
    case Family::Hyperstar: return "hyperstar";
    case Family::RandomConnected: return "random-connected";
    case Family::RandomRegular: return "random-regular";
  }
  return "unknown";
}

Family parse_family(std::string_view text) {
  for (const auto f : {Family::SingleEdge, Family::Complete, Family::LoosePath,
                       Family::Hyperstar, Family::RandomConnected,
                       Family::RandomRegular}) {
    if (text == to_string(f)) return f;
  }
  throw Error(ErrorCode::InconsistentParameters,
              "unknown family '" + std::string(text) + "'");
}

namespace {

using EdgeList = std::vector<std::vector<Vertex>>;

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorCode::InconsistentParameters, what);
}

// C(n, k), saturating at `cap`.
std::size_t binomial(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Exact in long double for the sizes that fit under any sane cap.
  long double c = 1.0L;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (c > static_cast<long double>(cap)) return cap;
  }
  return static_cast<std::size_t>(std::llround(static_cast<double>(c)));
}

void check_weights(const WeightScheme& w) {
  switch (w.kind) {
    case WeightScheme::Kind::Uniform:
      if (!(w.value > 0.0) || !std::isfinite(w.value)) {
        inconsistent("uniform weight must be positive and finite");
      }
      break;
    case WeightScheme::Kind::RandomRange:
      if (!(w.lo > 0.0) || !(w.hi >= w.lo) || !std::isfinite(w.hi)) {
        inconsistent("weight range needs 0 < lo <= hi < inf");
      }
      break;
    case WeightScheme::Kind::Explicit:
      break;  // validate() rejects bad values
  }
}

std::vector<double> draw_weights(const WeightScheme& w, std::size_t m,
                                 Rng& rng) {
  std::vector<double> out;
  out.reserve(m);
  switch (w.kind) {
    case WeightScheme::Kind::Uniform:
      out.assign(m, w.value);
      break;
    case WeightScheme::Kind::RandomRange:
      for (std::size_t i = 0; i < m; ++i) out.push_back(rng.uniform(w.lo, w.hi));
      break;
    case WeightScheme::Kind::Explicit:
      if (w.list.size() != m) {
        inconsistent("explicit weight list has " + std::to_string(w.list.size()) +
                     " entries for " + std::to_string(m) + " edges");
      }
      out = w.list;
      break;
  }
  return out;
}

WeightedHypergraph build(std::size_t k, std::size_t n, const EdgeList& edges,
                         const std::vector<double>& weights) {
  RawHypergraph raw;
  raw.k = static_cast<std::int64_t>(k);
  raw.n = static_cast<std::int64_t>(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    RawHypergraph::Edge e;
    e.vertices.assign(edges[i].begin(), edges[i].end());
    e.weight = weights[i];
    raw.edges.push_back(std::move(e));
  }
  return validate(raw);
}

std::vector<Vertex> random_subset(std::size_t n, std::size_t k, Rng& rng) {
  std::vector<Vertex> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<Vertex>(i);
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + rng.below(n - i)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// All k-subsets of [0, n) in lexicographic order.
EdgeList all_subsets(std::size_t n, std::size_t k) {
  EdgeList out;
  std::vector<Vertex> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<Vertex>(i);
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

constexpr std::size_t kEnumerateLimit = 20'000;
constexpr std::size_t kMaxAttempts = 1'000;

WeightedHypergraph random_connected_impl(std::size_t k, std::size_t n,
                                         std::size_t m,
                                         const WeightScheme& weights,
                                         Rng& rng) {
  if (k < 2 || n < k) inconsistent("random-connected needs 2 <= k <= n");
  check_weights(weights);
  const std::size_t tree_edges = (n - 1 + (k - 2)) / (k - 1);
  if (m < std::max<std::size_t>(tree_edges, 1)) {
    inconsistent(std::to_string(m) + " edges cannot connect " +
                 std::to_string(n) + " vertices with k = " + std::to_string(k) +
                 " (need at least " + std::to_string(std::max<std::size_t>(tree_edges, 1)) + ")");
  }
  const auto available = binomial(n, k, std::numeric_limits<std::size_t>::max());
  if (m > available) {
    inconsistent("m exceeds the " + std::to_string(available) +
                 " possible k-subsets");
  }

  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Vertex> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
    rng.shuffle(perm);

    // Spanning tree of edges, each adding 1..k-1 fresh vertices. The first
    // edge is always full so later edges can draw their old vertices.
    const std::size_t trees = std::max<std::size_t>(tree_edges, 1);
    std::vector<std::size_t> fresh(trees, k - 1);
    std::size_t excess = trees * (k - 1) - (n - 1);
    while (excess > 0) {
      const auto t = 1 + rng.below(trees - 1);
      if (fresh[t] > 1) {
        --fresh[t];
        --excess;
      }
    }

    EdgeList edges;
    std::set<std::vector<Vertex>> used;
    std::vector<Vertex> covered{perm[0]};
    std::size_t next = 1;
    for (std::size_t t = 0; t < trees; ++t) {
      std::vector<Vertex> e(perm.begin() + static_cast<std::ptrdiff_t>(next),
                            perm.begin() + static_cast<std::ptrdiff_t>(next + fresh[t]));
      auto old = covered;
      for (std::size_t i = 0; i < k - fresh[t]; ++i) {
        std::swap(old[i], old[i + rng.below(old.size() - i)]);
        e.push_back(old[i]);
      }
      covered.insert(covered.end(), perm.begin() + static_cast<std::ptrdiff_t>(next),
                     perm.begin() + static_cast<std::ptrdiff_t>(next + fresh[t]));
      next += fresh[t];
      std::sort(e.begin(), e.end());
      used.insert(e);
      edges.push_back(std::move(e));
    }

    const std::size_t extra = m - trees;
    bool ok = true;
    if (extra > 0 && available <= kEnumerateLimit) {
      EdgeList pool;
      for (auto& s : all_subsets(n, k)) {
        if (!used.count(s)) pool.push_back(std::move(s));
      }
      rng.shuffle(pool);
      pool.resize(extra);
      for (auto& s : pool) edges.push_back(std::move(s));
    } else {
      std::size_t budget = 100 * extra + 100;
      while (edges.size() < m && budget-- > 0) {
        auto s = random_subset(n, k, rng);
        if (used.insert(s).second) edges.push_back(std::move(s));
      }
      ok = edges.size() == m;
    }
    if (!ok) continue;

    rng.shuffle(edges);
    auto g = build(k, n, edges, draw_weights(weights, m, rng));
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::ConnectivityUnreachable,
              "no connected instance within the retry budget");
}

WeightedHypergraph random_regular_impl(std::size_t k, std::size_t n,
                                       std::size_t r,
                                       const WeightScheme& weights, Rng& rng) {
  if (k < 2 || n < k || n % k != 0) {
    inconsistent("random-regular needs k >= 2 dividing n");
  }
  if (r < 1 || r > binomial(n - 1, k - 1, std::numeric_limits<std::size_t>::max())) {
    inconsistent("degree out of range for random-regular");
  }
  check_weights(weights);
  const std::size_t m = r * n / k;
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    EdgeList edges;
    std::set<std::vector<Vertex>> used;
    bool simple = true;
    for (std::size_t round = 0; round < r && simple; ++round) {
      std::vector<Vertex> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
      rng.shuffle(perm);
      for (std::size_t b = 0; b < n; b += k) {
        std::vector<Vertex> e(perm.begin() + static_cast<std::ptrdiff_t>(b),
                              perm.begin() + static_cast<std::ptrdiff_t>(b + k));
        std::sort(e.begin(), e.end());
        if (!used.insert(e).second) {
          simple = false;
          break;
        }
        edges.push_back(std::move(e));
      }
    }
    if (!simple) continue;
    auto g = build(k, n, edges, draw_weights(weights, m, rng));
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::ConnectivityUnreachable,
              "no simple connected regular instance within the retry budget");
}

}  // namespace

WeightedHypergraph generate(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  const auto k = spec.k;
  if (k < 2) inconsistent("k must be >= 2");

  switch (spec.family) {
    case Family::SingleEdge: {
      check_weights(spec.weights);
      EdgeList edges{std::vector<Vertex>(k)};
      for (std::size_t i = 0; i < k; ++i) edges[0][i] = static_cast<Vertex>(i);
      return build(k, k, edges, draw_weights(spec.weights, 1, rng));
    }
    case Family::Complete: {
      if (spec.n < k) inconsistent("complete needs n >= k");
      if (binomial(spec.n, k, 1'000'001) > 1'000'000) {
        inconsistent("complete hypergraph has more than 10^6 edges");
      }
      check_weights(spec.weights);
      auto edges = all_subsets(spec.n, k);
      const auto m = edges.size();
      return build(k, spec.n, edges, draw_weights(spec.weights, m, rng));
    }
    case Family::LoosePath:
    case Family::Hyperstar: {
      const auto p = spec.length;
      if (p < 1) inconsistent("length must be >= 1");
      check_weights(spec.weights);
      const std::size_t n = p * (k - 1) + 1;
      if (spec.n != 0 && spec.n != n) {
        inconsistent("length " + std::to_string(p) + " with k = " +
                     std::to_string(k) + " gives n = " + std::to_string(n));
      }
      EdgeList edges;
      for (std::size_t j = 0; j < p; ++j) {
        std::vector<Vertex> e;
        if (spec.family == Family::LoosePath) {
          for (std::size_t i = 0; i < k; ++i) {
            e.push_back(static_cast<Vertex>(j * (k - 1) + i));
          }
        } else {
          e.push_back(0);
          for (std::size_t i = 0; i + 1 < k; ++i) {
            e.push_back(static_cast<Vertex>(1 + j * (k - 1) + i));
          }
        }
        edges.push_back(std::move(e));
      }
      return build(k, n, edges, draw_weights(spec.weights, p, rng));
    }
    case Family::RandomConnected:
      return random_connected_impl(k, spec.n, spec.m, spec.weights, rng);
    case Family::RandomRegular:
      return random_regular_impl(k, spec.n, spec.degree, spec.weights, rng);
  }
  inconsistent("unknown family");
}

WeightedHypergraph random_connected(std::size_t k, std::size_t n, std::size_t m,
                                    double lo, double hi, std::uint64_t seed) {
  Rng rng(seed);
  return random_connected_impl(k, n, m, WeightScheme::range(lo, hi), rng);
}

WeightedHypergraph random_regular(std::size_t k, std::size_t n, std::size_t r,
                                  const WeightScheme& weights,
                                  std::uint64_t seed) {
  Rng rng(seed);
  return random_regular_impl(k, n, r, weights, rng);
}

}  // namespace whg
