// Damped Newton search for real eigenpairs of the hypergraph tensors.
//
// Unknowns z = (x, lambda) solve the square system
//   F_i(z) = (T x)_i - lambda x_i^{k-1},  i < n
//   F_n(z) = sum_i x_i^k - 1.
// Steps come from a minimum-norm least-squares solve so singular Jacobians
// (common at sparse roots such as e_i) still make progress. Each step is
// halved up to 30 times until ||F|| decreases.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "kernel_terms.hpp"
#include "whg/generators.hpp"
#include "whg/spectral.hpp"

namespace whg {

namespace {

constexpr int kMaxHalvings = 30;
// Components below these (after unit-max scaling) are tried as exact zeros,
// coarsest first. Near a sparse root of order k the residual only grows like
// eps^(k-1), so unsnapped copies can sit 1e-4 away and still be accepted.
constexpr double kSnapThresholds[] = {1e-2, 1e-4, 1e-6};

struct State {
  Eigen::VectorXd x;
  double lambda = 0.0;
};

class System {
 public:
  System(const WeightedHypergraph& g, TensorKind kind)
      : g_(g), kind_(kind), n_(g.num_vertices()), k_(g.order()) {}

  Eigen::VectorXd residual_vector(const State& s) const {
    const auto tx = apply(g_, kind_, span(s.x));
    Eigen::VectorXd f(n_ + 1);
    double norm = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      f[i] = tx[i] - s.lambda * detail::ipow(s.x[i], k_ - 1);
      norm += detail::ipow(s.x[i], k_);
    }
    f[n_] = norm - 1.0;
    return f;
  }

  Eigen::MatrixXd jacobian(const State& s) const {
    const auto jt = apply_jacobian(g_, kind_, span(s.x));
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n_ + 1, n_ + 1);
    const double km1 = static_cast<double>(k_ - 1);
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) j(r, c) = jt[r * n_ + c];
      j(r, r) -= s.lambda * km1 * detail::ipow(s.x[r], k_ - 2);
      j(r, n_) = -detail::ipow(s.x[r], k_ - 1);
      j(n_, r) = static_cast<double>(k_) * detail::ipow(s.x[r], k_ - 1);
    }
    return j;
  }

  // Least-squares lambda for fixed x.
  double fit_lambda(const Eigen::VectorXd& x) const {
    const auto tx = apply(g_, kind_, span(x));
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const double p = detail::ipow(x[i], k_ - 1);
      num += tx[i] * p;
      den += p * p;
    }
    return den > 0.0 ? num / den : 0.0;
  }

  // Rescale so sum x_i^k = 1, flipping the sign for odd k if needed.
  bool normalize_power_sum(Eigen::VectorXd& x) const {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) s += detail::ipow(x[i], k_);
    if (s < 0.0 && k_ % 2 == 1) {
      x = -x;
      s = -s;
    }
    if (!(s > 0.0) || !std::isfinite(s)) return false;
    x /= std::pow(s, 1.0 / static_cast<double>(k_));
    return true;
  }

  // Newton iterations; variables with `frozen[i]` set stay at zero.
  void solve(State& s, const std::vector<char>& frozen,
             std::size_t max_iterations) const {
    Eigen::VectorXd f = residual_vector(s);
    double merit = f.squaredNorm();
    for (std::size_t it = 0; it < max_iterations; ++it) {
      if (!(merit > 1e-30)) return;
      Eigen::MatrixXd j = jacobian(s);
      for (std::size_t c = 0; c < n_; ++c) {
        if (frozen[c]) j.col(static_cast<Eigen::Index>(c)).setZero();
      }
      const Eigen::VectorXd step =
          j.completeOrthogonalDecomposition().solve(-f);
      if (!step.allFinite()) return;

      double t = 1.0;
      bool improved = false;
      for (int h = 0; h <= kMaxHalvings; ++h, t *= 0.5) {
        State trial{s.x + t * step.head(static_cast<Eigen::Index>(n_)),
                    s.lambda + t * step[static_cast<Eigen::Index>(n_)]};
        const Eigen::VectorXd ft = residual_vector(trial);
        const double mt = ft.squaredNorm();
        if (std::isfinite(mt) && mt < merit) {
          s = std::move(trial);
          f = ft;
          merit = mt;
          improved = true;
          break;
        }
      }
      if (!improved) return;
    }
  }

  static std::span<const double> span(const Eigen::VectorXd& v) {
    return {v.data(), static_cast<std::size_t>(v.size())};
  }

  std::size_t n() const noexcept { return n_; }

 private:
  const WeightedHypergraph& g_;
  TensorKind kind_;
  std::size_t n_;
  std::size_t k_;
};

// Unit max-abs scaling with the first largest-magnitude component positive.
std::vector<double> canonical(std::span<const double> x) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (std::abs(x[i]) > std::abs(x[best])) best = i;
  }
  const double scale = x[best];
  std::vector<double> y(x.begin(), x.end());
  for (auto& v : y) v /= scale;
  return y;
}

double angle(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  const double c = std::clamp(dot / std::sqrt(na * nb), -1.0, 1.0);
  return std::acos(c);
}

Eigen::VectorXd random_start(std::size_t n, std::size_t restart, Rng& rng) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(n));
  switch (restart % 4) {
    case 0:  // mixed signs
      for (auto& v : x) v = rng.uniform(-1.0, 1.0);
      break;
    case 1:  // positive orthant
      for (auto& v : x) v = rng.uniform(0.05, 1.0);
      break;
    case 2:  // positive, bounded dynamic range
      for (auto& v : x) v = rng.uniform(0.5, 1.0);
      break;
    default: {  // one dominant coordinate, small noise elsewhere
      for (auto& v : x) v = rng.uniform(-0.2, 0.2);
      x[static_cast<Eigen::Index>(rng.below(n))] = 1.0;
      break;
    }
  }
  return x;
}

}  // namespace

std::vector<Eigenpair> newton_eigenpair_search(const WeightedHypergraph& g,
                                               TensorKind kind,
                                               const NewtonOptions& options) {
  const System system(g, kind);
  const auto n = g.num_vertices();
  Rng rng(options.seed);
  const std::vector<char> none(n, 0);

  std::vector<Eigenpair> found;
  auto consider = [&](const std::vector<double>& x, double lambda) {
    if (!std::isfinite(lambda)) return false;
    if (!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); })) {
      return false;
    }
    const auto y = canonical(x);
    const double res = residual(g, kind, lambda, y);
    if (!(res < options.accept_residual)) return false;
    Eigenpair p;
    p.lambda = lambda;
    p.x = y;
    p.kind = kind;
    p.eigen_class = classify(y);
    p.residual = res;
    found.push_back(std::move(p));
    return true;
  };

  for (std::size_t restart = 0; restart < options.restarts; ++restart) {
    State s{random_start(n, restart, rng), 0.0};
    if (!system.normalize_power_sum(s.x)) continue;
    s.lambda = system.fit_lambda(s.x);
    system.solve(s, none, options.max_iterations);
    if (!s.x.allFinite() || !std::isfinite(s.lambda)) continue;

    // Try sparse versions of the root first: near-zero components are set
    // to exactly zero and the remaining variables re-polished. A snapped
    // root only replaces the original if it keeps the same eigenvalue.
    const auto y = canonical(System::span(s.x));
    bool replaced = false;
    for (const double threshold : kSnapThresholds) {
      std::vector<char> frozen(n, 0);
      auto z = y;
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(z[i]) < threshold && z[i] != 0.0) {
          frozen[i] = 1;
          z[i] = 0.0;
          any = true;
        }
      }
      if (!any) continue;
      State snapped{Eigen::Map<const Eigen::VectorXd>(z.data(), static_cast<Eigen::Index>(n)),
                    0.0};
      if (!system.normalize_power_sum(snapped.x)) continue;
      snapped.lambda = system.fit_lambda(snapped.x);
      system.solve(snapped, frozen, options.max_iterations);
      if (std::abs(snapped.lambda - s.lambda) > options.dedup_lambda) continue;
      if (consider(std::vector<double>(snapped.x.begin(), snapped.x.end()),
                   snapped.lambda)) {
        replaced = true;
        break;
      }
    }
    if (replaced) continue;
    consider(std::vector<double>(s.x.begin(), s.x.end()), s.lambda);
  }

  std::sort(found.begin(), found.end(), [](const Eigenpair& a, const Eigenpair& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return a.x < b.x;
  });
  std::vector<Eigenpair> unique;
  for (auto& p : found) {
    const bool duplicate = std::any_of(unique.begin(), unique.end(), [&](const Eigenpair& q) {
      return std::abs(p.lambda - q.lambda) < options.dedup_lambda &&
             angle(p.x, q.x) < options.dedup_angle;
    });
    if (!duplicate) unique.push_back(std::move(p));
  }
  return unique;
}

}  // namespace whg
