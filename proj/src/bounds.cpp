#include "whg/bounds.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>

#include "whg/error.hpp"

namespace whg {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

bool BoundReport::all_hold() const noexcept {
  return std::none_of(entries.begin(), entries.end(), [](const BoundEntry& e) {
    return e.verdict == Verdict::Violated;
  });
}

const BoundEntry* BoundReport::find(std::string_view theorem_id) const noexcept {
  for (const auto& e : entries) {
    if (e.theorem_id == theorem_id) return &e;
  }
  return nullptr;
}

double neighborhood_bound(const WeightedHypergraph& g, Vertex u) {
  const auto hood = neighbors(g, u);
  const auto k = g.order();
  double sum = 0.0;
  if (!hood.empty()) {
    std::vector<char> in_hood(g.num_vertices(), 0);
    for (const auto v : hood) in_hood[v] = 1;
    for (std::size_t t = 1; t <= k; ++t) {
      for (const auto e : edges_meeting(g, hood, t)) {
        for (const auto v : g.edge(e)) {
          if (in_hood[v]) sum += static_cast<double>(codegree(g, u, v));
        }
      }
    }
  }
  const double w0 = *std::max_element(g.weights().begin(), g.weights().end());
  return std::sqrt(w0 * w0 / static_cast<double>(k - 1) * sum);
}

std::vector<Disk> gershgorin_disks(const WeightedHypergraph& g, TensorKind kind) {
  std::vector<Disk> disks;
  disks.reserve(g.num_vertices());
  for (Vertex i = 0; i < g.num_vertices(); ++i) {
    const double w = g.vertex_weight(i);
    switch (kind) {
      case TensorKind::Adjacency: disks.push_back({0.0, w}); break;
      case TensorKind::Degree: disks.push_back({w, 0.0}); break;
      case TensorKind::Laplacian:
      case TensorKind::SignlessLaplacian: disks.push_back({w, w}); break;
    }
  }
  return disks;
}

std::string eigenvalue_count(std::size_t n, std::size_t k) {
  using boost::multiprecision::cpp_int;
  cpp_int count = n;
  const cpp_int base = k - 1;
  for (std::size_t i = 1; i < n; ++i) count *= base;
  return count.str();
}

namespace {

struct Value {
  double lambda;
  EigenClass eigen_class;
};

class EntryBuilder {
 public:
  EntryBuilder(std::vector<BoundEntry>& out, double tolerance)
      : out_(out), tolerance_(tolerance) {}

  // Every value must lie in [lower, upper]; reports the tightest one.
  void range(std::string id, std::string statement, std::optional<double> lower,
             std::optional<double> upper, const std::vector<double>& values,
             std::optional<double> min_slack = std::nullopt) {
    BoundEntry e{std::move(id), std::move(statement), lower, upper};
    e.min_slack = min_slack.value_or(-tolerance_);
    if (values.empty()) {
      out_.push_back(std::move(e));
      return;
    }
    e.slack = std::numeric_limits<double>::infinity();
    for (const auto v : values) {
      double s = std::numeric_limits<double>::infinity();
      if (lower) s = std::min(s, v - *lower);
      if (upper) s = std::min(s, *upper - v);
      if (s < e.slack) {
        e.slack = s;
        e.measured = v;
      }
    }
    finish(e);
  }

  void equality(std::string id, std::string statement, double target,
                double measured) {
    BoundEntry e{std::move(id), std::move(statement), target, target, measured};
    e.slack = -std::abs(measured - target);
    e.min_slack = -tolerance_;
    finish(e);
  }

  // measured must stay below upper by at least margin.
  void strict_upper(std::string id, std::string statement, double upper,
                    double measured, double margin) {
    BoundEntry e{std::move(id), std::move(statement), std::nullopt, upper, measured};
    e.slack = upper - measured;
    e.min_slack = margin;
    finish(e);
  }

 private:
  void finish(BoundEntry& e) {
    e.verdict = e.slack >= e.min_slack ? Verdict::Holds : Verdict::Violated;
    out_.push_back(std::move(e));
  }

  std::vector<BoundEntry>& out_;
  double tolerance_;
};

std::vector<double> lambdas(const std::vector<Value>& values,
                            bool nonnegative_only) {
  std::vector<double> out;
  for (const auto& v : values) {
    if (nonnegative_only && v.eigen_class == EigenClass::H) continue;
    out.push_back(v.lambda);
  }
  return out;
}

}  // namespace

BoundReport bound_report(const WeightedHypergraph& g,
                         const BoundOptions& options) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::Disconnected, "bound report needs a connected hypergraph");
  }
  BoundReport report;
  report.stats = stats(g);
  report.regularity = regularity(g);
  const auto& s = report.stats;

  report.adjacency_radius = power_iteration(g, TensorKind::Adjacency, options.power);
  report.signless_radius =
      power_iteration(g, TensorKind::SignlessLaplacian, options.power);
  for (const auto* r : {&report.adjacency_radius, &report.signless_radius}) {
    if (!r->converged) {
      throw Error(ErrorCode::MaxIterationsExceeded,
                  "power iteration did not converge in " +
                      std::to_string(r->iterations) + " iterations");
    }
  }
  const double rho_a = report.adjacency_radius.rho;
  const double rho_q = report.signless_radius.rho;
  report.principal_vertex = argmax_component(report.adjacency_radius.x);

  // Every eigenvalue the report knows about, per tensor.
  std::vector<Value> adj{{rho_a, EigenClass::HPlusPlus}};
  std::vector<Value> lap;
  std::vector<Value> sig{{rho_q, EigenClass::HPlusPlus}};
  double worst_structural = 0.0;
  auto collect = [&](TensorKind kind, std::vector<Value>& into, bool structural) {
    const auto pairs = structural
                           ? known_eigenpairs(g, kind)
                           : newton_eigenpair_search(
                                 g, kind,
                                 NewtonOptions{options.oracle_restarts, options.seed});
    for (const auto& p : pairs) {
      into.push_back({p.lambda, p.eigen_class});
      if (structural) worst_structural = std::max(worst_structural, p.residual);
    }
  };
  collect(TensorKind::Adjacency, adj, true);
  collect(TensorKind::Laplacian, lap, true);
  collect(TensorKind::SignlessLaplacian, sig, true);
  if (options.oracle_restarts > 0 && g.num_vertices() <= options.oracle_max_vertices) {
    collect(TensorKind::Adjacency, adj, false);
    collect(TensorKind::Laplacian, lap, false);
    collect(TensorKind::SignlessLaplacian, sig, false);
  }

  const double w0_delta = s.max_edge_weight * static_cast<double>(s.max_degree);
  const bool equality_case = report.regularity.regular_and_uniform();
  EntryBuilder b(report.entries, options.tolerance);

  {
    std::vector<double> mags;
    for (const auto& v : adj) mags.push_back(std::abs(v.lambda));
    b.range("adjacency_disk", "|lambda(A)| <= W0*Delta", std::nullopt, w0_delta, mags);
  }
  {
    std::vector<double> offsets;
    for (const auto* list : {&lap, &sig}) {
      for (const auto& v : *list) offsets.push_back(std::abs(v.lambda - w0_delta));
    }
    b.range("laplacian_signless_disk", "|lambda(L), lambda(Q) - W0*Delta| <= W0*Delta",
            std::nullopt, w0_delta, offsets);
  }
  b.range("laplacian_h_range", "0 <= lambda_H(L) <= 2*W0*Delta", 0.0,
          2.0 * w0_delta, lambdas(lap, false));
  b.range("laplacian_hplus_range", "0 <= lambda_H+(L) <= alpha", 0.0, s.alpha,
          lambdas(lap, true));
  {
    const auto hplus = lambdas(lap, true);
    b.equality("laplacian_largest_hplus", "max lambda_H+(L) = alpha", s.alpha,
               *std::max_element(hplus.begin(), hplus.end()));
  }
  {
    std::vector<double> positive;
    for (const auto& v : lap) {
      if (v.eigen_class == EigenClass::HPlusPlus) positive.push_back(v.lambda);
    }
    b.range("laplacian_hplusplus_zero", "lambda_H++(L) = 0", 0.0, 0.0, positive);
  }
  b.range("signless_h_range", "0 <= lambda_H(Q) <= 2*W0*Delta", 0.0,
          2.0 * w0_delta, lambdas(sig, false));
  if (equality_case) {
    b.equality("signless_equality", "regular and uniform weight: rho(Q) = 2*W0*Delta",
               2.0 * w0_delta, rho_q);
  } else {
    b.strict_upper("signless_equality",
                   "not regular or not uniform weight: rho(Q) < 2*W0*Delta",
                   2.0 * w0_delta, rho_q, options.strict_margin);
  }
  b.range("signless_hplus_range", "delta <= lambda_H+(Q) <= 2*alpha", s.delta,
          2.0 * s.alpha, lambdas(sig, true));
  b.range("signless_radius_range", "2*delta <= rho(Q) <= 2*alpha", 2.0 * s.delta,
          2.0 * s.alpha, {rho_q});
  {
    const auto hplus = lambdas(sig, true);
    b.equality("signless_smallest_hplus", "min lambda_H+(Q) = delta", s.delta,
               *std::min_element(hplus.begin(), hplus.end()));
  }
  if (equality_case) {
    b.equality("adjacency_equality", "regular and uniform weight: rho(A) = W0*Delta",
               w0_delta, rho_a);
  } else {
    b.strict_upper("adjacency_equality",
                   "not regular or not uniform weight: rho(A) < W0*Delta", w0_delta,
                   rho_a, options.strict_margin);
  }
  b.range("adjacency_radius_range", "delta <= rho(A) <= alpha", s.delta, s.alpha,
          {rho_a});
  b.range("adjacency_neighborhood", "rho(A) <= neighborhood bound at principal argmax",
          0.0, neighborhood_bound(g, report.principal_vertex), {rho_a});
  b.range("structural_residuals", "known eigenpair residuals <= 1e-12", std::nullopt,
          options.structural_residual, {worst_structural}, 0.0);

  BoundEntry count{"eigenvalue_count", "number of eigenvalues n(k-1)^(n-1)"};
  count.value = eigenvalue_count(g.num_vertices(), g.order());
  report.entries.push_back(std::move(count));

  if (g.below_theorem_order()) {
    for (auto& e : report.entries) e.verdict = Verdict::NotApplicable;
  }
  return report;
}

}  // namespace whg
