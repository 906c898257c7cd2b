#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "whg/hypergraph.hpp"
#include "whg/spectral.hpp"
#include "whg/tensor.hpp"

namespace whg {

enum class Verdict { Holds, Violated, NotApplicable };

std::string_view to_string(Verdict v) noexcept;

// One checked statement. `slack` is signed distance from the measured value
// to the nearest violated side of the bound (negative when outside); the
// verdict holds iff slack >= min_slack. Equality statements use
// lower == upper and a small negative min_slack; strict inequalities use a
// positive min_slack.
struct BoundEntry {
  std::string theorem_id;
  std::string statement;
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<double> measured;
  double slack = 0.0;
  double min_slack = 0.0;
  Verdict verdict = Verdict::NotApplicable;
  // Informational value (exact integer as decimal text).
  std::optional<std::string> value;
};

struct BoundReport {
  HypergraphStats stats;
  RegularityInfo regularity;
  PowerIterationResult adjacency_radius;
  PowerIterationResult signless_radius;
  Vertex principal_vertex = 0;  // argmax of the principal A-eigenvector
  std::vector<BoundEntry> entries;

  bool all_hold() const noexcept;
  const BoundEntry* find(std::string_view theorem_id) const noexcept;
};

struct BoundOptions {
  PowerIterationOptions power;
  // Newton-oracle restarts per tensor; 0 disables the oracle.
  std::size_t oracle_restarts = 0;
  std::uint64_t seed = 1;
  // The oracle only runs on instances with at most this many vertices.
  std::size_t oracle_max_vertices = 8;
  double tolerance = 1e-8;
  double strict_margin = 1e-10;
  double structural_residual = 1e-12;
};

// sqrt( W0^2/(k-1) * sum_{t=1..k} sum_{e in E_t(N(u))} sum_{v in e ∩ N(u)} e(u, v) )
double neighborhood_bound(const WeightedHypergraph& g, Vertex u);

struct Disk {
  double center = 0.0;
  double radius = 0.0;
};

// Row disks of the tensor: centre = diagonal entry, radius = sum of absolute
// off-diagonal entries of slice i (which equals w_i for A, L and Q).
std::vector<Disk> gershgorin_disks(const WeightedHypergraph& g, TensorKind kind);

// n (k-1)^(n-1), exact.
std::string eigenvalue_count(std::size_t n, std::size_t k);

// Throws Disconnected; throws MaxIterationsExceeded if either power
// iteration fails to converge.
BoundReport bound_report(const WeightedHypergraph& g,
                         const BoundOptions& options = {});

}  // namespace whg
