#pragma once

// Two fast heuristics and ratio bookkeeping against a reference weight.

#include <optional>
#include <vector>

#include "rbp/graph.hpp"

namespace rbp {

/// Steiner ratio bounds behind approx_a's guarantee of ρ/2 + 1.
struct SteinerRatioBounds {
  static constexpr double kRhoUpper = 1.21;
  static constexpr double kRhoConjectured = 1.1547005383792515;  // 2/√3
  static constexpr double kGuarantee = 0.5 * kRhoUpper + 1.0;
};

/// MST(R∪P) ∪ MST(B∪P); a shared purple edge is kept once.
inline Solution approx_union(const Instance& inst) {
  std::vector<Edge> edges;
  for (Side s : {Side::Red, Side::Blue}) {
    const auto tree = side_mst(inst, s);
    edges.insert(edges.end(), tree.begin(), tree.end());
  }
  return summarize(inst, EdgeSet(std::move(edges)), "approx-union");
}

/// MST of the purple points, then for each side a Kruskal pass
/// over the side's non-purple edges with the purple tree already merged.
inline Solution approx_a(const Instance& inst) {
  const auto purple = inst.purple();
  const auto purple_tree = *kruskal_mst(inst, purple);
  std::vector<IdPair> merged;
  for (const Edge& e : purple_tree) merged.emplace_back(e.u, e.v);

  std::vector<Edge> edges(purple_tree.begin(), purple_tree.end());
  for (Side s : {Side::Red, Side::Blue}) {
    const auto vertices = inst.side(s);
    const auto rest = *constrained_mst(inst, vertices, merged, SideFilter{s, false});
    edges.insert(edges.end(), rest.begin(), rest.end());
  }
  return summarize(inst, EdgeSet(std::move(edges)), "approx-a");
}

enum class ReferenceKind : std::uint8_t {
  /// Weight of a certified optimum (exact solver or oracle).
  Optimum,
  /// Weight of some feasible solution; the ratio is then a lower bound.
  UpperBound,
};

struct RatioReport {
  double ratio = 0.0;
  ReferenceKind reference = ReferenceKind::Optimum;
  /// Only meaningful against a certified optimum.
  bool exceeds_guarantee = false;
  bool exceeds_two = false;
};

inline RatioReport ratio_report(const Solution& approx, double reference, ReferenceKind kind) {
  if (!(reference > 0.0)) throw std::invalid_argument("ratio_report: reference weight must be positive");
  RatioReport r;
  r.ratio = approx.weight / reference;
  r.reference = kind;
  if (kind == ReferenceKind::Optimum) {
    const double slack = 1.0 + kWeightTolerance;
    r.exceeds_guarantee = r.ratio > SteinerRatioBounds::kGuarantee * slack;
    r.exceeds_two = r.ratio > 2.0 * slack;
  }
  return r;
}

/// Ratio against a constructed feasible solution. Throws if the constructed
/// graph is not RBP spanning.
inline RatioReport ratio_report(const Instance& inst, const Solution& approx,
                                const EdgeSet& constructed) {
  if (!is_rbp_spanning(inst, constructed)) {
    throw std::invalid_argument("ratio_report: constructed reference is not RBP spanning");
  }
  return ratio_report(approx, constructed.weight(), ReferenceKind::UpperBound);
}

}  // namespace rbp
