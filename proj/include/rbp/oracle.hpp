#pragma once

// Brute-force optima used to cross-check the solvers.
//
// oracle_forest: an optimum is T_R ∪ T_B where T_R, T_B span R∪P and B∪P and
// share only purple edges. Fixing the shared purple forest F, the cheapest
// completion of each side is a Kruskal pass over that side's non-purple edges
// with F pre-merged, so the optimum is
//     min over forests F on P of  w(F) + red(F) + blue(F).
// For any other F the expression is the weight of some feasible graph, so the
// minimum is exact.
//
// oracle_subsets: every subset of the allowed edges.

#include <bit>
#include <functional>
#include <limits>
#include <vector>

#include "rbp/approx.hpp"
#include "rbp/graph.hpp"

namespace rbp {

inline constexpr std::size_t kOracleForestMaxPurple = 8;
inline constexpr std::size_t kOracleSubsetsMaxEdges = 22;

namespace detail {

/// Kruskal over `edges` (already in edge order) starting from `sets`; stops
/// once `components` reaches one or the running cost reaches `bound`.
/// Returns +inf if the side cannot be connected or the bound is hit.
inline double complete_side(DisjointSets& sets, std::size_t components, std::span<const Edge> edges,
                            double bound, std::vector<Edge>* chosen = nullptr) {
  double cost = 0.0;
  for (const Edge& e : edges) {
    if (components <= 1) break;
    if (sets.unite(e.u, e.v)) {
      cost += e.length;
      if (chosen) chosen->push_back(e);
      --components;
      if (cost >= bound) return std::numeric_limits<double>::infinity();
    }
  }
  return components <= 1 ? cost : std::numeric_limits<double>::infinity();
}

}  // namespace detail

struct OracleForestResult {
  Solution solution;
  std::vector<Edge> forest;
  std::size_t forests_visited = 0;
};

/// Throws PreconditionError when |P| > max_purple.
inline OracleForestResult oracle_forest_detailed(const Instance& inst,
                                                 std::size_t max_purple = kOracleForestMaxPurple) {
  const auto purple = inst.purple();
  if (purple.size() > max_purple) {
    throw PreconditionError("oracle_forest: " + std::to_string(purple.size()) +
                            " purple points exceed the bound of " + std::to_string(max_purple));
  }
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < purple.size(); ++i) {
    for (std::size_t j = i + 1; j < purple.size(); ++j) {
      pairs.push_back(edge_between(inst, purple[i], purple[j]));
    }
  }
  std::array<std::vector<Edge>, 2> side_edges;
  for (const Edge& e : allowed_edges(inst)) {
    if (e.cls == EdgeClass::Red) side_edges[0].push_back(e);
    else if (e.cls == EdgeClass::Blue) side_edges[1].push_back(e);
  }
  const std::array<std::size_t, 2> side_size{inst.side_size(Side::Red),
                                             inst.side_size(Side::Blue)};

  OracleForestResult out;
  double best = std::numeric_limits<double>::infinity();
  std::vector<Edge> best_forest;
  std::vector<Edge> forest;
  double forest_weight = 0.0;

  auto evaluate = [&] {
    ++out.forests_visited;
    double total = forest_weight;
    for (int s = 0; s < 2 && total < best; ++s) {
      DisjointSets sets(inst.size());
      for (const Edge& e : forest) sets.unite(e.u, e.v);
      const std::size_t components = side_size[s] - forest.size();
      total += detail::complete_side(sets, components, side_edges[s], best - total);
    }
    if (total < best) {
      best = total;
      best_forest = forest;
    }
  };

  // Depth-first over pair subsets in index order, rejecting cycles as soon as
  // they appear; every forest is visited once.
  std::function<void(std::size_t, DisjointSets&)> visit = [&](std::size_t next, DisjointSets& sets) {
    evaluate();
    for (std::size_t p = next; p < pairs.size(); ++p) {
      if (forest_weight + pairs[p].length >= best) continue;
      if (sets.same(pairs[p].u, pairs[p].v)) continue;
      DisjointSets grown = sets;
      grown.unite(pairs[p].u, pairs[p].v);
      forest.push_back(pairs[p]);
      forest_weight += pairs[p].length;
      visit(p + 1, grown);
      forest_weight -= pairs[p].length;
      forest.pop_back();
    }
  };
  DisjointSets root(inst.size());
  visit(0, root);

  std::vector<Edge> edges = best_forest;
  for (int s = 0; s < 2; ++s) {
    DisjointSets sets(inst.size());
    for (const Edge& e : best_forest) sets.unite(e.u, e.v);
    detail::complete_side(sets, side_size[s] - best_forest.size(), side_edges[s],
                          std::numeric_limits<double>::infinity(), &edges);
  }
  out.forest = std::move(best_forest);
  out.solution = summarize(inst, EdgeSet(std::move(edges)), "oracle-forest");
  return out;
}

inline Solution oracle_forest(const Instance& inst,
                              std::size_t max_purple = kOracleForestMaxPurple) {
  return oracle_forest_detailed(inst, max_purple).solution;
}

/// Exhaustive minimum over all subsets of the allowed edges. Throws
/// PreconditionError beyond `max_edges` allowed edges.
inline Solution oracle_subsets(const Instance& inst,
                               std::size_t max_edges = kOracleSubsetsMaxEdges) {
  const auto ground = allowed_edges(inst);
  const std::size_t m = ground.size();
  if (m > max_edges || m > 30) {
    throw PreconditionError("oracle_subsets: " + std::to_string(m) +
                            " allowed edges exceed the bound of " + std::to_string(max_edges));
  }
  if (m == 0) return summarize(inst, EdgeSet{}, "oracle-subsets");

  // Subset weights from two half tables.
  const std::size_t low_bits = m / 2;
  const std::size_t high_bits = m - low_bits;
  auto half_table = [&](std::size_t offset, std::size_t bits) {
    std::vector<double> w(std::size_t{1} << bits, 0.0);
    for (std::size_t mask = 1; mask < w.size(); ++mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      w[mask] = w[mask & (mask - 1)] + ground[offset + low].length;
    }
    return w;
  };
  const auto low_w = half_table(0, low_bits);
  const auto high_w = half_table(low_bits, high_bits);

  // A point needing a connection on some side must touch an edge of it.
  std::vector<std::uint32_t> needs;
  for (const auto& p : inst.points()) {
    std::uint32_t touch = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (ground[i].u == p.id || ground[i].v == p.id) touch |= std::uint32_t{1} << i;
    }
    const bool lonely = (p.color == Color::Blue || inst.side_size(Side::Red) < 2) &&
                        (p.color == Color::Red || inst.side_size(Side::Blue) < 2);
    if (!lonely) needs.push_back(touch);
  }

  const std::uint32_t full = m == 32 ? ~0u : (std::uint32_t{1} << m) - 1;
  // Each side needs a spanning tree of its own.
  const std::size_t min_edges = std::max<std::size_t>({inst.side_size(Side::Red), inst.side_size(Side::Blue), 1}) - 1;
  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = full;
  std::vector<Edge> chosen;
  chosen.reserve(m);
  for (std::uint64_t raw = 0; raw <= full; ++raw) {
    const auto mask = static_cast<std::uint32_t>(raw);
    if (static_cast<std::size_t>(std::popcount(mask)) < min_edges) continue;
    const double w = low_w[mask & ((1u << low_bits) - 1)] + high_w[mask >> low_bits];
    if (w >= best) continue;
    bool touches = true;
    for (auto t : needs) {
      if ((mask & t) == 0) {
        touches = false;
        break;
      }
    }
    if (!touches) continue;
    chosen.clear();
    for (std::uint32_t bits = mask; bits; bits &= bits - 1) chosen.push_back(ground[std::countr_zero(bits)]);
    if (!is_rbp_spanning(inst, chosen)) continue;
    best = w;
    best_mask = mask;
  }

  chosen.clear();
  for (std::uint32_t bits = best_mask; bits; bits &= bits - 1) chosen.push_back(ground[std::countr_zero(bits)]);
  return summarize(inst, EdgeSet(std::move(chosen)), "oracle-subsets");
}

}  // namespace rbp
