#pragma once

// Exact minimum RBP spanning graph by weighted matroid intersection.
//
// The complement Y = E \ X of a candidate edge set X is independent in the
// dual graphic matroid of a side iff X still connects that side. Starting
// from X = E, each step applies a shortest exchange sequence in the auxiliary
// graph, which keeps X a minimum-weight RBP spanning set among those of its
// cardinality. The answer is the lightest X seen.

#include <limits>
#include <optional>
#include <vector>

#include "rbp/graph.hpp"

namespace rbp {

/// Auxiliary digraph over the ground set. Nodes 0..m-1 are edge indices into
/// the ground set, node m is the source and m+1 the sink.
struct ExchangeGraph {
  struct Arc {
    std::uint32_t to;
    double weight;
  };

  std::size_t ground_size = 0;
  std::vector<std::vector<Arc>> out;

  std::size_t source() const noexcept { return ground_size; }
  std::size_t sink() const noexcept { return ground_size + 1; }
  std::size_t node_count() const noexcept { return out.size(); }
  std::size_t arc_count() const {
    std::size_t n = 0;
    for (const auto& a : out) n += a.size();
    return n;
  }
  bool has_arc(std::size_t from, std::size_t to) const {
    for (const auto& a : out[from]) {
      if (a.to == to) return true;
    }
    return false;
  }
};

/// Alternating sequence e1..e_{2h+1}: odd positions leave X, even positions
/// enter it.
struct ExchangeSequence {
  std::vector<std::size_t> edges;
  double cost = 0.0;

  std::size_t hops() const noexcept { return edges.size(); }
};

namespace detail {

/// Component labels of one side of X with edge `skip` removed.
inline std::vector<PointId> side_components(const Instance& inst, std::span<const Edge> ground,
                                            const std::vector<bool>& in_x, Side side,
                                            std::size_t skip) {
  DisjointSets sets(inst.size());
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (i != skip && in_x[i] && on_side(ground[i].cls, side)) sets.unite(ground[i].u, ground[i].v);
  }
  std::vector<PointId> label(inst.size());
  for (PointId p = 0; p < inst.size(); ++p) label[p] = sets.find(p);
  return label;
}

inline bool labels_connect_side(const Instance& inst, const std::vector<PointId>& label,
                                Side side) {
  std::optional<PointId> root;
  for (const auto& p : inst.points()) {
    if (!on_side(p.color, side)) continue;
    if (!root) root = label[p.id];
    else if (label[p.id] != *root) return false;
  }
  return true;
}

}  // namespace detail

/// Arcs:
///   source → e  (e ∈ X)       if X − e keeps B∪P connected, weight −w(e)
///   e → f       (e ∈ X, f ∉ X) if X − e + f keeps R∪P connected, weight +w(f)
///   f → e       (f ∉ X, e ∈ X) if X + f − e keeps B∪P connected, weight −w(e)
///   e → sink    (e ∈ X)       if X − e keeps R∪P connected, weight 0
/// Adjacency lists are in increasing target order.
inline ExchangeGraph build_exchange_graph(const Instance& inst, std::span<const Edge> ground,
                                          const std::vector<bool>& in_x) {
  const std::size_t m = ground.size();
  ExchangeGraph g;
  g.ground_size = m;
  g.out.resize(m + 2);

  // For each side and each e ∈ X: the component labels of X − e on that side,
  // or nothing when removing e leaves the side connected.
  auto removal = [&](Side side) {
    std::vector<std::optional<std::vector<PointId>>> split(m);
    std::vector<bool> keeps(m, false);
    for (std::size_t e = 0; e < m; ++e) {
      if (!in_x[e]) continue;
      if (!on_side(ground[e].cls, side)) {
        keeps[e] = true;
        continue;
      }
      auto label = detail::side_components(inst, ground, in_x, side, e);
      if (detail::labels_connect_side(inst, label, side)) keeps[e] = true;
      else split[e] = std::move(label);
    }
    return std::pair{std::move(keeps), std::move(split)};
  };
  const auto [red_keeps, red_split] = removal(Side::Red);
  const auto [blue_keeps, blue_split] = removal(Side::Blue);

  auto reconnects = [&](const std::vector<PointId>& label, std::size_t f, Side side) {
    return on_side(ground[f].cls, side) && label[ground[f].u] != label[ground[f].v];
  };

  for (std::size_t e = 0; e < m; ++e) {
    if (in_x[e] && blue_keeps[e]) g.out[g.source()].push_back({static_cast<std::uint32_t>(e), -ground[e].length});
  }
  for (std::size_t a = 0; a < m; ++a) {
    auto& arcs = g.out[a];
    if (in_x[a]) {
      // a = e ∈ X: arcs to f ∉ X via the red side, then the sink.
      for (std::size_t f = 0; f < m; ++f) {
        if (in_x[f]) continue;
        if (red_keeps[a] || reconnects(*red_split[a], f, Side::Red)) {
          arcs.push_back({static_cast<std::uint32_t>(f), ground[f].length});
        }
      }
      if (red_keeps[a]) arcs.push_back({static_cast<std::uint32_t>(g.sink()), 0.0});
    } else {
      // a = f ∉ X: arcs to e ∈ X via the blue side.
      for (std::size_t e = 0; e < m; ++e) {
        if (!in_x[e]) continue;
        if (blue_keeps[e] || reconnects(*blue_split[e], a, Side::Blue)) {
          arcs.push_back({static_cast<std::uint32_t>(e), -ground[e].length});
        }
      }
    }
  }
  return g;
}

/// Minimum-cost source→sink path; among paths within `tolerance` of the
/// minimum cost the one with the fewest arcs wins, then the one found first
/// scanning nodes in increasing order. Uses hop-layered Bellman-Ford, so
/// negative arc weights are fine.
inline std::optional<ExchangeSequence> find_min_exchange_sequence(const ExchangeGraph& g,
                                                                  double tolerance) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
  const std::size_t nodes = g.node_count();

  std::vector<std::vector<std::uint32_t>> parent;
  std::vector<double> dist(nodes, inf), next(nodes, inf);
  dist[g.source()] = 0.0;
  std::vector<double> sink_cost;  // indexed by arc count
  sink_cost.push_back(inf);

  for (std::size_t layer = 1; layer < nodes; ++layer) {
    std::fill(next.begin(), next.end(), inf);
    std::vector<std::uint32_t> par(nodes, none);
    bool any = false;
    for (std::size_t u = 0; u < nodes; ++u) {
      if (dist[u] == inf) continue;
      for (const auto& arc : g.out[u]) {
        const double d = dist[u] + arc.weight;
        if (d < next[arc.to]) {
          next[arc.to] = d;
          par[arc.to] = static_cast<std::uint32_t>(u);
          any = true;
        }
      }
    }
    parent.push_back(std::move(par));
    sink_cost.push_back(next[g.sink()]);
    if (!any) break;
    std::swap(dist, next);
  }

  double best = inf;
  for (double c : sink_cost) best = std::min(best, c);
  if (best == inf) return std::nullopt;
  std::size_t layers = 0;
  while (sink_cost[layers] > best + tolerance) ++layers;

  ExchangeSequence seq;
  seq.cost = sink_cost[layers];
  std::size_t node = g.sink();
  std::vector<bool> seen(nodes, false);
  for (std::size_t l = layers; l-- > 0;) {
    node = parent[l][node];
    if (node == g.source()) break;
    if (seen[node]) throw std::logic_error("exchange path repeats a node");
    seen[node] = true;
    seq.edges.push_back(node);
  }
  std::reverse(seq.edges.begin(), seq.edges.end());
  return seq;
}

struct ExactOptions {
  /// Relative tie tolerance for path costs, scaled by the longest edge.
  double tolerance = kWeightTolerance;
  /// Record w(X_i) for every visited cardinality.
  bool trace = false;
};

struct ExactResult {
  Solution solution;
  /// weight_by_size[i] = w(X_i) for visited i, NaN elsewhere.
  std::vector<double> weight_by_size;
  std::size_t iterations = 0;
};

inline ExactResult solve_exact_traced(const Instance& inst, const ExactOptions& options = {}) {
  const auto ground = allowed_edges(inst);
  const std::size_t m = ground.size();
  std::vector<bool> in_x(m, true);

  double scale = 1.0;
  for (const auto& e : ground) scale = std::max(scale, e.length);
  const double tol = options.tolerance * scale;

  auto current_weight = [&] {
    double w = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (in_x[i]) w += ground[i].length;
    }
    return w;
  };

  ExactResult result;
  if (options.trace) result.weight_by_size.assign(m + 1, std::numeric_limits<double>::quiet_NaN());
  std::vector<bool> best_x = in_x;
  double best_weight = current_weight();
  std::size_t size = m;
  if (options.trace) result.weight_by_size[size] = best_weight;

  const std::size_t floor = std::max<std::size_t>({inst.side_size(Side::Red), inst.side_size(Side::Blue), 1}) - 1;
  while (size > floor) {
    const auto graph = build_exchange_graph(inst, ground, in_x);
    const auto seq = find_min_exchange_sequence(graph, tol);
    if (!seq) break;
    for (std::size_t pos = 0; pos < seq->edges.size(); ++pos) {
      in_x[seq->edges[pos]] = pos % 2 == 1;
    }
    --size;
    ++result.iterations;
    const double w = current_weight();
    if (options.trace) result.weight_by_size[size] = w;
    if (w < best_weight) {
      best_weight = w;
      best_x = in_x;
    }
  }

  std::vector<Edge> chosen;
  for (std::size_t i = 0; i < m; ++i) {
    if (best_x[i]) chosen.push_back(ground[i]);
  }
  result.solution = summarize(inst, EdgeSet(std::move(chosen)), "exact");
  return result;
}

inline Solution solve_exact(const Instance& inst, const ExactOptions& options = {}) {
  return solve_exact_traced(inst, options).solution;
}

}  // namespace rbp
