#pragma once

// Union-find, (constrained) Kruskal, RBP validity and solution statistics.

#include <optional>
#include <string>
#include <vector>

#include "rbp/core.hpp"

namespace rbp {

/// Union by rank with path compression.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n = 0) : parent_(n), rank_(n, 0), components_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<PointId>(i);
  }

  PointId find(PointId x) {
    PointId root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const PointId next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  /// Returns false when a and b were already joined.
  bool unite(PointId a, PointId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --components_;
    return true;
  }

  bool same(PointId a, PointId b) { return find(a) == find(b); }
  std::size_t components() const noexcept { return components_; }
  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<PointId> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t components_;
};

struct AcceptAll {
  constexpr bool operator()(const Edge&) const noexcept { return true; }
};

/// Admits the edges that count for one side, optionally without purple-purple
/// pairs.
struct SideFilter {
  Side side;
  bool allow_purple = true;
  bool operator()(const Edge& e) const {
    return on_side(e.cls, side) && (allow_purple || e.cls != EdgeClass::Purple);
  }
};

using IdPair = std::pair<PointId, PointId>;

namespace detail {

template <class Filter>
std::vector<Edge> candidate_edges(const Instance& inst, std::span<const PointId> vertices,
                                  const Filter& filter) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      Edge e = edge_between(inst, vertices[i], vertices[j]);
      if (e.cls != EdgeClass::Invalid && filter(e)) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(), edge_less);
  return out;
}

}  // namespace detail

/// Minimum spanning forest completion: each forced pair is joined at zero
/// cost first, then Kruskal adds the cheapest admitted edges until `vertices`
/// is connected. The forced pairs are not part of the result. Returns nullopt
/// when the admitted edges cannot connect `vertices`.
template <class Filter = AcceptAll>
std::optional<EdgeSet> constrained_mst(const Instance& inst, std::span<const PointId> vertices,
                                       std::span<const IdPair> forced, Filter filter = {}) {
  if (vertices.empty()) return EdgeSet{};
  DisjointSets sets(inst.size());
  std::size_t components = vertices.size();
  for (const auto& [a, b] : forced) {
    if (sets.unite(a, b)) --components;
  }
  std::vector<Edge> chosen;
  for (const Edge& e : detail::candidate_edges(inst, vertices, filter)) {
    if (components == 1) break;
    if (sets.unite(e.u, e.v)) {
      chosen.push_back(e);
      --components;
    }
  }
  if (components != 1) return std::nullopt;
  return EdgeSet(std::move(chosen));
}

/// Minimum spanning tree of `vertices` over the admitted edges, ties broken
/// by the global edge order.
template <class Filter = AcceptAll>
std::optional<EdgeSet> kruskal_mst(const Instance& inst, std::span<const PointId> vertices,
                                   Filter filter = {}) {
  return constrained_mst(inst, vertices, std::span<const IdPair>{}, filter);
}

/// MST(R∪P) or MST(B∪P). Always feasible: same-side pairs are never invalid.
inline EdgeSet side_mst(const Instance& inst, Side side) {
  const auto vertices = inst.side(side);
  return *kruskal_mst(inst, vertices, SideFilter{side});
}

/// Whether the side's vertices are connected by the side's edges. Vacuously
/// true for an empty side.
inline bool side_connected(const Instance& inst, std::span<const Edge> edges, Side side) {
  const std::size_t need = inst.side_size(side);
  if (need <= 1) return true;
  DisjointSets sets(inst.size());
  std::size_t components = need;
  for (const Edge& e : edges) {
    if (on_side(e.cls, side) && sets.unite(e.u, e.v)) --components;
  }
  return components == 1;
}

inline bool is_rbp_spanning(const Instance& inst, std::span<const Edge> edges) {
  return side_connected(inst, edges, Side::Red) && side_connected(inst, edges, Side::Blue);
}

inline bool is_rbp_spanning(const Instance& inst, const EdgeSet& edges) {
  return is_rbp_spanning(inst, edges.edges());
}

/// A solution graph plus the statistics reported for it.
struct Solution {
  EdgeSet edges;
  double weight = 0.0;
  std::size_t red_edges = 0;
  std::size_t blue_edges = 0;
  std::size_t purple_edges = 0;
  std::size_t invalid_edges = 0;
  std::size_t max_degree = 0;
  /// Filled by solution_stats; solvers leave it empty because the pair scan
  /// is quadratic in the number of purple edges.
  std::optional<std::size_t> purple_crossings;
  /// Per edge (in edges() order): number of purple edges crossing it.
  std::vector<std::size_t> crossings_per_edge;
  std::string solver;

  std::size_t crossings_of(PointId a, PointId b) const {
    if (a > b) std::swap(a, b);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].u == a && edges[i].v == b && i < crossings_per_edge.size()) {
        return crossings_per_edge[i];
      }
    }
    return 0;
  }
};

/// Weight, per-class counts and degrees. Linear in the edge count.
inline Solution summarize(const Instance& inst, EdgeSet edges, std::string solver) {
  Solution s;
  s.weight = edges.weight();
  std::vector<std::size_t> degree(inst.size(), 0);
  for (const Edge& e : edges) {
    switch (e.cls) {
      case EdgeClass::Red: ++s.red_edges; break;
      case EdgeClass::Blue: ++s.blue_edges; break;
      case EdgeClass::Purple: ++s.purple_edges; break;
      case EdgeClass::Invalid: ++s.invalid_edges; break;
    }
    ++degree[e.u];
    ++degree[e.v];
  }
  for (auto d : degree) s.max_degree = std::max(s.max_degree, d);
  s.edges = std::move(edges);
  s.solver = std::move(solver);
  return s;
}

/// Adds crossing statistics to a summarized solution.
inline void count_crossings(const Instance& inst, Solution& s) {
  const auto edges = s.edges.edges();
  std::vector<std::size_t> purple;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].cls == EdgeClass::Purple) purple.push_back(i);
  }
  s.crossings_per_edge.assign(edges.size(), 0);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j : purple) {
      if (j == i) continue;
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      if (segments_properly_cross(inst, a, b)) {
        ++s.crossings_per_edge[i];
        if (a.cls == EdgeClass::Purple && i < j) ++pairs;
      }
    }
  }
  s.purple_crossings = pairs;
}

inline Solution solution_stats(const Instance& inst, EdgeSet edges, std::string solver = "") {
  Solution s = summarize(inst, std::move(edges), std::move(solver));
  count_crossings(inst, s);
  return s;
}

/// Flat "key value" block.
inline std::string format_stats(const Solution& s) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", s.weight);
  std::string out;
  out += "weight " + std::string(buf) + '\n';
  out += "red_edges " + std::to_string(s.red_edges) + '\n';
  out += "blue_edges " + std::to_string(s.blue_edges) + '\n';
  out += "purple_edges " + std::to_string(s.purple_edges) + '\n';
  out += "max_degree " + std::to_string(s.max_degree) + '\n';
  out += "purple_crossings " +
         (s.purple_crossings ? std::to_string(*s.purple_crossings) : std::string("na")) + '\n';
  out += "solver " + s.solver + '\n';
  return out;
}

}  // namespace rbp
