#pragma once

// Independent reference computations for the tests. None of these reuse the
// library's union-find, Kruskal or orientation code.

#include <boost/multiprecision/cpp_int.hpp>

#include <deque>
#include <limits>
#include <vector>

#include "rbp/core.hpp"

namespace rbp::testing {

using Rational = boost::multiprecision::cpp_rational;

/// Prim's algorithm on the complete graph over `ids`, O(n²).
inline double prim_weight(const Instance& inst, const std::vector<PointId>& ids) {
  if (ids.size() < 2) return 0.0;
  std::vector<double> best(ids.size(), std::numeric_limits<double>::infinity());
  std::vector<bool> done(ids.size(), false);
  best[0] = 0.0;
  double total = 0.0;
  for (std::size_t step = 0; step < ids.size(); ++step) {
    std::size_t u = ids.size();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!done[i] && (u == ids.size() || best[i] < best[u])) u = i;
    }
    done[u] = true;
    total += best[u];
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (!done[i]) best[i] = std::min(best[i], inst.distance(ids[u], ids[i]));
    }
  }
  return total;
}

/// Breadth-first connectivity of one side using only that side's edges.
inline bool bfs_side_connected(const Instance& inst, std::span<const Edge> edges, Side side) {
  std::vector<std::vector<PointId>> adj(inst.size());
  for (const Edge& e : edges) {
    const bool red_ok = inst.color(e.u) != Color::Blue && inst.color(e.v) != Color::Blue;
    const bool blue_ok = inst.color(e.u) != Color::Red && inst.color(e.v) != Color::Red;
    if (side == Side::Red ? red_ok : blue_ok) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  }
  const Color other = side == Side::Red ? Color::Blue : Color::Red;
  std::vector<PointId> members;
  for (const auto& p : inst.points()) {
    if (p.color != other) members.push_back(p.id);
  }
  if (members.size() < 2) return true;
  std::vector<bool> seen(inst.size(), false);
  std::deque<PointId> queue{members.front()};
  seen[members.front()] = true;
  while (!queue.empty()) {
    const PointId u = queue.front();
    queue.pop_front();
    for (PointId v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  for (PointId m : members) {
    if (!seen[m]) return false;
  }
  return true;
}

inline bool bfs_rbp_spanning(const Instance& inst, std::span<const Edge> edges) {
  return bfs_side_connected(inst, edges, Side::Red) && bfs_side_connected(inst, edges, Side::Blue);
}

/// Sign of the orientation determinant in exact rational arithmetic.
inline int rational_orientation(Vec2 a, Vec2 b, Vec2 c) {
  const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  const Rational det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return det > 0 ? 1 : det < 0 ? -1 : 0;
}

/// Open segments ab and cd meet in exactly one interior point.
inline bool rational_proper_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const int o1 = rational_orientation(a, b, c);
  const int o2 = rational_orientation(a, b, d);
  const int o3 = rational_orientation(c, d, a);
  const int o4 = rational_orientation(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

/// Number of unordered point pairs whose edge class is not Invalid.
inline std::size_t count_valid_pairs(const Instance& inst) {
  std::size_t count = 0;
  for (PointId u = 0; u < inst.size(); ++u) {
    for (PointId v = u + 1; v < inst.size(); ++v) {
      const bool rb = (inst.color(u) == Color::Red && inst.color(v) == Color::Blue) ||
                      (inst.color(u) == Color::Blue && inst.color(v) == Color::Red);
      if (!rb) ++count;
    }
  }
  return count;
}

inline std::vector<PointId> side_ids(const Instance& inst, Side side) {
  const Color other = side == Side::Red ? Color::Blue : Color::Red;
  std::vector<PointId> ids;
  for (const auto& p : inst.points()) {
    if (p.color != other) ids.push_back(p.id);
  }
  return ids;
}

}  // namespace rbp::testing
