#pragma once

// Points on a circle. Purple edges never cross in an optimum and arcs between
// angularly consecutive purple points are independent, which gives an
// interval dynamic program over purple pairs with four tables, one per
// boundary condition:
//   PC  ends already joined in red and blue
//   RC  ends joined in red only; the subproblem must join them in blue
//   BC  ends joined in blue only; the subproblem must join them in red
//   NC  ends not joined; the subproblem must join them in both colors
// Entry (i, j) covers the purple points from p_i counterclockwise to p_j and
// everything on that arc.

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "rbp/graph.hpp"
#include "rbp/line.hpp"

namespace rbp {

struct CircleCertificate {
  bool concyclic = true;
  Vec2 center;
  double radius = 0.0;
  /// max | |p − center| − radius | / radius; +inf when the fit is degenerate.
  double residual = 0.0;
};

/// Circumcircle of the first point, the point farthest from it and the point
/// spanning the largest triangle with those two; every point is then checked
/// against `tolerance` relative to the radius.
inline CircleCertificate check_concyclic(const Instance& inst, double tolerance = 1e-9) {
  CircleCertificate cert;
  const std::size_t n = inst.size();
  if (n == 0) return cert;
  if (n == 1) {
    cert.center = inst.pos(0);
    return cert;
  }
  const Vec2 a = inst.pos(0);
  PointId bi = 0;
  for (const auto& p : inst.points()) {
    if (distance(a, p.pos()) > distance(a, inst.pos(bi))) bi = p.id;
  }
  const Vec2 b = inst.pos(bi);
  if (n == 2) {
    cert.center = 0.5 * (a + b);
    cert.radius = 0.5 * distance(a, b);
    return cert;
  }
  PointId ci = 0;
  double area = 0.0;
  for (const auto& p : inst.points()) {
    const double s = std::abs(cross(b - a, p.pos() - a));
    if (s > area) {
      area = s;
      ci = p.id;
    }
  }
  const Vec2 c = inst.pos(ci);
  const Vec2 ab = b - a, ac = c - a;
  const double d = 2.0 * cross(ab, ac);
  if (area <= 1e-12 * dot(ab, ab)) {
    cert.concyclic = false;
    cert.residual = std::numeric_limits<double>::infinity();
    return cert;
  }
  const double ab2 = dot(ab, ab), ac2 = dot(ac, ac);
  const Vec2 offset{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
  cert.center = a + offset;
  cert.radius = norm(offset);
  for (const auto& p : inst.points()) {
    cert.residual =
        std::max(cert.residual, std::abs(distance(p.pos(), cert.center) - cert.radius) / cert.radius);
  }
  cert.concyclic = cert.residual <= tolerance;
  return cert;
}

enum class Table : std::uint8_t { P = 0, R = 1, B = 2, N = 3 };

inline constexpr std::array<Table, 4> kTables{Table::P, Table::R, Table::B, Table::N};

inline constexpr char table_name(Table t) { return "PRBN"[static_cast<int>(t)]; }

/// Red and blue points strictly between two angularly consecutive purple
/// points, counterclockwise.
struct Arc {
  PointId from;
  PointId to;
  std::span<const PointId> interior;
};

/// How a table entry was obtained, for reconstruction.
struct Choice {
  enum class Kind : std::uint8_t {
    None,
    /// Arc solution (span 1).
    Base,
    /// PC[i,j] plus the purple edge p_i p_j.
    Direct,
    /// PC[i,h] + ΛC[h,j] + |p_i p_h|.
    Split,
    /// first(i, i+1) + second(i+1, j).
    Pair,
  };
  Kind kind = Kind::None;
  std::uint32_t h = 0;
  Table first = Table::P;
  Table second = Table::P;
};

struct DPTables {
  std::size_t k = 0;
  std::array<std::vector<double>, 4> value;
  std::array<std::vector<Choice>, 4> choice;

  explicit DPTables(std::size_t purple = 0) : k(purple) {
    for (auto& v : value) v.assign(k * k, std::numeric_limits<double>::infinity());
    for (auto& c : choice) c.assign(k * k, Choice{});
  }

  double& at(Table t, std::size_t i, std::size_t j) { return value[static_cast<int>(t)][i * k + j]; }
  double at(Table t, std::size_t i, std::size_t j) const {
    return value[static_cast<int>(t)][i * k + j];
  }
  Choice& how(Table t, std::size_t i, std::size_t j) {
    return choice[static_cast<int>(t)][i * k + j];
  }
  const Choice& how(Table t, std::size_t i, std::size_t j) const {
    return choice[static_cast<int>(t)][i * k + j];
  }
};

/// Angular layout of a concyclic instance.
struct CircleLayout {
  /// All ids counterclockwise, starting at the first purple point.
  std::vector<PointId> order;
  /// Purple ids in that order.
  std::vector<PointId> purple;
  std::vector<Arc> arcs;  // arcs[i] runs from purple[i] to purple[i+1 mod k]
};

inline CircleLayout circle_layout(const Instance& inst, const CircleCertificate& cert) {
  CircleLayout layout;
  std::vector<double> angle(inst.size());
  for (const auto& p : inst.points()) {
    angle[p.id] = std::atan2(p.y - cert.center.y, p.x - cert.center.x);
  }
  layout.order.resize(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) layout.order[i] = static_cast<PointId>(i);
  std::sort(layout.order.begin(), layout.order.end(), [&](PointId a, PointId b) {
    return angle[a] != angle[b] ? angle[a] < angle[b] : a < b;
  });
  auto first = std::find_if(layout.order.begin(), layout.order.end(),
                            [&](PointId p) { return inst.color(p) == Color::Purple; });
  if (first == layout.order.end()) return layout;
  std::rotate(layout.order.begin(), first, layout.order.end());

  std::vector<std::size_t> at;
  for (std::size_t i = 0; i < layout.order.size(); ++i) {
    if (inst.color(layout.order[i]) == Color::Purple) {
      at.push_back(i);
      layout.purple.push_back(layout.order[i]);
    }
  }
  const std::span<const PointId> order = layout.order;
  for (std::size_t i = 0; i < at.size(); ++i) {
    const std::size_t begin = at[i] + 1;
    const std::size_t end = i + 1 < at.size() ? at[i + 1] : order.size();
    layout.arcs.push_back(
        Arc{layout.purple[i], layout.purple[(i + 1) % at.size()], order.subspan(begin, end - begin)});
  }
  return layout;
}

/// The four boundary-condition optima of one arc and their edge sets. Chains
/// run over one color's points together with both purple ends; a chain that
/// may stay open drops its longest gap. Infeasible entries are +inf.
struct ArcCosts {
  std::array<double, 4> cost;
  std::array<std::vector<Edge>, 4> edges;
};

inline ArcCosts base_arc_costs(const Instance& inst, const Arc& arc) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const Segment seg{arc.from, arc.to, arc.interior};
  const auto red = detail::color_chain(inst, seg, Color::Red);
  const auto blue = detail::color_chain(inst, seg, Color::Blue);

  ArcCosts out;
  const double red_open = red.total - red.longest_length();
  const double blue_open = blue.total - blue.longest_length();
  const double red_closed = red.has_interior ? red.total : inf;
  const double blue_closed = blue.has_interior ? blue.total : inf;

  // {red chain closed?, blue chain closed?} per table.
  constexpr std::array<std::pair<bool, bool>, 4> closed{
      {{false, false}, {false, true}, {true, false}, {true, true}}};
  for (Table t : kTables) {
    const auto [rc, bc] = closed[static_cast<int>(t)];
    const int idx = static_cast<int>(t);
    out.cost[idx] = (rc ? red_closed : red_open) + (bc ? blue_closed : blue_open);
    if (out.cost[idx] == inf) continue;
    detail::append_without(out.edges[idx], red, !rc);
    detail::append_without(out.edges[idx], blue, !bc);
  }
  return out;
}

namespace detail {

inline std::size_t ccw_next(std::size_t i, std::size_t k) { return (i + 1) % k; }

}  // namespace detail

/// Fills the four tables in increasing span order. Base entries come from the
/// arcs; purple edges enter only through Direct (h = j) and Split.
inline DPTables fill_tables(const Instance& inst, const CircleLayout& layout,
                            std::vector<ArcCosts>* arc_costs = nullptr) {
  const std::size_t k = layout.purple.size();
  DPTables dp(k);
  if (k < 2) return dp;

  std::vector<ArcCosts> arcs;
  arcs.reserve(k);
  for (const auto& arc : layout.arcs) arcs.push_back(base_arc_costs(inst, arc));

  auto length = [&](std::size_t i, std::size_t j) {
    return inst.distance(layout.purple[i], layout.purple[j]);
  };

  auto relax = [&](Table t, std::size_t i, std::size_t j, double cost, Choice how) {
    if (cost < dp.at(t, i, j)) {
      dp.at(t, i, j) = cost;
      dp.how(t, i, j) = how;
    }
  };

  // Pair combinations: (table on (i,i+1), table on (i+1,j)).
  using Combo = std::pair<Table, Table>;
  const std::array<std::vector<Combo>, 4> pairs{{
      {{Table::N, Table::P}, {Table::P, Table::N}, {Table::R, Table::B}, {Table::B, Table::R}},
      {{Table::N, Table::R}, {Table::R, Table::N}},
      {{Table::N, Table::B}, {Table::B, Table::N}},
      {{Table::N, Table::N}},
  }};

  for (std::size_t span = 1; span < k; ++span) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = (i + span) % k;
      const std::size_t i1 = detail::ccw_next(i, k);
      for (Table t : kTables) {
        const int ti = static_cast<int>(t);
        if (span == 1) {
          relax(t, i, j, arcs[i].cost[ti], Choice{Choice::Kind::Base});
        } else {
          // Split: p_i joined to p_h by a purple edge, h strictly inside.
          for (std::size_t h = i1; h != j; h = detail::ccw_next(h, k)) {
            relax(t, i, j, dp.at(Table::P, i, h) + dp.at(t, h, j) + length(i, h),
                  Choice{Choice::Kind::Split, static_cast<std::uint32_t>(h)});
          }
          // Pair: p_i has no purple neighbor here.
          for (const auto& [a, b] : pairs[ti]) {
            relax(t, i, j, dp.at(a, i, i1) + dp.at(b, i1, j),
                  Choice{Choice::Kind::Pair, 0, a, b});
          }
        }
        // Direct (h = j). PC is final by now since it never uses this.
        if (t != Table::P) {
          relax(t, i, j, dp.at(Table::P, i, j) + length(i, j), Choice{Choice::Kind::Direct});
        }
      }
    }
  }
  if (arc_costs) *arc_costs = std::move(arcs);
  return dp;
}

struct FinalChoice {
  double weight = std::numeric_limits<double>::infinity();
  std::size_t j = 0;
  Table left = Table::P;   // on (0, j)
  Table right = Table::N;  // on (j, 0)
};

/// min over j of PC[0,j]+NC[j,0], NC[0,j]+PC[j,0], RC[0,j]+BC[j,0],
/// BC[0,j]+RC[j,0].
inline FinalChoice combine_final(const DPTables& dp, std::size_t origin = 0) {
  FinalChoice best;
  const std::size_t k = dp.k;
  constexpr std::array<std::pair<Table, Table>, 4> pairings{
      {{Table::P, Table::N}, {Table::N, Table::P}, {Table::R, Table::B}, {Table::B, Table::R}}};
  for (std::size_t step = 1; step < k; ++step) {
    const std::size_t j = (origin + step) % k;
    for (const auto& [a, b] : pairings) {
      const double w = dp.at(a, origin, j) + dp.at(b, j, origin);
      if (w < best.weight) best = FinalChoice{w, j, a, b};
    }
  }
  return best;
}

namespace detail {

inline void reconstruct(const DPTables& dp, const CircleLayout& layout,
                        const std::vector<ArcCosts>& arcs, const Instance& inst, Table t,
                        std::size_t i, std::size_t j, std::vector<Edge>& out) {
  const std::size_t k = dp.k;
  const Choice& c = dp.how(t, i, j);
  switch (c.kind) {
    case Choice::Kind::Base: {
      const auto& e = arcs[i].edges[static_cast<int>(t)];
      out.insert(out.end(), e.begin(), e.end());
      return;
    }
    case Choice::Kind::Direct:
      out.push_back(edge_between(inst, layout.purple[i], layout.purple[j]));
      reconstruct(dp, layout, arcs, inst, Table::P, i, j, out);
      return;
    case Choice::Kind::Split:
      out.push_back(edge_between(inst, layout.purple[i], layout.purple[c.h]));
      reconstruct(dp, layout, arcs, inst, Table::P, i, c.h, out);
      reconstruct(dp, layout, arcs, inst, t, c.h, j, out);
      return;
    case Choice::Kind::Pair:
      reconstruct(dp, layout, arcs, inst, c.first, i, (i + 1) % k, out);
      reconstruct(dp, layout, arcs, inst, c.second, (i + 1) % k, j, out);
      return;
    case Choice::Kind::None:
      throw std::logic_error("circle DP: reconstructing an infeasible entry");
  }
}

}  // namespace detail

/// Text matrices of all four tables.
inline std::string dump_tables(const DPTables& dp) {
  std::string out;
  char buf[32];
  for (Table t : kTables) {
    out += table_name(t);
    out += "C\n";
    for (std::size_t i = 0; i < dp.k; ++i) {
      for (std::size_t j = 0; j < dp.k; ++j) {
        if (i == j) std::snprintf(buf, sizeof buf, "%12s", "-");
        else std::snprintf(buf, sizeof buf, "%12.6g", dp.at(t, i, j));
        out += buf;
      }
      out += '\n';
    }
  }
  return out;
}

/// Throws PreconditionError when the points are not concyclic. With at most
/// one purple point the two sides share no edge and are solved as separate
/// MSTs.
inline Solution solve_circle(const Instance& inst, double tolerance = 1e-9) {
  const auto cert = check_concyclic(inst, tolerance);
  if (!cert.concyclic) {
    throw PreconditionError("points are not concyclic (residual " +
                                std::to_string(cert.residual) + ")",
                            cert.residual);
  }
  if (inst.purple_count() <= 1) {
    std::vector<Edge> edges;
    for (Side s : {Side::Red, Side::Blue}) {
      const auto tree = side_mst(inst, s);
      edges.insert(edges.end(), tree.begin(), tree.end());
    }
    return summarize(inst, EdgeSet(std::move(edges)), "circle");
  }
  const auto layout = circle_layout(inst, cert);
  std::vector<ArcCosts> arcs;
  const auto dp = fill_tables(inst, layout, &arcs);
  const auto final = combine_final(dp);
  if (!std::isfinite(final.weight)) throw std::logic_error("circle DP: no finite pairing");
  std::vector<Edge> edges;
  detail::reconstruct(dp, layout, arcs, inst, final.left, 0, final.j, edges);
  detail::reconstruct(dp, layout, arcs, inst, final.right, final.j, 0, edges);
  EdgeSet set(std::move(edges));
  if (!approx_equal(set.weight(), final.weight, 1e-7)) {
    throw std::logic_error("circle DP: reconstruction weight differs from table value");
  }
  return summarize(inst, std::move(set), "circle");
}

}  // namespace rbp
