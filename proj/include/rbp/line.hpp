#pragma once

// Collinear instances. Purple points cut the line into segments S_0..S_k
// that can be solved independently; each interior segment either uses the
// purple edge between its ends or connects them through both a red and a
// blue chain.

#include <limits>
#include <optional>
#include <vector>

#include "rbp/graph.hpp"

namespace rbp {

struct LineCertificate {
  bool collinear = true;
  /// Largest distance of a point from the fitted line.
  double residual = 0.0;
  /// Bounding-box diagonal, the scale the residual is compared against.
  double scale = 0.0;
  Vec2 origin;
  Vec2 direction{1.0, 0.0};
};

/// Fits the line through the first point and the point farthest from it,
/// then checks every point against 1e-9 × bounding-box scale.
inline LineCertificate check_collinear(const Instance& inst, double tolerance = 1e-9) {
  LineCertificate cert;
  if (inst.size() < 2) return cert;
  Vec2 lo = inst.pos(0), hi = inst.pos(0);
  for (const auto& p : inst.points()) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  cert.scale = distance(lo, hi);
  cert.origin = inst.pos(0);
  PointId far = 0;
  double far_d = -1.0;
  for (const auto& p : inst.points()) {
    const double d = distance(cert.origin, p.pos());
    if (d > far_d) {
      far_d = d;
      far = p.id;
    }
  }
  const Vec2 span = inst.pos(far) - cert.origin;
  cert.direction = (1.0 / norm(span)) * span;
  for (const auto& p : inst.points()) {
    cert.residual = std::max(cert.residual, std::abs(cross(cert.direction, p.pos() - cert.origin)));
  }
  cert.collinear = cert.residual <= tolerance * cert.scale;
  return cert;
}

/// Points between two consecutive purple points (or beyond the outermost
/// one), in line order.
struct Segment {
  std::optional<PointId> left;
  std::optional<PointId> right;
  std::span<const PointId> interior;
};

enum class SegmentCase : std::uint8_t {
  /// No purple edge: both ends joined by a red chain and a blue chain.
  Chains,
  /// Purple edge between the ends; each color chain drops its largest gap.
  PurpleEdge,
  /// End segment (or no purple at all): plain chains per color.
  Open,
};

struct SegmentSolution {
  SegmentCase chosen = SegmentCase::Open;
  double cost = 0.0;
  std::vector<Edge> edges;
};

namespace detail {

/// Consecutive edges over one color's points plus the purple ends present.
struct ColorChain {
  std::vector<Edge> edges;
  double total = 0.0;
  std::size_t longest = 0;  // index into edges
  bool has_interior = false;

  double longest_length() const { return edges.empty() ? 0.0 : edges[longest].length; }
};

inline ColorChain color_chain(const Instance& inst, const Segment& seg, Color color) {
  ColorChain chain;
  std::optional<PointId> prev = seg.left;
  auto link = [&](PointId next) {
    if (prev) {
      Edge e = edge_between(inst, *prev, next);
      if (chain.edges.empty() || e.length > chain.edges[chain.longest].length) {
        chain.longest = chain.edges.size();
      }
      chain.total += e.length;
      chain.edges.push_back(e);
    }
    prev = next;
  };
  for (PointId p : seg.interior) {
    if (inst.color(p) == color) {
      chain.has_interior = true;
      link(p);
    }
  }
  if (seg.right && chain.has_interior) link(*seg.right);
  return chain;
}

inline void append_without(std::vector<Edge>& out, const ColorChain& chain, bool drop_longest) {
  for (std::size_t i = 0; i < chain.edges.size(); ++i) {
    if (!(drop_longest && i == chain.longest)) out.push_back(chain.edges[i]);
  }
}

}  // namespace detail

/// Optimal edges inside one segment. Interior segments compare
///   Chains:     full red chain + full blue chain (needs both colors inside)
///   PurpleEdge: g + (red chain − longest red gap) + (blue chain − longest blue gap)
/// and keep the cheaper; end segments are plain chains to the purple end.
inline SegmentSolution segment_cost(const Instance& inst, const Segment& seg) {
  SegmentSolution out;
  const auto red = detail::color_chain(inst, seg, Color::Red);
  const auto blue = detail::color_chain(inst, seg, Color::Blue);

  if (!seg.left || !seg.right) {
    out.chosen = SegmentCase::Open;
    out.cost = red.total + blue.total;
    detail::append_without(out.edges, red, false);
    detail::append_without(out.edges, blue, false);
    return out;
  }

  const Edge direct = edge_between(inst, *seg.left, *seg.right);
  const double purple_cost = direct.length + (red.total - red.longest_length()) +
                             (blue.total - blue.longest_length());
  const bool chains_valid = red.has_interior && blue.has_interior;
  const double chains_cost = chains_valid ? red.total + blue.total
                                          : std::numeric_limits<double>::infinity();

  if (chains_cost < purple_cost && !approx_equal(chains_cost, purple_cost)) {
    out.chosen = SegmentCase::Chains;
    out.cost = chains_cost;
    detail::append_without(out.edges, red, false);
    detail::append_without(out.edges, blue, false);
  } else {
    out.chosen = SegmentCase::PurpleEdge;
    out.cost = purple_cost;
    out.edges.push_back(direct);
    detail::append_without(out.edges, red, true);
    detail::append_without(out.edges, blue, true);
  }
  return out;
}

/// Ids in line order; `position` receives each point's coordinate along the
/// line. Skips sorting when the ids are already in order.
inline std::vector<PointId> line_order(const Instance& inst, const LineCertificate& cert,
                                       std::vector<double>* position = nullptr) {
  std::vector<double> t(inst.size());
  for (const auto& p : inst.points()) t[p.id] = dot(p.pos() - cert.origin, cert.direction);
  std::vector<PointId> order(inst.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<PointId>(i);
  if (!std::is_sorted(t.begin(), t.end())) {
    std::sort(order.begin(), order.end(), [&](PointId a, PointId b) { return t[a] < t[b]; });
  }
  if (position) *position = std::move(t);
  return order;
}

/// Splits the line-ordered ids at purple points.
inline std::vector<Segment> line_segments(const Instance& inst, std::span<const PointId> order) {
  std::vector<Segment> segments;
  std::optional<PointId> left;
  std::size_t start = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (inst.color(order[i]) != Color::Purple) continue;
    segments.push_back(Segment{left, order[i], order.subspan(start, i - start)});
    left = order[i];
    start = i + 1;
  }
  segments.push_back(Segment{left, std::nullopt, order.subspan(start)});
  return segments;
}

/// Throws PreconditionError when the points are not collinear.
inline Solution solve_line(const Instance& inst, double tolerance = 1e-9) {
  const auto cert = check_collinear(inst, tolerance);
  if (!cert.collinear) {
    throw PreconditionError("points are not collinear (residual " +
                                std::to_string(cert.residual) + ")",
                            cert.residual);
  }
  const auto order = line_order(inst, cert);
  std::vector<Edge> edges;
  edges.reserve(inst.size());
  for (const auto& seg : line_segments(inst, order)) {
    auto part = segment_cost(inst, seg);
    edges.insert(edges.end(), part.edges.begin(), part.edges.end());
  }
  return summarize(inst, EdgeSet(std::move(edges)), "line");
}

}  // namespace rbp
