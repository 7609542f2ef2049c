#pragma once

// Seeded instance generators, random and structured. Every
// generator is a pure function of its arguments.

#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rbp/core.hpp"

namespace rbp {

struct GeneratedInstance {
  Instance instance;
  /// Point names, written as trailing comments by serialize_instance.
  std::map<std::string, PointId> labels;
  /// Named positions that need not be input points (e.g. p_c).
  std::map<std::string, Vec2> landmarks;
  /// A feasible solution known by construction, when the generator has one.
  std::optional<EdgeSet> constructed;
};

enum class Placement : std::uint8_t { Plane, Line, Circle };

inline Placement parse_placement(std::string_view s) {
  if (s == "plane") return Placement::Plane;
  if (s == "line") return Placement::Line;
  if (s == "circle") return Placement::Circle;
  throw std::invalid_argument("unknown placement '" + std::string(s) + "'");
}

namespace detail {

/// Draws `colors.size()` distinct positions; a coincident draw is repeated.
inline Instance place_points(const std::vector<Color>& colors, Placement mode, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::set<std::pair<double, double>> used;
  std::vector<Point> points;
  points.reserve(colors.size());
  for (Color c : colors) {
    Vec2 at;
    do {
      switch (mode) {
        case Placement::Plane: at = {unit(rng), unit(rng)}; break;
        case Placement::Line: at = {unit(rng), 0.0}; break;
        case Placement::Circle: {
          const double t = 2.0 * std::numbers::pi * unit(rng);
          at = {std::cos(t), std::sin(t)};
          break;
        }
      }
    } while (!used.emplace(at.x, at.y).second);
    points.push_back(Point{static_cast<PointId>(points.size()), c, at.x, at.y});
  }
  return Instance(std::move(points));
}

}  // namespace detail

/// Each point is red with probability red_frac, blue with blue_frac, purple
/// otherwise.
inline Instance gen_random(std::size_t n, double red_frac, double blue_frac, Placement mode,
                           std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random: n must be at least 1");
  if (!(red_frac >= 0 && blue_frac >= 0 && red_frac + blue_frac <= 1.0)) {
    throw std::invalid_argument("gen_random: fractions must lie in [0,1] and sum to at most 1");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Color> colors(n);
  for (auto& c : colors) {
    const double u = unit(rng);
    c = u < red_frac ? Color::Red : u < red_frac + blue_frac ? Color::Blue : Color::Purple;
  }
  return detail::place_points(colors, mode, rng);
}

/// Exact color counts in a seeded random order.
inline Instance gen_random_counts(std::size_t red, std::size_t blue, std::size_t purple,
                                  Placement mode, std::uint64_t seed) {
  if (red + blue + purple == 0) throw std::invalid_argument("gen_random_counts: no points");
  std::vector<Color> colors;
  colors.insert(colors.end(), red, Color::Red);
  colors.insert(colors.end(), blue, Color::Blue);
  colors.insert(colors.end(), purple, Color::Purple);
  std::mt19937_64 rng(seed);
  std::shuffle(colors.begin(), colors.end(), rng);
  return detail::place_points(colors, mode, rng);
}

inline constexpr double kHexagonRotation = std::numbers::pi / 12.0;

/// Purple center, six purple points at radius 3, six red at radius 1 and six
/// blue at radius 1 turned by `rotation`. The constructed solution is the
/// star around the center.
inline GeneratedInstance gen_hexagon(double rotation = kHexagonRotation) {
  const double sixth = std::numbers::pi / 3.0;
  const double turns = rotation / sixth;
  if (!std::isfinite(rotation) || std::abs(turns - std::round(turns)) < 1e-12) {
    throw std::invalid_argument("gen_hexagon: rotation must not be a multiple of pi/3");
  }
  std::vector<Point> pts;
  auto add = [&](Color c, double r, double angle) {
    pts.push_back(Point{static_cast<PointId>(pts.size()), c, r * std::cos(angle), r * std::sin(angle)});
  };
  pts.push_back(Point{0, Color::Purple, 0.0, 0.0});
  for (int i = 0; i < 6; ++i) add(Color::Purple, 3.0, i * sixth);
  for (int i = 0; i < 6; ++i) add(Color::Red, 1.0, i * sixth);
  for (int i = 0; i < 6; ++i) add(Color::Blue, 1.0, i * sixth + rotation);

  GeneratedInstance out{Instance(std::move(pts)), {{"center", 0}}, {}, std::nullopt};
  std::vector<Edge> star;
  for (PointId v = 1; v < out.instance.size(); ++v) star.push_back(edge_between(out.instance, 0, v));
  out.constructed = EdgeSet(std::move(star));
  return out;
}

/// Purple corners of the unit equilateral triangle; on each segment from a
/// corner to the Fermat point (the centroid) 2t points at distances
/// s·L/(2t+1), s = 1..2t, from the corner, red for odd s and blue for even s.
/// The constructed solution runs a red and a blue chain down every segment
/// and joins the three innermost points of each color by two triangle sides.
inline GeneratedInstance gen_steiner_family(std::size_t t) {
  const double h = std::sqrt(3.0) / 2.0;
  const std::array<Vec2, 3> corner{Vec2{0.0, 0.0}, Vec2{1.0, 0.0}, Vec2{0.5, h}};
  const Vec2 fermat{0.5, h / 3.0};

  std::vector<Point> pts;
  for (const Vec2& c : corner) pts.push_back(Point{static_cast<PointId>(pts.size()), Color::Purple, c.x, c.y});
  // along[c][s-1] = id of the s-th point from corner c
  std::array<std::vector<PointId>, 3> along;
  for (std::size_t c = 0; c < 3; ++c) {
    const Vec2 d = fermat - corner[c];
    for (std::size_t s = 1; s <= 2 * t; ++s) {
      const double f = static_cast<double>(s) / static_cast<double>(2 * t + 1);
      const Vec2 at = corner[c] + f * d;
      along[c].push_back(static_cast<PointId>(pts.size()));
      pts.push_back(Point{static_cast<PointId>(pts.size()), s % 2 ? Color::Red : Color::Blue, at.x, at.y});
    }
  }

  GeneratedInstance out{Instance(std::move(pts)), {{"a", 0}, {"b", 1}, {"c", 2}}, {{"fermat", fermat}}, std::nullopt};
  const Instance& inst = out.instance;
  std::vector<Edge> edges;
  if (t == 0) {
    edges.push_back(edge_between(inst, 0, 1));
    edges.push_back(edge_between(inst, 0, 2));
  } else {
    for (std::size_t parity = 0; parity < 2; ++parity) {
      for (std::size_t c = 0; c < 3; ++c) {
        PointId prev = static_cast<PointId>(c);
        for (std::size_t s = parity; s < 2 * t; s += 2) {
          edges.push_back(edge_between(inst, prev, along[c][s]));
          prev = along[c][s];
        }
      }
      const std::size_t inner = 2 * t - 2 + parity;
      edges.push_back(edge_between(inst, along[0][inner], along[1][inner]));
      edges.push_back(edge_between(inst, along[0][inner], along[2][inner]));
    }
  }
  out.constructed = EdgeSet(std::move(edges));
  return out;
}

struct MartiniParams {
  /// Number of levels; odd and at least 1.
  std::size_t m = 1;
  double eps = 1e-3;
  /// Downward shift of the working circle; chosen automatically when empty.
  std::optional<double> eps0;
  /// Points per chain.
  std::size_t chain_points = 2;
  /// When positive, every chain gets enough points that consecutive points
  /// are at most this far apart (overrides chain_points).
  double chain_spacing = 0.0;
  /// Polar angle of q_0 on the working circle, in degrees; r_0 is mirrored.
  double q0_angle_deg = 200.0;
};

namespace detail {

/// Polar angles (radians, on the working circle) of q_0..q_m, independent
/// of ε₀.
inline std::vector<double> martini_angles(const MartiniParams& p) {
  std::vector<double> angle{p.q0_angle_deg * std::numbers::pi / 180.0};
  for (std::size_t i = 0; i < p.m; ++i) {
    const double a = angle.back();
    const double width = -2.0 * std::cos(a);  // |q_i r_i|
    const double d = width / 2.0 + p.eps;
    if (d >= 2.0) throw std::invalid_argument("gen_martini: level " + std::to_string(i + 1) + " does not fit on the circle");
    angle.push_back(a + 2.0 * std::asin(d / 2.0));
  }
  return angle;
}

inline int chain_count(const MartiniParams& p, double length) {
  if (p.chain_spacing > 0.0) return std::max(0, static_cast<int>(std::ceil(length / p.chain_spacing)) - 1);
  return static_cast<int>(p.chain_points);
}

}  // namespace detail

/// Largest ε₀ ≤ 10⁻² (found by bisection) with y(q_m) > y(p_c). Throws when
/// no positive value works.
inline double martini_default_eps0(const MartiniParams& p) {
  const double qm = detail::martini_angles(p).back();
  auto ok = [&](double e0) { return -e0 + std::sin(qm) > -1.0 && std::cos(qm) < 0.0; };
  if (ok(1e-2)) return 1e-2;
  double lo = 0.0, hi = 1e-2;
  if (!ok(lo)) {
    throw std::invalid_argument("gen_martini: q_" + std::to_string(p.m) + " passes the bottom of the circle (angle " +
                                std::to_string(qm * 180.0 / std::numbers::pi) + " degrees); no eps0 works");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  if (!(lo > 0.0)) throw std::invalid_argument("gen_martini: no positive eps0 keeps y(q_m) > y(p_c)");
  return lo;
}

/// Martini glass. p_N = (0,0); the working circle C has radius 1 and
/// center (0,−ε₀); q_{i+1} lies on C at distance |q_i r_i|/2 + ε from q_i;
/// r_i mirrors q_i. Level i carries a blue chain on the q side and a red chain
/// on the r side for even i, swapped for odd i. A red chain runs from p_N to
/// p_E = r_0 and a blue chain from q_m to p_S = (0, −2 − 2ε₀).
inline GeneratedInstance gen_martini(const MartiniParams& params = {}) {
  if (params.m < 1 || params.m % 2 == 0) throw std::invalid_argument("gen_martini: m must be odd and at least 1");
  if (!(params.eps > 0.0)) throw std::invalid_argument("gen_martini: eps must be positive");
  const auto angle = detail::martini_angles(params);
  const double eps0 = params.eps0 ? *params.eps0 : martini_default_eps0(params);
  if (!(eps0 > 0.0)) throw std::invalid_argument("gen_martini: eps0 must be positive");

  const Vec2 center{0.0, -eps0};
  auto on_circle = [&](double a) { return Vec2{center.x + std::cos(a), center.y + std::sin(a)}; };
  auto mirror = [](Vec2 v) { return Vec2{-v.x, v.y}; };
  const Vec2 pn{0.0, 0.0};
  const Vec2 pc{0.0, -1.0};
  const Vec2 ps{0.0, -2.0 - 2.0 * eps0};
  const std::size_t m = params.m;

  std::vector<Vec2> q, r;
  for (double a : angle) {
    q.push_back(on_circle(a));
    r.push_back(mirror(q.back()));
  }
  if (!(q[m].y > pc.y)) {
    throw std::invalid_argument("gen_martini: y(q_m) = " + std::to_string(q[m].y) + " is not above y(p_c) = " +
                                std::to_string(pc.y));
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!(distance(q[i], q[i + 1]) > 0.5 * distance(q[i], r[i]))) {
      throw std::logic_error("gen_martini: |q_i q_i+1| > |q_i r_i| / 2 fails at level " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      for (const Vec2& nu : {q[i], r[i]}) {
        for (const Vec2& eta : {q[j], r[j]}) {
          if (!(distance(pn, nu) + distance(ps, eta) > distance(pn, ps))) {
            throw std::logic_error("gen_martini: |p_N nu| + |p_S eta| > |p_N p_S| fails");
          }
        }
      }
    }
  }

  std::vector<Point> pts;
  std::map<std::string, PointId> labels;
  auto add = [&](Color c, Vec2 at, std::string name = {}) {
    const auto id = static_cast<PointId>(pts.size());
    pts.push_back(Point{id, c, at.x, at.y});
    if (!name.empty()) labels.emplace(std::move(name), id);
  };
  add(Color::Purple, pn, "pN");
  add(Color::Purple, ps, "pS");
  for (std::size_t i = 0; i <= m; ++i) {
    add(Color::Purple, q[i], "q" + std::to_string(i));
    add(Color::Purple, r[i], "r" + std::to_string(i));
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Color q_side = i % 2 == 0 ? Color::Blue : Color::Red;
    const Color r_side = i % 2 == 0 ? Color::Red : Color::Blue;
    const double span = angle[i + 1] - angle[i];
    const int count = detail::chain_count(params, 2.0 * std::sin(span / 2.0));
    for (int s = 1; s <= count; ++s) {
      const Vec2 at = on_circle(angle[i] + span * s / (count + 1));
      add(q_side, at);
      add(r_side, mirror(at));
    }
  }
  auto straight_chain = [&](Color c, Vec2 from, Vec2 to) {
    const int count = detail::chain_count(params, distance(from, to));
    for (int s = 1; s <= count; ++s) add(c, from + (static_cast<double>(s) / (count + 1)) * (to - from));
  };
  straight_chain(Color::Red, pn, r[0]);
  straight_chain(Color::Blue, q[m], ps);

  GeneratedInstance out{Instance(std::move(pts)), std::move(labels), {}, std::nullopt};
  out.landmarks = {{"pN", pn}, {"pS", ps}, {"pc", pc}, {"pW", q[0]}, {"pE", r[0]}};
  return out;
}

/// Generator name plus numeric parameters; unknown parameters are rejected.
struct GenSpec {
  std::string name;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;
};

inline GeneratedInstance generate(const GenSpec& spec) {
  std::set<std::string> known;
  auto get = [&](const std::string& key, double fallback) {
    known.insert(key);
    auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
  };
  auto count = [&](const std::string& key, double fallback) {
    const double v = get(key, fallback);
    if (!(v >= 0) || v != std::floor(v)) throw std::invalid_argument(key + " must be a non-negative integer");
    return static_cast<std::size_t>(v);
  };
  GeneratedInstance out{Instance({Point{0, Color::Purple, 0, 0}}), {}, {}, std::nullopt};
  if (spec.name == "random" || spec.name == "random-line" || spec.name == "random-circle") {
    const Placement mode = spec.name == "random" ? Placement::Plane
                           : spec.name == "random-line" ? Placement::Line : Placement::Circle;
    out.instance = gen_random(count("n", 10), get("red", 0.4), get("blue", 0.4), mode, spec.seed);
  } else if (spec.name == "hexagon") {
    out = gen_hexagon(get("rotation", kHexagonRotation));
  } else if (spec.name == "steiner") {
    out = gen_steiner_family(count("t", 5));
  } else if (spec.name == "martini") {
    MartiniParams p;
    p.m = count("m", 1);
    p.eps = get("eps", p.eps);
    if (spec.params.count("eps0")) p.eps0 = get("eps0", 0.0);
    known.insert("eps0");
    p.chain_points = count("chainPoints", 2);
    p.chain_spacing = get("chainSpacing", 0.0);
    p.q0_angle_deg = get("q0Angle", p.q0_angle_deg);
    out = gen_martini(p);
  } else {
    throw std::invalid_argument("unknown generator '" + spec.name + "'");
  }
  for (const auto& [key, value] : spec.params) {
    if (!known.count(key)) throw std::invalid_argument("generator '" + spec.name + "' has no parameter '" + key + "'");
  }
  return out;
}

}  // namespace rbp
