#pragma once

// Colored point sets, edges and the geometric predicates shared by every
// solver.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rbp {

using PointId = std::uint32_t;

/// Point color. The enumerator order is the tie-break order.
enum class Color : std::uint8_t { Red = 0, Blue = 1, Purple = 2 };

/// Color class of an edge, derived from its endpoint colors.
enum class EdgeClass : std::uint8_t { Red = 0, Blue = 1, Purple = 2, Invalid = 3 };

/// The two connectivity requirements: R∪P and B∪P.
enum class Side : std::uint8_t { Red = 0, Blue = 1 };

inline constexpr double kWeightTolerance = 1e-9;

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InstanceError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InstanceError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Thrown when a solver's input does not satisfy its geometric precondition
/// (collinearity, concyclicity, size bounds).
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, double residual = 0.0)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

constexpr char color_letter(Color c) {
  switch (c) {
    case Color::Red: return 'R';
    case Color::Blue: return 'B';
    case Color::Purple: return 'P';
  }
  return '?';
}

constexpr std::string_view class_name(EdgeClass c) {
  switch (c) {
    case EdgeClass::Red: return "red";
    case EdgeClass::Blue: return "blue";
    case EdgeClass::Purple: return "purple";
    case EdgeClass::Invalid: return "invalid";
  }
  return "?";
}

constexpr EdgeClass classify(Color a, Color b) {
  if (a == Color::Purple && b == Color::Purple) return EdgeClass::Purple;
  const bool red = a == Color::Red || b == Color::Red;
  const bool blue = a == Color::Blue || b == Color::Blue;
  if (red && blue) return EdgeClass::Invalid;
  return red ? EdgeClass::Red : EdgeClass::Blue;
}

constexpr bool on_side(Color c, Side s) {
  return c == Color::Purple || (s == Side::Red ? c == Color::Red : c == Color::Blue);
}

/// True when an edge of this class contributes to the connectivity of `s`.
constexpr bool on_side(EdgeClass c, Side s) {
  return c == EdgeClass::Purple ||
         (s == Side::Red ? c == EdgeClass::Red : c == EdgeClass::Blue);
}

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Vec2, Vec2) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

struct Point {
  PointId id = 0;
  Color color = Color::Purple;
  double x = 0.0;
  double y = 0.0;

  Vec2 pos() const { return {x, y}; }
};

/// Immutable colored point set. Ids are dense and equal to the position in
/// `points()`.
class Instance {
 public:
  Instance() = default;

  /// Ids are reassigned to match positions. Throws InstanceError on a
  /// non-finite coordinate or two coincident points.
  explicit Instance(std::vector<Point> points) : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      auto& p = points_[i];
      p.id = static_cast<PointId>(i);
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw InstanceError("point " + std::to_string(i) + " has a non-finite coordinate");
      }
      switch (p.color) {
        case Color::Red: red_.push_back(p.id); break;
        case Color::Blue: blue_.push_back(p.id); break;
        case Color::Purple: purple_.push_back(p.id); break;
      }
    }
    if (auto dup = find_duplicate(); dup.first != dup.second) {
      throw InstanceError("points " + std::to_string(dup.first) + " and " +
                          std::to_string(dup.second) + " coincide");
    }
  }

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  std::size_t purple_count() const noexcept { return purple_.size(); }

  std::span<const Point> points() const noexcept { return points_; }
  const Point& operator[](PointId id) const { return points_[id]; }
  Color color(PointId id) const { return points_[id].color; }
  Vec2 pos(PointId id) const { return points_[id].pos(); }

  std::span<const PointId> red() const noexcept { return red_; }
  std::span<const PointId> blue() const noexcept { return blue_; }
  std::span<const PointId> purple() const noexcept { return purple_; }

  /// Sorted ids of R∪P or B∪P.
  std::vector<PointId> side(Side s) const {
    std::vector<PointId> out;
    for (const auto& p : points_) {
      if (on_side(p.color, s)) out.push_back(p.id);
    }
    return out;
  }

  std::size_t side_size(Side s) const noexcept {
    return purple_.size() + (s == Side::Red ? red_.size() : blue_.size());
  }

  double distance(PointId a, PointId b) const { return rbp::distance(pos(a), pos(b)); }

  /// Number of pairs of distinct point pairs whose distances agree within
  /// `tolerance` (relative). Zero means the instance is in general position.
  /// O(n² log n).
  std::size_t general_position_violations(double tolerance = 1e-12) const {
    std::vector<double> d;
    d.reserve(points_.size() * (points_.size() - (points_.empty() ? 0 : 1)) / 2);
    for (std::size_t i = 0; i < points_.size(); ++i) {
      for (std::size_t j = i + 1; j < points_.size(); ++j) {
        d.push_back(distance(static_cast<PointId>(i), static_cast<PointId>(j)));
      }
    }
    std::sort(d.begin(), d.end());
    std::size_t violations = 0;
    for (std::size_t i = 1; i < d.size(); ++i) {
      if (d[i] - d[i - 1] <= tolerance * d[i]) ++violations;
    }
    return violations;
  }

 private:
  std::pair<PointId, PointId> find_duplicate() const {
    std::vector<PointId> order(points_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<PointId>(i);
    auto key = [&](PointId i) { return std::pair{points_[i].x, points_[i].y}; };
    std::sort(order.begin(), order.end(),
              [&](PointId a, PointId b) { return key(a) < key(b) || (key(a) == key(b) && a < b); });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (key(order[i]) == key(order[i - 1])) return {order[i - 1], order[i]};
    }
    return {0, 0};
  }

  std::vector<Point> points_;
  std::vector<PointId> red_;
  std::vector<PointId> blue_;
  std::vector<PointId> purple_;
};

struct Edge {
  PointId u = 0;
  PointId v = 0;
  double length = 0.0;
  EdgeClass cls = EdgeClass::Invalid;

  friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
};

/// Global deterministic edge order: (length, u, v, class).
inline bool edge_less(const Edge& a, const Edge& b) {
  if (a.length != b.length) return a.length < b.length;
  if (a.u != b.u) return a.u < b.u;
  if (a.v != b.v) return a.v < b.v;
  return a.cls < b.cls;
}

inline bool id_less(const Edge& a, const Edge& b) {
  return a.u != b.u ? a.u < b.u : a.v < b.v;
}

inline Edge edge_between(const Instance& inst, PointId a, PointId b) {
  if (a == b || a >= inst.size() || b >= inst.size()) {
    throw std::invalid_argument("edge_between: need two distinct valid ids");
  }
  if (a > b) std::swap(a, b);
  return Edge{a, b, inst.distance(a, b), classify(inst.color(a), inst.color(b))};
}

/// Set of distinct edges in (u, v) order with a cached total weight.
class EdgeSet {
 public:
  EdgeSet() = default;

  explicit EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (auto& e : edges_) {
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    sort_by_ids(edges_);
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    weight_ = 0.0;
    for (const auto& e : edges_) weight_ += e.length;
  }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  double weight() const noexcept { return weight_; }

  auto begin() const noexcept { return edges_.begin(); }
  auto end() const noexcept { return edges_.end(); }
  const Edge& operator[](std::size_t i) const { return edges_[i]; }

  bool contains(PointId a, PointId b) const {
    if (a > b) std::swap(a, b);
    Edge key{a, b, 0.0, EdgeClass::Invalid};
    return std::binary_search(edges_.begin(), edges_.end(), key, id_less);
  }

 private:
  // Two-pass counting sort for large sets keeps construction linear; the
  // line solver relies on that.
  static void sort_by_ids(std::vector<Edge>& edges) {
    if (std::is_sorted(edges.begin(), edges.end(), id_less)) return;
    if (edges.size() < 4096) {
      std::sort(edges.begin(), edges.end(), id_less);
      return;
    }
    PointId max_id = 0;
    for (const auto& e : edges) max_id = std::max(max_id, e.v);
    std::vector<Edge> buffer(edges.size());
    auto pass = [&](auto key, std::vector<Edge>& from, std::vector<Edge>& to) {
      std::vector<std::size_t> start(static_cast<std::size_t>(max_id) + 2, 0);
      for (const auto& e : from) ++start[key(e) + 1];
      for (std::size_t i = 1; i < start.size(); ++i) start[i] += start[i - 1];
      for (const auto& e : from) to[start[key(e)]++] = e;
    };
    pass([](const Edge& e) { return e.v; }, edges, buffer);
    pass([](const Edge& e) { return e.u; }, buffer, edges);
  }

  std::vector<Edge> edges_;
  double weight_ = 0.0;
};

inline std::size_t choose2(std::size_t n) { return n * (n - (n ? 1 : 0)) / 2; }

/// Expected number of allowed edges: C(|R|+|P|,2) + C(|B|+|P|,2) − C(|P|,2).
inline std::size_t allowed_edge_count(const Instance& inst) {
  return choose2(inst.side_size(Side::Red)) + choose2(inst.side_size(Side::Blue)) -
         choose2(inst.purple_count());
}

/// Every non-red-blue pair, in the global edge order.
inline std::vector<Edge> allowed_edges(const Instance& inst) {
  std::vector<Edge> out;
  out.reserve(allowed_edge_count(inst));
  for (PointId u = 0; u < inst.size(); ++u) {
    for (PointId v = u + 1; v < inst.size(); ++v) {
      if (classify(inst.color(u), inst.color(v)) != EdgeClass::Invalid) {
        out.push_back(edge_between(inst, u, v));
      }
    }
  }
  std::sort(out.begin(), out.end(), edge_less);
  return out;
}

// ---------------------------------------------------------------------------
// Orientation predicate

namespace detail {

inline void two_sum(double a, double b, double& sum, double& err) {
  sum = a + b;
  const double bv = sum - a;
  const double av = sum - bv;
  err = (a - av) + (b - bv);
}

inline void two_product(double a, double b, double& prod, double& err) {
  prod = a * b;
  err = std::fma(a, b, -prod);
}

// Adds `b` to a nonoverlapping expansion in place (Shewchuk's GROW-EXPANSION).
template <std::size_t N>
inline void grow_expansion(std::array<double, N>& e, std::size_t& len, double b) {
  double q = b;
  for (std::size_t i = 0; i < len; ++i) {
    double s, err;
    two_sum(q, e[i], s, err);
    e[i] = err;
    q = s;
  }
  e[len++] = q;
}

inline int exact_orientation(Vec2 a, Vec2 b, Vec2 c) {
  // (b - a) x (c - a) expanded into six exact products.
  const std::array<std::pair<double, double>, 6> terms{{
      {b.x, c.y}, {-b.x, a.y}, {-a.x, c.y}, {-b.y, c.x}, {b.y, a.x}, {a.y, c.x}}};
  std::array<double, 12> e{};
  std::size_t len = 0;
  for (const auto& [p, q] : terms) {
    double prod, err;
    two_product(p, q, prod, err);
    grow_expansion(e, len, err);
    grow_expansion(e, len, prod);
  }
  for (std::size_t i = len; i-- > 0;) {
    if (e[i] > 0) return 1;
    if (e[i] < 0) return -1;
  }
  return 0;
}

}  // namespace detail

/// Sign of the turn a→b→c: +1 counterclockwise, −1 clockwise, 0 collinear.
/// Exact for all finite double inputs.
inline int orientation(Vec2 a, Vec2 b, Vec2 c) {
  const double left = (b.x - a.x) * (c.y - a.y);
  const double right = (b.y - a.y) * (c.x - a.x);
  const double det = left - right;
  const double bound = 3.3306690738754716e-16 * (std::abs(left) + std::abs(right));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return detail::exact_orientation(a, b, c);
}

/// Open segments ab and cd meet in exactly one interior point. Touching at
/// an endpoint or overlapping collinearly does not count.
inline bool segments_properly_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  if (o1 == 0 || o2 == 0 || o1 == o2) return false;
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  return o3 != 0 && o4 != 0 && o3 != o4;
}

/// Edges must not share an endpoint.
inline bool segments_properly_cross(const Instance& inst, const Edge& e1, const Edge& e2) {
  if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) {
    throw std::invalid_argument("segments_properly_cross: edges share an endpoint");
  }
  return segments_properly_cross(inst.pos(e1.u), inst.pos(e1.v), inst.pos(e2.u),
                                 inst.pos(e2.v));
}

// ---------------------------------------------------------------------------
// Text format: one "<R|B|P> <x> <y>" per line, '#' starts a comment.

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool parse_double(std::string_view tok, double& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace detail

/// Points and the trailing-comment labels attached to them.
struct LabeledInstance {
  Instance instance;
  std::map<std::string, PointId> labels;
};

inline LabeledInstance parse_labeled_instance(std::istream& in) {
  std::vector<Point> points;
  std::map<std::string, PointId> labels;
  std::map<std::pair<double, double>, std::size_t> seen;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    std::string_view comment;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      comment = detail::trim(line.substr(hash + 1));
      line = line.substr(0, hash);
    }
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto tok = detail::split_ws(line);
    if (tok.size() != 3 || tok[0].size() != 1) {
      throw ParseError(lineno, "expected \"<R|B|P> <x> <y>\"");
    }
    Color color;
    switch (tok[0][0]) {
      case 'R': color = Color::Red; break;
      case 'B': color = Color::Blue; break;
      case 'P': color = Color::Purple; break;
      default: throw ParseError(lineno, "unknown color '" + std::string(tok[0]) + "'");
    }
    double x, y;
    if (!detail::parse_double(tok[1], x) || !detail::parse_double(tok[2], y) ||
        !std::isfinite(x) || !std::isfinite(y)) {
      throw ParseError(lineno, "bad coordinate");
    }
    if (auto [it, fresh] = seen.emplace(std::pair{x, y}, lineno); !fresh) {
      throw ParseError(lineno, "duplicate point (first seen on line " +
                                   std::to_string(it->second) + ")");
    }
    if (!comment.empty() && detail::split_ws(comment).size() == 1) {
      labels.emplace(std::string(comment), static_cast<PointId>(points.size()));
    }
    points.push_back(Point{static_cast<PointId>(points.size()), color, x, y});
  }
  if (points.empty()) throw ParseError(lineno, "no points");
  return {Instance(std::move(points)), std::move(labels)};
}

inline Instance parse_instance(std::istream& in) { return parse_labeled_instance(in).instance; }

inline Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

/// "<C> <x> <y>" per point with %.17g coordinates; `labels` become trailing
/// comments.
inline std::string serialize_instance(const Instance& inst,
                                      const std::map<std::string, PointId>& labels = {}) {
  std::vector<std::string> tag(inst.size());
  for (const auto& [name, id] : labels) {
    if (id < inst.size()) tag[id] = name;
  }
  std::string out;
  char buf[96];
  for (const auto& p : inst.points()) {
    std::snprintf(buf, sizeof buf, "%c %.17g %.17g", color_letter(p.color), p.x, p.y);
    out += buf;
    if (!tag[p.id].empty()) out += " # " + tag[p.id];
    out += '\n';
  }
  return out;
}

/// One "u v" line per edge.
inline std::string format_edge_list(const EdgeSet& edges) {
  std::string out;
  for (const Edge& e : edges) out += std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
  return out;
}

/// Reads "u v" lines ('#' starts a comment). Throws ParseError on malformed
/// lines, unknown ids and self loops.
inline EdgeSet parse_edge_list(std::istream& in, const Instance& inst) {
  std::vector<Edge> edges;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = detail::split_ws(detail::trim(line));
    if (tok.empty()) continue;
    std::array<PointId, 2> id{};
    for (std::size_t i = 0; i < 2 && tok.size() == 2; ++i) {
      const auto [ptr, ec] = std::from_chars(tok[i].data(), tok[i].data() + tok[i].size(), id[i]);
      if (ec != std::errc{} || ptr != tok[i].data() + tok[i].size()) throw ParseError(lineno, "expected \"<u> <v>\"");
    }
    if (tok.size() != 2) throw ParseError(lineno, "expected \"<u> <v>\"");
    if (id[0] >= inst.size() || id[1] >= inst.size()) throw ParseError(lineno, "edge references an unknown point");
    if (id[0] == id[1]) throw ParseError(lineno, "self loop");
    edges.push_back(edge_between(inst, id[0], id[1]));
  }
  return EdgeSet(std::move(edges));
}

inline bool approx_equal(double a, double b, double rel = kWeightTolerance) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + 1e-15;
}

}  // namespace rbp
