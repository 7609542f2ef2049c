#pragma once

// Wall-clock scaling measurements for the solvers.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "rbp/circle.hpp"
#include "rbp/exact.hpp"
#include "rbp/generators.hpp"
#include "rbp/line.hpp"

namespace rbp {

/// n points at x = 0..n−1 in id order, each purple with probability
/// `purple_frac` and otherwise red or blue with equal odds.
inline Instance bench_line_instance(std::size_t n, double purple_frac, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = unit(rng);
    const Color c = u < purple_frac ? Color::Purple : u < (1.0 + purple_frac) / 2.0 ? Color::Red : Color::Blue;
    pts[i] = Point{static_cast<PointId>(i), c, static_cast<double>(i), 0.0};
  }
  return Instance(std::move(pts));
}

/// k purple points evenly spaced on the unit circle with `per_arc` red or
/// blue points at seeded positions inside every arc.
inline Instance bench_circle_instance(std::size_t k, std::size_t per_arc, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point> pts;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(k);
  auto add = [&](Color c, double a) {
    pts.push_back(Point{static_cast<PointId>(pts.size()), c, std::cos(a), std::sin(a)});
  };
  for (std::size_t i = 0; i < k; ++i) {
    add(Color::Purple, i * step);
    for (std::size_t s = 1; s <= per_arc; ++s) {
      const double jitter = (unit(rng) - 0.5) * 0.5;
      add(unit(rng) < 0.5 ? Color::Red : Color::Blue, (i + (s + jitter) / (per_arc + 1.0)) * step);
    }
  }
  return Instance(std::move(pts));
}

/// Median wall time in seconds of `reps` calls.
inline double median_seconds(const std::function<void()>& work, std::size_t reps) {
  std::vector<double> t;
  for (std::size_t r = 0; r < std::max<std::size_t>(reps, 1); ++r) {
    const auto start = std::chrono::steady_clock::now();
    work();
    t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::nth_element(t.begin(), t.begin() + t.size() / 2, t.end());
  return t[t.size() / 2];
}

struct BenchRow {
  std::string solver;
  std::size_t size = 0;  // n for line and exact, k for circle
  std::size_t points = 0;
  double median = 0.0;
};

inline std::vector<BenchRow> bench_line(const std::vector<std::size_t>& sizes, std::size_t reps,
                                        std::uint64_t seed) {
  std::vector<BenchRow> rows;
  for (auto n : sizes) {
    const auto inst = bench_line_instance(n, 0.1, seed);
    volatile double sink = 0.0;
    const double t = median_seconds([&] { sink = sink + solve_line(inst).weight; }, reps);
    rows.push_back({"line", n, n, t});
  }
  return rows;
}

inline std::vector<BenchRow> bench_circle(const std::vector<std::size_t>& sizes, std::size_t per_arc,
                                          std::size_t reps, std::uint64_t seed) {
  std::vector<BenchRow> rows;
  for (auto k : sizes) {
    const auto inst = bench_circle_instance(k, per_arc, seed);
    volatile double sink = 0.0;
    const double t = median_seconds([&] { sink = sink + solve_circle(inst).weight; }, reps);
    rows.push_back({"circle", k, inst.size(), t});
  }
  return rows;
}

inline std::vector<BenchRow> bench_exact(const std::vector<std::size_t>& sizes, std::size_t reps,
                                         std::uint64_t seed) {
  std::vector<BenchRow> rows;
  for (auto n : sizes) {
    const auto inst = gen_random(n, 0.35, 0.35, Placement::Plane, seed + n);
    volatile double sink = 0.0;
    const double t = median_seconds([&] { sink = sink + solve_exact(inst).weight; }, reps);
    rows.push_back({"exact", n, n, t});
  }
  return rows;
}

inline std::string format_bench(const std::vector<BenchRow>& rows) {
  std::string out = "solver size points median_s\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s %zu %zu %.6g\n", r.solver.c_str(), r.size, r.points, r.median);
    out += buf;
  }
  return out;
}

}  // namespace rbp
