#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "rbp/circle.hpp"
#include "rbp/exact.hpp"
#include "rbp/generators.hpp"
#include "rbp/oracle.hpp"
#include "support.hpp"

namespace rbp {
namespace {

Instance on_circle(const std::vector<std::pair<char, double>>& layout) {
  std::vector<Point> pts;
  for (const auto& [c, deg] : layout) {
    const double a = deg * std::numbers::pi / 180.0;
    const Color color = c == 'R' ? Color::Red : c == 'B' ? Color::Blue : Color::Purple;
    pts.push_back(Point{static_cast<PointId>(pts.size()), color, std::cos(a), std::sin(a)});
  }
  return Instance(std::move(pts));
}

TEST(Circle, Examples) {
  const auto diameter = on_circle({{'P', 0}, {'P', 180}, {'R', 90}, {'B', 270}});
  EXPECT_NEAR(solve_circle(diameter).weight, 2.0 + 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(oracle_forest(diameter).weight, 2.0 + 2.0 * std::sqrt(2.0), 1e-12);

  const auto two = on_circle({{'P', 10}, {'P', 100}});
  EXPECT_NEAR(solve_circle(two).weight, std::sqrt(2.0), 1e-12);

  const auto square = on_circle({{'P', 0}, {'P', 90}, {'P', 180}, {'P', 270}});
  const auto sq = solve_circle(square);
  EXPECT_NEAR(sq.weight, 3.0 * std::sqrt(2.0), 1e-12);
  EXPECT_EQ(sq.purple_edges, 3u);
}

TEST(Circle, RejectsCollinearAndOffCircleInput) {
  EXPECT_THROW(solve_circle(parse_instance("P 0 0\nP 1 0\nR 2 0")), PreconditionError);
  try {
    solve_circle(parse_instance("P 1 0\nP 0 1\nP -1 0\nR 0 -1.1"));
    FAIL() << "expected a precondition error";
  } catch (const PreconditionError& e) {
    EXPECT_GT(e.residual(), 0.01);
  }
}

TEST(Circle, AtMostOnePurpleFallsBackToSideTrees) {
  const auto inst = on_circle({{'R', 0}, {'R', 50}, {'B', 100}, {'P', 200}, {'B', 300}});
  EXPECT_TRUE(approx_equal(solve_circle(inst).weight, oracle_subsets(inst).weight));
}

// Arc optimum by enumeration: subsets of the arc's allowed edges without the
// direct purple edge; a pre-connected color gets a free link between the ends.
std::array<double, 4> arc_oracle(const Instance& inst) {
  const auto ground = allowed_edges(inst);
  std::vector<Edge> usable;
  for (const Edge& e : ground) {
    if (!(e.u == 0 && e.v == 1)) usable.push_back(e);
  }
  std::array<double, 4> best;
  best.fill(std::numeric_limits<double>::infinity());
  const Edge link = edge_between(inst, 0, 1);
  std::vector<Edge> pick;
  for (std::uint32_t mask = 0; mask < (1u << usable.size()); ++mask) {
    pick.clear();
    double w = 0.0;
    for (std::size_t i = 0; i < usable.size(); ++i) {
      if (mask >> i & 1u) {
        pick.push_back(usable[i]);
        w += usable[i].length;
      }
    }
    for (Table t : kTables) {
      const bool red_pre = t == Table::P || t == Table::R;
      const bool blue_pre = t == Table::P || t == Table::B;
      auto red_ok = [&] {
        auto edges = pick;
        if (red_pre) edges.push_back(link);
        return testing::bfs_side_connected(inst, edges, Side::Red);
      };
      auto blue_ok = [&] {
        auto edges = pick;
        if (blue_pre) edges.push_back(link);
        return testing::bfs_side_connected(inst, edges, Side::Blue);
      };
      const int ti = static_cast<int>(t);
      if (w < best[ti] && red_ok() && blue_ok()) best[ti] = w;
    }
  }
  return best;
}

TEST(Circle, BaseArcCostsMatchEnumeration) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  for (int interior = 0; interior <= 4; ++interior) {
    for (std::uint32_t pattern = 0; pattern < (1u << interior); ++pattern) {
      for (int rep = 0; rep < 3; ++rep) {
        const double span = 0.5 + 2.5 * u(rng);  // arc angle in radians
        std::vector<double> at;
        for (int i = 0; i < interior; ++i) at.push_back(span * (0.02 + 0.96 * u(rng)));
        std::sort(at.begin(), at.end());
        std::vector<Point> pts;
        pts.push_back(Point{0, Color::Purple, 1.0, 0.0});
        pts.push_back(Point{1, Color::Purple, std::cos(span), std::sin(span)});
        for (int i = 0; i < interior; ++i) {
          pts.push_back(Point{static_cast<PointId>(pts.size()), (pattern >> i & 1u) ? Color::Blue : Color::Red,
                              std::cos(at[i]), std::sin(at[i])});
        }
        const Instance inst(pts);
        std::vector<PointId> ids;
        for (PointId p = 2; p < inst.size(); ++p) ids.push_back(p);
        const auto got = base_arc_costs(inst, Arc{0, 1, ids});
        const auto expect = arc_oracle(inst);
        for (Table t : kTables) {
          const int ti = static_cast<int>(t);
          if (std::isinf(expect[ti])) {
            EXPECT_TRUE(std::isinf(got.cost[ti])) << table_name(t) << " pattern " << pattern;
          } else {
            EXPECT_TRUE(approx_equal(got.cost[ti], expect[ti]))
                << table_name(t) << " interior " << interior << " pattern " << pattern << ": " << got.cost[ti]
                << " vs " << expect[ti];
          }
        }
        ++checked;
      }
    }
  }
  EXPECT_EQ(checked, 3 * 31);
}

TEST(Circle, EmptyAndSingleRedArcs) {
  const auto inst = on_circle({{'P', 0}, {'P', 60}, {'R', 20}});
  const auto empty = base_arc_costs(inst, Arc{0, 1, {}});
  EXPECT_EQ(empty.cost[static_cast<int>(Table::P)], 0.0);
  EXPECT_TRUE(std::isinf(empty.cost[static_cast<int>(Table::R)]));
  EXPECT_TRUE(std::isinf(empty.cost[static_cast<int>(Table::B)]));
  EXPECT_TRUE(std::isinf(empty.cost[static_cast<int>(Table::N)]));

  const std::vector<PointId> red{2};
  const auto one = base_arc_costs(inst, Arc{0, 1, red});
  EXPECT_NEAR(one.cost[static_cast<int>(Table::P)], std::min(inst.distance(0, 2), inst.distance(2, 1)), 1e-15);
  EXPECT_TRUE(std::isinf(one.cost[static_cast<int>(Table::R)]));
}

TEST(Circle, TablesAreOrderedEntrywise) {
  std::mt19937_64 rng(67);
  for (int rep = 0; rep < 50; ++rep) {
    const auto inst = gen_random(8 + rep % 10, 0.3, 0.3, Placement::Circle, rng());
    if (inst.purple_count() < 2) continue;
    const auto layout = circle_layout(inst, check_concyclic(inst));
    const auto dp = fill_tables(inst, layout);
    for (std::size_t i = 0; i < dp.k; ++i) {
      for (std::size_t j = 0; j < dp.k; ++j) {
        if (i == j) continue;
        const double p = dp.at(Table::P, i, j), r = dp.at(Table::R, i, j);
        const double b = dp.at(Table::B, i, j), n = dp.at(Table::N, i, j);
        EXPECT_LE(p, std::min(r, b) + 1e-12);
        EXPECT_LE(std::max(r, b), n + 1e-12);
        EXPECT_GE(p, 0.0);
      }
    }
    EXPECT_TRUE(std::isfinite(combine_final(dp).weight));
  }
}

TEST(Circle, FinalWeightDoesNotDependOnTheOrigin) {
  std::mt19937_64 rng(71);
  for (int rep = 0; rep < 20; ++rep) {
    const auto inst = gen_random(12, 0.3, 0.3, Placement::Circle, rng());
    if (inst.purple_count() < 2) continue;
    const auto dp = fill_tables(inst, circle_layout(inst, check_concyclic(inst)));
    const double w0 = combine_final(dp, 0).weight;
    for (std::size_t o = 1; o < dp.k; ++o) EXPECT_TRUE(approx_equal(combine_final(dp, o).weight, w0));
  }
}

TEST(Circle, MatchesExactAndOracleWithCircleStructure) {
  std::mt19937_64 rng(73);
  for (int rep = 0; rep < 40; ++rep) {
    const auto inst = gen_random(5 + rep % 5, 0.3, 0.3, Placement::Circle, rng());
    const auto sol = solution_stats(inst, solve_circle(inst).edges);
    EXPECT_TRUE(approx_equal(sol.weight, solve_exact(inst).weight));
    if (inst.purple_count() <= 6) EXPECT_TRUE(approx_equal(sol.weight, oracle_forest(inst).weight));
    EXPECT_TRUE(testing::bfs_rbp_spanning(inst, sol.edges.edges()));
    for (std::size_t i = 0; i < sol.edges.size(); ++i) {
      if (sol.edges[i].cls == EdgeClass::Purple) EXPECT_EQ(sol.crossings_per_edge[i], 0u);
    }
  }
}

TEST(Circle, DumpHasFourTables) {
  const auto inst = on_circle({{'P', 0}, {'P', 120}, {'P', 240}, {'R', 60}});
  const auto text = dump_tables(fill_tables(inst, circle_layout(inst, check_concyclic(inst))));
  for (const char* name : {"PC\n", "RC\n", "BC\n", "NC\n"}) EXPECT_NE(text.find(name), std::string::npos);
}

}  // namespace
}  // namespace rbp
