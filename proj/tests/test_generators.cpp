#include <gtest/gtest.h>

#include <numbers>

#include "rbp/generators.hpp"
#include "rbp/circle.hpp"
#include "rbp/graph.hpp"
#include "rbp/line.hpp"
#include "support.hpp"

namespace rbp {
namespace {

std::string text_of(const Instance& inst) { return serialize_instance(inst); }

TEST(Generators, RandomIsDeterministicPerSeed) {
  for (Placement mode : {Placement::Plane, Placement::Line, Placement::Circle}) {
    EXPECT_EQ(text_of(gen_random(30, 0.3, 0.3, mode, 9)), text_of(gen_random(30, 0.3, 0.3, mode, 9)));
    EXPECT_NE(text_of(gen_random(30, 0.3, 0.3, mode, 9)), text_of(gen_random(30, 0.3, 0.3, mode, 10)));
  }
  const auto counted = gen_random_counts(3, 4, 5, Placement::Plane, 2);
  EXPECT_EQ(counted.purple_count(), 5u);
  EXPECT_EQ(counted.size(), 12u);
}

TEST(Generators, PlacementsCarryTheirCertificates) {
  EXPECT_EQ(parse_placement("line"), Placement::Line);
  EXPECT_THROW(parse_placement("sphere"), std::invalid_argument);
  EXPECT_TRUE(check_collinear(gen_random(40, 0.3, 0.3, Placement::Line, 4)).collinear);
  EXPECT_TRUE(check_concyclic(gen_random(40, 0.3, 0.3, Placement::Circle, 4)).concyclic);
}

TEST(Generators, HexagonStar) {
  const auto g = gen_hexagon();
  EXPECT_EQ(g.instance.size(), 19u);
  EXPECT_EQ(g.instance.purple_count(), 7u);
  ASSERT_TRUE(g.constructed);
  EXPECT_TRUE(testing::bfs_rbp_spanning(g.instance, g.constructed->edges()));
  EXPECT_NEAR(g.constructed->weight(), 30.0, 1e-9);
  EXPECT_EQ(g.labels.at("center"), 0u);
  EXPECT_THROW(gen_hexagon(std::numbers::pi / 3.0), std::invalid_argument);
  EXPECT_THROW(gen_hexagon(0.0), std::invalid_argument);
}

TEST(Generators, SteinerFamilyCertificate) {
  for (std::size_t t : {0u, 1u, 3u}) {
    const auto g = gen_steiner_family(t);
    EXPECT_EQ(g.instance.size(), 3 + 6 * t);
    EXPECT_EQ(g.instance.purple_count(), 3u);
    ASSERT_TRUE(g.constructed);
    EXPECT_TRUE(testing::bfs_rbp_spanning(g.instance, g.constructed->edges()));
    const Vec2 f = g.landmarks.at("fermat");
    EXPECT_NEAR(f.x, 0.5, 1e-15);
    EXPECT_NEAR(f.y, std::sqrt(3.0) / 6.0, 1e-15);
  }
  EXPECT_NEAR(gen_steiner_family(0).constructed->weight(), 2.0, 1e-12);
}

TEST(Generators, MartiniShapeAndInequalities) {
  const auto g = gen_martini();
  EXPECT_EQ(g.instance.size(), 14u);
  EXPECT_EQ(g.instance.purple_count(), 6u);
  const PointId pn = g.labels.at("pN"), ps = g.labels.at("pS");
  EXPECT_EQ(g.instance.color(pn), Color::Purple);
  EXPECT_EQ(g.instance.color(ps), Color::Purple);
  // Every q_i r_i pair is horizontal and crosses the vertical p_N p_S.
  for (int i = 0; i <= 1; ++i) {
    const PointId q = g.labels.at("q" + std::to_string(i)), r = g.labels.at("r" + std::to_string(i));
    EXPECT_NEAR(g.instance.pos(q).y, g.instance.pos(r).y, 1e-12);
    EXPECT_TRUE(testing::rational_proper_cross(g.instance.pos(pn), g.instance.pos(ps), g.instance.pos(q),
                                               g.instance.pos(r)));
  }
  EXPECT_EQ(serialize_instance(g.instance, g.labels), serialize_instance(gen_martini().instance, g.labels));
}

TEST(Generators, MartiniThreeLevelsNeedsSmallerEpsilon) {
  MartiniParams p;
  p.m = 3;
  EXPECT_THROW(gen_martini(p), std::invalid_argument);
  p.m = 2;
  EXPECT_THROW(gen_martini(p), std::invalid_argument);
}

TEST(Generators, GenSpecDispatchAndUnknownKeys) {
  const auto g = generate(GenSpec{"steiner", {{"t", 2}}, 0});
  EXPECT_EQ(g.instance.size(), 15u);
  EXPECT_THROW(generate(GenSpec{"steiner", {{"tt", 2}}, 0}), std::invalid_argument);
  EXPECT_THROW(generate(GenSpec{"random", {{"n", 2.5}}, 0}), std::invalid_argument);
  EXPECT_THROW(generate(GenSpec{"nope", {}, 0}), std::invalid_argument);
  EXPECT_EQ(generate(GenSpec{"random", {{"n", 7}}, 3}).instance.size(), 7u);
}

}  // namespace
}  // namespace rbp
