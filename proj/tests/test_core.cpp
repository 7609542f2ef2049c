#include <gtest/gtest.h>

#include <random>

#include "rbp/core.hpp"
#include "rbp/generators.hpp"
#include "support.hpp"

namespace rbp {
namespace {

Instance e1() { return parse_instance("P 0 0\nP 10 0\nR 4 0\nB 6 0"); }

TEST(Parse, ReadsPointsInFileOrder) {
  const auto inst = e1();
  EXPECT_EQ(inst.size(), 4u);
  EXPECT_EQ(inst.purple_count(), 2u);
  EXPECT_EQ(inst.color(2), Color::Red);
  EXPECT_EQ(inst.pos(3).x, 6.0);
  for (PointId i = 0; i < inst.size(); ++i) EXPECT_EQ(inst[i].id, i);
}

TEST(Parse, DuplicateAcrossCommentIsRejected) {
  EXPECT_THROW(parse_instance("P 0 0\n# c\nP 0 0"), ParseError);
}

TEST(Parse, ReportsLineNumbers) {
  try {
    parse_instance("P 0 0\n\nX 1 1\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_instance("R 0 0\nB 1 nope\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Parse, EmptyInputIsRejected) {
  EXPECT_THROW(parse_instance(""), ParseError);
  EXPECT_THROW(parse_instance("# only a comment\n"), ParseError);
}

TEST(Parse, RejectsNonFiniteAndExtraFields) {
  EXPECT_THROW(parse_instance("P inf 0"), ParseError);
  EXPECT_THROW(parse_instance("P 0 0 0"), ParseError);
  EXPECT_THROW(parse_instance("PP 0 0"), ParseError);
}

TEST(Serialize, RoundTripsGeneratorOutputsBitIdentically) {
  std::vector<GeneratedInstance> outputs;
  outputs.push_back(gen_hexagon());
  outputs.push_back(gen_steiner_family(4));
  outputs.push_back(gen_martini());
  outputs.push_back({gen_random(40, 0.3, 0.3, Placement::Plane, 5), {}, {}, std::nullopt});
  outputs.push_back({gen_random(40, 0.3, 0.3, Placement::Circle, 6), {}, {}, std::nullopt});
  for (const auto& g : outputs) {
    const std::string text = serialize_instance(g.instance, g.labels);
    std::istringstream in(text);
    const auto back = parse_labeled_instance(in);
    ASSERT_EQ(back.instance.size(), g.instance.size());
    for (PointId i = 0; i < g.instance.size(); ++i) {
      EXPECT_EQ(back.instance[i].color, g.instance[i].color);
      EXPECT_EQ(std::bit_cast<std::uint64_t>(back.instance[i].x), std::bit_cast<std::uint64_t>(g.instance[i].x));
      EXPECT_EQ(std::bit_cast<std::uint64_t>(back.instance[i].y), std::bit_cast<std::uint64_t>(g.instance[i].y));
    }
    EXPECT_EQ(back.labels, g.labels);
    EXPECT_EQ(serialize_instance(back.instance, back.labels), text);
  }
}

TEST(Serialize, HexagonHasThirteenPlusSixPoints) {
  const auto text = serialize_instance(gen_hexagon().instance);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 19);
}

TEST(EdgeClass, AllNinePairs) {
  const Color c[] = {Color::Red, Color::Blue, Color::Purple};
  const EdgeClass expect[3][3] = {
      {EdgeClass::Red, EdgeClass::Invalid, EdgeClass::Red},
      {EdgeClass::Invalid, EdgeClass::Blue, EdgeClass::Blue},
      {EdgeClass::Red, EdgeClass::Blue, EdgeClass::Purple},
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(classify(c[i], c[j]), expect[i][j]);
  }
}

TEST(EdgeBetween, Examples) {
  const auto pp = parse_instance("P 0 0\nP 10 0");
  const Edge a = edge_between(pp, 1, 0);
  EXPECT_EQ(a.u, 0u);
  EXPECT_EQ(a.v, 1u);
  EXPECT_DOUBLE_EQ(a.length, 10.0);
  EXPECT_EQ(a.cls, EdgeClass::Purple);

  const auto rb = parse_instance("R 0 0\nB 1 0");
  EXPECT_EQ(edge_between(rb, 0, 1).cls, EdgeClass::Invalid);

  const auto rp = parse_instance("R 0 0\nP 3 4");
  EXPECT_DOUBLE_EQ(edge_between(rp, 0, 1).length, 5.0);
  EXPECT_EQ(edge_between(rp, 0, 1).cls, EdgeClass::Red);

  EXPECT_THROW(edge_between(rp, 1, 1), std::invalid_argument);
}

TEST(AllowedEdges, CountFormulaExamples) {
  EXPECT_EQ(allowed_edges(e1()).size(), 5u);
  EXPECT_EQ(allowed_edges(parse_instance("P 0 0\nP 1 0\nP 0 1")).size(), 3u);
  const auto two_two = parse_instance("R 0 0\nR 1 0\nB 0 1\nB 1 1");
  const auto edges = allowed_edges(two_two);
  ASSERT_EQ(edges.size(), 2u);
  EXPECT_NE(edges[0].cls, edges[1].cls);
}

TEST(AllowedEdges, CountMatchesPairEnumeration) {
  std::mt19937_64 rng(11);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto inst = gen_random(n, 0.33, 0.33, Placement::Plane, rng());
      const auto edges = allowed_edges(inst);
      EXPECT_EQ(edges.size(), testing::count_valid_pairs(inst));
      EXPECT_EQ(edges.size(), allowed_edge_count(inst));
      for (const Edge& e : edges) EXPECT_NE(e.cls, EdgeClass::Invalid);
      EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end(), edge_less));
    }
  }
}

TEST(EdgeSet, CanonicalSortedAndDeduplicated) {
  const auto inst = e1();
  EdgeSet s({edge_between(inst, 2, 0), edge_between(inst, 0, 2), edge_between(inst, 1, 0)});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.edges()[0].u, 0u);
  EXPECT_EQ(s.edges()[0].v, 1u);
  EXPECT_DOUBLE_EQ(s.weight(), 14.0);
  EXPECT_TRUE(s.contains(2, 0));
  EXPECT_FALSE(s.contains(1, 2));
}

TEST(EdgeSet, LargeSetsMatchSmallPath) {
  const auto inst = gen_random(120, 0.3, 0.3, Placement::Plane, 3);
  auto edges = allowed_edges(inst);
  std::mt19937_64 rng(4);
  std::shuffle(edges.begin(), edges.end(), rng);
  ASSERT_GT(edges.size(), 4096u);
  EdgeSet big(edges);
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end(), id_less);
  ASSERT_EQ(big.size(), sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    EXPECT_EQ(big.edges()[i].u, sorted[i].u);
    EXPECT_EQ(big.edges()[i].v, sorted[i].v);
  }
}

TEST(Crossing, Examples) {
  EXPECT_TRUE(segments_properly_cross({0, 0}, {1, 1}, {0, 1}, {1, 0}));
  EXPECT_FALSE(segments_properly_cross({0, 0}, {1, 0}, {2, 0}, {3, 0}));
  EXPECT_FALSE(segments_properly_cross({0, 0}, {2, 2}, {1, 1}, {3, 0}));
  EXPECT_FALSE(testing::rational_proper_cross({0, 0}, {2, 2}, {1, 1}, {3, 0}));
}

TEST(Crossing, SharedEndpointIsAPreconditionViolation) {
  const auto inst = parse_instance("P 0 0\nP 1 1\nP 0 1");
  EXPECT_THROW(segments_properly_cross(inst, edge_between(inst, 0, 1), edge_between(inst, 0, 2)),
               std::invalid_argument);
}

TEST(Crossing, AgreesWithRationalArithmetic) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int crossings = 0;
  for (int rep = 0; rep < 20000; ++rep) {
    Vec2 a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)}, d{u(rng), u(rng)};
    if (rep % 4 == 0) {
      // c on the line through a and b, up to rounding
      const double t = u(rng);
      c = a + t * (b - a);
    }
    const bool expect = testing::rational_proper_cross(a, b, c, d);
    crossings += expect;
    ASSERT_EQ(segments_properly_cross(a, b, c, d), expect) << rep;
  }
  EXPECT_GT(crossings, 1000);
}

TEST(Orientation, NearlyDegenerateTriplesMatchRationalSign) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 5000; ++rep) {
    const Vec2 a{u(rng), u(rng)};
    const Vec2 b{u(rng), u(rng)};
    const double t = u(rng) * 3.0 - 1.0;
    const Vec2 c{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    ASSERT_EQ(orientation(a, b, c), testing::rational_orientation(a, b, c));
  }
  EXPECT_EQ(orientation({0.5, 0.5}, {12, 12}, {24, 24}), 0);
}

TEST(GeneralPosition, ReportsEqualDistances) {
  EXPECT_EQ(parse_instance("P 0 0\nP 1 0\nP 5 3").general_position_violations(), 0u);
  EXPECT_GT(parse_instance("P 0 0\nP 1 0\nP 2 0").general_position_violations(), 0u);
}

TEST(EdgeList, ParsesAndRejectsUnknownIds) {
  const auto inst = e1();
  std::istringstream good("0 1\n# comment\n0 2\n1 3 # trailing\n");
  const auto edges = parse_edge_list(good, inst);
  EXPECT_EQ(edges.size(), 3u);
  EXPECT_EQ(format_edge_list(edges), "0 1\n0 2\n1 3\n");
  std::istringstream bad("0 7\n");
  EXPECT_THROW(parse_edge_list(bad, inst), ParseError);
  std::istringstream loop("2 2\n");
  EXPECT_THROW(parse_edge_list(loop, inst), ParseError);
}

}  // namespace
}  // namespace rbp
