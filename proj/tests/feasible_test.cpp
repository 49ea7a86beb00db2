#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rep3/feasible.hpp"

namespace rep3 {
namespace {

using testing::antiregular5;
using testing::complete;
using testing::cycle;
using testing::path;
using testing::paw;
using testing::star;

TEST(ClassifyTripleTest, TriangleIsAClique) {
  const auto tc = classify_triple(complete(3), Triple{0, 1, 2});
  EXPECT_EQ(tc.condition, Condition::C2);
  EXPECT_TRUE(tc.balanceable);
  EXPECT_FALSE(tc.accessible);
  EXPECT_EQ(tc.p, 0);
  EXPECT_EQ(tc.q, 0);
}

TEST(ClassifyTripleTest, PathPrefixIsInfeasible) {
  const auto tc = classify_triple(path(4), Triple{0, 1, 2});
  EXPECT_FALSE(tc.condition.has_value());
  EXPECT_FALSE(tc.labeling.has_value());
  EXPECT_FALSE(tc.feasible());
  EXPECT_EQ(tc.p, 0);
  EXPECT_EQ(tc.q, 1);
}

TEST(ClassifyTripleTest, FiveCycleSingleEdgeUsesTheEdgeAsXY) {
  const auto tc = classify_triple(cycle(5), Triple{0, 2, 4});
  EXPECT_EQ(tc.condition, Condition::C3);
  EXPECT_EQ(tc.labeling, (Triple{0, 4, 2}));
  EXPECT_TRUE(tc.balanceable);
}

TEST(ClassifyTripleTest, PawTriangle) {
  const auto tc = classify_triple(paw(), Triple{0, 1, 2});
  EXPECT_EQ(tc.condition, Condition::C2);
  EXPECT_EQ(tc.p, 1);
  EXPECT_EQ(tc.q, 0);
}

TEST(ClassifyTripleTest, AccessibleConditions) {
  // C5: x=0 -- z=2 only, y=1 has a neighbour (3) that z lacks.
  // Degrees: 0:1, 1:1, 2:2 (via 4), 3:1, 4:1.
  const Graph c5 = Graph::from_edges(5, {{0, 2}, {1, 3}, {2, 4}});
  EXPECT_EQ(classify_triple(c5, Triple{0, 1, 2}).condition, Condition::C5);
  EXPECT_TRUE(classify_triple(c5, Triple{0, 1, 2}).accessible);

  // C6: path x=0 - y=1 - z=2 with x having an extra neighbour 3.
  const Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {2, 4}});
  const auto t6 = classify_triple(c6, Triple{0, 1, 2});
  EXPECT_EQ(t6.condition, Condition::C6);
  EXPECT_EQ(t6.labeling, (Triple{0, 1, 2}));

  // Without that neighbour C6 fails.
  const Graph no6 = Graph::from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 3}});
  EXPECT_FALSE(classify_triple(no6, Triple{0, 1, 2}).feasible());
}

TEST(ClassifyTripleTest, RejectsBadTriples) {
  const auto code_of = [](std::vector<int> t) {
    try {
      classify_triple(complete(4), t);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::TheoremViolation;
  };
  EXPECT_EQ(code_of({0, 1}), ErrorCode::NotATriple);
  EXPECT_EQ(code_of({0, 1, 1}), ErrorCode::NotATriple);
  EXPECT_EQ(code_of({0, 1, 4}), ErrorCode::NotATriple);
  EXPECT_EQ(code_of({0, 1, 2, 3}), ErrorCode::NotATriple);
}

TEST(BudgetTest, Formula) {
  TripleClassification tc;
  tc.condition = Condition::C1;
  tc.balanceable = true;
  EXPECT_EQ(budget(tc), 0);
  tc.p = 1;
  EXPECT_EQ(budget(tc), 2);
  tc.p = 2;
  tc.q = 1;
  EXPECT_EQ(budget(tc), 5);
}

TEST(BudgetTest, InfeasibleTripleHasNoBudget) {
  try {
    budget(classify_triple(path(4), Triple{0, 1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFeasible);
  }
}

TEST(EqualizeTripleTest, Examples) {
  EXPECT_EQ(equalize_triple(complete(3), Triple{0, 1, 2}, 0), VertexSet{});
  EXPECT_EQ(equalize_triple(paw(), Triple{0, 1, 2}, 2), VertexSet{3});
  const Graph g = antiregular5();
  const auto tc = classify_triple(g, Triple{4, 2, 3});
  EXPECT_EQ(tc.condition, Condition::C1);
  EXPECT_EQ(tc.p, 0);
  EXPECT_EQ(tc.q, 1);
  EXPECT_EQ(budget(tc), 2);
  EXPECT_EQ(equalize_triple(g, Triple{4, 2, 3}, 2), VertexSet{1});
}

TEST(EqualizeTripleTest, NoneWhenBudgetTooSmall) {
  EXPECT_FALSE(equalize_triple(paw(), Triple{0, 1, 2}, 0).has_value());
  EXPECT_FALSE(equalize_triple(path(4), Triple{0, 1, 2}, 1).has_value());
}

TEST(EqualizeTripleTest, MinimalAgainstBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const Graph g = testing::random_graph(n, 0.5, rng);
    const Triple t{0, 1, 2};
    const auto got = equalize_triple(g, t, n - 3);
    int best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (mask & 7U) continue;
      const VertexSet del(mask);
      const int d0 = (g.neighbors(0) - del).size();
      if ((g.neighbors(1) - del).size() == d0 && (g.neighbors(2) - del).size() == d0 &&
          (best < 0 || del.size() < best)) {
        best = del.size();
      }
    }
    if (best < 0) {
      EXPECT_FALSE(got.has_value());
    } else {
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(got->size(), best);
    }
  }
}

TEST(FindFeasibleInFiveTest, Examples) {
  const auto c5 = find_feasible_in_five(cycle(5), std::vector<int>{0, 1, 2, 3, 4});
  EXPECT_EQ(c5.triple, (Triple{0, 1, 2}));
  EXPECT_EQ(c5.classification.condition, Condition::C4);
  EXPECT_EQ(c5.classification.labeling, (Triple{1, 0, 2}));

  const auto k14 = find_feasible_in_five(star(4), std::vector<int>{0, 1, 2, 3, 4});
  EXPECT_EQ(k14.triple, (Triple{1, 2, 3}));
  EXPECT_EQ(k14.classification.condition, Condition::C1);

  const auto a5 = find_feasible_in_five(antiregular5(), std::vector<int>{0, 1, 2, 3, 4});
  EXPECT_EQ(a5.triple, (Triple{4, 2, 3}));
  EXPECT_EQ(a5.classification.condition, Condition::C1);
}

TEST(FindFeasibleInFiveTest, RejectsWrongSize) {
  try {
    find_feasible_in_five(complete(5), std::vector<int>{0, 1, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidSubset);
  }
}

TEST(P4StructureTest, Examples) {
  const auto p4 = p4_structure(path(4), std::vector<int>{0, 1, 2, 3});
  EXPECT_EQ(p4.verdict, FourSetVerdict::InducedPathOK);
  const auto k4 = p4_structure(complete(4), std::vector<int>{0, 1, 2, 3});
  EXPECT_EQ(k4.verdict, FourSetVerdict::HasBalanceable);
  EXPECT_EQ(k4.balanceable, (Triple{0, 1, 2}));
  const auto c4 = p4_structure(cycle(4), std::vector<int>{0, 1, 2, 3});
  EXPECT_EQ(c4.verdict, FourSetVerdict::HasBalanceable);
  EXPECT_EQ(classify_triple(cycle(4), Triple{0, 1, 2}).condition, Condition::C4);
}

// Independent labeling enumeration agrees with the classifier on every
// triple of every labeled graph on 5 vertices.
TEST(ClassifyProperties, MatchesBruteForceLabelings) {
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    const Graph g = testing::labeled_graph(5, mask);
    for (int a = 0; a < 5; ++a) {
      for (int b = a + 1; b < 5; ++b) {
        for (int c = b + 1; c < 5; ++c) {
          const auto met = testing::brute_conditions(g, a, b, c);
          const auto tc = classify_triple(g, Triple{a, b, c});
          if (met.empty()) {
            EXPECT_FALSE(tc.condition.has_value());
          } else {
            ASSERT_TRUE(tc.condition.has_value());
            EXPECT_EQ(static_cast<int>(*tc.condition), *met.begin());
          }
          EXPECT_EQ(tc.balanceable, !met.empty() && *met.begin() <= 4);
          EXPECT_FALSE(tc.balanceable && tc.accessible);
          EXPECT_GE(tc.p, 0);
          EXPECT_GE(tc.q, 0);
          if (tc.labeling) {
            const auto& l = *tc.labeling;
            EXPECT_LE(g.degree(l[0]), g.degree(l[1]));
            EXPECT_LE(g.degree(l[1]), g.degree(l[2]));
          }
        }
      }
    }
  }
}

TEST(ClassifyProperties, InvariantUnderRelabeling) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = testing::random_graph(n, 0.5, rng);
    const auto perm = testing::random_permutation(n, rng);
    const Graph h = testing::relabel(g, perm);
    const Triple t{0, 1, 2};
    const auto a = classify_triple(g, t);
    const auto b = classify_triple(h, Triple{perm[0], perm[1], perm[2]});
    EXPECT_EQ(a.feasible(), b.feasible());
    EXPECT_EQ(a.balanceable, b.balanceable);
    EXPECT_EQ(a.p, b.p);
    EXPECT_EQ(a.q, b.q);
  }
}

}  // namespace
}  // namespace rep3
