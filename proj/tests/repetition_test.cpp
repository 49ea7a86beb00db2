#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rep3/repetition.hpp"

namespace rep3 {
namespace {

TEST(RepTest, Examples) {
  EXPECT_EQ(rep(testing::cycle(5)), 5);
  EXPECT_EQ(rep(testing::path(4)), 2);
  EXPECT_EQ(rep(testing::star(3)), 3);
  EXPECT_EQ(rep(Graph::empty(1)), 1);
}

TEST(ProfileTest, FiveVertexGraph) {
  const DegreeProfile p = profile(testing::antiregular5());
  EXPECT_EQ(p.rep, 2);
  EXPECT_EQ(p.histogram, (std::map<int, int>{{1, 1}, {2, 2}, {3, 1}, {4, 1}}));
  EXPECT_EQ(p.s_set, (std::vector<int>{2}));
  EXPECT_TRUE(p.t_set.empty());
}

TEST(ProfileTest, FourCycle) {
  const DegreeProfile p = profile(testing::cycle(4));
  EXPECT_EQ(p.rep, 4);
  EXPECT_TRUE(p.s_set.empty());
  EXPECT_EQ(p.t_set, (std::vector<int>{1, 3}));
}

TEST(ProfileTest, Triangle) {
  const DegreeProfile p = profile(testing::complete(3));
  EXPECT_EQ(p.rep, 3);
  EXPECT_TRUE(p.s_set.empty());
  EXPECT_EQ(p.t_set, (std::vector<int>{1}));
}

TEST(ProfileTest, DegreeZeroIsOutsideTheClassRange) {
  const DegreeProfile p = profile(Graph::from_edges(4, {{0, 1}}));
  EXPECT_EQ(p.histogram.at(0), 2);
  EXPECT_EQ(p.s_set, (std::vector<int>{1}));
  EXPECT_EQ(p.t_set, (std::vector<int>{2, 3}));
}

TEST(HasThreeEqualTest, Examples) {
  EXPECT_EQ(has_three_equal(testing::cycle(5)), (Triple{0, 1, 2}));
  EXPECT_FALSE(has_three_equal(testing::path(4)).has_value());
  EXPECT_EQ(has_three_equal(testing::star(3)), (Triple{1, 2, 3}));
}

TEST(HasThreeEqualTest, SmallestDegreeWins) {
  // Degrees: 0..2 form a triangle (2), 3..5 isolated (0).
  const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(has_three_equal(g), (Triple{3, 4, 5}));
}

TEST(RepetitionProperties, RandomGraphs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const Graph g = testing::random_graph(n, (rng() % 100) / 100.0, rng);
    const DegreeProfile p = profile(g);
    int total = 0;
    for (const auto& [d, m] : p.histogram) total += m;
    EXPECT_EQ(total, n);
    EXPECT_EQ(p.rep, rep(g));
    EXPECT_GE(p.rep, 1);
    EXPECT_EQ(rep(g), rep(complement(g)));
    EXPECT_EQ(has_three_equal(g).has_value(), rep(g) >= 3);
    for (int d : p.s_set) {
      EXPECT_TRUE(std::find(p.t_set.begin(), p.t_set.end(), d) == p.t_set.end());
      EXPECT_GE(d, 1);
      EXPECT_LE(d, n - 1);
    }
    if (auto t = has_three_equal(g)) {
      EXPECT_EQ(g.degree((*t)[0]), g.degree((*t)[1]));
      EXPECT_EQ(g.degree((*t)[1]), g.degree((*t)[2]));
    }
  }
}

TEST(RepetitionProperties, CountingIdentityOnLabeledGraphs) {
  int checked = 0;
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      const Graph g = testing::labeled_graph(n, mask);
      const DegreeProfile p = profile(g);
      if (p.rep > 2 || p.histogram.contains(0)) continue;
      ++checked;
      EXPECT_EQ(p.t_set.size() + 1, p.s_set.size());
    }
  }
  EXPECT_GT(checked, 0);
}

}  // namespace
}  // namespace rep3
