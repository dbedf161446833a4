#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle.h"
#include "pds/exact.h"

using namespace pds;

using Arcs = std::vector<std::pair<Vertex, Vertex>>;

TEST(Separation, Examples) {
  EXPECT_TRUE(separate_subtours({0, Arcs{{0, 1}, {1, 2}, {2, 0}}}).empty());
  const auto h = separate_subtours({0, Arcs{{0, 1}, {1, 0}, {2, 3}, {3, 2}}});
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0], (std::vector<Vertex>{2, 3}));
  EXPECT_TRUE(separate_subtours({0, Arcs{}}).empty());
  // union-find agrees on the example
  EXPECT_EQ(oracle::components_without_depot({{0, 1}, {1, 0}, {2, 3}, {3, 2}}), h);
}

TEST(Separation, MalformedInput) {
  EXPECT_THROW(separate_subtours({0, Arcs{{0, 1}, {0, 2}, {1, 0}, {2, 0}}}), InputError);
  EXPECT_THROW(separate_subtours({0, Arcs{{0, 1}, {1, 2}}}), InputError);
  EXPECT_THROW(separate_subtours({0, Arcs{{0, 1}, {0, 1}, {1, 0}}}), InputError);
  EXPECT_THROW(separate_subtours({0, Arcs{{3, 3}}}), InputError);
}

TEST(Separation, TourArcsHaveNoSubtours) {
  EXPECT_TRUE(tour_arcs({}).arcs.empty());
  EXPECT_EQ(tour_arcs({4, 2}).arcs, (Arcs{{0, 4}, {4, 2}, {2, 0}}));
  std::mt19937_64 rng(5);
  for (int c = 0; c < 200; ++c) {
    std::vector<Vertex> t;
    for (int j = 1; j <= 1 + static_cast<int>(rng() % 12); ++j) t.push_back(j);
    std::shuffle(t.begin(), t.end(), rng);
    EXPECT_TRUE(separate_subtours(tour_arcs(t)).empty());
  }
}

// Random permutation cycles over a random vertex set; each cycle may or may
// not include the depot.
TEST(Separation, MatchesUnionFind) {
  std::mt19937_64 rng(31);
  for (int c = 0; c < 500; ++c) {
    std::vector<Vertex> vs;
    for (int v = 0; v <= 12; ++v)
      if (rng() % 3 != 0) vs.push_back(v);
    std::shuffle(vs.begin(), vs.end(), rng);
    Arcs arcs;
    std::size_t i = 0;
    while (i < vs.size()) {
      const std::size_t len = std::min<std::size_t>(vs.size() - i, 2 + rng() % 4);
      if (len < 2) break;
      for (std::size_t a = 0; a < len; ++a) arcs.emplace_back(vs[i + a], vs[i + (a + 1) % len]);
      i += len;
    }
    std::shuffle(arcs.begin(), arcs.end(), rng);
    const auto got = separate_subtours({0, arcs});
    ASSERT_EQ(got, oracle::components_without_depot(arcs));
    for (const auto& h : got) ASSERT_EQ(std::count(h.begin(), h.end(), 0), 0);
  }
}
