#include <gtest/gtest.h>

#include <random>

#include "naive.hpp"
#include "relemb/degeneracy.hpp"
#include "relemb/errors.hpp"

using namespace relemb;

namespace {

SimpleGraph complete_bipartite(int a, int b) {
  SimpleGraph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

}  // namespace

TEST(Degeneracy, K33KeepsEverything) {
  auto s = extract_dense_subgraph(complete_bipartite(3, 3), 2);
  EXPECT_EQ(s.size(), 6u);
}

TEST(Degeneracy, SharpnessGraphIsRejected) {
  for (int n = 4; n < 12; ++n)
    EXPECT_THROW(extract_dense_subgraph(complete_bipartite(2, n - 2), 2), HypothesisError) << n;
}

TEST(Degeneracy, RejectsNonBipartite) {
  SimpleGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  EXPECT_FALSE(is_bipartite(g));
  EXPECT_THROW(extract_dense_subgraph(g, 0), InvalidInput);
}

TEST(Degeneracy, RandomBipartiteGraphs) {
  std::mt19937_64 rng(7);
  int accepted = 0;
  while (accepted < 300) {
    const int a = std::uniform_int_distribution<int>(2, 12)(rng);
    const int b = std::uniform_int_distribution<int>(2, 12)(rng);
    const int d = std::uniform_int_distribution<int>(1, 4)(rng);
    const double density = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
    SimpleGraph g(a + b);
    std::bernoulli_distribution coin(density);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        if (coin(rng)) g.add_edge(i, a + j);
    const int n = a + b;
    if (n < 2 * d || g.num_edges() <= d * (n - d)) continue;
    ++accepted;
    auto s = extract_dense_subgraph(g, d);
    ASSERT_FALSE(s.empty());
    EXPECT_GE(naive::induced_min_degree(g, s), d + 1);
  }
}
