#include <gtest/gtest.h>

#include <memory>
#include <set>

#include "naive.hpp"
#include "relemb/errors.hpp"
#include "relemb/generators.hpp"
#include "relemb/reducer.hpp"

using namespace relemb;

namespace {

CircuitDecomposition euler(const Digraph& d) { return CircuitDecomposition(d, {euler_circuit(d)}); }

void expect_upper(const ReductionResult& r, const CircuitDecomposition& c) {
  const Digraph& d = r.embedding.digraph();
  VerificationReport report = verify_embedding(r.embedding, c);
  EXPECT_TRUE(report.ok()) << report.summary();
  const int parity = (d.num_vertices() + d.num_arcs() + c.size()) % 2;
  EXPECT_EQ(r.embedding.num_antifaces(), parity ? 1 : 2);
  EXPECT_EQ(naive::trace(r.embedding).pro, naive::canonical(c.circuits()));
}

}  // namespace

TEST(Reducer, TournamentSevenGivesEulerAntiface) {
  Digraph d = gen_rotational_tournament(7);
  CircuitDecomposition c = euler(d);
  ReductionResult r = reduce_to_upper_embedding(d, c);
  ASSERT_EQ(r.embedding.num_antifaces(), 1);
  EXPECT_TRUE(naive::is_euler_circuit(d, r.embedding.antifaces()[0].arcs()));
  EXPECT_EQ(r.outcome, ReduceOutcome::reduced);
  expect_upper(r, c);
}

TEST(Reducer, SteinerSevenGivesEulerAntiface) {
  SteinerSystem s = gen_sts(7);
  ReductionResult r = reduce_to_upper_embedding(s.digraph, s.circuits);
  ASSERT_EQ(r.embedding.num_antifaces(), 1);
  EXPECT_EQ(r.embedding.num_profaces(), 7);
  EXPECT_TRUE(naive::is_euler_circuit(s.digraph, r.embedding.antifaces()[0].arcs()));
}

TEST(Reducer, KnMinusPmTwoCircuits) {
  Digraph d = gen_kn_minus_pm(12);
  CircuitDecomposition c(d, split_at_first_repeat(d, euler_circuit(d)));
  ASSERT_EQ(c.size(), 2);
  ReductionResult r = reduce_to_upper_embedding(d, c);
  EXPECT_EQ(r.embedding.num_antifaces(), 2);
  EXPECT_EQ(euler_genus(r.embedding), 23);
  expect_upper(r, c);
}

TEST(Reducer, RandomDecompositionsOfDenseDigraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto d = std::make_shared<const Digraph>(seed % 3 == 0 ? gen_rotational_tournament(7 + 2 * (seed % 4))
                                                           : gen_random_dense_eulerian(12 + seed % 6, 1, seed));
    CircuitDecomposition c = random_circuit_decomposition(*d, seed + 100);
    ReductionResult r = reduce_to_upper_embedding(d, c, {ReduceMode::strict, true});
    expect_upper(r, c);
  }
}

TEST(Reducer, TraceStepsAreConsistent) {
  auto d = std::make_shared<const Digraph>(gen_rotational_tournament(11));
  CircuitDecomposition c = random_circuit_decomposition(*d, 9);
  ReductionResult r = reduce_to_upper_embedding(d, c);
  ASSERT_FALSE(r.trace.empty());
  int count = embed_from_decomposition(d, c).num_antifaces();
  for (const TraceStep& s : r.trace.steps()) {
    EXPECT_EQ(s.antifaces_before, count);
    if (s.op == "merge_three" || s.op == "merge_interlaced") EXPECT_EQ(s.antifaces_after, count - 2);
    if (s.op == "split_swap" || s.op == "blow_up") EXPECT_EQ(s.antifaces_after, count);
    EXPECT_FALSE(s.case_label.empty());
    count = s.antifaces_after;
  }
  EXPECT_EQ(count, r.embedding.num_antifaces());
  std::string lines = r.trace.to_json_lines();
  EXPECT_EQ(static_cast<std::size_t>(std::count(lines.begin(), lines.end(), '\n')), r.trace.size());
}

TEST(Reducer, StrictRejectsSparseAndSmall) {
  std::vector<Arc> arcs;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if ((j / 3 - i / 3 + 3) % 3 == 1) arcs.push_back({i, j});
  Digraph k333(9, arcs);
  EXPECT_THROW(reduce_to_upper_embedding(k333, euler(k333)), HypothesisError);
  Digraph t5 = gen_rotational_tournament(5);
  EXPECT_THROW(reduce_to_upper_embedding(t5, euler(t5)), HypothesisError);
  Digraph unbalanced(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}});
  EXPECT_THROW(reduce_to_upper_embedding(unbalanced, greedy_circuit_decomposition(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}))),
               std::exception);
}

TEST(Reducer, BestEffortReportsOutcome) {
  std::vector<Arc> arcs;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j)
      if ((j / 3 - i / 3 + 3) % 3 == 1) arcs.push_back({i, j});
  Digraph k333(9, arcs);
  ReductionResult r = reduce_to_upper_embedding(k333, euler(k333), {ReduceMode::best_effort, true});
  EXPECT_TRUE(verify_embedding(r.embedding, r.circuits).ok());
  if (r.outcome == ReduceOutcome::reduced) EXPECT_LE(r.embedding.num_antifaces(), 2);
  else EXPECT_FALSE(r.diagnostic.empty());
}

TEST(Reducer, ReduceEmbeddingRejectsForeignStart) {
  auto d = std::make_shared<const Digraph>(gen_rotational_tournament(7));
  CircuitDecomposition c1 = random_circuit_decomposition(*d, 1);
  CircuitDecomposition c2 = euler(*d);
  EXPECT_THROW(reduce_embedding(embed_from_decomposition(d, c1), c2), InvalidInput);
}

TEST(SmallOrder, Examples) {
  Digraph loop(1, {{0, 0}});
  EXPECT_EQ(small_order_embedding(loop, CircuitDecomposition(loop, {{0}})).embedding.num_antifaces(), 1);
  Digraph digon(2, {{0, 1}, {1, 0}});
  CircuitDecomposition dc(digon, {{0, 1}});
  EXPECT_TRUE(has_two_edge_cut(digon));
  EXPECT_EQ(two_edge_cut_formula(digon, dc), 1);
  EXPECT_EQ(small_order_embedding(digon, dc).embedding.num_antifaces(), 1);
  Digraph withloop(2, {{0, 1}, {1, 0}, {0, 0}});
  CircuitDecomposition wc(withloop, {{2}, {0, 1}});
  EXPECT_EQ(two_edge_cut_formula(withloop, wc), 1);
  EXPECT_EQ(small_order_embedding(withloop, wc).embedding.num_antifaces(), 1);
  EXPECT_THROW(small_order_embedding(gen_rotational_tournament(3), euler(gen_rotational_tournament(3))),
               InvalidInput);
}

TEST(SmallOrder, TwoEdgeCutFormulaTerms) {
  // Two loops at v0, one at v1; circuits: loop, loop + cut, loop on v1.
  Digraph d(2, {{0, 1}, {1, 0}, {0, 0}, {0, 0}, {1, 1}});
  CircuitDecomposition c(d, {{2}, {0, 4, 1, 3}});
  // alpha1 = 2, gamma1 = 1, alpha2 = 1, gamma2 = 0.
  EXPECT_EQ(two_edge_cut_formula(d, c), 1 + 1 + 1);
  ReductionResult r = small_order_embedding(d, c);
  EXPECT_EQ(r.embedding.num_antifaces(), 3);
  EXPECT_EQ(naive::min_antifaces(d, c.circuits()), 3);
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace.steps()[0].op, "two_edge_cut_splice");
}

TEST(Partial, EmptyPartialOnTournament) {
  Digraph d = gen_rotational_tournament(7);
  ReductionResult r = relative_upper_from_partial(d, {});
  EXPECT_EQ(r.embedding.num_profaces(), 1);
  EXPECT_EQ(r.embedding.num_antifaces(), 1);
}

TEST(Partial, FullPartialMatchesDirectRun) {
  SteinerSystem s = gen_sts(7);
  ReductionResult a = relative_upper_from_partial(s.digraph, s.circuits.circuits());
  ReductionResult b = reduce_to_upper_embedding(s.digraph, s.circuits);
  EXPECT_EQ(a.embedding.rotation_system(), b.embedding.rotation_system());
}

TEST(Partial, ThreeSteinerTriples) {
  SteinerSystem s = gen_sts(7);
  std::vector<DirectedCircuit> partial(s.circuits.circuits().begin(), s.circuits.circuits().begin() + 3);
  ReductionResult r = relative_upper_from_partial(s.digraph, partial);
  std::vector<bool> mask(s.digraph.num_arcs(), true);
  for (const auto& c : partial)
    for (ArcId a : c) mask[a] = false;
  const int alpha = static_cast<int>(euler_circuits(s.digraph, mask).size());
  EXPECT_EQ(r.embedding.num_profaces(), 3 + alpha);
  EXPECT_LE(r.embedding.num_antifaces(), 2);
}

TEST(Partial, RejectsOverlap) {
  SteinerSystem s = gen_sts(7);
  auto first = s.circuits.circuits().front();
  EXPECT_THROW(relative_upper_from_partial(s.digraph, {first, first}), InvalidInput);
}

TEST(Undirected, K7SteinerTriples) {
  SteinerSystem s = gen_sts(7);
  UndirectedGraph g{7, {}};
  std::vector<UndirectedCircuit> triples;
  for (const auto& t : s.triples) {
    UndirectedCircuit c;
    for (int i = 0; i < 3; ++i) {
      c.push_back(static_cast<int>(g.edges.size()));
      g.edges.push_back({t[i], t[(i + 1) % 3]});
    }
    triples.push_back(c);
  }
  UndirectedReduction u = undirected_upper_embedding(g, triples);
  EXPECT_EQ(u.result.embedding.num_profaces(), 7);
  EXPECT_EQ(u.result.embedding.num_antifaces(), 1);
}

TEST(Undirected, K7EulerCircuitIsBiEulerian) {
  UndirectedGraph g{7, {}};
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) g.edges.push_back({i, j});
  UndirectedTour tour = undirected_euler_tour(g);
  UndirectedReduction u = undirected_upper_embedding(g, {tour.edges});
  ASSERT_EQ(u.result.embedding.num_antifaces(), 1);
  EXPECT_TRUE(naive::is_euler_circuit(u.orientation.digraph, u.result.embedding.antifaces()[0].arcs()));
}

TEST(Undirected, CycleInBestEffortIsPlanar) {
  UndirectedGraph g{7, {}};
  for (int i = 0; i < 7; ++i) g.edges.push_back({i, (i + 1) % 7});
  UndirectedReduction u = undirected_upper_embedding(g, {{0, 1, 2, 3, 4, 5, 6}}, {ReduceMode::best_effort, true});
  EXPECT_EQ(u.result.embedding.num_profaces(), 1);
  EXPECT_EQ(u.result.embedding.num_antifaces(), 1);
  EXPECT_EQ(euler_genus(u.result.embedding), 0);
}
