#include <gtest/gtest.h>

#include <memory>

#include "naive.hpp"
#include "relemb/certificate.hpp"
#include "relemb/errors.hpp"
#include "relemb/generators.hpp"
#include "relemb/interlace.hpp"
#include "states.hpp"

using namespace relemb;

namespace {

void expect_valid(const Embedding& e, const InterlacingCertificate& cert) {
  EXPECT_EQ(certificate_problem(e, cert), "");
  const Digraph& d = e.digraph();
  EXPECT_TRUE(naive::interlaced(naive::tails(d, e.antifaces()[cert.face].arcs()), cert.x, cert.y));
  EXPECT_NE(cert.x_companion, cert.face);
  EXPECT_NE(cert.y_companion, cert.face);
  EXPECT_NE(cert.x_companion, cert.y_companion);
  EXPECT_TRUE(e.antiface_contains(cert.x_companion, cert.x));
  EXPECT_TRUE(e.antiface_contains(cert.y_companion, cert.y));
}

}  // namespace

TEST(Interlaced, ClosedWalkPatterns) {
  std::vector<VertexId> w{0, 1, 2, 0, 3, 1};
  EXPECT_TRUE(interlaced(w, 0, 1));
  EXPECT_TRUE(interlaced(w, 1, 0));
  EXPECT_FALSE(interlaced(w, 0, 2));
  EXPECT_FALSE(interlaced(w, 2, 3));
  EXPECT_FALSE(interlaced(w, 0, 0));
}

TEST(Interlaced, AgreesWithNaivePatternSearch) {
  std::vector<VertexId> w{3, 1, 4, 1, 5, 2, 6, 5, 3, 5, 8, 2, 4, 6};
  for (VertexId x = 0; x < 9; ++x)
    for (VertexId y = 0; y < 9; ++y)
      if (x != y) EXPECT_EQ(interlaced(w, x, y), naive::interlaced(w, x, y) || naive::interlaced(w, y, x));
}

TEST(FindVertexOnThree, ThreeLoopFixture) {
  auto d = std::make_shared<const Digraph>(1, std::vector<Arc>(3, Arc{0, 0}));
  Embedding e(d, {{{2, 1, 0, 5, 4, 3}}});
  auto w = find_vertex_on_three_antifaces(e);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->vertex, 0);
  EXPECT_EQ(w->a, 0);
  EXPECT_EQ(w->b, 1);
  EXPECT_EQ(w->c, 2);
}

TEST(FindVertexOnThree, NoneWithTwoAntifaces) {
  auto d = std::make_shared<const Digraph>(gen_kn_minus_pm(12));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Embedding e = make_locally_irreducible(embed_from_decomposition(d, random_circuit_decomposition(*d, seed)));
    EXPECT_FALSE(find_vertex_on_three_antifaces(e));
    EXPECT_TRUE(e.locally_irreducible());
  }
}

TEST(FindInterlacing, CertificatesValidate) {
  auto d = std::make_shared<const Digraph>(gen_rotational_tournament(9));
  int found = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Embedding e = embed_from_decomposition(d, random_circuit_decomposition(*d, seed));
    for (FaceIndex f = 0; f < e.num_antifaces(); ++f) {
      auto walk = naive::tails(*d, e.antifaces()[f].arcs());
      for (VertexId x = 0; x < 9; ++x)
        for (VertexId y = 0; y < 9; ++y) {
          if (x == y) continue;
          auto cert = find_interlacing(e, f, x, y);
          EXPECT_EQ(cert.has_value(), naive::interlaced(walk, x, y) || naive::interlaced(walk, y, x));
          if (cert) {
            EXPECT_EQ(certificate_problem(e, *cert), "");
            ++found;
          }
        }
    }
  }
  EXPECT_GT(found, 0);
}

TEST(CertificateProblem, RejectsTamperedPositions) {
  auto d = std::make_shared<const Digraph>(gen_rotational_tournament(9));
  Embedding e = embed_from_decomposition(d, CircuitDecomposition(*d, {euler_circuit(*d)}));
  for (VertexId x = 0; x < 9; ++x)
    for (VertexId y = 0; y < 9; ++y) {
      if (x == y) continue;
      auto cert = find_interlacing(e, 0, x, y);
      if (!cert) continue;
      InterlacingCertificate bad = *cert;
      std::swap(bad.positions[1], bad.positions[2]);
      EXPECT_NE(certificate_problem(e, bad), "");
      bad = *cert;
      bad.y = bad.x;
      EXPECT_NE(certificate_problem(e, bad), "");
      return;
    }
  FAIL() << "no interlaced pair on antiface 0";
}

TEST(ThreeNeighborSearch, RejectsThinSets) {
  auto d = std::make_shared<const Digraph>(gen_kn_minus_pm(12));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Embedding e = make_locally_irreducible(embed_from_decomposition(d, random_circuit_decomposition(*d, seed)));
    if (e.num_antifaces() < 2) continue;
    TypeTable types(e);
    for (FaceIndex a = 0; a < e.num_antifaces(); ++a) {
      auto a1 = types.also(a);
      if (a1.empty()) continue;
      // A single vertex has no neighbors of a different type inside S.
      EXPECT_THROW(three_neighbor_search(e, a, {a1.front()}), HypothesisError);
      return;
    }
  }
  FAIL() << "no embedding with a shared vertex";
}

TEST(DiamondSearch, RejectsRepeatedVertices) {
  auto d = std::make_shared<const Digraph>(gen_rotational_tournament(9));
  Embedding e = make_locally_irreducible(embed_from_decomposition(d, random_circuit_decomposition(*d, 3)));
  EXPECT_THROW(diamond_search(e, 0, 1, 1, 2, 3), HypothesisError);
}

TEST(Corollaries, CertificatesFromIrreducibleStatesValidate) {
  // Replay audit: every certificate the corollary checks return on locally
  // irreducible states of dense digraphs is a genuine interlacing.
  int three_neighbor = 0, diamond = 0, big_moderate = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 12 + static_cast<int>(seed % 5);
    auto d = std::make_shared<const Digraph>(seed % 2 ? gen_random_dense_eulerian(n, 1, seed)
                                                      : gen_rotational_tournament(2 * (n / 2) + 1));
    Embedding e = make_locally_irreducible(embed_from_decomposition(d, random_circuit_decomposition(*d, seed)));
    const int faces = e.num_antifaces();
    for (FaceIndex a = 0; a < faces; ++a) {
      if (auto cert = check_three_neighbor_corollary(e, a)) {
        expect_valid(e, *cert);
        ++three_neighbor;
      }
      for (FaceIndex b = 0; b < faces; ++b) {
        if (b == a) continue;
        if (auto cert = check_diamond_corollary(e, a, b)) {
          expect_valid(e, *cert);
          ++diamond;
        }
        for (FaceIndex c = b + 1; c < faces; ++c) {
          if (c == a) continue;
          if (auto cert = check_big_moderate(e, a, b, c)) {
            expect_valid(e, *cert);
            ++big_moderate;
          }
        }
      }
    }
  }
  EXPECT_GT(three_neighbor + diamond + big_moderate, 0);
  RecordProperty("three_neighbor", three_neighbor);
  RecordProperty("diamond", diamond);
  RecordProperty("big_moderate", big_moderate);
}

TEST(FaceEdge, MatchesArcsOfFace) {
  auto d = std::make_shared<const Digraph>(gen_rotational_tournament(7));
  Embedding e = embed_from_decomposition(d, CircuitDecomposition(*d, {euler_circuit(*d)}));
  for (ArcId a : e.antifaces()[0].arcs()) {
    EXPECT_TRUE(face_edge(e, 0, d->tail(a), d->head(a)));
    EXPECT_TRUE(face_edge(e, 0, d->head(a), d->tail(a)));
  }
}
