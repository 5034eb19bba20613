#pragma once

// Random surgery driver: applies randomly chosen surgeries to random relative
// embeddings and audits every intermediate embedding with verify_embedding
// and the reference tracer.

#include <cmath>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "naive.hpp"
#include "relemb/certificate.hpp"
#include "relemb/errors.hpp"
#include "relemb/generators.hpp"
#include "relemb/reducer.hpp"
#include "relemb/surgery.hpp"

namespace fuzz {

using namespace relemb;

struct Stats {
  int applications = 0;
  int merge_three = 0;
  int split_swap = 0;
  int merge_interlaced = 0;
  int blow_up = 0;
  int embeddings_checked = 0;
  std::vector<std::string> violations;
};

// Audits one embedding: verify_embedding, profaces against the reference
// tracer, per-arc coverage, parity and even Euler genus recomputed by hand.
inline void audit(const Embedding& e, const CircuitDecomposition& c, Stats& stats, const std::string& where) {
  ++stats.embeddings_checked;
  auto fail = [&](const std::string& what) { stats.violations.push_back(where + ": " + what); };
  VerificationReport r = verify_embedding(e, c);
  if (!r.ok()) fail(r.summary());
  const Digraph& d = e.digraph();
  naive::Faces f = naive::trace(e);
  if (f.pro != naive::canonical(c.circuits())) fail("profaces differ from the decomposition");
  std::vector<int> pro_hits(d.num_arcs(), 0), anti_hits(d.num_arcs(), 0);
  for (const auto& w : f.pro)
    for (ArcId a : w) ++pro_hits[a];
  for (const auto& w : f.anti)
    for (ArcId a : w) ++anti_hits[a];
  for (ArcId a = 0; a < d.num_arcs(); ++a)
    if (pro_hits[a] != 1 || anti_hits[a] != 1) fail("arc " + std::to_string(a) + " not covered once per class");
  if (static_cast<int>(f.anti.size()) != e.num_antifaces()) fail("antiface count differs from reference");
  const int faces = static_cast<int>(f.pro.size() + f.anti.size());
  if ((2 - d.num_vertices() + d.num_arcs() - faces) % 2 != 0) fail("odd Euler genus");
  if ((d.num_vertices() + d.num_arcs() + c.size() + static_cast<int>(f.anti.size())) % 2 != 0)
    fail("parity law violated");
}

inline std::shared_ptr<const Digraph> random_instance(std::mt19937_64& rng) {
  const std::uint64_t seed = rng();
  switch (rng() % 4) {
    case 0: return std::make_shared<const Digraph>(gen_rotational_tournament(5 + 2 * static_cast<int>(rng() % 5)));
    case 1: return std::make_shared<const Digraph>(gen_random_dense_eulerian(12 + static_cast<int>(rng() % 9), 1, seed));
    case 2: return std::make_shared<const Digraph>(gen_kn_minus_pm(4 + 2 * static_cast<int>(rng() % 5)));
    default: return std::make_shared<const Digraph>(gen_sts(rng() % 2 ? 7 : 9).digraph);
  }
}

// One random surgery on e, or nullopt when the drawn kind does not apply.
inline std::optional<Embedding> random_surgery(const Embedding& e, std::mt19937_64& rng, Stats& stats,
                                               int& expected_delta) {
  const Digraph& d = e.digraph();
  const int n = d.num_vertices();
  const int faces = e.num_antifaces();
  auto pick = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };

  switch (rng() % 4) {
    case 0: {  // merge three antifaces at a vertex
      std::vector<VertexId> rich;
      for (VertexId v = 0; v < n; ++v)
        if (e.antifaces_at(v).size() >= 3) rich.push_back(v);
      if (rich.empty()) return std::nullopt;
      VertexId v = rich[pick(static_cast<int>(rich.size()))];
      std::vector<FaceIndex> at = e.antifaces_at(v);
      std::shuffle(at.begin(), at.end(), rng);
      expected_delta = -2;
      ++stats.merge_three;
      return merge_three_at_vertex(e, v, at[0], at[1], at[2]).embedding;
    }
    case 1: {  // split an antiface at a repeated vertex and swap with another
      if (faces < 2) return std::nullopt;
      FaceIndex a = pick(faces);
      const auto& arcs = e.antifaces()[a].arcs();
      VertexId v = d.tail(arcs[pick(static_cast<int>(arcs.size()))]);
      std::vector<int> at;
      for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
        if (d.tail(arcs[i]) == v) at.push_back(i);
      std::vector<FaceIndex> others;
      for (FaceIndex b : e.antifaces_at(v))
        if (b != a) others.push_back(b);
      if (at.size() < 2 || others.empty()) return std::nullopt;
      std::shuffle(at.begin(), at.end(), rng);
      FaceSplit split{std::min(at[0], at[1]), std::max(at[0], at[1])};
      expected_delta = 0;
      ++stats.split_swap;
      return split_swap(e, v, a, split, others[pick(static_cast<int>(others.size()))]).embedding;
    }
    case 2: {  // interlaced merge
      if (faces < 3) return std::nullopt;
      FaceIndex a = pick(faces);
      std::vector<VertexId> vs = e.antiface_vertices(a);
      std::shuffle(vs.begin(), vs.end(), rng);
      for (VertexId x : vs)
        for (VertexId y : vs) {
          if (x == y || !find_interlacing(e, a, x, y)) continue;
          for (FaceIndex b : e.antifaces_at(x)) {
            if (b == a) continue;
            for (FaceIndex c : e.antifaces_at(y)) {
              if (c == a || c == b) continue;
              expected_delta = -2;
              ++stats.merge_interlaced;
              return merge_interlaced(e, a, b, c, x, y).embedding;
            }
          }
        }
      return std::nullopt;
    }
    default: {  // blow up on a locally irreducible state
      if (faces < 2 || !e.locally_irreducible()) return std::nullopt;
      FaceIndex a = pick(faces);
      if (e.antiface_vertices(a).size() < 5) return std::nullopt;
      for (VertexId x : e.antiface_vertices(a))
        for (FaceIndex b : e.antifaces_at(x)) {
          if (b == a) continue;
          try {
            BlowUpResult r = blow_up(e, a, b, x);
            expected_delta = 0;
            ++stats.blow_up;
            return r.embedding;
          } catch (const HypothesisError&) {
            return std::nullopt;
          }
        }
      return std::nullopt;
    }
  }
}

// Runs until at least `target` surgeries have been applied.
inline Stats run_surgeries(int target, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Stats stats;
  while (stats.applications < target) {
    auto d = random_instance(rng);
    CircuitDecomposition c = random_circuit_decomposition(*d, rng());
    Embedding e = embed_from_decomposition(d, c);
    audit(e, c, stats, "initial");
    // A few surgeries per instance keeps the mix of kinds balanced: fresh
    // embeddings have many antifaces to merge.
    int applied = 0;
    for (int attempt = 0; attempt < 200 && applied < 6 && stats.applications < target; ++attempt) {
      int delta = 0;
      std::optional<Embedding> next;
      try {
        next = random_surgery(e, rng, stats, delta);
      } catch (const std::exception& ex) {
        stats.violations.push_back(std::string("surgery threw: ") + ex.what());
        break;
      }
      if (!next) continue;
      ++stats.applications;
      ++applied;
      const std::string where = "surgery " + std::to_string(stats.applications);
      audit(*next, c, stats, where);
      if (next->num_antifaces() != e.num_antifaces() + delta)
        stats.violations.push_back(where + ": antiface count changed by " +
                                   std::to_string(next->num_antifaces() - e.num_antifaces()));
      e = *next;
    }
  }
  return stats;
}

// Reduces `count` random dense instances with n <= 20 in strict mode, with
// verification after every surgery, and audits the result.
inline Stats run_dense_instances(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Stats stats;
  for (int i = 0; i < count; ++i) {
    int n = 7 + static_cast<int>(rng() % 14);
    if (n % 2 == 0 && n < 12) ++n;  // even orders need k >= 1, hence n >= 12
    const int kmax = (n - 7) / 5;
    const int kmin = n % 2 == 0 ? 1 : 0;
    const int k = kmin + static_cast<int>(rng() % static_cast<std::uint64_t>(kmax - kmin + 1));
    auto d = std::make_shared<const Digraph>(gen_random_dense_eulerian(n, k, rng()));
    CircuitDecomposition c = random_circuit_decomposition(*d, rng());
    const std::string where = "dense instance " + std::to_string(i) + " (n=" + std::to_string(n) +
                              ", k=" + std::to_string(k) + ")";
    try {
      ReductionResult r = reduce_to_upper_embedding(d, c, {ReduceMode::strict, true});
      ++stats.applications;
      stats.embeddings_checked += static_cast<int>(r.trace.size());
      audit(r.embedding, c, stats, where);
      if (r.embedding.num_antifaces() > 2) stats.violations.push_back(where + ": more than two antifaces");
    } catch (const std::exception& ex) {
      stats.violations.push_back(where + ": " + ex.what());
    }
  }
  return stats;
}

// Random walk over the relative embeddings of dense digraphs by three-segment
// swaps of proface pairs, biased towards locally irreducible states with at
// least three antifaces. Every such state visited is reduced in strict mode.
struct WalkStats {
  int reductions = 0;
  std::map<std::string, int> case_labels;
  std::vector<std::string> violations;
};

inline WalkStats run_irreducible_walk(int instances, int steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  WalkStats stats;
  auto excess = [](const Embedding& e) {
    int b = 0;
    for (VertexId v = 0; v < e.digraph().num_vertices(); ++v)
      b += std::max(0, static_cast<int>(e.antifaces_at(v).size()) - 2);
    return b;
  };
  auto score = [&](const Embedding& e) { return -3.0 * excess(e) + std::min(e.num_antifaces(), 6); };
  for (int inst = 0; inst < instances; ++inst) {
    std::shared_ptr<const Digraph> d;
    switch (inst % 3) {
      case 0: d = std::make_shared<const Digraph>(gen_rotational_tournament(7 + 2 * static_cast<int>(rng() % 6))); break;
      case 1: d = std::make_shared<const Digraph>(gen_kn_minus_pm(12 + 2 * static_cast<int>(rng() % 5))); break;
      default: {
        const int n = 12 + static_cast<int>(rng() % 10);
        const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>((n - 7) / 5));
        d = std::make_shared<const Digraph>(gen_random_dense_eulerian(n, k, rng()));
      }
    }
    CircuitDecomposition c = random_circuit_decomposition(*d, rng());
    Embedding e = embed_from_decomposition(d, c);
    for (int it = 0; it < steps; ++it) {
      const VertexId v = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(d->num_vertices()));
      auto rot = e.rotation(v);
      const int deg = static_cast<int>(rot.size() / 2);
      if (deg < 3) continue;
      std::vector<int> idx(deg);
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      std::sort(idx.begin(), idx.begin() + 3);
      RotationSystem rs = e.rotation_system();
      rs.rotations[v] = three_segment_swap(rot, rot[2 * idx[0]], rot[2 * idx[1]], rot[2 * idx[2]]);
      Embedding f(d, rs);
      const double delta = score(f) - score(e);
      if (delta >= 0 || std::uniform_real_distribution<double>(0, 1)(rng) < std::exp(delta)) e = f;
      if (excess(e) != 0 || e.num_antifaces() < 3) continue;
      const std::string where = "walk instance " + std::to_string(inst) + " step " + std::to_string(it);
      try {
        ReductionResult r = reduce_embedding(e, c, {ReduceMode::strict, true});
        ++stats.reductions;
        for (const TraceStep& s : r.trace.steps()) ++stats.case_labels[s.case_label];
        const int parity = (d->num_vertices() + d->num_arcs() + c.size()) % 2;
        if (r.embedding.num_antifaces() != (parity ? 1 : 2))
          stats.violations.push_back(where + ": ended with " + std::to_string(r.embedding.num_antifaces()) +
                                     " antifaces");
        if (!verify_embedding(r.embedding, c).ok()) stats.violations.push_back(where + ": final check failed");
      } catch (const std::exception& ex) {
        stats.violations.push_back(where + ": " + ex.what());
      }
    }
  }
  return stats;
}

}  // namespace fuzz
