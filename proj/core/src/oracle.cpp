#include "relemb/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "relemb/errors.hpp"

namespace relemb {

std::int64_t relative_embedding_count(const Digraph& d) {
  constexpr std::int64_t cap = std::numeric_limits<std::int64_t>::max();
  std::int64_t total = 1;
  for (VertexId v = 0; v < d.num_vertices(); ++v)
    for (int f = 2; f < d.indegree(v); ++f) {
      if (total > cap / f) return cap;
      total *= f;
    }
  return total;
}

namespace {

// Odometer over per-vertex permutations of pair indices, position 0 fixed.
class Odometer {
 public:
  Odometer(const Digraph& d, const CircuitDecomposition& c, std::int64_t limit) {
    if (c.num_arcs() != d.num_arcs()) throw InvalidInput("decomposition does not match the digraph");
    const std::int64_t count = relative_embedding_count(d);
    if (count > limit)
      throw HypothesisError("state space of " + std::to_string(count) + " embeddings exceeds the limit of " +
                            std::to_string(limit));
    const int n = d.num_vertices();
    in_.resize(n);
    out_.resize(n);
    perm_.resize(n);
    for (VertexId v = 0; v < n; ++v) {
      for (HalfArcId h : d.in_halves(v)) {
        in_[v].push_back(h);
        out_[v].push_back(c.successor(h));
      }
      perm_[v].resize(in_[v].size());
      std::iota(perm_[v].begin(), perm_[v].end(), 0);
    }
  }

  bool advance() {
    for (auto& p : perm_)
      if (p.size() > 2 && std::next_permutation(p.begin() + 1, p.end())) return true;
    return false;
  }

  RotationSystem rotations() const {
    RotationSystem rs;
    rs.rotations.resize(perm_.size());
    for (std::size_t v = 0; v < perm_.size(); ++v)
      for (int i : perm_[v]) {
        rs.rotations[v].push_back(out_[v][i]);
        rs.rotations[v].push_back(in_[v][i]);
      }
    return rs;
  }

  // Antiface rule: after incoming h_i comes the out-half of the next pair.
  int count_antifaces(std::vector<ArcId>& next, std::vector<int>& stamp, int& epoch) const {
    for (std::size_t v = 0; v < perm_.size(); ++v) {
      const auto& p = perm_[v];
      for (std::size_t i = 0; i < p.size(); ++i)
        next[arc_of(in_[v][p[i]])] = arc_of(out_[v][p[(i + 1) % p.size()]]);
    }
    ++epoch;
    int cycles = 0;
    for (ArcId a = 0; a < static_cast<ArcId>(next.size()); ++a) {
      if (stamp[a] == epoch) continue;
      ++cycles;
      for (ArcId x = a; stamp[x] != epoch; x = next[x]) stamp[x] = epoch;
    }
    return cycles;
  }

 private:
  std::vector<std::vector<HalfArcId>> in_;
  std::vector<std::vector<HalfArcId>> out_;
  std::vector<std::vector<int>> perm_;
};

}  // namespace

void for_each_relative_embedding(const Digraph& d, const CircuitDecomposition& c, std::int64_t limit,
                                 const std::function<void(const RotationSystem&)>& visit) {
  Odometer odo(d, c, limit);
  do {
    visit(odo.rotations());
  } while (odo.advance());
}

OracleDistribution enumerate_relative_embeddings(const Digraph& d, const CircuitDecomposition& c,
                                                 std::int64_t limit) {
  Odometer odo(d, c, limit);
  std::vector<ArcId> next(d.num_arcs());
  std::vector<int> stamp(d.num_arcs(), 0);
  int epoch = 0;
  OracleDistribution dist;
  do {
    ++dist.counts[odo.count_antifaces(next, stamp, epoch)];
    ++dist.states;
  } while (odo.advance());
  dist.min = dist.counts.begin()->first;
  dist.max = dist.counts.rbegin()->first;
  return dist;
}

MaximalityCertificate certify_maximal(const Embedding& e, const CircuitDecomposition& c,
                                      std::int64_t limit) {
  OracleDistribution dist = enumerate_relative_embeddings(e.digraph(), c, limit);
  return {e.num_antifaces() == dist.min, e.num_antifaces(), dist.min};
}

}  // namespace relemb
