#pragma once

// Reference implementations used as oracles by the tests. They work directly
// from the definitions with plain loops and share no code with the library
// beyond the Digraph container and half-arc numbering.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "relemb/digraph.hpp"
#include "relemb/embedding.hpp"

namespace naive {

using relemb::ArcId;
using relemb::Digraph;
using relemb::HalfArcId;
using relemb::VertexId;

struct Faces {
  std::vector<std::vector<ArcId>> pro;
  std::vector<std::vector<ArcId>> anti;
};

inline std::vector<ArcId> rotate_min(std::vector<ArcId> c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return c;
}

// Proface rule: from arc a arriving on half-arc h, continue with the arc whose
// out-half sits immediately counter-clockwise of h. Antiface rule: clockwise.
inline Faces trace(const Digraph& d, const std::vector<std::vector<HalfArcId>>& rot) {
  const int halves = 2 * d.num_arcs();
  std::vector<HalfArcId> next(halves), prev(halves);
  for (const auto& r : rot) {
    const int s = static_cast<int>(r.size());
    for (int i = 0; i < s; ++i) {
      next[r[i]] = r[(i + 1) % s];
      prev[r[i]] = r[(i + s - 1) % s];
    }
  }
  auto cycles = [&](auto step) {
    std::vector<std::vector<ArcId>> out;
    std::vector<bool> seen(d.num_arcs(), false);
    for (ArcId a = 0; a < d.num_arcs(); ++a) {
      if (seen[a]) continue;
      std::vector<ArcId> cyc;
      for (ArcId x = a; !seen[x]; x = step(x)) {
        seen[x] = true;
        cyc.push_back(x);
      }
      out.push_back(rotate_min(cyc));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  Faces f;
  f.pro = cycles([&](ArcId a) { return prev[2 * a + 1] / 2; });
  f.anti = cycles([&](ArcId a) { return next[2 * a + 1] / 2; });
  return f;
}

inline Faces trace(const relemb::Embedding& e) { return trace(e.digraph(), e.rotation_system().rotations); }

inline std::vector<std::vector<ArcId>> canonical(const std::vector<std::vector<ArcId>>& circuits) {
  std::vector<std::vector<ArcId>> out;
  for (const auto& c : circuits) out.push_back(rotate_min(c));
  std::sort(out.begin(), out.end());
  return out;
}

// Successor arc of each arc along the circuits.
inline std::vector<ArcId> successors(const Digraph& d, const std::vector<std::vector<ArcId>>& circuits) {
  std::vector<ArcId> next(d.num_arcs(), -1);
  for (const auto& c : circuits)
    for (std::size_t i = 0; i < c.size(); ++i) next[c[i]] = c[(i + 1) % c.size()];
  return next;
}

// Calls visit(rotation) for every rotation system whose profaces are exactly
// the circuits: at each vertex the blocks (out-half of succ(a), in-half of a)
// over incoming arcs a, arranged in every cyclic order.
template <class Visit>
void for_each_relative(const Digraph& d, const std::vector<std::vector<ArcId>>& circuits, Visit visit) {
  const std::vector<ArcId> next = successors(d, circuits);
  const int n = d.num_vertices();
  std::vector<std::vector<ArcId>> incoming(n);
  for (ArcId a = 0; a < d.num_arcs(); ++a) incoming[d.head(a)].push_back(a);
  std::vector<std::vector<int>> order(n);
  for (int v = 0; v < n; ++v) {
    order[v].resize(incoming[v].size());
    std::iota(order[v].begin(), order[v].end(), 0);
  }
  std::vector<std::vector<HalfArcId>> rot(n);
  while (true) {
    for (int v = 0; v < n; ++v) {
      rot[v].clear();
      for (int i : order[v]) {
        ArcId a = incoming[v][i];
        rot[v].push_back(2 * next[a]);
        rot[v].push_back(2 * a + 1);
      }
    }
    visit(rot);
    int v = 0;
    for (; v < n; ++v) {
      if (order[v].size() > 1 && std::next_permutation(order[v].begin() + 1, order[v].end())) break;
    }
    if (v == n) return;
  }
}

inline int min_antifaces(const Digraph& d, const std::vector<std::vector<ArcId>>& circuits) {
  int best = 1 << 30;
  for_each_relative(d, circuits, [&](const auto& rot) {
    best = std::min(best, static_cast<int>(trace(d, rot).anti.size()));
  });
  return best;
}

// Every alternating rotation system (all interleavings of outs and ins at
// each vertex), filtered to those whose profaces equal the circuits. Only
// for tiny inputs.
inline int min_antifaces_unrestricted(const Digraph& d, const std::vector<std::vector<ArcId>>& circuits) {
  const int n = d.num_vertices();
  const auto want = canonical(circuits);
  std::vector<std::vector<HalfArcId>> outs(n), ins(n);
  for (ArcId a = 0; a < d.num_arcs(); ++a) {
    outs[d.tail(a)].push_back(2 * a);
    ins[d.head(a)].push_back(2 * a + 1);
  }
  std::vector<std::vector<HalfArcId>> rot(n);
  int best = 1 << 30;
  auto build = [&](auto&& self, int v) -> void {
    if (v == n) {
      Faces f = trace(d, rot);
      if (f.pro == want) best = std::min(best, static_cast<int>(f.anti.size()));
      return;
    }
    std::vector<HalfArcId> o = outs[v], i = ins[v];
    if (o.empty()) {
      rot[v].clear();
      self(self, v + 1);
      return;
    }
    // Fix the first out-half to quotient out rotation.
    do {
      do {
        rot[v].clear();
        for (std::size_t j = 0; j < o.size(); ++j) {
          rot[v].push_back(o[j]);
          rot[v].push_back(i[j]);
        }
        self(self, v + 1);
      } while (std::next_permutation(i.begin(), i.end()));
    } while (std::next_permutation(o.begin() + 1, o.end()));
  };
  build(build, 0);
  return best;
}

// Closed trail using every arc exactly once.
inline bool is_euler_circuit(const Digraph& d, const std::vector<ArcId>& walk) {
  if (static_cast<int>(walk.size()) != d.num_arcs()) return false;
  std::vector<bool> used(d.num_arcs(), false);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (used[walk[i]]) return false;
    used[walk[i]] = true;
    if (d.head(walk[i]) != d.tail(walk[(i + 1) % walk.size()])) return false;
  }
  return true;
}

// Orientable genus from Euler's formula for a connected digraph.
inline int genus(const Digraph& d, int faces) {
  return (2 - d.num_vertices() + d.num_arcs() - faces) / 2;
}

// Pattern x..y..x..y on a cyclic sequence, by trying every 4-subset.
inline bool interlaced(const std::vector<VertexId>& w, VertexId x, VertexId y) {
  const int s = static_cast<int>(w.size());
  for (int a = 0; a < s; ++a)
    for (int b = a + 1; b < s; ++b)
      for (int c = b + 1; c < s; ++c)
        for (int e = c + 1; e < s; ++e)
          if (w[a] == x && w[b] == y && w[c] == x && w[e] == y) return true;
  return false;
}

inline std::vector<VertexId> tails(const Digraph& d, const std::vector<ArcId>& face) {
  std::vector<VertexId> out;
  for (ArcId a : face) out.push_back(d.tail(a));
  return out;
}

// Minimum degree of the subgraph of g induced by s.
inline int induced_min_degree(const relemb::SimpleGraph& g, const std::vector<VertexId>& s) {
  int best = 1 << 30;
  for (VertexId u : s) {
    int deg = 0;
    for (VertexId v : s) deg += g.adjacent(u, v);
    best = std::min(best, deg);
  }
  return best;
}

}  // namespace naive
