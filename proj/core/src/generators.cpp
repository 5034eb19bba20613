#include "relemb/generators.hpp"

#include <algorithm>
#include <random>

#include "relemb/errors.hpp"

namespace relemb {

Digraph gen_rotational_tournament(int n) {
  if (n < 3 || n % 2 == 0) throw InvalidInput("rotational tournament needs odd n >= 3");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= (n - 1) / 2; ++j) arcs.push_back({i, (i + j) % n});
  return Digraph(n, std::move(arcs));
}

namespace {

Digraph orient_along_tour(const UndirectedGraph& g) {
  UndirectedTour tour = undirected_euler_tour(g);
  return eulerian_orientation(g, {tour.edges}).digraph;
}

}  // namespace

Digraph gen_kn_minus_pm(int n) {
  if (n < 4 || n % 2 != 0) throw InvalidInput("K_n minus a perfect matching needs even n >= 4");
  UndirectedGraph g{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (j != i + n / 2) g.edges.emplace_back(i, j);
  return orient_along_tour(g);
}

SteinerSystem gen_sts(int n) {
  std::vector<std::array<VertexId, 3>> triples;
  if (n % 6 == 3) {
    const int m = n / 3;
    auto id = [m](int x, int i) { return (i % 3) * m + x; };
    auto op = [m](int x, int y) { return ((x + y) * (m + 1) / 2) % m; };
    for (int x = 0; x < m; ++x) triples.push_back({id(x, 0), id(x, 1), id(x, 2)});
    for (int i = 0; i < 3; ++i)
      for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) triples.push_back({id(x, i), id(y, i), id(op(x, y), i + 1)});
  } else if (n % 6 == 1 && n >= 7) {
    const int s = (n - 1) / 6;
    const int inf = n - 1;
    auto id = [s](int x, int i) { return (i % 3) * 2 * s + x; };
    auto op = [s](int x, int y) {
      int t = (x + y) % (2 * s);
      return t % 2 == 0 ? t / 2 : s + t / 2;
    };
    for (int x = 0; x < s; ++x) triples.push_back({id(x, 0), id(x, 1), id(x, 2)});
    for (int i = 0; i < 3; ++i)
      for (int x = 0; x < s; ++x) triples.push_back({inf, id(s + x, i), id(x, i + 1)});
    for (int i = 0; i < 3; ++i)
      for (int x = 0; x < 2 * s; ++x)
        for (int y = x + 1; y < 2 * s; ++y) triples.push_back({id(x, i), id(y, i), id(op(x, y), i + 1)});
  } else {
    throw InvalidInput("Steiner triple systems need n = 1 or 3 (mod 6) with n >= 3, got " +
                       std::to_string(n));
  }
  std::vector<Arc> arcs;
  std::vector<DirectedCircuit> circuits;
  for (const auto& t : triples) {
    const int base = static_cast<int>(arcs.size());
    arcs.push_back({t[0], t[1]});
    arcs.push_back({t[1], t[2]});
    arcs.push_back({t[2], t[0]});
    circuits.push_back({base, base + 1, base + 2});
  }
  Digraph d(n, std::move(arcs));
  CircuitDecomposition c(d, std::move(circuits));
  return SteinerSystem{std::move(d), std::move(c), std::move(triples)};
}

Digraph gen_random_dense_eulerian(int n, int k_target, std::uint64_t seed) {
  if (k_target < 0) throw InvalidInput("k must be nonnegative");
  if (n < 5 * k_target + 7)
    throw InvalidInput("n = " + std::to_string(n) + " is below 5k + 7 for k = " + std::to_string(k_target));
  if (n % 2 == 0 && k_target == 0)
    throw InvalidInput("even n needs k >= 1: every vertex must lose an odd number of edges");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<char>> removed(n, std::vector<char>(n, 0));
  std::vector<int> loss(n, 0);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;

  if (n % 2 == 0) {
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i < n; i += 2) {
      removed[order[i]][order[i + 1]] = removed[order[i + 1]][order[i]] = 1;
      loss[order[i]] = loss[order[i + 1]] = 1;
    }
  }
  // Random cycles keep every parity intact.
  const int attempts = std::uniform_int_distribution<int>(0, n)(rng);
  for (int t = 0; t < attempts; ++t) {
    std::vector<int> pool;
    for (int v = 0; v < n; ++v)
      if (loss[v] + 2 <= k_target) pool.push_back(v);
    if (pool.size() < 3) break;
    std::shuffle(pool.begin(), pool.end(), rng);
    const int len = std::uniform_int_distribution<int>(3, static_cast<int>(pool.size()))(rng);
    bool ok = true;
    for (int i = 0; i < len && ok; ++i)
      if (removed[pool[i]][pool[(i + 1) % len]]) ok = false;
    if (!ok) continue;
    for (int i = 0; i < len; ++i) {
      int u = pool[i], v = pool[(i + 1) % len];
      removed[u][v] = removed[v][u] = 1;
      loss[u] += 2;
    }
  }
  UndirectedGraph g{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!removed[i][j]) g.edges.emplace_back(i, j);
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  return orient_along_tour(g);
}

CircuitDecomposition random_circuit_decomposition(const Digraph& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ArcId> next(d.num_arcs(), -1);
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    std::vector<ArcId> outs;
    for (HalfArcId h : d.out_halves(v)) outs.push_back(arc_of(h));
    std::shuffle(outs.begin(), outs.end(), rng);
    auto ins = d.in_halves(v);
    if (ins.size() != outs.size()) throw InvalidInput("vertex " + std::to_string(v) + " is unbalanced");
    for (std::size_t i = 0; i < ins.size(); ++i) next[arc_of(ins[i])] = outs[i];
  }
  return decomposition_from_successors(d, next);
}

}  // namespace relemb
