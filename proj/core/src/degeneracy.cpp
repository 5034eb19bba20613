#include "relemb/degeneracy.hpp"

#include <queue>

#include "relemb/errors.hpp"

namespace relemb {

bool is_bipartite(const SimpleGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> side(n, -1);
  for (VertexId s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      VertexId u = q.front();
      q.pop();
      for (VertexId v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          q.push(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<VertexId> extract_dense_subgraph(const SimpleGraph& h, int d) {
  const int n = h.num_vertices();
  if (d < 0) throw InvalidInput("d must be nonnegative");
  if (!is_bipartite(h)) throw InvalidInput("graph is not bipartite");
  if (n < 2 * d)
    throw HypothesisError("need at least 2d = " + std::to_string(2 * d) + " vertices, got " +
                          std::to_string(n));
  const long long threshold = static_cast<long long>(d) * (n - d);
  if (h.num_edges() <= threshold)
    throw HypothesisError("need more than d(n-d) = " + std::to_string(threshold) + " edges, got " +
                          std::to_string(h.num_edges()));

  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  std::queue<VertexId> q;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = h.degree(v);
    if (deg[v] <= d) q.push(v);
  }
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (VertexId u : h.neighbors(v))
      if (alive[u] && --deg[u] == d) q.push(u);
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v)
    if (alive[v]) out.push_back(v);
  if (out.empty()) throw InternalError("degeneracy peeling removed every vertex above the edge bound");
  return out;
}

}  // namespace relemb
