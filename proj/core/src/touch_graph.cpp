#include "relemb/touch_graph.hpp"

#include <numeric>
#include <sstream>

#include "relemb/errors.hpp"

namespace relemb {

TouchGraph::TouchGraph(int num_nodes, std::vector<std::pair<FaceIndex, FaceIndex>> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)), weight_(num_nodes * num_nodes, 0) {
  for (auto& [p, q] : edges_) {
    if (p > q) std::swap(p, q);
    if (p < 0 || q >= num_nodes_) throw InvalidInput("touch graph edge end out of range");
    ++weight_[p * num_nodes_ + q];
    if (p != q) ++weight_[q * num_nodes_ + p];
  }
}

int TouchGraph::loops_at(FaceIndex f) const { return weight_[f * num_nodes_ + f]; }

int TouchGraph::incident(FaceIndex f) const {
  int total = 0;
  for (FaceIndex g = 0; g < num_nodes_; ++g) total += weight_[f * num_nodes_ + g];
  return total;
}

int TouchGraph::multiplicity(FaceIndex f, FaceIndex g) const {
  return f == g ? 0 : weight_[f * num_nodes_ + g];
}

std::vector<FaceIndex> TouchGraph::neighbors(FaceIndex f) const {
  std::vector<FaceIndex> out;
  for (FaceIndex g = 0; g < num_nodes_; ++g)
    if (g != f && weight_[f * num_nodes_ + g] > 0) out.push_back(g);
  return out;
}

bool TouchGraph::connected() const {
  if (num_nodes_ == 0) return true;
  std::vector<int> parent(num_nodes_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [p, q] : edges_) parent[find(p)] = find(q);
  for (int f = 1; f < num_nodes_; ++f)
    if (find(f) != find(0)) return false;
  return true;
}

std::string TouchGraph::to_dot() const {
  std::ostringstream out;
  out << "graph touch {\n";
  for (FaceIndex f = 0; f < num_nodes_; ++f) out << "  A" << f << ";\n";
  for (FaceIndex f = 0; f < num_nodes_; ++f)
    for (FaceIndex g = f; g < num_nodes_; ++g)
      if (int w = weight_[f * num_nodes_ + g]; w > 0)
        out << "  A" << f << " -- A" << g << " [label=\"" << w << "\"];\n";
  out << "}\n";
  return out.str();
}

TouchGraph build_touch_graph(const Embedding& e) {
  const int n = e.digraph().num_vertices();
  std::vector<std::pair<FaceIndex, FaceIndex>> edges;
  edges.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    const auto& at = e.antifaces_at(v);
    if (at.empty()) throw InvalidInput("vertex " + std::to_string(v) + " lies on no antiface");
    if (at.size() >= 3)
      throw HypothesisError("embedding is not locally irreducible at vertex " + std::to_string(v));
    edges.emplace_back(at.front(), at.back());
  }
  return TouchGraph(e.num_antifaces(), std::move(edges));
}

TouchClassification classify(const TouchGraph& k) {
  TouchClassification c;
  const int nodes = k.num_nodes();
  for (FaceIndex f = 0; f < nodes; ++f)
    if (k.loops_at(f) > 0) c.loop_nodes.push_back(f);
  for (FaceIndex f = 0; f < nodes && c.star_center < 0; ++f)
    if (k.incident(f) == k.num_edges()) c.star_center = f;
  c.is_star = c.star_center >= 0;
  for (FaceIndex f = 0; f < nodes; ++f)
    for (FaceIndex g = f + 1; g < nodes; ++g)
      if (c.pair_a < 0 || k.multiplicity(f, g) > c.pair_count) {
        c.pair_a = f;
        c.pair_b = g;
        c.pair_count = k.multiplicity(f, g);
      }
  if (c.pair_a >= 0 && k.incident(c.pair_b) > k.incident(c.pair_a)) std::swap(c.pair_a, c.pair_b);
  return c;
}

}  // namespace relemb
