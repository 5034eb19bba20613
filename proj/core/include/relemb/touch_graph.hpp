#pragma once

#include <string>
#include <utility>
#include <vector>

#include "relemb/embedding.hpp"

namespace relemb {

// Nodes are antifaces, edges are digraph vertices: a vertex on one antiface
// is a loop there, a vertex on two antifaces links them.
class TouchGraph {
 public:
  TouchGraph(int num_nodes, std::vector<std::pair<FaceIndex, FaceIndex>> edges);

  int num_nodes() const noexcept { return num_nodes_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  // Ends of the edge for digraph vertex v, smaller first.
  const std::pair<FaceIndex, FaceIndex>& edge(VertexId v) const { return edges_[v]; }

  int loops_at(FaceIndex f) const;
  // Number of edges incident with f (loops once): |V(f)|.
  int incident(FaceIndex f) const;
  // Number of links between distinct f and g: |fg|.
  int multiplicity(FaceIndex f, FaceIndex g) const;
  // Distinct neighbors other than f itself, ascending.
  std::vector<FaceIndex> neighbors(FaceIndex f) const;
  bool connected() const;

  // Weighted simplified view in DOT.
  std::string to_dot() const;

 private:
  int num_nodes_ = 0;
  std::vector<std::pair<FaceIndex, FaceIndex>> edges_;
  std::vector<int> weight_;  // num_nodes_ x num_nodes_, loops on the diagonal
};

// Throws HypothesisError naming the first vertex on three or more antifaces.
TouchGraph build_touch_graph(const Embedding& e);

struct TouchClassification {
  std::vector<FaceIndex> loop_nodes;  // ascending
  bool is_star = false;
  FaceIndex star_center = -1;  // lowest node incident with every edge
  // Pair maximizing |AB| (ties to the lowest pair), ordered so that A is
  // incident with at least as many edges as B. -1 when fewer than two nodes.
  FaceIndex pair_a = -1;
  FaceIndex pair_b = -1;
  int pair_count = 0;
};

TouchClassification classify(const TouchGraph& k);

}  // namespace relemb
