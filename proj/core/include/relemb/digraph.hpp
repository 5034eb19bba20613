#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "relemb/types.hpp"

namespace relemb {

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  auto operator<=>(const Arc&) const = default;
};

// Half-arc digraph. Loops and parallel arcs are allowed. Arc ids are list
// positions; half-arc numbering follows types.hpp.
class Digraph {
 public:
  Digraph() = default;
  // Throws InvalidInput on a negative vertex count or an out-of-range endpoint.
  Digraph(int num_vertices, std::vector<Arc> arcs);

  int num_vertices() const noexcept { return n_; }
  int num_arcs() const noexcept { return static_cast<int>(arcs_.size()); }
  int num_half_arcs() const noexcept { return 2 * num_arcs(); }

  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& arc(ArcId a) const { return arcs_[a]; }
  VertexId tail(ArcId a) const { return arcs_[a].tail; }
  VertexId head(ArcId a) const { return arcs_[a].head; }
  // The incidence map: vertex carrying half-arc h.
  VertexId incv(HalfArcId h) const {
    return is_outgoing(h) ? arcs_[arc_of(h)].tail : arcs_[arc_of(h)].head;
  }

  // Half-arcs at v in ascending id order.
  std::span<const HalfArcId> out_halves(VertexId v) const { return out_[v]; }
  std::span<const HalfArcId> in_halves(VertexId v) const { return in_[v]; }
  int outdegree(VertexId v) const { return static_cast<int>(out_[v].size()); }
  int indegree(VertexId v) const { return static_cast<int>(in_[v].size()); }
  int degree(VertexId v) const { return indegree(v) + outdegree(v); }

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<HalfArcId>> out_;
  std::vector<std::vector<HalfArcId>> in_;
};

inline Digraph build_digraph(int num_vertices, std::vector<Arc> arcs) {
  return Digraph(num_vertices, std::move(arcs));
}

struct DigraphReport {
  bool balanced = true;
  bool connected = true;
  int components = 0;
  std::vector<VertexId> unbalanced;

  bool eulerian() const noexcept { return balanced && connected; }
};

// Degree balance and connectivity of the underlying graph. Vertices carrying
// only loops count as connected singletons.
DigraphReport validate(const Digraph& d);

// Component label per vertex of the underlying undirected multigraph.
std::vector<int> component_labels(const Digraph& d, int* num_components = nullptr);

// Simple undirected graph with an adjacency bit matrix; small orders only.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return edges_; }
  void add_edge(VertexId u, VertexId v);
  bool adjacent(VertexId u, VertexId v) const {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  const std::vector<VertexId>& neighbors(VertexId v) const { return nbrs_[v]; }
  int degree(VertexId v) const { return static_cast<int>(nbrs_[v].size()); }
  int min_degree() const;
  std::vector<std::pair<VertexId, VertexId>> edge_list() const;

  bool operator==(const SimpleGraph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  int n_ = 0;
  int edges_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<VertexId>> nbrs_;  // kept sorted
};

// u ~ v iff some arc joins u and v in either direction; loops are dropped.
SimpleGraph underlying_simple_graph(const Digraph& d);

struct DensityProfile {
  int n = 0;
  int delta = 0;  // minimum degree of the underlying simple graph
  int k = 0;      // n - 1 - delta: max degree of the complement
  bool dense = false;
};

DensityProfile density_profile(const SimpleGraph& g);
DensityProfile density_profile(const Digraph& d);

// The two equivalent forms of the density condition.
constexpr bool dense_by_degree(int n, int delta) { return 5 * delta >= 4 * n + 2; }
constexpr bool dense_by_codegree(int n, int k) { return n >= 5 * k + 7; }

// Closed directed trail given as arc ids; head of each arc is the tail of the
// next, cyclically.
using DirectedCircuit = std::vector<ArcId>;

// Throws InvalidInput unless c is a nonempty closed trail in d.
void validate_circuit(const Digraph& d, const DirectedCircuit& c);

// Rotate so the smallest arc id comes first.
DirectedCircuit canonical_circuit(DirectedCircuit c);

// Partition of the arc set into directed circuits, with the induced successor
// map fw: incoming half-arc -> the outgoing half-arc that follows it.
class CircuitDecomposition {
 public:
  CircuitDecomposition() = default;
  // Throws InvalidInput unless the circuits partition the arcs of d.
  CircuitDecomposition(const Digraph& d, std::vector<DirectedCircuit> circuits);

  const std::vector<DirectedCircuit>& circuits() const noexcept { return circuits_; }
  int size() const noexcept { return static_cast<int>(circuits_.size()); }
  int num_arcs() const noexcept { return static_cast<int>(circuit_of_.size()); }
  int circuit_of(ArcId a) const { return circuit_of_[a]; }
  HalfArcId successor(HalfArcId incoming) const { return fw_[arc_of(incoming)]; }

  // Circuits in canonical rotation, sorted.
  std::vector<DirectedCircuit> canonical() const;

  bool operator==(const CircuitDecomposition& other) const {
    return circuits_ == other.circuits_;
  }

 private:
  std::vector<DirectedCircuit> circuits_;
  std::vector<int> circuit_of_;
  std::vector<HalfArcId> fw_;  // indexed by arc of the incoming half-arc
};

// Decomposition induced by a transition system: next_arc[a] is the arc that
// follows a. Throws InvalidInput if next_arc is not a permutation respecting
// incidence.
CircuitDecomposition decomposition_from_successors(const Digraph& d,
                                                   const std::vector<ArcId>& next_arc);

// Hierholzer: start at the lowest-id vertex with an arc, always take the
// lowest unused outgoing half-arc. Throws InvalidInput if d is not eulerian
// or has no arcs.
DirectedCircuit euler_circuit(const Digraph& d);

// Euler circuit of each nontrivial component of the subdigraph formed by the
// arcs with mask[a] set. Every vertex must be balanced in that subdigraph.
std::vector<DirectedCircuit> euler_circuits(const Digraph& d, const std::vector<bool>& mask);

// Repeated cycle peeling with lowest-id tie-breaking. Requires balance only.
CircuitDecomposition greedy_circuit_decomposition(const Digraph& d);

// Split a circuit at its first repeated vertex into two circuits. Returns the
// circuit unchanged (single element) when it visits no vertex twice.
std::vector<DirectedCircuit> split_at_first_repeat(const Digraph& d,
                                                   const DirectedCircuit& c);

struct UndirectedGraph {
  int n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

// Undirected circuit: edge ids in traversal order.
using UndirectedCircuit = std::vector<int>;

// Edge ids of an euler tour of an undirected multigraph, starting at the lowest
// vertex with an edge and always taking the lowest unused edge. Also returns
// the vertex sequence (closed; first == last).
struct UndirectedTour {
  std::vector<int> edges;
  std::vector<VertexId> vertices;
};
UndirectedTour undirected_euler_tour(const UndirectedGraph& g);

struct Orientation {
  Digraph digraph;
  CircuitDecomposition circuits;
};

// Orient g so that every circuit of c becomes a directed circuit, traversed in
// the listed direction. Arc i is edge i. Throws InvalidInput if c is not a
// circuit decomposition of g or some vertex has odd degree.
Orientation eulerian_orientation(const UndirectedGraph& g,
                                 const std::vector<UndirectedCircuit>& c);

}  // namespace relemb
