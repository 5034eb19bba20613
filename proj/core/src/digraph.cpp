#include "relemb/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "relemb/errors.hpp"

namespace relemb {

namespace {

std::string vstr(VertexId v) { return std::to_string(v); }

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Digraph::Digraph(int num_vertices, std::vector<Arc> arcs)
    : n_(num_vertices), arcs_(std::move(arcs)), out_(num_vertices < 0 ? 0 : num_vertices),
      in_(num_vertices < 0 ? 0 : num_vertices) {
  if (n_ < 0) throw InvalidInput("negative vertex count");
  for (ArcId a = 0; a < num_arcs(); ++a) {
    const Arc& arc = arcs_[a];
    if (arc.tail < 0 || arc.tail >= n_ || arc.head < 0 || arc.head >= n_) {
      throw InvalidInput("arc " + std::to_string(a) + " has an endpoint outside [0, " +
                         std::to_string(n_) + ")");
    }
    out_[arc.tail].push_back(out_half(a));
    in_[arc.head].push_back(in_half(a));
  }
}

std::vector<int> component_labels(const Digraph& d, int* num_components) {
  UnionFind uf(d.num_vertices());
  for (const Arc& a : d.arcs()) uf.unite(a.tail, a.head);
  std::vector<int> label(d.num_vertices(), -1);
  std::vector<int> root_label(d.num_vertices(), -1);
  int count = 0;
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    int r = uf.find(v);
    if (root_label[r] < 0) root_label[r] = count++;
    label[v] = root_label[r];
  }
  if (num_components) *num_components = count;
  return label;
}

DigraphReport validate(const Digraph& d) {
  DigraphReport report;
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    if (d.indegree(v) != d.outdegree(v)) {
      report.balanced = false;
      report.unbalanced.push_back(v);
    }
  }
  component_labels(d, &report.components);
  report.connected = report.components <= 1;
  return report;
}

SimpleGraph::SimpleGraph(int n)
    : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), nbrs_(n) {}

void SimpleGraph::add_edge(VertexId u, VertexId v) {
  if (u == v || adjacent(u, v)) return;
  adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
  nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
  nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
  ++edges_;
}

int SimpleGraph::min_degree() const {
  int best = n_ == 0 ? 0 : degree(0);
  for (VertexId v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<std::pair<VertexId, VertexId>> SimpleGraph::edge_list() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

SimpleGraph underlying_simple_graph(const Digraph& d) {
  SimpleGraph g(d.num_vertices());
  for (const Arc& a : d.arcs()) g.add_edge(a.tail, a.head);
  return g;
}

DensityProfile density_profile(const SimpleGraph& g) {
  DensityProfile p;
  p.n = g.num_vertices();
  p.delta = g.min_degree();
  p.k = p.n - 1 - p.delta;
  const bool by_degree = dense_by_degree(p.n, p.delta);
  const bool by_codegree = dense_by_codegree(p.n, p.k);
  if (by_degree != by_codegree) throw InternalError("density forms disagree");
  p.dense = by_degree;
  return p;
}

DensityProfile density_profile(const Digraph& d) {
  if (d.num_vertices() < 1) throw InvalidInput("density profile needs at least one vertex");
  return density_profile(underlying_simple_graph(d));
}

void validate_circuit(const Digraph& d, const DirectedCircuit& c) {
  if (c.empty()) throw InvalidInput("empty circuit");
  std::vector<ArcId> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("circuit repeats an arc");
  for (std::size_t i = 0; i < c.size(); ++i) {
    ArcId a = c[i];
    if (a < 0 || a >= d.num_arcs())
      throw InvalidInput("circuit references arc " + std::to_string(a) + " out of range");
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    ArcId a = c[i];
    ArcId b = c[(i + 1) % c.size()];
    if (d.head(a) != d.tail(b)) {
      throw InvalidInput("circuit is not closed: arc " + std::to_string(a) + " ends at " +
                         vstr(d.head(a)) + " but arc " + std::to_string(b) + " starts at " +
                         vstr(d.tail(b)));
    }
  }
}

DirectedCircuit canonical_circuit(DirectedCircuit c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  return c;
}

CircuitDecomposition::CircuitDecomposition(const Digraph& d,
                                           std::vector<DirectedCircuit> circuits)
    : circuits_(std::move(circuits)),
      circuit_of_(d.num_arcs(), -1),
      fw_(d.num_arcs(), -1) {
  for (int ci = 0; ci < size(); ++ci) {
    const DirectedCircuit& c = circuits_[ci];
    validate_circuit(d, c);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (circuit_of_[c[i]] >= 0)
        throw InvalidInput("arc " + std::to_string(c[i]) + " appears in two circuits");
      circuit_of_[c[i]] = ci;
      fw_[c[i]] = out_half(c[(i + 1) % c.size()]);
    }
  }
  for (ArcId a = 0; a < d.num_arcs(); ++a)
    if (circuit_of_[a] < 0)
      throw InvalidInput("arc " + std::to_string(a) + " is not covered by any circuit");
}

std::vector<DirectedCircuit> CircuitDecomposition::canonical() const {
  std::vector<DirectedCircuit> out;
  out.reserve(circuits_.size());
  for (const auto& c : circuits_) out.push_back(canonical_circuit(c));
  std::sort(out.begin(), out.end());
  return out;
}

CircuitDecomposition decomposition_from_successors(const Digraph& d,
                                                   const std::vector<ArcId>& next_arc) {
  const int m = d.num_arcs();
  if (static_cast<int>(next_arc.size()) != m) throw InvalidInput("successor map has wrong size");
  std::vector<bool> hit(m, false);
  for (ArcId a = 0; a < m; ++a) {
    ArcId b = next_arc[a];
    if (b < 0 || b >= m || hit[b]) throw InvalidInput("successor map is not a permutation");
    if (d.head(a) != d.tail(b)) throw InvalidInput("successor map breaks incidence");
    hit[b] = true;
  }
  std::vector<bool> seen(m, false);
  std::vector<DirectedCircuit> circuits;
  for (ArcId a = 0; a < m; ++a) {
    if (seen[a]) continue;
    DirectedCircuit c;
    for (ArcId x = a; !seen[x]; x = next_arc[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    circuits.push_back(std::move(c));
  }
  return CircuitDecomposition(d, std::move(circuits));
}

namespace {

// Hierholzer from `start` over arcs with mask set; consumes them in `used`.
DirectedCircuit hierholzer(const Digraph& d, VertexId start, const std::vector<bool>& mask,
                           std::vector<std::size_t>& ptr) {
  DirectedCircuit reversed;
  std::vector<VertexId> vstack{start};
  std::vector<ArcId> astack;
  while (!vstack.empty()) {
    VertexId v = vstack.back();
    auto outs = d.out_halves(v);
    while (ptr[v] < outs.size() && !mask[arc_of(outs[ptr[v]])]) ++ptr[v];
    if (ptr[v] < outs.size()) {
      ArcId a = arc_of(outs[ptr[v]++]);
      vstack.push_back(d.head(a));
      astack.push_back(a);
    } else {
      vstack.pop_back();
      if (!astack.empty()) {
        reversed.push_back(astack.back());
        astack.pop_back();
      }
    }
  }
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

}  // namespace

std::vector<DirectedCircuit> euler_circuits(const Digraph& d, const std::vector<bool>& mask) {
  const int n = d.num_vertices();
  std::vector<int> balance(n, 0);
  UnionFind uf(n);
  for (ArcId a = 0; a < d.num_arcs(); ++a) {
    if (!mask[a]) continue;
    ++balance[d.tail(a)];
    --balance[d.head(a)];
    uf.unite(d.tail(a), d.head(a));
  }
  for (VertexId v = 0; v < n; ++v)
    if (balance[v] != 0) throw InvalidInput("vertex " + vstr(v) + " is unbalanced");

  std::vector<std::size_t> ptr(n, 0);
  std::vector<bool> root_done(n, false);
  std::vector<DirectedCircuit> out;
  for (VertexId v = 0; v < n; ++v) {
    bool has_arc = false;
    for (HalfArcId h : d.out_halves(v)) has_arc = has_arc || mask[arc_of(h)];
    if (!has_arc) continue;
    int r = uf.find(v);
    if (root_done[r]) continue;
    root_done[r] = true;
    out.push_back(hierholzer(d, v, mask, ptr));
  }
  return out;
}

DirectedCircuit euler_circuit(const Digraph& d) {
  if (d.num_arcs() == 0) throw InvalidInput("digraph has no arcs");
  DigraphReport report = validate(d);
  if (!report.balanced)
    throw InvalidInput("digraph is not eulerian: vertex " + vstr(report.unbalanced.front()) +
                       " is unbalanced");
  std::vector<bool> mask(d.num_arcs(), true);
  auto circuits = euler_circuits(d, mask);
  // Isolated vertices do not matter for a single circuit; arc-carrying
  // components do.
  if (circuits.size() != 1) throw InvalidInput("digraph is not connected");
  return circuits.front();
}

CircuitDecomposition greedy_circuit_decomposition(const Digraph& d) {
  DigraphReport report = validate(d);
  if (!report.balanced)
    throw InvalidInput("vertex " + vstr(report.unbalanced.front()) + " is unbalanced");
  const int m = d.num_arcs();
  std::vector<bool> used(m, false);
  std::vector<std::size_t> ptr(d.num_vertices(), 0);
  auto next_unused = [&](VertexId v) -> ArcId {
    auto outs = d.out_halves(v);
    while (ptr[v] < outs.size() && used[arc_of(outs[ptr[v]])]) ++ptr[v];
    if (ptr[v] == outs.size()) return -1;
    return arc_of(outs[ptr[v]]);
  };
  std::vector<DirectedCircuit> circuits;
  for (ArcId a = 0; a < m; ++a) {
    if (used[a]) continue;
    DirectedCircuit c{a};
    used[a] = true;
    const VertexId start = d.tail(a);
    VertexId cur = d.head(a);
    while (cur != start) {
      ArcId b = next_unused(cur);
      if (b < 0) throw InternalError("cycle peeling stuck on a balanced digraph");
      used[b] = true;
      c.push_back(b);
      cur = d.head(b);
    }
    circuits.push_back(std::move(c));
  }
  return CircuitDecomposition(d, std::move(circuits));
}

std::vector<DirectedCircuit> split_at_first_repeat(const Digraph& d, const DirectedCircuit& c) {
  std::vector<int> first_seen(d.num_vertices(), -1);
  for (std::size_t j = 0; j < c.size(); ++j) {
    VertexId v = d.tail(c[j]);
    if (first_seen[v] >= 0) {
      std::size_t i = static_cast<std::size_t>(first_seen[v]);
      DirectedCircuit inner(c.begin() + i, c.begin() + j);
      DirectedCircuit outer(c.begin() + j, c.end());
      outer.insert(outer.end(), c.begin(), c.begin() + i);
      return {inner, outer};
    }
    first_seen[v] = static_cast<int>(j);
  }
  return {c};
}

UndirectedTour undirected_euler_tour(const UndirectedGraph& g) {
  const int m = static_cast<int>(g.edges.size());
  std::vector<std::vector<int>> inc(g.n);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges[e];
    if (u < 0 || u >= g.n || v < 0 || v >= g.n) throw InvalidInput("edge endpoint out of range");
    inc[u].push_back(e);
    if (u != v) inc[v].push_back(e);
  }
  for (VertexId v = 0; v < g.n; ++v) {
    int deg = 0;
    for (int e : inc[v]) deg += g.edges[e].first == g.edges[e].second ? 2 : 1;
    if (deg % 2 != 0) throw InvalidInput("vertex " + vstr(v) + " has odd degree");
  }
  UndirectedTour tour;
  if (m == 0) return tour;
  VertexId start = 0;
  while (inc[start].empty()) ++start;

  std::vector<bool> used(m, false);
  std::vector<std::size_t> ptr(g.n, 0);
  std::vector<VertexId> vstack{start};
  std::vector<int> estack;
  while (!vstack.empty()) {
    VertexId v = vstack.back();
    while (ptr[v] < inc[v].size() && used[inc[v][ptr[v]]]) ++ptr[v];
    if (ptr[v] < inc[v].size()) {
      int e = inc[v][ptr[v]++];
      used[e] = true;
      auto [a, b] = g.edges[e];
      vstack.push_back(a == v ? b : a);
      estack.push_back(e);
    } else {
      tour.vertices.push_back(v);
      vstack.pop_back();
      if (!estack.empty()) {
        tour.edges.push_back(estack.back());
        estack.pop_back();
      }
    }
  }
  if (static_cast<int>(tour.edges.size()) != m) throw InvalidInput("graph is not connected");
  std::reverse(tour.edges.begin(), tour.edges.end());
  std::reverse(tour.vertices.begin(), tour.vertices.end());
  return tour;
}

Orientation eulerian_orientation(const UndirectedGraph& g,
                                 const std::vector<UndirectedCircuit>& c) {
  const int m = static_cast<int>(g.edges.size());
  std::vector<int> degree(g.n, 0);
  for (auto [u, v] : g.edges) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n) throw InvalidInput("edge endpoint out of range");
    ++degree[u];
    ++degree[v];
  }
  for (VertexId v = 0; v < g.n; ++v)
    if (degree[v] % 2 != 0) throw InvalidInput("vertex " + vstr(v) + " has odd degree");

  std::vector<Arc> arcs(m);
  std::vector<bool> covered(m, false);
  for (const UndirectedCircuit& circuit : c) {
    if (circuit.empty()) throw InvalidInput("empty circuit");
    for (int e : circuit) {
      if (e < 0 || e >= m) throw InvalidInput("circuit references edge out of range");
      if (covered[e]) throw InvalidInput("edge " + std::to_string(e) + " used twice");
      covered[e] = true;
    }
    // Try the stored orientation of the first edge, then the reverse.
    const auto [f0, f1] = g.edges[circuit.front()];
    bool oriented = false;
    for (VertexId start : {f0, f1}) {
      std::vector<Arc> local;
      VertexId cur = start;
      bool ok = true;
      for (int e : circuit) {
        auto [u, v] = g.edges[e];
        if (u == cur) {
          local.push_back({u, v});
          cur = v;
        } else if (v == cur) {
          local.push_back({v, u});
          cur = u;
        } else {
          ok = false;
          break;
        }
      }
      if (ok && cur == start) {
        for (std::size_t i = 0; i < circuit.size(); ++i) arcs[circuit[i]] = local[i];
        oriented = true;
        break;
      }
    }
    if (!oriented) throw InvalidInput("listed edges do not form a closed trail");
  }
  for (int e = 0; e < m; ++e)
    if (!covered[e]) throw InvalidInput("edge " + std::to_string(e) + " is not covered");

  Digraph d(g.n, std::move(arcs));
  std::vector<DirectedCircuit> directed(c.begin(), c.end());
  CircuitDecomposition dc(d, std::move(directed));
  return {std::move(d), std::move(dc)};
}

}  // namespace relemb
