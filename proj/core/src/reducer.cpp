#include "relemb/reducer.hpp"

#include <algorithm>
#include <optional>

#include "relemb/degeneracy.hpp"
#include "relemb/errors.hpp"
#include "relemb/interlace.hpp"
#include "relemb/surgery.hpp"
#include "relemb/touch_graph.hpp"

namespace relemb {

const char* to_string(ReduceOutcome outcome) {
  switch (outcome) {
    case ReduceOutcome::reduced: return "reduced";
    case ReduceOutcome::dead_end: return "dead_end";
    case ReduceOutcome::no_progress: return "no_progress";
  }
  return "?";
}

namespace {

// Signals that the current case cannot continue.
struct DeadEnd {
  std::string why;
};

class Machine {
 public:
  Machine(const Embedding& start, const CircuitDecomposition& c, ReduceOptions options)
      : cur_(start), c_(c), options_(options) {
    const DensityProfile dp = density_profile(cur_.digraph());
    n_ = dp.n;
    k_ = dp.k;
    connected_ = validate(cur_.digraph()).connected;
  }

  ReductionResult run() {
    const int bound = 8 * std::max(cur_.num_antifaces(), 1);
    ReduceOutcome outcome = ReduceOutcome::reduced;
    std::string diagnostic;
    try {
      while (cur_.num_antifaces() > 2) {
        if (static_cast<int>(trace_.size()) >= bound) {
          diagnostic = "iteration guard of " + std::to_string(bound) + " steps exceeded with " +
                       std::to_string(cur_.num_antifaces()) + " antifaces left";
          if (options_.mode == ReduceMode::strict) throw NoProgressError(diagnostic);
          outcome = ReduceOutcome::no_progress;
          break;
        }
        step();
      }
    } catch (const DeadEnd& d) {
      diagnostic = "case " + trace_.current_case() + ": " + d.why;
      if (options_.mode == ReduceMode::strict) throw NoProgressError(diagnostic);
      outcome = ReduceOutcome::dead_end;
    } catch (const HypothesisError& err) {
      diagnostic = "case " + trace_.current_case() + ": " + err.what();
      if (options_.mode == ReduceMode::strict) throw NoProgressError(diagnostic);
      outcome = ReduceOutcome::dead_end;
    }
    return ReductionResult{cur_, c_, std::move(trace_), outcome, std::move(diagnostic)};
  }

 private:
  Embedding cur_;
  const CircuitDecomposition& c_;
  ReduceOptions options_;
  ReductionTrace trace_;
  int n_ = 0;
  int k_ = 0;
  bool connected_ = true;

  template <class Result>
  void adopt(Result&& r) {
    cur_ = std::move(r.embedding);
    if (options_.verify_each_step) {
      VerificationReport rep = verify_embedding(cur_, c_);
      if (!rep.ok()) throw InternalError("verification failed after a surgery: " + rep.summary());
    }
  }

  int size(FaceIndex f) const { return static_cast<int>(cur_.antiface_vertices(f).size()); }

  bool try_case1() {
    auto w = find_vertex_on_three_antifaces(cur_);
    if (!w) return false;
    trace_.set_case("1");
    adopt(merge_three_at_vertex(cur_, w->vertex, w->a, w->b, w->c, &trace_));
    return true;
  }

  bool merge(const std::optional<InterlacingCertificate>& cert) {
    if (!cert) return false;
    adopt(merge_interlaced(cur_, *cert, &trace_));
    return true;
  }

  VertexId lowest_common(FaceIndex a, FaceIndex b) const {
    for (VertexId v : cur_.antiface_vertices(a))
      if (cur_.antiface_contains(b, v)) return v;
    throw DeadEnd{"antifaces share no vertex"};
  }

  TouchGraph touch_graph() const {
    TouchGraph k = build_touch_graph(cur_);
    if (k.num_edges() != n_) throw InternalError("touch graph edge count differs from |V(D)|");
    if (connected_ && !k.connected()) throw InternalError("touch graph of a connected digraph is disconnected");
    for (FaceIndex f = 0; f < k.num_nodes(); ++f)
      if (k.loops_at(f) > 0 && size(f) < n_ - k_)
        throw InternalError("antiface with a loop in the touch graph has fewer than n - k vertices");
    return k;
  }

  // Exactly one looped node with at least two neighbors, or -1.
  static FaceIndex final_case_node(const TouchGraph& k) {
    TouchClassification cls = classify(k);
    if (cls.loop_nodes.size() != 1) return -1;
    FaceIndex a = cls.loop_nodes[0];
    return k.neighbors(a).size() >= 2 ? a : -1;
  }

  void step() {
    if (try_case1()) return;
    TouchGraph k = touch_graph();
    TouchClassification cls = classify(k);
    if (cls.loop_nodes.empty()) {
      if (!cls.is_star)
        case21(cls.pair_a, cls.pair_b);
      else
        case22(k, cls.star_center);
    } else if (cls.loop_nodes.size() >= 2) {
      case31(k, cls.loop_nodes);
    } else {
      FaceIndex a = cls.loop_nodes[0];
      std::vector<FaceIndex> nb = k.neighbors(a);
      if (nb.size() == 1)
        case321(k, a, nb[0]);
      else
        case322(k, a);
    }
  }

  void case21(FaceIndex a, FaceIndex b) {
    TypeTable types(cur_);
    const int ab = static_cast<int>(types.common(a, b).size());
    std::optional<InterlacingCertificate> cert;
    if (ab <= k_) {
      trace_.set_case("2.1.1");
      cert = check_three_neighbor_corollary(cur_, a);
    } else if (ab >= 3 * k_ + 4) {
      trace_.set_case("2.1.2");
      cert = check_diamond_corollary(cur_, a, b);
    } else if (ab == 3 * k_ + 3) {
      trace_.set_case("2.1.3");
      if (k_ == 0)
        cert = check_diamond_corollary(cur_, a, b);
      else
        cert = degeneracy_route(types, a, b);
    } else {
      trace_.set_case("2.1.4");
      cert = check_three_neighbor_corollary(cur_, a);
    }
    if (!merge(cert)) throw DeadEnd{"no interlaced pair from the corollary for |AB| = " + std::to_string(ab)};
  }

  // Bipartite graph between A\B and AB, peeled to minimum degree 3, then the
  // Three Neighbor Lemma on the survivors.
  std::optional<InterlacingCertificate> degeneracy_route(const TypeTable& types, FaceIndex a,
                                                         FaceIndex b) {
    const std::vector<VertexId> va = types.vertices(a);
    const std::vector<VertexId> ab = types.common(a, b);
    SimpleGraph g = underlying_simple_graph(cur_.digraph());
    SimpleGraph h(static_cast<int>(va.size()));
    auto local = [&](VertexId v) {
      return static_cast<int>(std::lower_bound(va.begin(), va.end(), v) - va.begin());
    };
    for (VertexId u : types.minus(a, b))
      for (VertexId v : ab)
        if (g.adjacent(u, v)) h.add_edge(local(u), local(v));
    std::vector<VertexId> survivors = extract_dense_subgraph(h, 2);
    std::vector<VertexId> s;
    for (int i : survivors) s.push_back(va[i]);
    return three_neighbor_search(cur_, a, s);
  }

  void case22(const TouchGraph& k, FaceIndex a) {
    trace_.set_case("2.2");
    FaceIndex b = -1;
    for (FaceIndex p = 0; p < k.num_nodes(); ++p)
      if (p != a && (b < 0 || k.multiplicity(a, p) > k.multiplicity(a, b))) b = p;
    if (size(a) - k.multiplicity(a, b) >= k_ + 3) {
      if (!merge(check_three_neighbor_corollary(cur_, a)))
        throw DeadEnd{"three neighbor corollary not applicable"};
      return;
    }
    FaceIndex c = -1;
    for (FaceIndex p = 0; p < k.num_nodes() && c < 0; ++p)
      if (p != a && p != b) c = p;
    const ArcId b_anchor = cur_.antifaces()[b].anchor();
    BlowUpResult r = blow_up(cur_, a, c, lowest_common(a, c), &trace_);
    const FaceIndex p1 = r.new_a, p2 = r.new_b;
    adopt(std::move(r));
    if (try_case1()) return;
    TypeTable types(cur_);
    const bool first = types.only(p1).size() >= types.only(p2).size();
    const FaceIndex looped = first ? p1 : p2, other = first ? p2 : p1;
    if (types.only(looped).empty()) return;  // no loops now: the next step is Case 2.1
    trace_.set_case("2.2");
    merge(check_big_moderate(cur_, looped, cur_.antiface_of(b_anchor), other));
  }

  void case31(const TouchGraph& k, const std::vector<FaceIndex>& loops) {
    trace_.set_case("3.1");
    for (FaceIndex a : loops) {
      for (FaceIndex c : k.neighbors(a)) {
        FaceIndex b = -1;
        for (FaceIndex l : loops)
          if (l != a && l != c) {
            b = l;
            break;
          }
        if (b < 0) continue;
        const ArcId b_anchor = cur_.antifaces()[b].anchor();
        BlowUpResult r = blow_up(cur_, a, c, lowest_common(a, c), &trace_);
        const FaceIndex p1 = r.new_a, p2 = r.new_b;
        adopt(std::move(r));
        if (try_case1()) return;
        trace_.set_case("3.1");
        merge(check_big_moderate(cur_, cur_.antiface_of(b_anchor), p1, p2));
        return;
      }
    }
    throw DeadEnd{"no looped antiface has a neighbor outside the looped pair"};
  }

  void case321(const TouchGraph& k, FaceIndex a, FaceIndex b) {
    trace_.set_case("3.2.1");
    FaceIndex c = -1;
    for (FaceIndex p : k.neighbors(b))
      if (p != a) {
        c = p;
        break;
      }
    if (c < 0) throw DeadEnd{"the neighbor of the looped antiface has no other neighbor"};
    const ArcId a_anchor = cur_.antifaces()[a].anchor();
    BlowUpResult r = blow_up(cur_, b, c, lowest_common(b, c), &trace_);
    const FaceIndex p1 = r.new_a, p2 = r.new_b;
    adopt(std::move(r));
    if (try_case1()) return;
    trace_.set_case("3.2.1");
    merge(check_big_moderate(cur_, cur_.antiface_of(a_anchor), p1, p2));
  }

  void case322(const TouchGraph& k, FaceIndex a) {
    trace_.set_case("3.2.2");
    const FaceIndex b = k.neighbors(a).front();
    BlowUpResult r1 = blow_up(cur_, a, b, lowest_common(a, b), &trace_);
    const FaceIndex q1 = r1.new_a, q2 = r1.new_b;
    adopt(std::move(r1));
    if (try_case1()) return;

    const FaceIndex looped = final_case_node(touch_graph());
    if (looped != q1 && looped != q2) return;  // an earlier case applies now
    const FaceIndex other = looped == q1 ? q2 : q1;
    FaceIndex c = -1;
    for (FaceIndex p : touch_graph().neighbors(looped))
      if (p != other) {
        c = p;
        break;
      }
    if (c < 0) return;
    const ArcId other_anchor = cur_.antifaces()[other].anchor();
    trace_.set_case("3.2.2");
    BlowUpResult r2 = blow_up(cur_, looped, c, lowest_common(looped, c), &trace_);
    const FaceIndex s1 = r2.new_a, s2 = r2.new_b;
    adopt(std::move(r2));
    if (try_case1()) return;

    const FaceIndex looped2 = final_case_node(touch_graph());
    if (looped2 != s1 && looped2 != s2) return;
    trace_.set_case("3.2.2");
    merge(check_big_moderate(cur_, looped2, cur_.antiface_of(other_anchor), looped2 == s1 ? s2 : s1));
  }
};

void strict_precheck(const Digraph& d) {
  DigraphReport rep = validate(d);
  if (!rep.balanced) throw HypothesisError("digraph is not eulerian: unbalanced vertex");
  if (!rep.connected) throw HypothesisError("digraph is not connected");
  DensityProfile dp = density_profile(d);
  if (dp.n < 7) throw HypothesisError("strict mode needs n >= 7, got n = " + std::to_string(dp.n));
  if (!dp.dense)
    throw HypothesisError("digraph is not dense: n = " + std::to_string(dp.n) + ", delta = " +
                          std::to_string(dp.delta) + ", k = " + std::to_string(dp.k) +
                          " (needs n >= 5k + 7)");
}

}  // namespace

ReductionResult reduce_embedding(const Embedding& start, const CircuitDecomposition& c,
                                 ReduceOptions options) {
  const Digraph& d = start.digraph();
  if (options.mode == ReduceMode::strict) {
    strict_precheck(d);
  } else {
    DigraphReport rep = validate(d);
    if (!rep.eulerian()) throw HypothesisError("digraph is not eulerian");
  }
  if (start.profaces() != embed_from_decomposition(start.digraph_ptr(), c).profaces())
    throw InvalidInput("starting embedding does not realize the decomposition");
  return Machine(start, c, options).run();
}

ReductionResult reduce_to_upper_embedding(std::shared_ptr<const Digraph> d,
                                          const CircuitDecomposition& c, ReduceOptions options) {
  if (options.mode == ReduceMode::strict) strict_precheck(*d);
  if (d->num_vertices() <= 2) return small_order_embedding(d, c);
  return reduce_embedding(embed_from_decomposition(d, c), c, options);
}

ReductionResult reduce_to_upper_embedding(const Digraph& d, const CircuitDecomposition& c,
                                          ReduceOptions options) {
  return reduce_to_upper_embedding(std::make_shared<const Digraph>(d), c, options);
}

bool has_two_edge_cut(const Digraph& d) {
  if (d.num_vertices() != 2) return false;
  int forward = 0, backward = 0;
  for (const Arc& a : d.arcs()) {
    if (a.tail == 0 && a.head == 1) ++forward;
    if (a.tail == 1 && a.head == 0) ++backward;
  }
  return forward == 1 && backward == 1;
}

int two_edge_cut_formula(const Digraph& d, const CircuitDecomposition& c) {
  if (!has_two_edge_cut(d)) throw InvalidInput("digraph has no 2-edge-cut");
  int alpha[2] = {0, 0}, gamma[2] = {0, 0};
  for (const Arc& a : d.arcs())
    if (a.tail == a.head) ++alpha[a.tail];
  for (const auto& circuit : c.circuits()) {
    bool at[2] = {false, false};
    for (ArcId a : circuit) {
      at[d.tail(a)] = true;
      at[d.head(a)] = true;
    }
    for (int i = 0; i < 2; ++i)
      if (at[i] && !at[1 - i]) ++gamma[i];
  }
  return (alpha[0] + gamma[0]) % 2 + (alpha[1] + gamma[1]) % 2 + 1;
}

namespace {

// Three Face merges until locally irreducible, then, with two vertices and
// three antifaces left, the interlaced merge across the face through both.
Embedding small_part_a(std::shared_ptr<const Digraph> d, const CircuitDecomposition& c,
                       ReductionTrace* trace) {
  Embedding e = embed_from_decomposition(d, c);
  if (trace) trace->set_case("small.a");
  while (auto w = find_vertex_on_three_antifaces(e))
    e = merge_three_at_vertex(e, w->vertex, w->a, w->b, w->c, trace).embedding;
  if (e.num_antifaces() <= 2) return e;
  if (d->num_vertices() != 2 || e.num_antifaces() != 3)
    throw InternalError("locally irreducible small embedding with too many antifaces");
  FaceIndex both = -1, at0 = -1, at1 = -1;
  for (FaceIndex f = 0; f < 3; ++f) {
    bool on0 = e.antiface_contains(f, 0), on1 = e.antiface_contains(f, 1);
    if (on0 && on1) both = f;
    else if (on0) at0 = f;
    else at1 = f;
  }
  if (both < 0 || at0 < 0 || at1 < 0) throw InternalError("unexpected antiface layout on two vertices");
  return merge_interlaced(e, both, at0, at1, 0, 1, trace).embedding;
}

}  // namespace

ReductionResult small_order_embedding(std::shared_ptr<const Digraph> d,
                                      const CircuitDecomposition& c) {
  if (d->num_vertices() > 2) throw InvalidInput("small order embedding needs at most two vertices");
  if (!validate(*d).eulerian()) throw InvalidInput("digraph is not eulerian");
  ReductionTrace trace;
  if (!has_two_edge_cut(*d)) {
    Embedding e = small_part_a(d, c, &trace);
    return ReductionResult{std::move(e), c, std::move(trace), ReduceOutcome::reduced, {}};
  }

  // Two-edge-cut reduction: a = v0 -> v1 and b = v1 -> v0. Each side keeps its
  // loops plus one new loop standing for the excursion through the cut.
  ArcId a = -1, b = -1;
  for (ArcId i = 0; i < d->num_arcs(); ++i) {
    if (d->tail(i) == 0 && d->head(i) == 1) a = i;
    if (d->tail(i) == 1 && d->head(i) == 0) b = i;
  }
  struct Side {
    std::vector<ArcId> original;  // local arc -> arc of D; the last one is the new loop
    std::vector<DirectedCircuit> circuits;
  };
  Side side[2];
  std::vector<int> local(d->num_arcs(), -1);
  for (ArcId i = 0; i < d->num_arcs(); ++i) {
    if (d->tail(i) != d->head(i)) continue;
    Side& s = side[d->tail(i)];
    local[i] = static_cast<int>(s.original.size());
    s.original.push_back(i);
  }
  for (Side& s : side) s.original.push_back(-1);
  for (const auto& circuit : c.circuits()) {
    auto it = std::find(circuit.begin(), circuit.end(), a);
    if (it == circuit.end()) {
      Side& s = side[d->tail(circuit.front())];
      DirectedCircuit mapped;
      for (ArcId x : circuit) mapped.push_back(local[x]);
      s.circuits.push_back(std::move(mapped));
      continue;
    }
    DirectedCircuit rot(circuit.begin(), circuit.end());
    std::rotate(rot.begin(), rot.begin() + (it - circuit.begin()), rot.end());
    auto bit = std::find(rot.begin(), rot.end(), b);
    DirectedCircuit c0{static_cast<ArcId>(side[0].original.size() - 1)};
    DirectedCircuit c1{static_cast<ArcId>(side[1].original.size() - 1)};
    for (auto x = bit + 1; x != rot.end(); ++x) c0.push_back(local[*x]);
    for (auto x = rot.begin() + 1; x != bit; ++x) c1.push_back(local[*x]);
    side[0].circuits.push_back(std::move(c0));
    side[1].circuits.push_back(std::move(c1));
  }

  RotationSystem rs;
  rs.rotations.resize(2);
  int sub_faces[2] = {0, 0};
  for (int v = 0; v < 2; ++v) {
    const Side& s = side[v];
    const int m = static_cast<int>(s.original.size());
    auto sub = std::make_shared<const Digraph>(1, std::vector<Arc>(m, Arc{0, 0}));
    CircuitDecomposition sc(*sub, s.circuits);
    Embedding se = small_part_a(sub, sc, nullptr);
    sub_faces[v] = se.num_antifaces();
    for (HalfArcId h : se.rotation(0)) {
      ArcId la = arc_of(h);
      if (la == m - 1) {
        // v0's loop: out stands for a, in for b. v1's loop: out for b, in for a.
        ArcId out_arc = v == 0 ? a : b, in_arc = v == 0 ? b : a;
        rs.rotations[v].push_back(is_outgoing(h) ? out_half(out_arc) : in_half(in_arc));
      } else {
        rs.rotations[v].push_back(2 * s.original[la] + (h & 1));
      }
    }
  }
  Embedding e(d, std::move(rs));
  if (e.profaces() != embed_from_decomposition(d, c).profaces())
    throw InternalError("2-edge-cut splice changed the profaces");
  if (e.num_antifaces() != sub_faces[0] + sub_faces[1] - 1 ||
      e.num_antifaces() != two_edge_cut_formula(*d, c))
    throw InternalError("2-edge-cut splice produced the wrong antiface count");
  trace.set_case("small.b");
  trace.record("two_edge_cut_splice", embed_from_decomposition(d, c).num_antifaces(), e.num_antifaces(),
               {{"cut", {a, b}}, {"parts", {sub_faces[0], sub_faces[1]}}});
  return ReductionResult{std::move(e), c, std::move(trace), ReduceOutcome::reduced, {}};
}

ReductionResult small_order_embedding(const Digraph& d, const CircuitDecomposition& c) {
  return small_order_embedding(std::make_shared<const Digraph>(d), c);
}

ReductionResult relative_upper_from_partial(const Digraph& d,
                                            const std::vector<DirectedCircuit>& partial,
                                            ReduceOptions options) {
  std::vector<bool> mask(d.num_arcs(), true);
  for (const auto& circuit : partial) {
    validate_circuit(d, circuit);
    for (ArcId a : circuit) {
      if (!mask[a]) throw InvalidInput("circuits overlap on arc " + std::to_string(a));
      mask[a] = false;
    }
  }
  std::vector<DirectedCircuit> all = partial;
  for (auto& extra : euler_circuits(d, mask)) all.push_back(std::move(extra));
  CircuitDecomposition c(d, std::move(all));
  return reduce_to_upper_embedding(d, c, options);
}

UndirectedReduction undirected_upper_embedding(const UndirectedGraph& g,
                                               const std::vector<UndirectedCircuit>& c,
                                               ReduceOptions options) {
  Orientation o = eulerian_orientation(g, c);
  ReductionResult r = reduce_to_upper_embedding(o.digraph, o.circuits, options);
  return UndirectedReduction{std::move(o), std::move(r)};
}

}  // namespace relemb
