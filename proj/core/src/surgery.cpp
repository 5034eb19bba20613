#include "relemb/surgery.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "relemb/division.hpp"
#include "relemb/errors.hpp"

namespace relemb {

std::vector<HalfArcId> three_segment_swap(std::span<const HalfArcId> rotation, HalfArcId ha,
                                          HalfArcId hb, HalfArcId hc) {
  const int len = static_cast<int>(rotation.size());
  auto find = [&](HalfArcId h) {
    auto it = std::find(rotation.begin(), rotation.end(), h);
    if (it == rotation.end() || !is_outgoing(h))
      throw InvalidInput("cut " + std::to_string(h) + " is not an outgoing half-arc of the rotation");
    return static_cast<int>(it - rotation.begin());
  };
  const int pa = find(ha);
  int jb = (find(hb) - pa + len) % len;
  int jc = (find(hc) - pa + len) % len;
  if (jb == 0 || jc == 0 || jb == jc) throw InvalidInput("three-segment swap needs distinct cuts");
  if (jb > jc) std::swap(jb, jc);
  std::vector<HalfArcId> rotated(len);
  for (int i = 0; i < len; ++i) rotated[i] = rotation[(pa + i) % len];
  std::vector<HalfArcId> out;
  out.reserve(len);
  out.insert(out.end(), rotated.begin(), rotated.begin() + jb);
  out.insert(out.end(), rotated.begin() + jc, rotated.end());
  out.insert(out.end(), rotated.begin() + jb, rotated.begin() + jc);
  return out;
}

namespace {

using Witnesses = std::vector<std::pair<std::string, std::vector<int>>>;

void require_face(const Embedding& e, FaceIndex f, const char* name) {
  if (f < 0 || f >= e.num_antifaces())
    throw InvalidInput(std::string("antiface ") + name + " = " + std::to_string(f) +
                       " out of range");
}

// Lowest incoming half-arc at v that lies on antiface f.
HalfArcId entry_at(const Embedding& e, FaceIndex f, VertexId v) {
  for (HalfArcId h : e.digraph().in_halves(v))
    if (e.antiface_of(arc_of(h)) == f) return h;
  throw InvalidInput("antiface " + std::to_string(f) + " does not visit vertex " +
                     std::to_string(v));
}

// Arcs of face f rotated to start at the arc of outgoing half-arc h.
std::vector<ArcId> walk_from(const Embedding& e, FaceIndex f, HalfArcId h) {
  std::vector<ArcId> arcs = e.antifaces()[f].arcs();
  auto it = std::find(arcs.begin(), arcs.end(), arc_of(h));
  if (it == arcs.end()) throw InternalError("half-arc not on the expected face");
  std::rotate(arcs.begin(), it, arcs.end());
  return arcs;
}

Embedding with_rotation(const Embedding& e, VertexId v, std::vector<HalfArcId> rot) {
  RotationSystem rs = e.rotation_system();
  rs.rotations[v] = std::move(rot);
  return Embedding(e.digraph_ptr(), std::move(rs));
}

std::vector<FaceIndex> map_faces(const Embedding& before, const Embedding& after) {
  std::vector<FaceIndex> out;
  out.reserve(before.num_antifaces());
  for (const FaceWalk& f : before.antifaces()) out.push_back(after.antiface_of(f.anchor()));
  return out;
}

bool present(const Embedding& e, const FaceWalk& w) {
  FaceIndex f = e.antiface_with_anchor(w.anchor());
  return f >= 0 && e.antifaces()[f].arcs() == w.arcs();
}

// Postconditions shared by all surgeries: profaces identical, every untouched
// antiface identical, the expected new antifaces present, count delta exact.
void check_surgery(const char* op, const Embedding& before, const Embedding& after,
                   const std::vector<FaceIndex>& touched, const std::vector<FaceWalk>& expected,
                   int delta) {
  auto fail = [&](const std::string& what) {
    throw InternalError(std::string(op) + " postcondition violated: " + what);
  };
  if (before.profaces() != after.profaces()) fail("profaces changed");
  if (after.num_antifaces() != before.num_antifaces() + delta)
    fail("antiface count " + std::to_string(after.num_antifaces()) + ", expected " +
         std::to_string(before.num_antifaces() + delta));
  for (FaceIndex f = 0; f < before.num_antifaces(); ++f) {
    if (std::find(touched.begin(), touched.end(), f) != touched.end()) continue;
    if (!present(after, before.antifaces()[f])) fail("untouched antiface " + std::to_string(f) + " changed");
  }
  for (const FaceWalk& w : expected)
    if (!present(after, w)) fail("expected antiface with anchor " + std::to_string(w.anchor()) + " missing");
}

std::vector<int> anchors(const Embedding& e, std::initializer_list<FaceIndex> faces) {
  std::vector<int> out;
  for (FaceIndex f : faces) out.push_back(e.antifaces()[f].anchor());
  return out;
}

std::vector<ArcId> concat(std::vector<ArcId> x, const std::vector<ArcId>& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

}  // namespace

SurgeryResult merge_three_at_vertex(const Embedding& e, VertexId v, FaceIndex a, FaceIndex b,
                                    FaceIndex c, ReductionTrace* trace) {
  require_face(e, a, "A");
  require_face(e, b, "B");
  require_face(e, c, "C");
  if (a == b || b == c || a == c) throw InvalidInput("merge needs three distinct antifaces");
  if (v < 0 || v >= e.digraph().num_vertices()) throw InvalidInput("vertex out of range");

  struct Cut {
    FaceIndex face;
    HalfArcId h;
  };
  std::array<Cut, 3> cuts{};
  FaceIndex ids[3] = {a, b, c};
  for (int i = 0; i < 3; ++i) cuts[i] = {ids[i], e.cw_next(entry_at(e, ids[i], v))};
  // Cyclic order of the cuts, starting from A's.
  const int len = static_cast<int>(e.rotation(v).size());
  const int base = e.position(cuts[0].h);
  std::sort(cuts.begin() + 1, cuts.end(), [&](const Cut& x, const Cut& y) {
    return (e.position(x.h) - base + len) % len < (e.position(y.h) - base + len) % len;
  });

  Embedding out = with_rotation(e, v, three_segment_swap(e.rotation(v), cuts[0].h, cuts[1].h, cuts[2].h));
  FaceWalk merged(FaceColor::antiface,
                  concat(concat(walk_from(e, cuts[0].face, cuts[0].h), walk_from(e, cuts[1].face, cuts[1].h)),
                         walk_from(e, cuts[2].face, cuts[2].h)));
  check_surgery("merge_three_at_vertex", e, out, {a, b, c}, {merged}, -2);

  if (trace)
    trace->record("merge_three", e.num_antifaces(), out.num_antifaces(),
                  Witnesses{{"vertex", {v}}, {"faces", anchors(e, {a, b, c})}});
  auto map = map_faces(e, out);
  return {std::move(out), std::move(map)};
}

SplitSwapResult split_swap(const Embedding& e, VertexId v, FaceIndex a, FaceSplit split,
                           FaceIndex b, ReductionTrace* trace) {
  require_face(e, a, "A");
  require_face(e, b, "B");
  if (a == b) throw InvalidInput("split_swap needs two distinct antifaces");
  const auto& arcs = e.antifaces()[a].arcs();
  const int t = static_cast<int>(arcs.size());
  if (split.first < 0 || split.first >= t || split.second < 0 || split.second >= t ||
      split.first == split.second)
    throw InvalidInput("invalid split of antiface " + std::to_string(a));
  const Digraph& d = e.digraph();
  if (d.tail(arcs[split.first]) != v || d.tail(arcs[split.second]) != v)
    throw InvalidInput("split positions of antiface " + std::to_string(a) +
                       " are not anchored at vertex " + std::to_string(v));
  if (!e.antiface_contains(b, v))
    throw InvalidInput("antiface " + std::to_string(b) + " does not visit vertex " + std::to_string(v));

  auto part = [&](int from, int to) {
    std::vector<ArcId> out;
    for (int i = from; i != to; i = (i + 1) % t) out.push_back(arcs[i]);
    return out;
  };
  const std::vector<ArcId> a1 = part(split.first, split.second);
  const std::vector<ArcId> a2 = part(split.second, split.first);
  const HalfArcId h1 = out_half(arcs[split.first]);
  const HalfArcId h2 = out_half(arcs[split.second]);
  const HalfArcId hb = e.cw_next(entry_at(e, b, v));

  const int len = static_cast<int>(e.rotation(v).size());
  auto rel = [&](HalfArcId h) { return (e.position(h) - e.position(h1) + len) % len; };
  // Clockwise order (A1, B, A2) joins A2 with B; otherwise A1 joins B.
  const int joined = rel(hb) < rel(h2) ? 2 : 1;

  Embedding out = with_rotation(e, v, three_segment_swap(e.rotation(v), h1, hb, h2));
  const std::vector<ArcId> b_walk = walk_from(e, b, hb);
  FaceWalk joined_walk(FaceColor::antiface, concat(joined == 2 ? a2 : a1, b_walk));
  FaceWalk kept_walk(FaceColor::antiface, joined == 2 ? a1 : a2);
  check_surgery("split_swap", e, out, {a, b}, {joined_walk, kept_walk}, 0);

  if (trace)
    trace->record("split_swap", e.num_antifaces(), out.num_antifaces(),
                  Witnesses{{"vertex", {v}},
                            {"faces", anchors(e, {a, b})},
                            {"split", {split.first, split.second}},
                            {"joined", {joined}}});
  SplitSwapResult r{std::move(out), {}, joined, 3 - joined, -1, -1};
  r.antiface_map = map_faces(e, r.embedding);
  r.joined_face = r.embedding.antiface_with_anchor(joined_walk.anchor());
  r.kept_face = r.embedding.antiface_with_anchor(kept_walk.anchor());
  return r;
}

SurgeryResult merge_interlaced(const Embedding& e, const InterlacingCertificate& cert,
                               ReductionTrace* trace) {
  std::string problem = certificate_problem(e, cert);
  if (!problem.empty()) throw InvalidInput("interlacing certificate invalid: " + problem);
  if (cert.x_companion < 0 || cert.y_companion < 0)
    throw InvalidInput("interlaced merge needs both companion faces");
  const auto& arcs = e.antifaces()[cert.face].arcs();

  SplitSwapResult s = split_swap(e, cert.x, cert.face, {cert.positions[0], cert.positions[2]},
                                 cert.x_companion);
  const Embedding& mid = s.embedding;
  FaceIndex f0 = mid.antiface_of(arcs[cert.positions[0]]);
  FaceIndex f2 = mid.antiface_of(arcs[cert.positions[2]]);
  FaceIndex fc = s.antiface_map[cert.y_companion];
  SurgeryResult r = merge_three_at_vertex(mid, cert.y, f0, f2, fc);

  std::vector<ArcId> expected;
  for (FaceIndex f : {cert.face, cert.x_companion, cert.y_companion}) {
    const auto& w = e.antifaces()[f].arcs();
    expected.insert(expected.end(), w.begin(), w.end());
  }
  std::sort(expected.begin(), expected.end());
  check_surgery("merge_interlaced", e, r.embedding, {cert.face, cert.x_companion, cert.y_companion},
                {}, -2);
  std::vector<ArcId> merged = r.embedding.antifaces()[r.embedding.antiface_of(arcs[0])].arcs();
  std::sort(merged.begin(), merged.end());
  if (merged != expected)
    throw InternalError("merge_interlaced postcondition violated: merged face is not A, B and C combined");

  if (trace)
    trace->record("merge_interlaced", e.num_antifaces(), r.embedding.num_antifaces(),
                  Witnesses{{"x", {cert.x}},
                            {"y", {cert.y}},
                            {"faces", anchors(e, {cert.face, cert.x_companion, cert.y_companion})},
                            {"positions", {cert.positions.begin(), cert.positions.end()}},
                            {"joined", {s.joined}}});
  r.antiface_map = map_faces(e, r.embedding);
  return r;
}

SurgeryResult merge_interlaced(const Embedding& e, FaceIndex a, FaceIndex b, FaceIndex c,
                               VertexId x, VertexId y, ReductionTrace* trace) {
  require_face(e, a, "A");
  require_face(e, b, "B");
  require_face(e, c, "C");
  if (a == b || b == c || a == c) throw InvalidInput("interlaced merge needs three distinct antifaces");
  if (x == y) throw InvalidInput("interlacing requires two distinct vertices");
  auto cert = find_interlacing(e, a, x, y);
  if (!cert)
    throw InvalidInput("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                       " are not interlaced on antiface " + std::to_string(a));
  if (!e.antiface_contains(b, x)) throw InvalidInput("x does not lie on B");
  if (!e.antiface_contains(c, y)) throw InvalidInput("y does not lie on C");
  cert->x_companion = b;
  cert->y_companion = c;
  return merge_interlaced(e, *cert, trace);
}

BlowUpResult blow_up(const Embedding& e, FaceIndex a, FaceIndex b, VertexId x, ReductionTrace* trace) {
  require_face(e, a, "A");
  require_face(e, b, "B");
  const Digraph& d = e.digraph();
  if (a == b) throw HypothesisError("blow up needs two distinct antifaces");
  if (!e.locally_irreducible()) throw HypothesisError("blow up needs a locally irreducible embedding");
  if (x < 0 || x >= d.num_vertices() || !e.antiface_contains(a, x) || !e.antiface_contains(b, x))
    throw HypothesisError("vertex " + std::to_string(x) + " is not of type AB");
  const int n = d.num_vertices();
  const int k = density_profile(d).k;
  const int a_size = static_cast<int>(e.antiface_vertices(a).size());
  const int b_size = static_cast<int>(e.antiface_vertices(b).size());
  if (a_size < 5) throw HypothesisError("blow up needs |V(A)| >= 5, got " + std::to_string(a_size));
  if (n < k + 3) throw HypothesisError("blow up needs n >= k + 3");

  const std::vector<VertexId> walk = e.antifaces()[a].vertex_walk(d);
  const int t = static_cast<int>(walk.size());
  auto at = [&](int i) { return walk[((i % t) + t) % t]; };

  std::vector<char> in_y(n, 0);
  for (int i = 0; i < t; ++i) {
    if (walk[i] != x) continue;
    if (at(i - 1) != x) in_y[at(i - 1)] = 1;
    if (at(i + 1) != x) in_y[at(i + 1)] = 1;
  }
  std::vector<PointColor> colors(t, PointColor::none);
  std::vector<char> done(n, 0);
  std::vector<int> reds;
  int num_y = 0;
  for (int i = 0; i < t; ++i) {
    VertexId v = walk[i];
    if (v == x) {
      colors[i] = PointColor::black;
    } else if (in_y[v]) {
      if (!done[v] && (at(i - 1) == x || at(i + 1) == x)) {
        colors[i] = PointColor::white;
        done[v] = 1;
        ++num_y;
      }
    } else if (!done[v]) {
      colors[i] = PointColor::red;
      done[v] = 1;
      reds.push_back(i);
    }
  }
  const int num_z = static_cast<int>(reds.size());

  auto unchanged = [&] {
    if (trace)
      trace->record("blow_up", e.num_antifaces(), e.num_antifaces(),
                    Witnesses{{"x", {x}}, {"faces", anchors(e, {a, b})}, {"yz", {num_y, num_z}}, {"unchanged", {1}}});
    std::vector<FaceIndex> id(e.num_antifaces());
    for (int i = 0; i < e.num_antifaces(); ++i) id[i] = i;
    return BlowUpResult{e, std::move(id), true, a, b};
  };

  int ell = 0;
  if (num_y > num_z) {
    ell = a_size - 1;
  } else {
    if (2 * b_size >= n - k - 1) return unchanged();
    // Keep the |Y| - 1 lowest red positions.
    for (std::size_t i = static_cast<std::size_t>(std::max(num_y - 1, 0)); i < reds.size(); ++i)
      colors[reds[i]] = PointColor::none;
    ell = 2 * num_y - 1;
  }
  DivisionResult div = division_search(colors, 2, ell / 2.0);
  SplitSwapResult s = split_swap(e, x, a, {div.first, div.second}, b);

  const Embedding& out = s.embedding;
  const int bound = std::min(a_size - 2, n - k - 1);  // twice the guaranteed size
  for (FaceIndex f : {s.joined_face, s.kept_face}) {
    if (2 * static_cast<int>(out.antiface_vertices(f).size()) < bound)
      throw InternalError("blow up produced a face with too few vertices");
    if (!out.antiface_contains(f, x)) throw InternalError("blow up lost x from a new face");
  }
  std::set<VertexId> before_union(e.antiface_vertices(a).begin(), e.antiface_vertices(a).end());
  before_union.insert(e.antiface_vertices(b).begin(), e.antiface_vertices(b).end());
  std::set<VertexId> after_union(out.antiface_vertices(s.joined_face).begin(),
                                 out.antiface_vertices(s.joined_face).end());
  after_union.insert(out.antiface_vertices(s.kept_face).begin(), out.antiface_vertices(s.kept_face).end());
  if (before_union != after_union) throw InternalError("blow up changed the vertex union");

  if (trace)
    trace->record("blow_up", e.num_antifaces(), out.num_antifaces(),
                  Witnesses{{"x", {x}},
                            {"faces", anchors(e, {a, b})},
                            {"yz", {num_y, num_z}},
                            {"black_pair", {div.first, div.second}},
                            {"q", {div.count}},
                            {"joined", {s.joined}}});
  return BlowUpResult{std::move(s.embedding), std::move(s.antiface_map), false, s.joined_face, s.kept_face};
}

}  // namespace relemb
