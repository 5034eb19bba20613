#include "relemb/interlace.hpp"

#include <algorithm>
#include <array>

#include "relemb/errors.hpp"

namespace relemb {

TypeTable::TypeTable(const Embedding& e) : num_faces_(e.num_antifaces()) {
  const int n = e.digraph().num_vertices();
  faces_at_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    const auto& at = e.antifaces_at(v);
    if (at.size() >= 3)
      throw HypothesisError("embedding is not locally irreducible: vertex " + std::to_string(v) +
                            " lies on " + std::to_string(at.size()) + " antifaces");
    faces_at_[v] = at;
  }
}

FaceIndex TypeTable::partner(VertexId v, FaceIndex f) const {
  for (FaceIndex g : faces_at_[v])
    if (g != f) return g;
  return -1;
}

bool TypeTable::on(VertexId v, FaceIndex f) const {
  const auto& at = faces_at_[v];
  return std::find(at.begin(), at.end(), f) != at.end();
}

std::vector<VertexId> TypeTable::vertices(FaceIndex a) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<int>(faces_at_.size()); ++v)
    if (on(v, a)) out.push_back(v);
  return out;
}

std::vector<VertexId> TypeTable::common(FaceIndex a, FaceIndex b) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<int>(faces_at_.size()); ++v)
    if (on(v, a) && on(v, b)) out.push_back(v);
  return out;
}

std::vector<VertexId> TypeTable::minus(FaceIndex a, FaceIndex b) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<int>(faces_at_.size()); ++v)
    if (on(v, a) && !on(v, b)) out.push_back(v);
  return out;
}

std::vector<VertexId> TypeTable::only(FaceIndex a) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<int>(faces_at_.size()); ++v)
    if (faces_at_[v].size() == 1 && faces_at_[v][0] == a) out.push_back(v);
  return out;
}

std::vector<VertexId> TypeTable::also(FaceIndex a) const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<int>(faces_at_.size()); ++v)
    if (faces_at_[v].size() == 2 && on(v, a)) out.push_back(v);
  return out;
}

std::optional<ThreeFaceWitness> find_vertex_on_three_antifaces(const Embedding& e) {
  for (VertexId v = 0; v < e.digraph().num_vertices(); ++v) {
    const auto& at = e.antifaces_at(v);
    if (at.size() >= 3) return ThreeFaceWitness{v, at[0], at[1], at[2]};
  }
  return std::nullopt;
}

bool face_edge(const Embedding& e, FaceIndex f, VertexId u, VertexId v) {
  if (u == v) return false;
  const Digraph& d = e.digraph();
  for (ArcId a : e.antifaces()[f].arcs()) {
    VertexId s = d.tail(a), t = d.head(a);
    if ((s == u && t == v) || (s == v && t == u)) return true;
  }
  return false;
}

namespace {

InterlacingCertificate certify(const Embedding& e, const TypeTable& types, FaceIndex a, VertexId x,
                               VertexId y, const char* who) {
  auto cert = find_interlacing(e, a, x, y);
  if (!cert)
    throw InternalError(std::string(who) + " selected vertices " + std::to_string(x) + " and " +
                        std::to_string(y) + " that are not interlaced");
  cert->x_companion = types.partner(x, a);
  cert->y_companion = types.partner(y, a);
  return *cert;
}

}  // namespace

InterlacingCertificate three_neighbor_search(const Embedding& e, FaceIndex a,
                                             const std::vector<VertexId>& s) {
  TypeTable types(e);
  const int n = e.digraph().num_vertices();
  std::vector<char> in_s(n, 0);
  for (VertexId v : s) {
    if (v < 0 || v >= n) throw InvalidInput("vertex out of range");
    if (types.partner(v, a) < 0 || !types.on(v, a))
      throw HypothesisError("vertex " + std::to_string(v) + " is not of general type A1");
    in_s[v] = 1;
  }
  if (s.empty()) throw HypothesisError("S must be nonempty");
  SimpleGraph g = underlying_simple_graph(e.digraph());
  for (VertexId v : s) {
    int cross = 0;
    for (VertexId w : g.neighbors(v))
      if (in_s[w] && types.partner(w, a) != types.partner(v, a)) ++cross;
    if (cross < 3)
      throw HypothesisError("vertex " + std::to_string(v) + " has only " + std::to_string(cross) +
                            " neighbors in S of a different type");
  }

  const std::vector<VertexId> w = simple_walk(e, a);
  const int len = static_cast<int>(w.size());
  int best_start = -1, best_len = len + 1;
  for (int i = 0; i < len; ++i) {
    if (!in_s[w[i]]) continue;
    bool other = false;
    for (int p = 1; p < len; ++p) {
      VertexId u = w[(i + p) % len];
      if (u == w[i]) {
        if (other && p < best_len) {
          best_len = p;
          best_start = i;
        }
        break;
      }
      if (in_s[u] && types.partner(u, a) != types.partner(w[i], a)) other = true;
    }
  }
  if (best_start < 0) throw InternalError("three neighbor search found no interval");
  const VertexId x = w[best_start];
  for (int p = 1; p < best_len; ++p) {
    VertexId y = w[(best_start + p) % len];
    if (in_s[y] && types.partner(y, a) != types.partner(x, a))
      return certify(e, types, a, x, y, "three neighbor search");
  }
  throw InternalError("three neighbor search lost its interior vertex");
}

InterlacingCertificate diamond_search(const Embedding& e, FaceIndex a, VertexId t, VertexId u,
                                      VertexId v, VertexId x) {
  TypeTable types(e);
  const int n = e.digraph().num_vertices();
  for (VertexId z : {t, u, v, x})
    if (z < 0 || z >= n) throw InvalidInput("vertex out of range");
  if (t == u || u == v || t == v) throw HypothesisError("t, u, v must be distinct");
  const FaceIndex c = types.partner(t, a);
  for (VertexId z : {t, u, v})
    if (!types.on(z, a) || c < 0 || types.partner(z, a) != c)
      throw HypothesisError("t, u, v must share one type AC");
  const FaceIndex b = types.partner(x, a);
  if (!types.on(x, a) || b < 0 || b == c) throw HypothesisError("x must be of type AB with B != C");
  if (!face_edge(e, a, t, u) || !face_edge(e, a, u, v))
    throw HypothesisError("tu and uv must be edges of usg(A)");
  SimpleGraph g = underlying_simple_graph(e.digraph());
  for (VertexId z : {t, u, v})
    if (!g.adjacent(x, z))
      throw HypothesisError("x is not adjacent to vertex " + std::to_string(z));

  std::vector<VertexId> w = simple_walk(e, a);
  const int len = static_cast<int>(w.size());
  auto at = [&](int i) { return w[((i % len) + len) % len]; };
  int start = -1;
  for (int i = 0; i < len && start < 0; ++i)
    if (w[i] == x && at(i + 1) == u) start = i;
  if (start < 0) {
    std::reverse(w.begin(), w.end());
    for (int i = 0; i < len && start < 0; ++i)
      if (w[i] == x && at(i + 1) == u) start = i;
  }
  if (start < 0) throw InternalError("diamond search: xu is not an edge of usg(A)");
  int span = len;  // I = w[start .. start + span], closing at the next x
  for (int p = 1; p < len; ++p)
    if (at(start + p) == x) {
      span = p;
      break;
    }
  auto in_interval = [&](VertexId p, VertexId q) {
    for (int s = 0; s < span; ++s) {
      VertexId y = at(start + s), z = at(start + s + 1);
      if ((y == p && z == q) || (y == q && z == p)) return true;
    }
    return false;
  };
  if (in_interval(x, t)) std::swap(t, v);
  const VertexId y = in_interval(t, u) ? t : u;
  return certify(e, types, a, x, y, "diamond search");
}

namespace {

int codegree(const Embedding& e) { return density_profile(e.digraph()).k; }

}  // namespace

std::optional<InterlacingCertificate> check_three_neighbor_corollary(const Embedding& e, FaceIndex a) {
  if (!e.locally_irreducible() || e.num_antifaces() < 3) return std::nullopt;
  TypeTable types(e);
  const int k = codegree(e);
  const std::vector<VertexId> a1 = types.also(a);
  for (FaceIndex p = 0; p < e.num_antifaces(); ++p) {
    if (p == a) continue;
    if (static_cast<int>(a1.size() - types.common(a, p).size()) < k + 3) return std::nullopt;
  }
  try {
    return three_neighbor_search(e, a, a1);
  } catch (const HypothesisError& err) {
    throw InternalError(std::string("three neighbor corollary hypotheses hold but search failed: ") +
                        err.what());
  }
}

std::optional<InterlacingCertificate> check_big_moderate(const Embedding& e, FaceIndex a,
                                                         FaceIndex b, FaceIndex c) {
  if (a == b || b == c || a == c) return std::nullopt;
  if (!e.locally_irreducible()) return std::nullopt;
  TypeTable types(e);
  const int n = e.digraph().num_vertices();
  const int k = codegree(e);
  auto size = [&](FaceIndex f) { return static_cast<int>(e.antiface_vertices(f).size()); };
  if (size(a) < n - k || size(b) < 2 * k + 3 || size(c) < 2 * k + 3) return std::nullopt;
  std::vector<VertexId> s = types.common(a, b);
  std::vector<VertexId> ac = types.common(a, c);
  s.insert(s.end(), ac.begin(), ac.end());
  std::sort(s.begin(), s.end());
  try {
    return three_neighbor_search(e, a, s);
  } catch (const HypothesisError& err) {
    throw InternalError(std::string("big and moderate hypotheses hold but search failed: ") +
                        err.what());
  }
}

std::optional<InterlacingCertificate> check_diamond_corollary(const Embedding& e, FaceIndex a,
                                                              FaceIndex b) {
  if (a == b || !e.locally_irreducible()) return std::nullopt;
  TypeTable types(e);
  const int k = codegree(e);
  const std::vector<VertexId> ab = types.common(a, b);
  const int m = static_cast<int>(ab.size());
  if (!((k == 0 && m >= 3) || m >= 3 * k + 4)) return std::nullopt;
  auto witness = [&](FaceIndex f, FaceIndex g) {
    for (VertexId v : types.also(f)) {
      FaceIndex p = types.partner(v, f);
      if (p != g) return v;
    }
    return -1;
  };
  const VertexId x = witness(a, b);
  const VertexId x2 = witness(b, a);
  if (x < 0 || x2 < 0) return std::nullopt;

  SimpleGraph g = underlying_simple_graph(e.digraph());
  std::vector<VertexId> s;
  for (VertexId v : ab)
    if (g.adjacent(v, x) && g.adjacent(v, x2)) s.push_back(v);

  // Three edges of H = usg(D)[S] pairwise sharing a vertex: a star at a
  // vertex of degree >= 3, else a triangle.
  std::vector<std::array<VertexId, 2>> edges;
  for (VertexId u : s) {
    std::vector<VertexId> nb;
    for (VertexId v : s)
      if (v != u && g.adjacent(u, v)) nb.push_back(v);
    if (nb.size() >= 3) {
      for (int i = 0; i < 3; ++i) edges.push_back({u, nb[i]});
      break;
    }
  }
  if (edges.empty()) {
    for (std::size_t i = 0; i < s.size() && edges.empty(); ++i)
      for (std::size_t j = i + 1; j < s.size() && edges.empty(); ++j)
        for (std::size_t l = j + 1; l < s.size() && edges.empty(); ++l)
          if (g.adjacent(s[i], s[j]) && g.adjacent(s[j], s[l]) && g.adjacent(s[i], s[l]))
            edges = {{s[i], s[j]}, {s[j], s[l]}, {s[l], s[i]}};
  }
  if (edges.empty())
    throw InternalError("diamond corollary hypotheses hold but H has no star or triangle");

  for (FaceIndex f : {a, b}) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const auto& e1 = edges[i];
        const auto& e2 = edges[j];
        if (!face_edge(e, f, e1[0], e1[1]) || !face_edge(e, f, e2[0], e2[1])) continue;
        VertexId mid = (e1[0] == e2[0] || e1[0] == e2[1]) ? e1[0] : e1[1];
        VertexId t = e1[0] == mid ? e1[1] : e1[0];
        VertexId v = e2[0] == mid ? e2[1] : e2[0];
        return diamond_search(e, f, t, mid, v, f == a ? x : x2);
      }
    }
  }
  throw InternalError("diamond corollary: no two of the three edges lie on the same face");
}

}  // namespace relemb
