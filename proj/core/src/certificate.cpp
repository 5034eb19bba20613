#include "relemb/certificate.hpp"

#include <algorithm>

namespace relemb {

std::vector<int> simple_walk_positions(const Embedding& e, FaceIndex f) {
  const auto& arcs = e.antifaces()[f].arcs();
  const Digraph& d = e.digraph();
  const int t = static_cast<int>(arcs.size());
  std::vector<int> out;
  for (int i = 0; i < t; ++i) {
    VertexId prev = d.tail(arcs[(i + t - 1) % t]);
    if (d.tail(arcs[i]) != prev) out.push_back(i);
  }
  if (out.empty()) out.push_back(0);  // all loops at one vertex
  return out;
}

std::vector<VertexId> simple_walk(const Embedding& e, FaceIndex f) {
  const auto& arcs = e.antifaces()[f].arcs();
  std::vector<VertexId> out;
  for (int p : simple_walk_positions(e, f)) out.push_back(e.digraph().tail(arcs[p]));
  return out;
}

namespace {

// Occurrence positions of x or y with consecutive equal symbols collapsed,
// cyclically. The result alternates between x and y.
std::vector<int> alternating_occurrences(std::span<const VertexId> walk, VertexId x, VertexId y) {
  std::vector<int> occ;
  for (int i = 0; i < static_cast<int>(walk.size()); ++i) {
    if (walk[i] != x && walk[i] != y) continue;
    if (!occ.empty() && walk[occ.back()] == walk[i]) continue;
    occ.push_back(i);
  }
  if (occ.size() > 1 && walk[occ.front()] == walk[occ.back()]) occ.pop_back();
  return occ;
}

}  // namespace

bool interlaced(std::span<const VertexId> closed_walk, VertexId x, VertexId y) {
  if (x == y) return false;
  return alternating_occurrences(closed_walk, x, y).size() >= 4;
}

std::optional<InterlacingCertificate> find_interlacing(const Embedding& e, FaceIndex f,
                                                       VertexId x, VertexId y) {
  if (x == y) return std::nullopt;
  std::vector<VertexId> walk = e.antifaces()[f].vertex_walk(e.digraph());
  std::vector<int> occ = alternating_occurrences(walk, x, y);
  if (occ.size() < 4) return std::nullopt;
  std::size_t start = walk[occ[0]] == x ? 0 : 1;
  InterlacingCertificate cert;
  cert.face = f;
  cert.x = x;
  cert.y = y;
  for (std::size_t i = 0; i < 4; ++i) cert.positions[i] = occ[(start + i) % occ.size()];
  return cert;
}

std::string certificate_problem(const Embedding& e, const InterlacingCertificate& cert) {
  if (cert.face < 0 || cert.face >= e.num_antifaces()) return "antiface index out of range";
  if (cert.x == cert.y) return "interlacing needs two distinct vertices";
  const auto& arcs = e.antifaces()[cert.face].arcs();
  const int t = static_cast<int>(arcs.size());
  int descents = 0;
  for (int i = 0; i < 4; ++i) {
    int p = cert.positions[i];
    if (p < 0 || p >= t) return "position out of range";
    int q = cert.positions[(i + 1) % 4];
    if (q < p) ++descents;
    if (q == p) return "repeated position";
  }
  if (descents != 1) return "positions are not in cyclic order";
  const VertexId expect[4] = {cert.x, cert.y, cert.x, cert.y};
  for (int i = 0; i < 4; ++i)
    if (e.digraph().tail(arcs[cert.positions[i]]) != expect[i])
      return "position " + std::to_string(cert.positions[i]) + " does not carry the claimed vertex";
  if (cert.x_companion >= 0) {
    if (cert.x_companion == cert.face || cert.x_companion >= e.num_antifaces() ||
        !e.antiface_contains(cert.x_companion, cert.x))
      return "x companion does not contain x";
  }
  if (cert.y_companion >= 0) {
    if (cert.y_companion == cert.face || cert.y_companion >= e.num_antifaces() ||
        !e.antiface_contains(cert.y_companion, cert.y))
      return "y companion does not contain y";
  }
  if (cert.x_companion >= 0 && cert.x_companion == cert.y_companion)
    return "companions must be distinct";
  return {};
}

}  // namespace relemb
