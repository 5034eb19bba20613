#include "relemb/embedding.hpp"

#include <algorithm>
#include <sstream>

#include "relemb/errors.hpp"

namespace relemb {

FaceWalk::FaceWalk(FaceColor color, std::vector<ArcId> arcs)
    : color_(color), arcs_(std::move(arcs)) {
  if (arcs_.empty()) throw InvalidInput("empty face walk");
  auto it = std::min_element(arcs_.begin(), arcs_.end());
  std::rotate(arcs_.begin(), it, arcs_.end());
}

std::vector<HalfArcId> FaceWalk::half_arcs() const {
  std::vector<HalfArcId> out;
  out.reserve(2 * arcs_.size());
  for (ArcId a : arcs_) {
    out.push_back(out_half(a));
    out.push_back(in_half(a));
  }
  return out;
}

std::vector<VertexId> FaceWalk::vertex_walk(const Digraph& d) const {
  std::vector<VertexId> out;
  out.reserve(arcs_.size());
  for (ArcId a : arcs_) out.push_back(d.tail(a));
  return out;
}

namespace {

// Returns an empty string when rs matches the incidences of d.
std::string incidence_problem(const Digraph& d, const RotationSystem& rs, int* witness) {
  if (static_cast<int>(rs.rotations.size()) != d.num_vertices()) {
    *witness = -1;
    return "rotation system has " + std::to_string(rs.rotations.size()) + " vertices, expected " +
           std::to_string(d.num_vertices());
  }
  std::vector<int> seen(d.num_half_arcs(), 0);
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    for (HalfArcId h : rs.rotations[v]) {
      if (h < 0 || h >= d.num_half_arcs()) {
        *witness = v;
        return "half-arc " + std::to_string(h) + " out of range at vertex " + std::to_string(v);
      }
      if (d.incv(h) != v) {
        *witness = h;
        return "half-arc " + std::to_string(h) + " listed at vertex " + std::to_string(v) +
               " but incident with " + std::to_string(d.incv(h));
      }
      if (seen[h]++) {
        *witness = h;
        return "half-arc " + std::to_string(h) + " listed twice";
      }
    }
  }
  for (HalfArcId h = 0; h < d.num_half_arcs(); ++h) {
    if (!seen[h]) {
      *witness = h;
      return "half-arc " + std::to_string(h) + " missing from its rotation";
    }
  }
  return {};
}

bool alternates(std::span<const HalfArcId> rot) {
  if (rot.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < rot.size(); ++i)
    if (is_outgoing(rot[i]) == is_outgoing(rot[(i + 1) % rot.size()])) return false;
  return true;
}

std::vector<int> positions(const Digraph& d, const RotationSystem& rs) {
  std::vector<int> pos(d.num_half_arcs(), -1);
  for (const auto& rot : rs.rotations)
    for (std::size_t i = 0; i < rot.size(); ++i) pos[rot[i]] = static_cast<int>(i);
  return pos;
}

FaceSet trace_with_positions(const Digraph& d, const RotationSystem& rs,
                             const std::vector<int>& pos) {
  const int m = d.num_arcs();
  auto step = [&](ArcId a, int dir) {
    HalfArcId h = in_half(a);
    const auto& rot = rs.rotations[d.head(a)];
    const int len = static_cast<int>(rot.size());
    return arc_of(rot[(pos[h] + dir + len) % len]);
  };
  FaceSet faces;
  for (int dir : {-1, +1}) {
    std::vector<bool> seen(m, false);
    auto& list = dir < 0 ? faces.profaces : faces.antifaces;
    const FaceColor color = dir < 0 ? FaceColor::proface : FaceColor::antiface;
    for (ArcId a = 0; a < m; ++a) {
      if (seen[a]) continue;
      std::vector<ArcId> walk;
      for (ArcId x = a; !seen[x]; x = step(x, dir)) {
        seen[x] = true;
        walk.push_back(x);
      }
      list.emplace_back(color, std::move(walk));
    }
  }
  return faces;
}

}  // namespace

FaceSet trace_faces(const Digraph& d, const RotationSystem& rs) {
  int witness = -1;
  if (auto problem = incidence_problem(d, rs, &witness); !problem.empty())
    throw InvalidInput(problem);
  for (VertexId v = 0; v < d.num_vertices(); ++v)
    if (!alternates(rs.rotations[v]))
      throw InvalidInput("rotation at vertex " + std::to_string(v) +
                         " does not alternate between incoming and outgoing half-arcs");
  return trace_with_positions(d, rs, positions(d, rs));
}

Embedding::Embedding(std::shared_ptr<const Digraph> d, RotationSystem rs)
    : digraph_(std::move(d)), rs_(std::move(rs)) {
  if (!digraph_) throw InvalidInput("null digraph");
  faces_ = trace_faces(*digraph_, rs_);
  pos_ = positions(*digraph_, rs_);

  const Digraph& g = *digraph_;
  anti_of_.assign(g.num_arcs(), -1);
  pro_of_.assign(g.num_arcs(), -1);
  for (FaceIndex f = 0; f < num_profaces(); ++f)
    for (ArcId a : faces_.profaces[f].arcs()) pro_of_[a] = f;
  anti_vertices_.resize(num_antifaces());
  antifaces_at_.assign(g.num_vertices(), {});
  for (FaceIndex f = 0; f < num_antifaces(); ++f) {
    auto& verts = anti_vertices_[f];
    for (ArcId a : faces_.antifaces[f].arcs()) {
      anti_of_[a] = f;
      verts.push_back(g.tail(a));
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (VertexId v : verts) antifaces_at_[v].push_back(f);
  }
}

HalfArcId Embedding::cw_next(HalfArcId h) const {
  const auto& rot = rs_.rotations[digraph_->incv(h)];
  return rot[(pos_[h] + 1) % rot.size()];
}

HalfArcId Embedding::cw_prev(HalfArcId h) const {
  const auto& rot = rs_.rotations[digraph_->incv(h)];
  return rot[(pos_[h] + rot.size() - 1) % rot.size()];
}

FaceIndex Embedding::antiface_with_anchor(ArcId a) const {
  if (a < 0 || a >= digraph_->num_arcs()) return -1;
  FaceIndex f = anti_of_[a];
  return faces_.antifaces[f].anchor() == a ? f : -1;
}

bool Embedding::antiface_contains(FaceIndex f, VertexId v) const {
  const auto& verts = anti_vertices_[f];
  return std::binary_search(verts.begin(), verts.end(), v);
}

bool Embedding::locally_irreducible() const {
  for (const auto& at : antifaces_at_)
    if (at.size() > 2) return false;
  return true;
}

Embedding embed_from_decomposition(std::shared_ptr<const Digraph> d,
                                   const CircuitDecomposition& c) {
  if (!d) throw InvalidInput("null digraph");
  if (c.num_arcs() != d->num_arcs())
    throw InvalidInput("circuit decomposition does not match the digraph");
  RotationSystem rs;
  rs.rotations.resize(d->num_vertices());
  for (VertexId v = 0; v < d->num_vertices(); ++v) {
    if (d->indegree(v) != d->outdegree(v))
      throw InvalidInput("vertex " + std::to_string(v) + " is unbalanced");
    auto& rot = rs.rotations[v];
    for (HalfArcId h : d->in_halves(v)) {
      HalfArcId g = c.successor(h);
      if (d->incv(g) != v) throw InvalidInput("circuit decomposition does not match the digraph");
      rot.push_back(g);
      rot.push_back(h);
    }
  }
  return Embedding(std::move(d), std::move(rs));
}

Embedding embed_from_decomposition(const Digraph& d, const CircuitDecomposition& c) {
  return embed_from_decomposition(std::make_shared<const Digraph>(d), c);
}

int nontrivial_components(const Digraph& d) {
  int count = 0;
  auto labels = component_labels(d, &count);
  std::vector<bool> has_arc(count, false);
  for (const Arc& a : d.arcs()) has_arc[labels[a.tail]] = true;
  return static_cast<int>(std::count(has_arc.begin(), has_arc.end(), true));
}

namespace {

int vertices_with_arcs(const Digraph& d) {
  int count = 0;
  for (VertexId v = 0; v < d.num_vertices(); ++v) count += d.degree(v) > 0;
  return count;
}

// 2c - |V| + |A| - |F| over arc-carrying components.
int euler_characteristic_defect(const Digraph& d, int num_faces) {
  return 2 * nontrivial_components(d) - vertices_with_arcs(d) + d.num_arcs() - num_faces;
}

}  // namespace

int euler_genus(const Embedding& e) {
  const int gamma =
      euler_characteristic_defect(e.digraph(), e.num_profaces() + e.num_antifaces());
  if (gamma % 2 != 0 || gamma < 0)
    throw InternalError("Euler genus " + std::to_string(gamma) + " is not a nonnegative even number");
  return gamma / 2;
}

const char* to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::incidence: return "incidence";
    case CheckKind::alternation: return "alternation";
    case CheckKind::proface_mismatch: return "proface_mismatch";
    case CheckKind::arc_coverage: return "arc_coverage";
    case CheckKind::parity: return "parity";
    case CheckKind::odd_euler_genus: return "odd_euler_genus";
  }
  return "unknown";
}

bool VerificationReport::has(CheckKind kind) const {
  return std::any_of(failures.begin(), failures.end(),
                     [kind](const CheckFailure& f) { return f.kind == kind; });
}

std::string VerificationReport::summary() const {
  std::ostringstream out;
  if (ok()) {
    out << "ok: " << num_profaces << " profaces, " << num_antifaces << " antifaces, genus "
        << genus;
    return out.str();
  }
  for (const auto& f : failures) out << to_string(f.kind) << ": " << f.detail << '\n';
  return out.str();
}

VerificationReport verify_embedding(const Digraph& d, const RotationSystem& rs,
                                    const CircuitDecomposition& c) {
  VerificationReport report;
  int witness = -1;
  if (auto problem = incidence_problem(d, rs, &witness); !problem.empty()) {
    report.failures.push_back({CheckKind::incidence, witness, problem});
    return report;
  }
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    if (!alternates(rs.rotations[v])) {
      report.failures.push_back(
          {CheckKind::alternation, v,
           "rotation at vertex " + std::to_string(v) + " does not alternate in/out"});
    }
  }
  if (!report.ok()) return report;

  FaceSet faces = trace_with_positions(d, rs, positions(d, rs));
  report.num_profaces = static_cast<int>(faces.profaces.size());
  report.num_antifaces = static_cast<int>(faces.antifaces.size());

  std::vector<DirectedCircuit> expected = c.canonical();
  std::vector<DirectedCircuit> traced;
  for (const auto& f : faces.profaces) traced.push_back(f.arcs());
  std::sort(traced.begin(), traced.end());
  if (traced != expected) {
    std::size_t i = 0;
    while (i < traced.size() && i < expected.size() && traced[i] == expected[i]) ++i;
    const ArcId anchor = i < traced.size() ? traced[i].front() : -1;
    report.failures.push_back(
        {CheckKind::proface_mismatch, anchor,
         "traced " + std::to_string(traced.size()) + " profaces vs " +
             std::to_string(expected.size()) + " circuits; first difference at proface anchored at arc " +
             std::to_string(anchor)});
  }

  std::vector<int> pro_count(d.num_arcs(), 0);
  std::vector<int> anti_count(d.num_arcs(), 0);
  for (const auto& f : faces.profaces)
    for (ArcId a : f.arcs()) ++pro_count[a];
  for (const auto& f : faces.antifaces)
    for (ArcId a : f.arcs()) ++anti_count[a];
  for (ArcId a = 0; a < d.num_arcs(); ++a) {
    if (pro_count[a] != 1 || anti_count[a] != 1) {
      report.failures.push_back({CheckKind::arc_coverage, a,
                                 "arc " + std::to_string(a) + " lies on " +
                                     std::to_string(pro_count[a]) + " profaces and " +
                                     std::to_string(anti_count[a]) + " antifaces"});
    }
  }

  const int expected_parity = (vertices_with_arcs(d) + d.num_arcs() + c.size()) % 2;
  if (report.num_antifaces % 2 != expected_parity) {
    report.failures.push_back({CheckKind::parity, report.num_antifaces,
                               std::to_string(report.num_antifaces) +
                                   " antifaces; parity law requires " +
                                   (expected_parity ? "an odd" : "an even") + " count"});
  }

  const int gamma = euler_characteristic_defect(d, report.num_profaces + report.num_antifaces);
  if (gamma % 2 != 0) {
    report.failures.push_back(
        {CheckKind::odd_euler_genus, gamma, "Euler genus " + std::to_string(gamma) + " is odd"});
  } else {
    report.genus = gamma / 2;
  }
  return report;
}

VerificationReport verify_embedding(const Embedding& e, const CircuitDecomposition& c) {
  return verify_embedding(e.digraph(), e.rotation_system(), c);
}

}  // namespace relemb
