#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "relemb/digraph.hpp"
#include "relemb/types.hpp"

namespace relemb {

// Clockwise cyclic order of the half-arcs at each vertex.
struct RotationSystem {
  std::vector<std::vector<HalfArcId>> rotations;
  bool operator==(const RotationSystem&) const = default;
};

enum class FaceColor { proface, antiface };

// A face as the cyclic sequence of arcs it traverses, stored starting at its
// smallest arc id. Arcs on one face are distinct, so this rotation is also the
// lexicographically minimal one and serves as the canonical id.
class FaceWalk {
 public:
  FaceWalk(FaceColor color, std::vector<ArcId> arcs);

  FaceColor color() const noexcept { return color_; }
  const std::vector<ArcId>& arcs() const noexcept { return arcs_; }
  int length() const noexcept { return static_cast<int>(arcs_.size()); }
  ArcId anchor() const { return arcs_.front(); }

  // g1 h1 g2 h2 ...: the out/in half-arc pair of every traversed arc.
  std::vector<HalfArcId> half_arcs() const;
  // Tails of the traversed arcs, in walk order.
  std::vector<VertexId> vertex_walk(const Digraph& d) const;

  bool operator==(const FaceWalk&) const = default;

 private:
  FaceColor color_;
  std::vector<ArcId> arcs_;
};

struct FaceSet {
  std::vector<FaceWalk> profaces;
  std::vector<FaceWalk> antifaces;
};

// Proface rule: entering v on incoming h, leave on the outgoing half-arc just
// before h clockwise. Antiface rule: leave on the one just after h. Faces are
// listed by ascending anchor arc. Throws InvalidInput when the rotation system
// does not match the incidences of d or fails to alternate.
FaceSet trace_faces(const Digraph& d, const RotationSystem& rs);

// An oriented directed embedding. Immutable; surgeries build new values. The
// digraph is shared between an embedding and everything derived from it.
class Embedding {
 public:
  // Validates incidence and alternation, then traces faces.
  Embedding(std::shared_ptr<const Digraph> d, RotationSystem rs);

  const Digraph& digraph() const noexcept { return *digraph_; }
  const std::shared_ptr<const Digraph>& digraph_ptr() const noexcept { return digraph_; }
  const RotationSystem& rotation_system() const noexcept { return rs_; }
  std::span<const HalfArcId> rotation(VertexId v) const { return rs_.rotations[v]; }

  HalfArcId cw_next(HalfArcId h) const;
  HalfArcId cw_prev(HalfArcId h) const;
  int position(HalfArcId h) const { return pos_[h]; }

  const FaceSet& faces() const noexcept { return faces_; }
  const std::vector<FaceWalk>& profaces() const noexcept { return faces_.profaces; }
  const std::vector<FaceWalk>& antifaces() const noexcept { return faces_.antifaces; }
  int num_profaces() const noexcept { return static_cast<int>(faces_.profaces.size()); }
  int num_antifaces() const noexcept { return static_cast<int>(faces_.antifaces.size()); }
  FaceIndex antiface_of(ArcId a) const { return anti_of_[a]; }
  FaceIndex proface_of(ArcId a) const { return pro_of_[a]; }
  // Antiface whose anchor is a (i.e. canonical id lookup), or -1.
  FaceIndex antiface_with_anchor(ArcId a) const;

  // V(A), sorted.
  const std::vector<VertexId>& antiface_vertices(FaceIndex f) const { return anti_vertices_[f]; }
  // Distinct antifaces through v, sorted.
  const std::vector<FaceIndex>& antifaces_at(VertexId v) const { return antifaces_at_[v]; }
  bool antiface_contains(FaceIndex f, VertexId v) const;
  // Every vertex lies on at most two antifaces.
  bool locally_irreducible() const;

 private:
  std::shared_ptr<const Digraph> digraph_;
  RotationSystem rs_;
  std::vector<int> pos_;
  FaceSet faces_;
  std::vector<FaceIndex> anti_of_;
  std::vector<FaceIndex> pro_of_;
  std::vector<std::vector<VertexId>> anti_vertices_;
  std::vector<std::vector<FaceIndex>> antifaces_at_;
};

inline FaceSet trace_faces(const Embedding& e) { return e.faces(); }

// Rotation at v is (g0 h0 g1 h1 ...) with the incoming half-arcs h_i in
// ascending order and g_i = fw(h_i). The profaces are exactly the circuits.
Embedding embed_from_decomposition(std::shared_ptr<const Digraph> d,
                                   const CircuitDecomposition& c);
Embedding embed_from_decomposition(const Digraph& d, const CircuitDecomposition& c);

// Orientable genus g, from |V| - |A| + |F| = 2c - 2g summed over the
// components that carry arcs. Throws InternalError if the Euler genus is odd.
int euler_genus(const Embedding& e);

enum class CheckKind {
  incidence,
  alternation,
  proface_mismatch,
  arc_coverage,
  parity,
  odd_euler_genus,
};

const char* to_string(CheckKind kind);

struct CheckFailure {
  CheckKind kind;
  int witness = -1;  // vertex, half-arc, arc or face, depending on kind
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckFailure> failures;
  int num_profaces = 0;
  int num_antifaces = 0;
  int genus = -1;  // -1 when faces could not be traced

  bool ok() const noexcept { return failures.empty(); }
  bool has(CheckKind kind) const;
  std::string summary() const;
};

// Itemized check of a possibly corrupted rotation system against c.
VerificationReport verify_embedding(const Digraph& d, const RotationSystem& rs,
                                    const CircuitDecomposition& c);
VerificationReport verify_embedding(const Embedding& e, const CircuitDecomposition& c);

// Connected components carrying at least one arc.
int nontrivial_components(const Digraph& d);

}  // namespace relemb
