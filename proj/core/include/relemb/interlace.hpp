#pragma once

#include <optional>
#include <vector>

#include "relemb/certificate.hpp"
#include "relemb/embedding.hpp"

namespace relemb {

// Which antifaces each vertex lies on, in a locally irreducible embedding.
// Vertex sets are returned sorted.
class TypeTable {
 public:
  // Throws HypothesisError naming a vertex on three or more antifaces.
  explicit TypeTable(const Embedding& e);

  int num_faces() const noexcept { return num_faces_; }
  // Antifaces through v: one or two entries, ascending.
  const std::vector<FaceIndex>& faces_at(VertexId v) const { return faces_at_[v]; }
  // The other antiface through v besides f, or -1 when v lies on f only.
  FaceIndex partner(VertexId v, FaceIndex f) const;
  bool on(VertexId v, FaceIndex f) const;

  std::vector<VertexId> vertices(FaceIndex a) const;           // V(A)
  std::vector<VertexId> common(FaceIndex a, FaceIndex b) const;  // AB
  std::vector<VertexId> minus(FaceIndex a, FaceIndex b) const;   // V(A) - V(B)
  std::vector<VertexId> only(FaceIndex a) const;                 // A0
  std::vector<VertexId> also(FaceIndex a) const;                 // A1

 private:
  int num_faces_ = 0;
  std::vector<std::vector<FaceIndex>> faces_at_;
};

struct ThreeFaceWitness {
  VertexId vertex = -1;
  FaceIndex a = -1;
  FaceIndex b = -1;
  FaceIndex c = -1;
};

// Lowest vertex on three or more antifaces, with its three lowest antifaces.
std::optional<ThreeFaceWitness> find_vertex_on_three_antifaces(const Embedding& e);

// Every member of s (a subset of A1) must be adjacent in usg(D) to at least
// three members of s of a different type; throws HypothesisError otherwise.
// Returns x, y of different types interlaced on A, with the companion faces
// set to their partners.
InterlacingCertificate three_neighbor_search(const Embedding& e, FaceIndex a,
                                             const std::vector<VertexId>& s);

// t, u, v of type AC with tu, uv edges of usg(A), and x of type AB adjacent
// to all three (B != C). Returns x interlaced with one of t, u, v on A.
InterlacingCertificate diamond_search(const Embedding& e, FaceIndex a, VertexId t, VertexId u,
                                      VertexId v, VertexId x);

// Certificates suitable for merge_interlaced, or nullopt when the numeric
// hypotheses of the corresponding corollary fail.
std::optional<InterlacingCertificate> check_three_neighbor_corollary(const Embedding& e, FaceIndex a);
std::optional<InterlacingCertificate> check_big_moderate(const Embedding& e, FaceIndex a,
                                                         FaceIndex b, FaceIndex c);
std::optional<InterlacingCertificate> check_diamond_corollary(const Embedding& e, FaceIndex a,
                                                              FaceIndex b);

// u ~ v joined by an arc of antiface f (an edge of usg(f)).
bool face_edge(const Embedding& e, FaceIndex f, VertexId u, VertexId v);

}  // namespace relemb
