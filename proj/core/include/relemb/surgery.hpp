#pragma once

#include <span>
#include <vector>

#include "relemb/certificate.hpp"
#include "relemb/embedding.hpp"
#include "relemb/trace.hpp"

namespace relemb {

// Cut a rotation at three distinct outgoing half-arcs into segments X Y Z
// (in cyclic order, each starting at one of the cuts) and reassemble them as
// X Z Y. The result starts at ha.
std::vector<HalfArcId> three_segment_swap(std::span<const HalfArcId> rotation, HalfArcId ha,
                                          HalfArcId hb, HalfArcId hc);

// Result of a face-rewriting surgery. antiface_map[f] is the antiface of the
// new embedding that contains the anchor arc of old antiface f.
struct SurgeryResult {
  Embedding embedding;
  std::vector<FaceIndex> antiface_map;
};

// Merges three distinct antifaces through v into one. For each face the
// entry at v is its lowest incoming half-arc there.
SurgeryResult merge_three_at_vertex(const Embedding& e, VertexId v, FaceIndex a, FaceIndex b,
                                    FaceIndex c, ReductionTrace* trace = nullptr);

// A = A1 . A2 where A1 runs over positions [first, second) of A's arc
// sequence and A2 over [second, first). Both positions must be arcs leaving v.
struct FaceSplit {
  int first = 0;
  int second = 0;
};

struct SplitSwapResult {
  Embedding embedding;
  std::vector<FaceIndex> antiface_map;
  int joined = 0;         // i: the part A_i now joined with B (1 or 2)
  int kept = 0;           // 3 - i: the part left as its own antiface
  FaceIndex joined_face = -1;
  FaceIndex kept_face = -1;
};

// Replaces A and B by A_i . B and A_{3-i}. Which i occurs is dictated by the
// rotation at v and is reported, not chosen.
SplitSwapResult split_swap(const Embedding& e, VertexId v, FaceIndex a, FaceSplit split,
                           FaceIndex b, ReductionTrace* trace = nullptr);

// Interlaced merge: split the certificate's face at x, swap with the x
// companion, then merge the three faces at y. Recorded as a single step.
SurgeryResult merge_interlaced(const Embedding& e, const InterlacingCertificate& cert,
                               ReductionTrace* trace = nullptr);
SurgeryResult merge_interlaced(const Embedding& e, FaceIndex a, FaceIndex b, FaceIndex c,
                               VertexId x, VertexId y, ReductionTrace* trace = nullptr);

struct BlowUpResult {
  Embedding embedding;
  std::vector<FaceIndex> antiface_map;
  bool unchanged = false;
  FaceIndex new_a = -1;  // the face A_i . B (or A itself when unchanged)
  FaceIndex new_b = -1;  // the face A_{3-i} (or B itself when unchanged)
};

// Grows B using the larger face A through their common vertex x, so that both
// resulting faces have at least min(|V(A)|/2 - 1, (n-k-1)/2) vertices.
BlowUpResult blow_up(const Embedding& e, FaceIndex a, FaceIndex b, VertexId x,
                     ReductionTrace* trace = nullptr);

}  // namespace relemb
