#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relemb/embedding.hpp"

namespace relemb {

// Witness that x and y are interlaced on antiface `face`: the four positions
// index the face's arc sequence, occur in cyclic order, and carry the
// vertices x, y, x, y (as arc tails).
struct InterlacingCertificate {
  FaceIndex face = -1;
  VertexId x = -1;
  VertexId y = -1;
  std::array<int, 4> positions{};
  FaceIndex x_companion = -1;  // another antiface through x, when used for merging
  FaceIndex y_companion = -1;  // another antiface through y
};

// Positions of the face's arc sequence that survive when consecutive repeated
// vertices (loops) are collapsed; the corresponding tails form usg(W).
std::vector<int> simple_walk_positions(const Embedding& e, FaceIndex f);
std::vector<VertexId> simple_walk(const Embedding& e, FaceIndex f);

// x ... y ... x ... y on a closed walk (cyclically).
bool interlaced(std::span<const VertexId> closed_walk, VertexId x, VertexId y);

std::optional<InterlacingCertificate> find_interlacing(const Embedding& e, FaceIndex f,
                                                       VertexId x, VertexId y);

// Empty when the certificate checks out against e, otherwise the reason.
std::string certificate_problem(const Embedding& e, const InterlacingCertificate& cert);

}  // namespace relemb
