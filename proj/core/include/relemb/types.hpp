#pragma once

#include <cstdint>

namespace relemb {

using VertexId = int;
using ArcId = int;
// Arc i owns the outgoing half-arc 2i (at its tail) and the incoming
// half-arc 2i+1 (at its head).
using HalfArcId = int;
// Index into an embedding's canonically ordered antiface (or proface) list.
using FaceIndex = int;

constexpr HalfArcId out_half(ArcId a) noexcept { return 2 * a; }
constexpr HalfArcId in_half(ArcId a) noexcept { return 2 * a + 1; }
constexpr ArcId arc_of(HalfArcId h) noexcept { return h >> 1; }
constexpr HalfArcId mate(HalfArcId h) noexcept { return h ^ 1; }
constexpr bool is_outgoing(HalfArcId h) noexcept { return (h & 1) == 0; }
constexpr bool is_incoming(HalfArcId h) noexcept { return (h & 1) == 1; }

}  // namespace relemb
