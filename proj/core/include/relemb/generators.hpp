#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "relemb/digraph.hpp"

namespace relemb {

// Arcs i -> i + j (mod n) for j = 1 .. (n-1)/2. Odd n >= 3.
Digraph gen_rotational_tournament(int n);

// K_n minus the matching {i, i + n/2}, oriented along an euler tour; arc i is
// edge i of the graph in lexicographic order. Even n >= 4.
Digraph gen_kn_minus_pm(int n);

struct SteinerSystem {
  Digraph digraph;
  CircuitDecomposition circuits;  // circuit t is the directed triangle of triple t
  std::vector<std::array<VertexId, 3>> triples;
};

// Bose construction for n = 3 (mod 6), Skolem construction for n = 1 (mod 6).
// Each triple (a, b, c) becomes arcs a->b, b->c, c->a with ids 3t, 3t+1, 3t+2.
SteinerSystem gen_sts(int n);

// Eulerian orientation of K_n minus a random graph of maximum degree at most
// k_target in which every vertex loses an even (n odd) or odd (n even) number
// of edges. Needs n >= 5 k_target + 7; even n needs k_target >= 1.
Digraph gen_random_dense_eulerian(int n, int k_target, std::uint64_t seed);

// A uniformly random transition at every vertex.
CircuitDecomposition random_circuit_decomposition(const Digraph& d, std::uint64_t seed);

}  // namespace relemb
