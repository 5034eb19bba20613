#pragma once

#include <memory>
#include <string>
#include <vector>

#include "relemb/digraph.hpp"
#include "relemb/embedding.hpp"
#include "relemb/trace.hpp"

namespace relemb {

enum class ReduceMode { strict, best_effort };

enum class ReduceOutcome {
  reduced,      // one or two antifaces remain
  dead_end,     // best effort only: a case could not continue
  no_progress,  // best effort only: the iteration guard tripped
};

const char* to_string(ReduceOutcome outcome);

struct ReduceOptions {
  ReduceMode mode = ReduceMode::strict;
  // Run verify_embedding after every surgery and throw InternalError on failure.
  bool verify_each_step = false;
};

struct ReductionResult {
  Embedding embedding;
  CircuitDecomposition circuits;  // the profaces of embedding
  ReductionTrace trace;
  ReduceOutcome outcome = ReduceOutcome::reduced;
  std::string diagnostic;
};

// Runs the case machine until at most two antifaces remain. Strict mode first
// checks that D is eulerian, n >= 7 and D is dense, throwing HypothesisError
// otherwise, and throws NoProgressError if the machine stalls. Best-effort
// mode only needs D eulerian and reports stalls through the outcome. Inputs
// with n <= 2 are handed to small_order_embedding in best-effort mode.
ReductionResult reduce_to_upper_embedding(std::shared_ptr<const Digraph> d,
                                          const CircuitDecomposition& c,
                                          ReduceOptions options = {});
ReductionResult reduce_to_upper_embedding(const Digraph& d, const CircuitDecomposition& c,
                                          ReduceOptions options = {});

// Same machine started from an arbitrary embedding whose profaces are c.
ReductionResult reduce_embedding(const Embedding& start, const CircuitDecomposition& c,
                                 ReduceOptions options = {});

// Two vertices joined by exactly one arc in each direction.
bool has_two_edge_cut(const Digraph& d);

// ((a1 + g1) mod 2) + ((a2 + g2) mod 2) + 1 for a two-vertex digraph with a
// 2-edge-cut: a_i loops at v_i, g_i circuits touching only v_i.
int two_edge_cut_formula(const Digraph& d, const CircuitDecomposition& c);

// Optimal embedding for n <= 2. Throws InvalidInput for n > 2 or a
// non-eulerian digraph.
ReductionResult small_order_embedding(std::shared_ptr<const Digraph> d,
                                      const CircuitDecomposition& c);
ReductionResult small_order_embedding(const Digraph& d, const CircuitDecomposition& c);

// Completes arc-disjoint circuits with one euler circuit per nontrivial
// component of the leftover arcs, then reduces. Throws InvalidInput when the
// circuits overlap.
ReductionResult relative_upper_from_partial(const Digraph& d,
                                            const std::vector<DirectedCircuit>& partial,
                                            ReduceOptions options = {});

struct UndirectedReduction {
  Orientation orientation;
  ReductionResult result;
};

// Orients G so that every circuit of c is directed, then reduces.
UndirectedReduction undirected_upper_embedding(const UndirectedGraph& g,
                                               const std::vector<UndirectedCircuit>& c,
                                               ReduceOptions options = {});

}  // namespace relemb
