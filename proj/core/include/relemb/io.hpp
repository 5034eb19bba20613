#pragma once

#include <string>
#include <vector>

#include "relemb/digraph.hpp"
#include "relemb/embedding.hpp"
#include "relemb/oracle.hpp"

namespace relemb {

// {"n": 3, "arcs": [[0,1], [1,2], [2,0]]}
std::string digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const std::string& text);

// {"circuits": [[0,1,2], ...]}
std::string circuits_to_json(const std::vector<DirectedCircuit>& circuits);
std::string circuits_to_json(const CircuitDecomposition& c);
std::vector<DirectedCircuit> circuits_from_json(const std::string& text);

// {"rotations": [[...], ...], "profaces": [[half-arcs], ...], "antifaces": [...]}
std::string embedding_to_json(const Embedding& e);
// Reads only the rotations; faces are always recomputed.
RotationSystem rotations_from_json(const std::string& text);

// {"states": N, "min": a, "max": b, "distribution": {"1": c1, ...}}
std::string distribution_to_json(const OracleDistribution& dist);

// {"ok": bool, "profaces": p, "antifaces": a, "genus": g, "failures": [...]}
std::string verification_to_json(const VerificationReport& report);

// Throw IoError on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace relemb
