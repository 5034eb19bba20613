#include "relemb/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "relemb/errors.hpp"

namespace relemb {

using nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T field(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const ordered_json::exception& e) {
    throw InvalidInput(std::string("field \"") + key + "\" has the wrong shape: " + e.what());
  }
}

ordered_json half_arc_walks(const std::vector<FaceWalk>& faces) {
  ordered_json out = ordered_json::array();
  for (const FaceWalk& f : faces) out.push_back(f.half_arcs());
  return out;
}

}  // namespace

std::string digraph_to_json(const Digraph& d) {
  ordered_json j;
  j["n"] = d.num_vertices();
  ordered_json arcs = ordered_json::array();
  for (const Arc& a : d.arcs()) arcs.push_back({a.tail, a.head});
  j["arcs"] = std::move(arcs);
  return j.dump() + "\n";
}

Digraph digraph_from_json(const std::string& text) {
  ordered_json j = parse(text);
  int n = field<int>(j, "n");
  auto pairs = field<std::vector<std::vector<int>>>(j, "arcs");
  std::vector<Arc> arcs;
  for (const auto& p : pairs) {
    if (p.size() != 2) throw InvalidInput("each arc must be a [tail, head] pair");
    arcs.push_back({p[0], p[1]});
  }
  return Digraph(n, std::move(arcs));
}

std::string circuits_to_json(const std::vector<DirectedCircuit>& circuits) {
  ordered_json j;
  j["circuits"] = circuits;
  return j.dump() + "\n";
}

std::string circuits_to_json(const CircuitDecomposition& c) { return circuits_to_json(c.circuits()); }

std::vector<DirectedCircuit> circuits_from_json(const std::string& text) {
  return field<std::vector<DirectedCircuit>>(parse(text), "circuits");
}

std::string embedding_to_json(const Embedding& e) {
  ordered_json j;
  j["rotations"] = e.rotation_system().rotations;
  j["profaces"] = half_arc_walks(e.profaces());
  j["antifaces"] = half_arc_walks(e.antifaces());
  return j.dump() + "\n";
}

RotationSystem rotations_from_json(const std::string& text) {
  return RotationSystem{field<std::vector<std::vector<HalfArcId>>>(parse(text), "rotations")};
}

std::string distribution_to_json(const OracleDistribution& dist) {
  ordered_json j;
  j["states"] = dist.states;
  j["min"] = dist.min;
  j["max"] = dist.max;
  ordered_json counts = ordered_json::object();
  for (const auto& [faces, count] : dist.counts) counts[std::to_string(faces)] = count;
  j["distribution"] = std::move(counts);
  return j.dump() + "\n";
}

std::string verification_to_json(const VerificationReport& report) {
  ordered_json j;
  j["ok"] = report.ok();
  j["profaces"] = report.num_profaces;
  j["antifaces"] = report.num_antifaces;
  j["genus"] = report.genus;
  ordered_json failures = ordered_json::array();
  for (const CheckFailure& f : report.failures)
    failures.push_back({{"check", to_string(f.kind)}, {"witness", f.witness}, {"detail", f.detail}});
  j["failures"] = std::move(failures);
  return j.dump() + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("cannot write " + path);
}

}  // namespace relemb
