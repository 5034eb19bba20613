// relemb: command-line front end for relative upper embeddings.
//
// Exit codes: 0 success, 1 invalid input, 2 hypothesis failure or no
// progress, 3 I/O error, 4 internal error.

#include <future>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relemb/digraph.hpp"
#include "relemb/embedding.hpp"
#include "relemb/errors.hpp"
#include "relemb/generators.hpp"
#include "relemb/io.hpp"
#include "relemb/oracle.hpp"
#include "relemb/reducer.hpp"
#include "relemb/render.hpp"
#include "relemb/touch_graph.hpp"

namespace {

using namespace relemb;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kInvalid = 1, kHypothesis = 2, kIo = 3, kInternal = 4 };

struct Options {
  std::string in;
  std::string circuits;
  std::string embedding;
  std::string out;
  std::string trace;
  std::string circuits_out;
  std::string touch_graph;
  bool strict = false;
  bool best_effort = false;
  std::uint64_t seed = 1;
  std::int64_t limit = kDefaultOracleLimit;
  int n = 7;
  int k = 0;
  std::string kind;
  std::vector<std::string> batch_inputs;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-")
    std::cout << text;
  else
    write_text_file(o.out, text);
}

std::string require(const std::string& value, const char* flag) {
  if (value.empty()) throw InvalidInput(std::string("missing required flag ") + flag);
  return value;
}

Digraph load_digraph(const Options& o) { return digraph_from_json(read_text_file(require(o.in, "--in"))); }

// Circuits from --circuits, or a single euler circuit when the flag is absent.
CircuitDecomposition load_circuits(const Digraph& d, const Options& o) {
  if (o.circuits.empty()) return CircuitDecomposition(d, {euler_circuit(d)});
  return CircuitDecomposition(d, circuits_from_json(read_text_file(o.circuits)));
}

Embedding load_embedding(std::shared_ptr<const Digraph> d, const Options& o) {
  return Embedding(std::move(d), rotations_from_json(read_text_file(require(o.embedding, "--embedding"))));
}

ReduceOptions reduce_options(const Options& o) {
  ReduceOptions opts;
  opts.mode = o.best_effort ? ReduceMode::best_effort : ReduceMode::strict;
  return opts;
}

int cmd_embed(const Options& o) {
  auto d = std::make_shared<const Digraph>(load_digraph(o));
  CircuitDecomposition c = load_circuits(*d, o);
  ReductionResult r = reduce_to_upper_embedding(d, c, reduce_options(o));
  emit(o, embedding_to_json(r.embedding));
  if (!o.trace.empty()) write_text_file(o.trace, r.trace.to_json_lines());
  std::cerr << "outcome: " << to_string(r.outcome) << "\n"
            << "antifaces: " << r.embedding.num_antifaces() << "\n"
            << "genus: " << euler_genus(r.embedding) << "\n";
  if (!r.diagnostic.empty()) std::cerr << "diagnostic: " << r.diagnostic << "\n";
  return r.outcome == ReduceOutcome::reduced ? kOk : kHypothesis;
}

int cmd_verify(const Options& o) {
  Digraph d = load_digraph(o);
  CircuitDecomposition c = load_circuits(d, o);
  RotationSystem rs = rotations_from_json(read_text_file(require(o.embedding, "--embedding")));
  VerificationReport report = verify_embedding(d, rs, c);
  emit(o, verification_to_json(report));
  if (!report.ok()) std::cerr << report.summary() << "\n";
  return report.ok() ? kOk : kInvalid;
}

int cmd_oracle(const Options& o) {
  Digraph d = load_digraph(o);
  CircuitDecomposition c = load_circuits(d, o);
  emit(o, distribution_to_json(enumerate_relative_embeddings(d, c, o.limit)));
  return kOk;
}

int cmd_gen(const Options& o) {
  Digraph d;
  std::optional<CircuitDecomposition> c;
  if (o.kind == "tournament") {
    d = gen_rotational_tournament(o.n);
  } else if (o.kind == "kn-minus-pm") {
    d = gen_kn_minus_pm(o.n);
  } else if (o.kind == "sts") {
    SteinerSystem s = gen_sts(o.n);
    d = s.digraph;
    c = s.circuits;
  } else if (o.kind == "random") {
    d = gen_random_dense_eulerian(o.n, o.k, o.seed);
  } else {
    throw InvalidInput("unknown generator: " + o.kind);
  }
  emit(o, digraph_to_json(d));
  if (!o.circuits_out.empty()) {
    if (!c) c = CircuitDecomposition(d, {euler_circuit(d)});
    write_text_file(o.circuits_out, circuits_to_json(*c));
  }
  return kOk;
}

int cmd_faces(const Options& o) {
  auto d = std::make_shared<const Digraph>(load_digraph(o));
  Embedding e = load_embedding(d, o);
  std::ostringstream text;
  auto print = [&](const char* label, const std::vector<FaceWalk>& faces) {
    for (std::size_t i = 0; i < faces.size(); ++i) {
      text << label << " " << i << ":";
      for (VertexId v : faces[i].vertex_walk(*d)) text << " " << v;
      text << "\n";
    }
  };
  print("proface", e.profaces());
  print("antiface", e.antifaces());
  emit(o, text.str());
  if (!o.touch_graph.empty()) {
    std::string dot = build_touch_graph(e).to_dot();
    if (o.touch_graph == "-")
      std::cout << dot;
    else
      write_text_file(o.touch_graph, dot);
  }
  return kOk;
}

int cmd_render(const Options& o) {
  auto d = std::make_shared<const Digraph>(load_digraph(o));
  emit(o, render_svg(load_embedding(d, o)));
  return kOk;
}

// One JSON line per input digraph, each reduced with a single euler circuit.
int cmd_batch(const Options& o) {
  if (o.batch_inputs.empty()) throw InvalidInput("batch needs at least one input file");
  const ReduceOptions opts = reduce_options(o);
  std::vector<std::future<ordered_json>> jobs;
  for (const std::string& path : o.batch_inputs) {
    jobs.push_back(std::async(std::launch::async, [path, opts] {
      ordered_json line;
      line["input"] = path;
      try {
        auto d = std::make_shared<const Digraph>(digraph_from_json(read_text_file(path)));
        CircuitDecomposition c(*d, {euler_circuit(*d)});
        ReductionResult r = reduce_to_upper_embedding(d, c, opts);
        line["status"] = to_string(r.outcome);
        line["antifaces"] = r.embedding.num_antifaces();
        line["genus"] = euler_genus(r.embedding);
      } catch (const std::exception& ex) {
        line["status"] = "error";
        line["error"] = ex.what();
      }
      return line;
    }));
  }
  std::string text;
  bool all_ok = true;
  for (auto& job : jobs) {
    ordered_json line = job.get();
    all_ok = all_ok && line["status"] == "reduced";
    text += line.dump() + "\n";
  }
  emit(o, text);
  return all_ok ? kOk : kHypothesis;
}

template <class F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const IoError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kIo;
  } catch (const InvalidInput& ex) {
    std::cerr << "invalid input: " << ex.what() << "\n";
    return kInvalid;
  } catch (const HypothesisError& ex) {
    std::cerr << "hypothesis not satisfied: " << ex.what() << "\n";
    return kHypothesis;
  } catch (const NoProgressError& ex) {
    std::cerr << "no progress: " << ex.what() << "\n";
    return kHypothesis;
  } catch (const InternalError& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Relative upper embeddings of dense eulerian digraphs"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--in", o.in, "Digraph JSON");
  app.add_option("--circuits", o.circuits, "Circuit decomposition JSON (default: one euler circuit)");
  app.add_option("--embedding", o.embedding, "Embedding JSON");
  app.add_option("--out", o.out, "Output file (default: stdout)");
  app.add_option("--trace", o.trace, "Write the reduction trace as JSON lines");
  auto* strict = app.add_flag("--strict", o.strict, "Check all hypotheses up front (default)");
  app.add_flag("--best-effort", o.best_effort, "Run on any eulerian digraph and report stalls")->excludes(strict);
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--limit", o.limit, "Oracle state limit");

  auto* embed = app.add_subcommand("embed", "Reduce to a relative upper embedding");
  auto* verify = app.add_subcommand("verify", "Check an embedding against a digraph and circuits");
  auto* oracle = app.add_subcommand("oracle", "Antiface distribution over all relative embeddings");
  auto* gen = app.add_subcommand("gen", "Generate a test digraph");
  gen->add_option("kind", o.kind, "tournament | kn-minus-pm | sts | random")
      ->required()
      ->check(CLI::IsMember({"tournament", "kn-minus-pm", "sts", "random"}));
  gen->add_option("--n", o.n, "Number of vertices");
  gen->add_option("--k", o.k, "Co-degree bound for random instances");
  gen->add_option("--circuits-out", o.circuits_out, "Also write a circuit decomposition");
  auto* faces = app.add_subcommand("faces", "Print face walks");
  faces->add_option("--touch-graph", o.touch_graph, "Write the touch graph as DOT ('-' for stdout)");
  auto* render = app.add_subcommand("render", "Draw an embedding as SVG");
  auto* batch = app.add_subcommand("batch", "Reduce several digraphs in parallel");
  batch->add_option("inputs", o.batch_inputs, "Digraph JSON files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  return guarded([&] {
    if (*embed) return cmd_embed(o);
    if (*verify) return cmd_verify(o);
    if (*oracle) return cmd_oracle(o);
    if (*gen) return cmd_gen(o);
    if (*faces) return cmd_faces(o);
    if (*render) return cmd_render(o);
    return cmd_batch(o);
  });
}
