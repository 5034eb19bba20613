#include <memory>

#include <benchmark/benchmark.h>

#include "relemb/embedding.hpp"
#include "relemb/generators.hpp"
#include "relemb/oracle.hpp"
#include "relemb/reducer.hpp"

namespace {

using namespace relemb;

void BM_ReduceTournament(benchmark::State& state) {
  auto d = std::make_shared<const Digraph>(gen_rotational_tournament(static_cast<int>(state.range(0))));
  CircuitDecomposition c(*d, {euler_circuit(*d)});
  for (auto _ : state) {
    ReductionResult r = reduce_to_upper_embedding(d, c);
    benchmark::DoNotOptimize(r.embedding.num_antifaces());
  }
}
BENCHMARK(BM_ReduceTournament)->Arg(7)->Arg(13)->Arg(21)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_ReduceSteiner(benchmark::State& state) {
  SteinerSystem s = gen_sts(static_cast<int>(state.range(0)));
  auto d = std::make_shared<const Digraph>(s.digraph);
  for (auto _ : state) {
    ReductionResult r = reduce_to_upper_embedding(d, s.circuits);
    benchmark::DoNotOptimize(r.embedding.num_antifaces());
  }
}
BENCHMARK(BM_ReduceSteiner)->Arg(7)->Arg(9)->Arg(13)->Arg(19)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_ReduceRandomDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto d = std::make_shared<const Digraph>(gen_random_dense_eulerian(n, 1, 7));
  CircuitDecomposition c = random_circuit_decomposition(*d, 11);
  for (auto _ : state) {
    ReductionResult r = reduce_to_upper_embedding(d, c, {ReduceMode::best_effort, false});
    benchmark::DoNotOptimize(r.embedding.num_antifaces());
  }
}
BENCHMARK(BM_ReduceRandomDense)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_TraceFaces(benchmark::State& state) {
  auto d = std::make_shared<const Digraph>(gen_rotational_tournament(static_cast<int>(state.range(0))));
  CircuitDecomposition c = random_circuit_decomposition(*d, 3);
  Embedding e = embed_from_decomposition(d, c);
  for (auto _ : state) {
    FaceSet f = trace_faces(*d, e.rotation_system());
    benchmark::DoNotOptimize(f.antifaces.size());
  }
}
BENCHMARK(BM_TraceFaces)->Arg(11)->Arg(31);

void BM_OracleSteiner7(benchmark::State& state) {
  SteinerSystem s = gen_sts(7);
  for (auto _ : state) {
    OracleDistribution dist = enumerate_relative_embeddings(s.digraph, s.circuits);
    benchmark::DoNotOptimize(dist.min);
  }
}
BENCHMARK(BM_OracleSteiner7)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
