#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include "relemb/digraph.hpp"
#include "relemb/embedding.hpp"

namespace relemb {

inline constexpr std::int64_t kDefaultOracleLimit = 10'000'000;

struct OracleDistribution {
  std::map<int, std::int64_t> counts;  // antiface count -> number of embeddings
  int min = 0;
  int max = 0;
  std::int64_t states = 0;
};

// Product over vertices of (indegree - 1)!, saturated at INT64_MAX.
std::int64_t relative_embedding_count(const Digraph& d);

// Visits every rotation system whose profaces are exactly c: at each vertex
// the pairs (fw(h), h) are arranged cyclically, the first pair held fixed and
// the rest permuted lexicographically. Throws HypothesisError when the count
// exceeds limit.
void for_each_relative_embedding(const Digraph& d, const CircuitDecomposition& c, std::int64_t limit,
                                 const std::function<void(const RotationSystem&)>& visit);

// Streaming antiface-count tally over the same state space.
OracleDistribution enumerate_relative_embeddings(const Digraph& d, const CircuitDecomposition& c,
                                                 std::int64_t limit = kDefaultOracleLimit);

struct MaximalityCertificate {
  bool pass = false;
  int antifaces = 0;
  int oracle_min = 0;
};

MaximalityCertificate certify_maximal(const Embedding& e, const CircuitDecomposition& c,
                                      std::int64_t limit = kDefaultOracleLimit);

}  // namespace relemb
