#pragma once

#include <span>
#include <string>
#include <vector>

namespace relemb {

enum class PointColor { none, black, white, red };

// Two distinct black points, as indices into the input sequence, and the
// number q of white or red points on the forward interval [first, second].
struct DivisionResult {
  int first = -1;
  int second = -1;
  int count = 0;
};

// One message per failed hypothesis; empty when all hold. Uncolored points
// are ignored throughout.
std::vector<std::string> division_hypothesis_violations(std::span<const PointColor> points,
                                                        int m, double p);

// Scans ordered pairs of black points and returns the first (lexicographic in
// the black index) with p - m < q < p + m. Throws HypothesisError listing
// every violated hypothesis, and InternalError if no pair works despite them.
DivisionResult division_search(std::span<const PointColor> points, int m, double p);

}  // namespace relemb
