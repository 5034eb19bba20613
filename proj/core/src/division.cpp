#include "relemb/division.hpp"

#include "relemb/errors.hpp"

namespace relemb {

namespace {

struct Tally {
  std::vector<int> blacks;
  int white = 0;
  int red = 0;
};

Tally tally(std::span<const PointColor> points) {
  Tally t;
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    switch (points[i]) {
      case PointColor::black: t.blacks.push_back(i); break;
      case PointColor::white: ++t.white; break;
      case PointColor::red: ++t.red; break;
      case PointColor::none: break;
    }
  }
  return t;
}

bool colored(PointColor c) { return c == PointColor::white || c == PointColor::red; }

}  // namespace

std::vector<std::string> division_hypothesis_violations(std::span<const PointColor> points,
                                                        int m, double p) {
  std::vector<std::string> out;
  Tally t = tally(points);
  const int ell = t.white + t.red;
  const int len = static_cast<int>(points.size());
  if (m < 1) out.push_back("m must be a positive integer, got " + std::to_string(m));
  if (t.blacks.size() < 2)
    out.push_back("need at least two black points, found " + std::to_string(t.blacks.size()));
  if (!t.blacks.empty()) {
    const int kb = static_cast<int>(t.blacks.size());
    for (int i = 0; i < kb; ++i) {
      int from = t.blacks[i];
      int to = t.blacks[(i + 1) % kb];
      int span = kb == 1 ? len : (to - from + len) % len;
      int whites = 0;
      for (int s = 1; s < span; ++s)
        if (points[(from + s) % len] == PointColor::white) ++whites;
      if (whites > m)
        out.push_back("interval after black point " + std::to_string(from) + " holds " +
                      std::to_string(whites) + " white points, more than m = " + std::to_string(m));
    }
  }
  if (t.white <= t.red)
    out.push_back("white points (" + std::to_string(t.white) + ") must outnumber red points (" +
                  std::to_string(t.red) + ")");
  if (p < m || p > ell - m)
    out.push_back("p = " + std::to_string(p) + " lies outside [m, l - m] with l = " +
                  std::to_string(ell));
  return out;
}

DivisionResult division_search(std::span<const PointColor> points, int m, double p) {
  auto problems = division_hypothesis_violations(points, m, p);
  if (!problems.empty()) {
    std::string msg = "division hypotheses violated:";
    for (const auto& s : problems) msg += "\n  " + s;
    throw HypothesisError(msg);
  }
  const int len = static_cast<int>(points.size());
  // prefix[i] = colored points among indices [0, i).
  std::vector<int> prefix(len + 1, 0);
  for (int i = 0; i < len; ++i) prefix[i + 1] = prefix[i] + (colored(points[i]) ? 1 : 0);
  const int ell = prefix[len];
  auto between = [&](int from, int to) {  // colored points on the forward interval [from, to]
    return from <= to ? prefix[to + 1] - prefix[from]
                      : ell - (prefix[from] - prefix[to + 1]);
  };
  Tally t = tally(points);
  for (int bi : t.blacks) {
    for (int bj : t.blacks) {
      if (bi == bj) continue;
      int q = between(bi, bj);
      if (p - m < q && q < p + m) return {bi, bj, q};
    }
  }
  throw InternalError("no feasible black pair although the division hypotheses hold");
}

}  // namespace relemb
