#pragma once

#include <string>
#include <utility>
#include <vector>

namespace relemb {

struct TraceStep {
  std::string case_label;  // "1", "2.1.1", ..., "3.2.2", or "small.*"
  std::string op;
  int antifaces_before = 0;
  int antifaces_after = 0;
  // Named integer witnesses: vertices, face anchors, positions.
  std::vector<std::pair<std::string, std::vector<int>>> witnesses;
};

// Append-only log of surgery applications. Surgeries tag each record with the
// case label most recently set by the caller.
class ReductionTrace {
 public:
  void set_case(std::string label) { current_case_ = std::move(label); }
  const std::string& current_case() const noexcept { return current_case_; }

  void record(std::string op, int before, int after,
              std::vector<std::pair<std::string, std::vector<int>>> witnesses = {});

  const std::vector<TraceStep>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }

  // One JSON object per line.
  std::string to_json_lines() const;

 private:
  std::string current_case_;
  std::vector<TraceStep> steps_;
};

}  // namespace relemb
