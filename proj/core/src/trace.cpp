#include "relemb/trace.hpp"

#include <json.hpp>

namespace relemb {

void ReductionTrace::record(std::string op, int before, int after,
                            std::vector<std::pair<std::string, std::vector<int>>> witnesses) {
  steps_.push_back({current_case_, std::move(op), before, after, std::move(witnesses)});
}

std::string ReductionTrace::to_json_lines() const {
  std::string out;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const TraceStep& s = steps_[i];
    nlohmann::ordered_json line;
    line["step"] = i;
    line["case"] = s.case_label;
    line["op"] = s.op;
    line["antifaces_before"] = s.antifaces_before;
    line["antifaces_after"] = s.antifaces_after;
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [name, values] : s.witnesses) w[name] = values;
    line["witnesses"] = std::move(w);
    out += line.dump();
    out += '\n';
  }
  return out;
}

}  // namespace relemb
