#include "tailelim/trace_json.hpp"

namespace tailelim {

namespace {

nlohmann::json cover_encodings(const Cover& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const Cube& c : v.cubes()) out.push_back(c.to_string());
  return out;
}

}  // namespace

nlohmann::json trace_to_json(const MinimizationTrace& trace) {
  nlohmann::json iterations = nlohmann::json::array();
  for (const IterationRecord& step : trace.steps) {
    const int n = static_cast<int>(step.map.size());
    nlohmann::json matrix = nlohmann::json::array();
    for (int i = 0; i < n; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < n; ++j) {
        row.push_back(i == j ? -1 : static_cast<std::int64_t>(step.map.count(i, j)));
      }
      matrix.push_back(std::move(row));
    }
    nlohmann::json totals = nlohmann::json::array();
    nlohmann::json quotients = nlohmann::json::array();
    for (const ImplicantStats& s : step.map.stats()) {
      totals.push_back(s.total_overlaps);
      quotients.push_back(s.tail_quotient);
    }
    iterations.push_back({
        {"cover", cover_encodings(step.cover_before)},
        {"matrix", std::move(matrix)},
        {"totals", std::move(totals)},
        {"quotients", std::move(quotients)},
        {"tails", step.tails},
        {"selectives", step.selectives},
        {"removable", step.removable},
        {"removed", step.removed ? nlohmann::json(step.removed->to_string())
                                 : nlohmann::json(nullptr)},
        {"end_reason", step.end_reason ? nlohmann::json(to_string(*step.end_reason))
                                       : nlohmann::json(nullptr)},
    });
  }
  return nlohmann::json{
      {"mode", to_string(trace.mode)},
      {"initial", cover_encodings(trace.initial)},
      {"final", cover_encodings(trace.final)},
      {"equivalent", trace.equivalent_to_input},
      {"iterations", std::move(iterations)},
  };
}

std::string trace_to_json_string(const MinimizationTrace& trace, int indent) {
  return trace_to_json(trace).dump(indent) + "\n";
}

}  // namespace tailelim
