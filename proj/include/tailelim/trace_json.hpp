#pragma once

#include "tailelim/engine.hpp"

#include <json.hpp>

namespace tailelim {

// Trace schema: {"mode", "initial", "final", "equivalent", "iterations":
// [{"cover", "matrix", "totals", "quotients", "tails", "selectives",
// "removable", "removed", "end_reason"}]}. Cubes are canonical encodings;
// each matrix is row-major with -1 on the diagonal; "removed" and
// "end_reason" are null on iterations where they do not apply.
nlohmann::json trace_to_json(const MinimizationTrace& trace);

std::string trace_to_json_string(const MinimizationTrace& trace, int indent = 2);

}  // namespace tailelim
