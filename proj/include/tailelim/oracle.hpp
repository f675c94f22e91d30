#pragma once

#include "tailelim/engine.hpp"
#include "tailelim/expand.hpp"

#include <chrono>

namespace tailelim {

// Default width cap for the exact covering search. The search is exhaustive
// over the prime set; beyond this it stops being a desk-scale oracle.
inline constexpr int default_exact_width_cap = 16;

// A minimum-cardinality cover of f.on by prime implicants of f, found by
// branch-and-bound set cover (essential columns forced first). Ties are
// broken by fewest total bound literals, then by lexicographic cube order.
// The result covers all of f.on and stays within f.on ∪ f.dc. Throws
// std::invalid_argument when f.width() exceeds `width_cap`.
Cover exact_minimum_cover(const FunctionSpec& f, int width_cap = default_exact_width_cap);

// How a heuristic run measured up against the function and the exact oracle.
struct ScoreReport {
  int input_terms = 0;
  int output_terms = 0;
  int input_literals = 0;   // sum of bound-literal counts over cubes
  int output_literals = 0;
  bool equivalent = false;  // final cover ⊇ on and ⊆ on ∪ dc
  int optimal_terms = 0;    // exact minimum cardinality
  bool is_optimal = false;  // equivalent and output_terms == optimal_terms
  std::chrono::duration<double, std::milli> runtime_heuristic{0};
  std::chrono::duration<double, std::milli> runtime_exact{0};
};

// Scores `trace.final` against `f`. Don't-cares are excluded from the
// required set but allowed in the covered set. The exact oracle runs (and is
// timed) here; the heuristic runtime is whatever the caller measured.
ScoreReport score(const MinimizationTrace& trace, const FunctionSpec& f,
                  std::chrono::duration<double, std::milli> heuristic_runtime =
                      std::chrono::duration<double, std::milli>{0},
                  int width_cap = default_exact_width_cap);

}  // namespace tailelim
