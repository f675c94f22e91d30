#pragma once

#include "tailelim/cube.hpp"

namespace tailelim {

// A single-output Boolean function given as its required-TRUE rows (ON-set)
// and unconstrained rows (DC-set). The two sets are disjoint; everything
// else is FALSE.
class FunctionSpec {
public:
  FunctionSpec(int width, MintermSet on, MintermSet dc);
  static FunctionSpec from_on(int width, std::vector<std::uint32_t> on);

  int width() const { return width_; }
  const MintermSet& on() const { return on_; }
  const MintermSet& dc() const { return dc_; }

  friend bool operator==(const FunctionSpec& a, const FunctionSpec& b) = default;

private:
  int width_;
  MintermSet on_;
  MintermSet dc_;
};

// Every prime implicant of `f`: each cube whose minterms lie inside
// on ∪ dc and which stops being an implicant if any bound literal is freed.
// Don't-cares participate in merging, and a prime consisting solely of
// don't-care minterms is still emitted. The result is sorted by canonical
// encoding. An empty ON-set yields the empty cover; the constant-1 function
// yields the single universal cube.
//
// Uses iterative adjacent-cube merging over weight classes (cubes with equal
// bound masks whose values differ in exactly one position combine; merged
// cubes are non-prime).
Cover prime_implicants(const FunctionSpec& f);

// Prime implicants of the function denoted by `v` (no don't-cares). The
// result contains the same cubes as prime_implicants() but keeps input cubes
// that are already prime in their original order, with newly discovered
// primes appended in canonical order, so that downstream map construction
// preserves the caller's column order. Idempotent.
Cover expand_cover(const Cover& v);

}  // namespace tailelim
