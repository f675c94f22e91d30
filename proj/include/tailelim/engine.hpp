#pragma once

#include "tailelim/temap.hpp"

namespace tailelim {

// FAITHFUL runs the published procedure verbatim: a selective implicant that
// overlaps an anchor is removed without checking that its minterms stay
// covered, so the result can change the function (the trailing equivalence
// verdict makes that observable). SAFE additionally requires each removal to
// be redundant in the remaining cover and therefore always preserves the
// function.
enum class Mode : std::uint8_t { faithful, safe };

// What a removal candidate must overlap. tail_only anchors on the tail
// implicants (the quotient maximizers). any_essential widens the anchor set
// to every implicant that covers some minterm no other implicant of the
// current cover does — a sensitivity toggle for the procedure's ambiguous
// "(an essential prime implicant)" reading.
enum class AnchorPolicy : std::uint8_t { tail_only, any_essential };

enum class EndReason : std::uint8_t {
  all_quotients_positive,
  all_quotients_equal,
  no_removable_selective,
  no_safe_removal,  // SAFE only: candidates exist but none is redundant
};

const char* to_string(Mode m);
const char* to_string(AnchorPolicy a);
const char* to_string(EndReason r);

// One pass of steps 2-6: the rebuilt map, its classification, the candidate
// set, and either the cube removed or the reason the run stopped here
// (exactly one of the two is present).
struct IterationRecord {
  Cover cover_before;
  TeMap map;
  std::vector<int> tails;
  std::vector<int> selectives;
  std::vector<int> removable;  // selectives overlapping at least one anchor
  std::optional<Cube> removed;
  std::vector<Cube> skipped_unsafe;  // SAFE only: candidates that were not redundant
  std::optional<EndReason> end_reason;
};

struct MinimizationTrace {
  Mode mode = Mode::safe;
  AnchorPolicy anchor = AnchorPolicy::tail_only;
  Cover initial;
  std::vector<IterationRecord> steps;
  Cover final;
  bool equivalent_to_input = false;

  EndReason end_reason() const { return *steps.back().end_reason; }
  std::vector<Cube> removed_cubes() const;
};

// End conditions, checked over ALL implicants including zero-overlap ones
// and in this order: every tail quotient > 0, then all tail quotients equal.
// Absent means the procedure continues.
std::optional<EndReason> end_condition(const TeMap& m);

// The candidate set and tie-break outcome for one iteration.
struct RemovalAnalysis {
  std::vector<int> anchors;
  std::vector<int> removable;
  std::vector<Cube> skipped_unsafe;
  std::optional<int> chosen;
};

// Candidates are selective implicants overlapping at least one anchor other
// than themselves; SAFE mode drops candidates that are not redundant in
// `remaining`. The winner has the highest total overlap count, with ties
// broken by smallest canonical encoding.
RemovalAnalysis analyze_removal(const TeMap& m, Mode mode, const Cover& remaining,
                                AnchorPolicy anchor = AnchorPolicy::tail_only);

// The winning cube only; absent when no candidate survives.
std::optional<Cube> select_removal(const TeMap& m, Mode mode, const Cover& remaining,
                                   AnchorPolicy anchor = AnchorPolicy::tail_only);

// The full iterative procedure: rebuild map, check end conditions, remove at
// most one implicant, repeat. Records every iteration and finishes with a
// truth-table equivalence verdict against the starting cover. Throws
// std::invalid_argument on an empty cover or unsupported width. Callers are
// expected to pass an expanded cover; set `expand_first` to expand here.
MinimizationTrace te_minimize(const Cover& v, Mode mode,
                              AnchorPolicy anchor = AnchorPolicy::tail_only,
                              bool expand_first = false);

}  // namespace tailelim
