#include "tailelim/engine.hpp"

#include "tailelim/expand.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tailelim {

const char* to_string(Mode m) {
  return m == Mode::faithful ? "faithful" : "safe";
}

const char* to_string(AnchorPolicy a) {
  return a == AnchorPolicy::tail_only ? "tail_only" : "any_essential";
}

const char* to_string(EndReason r) {
  switch (r) {
    case EndReason::all_quotients_positive: return "ALL_QUOTIENTS_POSITIVE";
    case EndReason::all_quotients_equal: return "ALL_QUOTIENTS_EQUAL";
    case EndReason::no_removable_selective: return "NO_REMOVABLE_SELECTIVE";
    case EndReason::no_safe_removal: return "NO_SAFE_REMOVAL";
  }
  return "?";
}

std::vector<Cube> MinimizationTrace::removed_cubes() const {
  std::vector<Cube> out;
  for (const IterationRecord& step : steps) {
    if (step.removed) out.push_back(*step.removed);
  }
  return out;
}

std::optional<EndReason> end_condition(const TeMap& m) {
  bool all_positive = true;
  bool all_equal = true;
  const std::int64_t first = m.stats().front().tail_quotient;
  for (const ImplicantStats& s : m.stats()) {
    if (s.tail_quotient <= 0) all_positive = false;
    if (s.tail_quotient != first) all_equal = false;
  }
  if (all_positive) return EndReason::all_quotients_positive;
  if (all_equal) return EndReason::all_quotients_equal;
  return std::nullopt;
}

namespace {

// Implicants covering at least one minterm of `v` that no other implicant
// covers (the classical essential primes of the current cover).
std::vector<int> essential_indices(const Cover& v) {
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bool has_private_minterm = false;
    for (std::uint32_t m : minterms(v.cubes()[i]).members()) {
      bool covered_elsewhere = false;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (j != i && v.cubes()[j].covers(m)) {
          covered_elsewhere = true;
          break;
        }
      }
      if (!covered_elsewhere) {
        has_private_minterm = true;
        break;
      }
    }
    if (has_private_minterm) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace

RemovalAnalysis analyze_removal(const TeMap& m, Mode mode, const Cover& remaining,
                                AnchorPolicy anchor) {
  RemovalAnalysis out;
  const Classification cls = classify(m);
  out.anchors = anchor == AnchorPolicy::tail_only ? cls.tails
                                                  : essential_indices(remaining);

  for (int i : cls.selectives) {
    bool overlaps_anchor = false;
    for (int a : out.anchors) {
      if (a != i && m.count(i, a) > 0) {
        overlaps_anchor = true;
        break;
      }
    }
    if (overlaps_anchor) out.removable.push_back(i);
  }

  std::vector<int> candidates;
  if (mode == Mode::safe) {
    for (int i : out.removable) {
      if (is_redundant_in(m.implicants()[static_cast<std::size_t>(i)], remaining)) {
        candidates.push_back(i);
      } else {
        out.skipped_unsafe.push_back(m.implicants()[static_cast<std::size_t>(i)]);
      }
    }
  } else {
    candidates = out.removable;
  }

  for (int i : candidates) {
    if (!out.chosen) {
      out.chosen = i;
      continue;
    }
    const ImplicantStats& best = m.stats()[static_cast<std::size_t>(*out.chosen)];
    const ImplicantStats& cur = m.stats()[static_cast<std::size_t>(i)];
    if (cur.total_overlaps > best.total_overlaps ||
        (cur.total_overlaps == best.total_overlaps &&
         encoding_less(cur.cube, best.cube))) {
      out.chosen = i;
    }
  }
  return out;
}

std::optional<Cube> select_removal(const TeMap& m, Mode mode, const Cover& remaining,
                                   AnchorPolicy anchor) {
  const RemovalAnalysis a = analyze_removal(m, mode, remaining, anchor);
  if (!a.chosen) return std::nullopt;
  return m.implicants()[static_cast<std::size_t>(*a.chosen)];
}

MinimizationTrace te_minimize(const Cover& v, Mode mode, AnchorPolicy anchor,
                              bool expand_first) {
  if (v.empty()) {
    throw std::invalid_argument("cannot minimize an empty cover");
  }
  if (v.width() > max_enum_width) {
    throw std::invalid_argument(
        "te_minimize verifies equivalence by truth table and supports width <= " +
        std::to_string(max_enum_width));
  }

  const Cover start = expand_first ? expand_cover(v) : v;
  MinimizationTrace trace{mode, anchor, start, {}, start, false};

  Cover current = start;
  while (true) {
    IterationRecord rec{current, build_te_map(current), {}, {}, {}, {}, {}, {}};
    const Classification cls = classify(rec.map);
    rec.tails = cls.tails;
    rec.selectives = cls.selectives;

    if (const std::optional<EndReason> end = end_condition(rec.map)) {
      rec.end_reason = end;
      trace.steps.push_back(std::move(rec));
      break;
    }

    RemovalAnalysis analysis = analyze_removal(rec.map, mode, current, anchor);
    rec.removable = analysis.removable;
    rec.skipped_unsafe = std::move(analysis.skipped_unsafe);
    if (!analysis.chosen) {
      rec.end_reason = rec.removable.empty() ? EndReason::no_removable_selective
                                             : EndReason::no_safe_removal;
      trace.steps.push_back(std::move(rec));
      break;
    }

    rec.removed = current.cubes()[static_cast<std::size_t>(*analysis.chosen)];
    trace.steps.push_back(std::move(rec));
    current = current.without(*analysis.chosen);
  }

  trace.final = current;
  trace.equivalent_to_input = equivalent(trace.final, trace.initial);
  assert(trace.removed_cubes().size() == trace.initial.size() - trace.final.size());
  return trace;
}

}  // namespace tailelim
