#include "tailelim/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tailelim {

namespace {

int total_literals(const std::vector<Cube>& primes, const std::vector<int>& chosen) {
  int sum = 0;
  for (int p : chosen) sum += primes[static_cast<std::size_t>(p)].bound_count();
  return sum;
}

// True when `a` beats `b` under (cardinality, literal count, lexicographic
// encoding list). Indices are sorted and primes are in canonical order, so
// index-list comparison is encoding-list comparison.
bool solution_less(const std::vector<Cube>& primes, const std::vector<int>& a,
                   int a_literals, const std::vector<int>& b, int b_literals) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a_literals != b_literals) return a_literals < b_literals;
  return a < b;
}

struct Searcher {
  const std::vector<Cube>& primes;
  const std::vector<std::vector<int>>& prime_rows;
  const std::vector<std::vector<int>>& row_primes;
  std::size_t max_row_span;
  int row_count;

  std::vector<int> best;
  int best_literals = std::numeric_limits<int>::max();
  bool have_best = false;

  std::vector<int> chosen;
  std::vector<int> cover_depth;  // per row: how many chosen primes cover it
  int uncovered;

  Searcher(const std::vector<Cube>& primes_,
           const std::vector<std::vector<int>>& prime_rows_,
           const std::vector<std::vector<int>>& row_primes_,
           std::size_t max_row_span_, int row_count_)
      : primes(primes_), prime_rows(prime_rows_), row_primes(row_primes_),
        max_row_span(max_row_span_), row_count(row_count_),
        cover_depth(static_cast<std::size_t>(row_count_), 0),
        uncovered(row_count_) {}

  void take(int p) {
    chosen.push_back(p);
    for (int r : prime_rows[static_cast<std::size_t>(p)]) {
      if (cover_depth[static_cast<std::size_t>(r)]++ == 0) --uncovered;
    }
  }

  void drop(int p) {
    chosen.pop_back();
    for (int r : prime_rows[static_cast<std::size_t>(p)]) {
      if (--cover_depth[static_cast<std::size_t>(r)] == 0) ++uncovered;
    }
  }

  void search() {
    if (uncovered == 0) {
      std::vector<int> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      const int literals = total_literals(primes, sorted);
      if (!have_best ||
          solution_less(primes, sorted, literals, best, best_literals)) {
        best = std::move(sorted);
        best_literals = literals;
        have_best = true;
      }
      return;
    }
    // Lower bound: each further prime covers at most max_row_span rows.
    const std::size_t lb =
        (static_cast<std::size_t>(uncovered) + max_row_span - 1) / max_row_span;
    if (have_best && chosen.size() + lb > best.size()) return;

    // Branch on the uncovered row with the fewest remaining choices.
    int pick = -1;
    std::size_t pick_options = std::numeric_limits<std::size_t>::max();
    for (int r = 0; r < row_count; ++r) {
      if (cover_depth[static_cast<std::size_t>(r)] > 0) continue;
      const std::size_t options = row_primes[static_cast<std::size_t>(r)].size();
      if (options < pick_options) {
        pick_options = options;
        pick = r;
      }
    }
    for (int p : row_primes[static_cast<std::size_t>(pick)]) {
      take(p);
      search();
      drop(p);
    }
  }
};

}  // namespace

Cover exact_minimum_cover(const FunctionSpec& f, int width_cap) {
  if (f.width() > width_cap) {
    throw std::invalid_argument("exact_minimum_cover caps at width " +
                                std::to_string(width_cap) + ", got " +
                                std::to_string(f.width()));
  }
  if (f.on().empty()) return Cover(f.width());

  const Cover primes = prime_implicants(f);
  const std::vector<std::uint32_t>& rows = f.on().members();
  const int row_count = static_cast<int>(rows.size());
  const int prime_count = static_cast<int>(primes.size());

  std::vector<std::vector<int>> prime_rows(static_cast<std::size_t>(prime_count));
  std::vector<std::vector<int>> row_primes(static_cast<std::size_t>(row_count));
  for (int p = 0; p < prime_count; ++p) {
    for (int r = 0; r < row_count; ++r) {
      if (primes.cubes()[static_cast<std::size_t>(p)].covers(rows[static_cast<std::size_t>(r)])) {
        prime_rows[static_cast<std::size_t>(p)].push_back(r);
        row_primes[static_cast<std::size_t>(r)].push_back(p);
      }
    }
  }
  std::size_t max_row_span = 1;
  for (const auto& pr : prime_rows) max_row_span = std::max(max_row_span, pr.size());

  Searcher s(primes.cubes(), prime_rows, row_primes, max_row_span, row_count);

  // Essential columns: a required minterm covered by exactly one prime
  // forces that prime into every solution.
  for (int r = 0; r < row_count; ++r) {
    if (row_primes[static_cast<std::size_t>(r)].size() == 1) {
      const int p = row_primes[static_cast<std::size_t>(r)].front();
      if (std::find(s.chosen.begin(), s.chosen.end(), p) == s.chosen.end()) {
        s.take(p);
      }
    }
  }

  s.search();

  std::vector<Cube> out;
  out.reserve(s.best.size());
  for (int p : s.best) out.push_back(primes.cubes()[static_cast<std::size_t>(p)]);
  return Cover(f.width(), std::move(out));
}

ScoreReport score(const MinimizationTrace& trace, const FunctionSpec& f,
                  std::chrono::duration<double, std::milli> heuristic_runtime,
                  int width_cap) {
  if (trace.final.width() != f.width()) {
    throw std::invalid_argument("trace width does not match the scored function");
  }

  ScoreReport report;
  report.runtime_heuristic = heuristic_runtime;

  const auto t0 = std::chrono::steady_clock::now();
  const Cover exact = exact_minimum_cover(f, width_cap);
  report.runtime_exact = std::chrono::steady_clock::now() - t0;
  report.optimal_terms = static_cast<int>(exact.size());

  auto literal_sum = [](const Cover& v) {
    int sum = 0;
    for (const Cube& c : v.cubes()) sum += c.bound_count();
    return sum;
  };
  report.input_terms = static_cast<int>(trace.initial.size());
  report.output_terms = static_cast<int>(trace.final.size());
  report.input_literals = literal_sum(trace.initial);
  report.output_literals = literal_sum(trace.final);

  const MintermSet covered = cover_minterms(trace.final);
  bool ok = true;
  for (std::uint32_t m : f.on().members()) {
    if (!covered.contains(m)) {
      ok = false;
      break;
    }
  }
  if (ok) {
    for (std::uint32_t m : covered.members()) {
      if (!f.on().contains(m) && !f.dc().contains(m)) {
        ok = false;
        break;
      }
    }
  }
  report.equivalent = ok;
  report.is_optimal = report.equivalent && report.output_terms == report.optimal_terms;
  return report;
}

}  // namespace tailelim
