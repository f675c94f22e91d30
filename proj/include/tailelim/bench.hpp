#pragma once

#include "tailelim/oracle.hpp"

#include <json.hpp>

namespace tailelim {

// Parameters of one benchmark sweep over random (or exhaustively enumerated)
// functions.
struct BenchSpec {
  int width = 4;             // n
  int count = 100;           // generated functions (ignored when exhaustive)
  double on_density = 0.3;   // P(minterm is required TRUE)
  double dc_density = 0.0;   // P(minterm is a don't-care)
  std::uint64_t seed = 1;
  Mode mode = Mode::safe;
  AnchorPolicy anchor = AnchorPolicy::tail_only;
  bool exhaustive = false;   // enumerate all 2^(2^n) ON-sets; needs n <= 4
  int jobs = 1;
};

// One scored function, mirroring the CSV columns.
struct BenchRow {
  int index = 0;
  int n = 0;
  int on_count = 0;
  int dc_count = 0;
  int te_terms = 0;
  int te_literals = 0;
  int exact_terms = 0;
  bool equivalent = false;
  bool optimal = false;
  double te_ms = 0.0;
  double exact_ms = 0.0;
};

struct BenchReport {
  BenchSpec spec;
  std::vector<BenchRow> rows;

  int equivalent_count() const;
  int optimal_count() const;
  // equivalent / total, as an exact integer ratio.
  double equivalence_rate() const;
  // optimal / equivalent; vacuously 1 when nothing was equivalent.
  double optimality_rate() const;
  // Mean of te_terms / exact_terms over equivalent rows with exact_terms > 0;
  // 1 when no row qualifies.
  double mean_term_ratio() const;
  double mean_te_ms() const;
  double mean_exact_ms() const;
};

// Deterministic function generator. Function `index` draws from a SplitMix64
// stream whose initial state is seed XOR (0x9E3779B97F4A7C15 * (index + 1));
// for each minterm m = 0 .. 2^n - 1 in order, one 64-bit draw u becomes
// x = (u >> 11) / 2^53, and the minterm is ON when x < on_density, else DC
// when x < on_density + dc_density, else OFF. SplitMix64 advances its state
// by 0x9E3779B97F4A7C15 and returns the standard two-round mix of it.
FunctionSpec generate_function(const BenchSpec& spec, int index);

// The exhaustive enumeration used when spec.exhaustive is set: ON-set =
// bits of `code`, no don't-cares.
FunctionSpec function_from_code(int width, std::uint64_t code);

// Expands each function to its primes, runs the Tail-Eliminate engine, and
// scores against the exact oracle. Functions are partitioned across
// spec.jobs workers; rows are ordered by index regardless of completion
// order, so everything except the timing columns is deterministic.
BenchReport run_bench(const BenchSpec& spec);

// CSV with header: index,n,on_count,dc_count,te_terms,te_literals,
// exact_terms,equivalent,optimal,te_ms,exact_ms. Flags are 0/1 and times
// have three decimals.
std::string bench_csv(const BenchReport& report);

// Aggregate summary; rates and ratios are rendered to exactly six decimals
// (as strings) so they re-derive byte-identically from the CSV rows.
nlohmann::json bench_summary(const BenchReport& report);

}  // namespace tailelim
