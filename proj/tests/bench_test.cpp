#include "tailelim/bench.hpp"

#include <doctest.h>

#include <sstream>

using namespace tailelim;

TEST_CASE("function generation is deterministic") {
  BenchSpec spec;
  spec.width = 6;
  spec.on_density = 0.4;
  spec.dc_density = 0.2;
  spec.seed = 99;
  for (int index : {0, 1, 17}) {
    CHECK(generate_function(spec, index) == generate_function(spec, index));
  }
  // Different indices draw from different streams.
  CHECK(generate_function(spec, 0) != generate_function(spec, 1));
  BenchSpec other = spec;
  other.seed = 100;
  CHECK(generate_function(spec, 0) != generate_function(other, 0));
}

TEST_CASE("density edge cases") {
  BenchSpec spec;
  spec.width = 4;
  spec.on_density = 1.0;
  CHECK(generate_function(spec, 3).on().size() == 16);  // constant 1

  spec.on_density = 0.0;
  spec.dc_density = 0.0;
  const FunctionSpec empty = generate_function(spec, 3);
  CHECK(empty.on().empty());
  CHECK(empty.dc().empty());

  spec.on_density = 0.6;
  spec.dc_density = 0.6;
  CHECK_THROWS_AS(generate_function(spec, 0), std::invalid_argument);
}

TEST_CASE("exhaustive enumeration covers every function code") {
  CHECK(function_from_code(2, 0).on().empty());
  CHECK(function_from_code(2, 0b1111).on().size() == 4);
  CHECK(function_from_code(2, 0b0110).on().members() ==
        std::vector<std::uint32_t>{1, 2});
}

TEST_CASE("safe exhaustive sweep at n=2 is always equivalent") {
  BenchSpec spec;
  spec.width = 2;
  spec.exhaustive = true;
  spec.mode = Mode::safe;
  const BenchReport report = run_bench(spec);
  CHECK(report.rows.size() == 16);
  CHECK(report.equivalent_count() == 16);
  CHECK(report.equivalence_rate() == 1.0);
  for (const BenchRow& row : report.rows) {
    if (row.equivalent) CHECK(row.te_terms >= row.exact_terms);
  }
}

TEST_CASE("worker count does not change the scored rows") {
  BenchSpec spec;
  spec.width = 4;
  spec.count = 40;
  spec.seed = 5;
  spec.on_density = 0.4;
  spec.dc_density = 0.1;
  spec.mode = Mode::faithful;

  BenchSpec parallel = spec;
  parallel.jobs = 4;
  const BenchReport a = run_bench(spec);
  const BenchReport b = run_bench(parallel);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].index == b.rows[i].index);
    CHECK(a.rows[i].on_count == b.rows[i].on_count);
    CHECK(a.rows[i].dc_count == b.rows[i].dc_count);
    CHECK(a.rows[i].te_terms == b.rows[i].te_terms);
    CHECK(a.rows[i].te_literals == b.rows[i].te_literals);
    CHECK(a.rows[i].exact_terms == b.rows[i].exact_terms);
    CHECK(a.rows[i].equivalent == b.rows[i].equivalent);
    CHECK(a.rows[i].optimal == b.rows[i].optimal);
  }
}

TEST_CASE("CSV rows re-aggregate to the JSON summary") {
  BenchSpec spec;
  spec.width = 3;
  spec.count = 60;
  spec.seed = 12;
  spec.on_density = 0.45;
  spec.mode = Mode::faithful;
  const BenchReport report = run_bench(spec);
  const nlohmann::json summary = bench_summary(report);

  std::istringstream csv(bench_csv(report));
  std::string line;
  std::getline(csv, line);
  CHECK(line ==
        "index,n,on_count,dc_count,te_terms,te_literals,exact_terms,"
        "equivalent,optimal,te_ms,exact_ms");

  int rows = 0;
  int equivalent = 0;
  int optimal = 0;
  double ratio_sum = 0.0;
  int ratio_rows = 0;
  while (std::getline(csv, line)) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 11);
    ++rows;
    const int te_terms = std::stoi(fields[4]);
    const int exact_terms = std::stoi(fields[6]);
    const bool eq = fields[7] == "1";
    equivalent += eq ? 1 : 0;
    optimal += fields[8] == "1" ? 1 : 0;
    if (eq && exact_terms > 0) {
      ratio_sum += static_cast<double>(te_terms) / exact_terms;
      ++ratio_rows;
    }
  }
  CHECK(rows == 60);
  CHECK(summary["equivalent"] == equivalent);
  CHECK(summary["optimal"] == optimal);

  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(equivalent) / rows);
  CHECK(summary["equivalence_rate"] == buf);
  std::snprintf(buf, sizeof buf, "%.6f",
                equivalent == 0 ? 1.0 : static_cast<double>(optimal) / equivalent);
  CHECK(summary["optimality_rate"] == buf);
  std::snprintf(buf, sizeof buf, "%.6f", ratio_rows == 0 ? 1.0 : ratio_sum / ratio_rows);
  CHECK(summary["mean_term_ratio"] == buf);
}

TEST_CASE("anchor policy is part of the sweep settings") {
  BenchSpec spec;
  spec.width = 3;
  spec.count = 25;
  spec.seed = 3;
  spec.on_density = 0.5;
  spec.anchor = AnchorPolicy::any_essential;
  spec.mode = Mode::faithful;
  const BenchReport report = run_bench(spec);
  CHECK(bench_summary(report)["anchor"] == "any_essential");
  for (const BenchRow& row : report.rows) {
    if (row.equivalent) CHECK(row.te_terms >= row.exact_terms);
  }
}
