#include "tailelim/bench.hpp"

#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace tailelim {

namespace {

constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ull;

struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    state += golden_gamma;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

void check_bench_spec(const BenchSpec& spec) {
  if (spec.width < 1 || spec.width > max_enum_width) {
    throw std::invalid_argument("bench width must be in [1, " +
                                std::to_string(max_enum_width) + "]");
  }
  if (spec.on_density < 0.0 || spec.dc_density < 0.0 ||
      spec.on_density > 1.0 || spec.dc_density > 1.0 ||
      spec.on_density + spec.dc_density > 1.0) {
    throw std::invalid_argument("densities must lie in [0, 1] and sum to at most 1");
  }
  if (spec.exhaustive && spec.width > 4) {
    throw std::invalid_argument("exhaustive enumeration is limited to n <= 4");
  }
  if (!spec.exhaustive && spec.count < 1) {
    throw std::invalid_argument("bench count must be at least 1");
  }
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

}  // namespace

FunctionSpec generate_function(const BenchSpec& spec, int index) {
  check_bench_spec(spec);
  SplitMix64 rng{spec.seed ^ (golden_gamma * (static_cast<std::uint64_t>(index) + 1))};
  std::vector<std::uint32_t> on;
  std::vector<std::uint32_t> dc;
  const std::uint32_t total = std::uint32_t{1} << spec.width;
  for (std::uint32_t m = 0; m < total; ++m) {
    const double x = rng.next_unit();
    if (x < spec.on_density) {
      on.push_back(m);
    } else if (x < spec.on_density + spec.dc_density) {
      dc.push_back(m);
    }
  }
  return FunctionSpec(spec.width, MintermSet(spec.width, std::move(on)),
                      MintermSet(spec.width, std::move(dc)));
}

FunctionSpec function_from_code(int width, std::uint64_t code) {
  std::vector<std::uint32_t> on;
  const std::uint32_t total = std::uint32_t{1} << width;
  for (std::uint32_t m = 0; m < total; ++m) {
    if (code & (std::uint64_t{1} << m)) on.push_back(m);
  }
  return FunctionSpec::from_on(width, std::move(on));
}

int BenchReport::equivalent_count() const {
  int n = 0;
  for (const BenchRow& r : rows) n += r.equivalent ? 1 : 0;
  return n;
}

int BenchReport::optimal_count() const {
  int n = 0;
  for (const BenchRow& r : rows) n += r.optimal ? 1 : 0;
  return n;
}

double BenchReport::equivalence_rate() const {
  return rows.empty() ? 1.0
                      : static_cast<double>(equivalent_count()) /
                            static_cast<double>(rows.size());
}

double BenchReport::optimality_rate() const {
  const int eq = equivalent_count();
  return eq == 0 ? 1.0 : static_cast<double>(optimal_count()) / eq;
}

double BenchReport::mean_term_ratio() const {
  double sum = 0.0;
  int n = 0;
  for (const BenchRow& r : rows) {
    if (r.equivalent && r.exact_terms > 0) {
      sum += static_cast<double>(r.te_terms) / r.exact_terms;
      ++n;
    }
  }
  return n == 0 ? 1.0 : sum / n;
}

double BenchReport::mean_te_ms() const {
  double sum = 0.0;
  for (const BenchRow& r : rows) sum += r.te_ms;
  return rows.empty() ? 0.0 : sum / static_cast<double>(rows.size());
}

double BenchReport::mean_exact_ms() const {
  double sum = 0.0;
  for (const BenchRow& r : rows) sum += r.exact_ms;
  return rows.empty() ? 0.0 : sum / static_cast<double>(rows.size());
}

BenchReport run_bench(const BenchSpec& spec) {
  check_bench_spec(spec);

  std::uint64_t count;
  if (spec.exhaustive) {
    count = std::uint64_t{1} << (std::uint64_t{1} << spec.width);
  } else {
    count = static_cast<std::uint64_t>(spec.count);
  }

  BenchReport report;
  report.spec = spec;
  report.rows.resize(count);

  auto work_one = [&](int index) {
    const FunctionSpec f = spec.exhaustive
                               ? function_from_code(spec.width, static_cast<std::uint64_t>(index))
                               : generate_function(spec, index);

    const auto t0 = std::chrono::steady_clock::now();
    const Cover primes = prime_implicants(f);
    // The engine rejects empty covers; a constant-0 function minimizes to
    // itself with an empty trace.
    const MinimizationTrace trace =
        primes.empty()
            ? MinimizationTrace{spec.mode, spec.anchor, Cover(spec.width),
                                {}, Cover(spec.width), true}
            : te_minimize(primes, spec.mode, spec.anchor);
    const std::chrono::duration<double, std::milli> heuristic =
        std::chrono::steady_clock::now() - t0;

    const ScoreReport s = score(trace, f, heuristic);
    BenchRow row;
    row.index = index;
    row.n = spec.width;
    row.on_count = static_cast<int>(f.on().size());
    row.dc_count = static_cast<int>(f.dc().size());
    row.te_terms = s.output_terms;
    row.te_literals = s.output_literals;
    row.exact_terms = s.optimal_terms;
    row.equivalent = s.equivalent;
    row.optimal = s.is_optimal;
    row.te_ms = s.runtime_heuristic.count();
    row.exact_ms = s.runtime_exact.count();
    report.rows[static_cast<std::size_t>(index)] = row;
  };

  const int jobs = std::max(1, std::min<int>(spec.jobs, static_cast<int>(count)));
  if (jobs == 1) {
    for (std::uint64_t i = 0; i < count; ++i) work_one(static_cast<int>(i));
  } else {
    std::atomic<std::uint64_t> cursor{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) {
      workers.emplace_back([&] {
        while (true) {
          const std::uint64_t i = cursor.fetch_add(1);
          if (i >= count) return;
          work_one(static_cast<int>(i));
        }
      });
    }
    for (std::thread& w : workers) w.join();
  }
  return report;
}

std::string bench_csv(const BenchReport& report) {
  std::string out =
      "index,n,on_count,dc_count,te_terms,te_literals,exact_terms,"
      "equivalent,optimal,te_ms,exact_ms\n";
  for (const BenchRow& r : report.rows) {
    out += std::to_string(r.index) + "," + std::to_string(r.n) + "," +
           std::to_string(r.on_count) + "," + std::to_string(r.dc_count) + "," +
           std::to_string(r.te_terms) + "," + std::to_string(r.te_literals) + "," +
           std::to_string(r.exact_terms) + "," + (r.equivalent ? "1" : "0") + "," +
           (r.optimal ? "1" : "0") + "," + format_fixed(r.te_ms, 3) + "," +
           format_fixed(r.exact_ms, 3) + "\n";
  }
  return out;
}

nlohmann::json bench_summary(const BenchReport& report) {
  const BenchSpec& s = report.spec;
  return nlohmann::json{
      {"n", s.width},
      {"count", report.rows.size()},
      {"seed", s.seed},
      {"on_density", s.on_density},
      {"dc_density", s.dc_density},
      {"mode", to_string(s.mode)},
      {"anchor", to_string(s.anchor)},
      {"exhaustive", s.exhaustive},
      {"equivalent", report.equivalent_count()},
      {"optimal", report.optimal_count()},
      {"equivalence_rate", format_fixed(report.equivalence_rate(), 6)},
      {"optimality_rate", format_fixed(report.optimality_rate(), 6)},
      {"mean_term_ratio", format_fixed(report.mean_term_ratio(), 6)},
      {"mean_te_ms", report.mean_te_ms()},
      {"mean_exact_ms", report.mean_exact_ms()},
  };
}

}  // namespace tailelim
