#include "tailelim/bench.hpp"
#include "tailelim/oracle.hpp"
#include "tailelim/textio.hpp"
#include "tailelim/trace_json.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace {

using namespace tailelim;

constexpr int exit_ok = 0;
constexpr int exit_not_equivalent = 1;
constexpr int exit_usage = 64;
constexpr int exit_data = 65;
constexpr int exit_internal = 70;

std::string read_input_text(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  const bool looks_like_path =
      arg.find('/') != std::string::npos || arg.ends_with(".pla");
  if (looks_like_path) {
    throw std::invalid_argument("input file '" + arg + "' does not exist");
  }
  return arg;  // inline expression text
}

bool looks_like_pla(const std::string& text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '#') {
      const std::size_t nl = text.find('\n', i);
      if (nl == std::string::npos) break;
      i = nl;
      continue;
    }
    return c == '.';
  }
  return false;
}

std::optional<VariableNames> parse_vars_flag(const std::string& flag) {
  if (flag.empty()) return std::nullopt;
  std::vector<std::string> names;
  std::stringstream in(flag);
  std::string name;
  while (std::getline(in, name, ',')) names.push_back(name);
  return VariableNames(std::move(names));
}

struct LoadedInput {
  Cover cover;         // expression terms, or the PLA '1'-output cube lines
  FunctionSpec func;   // ON/DC sets (DC only from PLA input)
  VariableNames names;
  bool from_pla;
};

LoadedInput load_input(const std::string& arg, const std::optional<VariableNames>& vars) {
  const std::string text = read_input_text(arg);
  if (looks_like_pla(text)) {
    PlaFile pla = read_pla(text);
    VariableNames names = vars.has_value() ? *vars
                          : pla.names      ? *pla.names
                                           : VariableNames::defaults(pla.func.width());
    if (names.size() != pla.func.width()) {
      throw std::invalid_argument("--vars lists " + std::to_string(names.size()) +
                                  " names but the PLA has " +
                                  std::to_string(pla.func.width()) + " inputs");
    }
    return LoadedInput{std::move(pla.cover), std::move(pla.func), std::move(names), true};
  }
  ParsedExpression parsed = parse_expression(text, vars);
  for (const std::string& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  FunctionSpec func(parsed.cover.width(), cover_minterms(parsed.cover),
                    MintermSet(parsed.cover.width()));
  return LoadedInput{std::move(parsed.cover), std::move(func), std::move(parsed.names),
                     false};
}

// The cover the map/minimizer operates on: the complete prime set unless the
// caller asked for the raw input cubes.
Cover working_cover(const LoadedInput& in, bool no_expand) {
  if (no_expand) return in.cover;
  return in.from_pla ? prime_implicants(in.func) : expand_cover(in.cover);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file '" + path + "'");
  out << content;
}

// Letters appearing in bare expression inputs, so that two operands of
// `verify` share one variable space.
std::optional<VariableNames> shared_bare_names(const std::string& a, const std::string& b) {
  std::vector<char> letters;
  for (const std::string* text : {&a, &b}) {
    if (*text != "-" && !std::filesystem::exists(*text)) {
      for (char c : *text) {
        if (std::isalpha(static_cast<unsigned char>(c))) letters.push_back(c);
      }
    } else {
      return std::nullopt;  // file/stdin operands resolve their own names
    }
  }
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  if (letters.empty()) return std::nullopt;
  std::vector<std::string> names;
  names.reserve(letters.size());
  for (char c : letters) names.emplace_back(1, c);
  return VariableNames(std::move(names));
}

Mode parse_mode(const std::string& s) {
  return s == "faithful" ? Mode::faithful : Mode::safe;
}

AnchorPolicy parse_anchor(const std::string& s) {
  return s == "essential" || s == "any_essential" ? AnchorPolicy::any_essential
                                                  : AnchorPolicy::tail_only;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tail-Eliminate two-level Boolean minimizer and benchmark harness"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string input2;
  std::string vars_flag;
  std::string format = "expr";
  std::string mode_flag = "safe";
  std::string anchor_flag = "tail";
  std::string trace_file;
  std::string csv_file;
  std::string json_file;
  bool no_expand = false;
  bool require_equivalent = false;

  int bench_n = 4;
  int bench_count = 100;
  double bench_density = 0.3;
  double bench_dc_density = 0.0;
  std::uint64_t bench_seed = 1;
  bool bench_exhaustive = false;
  int bench_jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  const std::string input_help =
      "expression text, PLA file path, or - for stdin (default -)";
  const std::string vars_help = "comma-separated variable names (fixes width and order)";

  CLI::App* primes = app.add_subcommand("primes", "expand input to all prime implicants");
  primes->add_option("input", input, input_help);
  primes->add_option("--vars", vars_flag, vars_help);
  primes->add_option("--format", format, "output format: expr or pla")
      ->check(CLI::IsMember({"expr", "pla"}));

  CLI::App* temap = app.add_subcommand("temap", "print the Tail-Eliminate map");
  temap->add_option("input", input, input_help);
  temap->add_option("--vars", vars_flag, vars_help);
  temap->add_flag("--no-expand", no_expand, "map the input cubes without expansion");

  CLI::App* minimize =
      app.add_subcommand("minimize", "run the Tail-Eliminate minimization");
  minimize->add_option("input", input, input_help);
  minimize->add_option("--vars", vars_flag, vars_help);
  minimize->add_option("--mode", mode_flag, "faithful or safe (default safe)")
      ->check(CLI::IsMember({"faithful", "safe"}));
  minimize->add_flag("--no-expand", no_expand, "minimize the input cubes without expansion");
  minimize->add_option("--trace", trace_file, "write the JSON iteration trace to FILE");
  minimize->add_flag("--require-equivalent", require_equivalent,
                     "exit nonzero when the result is not equivalent to the input");

  CLI::App* exact = app.add_subcommand("exact", "exact minimum-cardinality prime cover");
  exact->add_option("input", input, input_help);
  exact->add_option("--vars", vars_flag, vars_help);

  CLI::App* verify = app.add_subcommand("verify", "check two inputs for equivalence");
  verify->add_option("left", input, "first input")->required();
  verify->add_option("right", input2, "second input")->required();
  verify->add_option("--vars", vars_flag, vars_help);

  CLI::App* kmap = app.add_subcommand("kmap", "print the Karnaugh map (2-4 variables)");
  kmap->add_option("input", input, input_help);
  kmap->add_option("--vars", vars_flag, vars_help);

  CLI::App* bench = app.add_subcommand(
      "bench", "score the heuristic against the exact oracle on many functions");
  bench->add_option("--n", bench_n, "variable count")->required();
  bench->add_option("--count", bench_count, "number of random functions (default 100)");
  bench->add_option("--density", bench_density, "ON-set density (default 0.3)");
  bench->add_option("--dc-density", bench_dc_density, "don't-care density (default 0)");
  bench->add_option("--seed", bench_seed, "generator seed (default 1)");
  bench->add_option("--mode", mode_flag, "faithful or safe (default safe)")
      ->check(CLI::IsMember({"faithful", "safe"}));
  bench->add_option("--anchor", anchor_flag,
                    "removal anchor set: tail or essential (default tail)")
      ->check(CLI::IsMember({"tail", "tail_only", "essential", "any_essential"}));
  bench->add_flag("--exhaustive", bench_exhaustive,
                  "enumerate every function of n variables (n <= 4)");
  bench->add_option("--jobs", bench_jobs, "worker threads");
  bench->add_option("--csv", csv_file, "write per-function rows to FILE (default stdout)");
  bench->add_option("--json", json_file, "write the summary to FILE (default stderr)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    const std::optional<VariableNames> vars = parse_vars_flag(vars_flag);

    if (app.got_subcommand(primes)) {
      const LoadedInput in = load_input(input, vars);
      const Cover cover = prime_implicants(in.func);
      if (format == "pla") {
        std::cout << write_pla(cover, in.names);
      } else {
        std::cout << render_expression(cover, in.names) << "\n";
      }
      return exit_ok;
    }

    if (app.got_subcommand(temap)) {
      const LoadedInput in = load_input(input, vars);
      std::cout << render_te_map(build_te_map(working_cover(in, no_expand)), in.names);
      return exit_ok;
    }

    if (app.got_subcommand(minimize)) {
      const LoadedInput in = load_input(input, vars);
      const Mode mode = parse_mode(mode_flag);
      const Cover start = working_cover(in, no_expand);
      const MinimizationTrace trace =
          start.empty() ? MinimizationTrace{mode, AnchorPolicy::tail_only,
                                            start, {}, start, true}
                        : te_minimize(start, mode);
      std::cout << render_expression(trace.final, in.names) << "\n";
      if (!trace_file.empty()) write_file(trace_file, trace_to_json_string(trace));
      if (require_equivalent && !trace.equivalent_to_input) {
        std::cerr << "minimized expression is NOT equivalent to the input\n";
        return exit_not_equivalent;
      }
      return exit_ok;
    }

    if (app.got_subcommand(exact)) {
      const LoadedInput in = load_input(input, vars);
      std::cout << render_expression(exact_minimum_cover(in.func), in.names) << "\n";
      return exit_ok;
    }

    if (app.got_subcommand(verify)) {
      const std::optional<VariableNames> shared =
          vars ? vars : shared_bare_names(input, input2);
      const LoadedInput left = load_input(input, shared);
      const LoadedInput right = load_input(input2, shared);
      if (left.func.width() != right.func.width()) {
        throw std::invalid_argument("inputs have different widths (" +
                                    std::to_string(left.func.width()) + " vs " +
                                    std::to_string(right.func.width()) +
                                    "); pass --vars to fix a common order");
      }
      const bool same = left.func.on() == right.func.on();
      std::cout << (same ? "EQUIVALENT" : "NOT EQUIVALENT") << "\n";
      return same ? exit_ok : exit_not_equivalent;
    }

    if (app.got_subcommand(kmap)) {
      const LoadedInput in = load_input(input, vars);
      std::cout << render_kmap(in.cover, in.names);
      return exit_ok;
    }

    if (app.got_subcommand(bench)) {
      BenchSpec spec;
      spec.width = bench_n;
      spec.count = bench_count;
      spec.on_density = bench_density;
      spec.dc_density = bench_dc_density;
      spec.seed = bench_seed;
      spec.mode = parse_mode(mode_flag);
      spec.anchor = parse_anchor(anchor_flag);
      spec.exhaustive = bench_exhaustive;
      spec.jobs = bench_jobs;

      const BenchReport report = run_bench(spec);
      const std::string csv = bench_csv(report);
      const std::string summary = bench_summary(report).dump(2) + "\n";
      if (csv_file.empty()) {
        std::cout << csv;
      } else {
        write_file(csv_file, csv);
      }
      if (json_file.empty()) {
        std::cerr << summary;
      } else {
        write_file(json_file, summary);
      }
      return exit_ok;
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_data;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_data;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_usage;
}
