#include "tailelim/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace tailelim {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool valid_name(const std::string& name) {
  if (name.empty() || !is_name_start(name[0])) return false;
  return std::all_of(name.begin() + 1, name.end(), is_name_char);
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::string rstrip(std::string s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

// A single product term in apostrophe notation; the empty product is "1".
std::string term_text(const Cube& c, const VariableNames& names) {
  if (c.bound_count() == 0) return "1";
  std::string out;
  for (int i = 0; i < c.width(); ++i) {
    switch (c.at(i)) {
      case Lit::one: out += names.at(i); break;
      case Lit::zero: out += names.at(i) + "'"; break;
      case Lit::dash: break;
    }
  }
  return out;
}

}  // namespace

VariableNames::VariableNames(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw std::invalid_argument("variable name list must not be empty");
  }
  for (const std::string& n : names_) {
    if (!valid_name(n)) {
      throw std::invalid_argument("invalid variable name '" + n + "'");
    }
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) {
        throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
      }
    }
  }
}

VariableNames VariableNames::defaults(int width) {
  if (width < 1) throw std::invalid_argument("width must be at least 1");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) {
    if (i < 26) {
      names.emplace_back(1, static_cast<char>('A' + i));
    } else {
      names.push_back("x" + std::to_string(i));
    }
  }
  return VariableNames(std::move(names));
}

int VariableNames::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

namespace {

struct RawLiteral {
  std::string name;
  bool complemented = false;
};

struct RawTerm {
  std::vector<RawLiteral> literals;
  int constant_ones = 0;
  int constant_zeros = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct ExpressionScanner {
  std::string_view text;
  const std::optional<VariableNames>& names;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw parse_error("parse error at position " + std::to_string(at) + ": " + what, at);
  }

  std::string scan_name() {
    if (names) {
      // Longest match against the explicit name list.
      std::string best;
      for (int i = 0; i < names->size(); ++i) {
        const std::string& cand = names->at(i);
        if (cand.size() > best.size() && text.substr(pos, cand.size()) == cand) {
          best = cand;
        }
      }
      if (best.empty()) {
        fail("unknown variable (not in the explicit name list)", pos);
      }
      pos += best.size();
      return best;
    }
    // Bare expressions use single-letter variables so "BC" stays B·C.
    return std::string(1, text[pos++]);
  }

  std::vector<RawTerm> scan() {
    std::vector<RawTerm> terms;
    while (true) {
      skip_ws();
      RawTerm term;
      term.begin = pos;
      while (pos < text.size() && text[pos] != '+') {
        const std::size_t at = pos;
        const char c = text[pos];
        if (c == '!') {
          ++pos;
          skip_ws();
          if (pos >= text.size() || !is_name_start(text[pos])) {
            fail("'!' must be followed by a variable name", at);
          }
          RawLiteral lit{scan_name(), true};
          if (pos < text.size() && text[pos] == '\'') {
            fail("variable complemented twice", pos);
          }
          term.literals.push_back(std::move(lit));
        } else if (is_name_start(c)) {
          RawLiteral lit{scan_name(), false};
          if (pos < text.size() && text[pos] == '\'') {
            lit.complemented = true;
            ++pos;
            if (pos < text.size() && text[pos] == '\'') {
              fail("variable complemented twice", pos);
            }
          }
          term.literals.push_back(std::move(lit));
        } else if (c == '0' || c == '1') {
          ++pos;
          ++(c == '1' ? term.constant_ones : term.constant_zeros);
        } else {
          fail(std::string("unexpected character '") + c + "'", at);
        }
        term.end = pos;
        skip_ws();
      }
      const int constants = term.constant_ones + term.constant_zeros;
      if (term.literals.empty() && constants == 0) {
        fail("expected a product term", pos);
      }
      if (constants > 0 && term.literals.size() + static_cast<std::size_t>(constants) > 1u) {
        fail("'0' and '1' must stand alone as a term", term.begin);
      }
      terms.push_back(std::move(term));
      skip_ws();
      if (pos >= text.size()) break;
      ++pos;  // consume '+'
    }
    return terms;
  }
};

}  // namespace

ParsedExpression parse_expression(std::string_view text,
                                  const std::optional<VariableNames>& names) {
  ExpressionScanner scanner{text, names};
  const std::vector<RawTerm> terms = scanner.scan();

  VariableNames resolved = [&] {
    if (names) return *names;
    std::vector<char> letters;
    for (const RawTerm& t : terms) {
      for (const RawLiteral& l : t.literals) letters.push_back(l.name[0]);
    }
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    if (letters.empty()) return VariableNames::defaults(1);  // constant expression
    std::vector<std::string> out;
    out.reserve(letters.size());
    for (char c : letters) out.emplace_back(1, c);
    return VariableNames(std::move(out));
  }();

  const int width = resolved.size();
  std::vector<Cube> cubes;
  std::vector<std::string> warnings;
  for (const RawTerm& t : terms) {
    if (t.constant_zeros > 0) continue;
    Cube cube(width);
    bool contradictory = false;
    for (const RawLiteral& l : t.literals) {
      const int idx = resolved.index_of(l.name);
      const Lit want = l.complemented ? Lit::zero : Lit::one;
      const Lit cur = cube.at(idx);
      if (cur == Lit::dash) {
        cube = cube.with(idx, want);
      } else if (cur != want) {
        contradictory = true;
        break;
      }
    }
    if (contradictory) {
      warnings.push_back("dropped contradictory term '" +
                         std::string(text.substr(t.begin, t.end - t.begin)) + "'");
      continue;
    }
    cubes.push_back(cube);
  }
  return ParsedExpression{Cover(width, std::move(cubes)), std::move(resolved),
                          std::move(warnings)};
}

std::string render_expression(const Cover& v, const VariableNames& names) {
  if (names.size() != v.width()) {
    throw std::invalid_argument("name list size does not match cover width");
  }
  if (v.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += " + ";
    out += term_text(v.cubes()[i], names);
  }
  return out;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void pla_fail(const std::string& what, std::size_t line_no) {
  throw parse_error("PLA line " + std::to_string(line_no) + ": " + what, line_no);
}

}  // namespace

PlaFile read_pla(std::string_view text) {
  int width = -1;
  int outputs = -1;
  bool saw_end = false;
  std::optional<VariableNames> names;
  std::vector<std::uint32_t> on;
  std::vector<std::uint32_t> dc;
  std::vector<Cube> one_cubes;

  std::size_t line_no = 0;
  std::size_t cursor = 0;
  while (cursor < text.size()) {
    const std::size_t nl = text.find('\n', cursor);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string line(text.substr(cursor, end - cursor));
    cursor = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;

    if (const std::size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    const std::vector<std::string> toks = split_ws(line);
    if (toks.empty()) continue;
    if (saw_end) pla_fail("content after .e", line_no);

    if (toks[0][0] == '.') {
      const std::string& dir = toks[0];
      if (dir == ".i") {
        if (toks.size() != 2) pla_fail(".i expects one argument", line_no);
        if (width != -1) pla_fail("duplicate .i", line_no);
        try {
          width = std::stoi(toks[1]);
        } catch (const std::exception&) {
          pla_fail("bad .i argument '" + toks[1] + "'", line_no);
        }
        if (width < 1 || width > max_enum_width) {
          pla_fail(".i must be in [1, " + std::to_string(max_enum_width) +
                       "] (truth-table enumeration cap)", line_no);
        }
      } else if (dir == ".o") {
        if (toks.size() != 2) pla_fail(".o expects one argument", line_no);
        try {
          outputs = std::stoi(toks[1]);
        } catch (const std::exception&) {
          pla_fail("bad .o argument '" + toks[1] + "'", line_no);
        }
        if (outputs != 1) pla_fail("only single-output PLA is supported (.o 1)", line_no);
      } else if (dir == ".p") {
        if (toks.size() != 2) pla_fail(".p expects one argument", line_no);
        // The product count is informational; cube lines are authoritative.
      } else if (dir == ".ilb") {
        if (width == -1) pla_fail(".ilb must follow .i", line_no);
        if (static_cast<int>(toks.size()) - 1 != width) {
          pla_fail(".ilb expects " + std::to_string(width) + " names", line_no);
        }
        try {
          names = VariableNames(std::vector<std::string>(toks.begin() + 1, toks.end()));
        } catch (const std::invalid_argument& e) {
          pla_fail(e.what(), line_no);
        }
      } else if (dir == ".ob") {
        // Output label; irrelevant for a single-output function.
      } else if (dir == ".type") {
        if (toks.size() != 2 || toks[1] != "fr") {
          pla_fail("only .type fr is supported", line_no);
        }
      } else if (dir == ".e" || dir == ".end") {
        saw_end = true;
      } else {
        pla_fail("unsupported directive '" + dir + "'", line_no);
      }
      continue;
    }

    // Cube line.
    if (width == -1) pla_fail("cube line before .i", line_no);
    if (toks.size() != 2) pla_fail("expected '<cube> <output>'", line_no);
    if (static_cast<int>(toks[0].size()) != width) {
      pla_fail("cube '" + toks[0] + "' does not have " + std::to_string(width) +
                   " columns", line_no);
    }
    Cube cube = [&] {
      try {
        return Cube::from_string(toks[0]);
      } catch (const std::invalid_argument& e) {
        pla_fail(e.what(), line_no);
      }
    }();
    if (toks[1].size() != 1 || (toks[1][0] != '0' && toks[1][0] != '1' && toks[1][0] != '-')) {
      pla_fail("output must be one of 0, 1, -", line_no);
    }
    const char out = toks[1][0];
    if (out == '0') continue;  // .type fr: explicit OFF rows carry no information
    const MintermSet ms = minterms(cube);
    auto& dest = out == '1' ? on : dc;
    dest.insert(dest.end(), ms.members().begin(), ms.members().end());
    if (out == '1') one_cubes.push_back(cube);
  }

  if (width == -1) pla_fail("missing .i", line_no);
  if (outputs == -1) pla_fail("missing .o", line_no);
  if (!saw_end) pla_fail("missing .e", line_no);

  // A row required TRUE anywhere wins over a don't-care listing.
  MintermSet on_set(width, std::move(on));
  std::vector<std::uint32_t> dc_only;
  for (std::uint32_t m : MintermSet(width, std::move(dc)).members()) {
    if (!on_set.contains(m)) dc_only.push_back(m);
  }
  FunctionSpec func(width, std::move(on_set), MintermSet(width, std::move(dc_only)));
  return PlaFile{std::move(func), std::move(names), Cover(width, std::move(one_cubes))};
}

namespace {

std::string pla_header(int width, std::size_t products,
                       const std::optional<VariableNames>& names) {
  std::string out = ".i " + std::to_string(width) + "\n.o 1\n";
  if (names) {
    out += ".ilb";
    for (int i = 0; i < names->size(); ++i) out += " " + names->at(i);
    out += "\n";
  }
  out += ".type fr\n.p " + std::to_string(products) + "\n";
  return out;
}

}  // namespace

std::string write_pla(const FunctionSpec& f, const std::optional<VariableNames>& names) {
  std::string out = pla_header(f.width(), f.on().size() + f.dc().size(), names);
  for (std::uint32_t m : f.on().members()) {
    out += Cube::of_minterm(f.width(), m).to_string() + " 1\n";
  }
  for (std::uint32_t m : f.dc().members()) {
    out += Cube::of_minterm(f.width(), m).to_string() + " -\n";
  }
  return out + ".e\n";
}

std::string write_pla(const Cover& v, const std::optional<VariableNames>& names) {
  std::string out = pla_header(v.width(), v.size(), names);
  for (const Cube& c : v.cubes()) out += c.to_string() + " 1\n";
  return out + ".e\n";
}

std::string render_te_map(const TeMap& m, const VariableNames& names) {
  const int n = static_cast<int>(m.size());
  std::vector<std::string> exprs;
  exprs.reserve(static_cast<std::size_t>(n));
  for (const Cube& c : m.implicants()) exprs.push_back(term_text(c, names));

  const std::string totals_label = "Total Overlaps";
  const std::string quotient_label = "Tail Quotient";

  std::size_t label_width = std::max(totals_label.size(), quotient_label.size());
  for (const std::string& e : exprs) label_width = std::max(label_width, e.size());

  auto cell = [&](int i, int j) {
    return i == j ? std::string("x") : std::to_string(m.count(i, j));
  };
  std::vector<std::size_t> col(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    std::size_t w = exprs[static_cast<std::size_t>(j)].size();
    for (int i = 0; i < n; ++i) w = std::max(w, cell(i, j).size());
    const ImplicantStats& s = m.stats()[static_cast<std::size_t>(j)];
    w = std::max(w, std::to_string(s.total_overlaps).size());
    w = std::max(w, std::to_string(s.tail_quotient).size());
    col[static_cast<std::size_t>(j)] = w;
  }

  auto row = [&](const std::string& label, auto value) {
    std::string line = pad_right(label, label_width);
    for (int j = 0; j < n; ++j) {
      line += "  " + pad_right(value(j), col[static_cast<std::size_t>(j)]);
    }
    return rstrip(std::move(line)) + "\n";
  };

  std::string out = row("x", [&](int j) { return exprs[static_cast<std::size_t>(j)]; });
  for (int i = 0; i < n; ++i) {
    out += row(exprs[static_cast<std::size_t>(i)], [&](int j) { return cell(i, j); });
  }
  out += row(totals_label, [&](int j) {
    return std::to_string(m.stats()[static_cast<std::size_t>(j)].total_overlaps);
  });
  out += row(quotient_label, [&](int j) {
    return std::to_string(m.stats()[static_cast<std::size_t>(j)].tail_quotient);
  });
  return out;
}

std::string render_kmap(const Cover& v, const VariableNames& names) {
  const int w = v.width();
  if (w < 2 || w > 4) {
    throw std::invalid_argument(
        "K-maps are rendered for 2 to 4 variables; print a truth table "
        "(PLA output) for other widths");
  }
  if (names.size() != w) {
    throw std::invalid_argument("name list size does not match cover width");
  }

  const int col_vars = w == 2 ? 1 : 2;         // n=2: columns B; else columns AB
  const int row_vars = w - col_vars;
  const std::vector<std::string> gray1 = {"0", "1"};
  const std::vector<std::string> gray2 = {"00", "01", "11", "10"};
  const std::vector<std::string>& cols = col_vars == 1 ? gray1 : gray2;
  const std::vector<std::string>& rows = row_vars == 1 ? gray1 : gray2;

  // n=2 maps rows to variable A and columns to B; wider maps put the leading
  // variables on the columns.
  const int first_col_var = w == 2 ? 1 : 0;
  const int first_row_var = w == 2 ? 0 : col_vars;

  std::string col_group;
  for (int i = 0; i < col_vars; ++i) col_group += names.at(first_col_var + i);
  std::string row_group;
  for (int i = 0; i < row_vars; ++i) row_group += names.at(first_row_var + i);

  auto minterm_at = [&](const std::string& row_bits, const std::string& col_bits) {
    std::uint64_t m = 0;
    for (int i = 0; i < col_vars; ++i) {
      if (col_bits[static_cast<std::size_t>(i)] == '1') {
        m |= std::uint64_t{1} << (w - 1 - (first_col_var + i));
      }
    }
    for (int i = 0; i < row_vars; ++i) {
      if (row_bits[static_cast<std::size_t>(i)] == '1') {
        m |= std::uint64_t{1} << (w - 1 - (first_row_var + i));
      }
    }
    return m;
  };
  auto covered = [&](std::uint64_t m) {
    return std::any_of(v.cubes().begin(), v.cubes().end(),
                       [&](const Cube& c) { return c.covers(m); });
  };

  const std::size_t gutter = row_group.size() + 1 + rows[0].size();
  const std::size_t cell_w = cols[0].size();

  std::string out = std::string(gutter, ' ') + "  " + col_group + "\n";
  std::string header = std::string(gutter, ' ');
  for (const std::string& c : cols) header += "  " + c;
  out += header + "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line = r == 0 ? row_group + " " : std::string(row_group.size() + 1, ' ');
    line += rows[r];
    for (const std::string& c : cols) {
      const std::string bit = covered(minterm_at(rows[r], c)) ? "1" : "0";
      line += "  " + std::string(cell_w - 1, ' ') + bit;
    }
    out += rstrip(std::move(line)) + "\n";
  }
  return out;
}

}  // namespace tailelim
