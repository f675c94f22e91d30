#pragma once

#include "tailelim/expand.hpp"
#include "tailelim/temap.hpp"

#include <stdexcept>

namespace tailelim {

// Raised on malformed expression or PLA input. `position` is a 0-based
// character offset for expressions and a 1-based line number for PLA files;
// the message already includes it.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Ordered, distinct variable names; each matches [A-Za-z][A-Za-z0-9_]*.
// Defaults are "A".."Z" by index, then "x26", "x27", ...
class VariableNames {
public:
  explicit VariableNames(std::vector<std::string> names);
  static VariableNames defaults(int width);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& at(int index) const { return names_.at(static_cast<std::size_t>(index)); }
  int index_of(std::string_view name) const;  // -1 when absent

  friend bool operator==(const VariableNames& a, const VariableNames& b) = default;

private:
  std::vector<std::string> names_;
};

struct ParsedExpression {
  Cover cover;
  VariableNames names;
  // One entry per dropped contradictory term (a term binding some variable
  // both ways, e.g. "AA'").
  std::vector<std::string> warnings;
};

// Parses a sum-of-products expression:
//   expression := term ('+' term)*
//   term       := literal+ | '0' | '1'
//   literal    := name complement?   (complement: trailing ' or prefix !)
// Juxtaposition is AND and whitespace is ignored. With explicit `names`,
// longest-match tokenization allows multi-character names and unknown names
// are errors. Without, variables are single letters ordered alphabetically
// ("BC" is B·C); constant-only expressions default to width 1.
// A '1' term is the universal cube; a '0' term is dropped; a contradictory
// term is dropped with a warning.
ParsedExpression parse_expression(std::string_view text,
                                  const std::optional<VariableNames>& names = std::nullopt);

// Terms joined by " + ", literals in variable-index order, complement as a
// trailing apostrophe. The empty cover renders "0"; a universal cube renders
// "1". Round-trips through parse_expression with the same names.
std::string render_expression(const Cover& v, const VariableNames& names);

struct PlaFile {
  FunctionSpec func;
  std::optional<VariableNames> names;  // from .ilb, when present
  Cover cover;                         // the '1'-output cube lines, in file order
};

// Reads a single-output Berkeley-PLA file (".i n", ".o 1", optional ".p",
// ".ilb", ".type fr"; cube lines "<n of 0/1/-> <1|-|0>"; ".e" terminates).
// '1' rows feed the ON-set, '-' rows the DC-set, '0' rows are ignored.
// A minterm listed both ON and DC is kept ON. Throws parse_error with the
// offending line number.
PlaFile read_pla(std::string_view text);

// Canonical PLA text: one minterm per line ('1' rows, then '-' rows, each
// ascending). read_pla(write_pla(f)) preserves the ON- and DC-sets exactly.
std::string write_pla(const FunctionSpec& f,
                      const std::optional<VariableNames>& names = std::nullopt);
// Cover form: one line per cube with output '1', in cover order.
std::string write_pla(const Cover& v,
                      const std::optional<VariableNames>& names = std::nullopt);

// Column-aligned text table in the map's layout: header row of implicant
// expressions, one row per implicant with 'x' on the diagonal, then the
// "Total Overlaps" and "Tail Quotient" rows.
std::string render_te_map(const TeMap& m, const VariableNames& names);

// Karnaugh map with Gray-coded axes; supports 2 <= width <= 4 (n=2: rows A,
// columns B; n=3: columns AB, rows C; n=4: columns AB, rows CD). A cell is 1
// iff some cube covers that minterm.
std::string render_kmap(const Cover& v, const VariableNames& names);

}  // namespace tailelim
