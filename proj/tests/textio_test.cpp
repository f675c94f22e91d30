#include "tailelim/textio.hpp"

#include "oracles.hpp"
#include "tailelim/engine.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace tailelim;

namespace {

Cover cover_of(int width, std::initializer_list<const char*> strs) {
  std::vector<Cube> cubes;
  for (const char* e : strs) cubes.push_back(Cube::from_string(e));
  return Cover(width, std::move(cubes));
}

std::vector<std::string> encodings(const Cover& v) {
  std::vector<std::string> out;
  for (const Cube& c : v.cubes()) out.push_back(c.to_string());
  return out;
}

}  // namespace

TEST_CASE("parsing the paper's expressions") {
  const ParsedExpression three = parse_expression("A'C' + A'B + BC");
  CHECK(encodings(three.cover) == std::vector<std::string>{"0-0", "01-", "-11"});
  CHECK(three.names == VariableNames::defaults(3));
  CHECK(three.warnings.empty());

  const ParsedExpression four = parse_expression("A'C'D' + A'BC' + BC'D + ABD + ACD");
  CHECK(encodings(four.cover) ==
        std::vector<std::string>{"0-00", "010-", "-101", "11-1", "1-11"});
}

TEST_CASE("constants and complement forms") {
  CHECK(encodings(parse_expression("1").cover) == std::vector<std::string>{"-"});
  CHECK(parse_expression("0").cover.empty());
  CHECK(encodings(parse_expression("!AB").cover) == std::vector<std::string>{"01"});
  CHECK(encodings(parse_expression("B'A").cover) == std::vector<std::string>{"10"});
  CHECK(encodings(parse_expression("A + 0").cover) == std::vector<std::string>{"1"});
}

TEST_CASE("letters order alphabetically regardless of appearance") {
  const ParsedExpression p = parse_expression("CA'");
  CHECK(p.names == VariableNames({std::vector<std::string>{"A", "C"}}));
  CHECK(encodings(p.cover) == std::vector<std::string>{"01"});
}

TEST_CASE("contradictory terms drop with a warning") {
  const ParsedExpression p = parse_expression("AA' + B");
  CHECK(encodings(p.cover) == std::vector<std::string>{"-1"});
  REQUIRE(p.warnings.size() == 1);
  CHECK(p.warnings[0].find("AA'") != std::string::npos);

  // Repeating a literal with the same polarity is fine.
  CHECK(encodings(parse_expression("AA").cover) == std::vector<std::string>{"1"});
}

TEST_CASE("explicit name lists") {
  const VariableNames names({std::vector<std::string>{"X1", "Y"}});
  CHECK(encodings(parse_expression("X1Y' + Y", names).cover) ==
        std::vector<std::string>{"10", "-1"});
  CHECK_THROWS_AS(parse_expression("Z", names), parse_error);
  CHECK_THROWS_AS(VariableNames({std::vector<std::string>{"A", "A"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(VariableNames({std::vector<std::string>{"2x"}}),
                  std::invalid_argument);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_expression("A +"), parse_error);
  CHECK_THROWS_AS(parse_expression(""), parse_error);
  CHECK_THROWS_AS(parse_expression("A ~ B"), parse_error);
  CHECK_THROWS_AS(parse_expression("A''"), parse_error);
  CHECK_THROWS_AS(parse_expression("!A'"), parse_error);
  CHECK_THROWS_AS(parse_expression("1A"), parse_error);
  try {
    parse_expression("AB + $C");
  } catch (const parse_error& e) {
    CHECK(e.position() == 5);
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
  }
}

TEST_CASE("rendering expressions") {
  CHECK(render_expression(cover_of(3, {"0-0", "-11"}), VariableNames::defaults(3)) ==
        "A'C' + BC");
  CHECK(render_expression(Cover(3), VariableNames::defaults(3)) == "0");
  CHECK(render_expression(cover_of(4, {"----"}), VariableNames::defaults(4)) == "1");
}

TEST_CASE("expression round trip on random covers") {
  oracles::TestRng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(10));
    const Cover v = oracles::random_cover(rng, n, 6);
    const VariableNames names = VariableNames::defaults(n);
    const ParsedExpression back = parse_expression(render_expression(v, names), names);
    CHECK(back.cover == v);
  }
}

TEST_CASE("reading a PLA file") {
  const PlaFile pla = read_pla(".i 3\n.o 1\n0-0 1\n01- 1\n-11 1\n.e\n");
  CHECK(pla.func.width() == 3);
  CHECK(pla.func.on().members() == std::vector<std::uint32_t>{0, 2, 3, 7});
  CHECK(pla.func.dc().empty());
  CHECK(encodings(pla.cover) == std::vector<std::string>{"0-0", "01-", "-11"});
  CHECK_FALSE(pla.names.has_value());

  const PlaFile everything = read_pla(".i 3\n.o 1\n--- 1\n.e\n");
  CHECK(everything.func.on().size() == 8);

  const PlaFile dc = read_pla(".i 3\n.o 1\n111 -\n.e\n");
  CHECK(dc.func.on().empty());
  CHECK(dc.func.dc().members() == std::vector<std::uint32_t>{7});
}

TEST_CASE("PLA accepts labels, comments and zero rows") {
  const PlaFile pla = read_pla(
      "# a comment\n.i 2\n.o 1\n.ilb IN_a IN_b\n.ob F\n.type fr\n.p 3\n"
      "11 1\n00 0\n01 -\n.e\n");
  REQUIRE(pla.names.has_value());
  CHECK(pla.names->at(0) == "IN_a");
  CHECK(pla.func.on().members() == std::vector<std::uint32_t>{3});
  CHECK(pla.func.dc().members() == std::vector<std::uint32_t>{1});

  // An ON row beats a DC listing of the same minterm.
  const PlaFile both = read_pla(".i 2\n.o 1\n11 1\n11 -\n.e\n");
  CHECK(both.func.on().members() == std::vector<std::uint32_t>{3});
  CHECK(both.func.dc().empty());
}

TEST_CASE("PLA errors name the line") {
  auto line_of = [](const char* text) {
    try {
      read_pla(text);
    } catch (const parse_error& e) {
      return e.position();
    }
    return std::size_t{0};
  };
  CHECK(line_of(".i 3\n.o 2\n.e\n") == 2);
  CHECK(line_of(".i 3\n.o 1\n0-00 1\n.e\n") == 3);
  CHECK(line_of(".i 3\n.o 1\n0-0 x\n.e\n") == 3);
  CHECK(line_of("0-0 1\n.e\n") == 1);
  CHECK_THROWS_AS(read_pla(".i 3\n.o 1\n0-0 1\n"), parse_error);  // missing .e
  CHECK_THROWS_AS(read_pla(".i 30\n.o 1\n.e\n"), parse_error);    // over the cap
  CHECK_THROWS_AS(read_pla(".i 3\n.o 1\n.type f\n.e\n"), parse_error);
}

TEST_CASE("writing PLA files") {
  const FunctionSpec f(3, MintermSet(3, {0, 2, 3, 7}), MintermSet(3));
  CHECK(write_pla(f) == ".i 3\n.o 1\n.type fr\n.p 4\n000 1\n010 1\n011 1\n111 1\n.e\n");

  const FunctionSpec empty(2, MintermSet(2), MintermSet(2));
  CHECK(write_pla(empty) == ".i 2\n.o 1\n.type fr\n.p 0\n.e\n");

  CHECK(write_pla(cover_of(3, {"0-0", "-11"})) ==
        ".i 3\n.o 1\n.type fr\n.p 2\n0-0 1\n-11 1\n.e\n");
}

TEST_CASE("PLA round trip preserves the function") {
  oracles::TestRng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const FunctionSpec f = oracles::random_function(rng, n, 0.4, 0.2);
    const PlaFile back = read_pla(write_pla(f, VariableNames::defaults(n)));
    CHECK(back.func == f);
    REQUIRE(back.names.has_value());
    CHECK(*back.names == VariableNames::defaults(n));
  }
}

TEST_CASE("rendering the golden Tail-Eliminate map") {
  const TeMap m = build_te_map(cover_of(4, {"0-00", "010-", "-101", "11-1", "1-11"}));
  const std::string expected =
      "x               A'C'D'  A'BC'  BC'D  ABD  ACD\n"
      "A'C'D'          x       1      0     0    0\n"
      "A'BC'           1       x      1     0    0\n"
      "BC'D            0       1      x     1    0\n"
      "ABD             0       0      1     x    1\n"
      "ACD             0       0      0     1    x\n"
      "Total Overlaps  1       2      2     2    1\n"
      "Tail Quotient   1       0      0     0    1\n";
  CHECK(render_te_map(m, VariableNames::defaults(4)) == expected);
}

TEST_CASE("rendering the final map and a singleton map") {
  const TeMap final_map = build_te_map(cover_of(4, {"0-00", "-101", "1-11"}));
  const std::string expected =
      "x               A'C'D'  BC'D  ACD\n"
      "A'C'D'          x       0     0\n"
      "BC'D            0       x     0\n"
      "ACD             0       0     x\n"
      "Total Overlaps  0       0     0\n"
      "Tail Quotient   2       2     2\n";
  CHECK(render_te_map(final_map, VariableNames::defaults(4)) == expected);

  const TeMap single = build_te_map(cover_of(3, {"0-0"}));
  CHECK(render_te_map(single, VariableNames::defaults(3)) ==
        "x               A'C'\n"
        "A'C'            x\n"
        "Total Overlaps  0\n"
        "Tail Quotient   2\n");
}

TEST_CASE("rendering Karnaugh maps") {
  const std::string three =
      "     AB\n"
      "     00  01  11  10\n"
      "C 0   1   1   0   0\n"
      "  1   0   1   1   0\n";
  CHECK(render_kmap(cover_of(3, {"0-0", "01-", "-11"}), VariableNames::defaults(3)) ==
        three);

  const std::string four =
      "       AB\n"
      "       00  01  11  10\n"
      "CD 00   1   1   0   0\n"
      "   01   0   1   1   0\n"
      "   11   0   0   1   1\n"
      "   10   0   0   0   0\n";
  CHECK(render_kmap(cover_of(4, {"0-00", "010-", "-101", "11-1", "1-11"}),
                    VariableNames::defaults(4)) == four);

  const std::string two =
      "     B\n"
      "     0  1\n"
      "A 0  0  0\n"
      "  1  1  1\n";
  CHECK(render_kmap(cover_of(2, {"1-"}), VariableNames::defaults(2)) == two);

  CHECK(render_kmap(Cover(3), VariableNames::defaults(3)).find('1') == std::string::npos);
  CHECK_THROWS_AS(render_kmap(Cover(1), VariableNames::defaults(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(render_kmap(Cover(5), VariableNames::defaults(5)),
                  std::invalid_argument);
}

TEST_CASE("kmap cells follow gray-coded minterms") {
  oracles::TestRng rng(47);
  const std::vector<std::string> gray1 = {"0", "1"};
  const std::vector<std::string> gray2 = {"00", "01", "11", "10"};
  for (int n = 2; n <= 4; ++n) {
    const std::vector<std::string>& cols = n == 2 ? gray1 : gray2;
    const std::vector<std::string>& rows = n <= 3 ? gray1 : gray2;
    for (int trial = 0; trial < 30; ++trial) {
      const Cover v = oracles::random_cover(rng, n, 4);
      const std::string grid = render_kmap(v, VariableNames::defaults(n));

      std::vector<std::string> lines;
      std::size_t from = 0;
      while (from < grid.size()) {
        const std::size_t nl = grid.find('\n', from);
        lines.push_back(grid.substr(from, nl - from));
        from = nl + 1;
      }
      REQUIRE(lines.size() == 2 + rows.size());

      for (std::size_t r = 0; r < rows.size(); ++r) {
        std::istringstream in(lines[2 + r]);
        std::vector<std::string> toks;
        std::string tok;
        while (in >> tok) toks.push_back(tok);
        REQUIRE(toks.size() >= cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
          const std::string& cell = toks[toks.size() - cols.size() + c];
          std::uint64_t m = 0;
          const int first_col_var = n == 2 ? 1 : 0;
          const int first_row_var = n == 2 ? 0 : 2;
          for (std::size_t b = 0; b < cols[c].size(); ++b) {
            if (cols[c][b] == '1') m |= std::uint64_t{1} << (n - 1 - (first_col_var + static_cast<int>(b)));
          }
          for (std::size_t b = 0; b < rows[r].size(); ++b) {
            if (rows[r][b] == '1') m |= std::uint64_t{1} << (n - 1 - (first_row_var + static_cast<int>(b)));
          }
          const bool covered = std::any_of(v.cubes().begin(), v.cubes().end(),
                                           [&](const Cube& c2) { return c2.covers(m); });
          CHECK(cell == (covered ? "1" : "0"));
        }
      }
    }
  }
}
