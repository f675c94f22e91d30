#include "tailelim/expand.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace tailelim;

namespace {

std::vector<std::string> encodings(const Cover& v) {
  std::vector<std::string> out;
  for (const Cube& c : v.cubes()) out.push_back(c.to_string());
  return out;
}

Cover cover_of(int width, std::initializer_list<const char*> strs) {
  std::vector<Cube> cubes;
  for (const char* e : strs) cubes.push_back(Cube::from_string(e));
  return Cover(width, std::move(cubes));
}

}  // namespace

TEST_CASE("function spec validates its sets") {
  CHECK_THROWS_AS(FunctionSpec(3, MintermSet(3, {0, 1}), MintermSet(3, {1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(FunctionSpec(3, MintermSet(4, {0}), MintermSet(3)),
                  std::invalid_argument);
}

TEST_CASE("prime implicants of the worked examples") {
  const Cover three_var = prime_implicants(FunctionSpec::from_on(3, {0, 2, 3, 7}));
  CHECK(encodings(three_var) == std::vector<std::string>{"-11", "0-0", "01-"});

  const Cover four_var =
      prime_implicants(FunctionSpec::from_on(4, {0, 4, 5, 11, 13, 15}));
  CHECK(encodings(four_var) ==
        std::vector<std::string>{"-101", "0-00", "010-", "1-11", "11-1"});

  const Cover tautology = prime_implicants(FunctionSpec::from_on(3, {0, 1, 2, 3, 4, 5, 6, 7}));
  CHECK(encodings(tautology) == std::vector<std::string>{"---"});

  CHECK(prime_implicants(FunctionSpec::from_on(3, {})).empty());
}

TEST_CASE("don't-cares enlarge primes and may own one outright") {
  // ON = {0}, DC = {3} over two variables: "00" cannot grow, and the
  // dc-only minterm keeps its own prime "11".
  const FunctionSpec f(2, MintermSet(2, {0}), MintermSet(2, {3}));
  CHECK(encodings(prime_implicants(f)) == std::vector<std::string>{"00", "11"});

  // ON = {0}, DC = {1}: the two merge into a single wider prime.
  const FunctionSpec g(2, MintermSet(2, {0}), MintermSet(2, {1}));
  CHECK(encodings(prime_implicants(g)) == std::vector<std::string>{"0-"});
}

TEST_CASE("expansion of a cover reintroduces consensus terms") {
  const Cover v = cover_of(3, {"0-0", "-11"});
  const Cover expanded = expand_cover(v);
  CHECK(encodings(expanded) == std::vector<std::string>{"0-0", "-11", "01-"});

  // Surviving input cubes keep their order; the paper's five-implicant
  // expression is already all primes so expansion is the identity on it.
  const Cover primes = cover_of(4, {"0-00", "010-", "-101", "11-1", "1-11"});
  CHECK(expand_cover(primes) == primes);

  CHECK(expand_cover(Cover(3)).empty());
}

TEST_CASE("expand_cover is idempotent") {
  oracles::TestRng rng(7);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const Cover v = oracles::random_cover(rng, n, 5);
    const Cover once = expand_cover(v);
    CHECK(expand_cover(once) == once);
    if (!v.empty()) CHECK(equivalent(once, v));
  }
}

TEST_CASE("prime generation agrees with brute-force maximal implicants") {
  // All 256 three-variable functions.
  for (std::uint32_t code = 0; code < 256; ++code) {
    std::vector<std::uint32_t> on;
    for (std::uint32_t m = 0; m < 8; ++m) {
      if (code & (1u << m)) on.push_back(m);
    }
    const FunctionSpec f = FunctionSpec::from_on(3, std::move(on));
    CHECK(prime_implicants(f) == oracles::brute_maximal_implicants(f));
  }
  // Sampled wider functions, with don't-cares.
  oracles::TestRng rng(11);
  for (int i = 0; i < 50; ++i) {
    const FunctionSpec f = oracles::random_function(rng, 4, 0.4, 0.1);
    CHECK(prime_implicants(f) == oracles::brute_maximal_implicants(f));
  }
  for (int i = 0; i < 20; ++i) {
    const FunctionSpec f = oracles::random_function(rng, 5, 0.3, 0.1);
    CHECK(prime_implicants(f) == oracles::brute_maximal_implicants(f));
  }
}

TEST_CASE("soundness and coverage of generated primes") {
  oracles::TestRng rng(13);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng.below(5));
    const FunctionSpec f = oracles::random_function(rng, n, 0.35, 0.1);
    const Cover primes = prime_implicants(f);
    for (const Cube& c : primes.cubes()) {
      for (std::uint32_t m : minterms(c).members()) {
        CHECK((f.on().contains(m) || f.dc().contains(m)));
      }
      // Maximality: freeing any bound literal leaks outside on ∪ dc.
      for (int var = 0; var < n; ++var) {
        if (c.at(var) == Lit::dash) continue;
        bool leaks = false;
        for (std::uint32_t m : minterms(c.with(var, Lit::dash)).members()) {
          if (!f.on().contains(m) && !f.dc().contains(m)) {
            leaks = true;
            break;
          }
        }
        CHECK(leaks);
      }
    }
    const MintermSet covered = cover_minterms(primes);
    for (std::uint32_t m : f.on().members()) CHECK(covered.contains(m));
  }
}
