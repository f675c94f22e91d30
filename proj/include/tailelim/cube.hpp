#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tailelim {

// Structural width limit: literal masks live in a single uint64_t and every
// 2^x produced by the closed-form overlap math must fit in 64 bits.
inline constexpr int max_width = 40;

// Cap for operations that enumerate 2^n assignments (minterm listing,
// equivalence checks, expansion, exact covering). Wider inputs are rejected
// with a clear error.
inline constexpr int max_enum_width = 24;

// State of one variable inside a product term: bound to 0, bound to 1, or
// unbound ('-' in the text encoding).
enum class Lit : std::uint8_t { zero, one, dash };

// A product term over `width` variables.
//
// Variable 0 is the most significant bit of a minterm index, so the text
// encoding reads left to right in variable order: "01-" binds variable 0 to 0,
// variable 1 to 1, and leaves variable 2 free.
class Cube {
public:
  // The universal cube: every variable unbound.
  explicit Cube(int width);

  // Build from masks. `care` marks bound variables, `value` holds their
  // polarities; bit (width-1-i) corresponds to variable i. The value mask
  // must be a subset of the care mask.
  Cube(int width, std::uint64_t care, std::uint64_t value);

  // Decode a canonical encoding such as "0-0".
  static Cube from_string(std::string_view text);

  // The fully bound cube covering exactly `minterm`.
  static Cube of_minterm(int width, std::uint64_t minterm);

  int width() const { return width_; }
  std::uint64_t care_mask() const { return care_; }
  std::uint64_t value_mask() const { return value_; }

  Lit at(int var) const;
  Cube with(int var, Lit lit) const;

  // Number of bound variables (k).
  int bound_count() const;

  // Number of minterms covered: 2^(width - k).
  std::uint64_t weight() const;

  // True iff every bound variable matches the corresponding bit of `minterm`.
  bool covers(std::uint64_t minterm) const;

  // Canonical encoding over {'0','1','-'}; cubes are equal iff their
  // encodings are equal.
  std::string to_string() const;

  friend bool operator==(const Cube& a, const Cube& b) = default;

private:
  int width_;
  std::uint64_t care_;
  std::uint64_t value_;
};

// Strict weak order matching lexicographic order of canonical encodings
// ('-' < '0' < '1' in ASCII).
bool encoding_less(const Cube& a, const Cube& b);

// AND of two product terms; empty when some variable is bound to opposite
// polarities in the two inputs (law of complement). Throws
// std::invalid_argument on width mismatch.
std::optional<Cube> intersect(const Cube& a, const Cube& b);

// The semantic truth content of a function: the set of minterm indices in
// [0, 2^width) where it is TRUE. Members are kept sorted and distinct.
class MintermSet {
public:
  explicit MintermSet(int width);
  MintermSet(int width, std::vector<std::uint32_t> members);

  int width() const { return width_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  bool contains(std::uint32_t m) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  friend bool operator==(const MintermSet& a, const MintermSet& b) = default;

private:
  int width_;
  std::vector<std::uint32_t> members_;
};

// A sum-of-products expression: an ordered list of distinct cubes of matching
// width. Duplicate cubes are silently dropped at construction, keeping the
// first occurrence. An empty cube list denotes the constant-0 function.
class Cover {
public:
  explicit Cover(int width);
  Cover(int width, std::vector<Cube> cubes);

  int width() const { return width_; }
  const std::vector<Cube>& cubes() const { return cubes_; }
  std::size_t size() const { return cubes_.size(); }
  bool empty() const { return cubes_.empty(); }

  bool contains(const Cube& c) const { return index_of(c) >= 0; }
  // Index of `c` in the cube list, or -1.
  int index_of(const Cube& c) const;

  // The cover with the cube at `index` removed; order otherwise preserved.
  Cover without(int index) const;

  friend bool operator==(const Cover& a, const Cover& b) = default;

private:
  int width_;
  std::vector<Cube> cubes_;
};

// All minterms covered by `c`, in ascending order. |result| = weight(c).
MintermSet minterms(const Cube& c);

// Union of minterms over all cubes of `v`.
MintermSet cover_minterms(const Cover& v);

// True iff the two covers denote the same Boolean function (truth-table
// comparison). Throws std::invalid_argument on width mismatch.
bool equivalent(const Cover& u, const Cover& v);

// True iff every minterm of `c` is covered by some other cube of `v`.
// `c` must be a member of `v`.
bool is_redundant_in(const Cube& c, const Cover& v);

}  // namespace tailelim
