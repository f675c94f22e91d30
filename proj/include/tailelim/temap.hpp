#pragma once

#include "tailelim/cube.hpp"

namespace tailelim {

// One off-diagonal cell of the Tail-Eliminate map: how many minterms the
// cubes at `row` and `col` share. The closed form is o(n, a) = 2^(n-a) with
// a the bound-literal count of the intersection, and 0 when the two cubes
// contradict.
struct OverlapEntry {
  int row = 0;
  int col = 0;
  std::optional<Cube> intersection;
  int bound_count = 0;       // a; 0 when the intersection is empty
  std::uint64_t count = 0;   // o for this pair

  friend bool operator==(const OverlapEntry& a, const OverlapEntry& b) = default;
};

enum class ImplicantClass : std::uint8_t {
  tail,                    // attains the maximum tail quotient (overlapped implicants only)
  selective,               // attains the minimum tail quotient (overlapped implicants only)
  essential_zero_overlap,  // zero total overlaps; never a removal candidate or anchor
  other,
};

// Per-implicant totals of the map. tail_quotient = h - total_overlaps and
// may be negative: minterms shared with several implicants count once per
// pair, so total_overlaps can exceed h.
struct ImplicantStats {
  Cube cube;
  std::uint64_t h = 0;               // TRUE outputs implied, = weight(cube)
  std::uint64_t total_overlaps = 0;  // o_t
  std::int64_t tail_quotient = 0;    // t = h - o_t
  ImplicantClass cls = ImplicantClass::other;
};

// The Tail-Eliminate map of a cover: the symmetric pairwise overlap matrix
// (diagonal excluded) plus per-implicant totals, tail quotients and classes.
// Implicants with zero total overlaps are kept in the map and its stats but
// are excluded from tail/selective candidacy.
class TeMap {
public:
  explicit TeMap(const Cover& v);

  int width() const { return width_; }
  const std::vector<Cube>& implicants() const { return implicants_; }
  std::size_t size() const { return implicants_.size(); }

  // Overlap count between implicants i and j (i != j); symmetric.
  std::uint64_t count(int i, int j) const;
  // The full cell for (i, j), i != j, with row == i and col == j.
  OverlapEntry entry(int i, int j) const;

  const std::vector<ImplicantStats>& stats() const { return stats_; }

private:
  // Upper-triangle storage: entry (i, j) with i < j lives at triangle_index.
  std::size_t triangle_index(int i, int j) const;

  int width_;
  std::vector<Cube> implicants_;
  std::vector<OverlapEntry> entries_;
  std::vector<ImplicantStats> stats_;
};

// Number of minterms two cubes share: 0 if they contradict, else 2^(n-a).
// Throws std::invalid_argument on width mismatch.
std::uint64_t overlap(const Cube& a, const Cube& b);

// Builds the map. Throws std::invalid_argument on an empty cover.
TeMap build_te_map(const Cover& v);

struct Classification {
  std::vector<int> tails;       // argmax of tail quotient over overlapped implicants
  std::vector<int> selectives;  // argmin of tail quotient over overlapped implicants

  friend bool operator==(const Classification& a, const Classification& b) = default;
};

// Tail and selective implicant indices. Implicants with zero total overlaps
// never appear in either list; when every implicant has zero overlaps both
// lists are empty. When the maximum equals the minimum the lists coincide.
Classification classify(const TeMap& m);

}  // namespace tailelim
