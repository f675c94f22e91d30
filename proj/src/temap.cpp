#include "tailelim/temap.hpp"

#include <cassert>
#include <limits>
#include <stdexcept>
#include <utility>

namespace tailelim {

std::uint64_t overlap(const Cube& a, const Cube& b) {
  const std::optional<Cube> inter = intersect(a, b);
  if (!inter) return 0;
  return std::uint64_t{1} << (a.width() - inter->bound_count());
}

TeMap::TeMap(const Cover& v) : width_(v.width()), implicants_(v.cubes()) {
  if (v.empty()) {
    throw std::invalid_argument("cannot build a Tail-Eliminate map of an empty cover");
  }
  const int n = static_cast<int>(implicants_.size());

  entries_.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  std::vector<std::uint64_t> totals(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      OverlapEntry e;
      e.row = i;
      e.col = j;
      e.intersection = intersect(implicants_[i], implicants_[j]);
      if (e.intersection) {
        e.bound_count = e.intersection->bound_count();
        e.count = std::uint64_t{1} << (width_ - e.bound_count);
      }
      totals[static_cast<std::size_t>(i)] += e.count;
      totals[static_cast<std::size_t>(j)] += e.count;
      entries_.push_back(std::move(e));
    }
  }

  stats_.reserve(static_cast<std::size_t>(n));
  std::int64_t max_q = std::numeric_limits<std::int64_t>::min();
  std::int64_t min_q = std::numeric_limits<std::int64_t>::max();
  bool any_overlapped = false;
  for (int i = 0; i < n; ++i) {
    const Cube& cube = implicants_[static_cast<std::size_t>(i)];
    const std::uint64_t h = cube.weight();
    const std::uint64_t total = totals[static_cast<std::size_t>(i)];
    const std::int64_t quotient =
        static_cast<std::int64_t>(h) - static_cast<std::int64_t>(total);
    stats_.push_back(ImplicantStats{cube, h, total, quotient, ImplicantClass::other});
    if (total > 0) {
      any_overlapped = true;
      max_q = std::max(max_q, quotient);
      min_q = std::min(min_q, quotient);
    }
  }
  for (ImplicantStats& s : stats_) {
    if (s.total_overlaps == 0) {
      s.cls = ImplicantClass::essential_zero_overlap;
    } else if (any_overlapped && s.tail_quotient == max_q) {
      s.cls = ImplicantClass::tail;
    } else if (any_overlapped && s.tail_quotient == min_q) {
      s.cls = ImplicantClass::selective;
    } else {
      s.cls = ImplicantClass::other;
    }
  }
}

std::size_t TeMap::triangle_index(int i, int j) const {
  assert(i != j);
  if (i > j) std::swap(i, j);
  const std::size_t n = implicants_.size();
  // Row i starts after rows 0..i-1, which hold (n-1) + (n-2) + ... cells.
  return static_cast<std::size_t>(i) * n -
         static_cast<std::size_t>(i) * (i + 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

std::uint64_t TeMap::count(int i, int j) const {
  return entries_[triangle_index(i, j)].count;
}

OverlapEntry TeMap::entry(int i, int j) const {
  OverlapEntry e = entries_[triangle_index(i, j)];
  if (e.row != i) std::swap(e.row, e.col);
  return e;
}

TeMap build_te_map(const Cover& v) { return TeMap(v); }

Classification classify(const TeMap& m) {
  Classification out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const ImplicantStats& s = m.stats()[i];
    if (s.total_overlaps == 0) continue;
    if (s.cls == ImplicantClass::tail) out.tails.push_back(static_cast<int>(i));
  }
  // A lone quotient value makes every overlapped implicant both tail and
  // selective; recompute the minimum side directly so the two lists agree.
  std::int64_t min_q = std::numeric_limits<std::int64_t>::max();
  for (std::size_t i = 0; i < m.size(); ++i) {
    const ImplicantStats& s = m.stats()[i];
    if (s.total_overlaps > 0) min_q = std::min(min_q, s.tail_quotient);
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    const ImplicantStats& s = m.stats()[i];
    if (s.total_overlaps > 0 && s.tail_quotient == min_q) {
      out.selectives.push_back(static_cast<int>(i));
    }
  }
  return out;
}

}  // namespace tailelim
