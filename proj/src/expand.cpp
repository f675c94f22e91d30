#include "tailelim/expand.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <utility>

namespace tailelim {

FunctionSpec::FunctionSpec(int width, MintermSet on, MintermSet dc)
    : width_(width), on_(std::move(on)), dc_(std::move(dc)) {
  if (on_.width() != width_ || dc_.width() != width_) {
    throw std::invalid_argument("FunctionSpec width does not match its minterm sets");
  }
  for (std::uint32_t m : on_.members()) {
    if (dc_.contains(m)) {
      throw std::invalid_argument("minterm " + std::to_string(m) +
                                  " is in both the ON-set and the DC-set");
    }
  }
}

FunctionSpec FunctionSpec::from_on(int width, std::vector<std::uint32_t> on) {
  return FunctionSpec(width, MintermSet(width, std::move(on)), MintermSet(width));
}

namespace {

struct MaskLess {
  bool operator()(const Cube& a, const Cube& b) const {
    if (a.care_mask() != b.care_mask()) return a.care_mask() < b.care_mask();
    return a.value_mask() < b.value_mask();
  }
};

}  // namespace

Cover prime_implicants(const FunctionSpec& f) {
  const int width = f.width();
  if (f.on().empty()) return Cover(width);

  std::vector<Cube> level;
  level.reserve(f.on().size() + f.dc().size());
  for (std::uint32_t m : f.on().members()) level.push_back(Cube::of_minterm(width, m));
  for (std::uint32_t m : f.dc().members()) level.push_back(Cube::of_minterm(width, m));

  std::vector<Cube> primes;
  while (!level.empty()) {
    std::sort(level.begin(), level.end(), MaskLess{});
    level.erase(std::unique(level.begin(), level.end()), level.end());

    // Bucket by bound mask, then by popcount of the value mask; merge
    // partners always sit in adjacent popcount classes of the same bucket.
    std::map<std::uint64_t, std::map<int, std::vector<std::size_t>>> buckets;
    for (std::size_t i = 0; i < level.size(); ++i) {
      buckets[level[i].care_mask()][std::popcount(level[i].value_mask())].push_back(i);
    }

    std::vector<bool> merged(level.size(), false);
    std::vector<Cube> next;
    for (const auto& [care, classes] : buckets) {
      for (const auto& [ones, lower] : classes) {
        const auto upper_it = classes.find(ones + 1);
        if (upper_it == classes.end()) continue;
        for (std::size_t i : lower) {
          for (std::size_t j : upper_it->second) {
            const std::uint64_t diff = level[i].value_mask() ^ level[j].value_mask();
            if (!std::has_single_bit(diff)) continue;
            merged[i] = true;
            merged[j] = true;
            next.emplace_back(level[i].width(), care & ~diff,
                              level[i].value_mask() & ~diff);
          }
        }
      }
    }

    for (std::size_t i = 0; i < level.size(); ++i) {
      if (!merged[i]) primes.push_back(level[i]);
    }
    level = std::move(next);
  }

  std::sort(primes.begin(), primes.end(), encoding_less);
  return Cover(width, std::move(primes));
}

Cover expand_cover(const Cover& v) {
  if (v.empty()) return v;
  const FunctionSpec f(v.width(), cover_minterms(v), MintermSet(v.width()));
  const Cover primes = prime_implicants(f);

  std::vector<Cube> ordered;
  ordered.reserve(primes.size());
  for (const Cube& c : v.cubes()) {
    if (primes.contains(c)) ordered.push_back(c);
  }
  for (const Cube& p : primes.cubes()) {
    if (!v.contains(p)) ordered.push_back(p);
  }
  return Cover(v.width(), std::move(ordered));
}

}  // namespace tailelim
