#include "tailelim/cube.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tailelim {

namespace {

void check_width(int width) {
  if (width < 1 || width > max_width) {
    throw std::invalid_argument("cube width must be in [1, " +
                                std::to_string(max_width) + "], got " +
                                std::to_string(width));
  }
}

void check_enum_width(int width, const char* what) {
  if (width > max_enum_width) {
    throw std::invalid_argument(
        std::string(what) + " enumerates 2^n assignments and supports width <= " +
        std::to_string(max_enum_width) + ", got " + std::to_string(width));
  }
}

std::uint64_t width_mask(int width) {
  return width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

}  // namespace

Cube::Cube(int width) : width_(width), care_(0), value_(0) { check_width(width); }

Cube::Cube(int width, std::uint64_t care, std::uint64_t value)
    : width_(width), care_(care), value_(value) {
  check_width(width);
  if ((care & ~width_mask(width)) != 0) {
    throw std::invalid_argument("care mask has bits beyond the cube width");
  }
  if ((value & ~care) != 0) {
    throw std::invalid_argument("value mask must be a subset of the care mask");
  }
}

Cube Cube::from_string(std::string_view text) {
  check_width(static_cast<int>(text.size()));
  const int width = static_cast<int>(text.size());
  std::uint64_t care = 0;
  std::uint64_t value = 0;
  for (int i = 0; i < width; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << (width - 1 - i);
    switch (text[i]) {
      case '0': care |= bit; break;
      case '1': care |= bit; value |= bit; break;
      case '-': break;
      default:
        throw std::invalid_argument("invalid cube character '" +
                                    std::string(1, text[i]) +
                                    "' (expected '0', '1' or '-')");
    }
  }
  return Cube(width, care, value);
}

Cube Cube::of_minterm(int width, std::uint64_t minterm) {
  check_width(width);
  if (minterm > width_mask(width)) {
    throw std::invalid_argument("minterm index out of range for width " +
                                std::to_string(width));
  }
  return Cube(width, width_mask(width), minterm);
}

Lit Cube::at(int var) const {
  const std::uint64_t bit = std::uint64_t{1} << (width_ - 1 - var);
  if ((care_ & bit) == 0) return Lit::dash;
  return (value_ & bit) != 0 ? Lit::one : Lit::zero;
}

Cube Cube::with(int var, Lit lit) const {
  const std::uint64_t bit = std::uint64_t{1} << (width_ - 1 - var);
  std::uint64_t care = care_ & ~bit;
  std::uint64_t value = value_ & ~bit;
  if (lit != Lit::dash) {
    care |= bit;
    if (lit == Lit::one) value |= bit;
  }
  return Cube(width_, care, value);
}

int Cube::bound_count() const { return std::popcount(care_); }

std::uint64_t Cube::weight() const {
  return std::uint64_t{1} << (width_ - bound_count());
}

bool Cube::covers(std::uint64_t minterm) const {
  return (minterm & care_) == value_;
}

std::string Cube::to_string() const {
  std::string out(static_cast<std::size_t>(width_), '-');
  for (int i = 0; i < width_; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << (width_ - 1 - i);
    if (care_ & bit) out[static_cast<std::size_t>(i)] = (value_ & bit) ? '1' : '0';
  }
  return out;
}

bool encoding_less(const Cube& a, const Cube& b) {
  const int common = std::min(a.width(), b.width());
  for (int i = 0; i < common; ++i) {
    const Lit la = a.at(i);
    const Lit lb = b.at(i);
    if (la == lb) continue;
    auto ch = [](Lit l) { return l == Lit::dash ? '-' : (l == Lit::zero ? '0' : '1'); };
    return ch(la) < ch(lb);
  }
  return a.width() < b.width();
}

std::optional<Cube> intersect(const Cube& a, const Cube& b) {
  if (a.width() != b.width()) {
    throw std::invalid_argument("cannot intersect cubes of widths " +
                                std::to_string(a.width()) + " and " +
                                std::to_string(b.width()));
  }
  // Opposite polarities on a commonly bound variable make the AND constant 0.
  const std::uint64_t both = a.care_mask() & b.care_mask();
  if (((a.value_mask() ^ b.value_mask()) & both) != 0) return std::nullopt;
  return Cube(a.width(), a.care_mask() | b.care_mask(),
              a.value_mask() | b.value_mask());
}

MintermSet::MintermSet(int width) : width_(width) {
  check_width(width);
  check_enum_width(width, "MintermSet");
}

MintermSet::MintermSet(int width, std::vector<std::uint32_t> members)
    : width_(width), members_(std::move(members)) {
  check_width(width);
  check_enum_width(width, "MintermSet");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= (std::uint32_t{1} << width_)) {
    throw std::invalid_argument("minterm " + std::to_string(members_.back()) +
                                " out of range for width " + std::to_string(width_));
  }
}

bool MintermSet::contains(std::uint32_t m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

Cover::Cover(int width) : width_(width) { check_width(width); }

Cover::Cover(int width, std::vector<Cube> cubes) : width_(width) {
  check_width(width);
  cubes_.reserve(cubes.size());
  for (const Cube& c : cubes) {
    if (c.width() != width) {
      throw std::invalid_argument("cover of width " + std::to_string(width) +
                                  " cannot hold cube '" + c.to_string() + "'");
    }
    if (!contains(c)) cubes_.push_back(c);
  }
}

int Cover::index_of(const Cube& c) const {
  for (std::size_t i = 0; i < cubes_.size(); ++i) {
    if (cubes_[i] == c) return static_cast<int>(i);
  }
  return -1;
}

Cover Cover::without(int index) const {
  std::vector<Cube> rest;
  rest.reserve(cubes_.size() - 1);
  for (std::size_t i = 0; i < cubes_.size(); ++i) {
    if (static_cast<int>(i) != index) rest.push_back(cubes_[i]);
  }
  return Cover(width_, std::move(rest));
}

MintermSet minterms(const Cube& c) {
  check_enum_width(c.width(), "minterms()");
  std::vector<int> free_bits;
  for (int bit = 0; bit < c.width(); ++bit) {
    if ((c.care_mask() & (std::uint64_t{1} << bit)) == 0) free_bits.push_back(bit);
  }
  const std::uint32_t base = static_cast<std::uint32_t>(c.value_mask());
  std::vector<std::uint32_t> out;
  out.reserve(std::size_t{1} << free_bits.size());
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << free_bits.size()); ++s) {
    std::uint32_t m = base;
    for (std::size_t j = 0; j < free_bits.size(); ++j) {
      if (s & (std::uint32_t{1} << j)) m |= std::uint32_t{1} << free_bits[j];
    }
    out.push_back(m);
  }
  return MintermSet(c.width(), std::move(out));
}

MintermSet cover_minterms(const Cover& v) {
  check_enum_width(v.width(), "cover_minterms()");
  std::vector<std::uint32_t> all;
  for (const Cube& c : v.cubes()) {
    const MintermSet ms = minterms(c);
    all.insert(all.end(), ms.members().begin(), ms.members().end());
  }
  return MintermSet(v.width(), std::move(all));
}

bool equivalent(const Cover& u, const Cover& v) {
  if (u.width() != v.width()) {
    throw std::invalid_argument("cannot compare covers of widths " +
                                std::to_string(u.width()) + " and " +
                                std::to_string(v.width()));
  }
  return cover_minterms(u) == cover_minterms(v);
}

bool is_redundant_in(const Cube& c, const Cover& v) {
  const int index = v.index_of(c);
  if (index < 0) {
    throw std::invalid_argument("cube '" + c.to_string() +
                                "' is not a member of the cover");
  }
  const MintermSet ms = minterms(c);
  for (std::uint32_t m : ms.members()) {
    bool covered = false;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (static_cast<int>(j) != index && v.cubes()[j].covers(m)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace tailelim
