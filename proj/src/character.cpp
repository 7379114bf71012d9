#include "eck/character.hpp"

#include <algorithm>

#include "eck/errors.hpp"

namespace eck {

Character::Character(std::size_t rank) {
  if (rank > kMaxRank) throw ArityMismatch("character rank exceeds " + std::to_string(kMaxRank));
  rank_ = static_cast<std::uint8_t>(rank);
}

Character::Character(std::initializer_list<int> entries) : Character(entries.size()) {
  std::copy(entries.begin(), entries.end(), c_.begin());
}

Character Character::unit(std::size_t rank, std::size_t index) {
  Character c(rank);
  if (index >= rank) throw ArityMismatch("unit character index out of range");
  c.c_[index] = 1;
  return c;
}

bool Character::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](int v) { return v == 0; });
}

bool Character::is_positive() const {
  for (std::size_t i = 0; i < rank_; ++i) {
    if (c_[i] != 0) return c_[i] > 0;
  }
  return false;
}

Character Character::operator-() const {
  Character r = *this;
  for (std::size_t i = 0; i < rank_; ++i) r.c_[i] = -r.c_[i];
  return r;
}

Character& Character::operator+=(const Character& o) {
  if (o.rank_ != rank_) throw ArityMismatch("character rank mismatch");
  for (std::size_t i = 0; i < rank_; ++i) c_[i] += o.c_[i];
  return *this;
}

Character& Character::operator-=(const Character& o) {
  if (o.rank_ != rank_) throw ArityMismatch("character rank mismatch");
  for (std::size_t i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
  return *this;
}

Character& Character::operator*=(int s) {
  for (std::size_t i = 0; i < rank_; ++i) c_[i] *= s;
  return *this;
}

bool operator==(const Character& a, const Character& b) {
  return a.rank_ == b.rank_ && std::equal(a.c_.begin(), a.c_.begin() + a.rank_, b.c_.begin());
}

std::strong_ordering operator<=>(const Character& a, const Character& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  for (std::size_t i = 0; i < a.rank_; ++i) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Character Character::with_rank(std::size_t rank) const {
  Character r(rank);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i < rank) {
      r.c_[i] = c_[i];
    } else if (c_[i] != 0) {
      throw ArityMismatch("cannot drop a nonzero character entry");
    }
  }
  return r;
}

std::size_t Character::hash() const {
  std::size_t h = rank_;
  for (std::size_t i = 0; i < rank_; ++i) {
    h = h * 0x9E3779B97F4A7C15ull + static_cast<std::size_t>(static_cast<unsigned>(c_[i]) + 0x7f4a7c15u);
    h ^= h >> 29;
  }
  return h;
}

std::string to_string(const Character& c) {
  std::string out;
  for (std::size_t i = 0; i < c.rank(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i == 0 ? "T" : "T" + std::to_string(i);
    if (c[i] != 1) out += '^' + std::to_string(c[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace eck
