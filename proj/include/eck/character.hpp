#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

#include <gmpxx.h>

namespace eck {

using Rational = mpq_class;

/// Largest lattice rank a Character can carry (t plus t_1..t_7).
inline constexpr std::size_t kMaxRank = 8;

/// An element of the character lattice spanned by t, t_1, ..., t_m.
///
/// Entry 0 is the coefficient of t, entry i >= 1 the coefficient of t_i.
/// The monomial attached to a character w is T^w := e^{-w}.
class Character {
 public:
  Character() = default;
  explicit Character(std::size_t rank);
  Character(std::initializer_list<int> entries);

  static Character unit(std::size_t rank, std::size_t index);

  std::size_t rank() const { return rank_; }
  bool is_zero() const;

  int operator[](std::size_t i) const { return c_[i]; }
  int& operator[](std::size_t i) { return c_[i]; }

  std::span<const int> entries() const { return {c_.data(), rank_}; }

  /// First nonzero entry is positive.  The zero character is not positive.
  bool is_positive() const;

  Character operator-() const;
  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character& operator*=(int s);

  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(int s, Character a) { return a *= s; }

  friend bool operator==(const Character& a, const Character& b);
  friend std::strong_ordering operator<=>(const Character& a, const Character& b);

  /// Same entries, padded with zeros (or truncated when all dropped entries vanish).
  Character with_rank(std::size_t rank) const;

  std::size_t hash() const;

 private:
  std::array<int, kMaxRank> c_{};
  std::uint8_t rank_ = 0;
};

/// T^chr * y^ypow.  y only ever appears with nonnegative exponents.
struct Monomial {
  Character chr;
  int ypow = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.ypow <=> b.ypow; c != 0) return c;
    return a.chr <=> b.chr;
  }
  Monomial& operator*=(const Monomial& o) {
    chr += o.chr;
    ypow += o.ypow;
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    return m.chr.hash() * 1000003u ^ static_cast<std::size_t>(m.ypow);
  }
};

/// Renders a character as a T-monomial, e.g. "T*T1^-1" ("1" for zero).
std::string to_string(const Character& c);

}  // namespace eck
