#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eck/character.hpp"

namespace eck {

struct Term {
  Monomial mono;
  Rational coef;
};

/// Sparse polynomial in y with Laurent-polynomial coefficients in the
/// T-variables, exact rational coefficients.
///
/// Terms are kept sorted ascending by (ypow, character) with no zero
/// coefficients, so two polynomials are equal iff their term lists are.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(std::size_t rank) : rank_(rank) {}

  static SparsePoly constant(std::size_t rank, const Rational& c);
  static SparsePoly monomial(const Monomial& m, const Rational& c = 1);
  /// T^w
  static SparsePoly t_power(const Character& w, const Rational& c = 1);
  /// y as a polynomial of the given rank.
  static SparsePoly y(std::size_t rank);
  /// 1 - T^w
  static SparsePoly one_minus(const Character& w);
  /// Sorts, merges duplicates and drops zero coefficients.
  static SparsePoly from_terms(std::size_t rank, std::vector<Term> terms);

  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  /// Largest term in the monomial order.
  const Term& leading() const { return terms_.back(); }

  bool is_constant() const;
  /// True when every term has the zero character.
  bool is_pure_y() const;
  int max_ypow() const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  SparsePoly& operator*=(const Rational& s);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(const Rational& s, SparsePoly a) { return a *= s; }

  /// Multiplies by a single monomial.
  SparsePoly shifted(const Monomial& m, const Rational& c = 1) const;

  /// Pads (or shrinks, when the dropped entries vanish) every character.
  SparsePoly with_rank(std::size_t rank) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

 private:
  std::size_t rank_ = 0;
  std::vector<Term> terms_;
};

enum class ArithKind { add, sub, mul };

SparsePoly poly_arith(const SparsePoly& a, const SparsePoly& b, ArithKind kind);

/// Exact quotient p / d.  Throws DivisionByZero for d = 0 and NotDivisible
/// when no Laurent-polynomial quotient (with y-exponents >= 0) exists.
SparsePoly poly_div_exact(const SparsePoly& p, const SparsePoly& d);

/// Quotient p / (1 - T^w) when it exists.  Linear-time in the number of
/// terms; w must be nonzero.
std::optional<SparsePoly> divide_one_minus(const SparsePoly& p, const Character& w);

/// Human-readable form, e.g. "1 - T + y*T - y*T^2".
std::string to_string(const SparsePoly& p);

}  // namespace eck
