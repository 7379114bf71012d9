#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eck/sparse_poly.hpp"

namespace eck {

/// num / prod_{w in den} (1 - T^w).
///
/// Denominator factors are stored with positive orientation (first nonzero
/// entry > 0): a factor 1 - T^w with w negative is rewritten as
/// -T^w (1 - T^{-w}) and the monomial moved into the numerator.  The
/// multiset is kept sorted.
class RatExpr {
 public:
  RatExpr() = default;
  explicit RatExpr(SparsePoly num);
  RatExpr(SparsePoly num, std::vector<Character> den);

  static RatExpr zero(std::size_t rank) { return RatExpr(SparsePoly(rank)); }
  static RatExpr one(std::size_t rank) { return RatExpr(SparsePoly::constant(rank, 1)); }

  std::size_t rank() const { return num_.rank(); }
  const SparsePoly& num() const { return num_; }
  const std::vector<Character>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatExpr operator-() const;
  friend RatExpr operator+(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator-(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator*(const RatExpr& a, const RatExpr& b);
  friend RatExpr operator*(const Rational& s, const RatExpr& a);
  friend RatExpr operator*(const SparsePoly& p, const RatExpr& a);
  RatExpr& operator+=(const RatExpr& o) { return *this = *this + o; }
  RatExpr& operator-=(const RatExpr& o) { return *this = *this - o; }
  RatExpr& operator*=(const RatExpr& o) { return *this = *this * o; }

 private:
  SparsePoly num_;
  std::vector<Character> den_;
};

/// Product of the factors (1 - T^w).
SparsePoly expand_denominator(std::span<const Character> den, std::size_t rank);

RatExpr ratexpr_arith(const RatExpr& a, const RatExpr& b, ArithKind kind, bool reduce_result = false);

struct EqualityOptions {
  /// Evaluate both sides at random rational points first and reject on a
  /// mismatch.  Acceptance always needs the exact polynomial comparison.
  int prefilter_points = 1;
  std::uint64_t seed = 0x5eed;
};

/// Identity of rational functions: cross-multiplied numerators agree.
bool ratexpr_equal(const RatExpr& a, const RatExpr& b, const EqualityOptions& opts = {});

/// Removes denominator factors that divide the numerator; idempotent.
RatExpr reduce(const RatExpr& a);

/// Values of T^{e_i} for every lattice coordinate, and of y.
struct EvalPoint {
  std::vector<Rational> t;
  Rational y;
};

/// T-coordinates are ratios of distinct primes, so T^w != 1 for every w != 0.
EvalPoint random_point(std::size_t rank, std::uint64_t seed);

Rational evaluate(const SparsePoly& p, const EvalPoint& at);
/// Throws DenominatorVanishes when some 1 - T^w is zero at the point.
Rational evaluate(const RatExpr& a, const EvalPoint& at);

/// Integer matrix acting on characters: target entry r = sum_c rows[r][c] * source[c].
struct LatticeMap {
  std::size_t source_rank = 0;
  std::vector<std::vector<int>> rows;

  std::size_t target_rank() const { return rows.size(); }
  Character apply(const Character& c) const;
};

/// Applies a lattice map to every T-exponent.  Throws IllFormedMap on a
/// shape mismatch and DenominatorVanishes if a factor is sent to 1 - T^0.
RatExpr substitute(const RatExpr& a, const LatticeMap& map);
SparsePoly substitute(const SparsePoly& p, const LatticeMap& map);

/// y -> value.
RatExpr substitute_y(const RatExpr& a, const Rational& value);
SparsePoly substitute_y(const SparsePoly& p, const Rational& value);

/// Same expression over a larger lattice (new coordinates unused).
RatExpr embed(const RatExpr& a, std::size_t rank);

std::string to_string(const RatExpr& a);

}  // namespace eck
