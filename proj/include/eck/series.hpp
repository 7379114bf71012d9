#pragma once

#include <map>
#include <string>
#include <vector>

#include "eck/character.hpp"

namespace eck {

/// Laurent polynomial in the auxiliary variable u: exponent -> coefficient.
using LaurentU = std::map<int, Rational>;

LaurentU operator+(const LaurentU& a, const LaurentU& b);
LaurentU operator*(const LaurentU& a, const LaurentU& b);
LaurentU operator*(const Rational& s, const LaurentU& a);
bool is_zero(const LaurentU& a);

/// Truncated Laurent series in t whose coefficients are Laurent polynomials
/// in u:  sum_{k=0}^{order-1} c_k(u) t^{lo+k} + O(t^{lo+order}).
///
/// Products and sums are exact through the smaller of the operands'
/// absolute truncation points.
class BiSeries {
 public:
  BiSeries(int lo, int order);

  /// A t-independent coefficient.
  static BiSeries constant(const LaurentU& c, int order);
  /// exp(a * u^s * t) with s = 1 (scaled) or s = 0.
  static BiSeries exp(const Rational& a, bool scaled, int order);

  int lo() const { return lo_; }
  int order() const { return static_cast<int>(c_.size()); }
  /// Absolute truncation point: coefficients of t^p are known for p < end().
  int end() const { return lo_ + order(); }

  /// Coefficient of t^p; zero outside [lo, end).
  const LaurentU& coeff(int p) const;
  LaurentU& coeff_ref(int p);

  BiSeries operator*(const BiSeries& o) const;
  BiSeries operator+(const BiSeries& o) const;
  BiSeries operator-() const;
  BiSeries operator-(const BiSeries& o) const { return *this + (-o); }

  /// Drops vanishing leading coefficients (the truncation point stays put).
  BiSeries normalized() const;
  /// Requires the leading coefficient to be a unit c*u^e of Q[u, 1/u].
  BiSeries inverse() const;

 private:
  int lo_;
  std::vector<LaurentU> c_;
};

std::string to_string(const LaurentU& a, const std::string& var = "u");

}  // namespace eck
