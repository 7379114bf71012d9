#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eck/hirzebruch.hpp"

namespace eck {

/// Polynomial in delta = -1 - y and one variable S_w = T^w - 1 per ambient
/// weight w of C^n, over a monomial denominator prod S_w^{den_w}.
class SPolynomial {
 public:
  /// Exponent vector [delta, S_0, ..., S_{n-1}], S in ambient-weight order.
  using Exponents = std::vector<int>;

  explicit SPolynomial(std::vector<Character> weights);

  static SPolynomial constant(const std::vector<Character>& weights, const Rational& c);
  static SPolynomial delta(const std::vector<Character>& weights);
  static SPolynomial s_var(const std::vector<Character>& weights, std::size_t index);
  /// Builds from raw terms; exponents must be nonnegative.
  static SPolynomial from_terms(const std::vector<Character>& weights, std::map<Exponents, Rational> terms,
                                std::vector<int> den = {});

  const std::vector<Character>& weights() const { return weights_; }
  std::size_t num_s() const { return weights_.size(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  /// Multiplicity of each S-variable in the denominator.
  const std::vector<int>& den() const { return den_; }
  bool is_zero() const { return terms_.empty(); }

  SPolynomial operator+(const SPolynomial& o) const;
  SPolynomial operator-(const SPolynomial& o) const;
  SPolynomial operator*(const SPolynomial& o) const;
  SPolynomial operator*(const Rational& s) const;
  /// Divides by S_index (adds it to the denominator).
  SPolynomial over_s(std::size_t index) const;

  /// delta -> 0 in the numerator.
  SPolynomial at_delta_zero() const;

 private:
  std::vector<Character> weights_;
  std::map<Exponents, Rational> terms_;
  std::vector<int> den_;
};

/// prod (S_w + 1)^{a_w} for the decomposition v = sum a_w w over the allowed
/// ambient weights that uses the fewest distinct weights (ties: index order).
/// Throws StructuralRewriteFailed if v is not such a combination.
SPolynomial monomial_form(const Character& v, const std::vector<Character>& weights,
                          const std::vector<std::size_t>& allowed);

/// h(T^w) = (S_w + delta (S_w + 1)) / S_w for the ambient weight at `index`.
SPolynomial h_positive(const std::vector<Character>& weights, std::size_t index);
/// h(T^w) - 1 = delta (S_w + 1) / S_w.
SPolynomial h_minus_one_positive(const std::vector<Character>& weights, std::size_t index);

/// Extra term of the closed-cone recursion at level n (over the ambient
/// weights of C^n): -(1+y)(T^2 - 1) / ((1 - T T_m^{-1})(1 - T T_m)).
SPolynomial pos2_correction(int n);

/// Positive form of CCQ_n (complement, via the cone-complement recursion with
/// -y = 1 + delta) or CQ_n (closed cone, via the closed-cone recursion).
SPolynomial to_positive_form(SpaceKind kind, int n);

/// S_w -> T^w - 1, delta -> -1 - y.
RatExpr back_substitute(const SPolynomial& p);

struct Certificate {
  SpaceKind subject = SpaceKind::CCQ;
  int n = 0;
  SPolynomial spoly{{}};
  bool nonnegative = false;
  /// Lexicographically first negative term, when there is one.
  std::optional<std::pair<SPolynomial::Exponents, Rational>> witness;
  bool roundtrip_ok = false;
};

/// Scans the coefficients and back-substitutes to compare with `original`.
Certificate check_nonnegative(const SPolynomial& p, const RatExpr& original);

/// to_positive_form + check_nonnegative against affine_class(kind, n).
Certificate certify(SpaceKind kind, int n);

std::string to_string(const SPolynomial& p);
std::string term_string(const SPolynomial& p, const SPolynomial::Exponents& e, const Rational& c);
/// "t+t1", "t-t2", "t" for an ambient weight.
std::string weight_label(const Character& w);

}  // namespace eck
