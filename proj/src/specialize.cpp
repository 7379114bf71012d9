#include "eck/specialize.hpp"

#include "eck/errors.hpp"

namespace eck {

namespace {

SparsePoly poly1(std::initializer_list<std::pair<int, int>> t_y_terms) {
  // Rank-1 polynomial from (T-exponent, y-exponent) pairs with coefficient 1.
  std::vector<Term> ts;
  for (auto [te, ye] : t_y_terms) ts.push_back(Term{Monomial{Character{te}, ye}, 1});
  return SparsePoly::from_terms(1, std::move(ts));
}

SparsePoly pow(const SparsePoly& p, int e) {
  SparsePoly r = SparsePoly::constant(p.rank(), 1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

SparsePoly minus_y_pow(int k) { return SparsePoly::monomial(Monomial{Character{0}, k}, k % 2 == 0 ? 1 : -1); }

RatExpr over_one_minus_t(const SparsePoly& num, int k) {
  return RatExpr(num, std::vector<Character>(static_cast<std::size_t>(k), Character{1}));
}

int default_order(int n) { return n + 4; }

void require_rank1(const RatExpr& diag) {
  if (diag.rank() != 1) throw InvalidArgument("expected a diagonalized (rank-1) class");
}

}  // namespace

RatExpr diagonalize(const RatExpr& value) {
  LatticeMap map{value.rank(), {std::vector<int>(value.rank(), 0)}};
  map.rows[0][0] = 1;
  return substitute(value, map);
}

RatExpr diagonalize(const LocalClass& affine) {
  if (!affine.affine()) throw InvalidArgument("diagonalize needs an affine class");
  return diagonalize(affine.origin());
}

RatExpr closed_form_display(int n) {
  if (n < 2) throw InvalidArgument("closed form is displayed for n >= 2");
  const int m = n / 2;
  const SparsePoly one_plus_y = poly1({{0, 0}, {0, 1}});
  const SparsePoly one_plus_yT = poly1({{0, 0}, {1, 1}});
  const SparsePoly lead = one_plus_y * one_plus_y * SparsePoly::t_power(Character{2});
  RatExpr sum = RatExpr::zero(1);
  for (int i = 1; i <= m; ++i) {
    if (n % 2 == 0) {
      sum += over_one_minus_t(minus_y_pow(m - i) * pow(one_plus_yT, 2 * i - 2), 2 * i);
    } else {
      sum += over_one_minus_t(minus_y_pow(m - i) * pow(one_plus_yT, 2 * i - 1), 2 * i + 1);
    }
  }
  RatExpr out = lead * sum;
  if (n % 2 == 1) out += over_one_minus_t(minus_y_pow(m) * one_plus_y * SparsePoly::t_power(Character{1}), 1);
  return out;
}

BiSeries expand(const RatExpr& diag, bool scaled, int order) {
  require_rank1(diag);
  // y -> u - 1 (scaled) or y -> u.
  const LaurentU y_image = scaled ? LaurentU{{0, Rational(-1)}, {1, Rational(1)}} : LaurentU{{1, Rational(1)}};
  BiSeries num(0, order);
  std::map<int, LaurentU> ypows;
  for (const auto& term : diag.num().terms()) {
    auto it = ypows.find(term.mono.ypow);
    if (it == ypows.end()) {
      LaurentU p{{0, Rational(1)}};
      for (int i = 0; i < term.mono.ypow; ++i) p = p * y_image;
      it = ypows.emplace(term.mono.ypow, std::move(p)).first;
    }
    // T^a = e^{-a (u) t}
    BiSeries e = BiSeries::exp(Rational(-term.mono.chr[0]), scaled, order);
    num = num + BiSeries::constant(term.coef * it->second, order) * e;
  }
  BiSeries den = BiSeries::constant(LaurentU{{0, Rational(1)}}, order + static_cast<int>(diag.den().size()));
  for (const auto& w : diag.den()) {
    // 1 - e^{-c u t}, valuation 1.
    BiSeries f = BiSeries::constant(LaurentU{{0, Rational(1)}}, order + 1) -
                 BiSeries::exp(Rational(-w[0]), scaled, order + 1);
    den = den * f.normalized();
  }
  return num * den.inverse();
}

SparsePoly csm(const RatExpr& diag_in, int n, std::optional<int> order) {
  require_rank1(diag_in);
  RatExpr diag = reduce(diag_in);
  const int K = static_cast<int>(diag.den().size());
  const int N = order.value_or(default_order(n));
  if (N < K + 1) {
    throw TruncationTooLow("CSM limit needs truncation order >= " + std::to_string(K + 1) + ", got " +
                           std::to_string(N));
  }
  BiSeries s = expand(diag, true, N);
  std::vector<Term> out;
  for (int p = s.lo(); p < s.end(); ++p) {
    for (const auto& [e, c] : s.coeff(p)) {
      if (e < 0) {
        throw NonvanishingNegativeUPart("coefficient of t^" + std::to_string(p) + " has a pole in y + 1");
      }
      if (e == 0) out.push_back(Term{Monomial{Character{p + n}, 0}, c});
    }
  }
  return SparsePoly::from_terms(1, std::move(out));
}

SparsePoly csm_display(int n) {
  if (n < 2) throw InvalidArgument("CSM family is displayed for n >= 2");
  const int m = n / 2;
  const SparsePoly one_plus_t = poly1({{0, 0}, {1, 0}});
  SparsePoly sum(1);
  for (int i = 0; i <= m - 1; ++i) sum += SparsePoly::t_power(Character{2 * i}) * pow(one_plus_t, 2 * (m - i - 1));
  if (n % 2 == 1) sum += SparsePoly::t_power(Character{2 * m});
  return sum;
}

BottomTerm multidegree(const RatExpr& diag, int n, std::optional<int> order) {
  require_rank1(diag);
  RatExpr at0 = reduce(substitute_y(diag, 0));
  const int N = order.value_or(default_order(n));
  BiSeries s = expand(at0, false, N);
  for (int p = s.lo(); p < s.end(); ++p) {
    const auto& c = s.coeff(p);
    if (!c.empty()) return BottomTerm{c.begin()->second, p};
  }
  throw ZeroClass("class vanishes at y = 0 through the truncation order");
}

BottomTermY bottom_term(const RatExpr& diag_in, int n, std::optional<int> order) {
  require_rank1(diag_in);
  RatExpr diag = reduce(diag_in);
  const int N = order.value_or(default_order(n));
  BiSeries s = expand(diag, false, N);
  for (int p = s.lo(); p < s.end(); ++p) {
    const auto& c = s.coeff(p);
    if (c.empty()) continue;
    std::vector<Term> ts;
    for (const auto& [e, v] : c) ts.push_back(Term{Monomial{Character(0), e}, v});
    return BottomTermY{SparsePoly::from_terms(0, std::move(ts)), p};
  }
  throw ZeroClass("class vanishes through the truncation order");
}

std::string t_polynomial_string(const SparsePoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& term : p.terms()) {
    if (term.mono.ypow != 0 || term.mono.chr.rank() != 1) throw InvalidArgument("not a polynomial in one variable");
    Rational c = term.coef;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    const int e = term.mono.chr[0];
    std::string mono = e == 0 ? "" : (e == 1 ? var : var + "^" + std::to_string(e));
    if (mono.empty()) {
      out += c.get_str();
    } else {
      out += (c == 1 ? "" : c.get_str()) + mono;
    }
  }
  return out;
}

}  // namespace eck
