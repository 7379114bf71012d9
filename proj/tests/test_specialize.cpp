#include <doctest.h>

#include "eck/errors.hpp"
#include "eck/specialize.hpp"
#include "oracles.hpp"

using namespace eck;

namespace {

SparsePoly one() { return SparsePoly::constant(1, 1); }
SparsePoly T(int e = 1) { return SparsePoly::t_power(Character{e}); }
SparsePoly Y() { return SparsePoly::y(1); }
std::vector<Character> den(int k) { return std::vector<Character>(static_cast<std::size_t>(k), Character{1}); }

RatExpr diag(SpaceKind kind, int n) { return diagonalize(affine_class(kind, n)); }

oracle::Poly binomial_power(int n) { return oracle::pow({{0, 1}, {1, 1}}, n); }

}  // namespace

TEST_CASE("diagonal closed forms") {
  const SparsePoly lead = (one() + Y()) * (one() + Y()) * T(2);
  const RatExpr ccq4 = lead * (RatExpr(Rational(-1) * Y(), den(2)) + RatExpr((one() + Y() * T()) * (one() + Y() * T()), den(4)));
  CHECK(ratexpr_equal(diag(SpaceKind::CCQ, 4), ccq4));

  const RatExpr ccq3 = RatExpr(Rational(-1) * Y() * (Y() + one()) * T(), den(1)) + RatExpr(lead * (one() + Y() * T()), den(3));
  CHECK(ratexpr_equal(diag(SpaceKind::CCQ, 3), ccq3));

  CHECK(ratexpr_equal(diag(SpaceKind::CCX, 2), RatExpr(lead, den(2))));

  for (int n = 2; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(ratexpr_equal(diag(SpaceKind::CCQ, n), oracle::closed_form(n)));
    CHECK(ratexpr_equal(closed_form_display(n), oracle::closed_form(n)));
  }
  CHECK_THROWS_AS(diagonalize(projective_class(SpaceKind::P, 3)), InvalidArgument);
}

TEST_CASE("Todd series from the h-factor at y = 0") {
  const RatExpr h0 = RatExpr(one(), den(1));
  const BiSeries s = expand(h0, false, 3);
  CHECK(s.coeff(-1) == LaurentU{{0, Rational(1)}});
  CHECK(s.coeff(0) == LaurentU{{0, Rational(1, 2)}});
  CHECK(s.coeff(1) == LaurentU{{0, Rational(1, 12)}});
  CHECK(s.coeff(2).empty());
}

TEST_CASE("CSM limits") {
  CHECK(t_polynomial_string(csm(diag(SpaceKind::CCQ, 4), 4)) == "1 + 2t + 2t^2");
  CHECK(csm(diag(SpaceKind::CCQ, 2), 2) == SparsePoly::constant(1, 1));

  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const SparsePoly ccq = csm(diag(SpaceKind::CCQ, n), n);
    CHECK(ccq == oracle::in_t(oracle::csm_by_resolution(n)));
    if (n % 2 == 0) {
      CHECK(ccq == oracle::in_t(oracle::csm_display(n)));
    } else {
      CHECK(ccq == oracle::in_t(oracle::csm_odd_family(n)));
    }
    for (const auto& term : ccq.terms()) {
      CHECK(term.coef > 0);
      CHECK(term.coef.get_den() == 1);
    }
    CHECK(csm(diag(SpaceKind::Cn, n), n) == oracle::in_t(binomial_power(n)));
    CHECK(csm(diag(SpaceKind::CCX, n), n) == oracle::in_t(binomial_power(n - 2)));
  }
}

TEST_CASE("literal CSM family") {
  CHECK(csm_display(4) == oracle::in_t({{0, 1}, {1, 2}, {2, 2}}));
  CHECK(csm_display(5) == oracle::in_t({{0, 1}, {1, 2}, {2, 2}, {4, 1}}));
  for (int n = 2; n <= 9; ++n) CHECK(csm_display(n) == oracle::in_t(oracle::csm_display(n)));
}

TEST_CASE("CSM truncation guard") {
  const RatExpr d = diag(SpaceKind::CCQ, 6);
  CHECK_THROWS_AS(csm(d, 6, 2), TruncationTooLow);
  CHECK_NOTHROW(csm(d, 6, 8));
  CHECK(csm(d, 6, 8) == csm(d, 6, 12));
}

TEST_CASE("multidegree") {
  auto md = [](SpaceKind kind, int n) { return multidegree(diag(kind, n), n); };
  CHECK(md(SpaceKind::CQ, 2).coefficient == 2);
  CHECK(md(SpaceKind::CQ, 2).degree == -1);
  CHECK(md(SpaceKind::CQ, 4).degree == -3);
  CHECK(md(SpaceKind::Cn, 3).coefficient == 1);
  CHECK(md(SpaceKind::Cn, 3).degree == -3);
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const auto cq = md(SpaceKind::CQ, n);
    CHECK(cq.coefficient == 2);
    CHECK(cq.degree == 1 - n);
    const auto cx = md(SpaceKind::CX, n);
    CHECK(cx.coefficient == 2);
    CHECK(cx.degree == 1 - n);
    const auto bottom = bottom_term(diag(SpaceKind::CQ, n), n);
    CHECK(bottom.degree == 1 - n);
    CHECK(substitute_y(bottom.coefficient, 0) == SparsePoly::constant(0, 2));
  }
  CHECK_THROWS_AS(multidegree(RatExpr::zero(1), 2), ZeroClass);
}

TEST_CASE("polynomial rendering") {
  CHECK(t_polynomial_string(oracle::in_t({{0, 1}, {2, -3}})) == "1 - 3t^2");
  CHECK(t_polynomial_string(SparsePoly(1)) == "0");
}
