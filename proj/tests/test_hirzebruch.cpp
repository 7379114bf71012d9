#include <doctest.h>

#include "eck/errors.hpp"
#include "eck/hirzebruch.hpp"

using namespace eck;

namespace {

RatExpr h(const Character& w) {
  const std::size_t r = w.rank();
  return RatExpr(SparsePoly::constant(r, 1) + SparsePoly::y(r) * SparsePoly::t_power(w), {w});
}

RatExpr hm1(const Character& w) { return h(w) - RatExpr::one(w.rank()); }

// t_k -> -t_k for k >= 1, t fixed.
LatticeMap involution(std::size_t rank) {
  LatticeMap map{rank, std::vector<std::vector<int>>(rank, std::vector<int>(rank, 0))};
  for (std::size_t i = 0; i < rank; ++i) map.rows[i][i] = i == 0 ? 1 : -1;
  return map;
}

LocalClass sum(const LocalClass& a, const LocalClass& b) {
  LocalClass out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = a.values[i] + b.values[i];
  return out;
}

// Q at p_i from its own tangent space: all directions of P^{n-1} but the
// normal one x_{-i}, of weight -2 t_i.  Off Q (p_0) the value is 0.
RatExpr quadric_from_tangent(int n, int i) {
  const auto g = GeometryConfig::make(n);
  if (i == 0) return RatExpr::zero(g.rank());
  RatExpr out = RatExpr::one(g.rank());
  for (int j : g.indices) {
    if (j != i && j != -i) out *= h(label_character(j, g.rank()) - label_character(i, g.rank()));
  }
  return out;
}

const SpaceKind kProjective[] = {SpaceKind::P, SpaceKind::Q, SpaceKind::X, SpaceKind::Qc, SpaceKind::Xc};
const SpaceKind kAffine[] = {SpaceKind::Cn, SpaceKind::CQ, SpaceKind::CX, SpaceKind::CCQ, SpaceKind::CCX,
                             SpaceKind::Cstar};

}  // namespace

TEST_CASE("h-factor") {
  const Character t{1};
  CHECK(ratexpr_equal(hfactor(t), RatExpr(SparsePoly::constant(1, 1) + SparsePoly::y(1) * SparsePoly::t_power(t), {t})));
  CHECK(ratexpr_equal(substitute_y(hfactor(t), -1), RatExpr::one(1)));
  CHECK_THROWS_AS(hfactor(Character{0}), ZeroWeight);
  CHECK_THROWS_AS(hfactor(Character{0, 0}), ZeroWeight);
}

TEST_CASE("smooth local product") {
  CHECK(ratexpr_equal(smooth_local({}, 1), RatExpr::one(1)));
  const std::vector<Character> one_weight{Character{1}};
  CHECK(ratexpr_equal(smooth_local(one_weight, 1), h(Character{1})));
  const std::vector<Character> pair{Character{1, 1}, Character{1, -1}};
  CHECK(ratexpr_equal(smooth_local(pair, 2), h(Character{1, 1}) * h(Character{1, -1})));
  const std::vector<Character> bad{Character{1, 0}, Character{0, 0}};
  CHECK_THROWS_AS(smooth_local(bad, 2), ZeroWeight);
}

TEST_CASE("projective class examples") {
  const Character t1{0, 1, 0}, t2{0, 0, 1};
  const auto qc = projective_class(SpaceKind::Qc, 4);
  CHECK(ratexpr_equal(qc.at(1), hm1(-2 * t1) * h(t2 - t1) * h(-1 * t2 - t1)));
  const auto xc = projective_class(SpaceKind::Xc, 4);
  CHECK(ratexpr_equal(xc.at(1), h(-2 * t1) * hm1(t2 - t1) * hm1(-1 * t2 - t1)));
  const auto q2 = projective_class(SpaceKind::Q, 2);
  CHECK(ratexpr_equal(q2.at(1), RatExpr::one(2)));
  CHECK(ratexpr_equal(q2.at(-1), RatExpr::one(2)));
  CHECK_THROWS_AS(projective_class(SpaceKind::P, 1), InvalidArgument);
  CHECK_THROWS_AS(projective_class(SpaceKind::Cn, 4), InvalidArgument);
}

TEST_CASE("affine class examples") {
  const Character t{1, 0, 0}, t1{0, 1, 0}, t2{0, 0, 1};
  CHECK(ratexpr_equal(affine_class(SpaceKind::CCX, 4).origin(),
                      hm1(t + t2) * hm1(t - t2) * h(t + t1) * h(t - t1)));
  CHECK(ratexpr_equal(affine_class(SpaceKind::Cstar, 1).origin(), hm1(Character{1})));
  const Character s{1, 0}, s1{0, 1};
  CHECK(ratexpr_equal(affine_class(SpaceKind::CCQ, 2).origin(), hm1(s + s1) * hm1(s - s1)));
  CHECK(affine_class(SpaceKind::CCQ, 0).origin().is_zero());
  CHECK(ratexpr_equal(affine_class(SpaceKind::CCQ, 1).origin(), hm1(Character{1})));
  CHECK_THROWS_AS(affine_class(SpaceKind::CCX, 1), InvalidArgument);
  CHECK_THROWS_AS(affine_class(SpaceKind::P, 4), InvalidArgument);
}

TEST_CASE("cone pushforward examples") {
  LocalClass zero = projective_class(SpaceKind::P, 4);
  for (auto& v : zero.values) v = RatExpr::zero(v.rank());
  CHECK(cone_pushforward(zero, 4).is_zero());
  CHECK(ratexpr_equal(cone_pushforward(projective_class(SpaceKind::Qc, 2), 2),
                      affine_class(SpaceKind::CCQ, 2).origin()));
  CHECK(ratexpr_equal(cone_pushforward(projective_class(SpaceKind::Xc, 4), 4),
                      affine_class(SpaceKind::CCX, 4).origin()));
  CHECK_THROWS(cone_pushforward(projective_class(SpaceKind::P, 4), 5));
}

TEST_CASE("additivity closure") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    const auto p = projective_class(SpaceKind::P, n);
    const auto q = projective_class(SpaceKind::Q, n), qc = projective_class(SpaceKind::Qc, n);
    const auto x = projective_class(SpaceKind::X, n), xc = projective_class(SpaceKind::Xc, n);
    for (std::size_t i = 0; i < p.values.size(); ++i) {
      CHECK(ratexpr_equal(q.values[i] + qc.values[i], p.values[i]));
      CHECK(ratexpr_equal(x.values[i] + xc.values[i], p.values[i]));
    }
    const auto cn = affine_class(SpaceKind::Cn, n).origin();
    CHECK(ratexpr_equal(affine_class(SpaceKind::CQ, n).origin() + affine_class(SpaceKind::CCQ, n).origin(), cn));
    CHECK(ratexpr_equal(affine_class(SpaceKind::CX, n).origin() + affine_class(SpaceKind::CCX, n).origin(), cn));
    CHECK(ratexpr_equal(affine_class(SpaceKind::Cstar, n).origin() + RatExpr::one(cn.rank()), cn));
  }
}

TEST_CASE("quadric agrees with its tangent-space product") {
  for (int n = 2; n <= 7; ++n) {
    const auto q = projective_class(SpaceKind::Q, n);
    for (int i : q.geometry.indices) {
      CAPTURE(n);
      CAPTURE(i);
      CHECK(ratexpr_equal(q.at(i), quadric_from_tangent(n, i)));
    }
  }
}

TEST_CASE("y = -1 collapse") {
  for (int n = 2; n <= 8; ++n) {
    const auto p = projective_class(SpaceKind::P, n);
    const auto qc = projective_class(SpaceKind::Qc, n);
    const auto xc = projective_class(SpaceKind::Xc, n);
    const std::size_t r = p.geometry.rank();
    for (int i : p.geometry.indices) {
      CAPTURE(n);
      CAPTURE(i);
      CHECK(ratexpr_equal(substitute_y(p.at(i), -1), RatExpr::one(r)));
      // Every coordinate point lies on Q except p_0, and on X.
      CHECK(ratexpr_equal(substitute_y(qc.at(i), -1), i == 0 ? RatExpr::one(r) : RatExpr::zero(r)));
      CHECK(ratexpr_equal(substitute_y(xc.at(i), -1), RatExpr::zero(r)));
    }
  }
}

TEST_CASE("closed classes vanish off their support") {
  for (int n : {3, 5, 7}) {
    CHECK(projective_class(SpaceKind::Q, n).at(0).is_zero());
  }
}

TEST_CASE("pushforward is linear") {
  for (int n = 2; n <= 6; ++n) {
    const auto p = projective_class(SpaceKind::P, n);
    const auto q = projective_class(SpaceKind::Q, n);
    const auto xc = projective_class(SpaceKind::Xc, n);
    CHECK(ratexpr_equal(cone_pushforward(sum(p, q), n), cone_pushforward(p, n) + cone_pushforward(q, n)));
    CHECK(ratexpr_equal(cone_pushforward(sum(q, xc), n), cone_pushforward(q, n) + cone_pushforward(xc, n)));
  }
}

TEST_CASE("index involution permutes fixed-point values") {
  for (int n = 2; n <= 7; ++n) {
    const auto g = GeometryConfig::make(n);
    const LatticeMap sigma = involution(g.rank());
    for (SpaceKind kind : kProjective) {
      const auto c = projective_class(kind, n);
      for (int i : g.indices) {
        CAPTURE(n);
        CAPTURE(name(kind));
        CAPTURE(i);
        CHECK(ratexpr_equal(substitute(c.at(i), sigma), c.at(-i)));
      }
    }
    for (SpaceKind kind : kAffine) {
      const auto c = affine_class(kind, n);
      CHECK(ratexpr_equal(substitute(c.origin(), sigma), c.origin()));
    }
  }
}

TEST_CASE("Q and X agree at y = 0") {
  for (int n = 2; n <= 7; ++n) {
    const auto q = projective_class(SpaceKind::Q, n);
    const auto x = projective_class(SpaceKind::X, n);
    for (std::size_t i = 0; i < q.values.size(); ++i) {
      CHECK(substitute_y(q.values[i] - x.values[i], 0).is_zero());
    }
  }
}

TEST_CASE("space kind names round trip") {
  for (SpaceKind k : kProjective) CHECK(parse_space_kind(name(k)) == k);
  for (SpaceKind k : kAffine) CHECK(parse_space_kind(name(k)) == k);
  CHECK_FALSE(parse_space_kind("CQX").has_value());
}
