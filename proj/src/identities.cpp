#include "eck/identities.hpp"

#include <array>
#include <chrono>
#include <cstdlib>

#include "eck/errors.hpp"
#include "eck/specialize.hpp"

namespace eck {

namespace {

constexpr std::array<std::pair<FormulaId, std::string_view>, 8> kFormulaNames{{
    {FormulaId::proj, "proj"},
    {FormulaId::con, "con"},
    {FormulaId::dope, "dope"},
    {FormulaId::expl, "expl"},
    {FormulaId::remark_k, "remark_k"},
    {FormulaId::closed_form, "closed_form"},
    {FormulaId::milnor_div_y, "milnor_div_y"},
    {FormulaId::blowup_consistency, "blowup_consistency"},
}};

std::string point_label(int j) { return "p_" + std::to_string(j); }

SparsePoly y_poly(std::size_t rank) { return SparsePoly::y(rank); }

SparsePoly minus_y_power(int k, std::size_t rank) {
  return SparsePoly::monomial(Monomial{Character(rank), k}, k % 2 == 0 ? 1 : -1);
}

// C^{n-2} on the coordinates |j| < m, over the lattice of C^n.
RatExpr smaller_affine_space(const GeometryConfig& g) {
  std::vector<Character> ws;
  for (int j : g.indices) {
    if (std::abs(j) < g.m) ws.push_back(coordinate_weight(j, g.rank()));
  }
  return smooth_local(ws, g.rank());
}

// CQ_n through the blowup of the closed projective quadric: the punctured
// cone plus the origin.
RatExpr cone_over(const LocalClass& proj, int n) {
  return reduce(RatExpr::one(proj.geometry.rank()) + cone_pushforward(proj, n));
}

// CQ_n by the rearrangement of the closed-cone formula:
//   CQ_n = -y CQ_{n-2} + C^{n-2} * (h(T T_m) + h(T T_m^{-1}) - 1 + y),
// with CQ_0 = CQ_1 = the origin.  Everything over the lattice of rank `rank`.
RatExpr closed_cone_by_additivity(int n, std::size_t rank) {
  if (n <= 1) return RatExpr::one(rank);
  auto g = GeometryConfig::make(n);
  std::vector<Character> inner;
  for (int j : g.indices) {
    if (std::abs(j) < g.m) inner.push_back(coordinate_weight(j, rank));
  }
  RatExpr bracket = hfactor(coordinate_weight(g.m, rank)) + hfactor(coordinate_weight(-g.m, rank)) -
                    RatExpr(SparsePoly::constant(rank, 1) - y_poly(rank));
  RatExpr rest = smooth_local(inner, rank) * reduce(bracket);
  return reduce(-y_poly(rank) * closed_cone_by_additivity(n - 2, rank) + rest);
}

// CCQ_{n-2} over the lattice of C^n.
RatExpr lower_cone_complement(int n, std::size_t rank) {
  return embed(affine_class(SpaceKind::CCQ, n - 2).origin(), rank);
}

void check_proj(VerificationReport& rep, const EqualityOptions& opts) {
  const int n = rep.n;
  auto Xc = projective_class(SpaceKind::Xc, n);
  auto Qc = projective_class(SpaceKind::Qc, n);
  auto Q = projective_class(SpaceKind::Q, n);
  auto X = projective_class(SpaceKind::X, n);
  auto lower = embedded_lower_quadric(SpaceKind::Qc, n);
  const auto y = y_poly(Xc.geometry.rank());
  for (std::size_t p = 0; p < Xc.geometry.indices.size(); ++p) {
    RatExpr rhs = y * lower.values[p];
    const auto label = point_label(Xc.geometry.indices[p]);
    rep.per_point.push_back({label, "complement", ratexpr_equal(Xc.values[p] - Qc.values[p], rhs, opts)});
    rep.per_point.push_back({label, "closed", ratexpr_equal(Q.values[p] - X.values[p], rhs, opts)});
  }
  rep.convention_dependent = n == 2;
}

void check_con(VerificationReport& rep, const EqualityOptions& opts) {
  const int n = rep.n;
  auto g = GeometryConfig::make(n);
  RatExpr lhs = affine_class(SpaceKind::CCX, n).origin() - affine_class(SpaceKind::CCQ, n).origin();
  RatExpr rhs = y_poly(g.rank()) * lower_cone_complement(n, g.rank());
  rep.per_point.push_back({"origin", "complement", ratexpr_equal(lhs, rhs, opts)});
  rep.convention_dependent = n <= 3;
}

void check_dope(VerificationReport& rep, const EqualityOptions& opts) {
  const int n = rep.n;
  auto g = GeometryConfig::make(n);
  RatExpr cq = cone_over(projective_class(SpaceKind::Q, n), n);
  RatExpr cx = cone_over(projective_class(SpaceKind::X, n), n);
  RatExpr cq_lower = cone_over(embedded_lower_quadric(SpaceKind::Q, n), n);
  RatExpr rhs = y_poly(g.rank()) * (smaller_affine_space(g) - cq_lower);
  rep.per_point.push_back({"origin", "closed", ratexpr_equal(cq - cx, rhs, opts)});
  rep.convention_dependent = n <= 3;
}

void check_expl(VerificationReport& rep, const EqualityOptions& opts) {
  const int n = rep.n;
  auto g = GeometryConfig::make(n);
  const std::size_t r = g.rank();
  RatExpr recursion = affine_class(SpaceKind::CCQ, n).origin();
  RatExpr additivity = affine_class(SpaceKind::Cn, n).origin() - closed_cone_by_additivity(n, r);
  rep.per_point.push_back({"origin", "recursion_vs_additivity", ratexpr_equal(recursion, additivity, opts)});

  // h(T T_m) + h(T T_m^{-1}) - 1 + y = -(1+y)(T^2 - 1) / ((1 - T T_m^{-1})(1 - T T_m))
  const Character plus = coordinate_weight(g.m, r), minus = coordinate_weight(-g.m, r);
  RatExpr lhs = hfactor(plus) + hfactor(minus) - RatExpr(SparsePoly::constant(r, 1) - y_poly(r));
  SparsePoly one_plus_y = SparsePoly::constant(r, 1) + y_poly(r);
  SparsePoly t2_minus_1 = SparsePoly::t_power(2 * diagonal_character(r)) - SparsePoly::constant(r, 1);
  RatExpr rhs(-(one_plus_y * t2_minus_1), {minus, plus});
  rep.per_point.push_back({"origin", "bracket_identity", ratexpr_equal(lhs, rhs, opts)});
}

void check_remark(VerificationReport& rep, const EqualityOptions& opts) {
  const int n = rep.n;
  auto g = GeometryConfig::make(n);
  const std::size_t r = g.rank();
  RatExpr ccq = affine_class(SpaceKind::CCQ, n).origin();
  std::vector<int> ks;
  if (rep.k) {
    ks.push_back(*rep.k);
  } else {
    for (int k = 0; k <= g.m - 1; ++k) ks.push_back(k);
  }
  for (int k : ks) {
    const int inner_n = 2 * k + (g.odd ? 1 : 0);
    RatExpr ystar = degeneration_complement(n, k);
    RatExpr rhs = minus_y_power(g.m - k, r) * embed(affine_class(SpaceKind::CCQ, inner_n).origin(), r);
    const std::string tag = "k=" + std::to_string(k);
    rep.per_point.push_back({"origin", tag, ratexpr_equal(ccq - ystar, rhs, opts)});
    if (k == g.m - 1) {
      rep.per_point.push_back(
          {"origin", tag + ":special_fibre_is_CX", ratexpr_equal(ystar, affine_class(SpaceKind::CCX, n).origin(), opts)});
    }
  }
}

void check_closed_form(VerificationReport& rep, const EqualityOptions& opts) {
  RatExpr diag = diagonalize(affine_class(SpaceKind::CCQ, rep.n));
  rep.per_point.push_back({"origin", "diagonal", ratexpr_equal(diag, closed_form_display(rep.n), opts)});
}

bool todd_agrees(const RatExpr& a, const RatExpr& b) {
  return reduce(substitute_y(a - b, 0)).is_zero();
}

bool divisible_by_y(const RatExpr& diff) {
  if (diff.is_zero()) return true;
  try {
    poly_div_exact(diff.num(), SparsePoly::y(diff.rank()));
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

void check_milnor(VerificationReport& rep, const EqualityOptions&) {
  const int n = rep.n;
  auto Q = projective_class(SpaceKind::Q, n);
  auto X = projective_class(SpaceKind::X, n);
  for (std::size_t p = 0; p < Q.geometry.indices.size(); ++p) {
    const auto label = point_label(Q.geometry.indices[p]);
    RatExpr diff = Q.values[p] - X.values[p];
    rep.per_point.push_back({label, "todd_y0", todd_agrees(Q.values[p], X.values[p])});
    rep.per_point.push_back({label, "divisible_by_y", divisible_by_y(diff)});
  }
  RatExpr cq = affine_class(SpaceKind::CQ, n).origin();
  RatExpr cx = affine_class(SpaceKind::CX, n).origin();
  rep.per_point.push_back({"origin", "todd_y0", todd_agrees(cq, cx)});
  rep.per_point.push_back({"origin", "divisible_by_y", divisible_by_y(cq - cx)});
}

void check_blowup(VerificationReport& rep, const EqualityOptions& opts) {
  const int n = rep.n;
  RatExpr pq = cone_pushforward(projective_class(SpaceKind::Qc, n), n);
  RatExpr px = cone_pushforward(projective_class(SpaceKind::Xc, n), n);
  rep.per_point.push_back({"origin", "Qc", ratexpr_equal(pq, affine_class(SpaceKind::CCQ, n).origin(), opts)});
  rep.per_point.push_back({"origin", "Xc", ratexpr_equal(px, affine_class(SpaceKind::CCX, n).origin(), opts)});
}

}  // namespace

std::string_view name(FormulaId f) {
  for (const auto& [id, s] : kFormulaNames) {
    if (id == f) return s;
  }
  return "?";
}

std::optional<FormulaId> parse_formula_id(std::string_view s) {
  for (const auto& [id, str] : kFormulaNames) {
    if (str == s) return id;
  }
  return std::nullopt;
}

VerificationReport verify(FormulaId formula, int n, std::optional<int> k, const EqualityOptions& opts) {
  if (n < 2) throw InvalidArgument("verify needs n >= 2, got " + std::to_string(n));
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.formula = formula;
  rep.n = n;
  if (formula == FormulaId::remark_k) {
    const int m = n / 2;
    if (k && (*k < 0 || *k > m - 1)) {
      throw InvalidArgument("remark_k needs 0 <= k <= m-1 = " + std::to_string(m - 1));
    }
    rep.k = k;
  } else if (k) {
    throw InvalidArgument("k only applies to remark_k");
  }
  switch (formula) {
    case FormulaId::proj:
      check_proj(rep, opts);
      break;
    case FormulaId::con:
      check_con(rep, opts);
      break;
    case FormulaId::dope:
      check_dope(rep, opts);
      break;
    case FormulaId::expl:
      check_expl(rep, opts);
      break;
    case FormulaId::remark_k:
      check_remark(rep, opts);
      break;
    case FormulaId::closed_form:
      check_closed_form(rep, opts);
      break;
    case FormulaId::milnor_div_y:
      check_milnor(rep, opts);
      break;
    case FormulaId::blowup_consistency:
      check_blowup(rep, opts);
      break;
  }
  rep.verified = !rep.per_point.empty();
  for (const auto& pc : rep.per_point) rep.verified = rep.verified && pc.equal;
  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

SparsePoly integrate_projective(const LocalClass& c) {
  if (c.affine()) throw InvalidArgument("integrate_projective needs a projective class");
  RatExpr sum = RatExpr::zero(c.geometry.rank());
  for (const auto& v : c.values) sum += v;
  RatExpr r = reduce(sum);
  if (!r.den().empty() || !r.num().is_pure_y()) {
    throw ResidualTDependence("sum over fixed points of " + std::string(name(c.kind)) + " kept T-dependence");
  }
  return r.num().with_rank(0);
}

}  // namespace eck
