#include "eck/hirzebruch.hpp"

#include <array>
#include <cstdlib>

#include "eck/errors.hpp"

namespace eck {

namespace {

constexpr std::array<std::pair<SpaceKind, std::string_view>, 11> kNames{{
    {SpaceKind::P, "P"},
    {SpaceKind::Q, "Q"},
    {SpaceKind::X, "X"},
    {SpaceKind::Qc, "Qc"},
    {SpaceKind::Xc, "Xc"},
    {SpaceKind::Cn, "Cn"},
    {SpaceKind::CQ, "CQ"},
    {SpaceKind::CX, "CX"},
    {SpaceKind::CCQ, "CCQ"},
    {SpaceKind::CCX, "CCX"},
    {SpaceKind::Cstar, "Cstar"},
}};

// A value together with its structural rendering.
struct Piece {
  RatExpr value;
  std::string latex;
};

Piece zero_piece(std::size_t rank) { return {RatExpr::zero(rank), "0"}; }
Piece one_piece(std::size_t rank) { return {RatExpr::one(rank), "1"}; }

std::string latex_h(const Character& w) { return "h(" + latex_monomial(w) + ")"; }

Piece h_piece(const Character& w) { return {hfactor(w), latex_h(w)}; }

Piece h_minus_one(const Character& w) {
  return {reduce(hfactor(w) - RatExpr::one(w.rank())), "(" + latex_h(w) + "-1)"};
}

Piece product(std::vector<Piece> factors, std::size_t rank) {
  Piece out = one_piece(rank);
  std::string tex;
  for (auto& f : factors) {
    out.value *= f.value;
    if (!tex.empty()) tex += "\\,";
    tex += f.latex;
  }
  out.latex = tex.empty() ? "1" : tex;
  return out;
}

Piece smooth_piece(const std::vector<Character>& weights, std::size_t rank) {
  std::vector<Piece> fs;
  for (const auto& w : weights) fs.push_back(h_piece(w));
  return product(std::move(fs), rank);
}

Piece difference(const Piece& a, const Piece& b) {
  return {reduce(a.value - b.value), a.latex + " - \\left(" + b.latex + "\\right)"};
}

SparsePoly minus_y_power(int k, std::size_t rank) {
  return SparsePoly::monomial(Monomial{Character(rank), k}, k % 2 == 0 ? 1 : -1);
}

std::string minus_y_latex(int k) {
  if (k == 0) return "";
  if (k == 1) return "(-y)";
  return "(-y)^{" + std::to_string(k) + "}";
}

// t_j - t_i over all j in `labels` except those in `skip`.
std::vector<Character> tangent_except(int i, const std::vector<int>& labels, std::initializer_list<int> skip,
                                      std::size_t rank) {
  std::vector<Character> out;
  for (int j : labels) {
    bool skipped = j == i;
    for (int s : skip) skipped = skipped || j == s;
    if (!skipped) out.push_back(label_character(j, rank) - label_character(i, rank));
  }
  return out;
}

// Complement of the quadric in the projective space on `labels` (closed
// under i -> -i, optionally containing 0), at p_i.
Piece quadric_complement_at(int i, const std::vector<int>& labels, std::size_t rank) {
  if (i == 0) {
    // x_0^2 != 0 at p_0: the point lies off the quadric.
    return smooth_piece(tangent_except(0, labels, {}, rank), rank);
  }
  std::vector<Piece> fs;
  fs.push_back(h_minus_one(label_character(-i, rank) - label_character(i, rank)));
  for (const auto& w : tangent_except(i, labels, {-i}, rank)) fs.push_back(h_piece(w));
  return product(std::move(fs), rank);
}

// Hyperplane {x_k = 0} at p_i.
Piece hyperplane_at(int k, int i, const std::vector<int>& labels, std::size_t rank) {
  if (i == k) return zero_piece(rank);
  return smooth_piece(tangent_except(i, labels, {k}, rank), rank);
}

Piece projective_piece(SpaceKind kind, int i, const GeometryConfig& g) {
  const auto& L = g.indices;
  const std::size_t r = g.rank();
  switch (kind) {
    case SpaceKind::P:
      return smooth_piece(tangent_except(i, L, {}, r), r);
    case SpaceKind::Qc:
      return quadric_complement_at(i, L, r);
    case SpaceKind::Q:
      return difference(projective_piece(SpaceKind::P, i, g), projective_piece(SpaceKind::Qc, i, g));
    case SpaceKind::X: {
      Piece a = hyperplane_at(g.m, i, L, r);
      Piece b = hyperplane_at(-g.m, i, L, r);
      Piece both = std::abs(i) == g.m ? zero_piece(r) : smooth_piece(tangent_except(i, L, {g.m, -g.m}, r), r);
      return {reduce(a.value + b.value - both.value),
              a.latex + " + " + b.latex + " - \\left(" + both.latex + "\\right)"};
    }
    case SpaceKind::Xc:
      return difference(projective_piece(SpaceKind::P, i, g), projective_piece(SpaceKind::X, i, g));
    default:
      throw InvalidArgument("not a projective kind: " + std::string(name(kind)));
  }
}

// (h(t+t_m)-1)(h(t-t_m)-1) prod_{|j|<m} h(t+t_j): C^{n-2} x (C^*)^2, computed
// over the lattice of the given rank.
Piece ccx_piece(int n, std::size_t rank) {
  auto g = GeometryConfig::make(n);
  std::vector<Piece> fs;
  fs.push_back(h_minus_one(coordinate_weight(g.m, rank)));
  fs.push_back(h_minus_one(coordinate_weight(-g.m, rank)));
  for (int j : g.indices) {
    if (std::abs(j) < g.m) fs.push_back(h_piece(coordinate_weight(j, rank)));
  }
  return product(std::move(fs), rank);
}

// Sum_{k} (-y)^k CCX_{n-2k} (+ (-y)^m (h(T) - 1) for odd n).
Piece ccq_piece(int n, std::size_t rank) {
  const int m = n / 2;
  Piece out = zero_piece(rank);
  std::string tex;
  auto add = [&](int k, const Piece& p) {
    out.value += minus_y_power(k, rank) * p.value;
    if (!tex.empty()) tex += " + ";
    tex += minus_y_latex(k) + (k == 0 ? p.latex : "\\left(" + p.latex + "\\right)");
  };
  for (int k = 0; k <= m - 1; ++k) add(k, ccx_piece(n - 2 * k, rank));
  if (n % 2 == 1) add(m, h_minus_one(diagonal_character(rank)));
  out.value = reduce(out.value);
  out.latex = tex.empty() ? "0" : tex;
  return out;
}

Piece affine_piece(SpaceKind kind, int n) {
  auto g = GeometryConfig::make(n);
  const std::size_t r = g.rank();
  auto cn = [&] {
    std::vector<Character> ws;
    for (int j : g.indices) ws.push_back(coordinate_weight(j, r));
    return smooth_piece(ws, r);
  };
  switch (kind) {
    case SpaceKind::Cn:
      return cn();
    case SpaceKind::Cstar:
      return difference(cn(), one_piece(r));
    case SpaceKind::CCX:
    case SpaceKind::CX:
      if (n < 2) throw InvalidArgument(std::string(name(kind)) + " needs n >= 2");
      return kind == SpaceKind::CCX ? ccx_piece(n, r) : difference(cn(), ccx_piece(n, r));
    case SpaceKind::CCQ:
      return ccq_piece(n, r);
    case SpaceKind::CQ:
      return difference(cn(), ccq_piece(n, r));
    default:
      throw InvalidArgument("not an affine kind: " + std::string(name(kind)));
  }
}

}  // namespace

bool is_projective(SpaceKind k) {
  switch (k) {
    case SpaceKind::P:
    case SpaceKind::Q:
    case SpaceKind::X:
    case SpaceKind::Qc:
    case SpaceKind::Xc:
      return true;
    default:
      return false;
  }
}

std::string_view name(SpaceKind k) {
  for (const auto& [kind, s] : kNames) {
    if (kind == k) return s;
  }
  return "?";
}

std::optional<SpaceKind> parse_space_kind(std::string_view s) {
  for (const auto& [kind, str] : kNames) {
    if (str == s) return kind;
  }
  return std::nullopt;
}

const RatExpr& LocalClass::at(int label) const {
  if (affine()) throw InvalidArgument("affine classes only have the origin");
  return values.at(geometry.position(label));
}

const RatExpr& LocalClass::origin() const {
  if (!affine()) throw InvalidArgument("projective classes have no origin value");
  return values.at(0);
}

std::string latex_monomial(const Character& w) {
  std::string out;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (w[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += i == 0 ? "T" : "T_{" + std::to_string(i) + "}";
    if (w[i] != 1) out += "^{" + std::to_string(w[i]) + "}";
  }
  return out.empty() ? "1" : out;
}

RatExpr hfactor(const Character& w) {
  if (w.is_zero()) throw ZeroWeight("h-factor of the zero weight");
  const std::size_t r = w.rank();
  return RatExpr(SparsePoly::constant(r, 1) + SparsePoly::y(r) * SparsePoly::t_power(w), {w});
}

RatExpr smooth_local(std::span<const Character> weights, std::size_t rank) {
  RatExpr out = RatExpr::one(rank);
  for (const auto& w : weights) out *= hfactor(w);
  return out;
}

LocalClass projective_class(SpaceKind kind, int n) {
  if (!is_projective(kind)) throw InvalidArgument(std::string(name(kind)) + " is not a projective kind");
  if (n < 2) throw InvalidArgument("projective classes need n >= 2, got " + std::to_string(n));
  LocalClass c;
  c.geometry = GeometryConfig::make(n);
  c.kind = kind;
  for (int i : c.geometry.indices) {
    Piece p = projective_piece(kind, i, c.geometry);
    c.values.push_back(std::move(p.value));
    c.latex.push_back(std::move(p.latex));
  }
  return c;
}

LocalClass affine_class(SpaceKind kind, int n) {
  if (is_projective(kind)) throw InvalidArgument(std::string(name(kind)) + " is not an affine kind");
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  LocalClass c;
  c.geometry = GeometryConfig::make(n);
  c.kind = kind;
  Piece p = affine_piece(kind, n);
  c.values.push_back(std::move(p.value));
  c.latex.push_back(std::move(p.latex));
  return c;
}

RatExpr cone_pushforward(const LocalClass& proj, int n) {
  if (proj.affine()) throw InvalidArgument("cone_pushforward needs a projective class");
  const auto g = GeometryConfig::make(n);
  if (proj.geometry != g) throw InvalidArgument("cone_pushforward: class lives over a different P^{n-1}");
  RatExpr sum = RatExpr::zero(g.rank());
  for (std::size_t p = 0; p < g.indices.size(); ++p) {
    if (proj.values[p].is_zero()) continue;
    sum += h_minus_one(coordinate_weight(g.indices[p], g.rank())).value * proj.values[p];
  }
  return reduce(sum);
}

LocalClass embedded_lower_quadric(SpaceKind kind, int n) {
  if (kind != SpaceKind::Q && kind != SpaceKind::Qc) throw InvalidArgument("embedded_lower_quadric takes Q or Qc");
  if (n < 2) throw InvalidArgument("embedded_lower_quadric needs n >= 2");
  LocalClass c;
  c.geometry = GeometryConfig::make(n);
  c.kind = kind;
  const std::size_t r = c.geometry.rank();
  for (std::size_t p = 0; p < c.geometry.indices.size(); ++p) {
    c.values.push_back(RatExpr::zero(r));
    c.latex.emplace_back("0");
  }
  if (n - 2 >= 2) {
    LocalClass lower = projective_class(kind, n - 2);
    for (std::size_t p = 0; p < lower.geometry.indices.size(); ++p) {
      std::size_t at = c.geometry.position(lower.geometry.indices[p]);
      c.values[at] = embed(lower.values[p], r);
      c.latex[at] = lower.latex[p];
    }
  } else if (n - 2 == 1 && kind == SpaceKind::Qc) {
    // P^0 minus the empty quadric {x_0^2 = 0}: the point p_0 itself.
    std::size_t at = c.geometry.position(0);
    c.values[at] = RatExpr::one(r);
    c.latex[at] = "1";
  }
  return c;
}

RatExpr degeneration_complement(int n, int k) {
  auto g = GeometryConfig::make(n);
  if (n < 2 || k < 0 || k > g.m - 1) {
    throw InvalidArgument("degeneration index k must satisfy 0 <= k <= m-1 (n = " + std::to_string(n) + ")");
  }
  const std::size_t r = g.rank();
  std::vector<int> inner, outer;
  for (int j : g.indices) (std::abs(j) <= k ? inner : outer).push_back(j);

  std::vector<Character> inner_weights;
  for (int j : inner) inner_weights.push_back(coordinate_weight(j, r));
  RatExpr inner_class = smooth_local(inner_weights, r);

  RatExpr outer_class = RatExpr::zero(r);
  for (int i : outer) {
    outer_class += h_minus_one(coordinate_weight(i, r)).value * quadric_complement_at(i, outer, r).value;
  }
  return reduce(inner_class * reduce(outer_class));
}

}  // namespace eck
