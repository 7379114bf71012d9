#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eck/rat_expr.hpp"
#include "eck/torus.hpp"

namespace eck {

/// Spaces whose localized classes are built.
///
/// Projective (subsets of P^{n-1}): P ambient, Q quadric, X the hyperplane
/// pair {x_{-m} x_m = 0}, Qc / Xc their complements.  Affine (subsets of
/// C^n): Cn, the cones CQ / CX, their complements CCQ / CCX, and
/// Cstar = C^n minus the origin.
enum class SpaceKind { P, Q, X, Qc, Xc, Cn, CQ, CX, CCQ, CCX, Cstar };

bool is_projective(SpaceKind k);
std::string_view name(SpaceKind k);
std::optional<SpaceKind> parse_space_kind(std::string_view s);

/// Localized Hirzebruch class td_y(Y)|_p / eu(p): one value per fixed point
/// of P^{n-1} (in index order), or a single value at the origin of C^n.
/// Fixed points outside a closed subvariety carry the value 0.
struct LocalClass {
  GeometryConfig geometry;
  SpaceKind kind = SpaceKind::P;
  std::vector<RatExpr> values;
  /// Structural LaTeX rendering of each value (h-factors unexpanded).
  std::vector<std::string> latex;

  bool affine() const { return !is_projective(kind); }
  const RatExpr& at(int label) const;
  const RatExpr& origin() const;
};

/// (1 + y T^w) / (1 - T^w).  Throws ZeroWeight for w = 0.
RatExpr hfactor(const Character& w);

/// Product of h-factors; the empty product is 1.
RatExpr smooth_local(std::span<const Character> weights, std::size_t rank);

/// Requires n >= 2.
LocalClass projective_class(SpaceKind kind, int n);

/// Cn and Cstar accept n >= 0; CQ and CCQ accept n >= 0 using Q_0 = Q_1 = empty
/// (so CCQ_0 = 0 and CCQ_1 = C minus 0); CX and CCX need n >= 2.
LocalClass affine_class(SpaceKind kind, int n);

/// Pushes a projective class on P^{n-1} to the origin of C^n through the
/// blowup: sum_i (h(t + t_i) - 1) * c(p_i).  For a closed Y this gives the
/// class of the punctured cone over Y; for an open Y', the cone minus 0.
RatExpr cone_pushforward(const LocalClass& proj, int n);

/// Class of Q_{n-2} (kind Q) or of P^{n-3} minus Q_{n-2} (kind Qc) included
/// in P^{n-1} through the coordinates |j| < m, as a class on P^{n-1}.
/// Handles n = 2, 3 with Q_0 = Q_1 = empty, P^{-1} = empty.
LocalClass embedded_lower_quadric(SpaceKind kind, int n);

/// Complement in C^n of the special fibre of
///   lambda * sum_{i<=k} x_{-i} x_i + sum_{i>k} x_{-i} x_i   (+ lambda x_0^2 for odd n),
/// i.e. C^{inner} times the cone complement over the outer pairs.  The outer
/// factor is computed by pushforward, not by the CCQ recursion.
RatExpr degeneration_complement(int n, int k);

std::string latex_monomial(const Character& w);

}  // namespace eck
