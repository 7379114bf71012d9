#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eck/hirzebruch.hpp"

namespace eck {

enum class FormulaId { proj, con, dope, expl, remark_k, closed_form, milnor_div_y, blowup_consistency };

std::string_view name(FormulaId f);
std::optional<FormulaId> parse_formula_id(std::string_view s);

struct PointCheck {
  /// "p_-2", "p_0", ... or "origin".
  std::string point;
  /// Which side-by-side comparison this is, e.g. "complement" or "closed".
  std::string check;
  bool equal = false;
};

struct VerificationReport {
  FormulaId formula = FormulaId::proj;
  int n = 0;
  std::optional<int> k;
  std::vector<PointCheck> per_point;
  bool verified = false;
  /// True where the identity only holds with the empty-set conventions
  /// (Q_0 = P^{-1} = empty), e.g. proj at n = 2.
  bool convention_dependent = false;
  double millis = 0.0;
};

/// Builds both sides of an identity from the class constructors and
/// compares them fixed point by fixed point.  For remark_k without k every
/// admissible k is checked.
VerificationReport verify(FormulaId formula, int n, std::optional<int> k = std::nullopt,
                          const EqualityOptions& opts = {});

/// Sum of the localized values over all fixed points: the chi_y genus.
/// Returns a rank-0 polynomial in y; throws ResidualTDependence when the
/// T-variables do not cancel.
SparsePoly integrate_projective(const LocalClass& c);

}  // namespace eck
