#pragma once

#include <optional>

#include "eck/hirzebruch.hpp"
#include "eck/series.hpp"

namespace eck {

/// T_i -> 1 (t_i -> 0): the class as a rational function of T and y only.
RatExpr diagonalize(const LocalClass& affine);
RatExpr diagonalize(const RatExpr& value);

/// Closed diagonal form of CCQ_n / eu(0):
///   n = 2m:   (1+y)^2 T^2 sum_{i=1}^m (-y)^{m-i} (1+yT)^{2i-2} / (1-T)^{2i}
///   n = 2m+1: (-y)^m (1+y)T/(1-T) + (1+y)^2 T^2 sum_{i=1}^m (-y)^{m-i} (1+yT)^{2i-1} / (1-T)^{2i+1}
RatExpr closed_form_display(int n);

/// Expands a rank-1 class as a series in t.  Scaled: T = e^{-ut}, y = u - 1.
/// Unscaled: T = e^{-t} and the coefficient variable stands for y itself.
BiSeries expand(const RatExpr& diag, bool scaled, int order);

/// CSM class (times eu(0) = t^n) as the y -> -1 limit along T = e^{-(y+1)t}.
/// Returned as a rank-1 polynomial whose exponent is the power of t.
SparsePoly csm(const RatExpr& diag, int n, std::optional<int> order = {});

/// CSM polynomials of the closed-form family for CCQ_n:
///   n = 2m:   sum_{i=0}^{m-1} t^{2i} (1+t)^{2(m-i-1)}
///   n = 2m+1: t^{2m} + (the same sum)
SparsePoly csm_display(int n);

struct BottomTerm {
  Rational coefficient;
  int degree = 0;
};

/// Lowest t-term of the class at y = 0 with T = e^{-t}.
BottomTerm multidegree(const RatExpr& diag, int n, std::optional<int> order = {});

struct BottomTermY {
  /// Pure y polynomial (rank 0).
  SparsePoly coefficient;
  int degree = 0;
};

/// Lowest t-term with y kept symbolic.
BottomTermY bottom_term(const RatExpr& diag, int n, std::optional<int> order = {});

/// "1 + 2t + 2t^2" for a rank-1 polynomial read as a polynomial in t.
std::string t_polynomial_string(const SparsePoly& p, const std::string& var = "t");

}  // namespace eck
