#pragma once

#include <cstddef>
#include <vector>

#include "eck/character.hpp"

namespace eck {

/// Coordinates of C^n labelled -m..-1, [0], 1..m; the invariant quadratic
/// form is sum x_{-i} x_i (plus x_0^2 for odd n).
///
/// Characters live in the lattice (t, t_1, ..., t_m), rank m + 1, also for
/// projective computations where the t entry is always 0.
struct GeometryConfig {
  int n = 0;
  int m = 0;
  bool odd = false;
  std::vector<int> indices;

  /// Accepts n >= 0 (n = 0, 1 describe the degenerate base cases).
  static GeometryConfig make(int n);

  std::size_t rank() const { return static_cast<std::size_t>(m) + 1; }
  bool contains(int label) const;
  /// Position of a label in `indices`.
  std::size_t position(int label) const;

  friend bool operator==(const GeometryConfig&, const GeometryConfig&) = default;
};

/// t_j with the conventions t_{-j} = -t_j and t_0 = 0.
Character label_character(int j, std::size_t rank);

/// The character t.
Character diagonal_character(std::size_t rank);

/// Weight of the coordinate x_j on C^n: t + t_j.
Character coordinate_weight(int j, std::size_t rank);

/// {t + t_j : j in indices}, in index order.  Requires n >= 1.
std::vector<Character> ambient_weights(int n);

struct FixedPointData {
  int point = 0;
  /// Weights t_j - t_i of T_{p_i} P^{n-1}, j != i, in index order.
  std::vector<Character> tangent;
  Character coordinate_weight;
};

/// Fixed points p_j of P^{n-1} (coordinate lines) with tangent data.
/// Requires n >= 2.
std::vector<FixedPointData> projective_fixed_data(int n);

/// Same data for the projective space on an arbitrary set of coordinate labels.
std::vector<FixedPointData> fixed_data_on(const std::vector<int>& labels, std::size_t rank);

}  // namespace eck
