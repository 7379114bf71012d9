#include "eck/torus.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "eck/errors.hpp"

namespace eck {

GeometryConfig GeometryConfig::make(int n) {
  if (n < 0) throw InvalidArgument("ambient dimension must be nonnegative, got " + std::to_string(n));
  GeometryConfig g;
  g.n = n;
  g.m = n / 2;
  g.odd = n % 2 == 1;
  for (int j = -g.m; j <= -1; ++j) g.indices.push_back(j);
  if (g.odd) g.indices.push_back(0);
  for (int j = 1; j <= g.m; ++j) g.indices.push_back(j);
  if (g.rank() > kMaxRank) throw InvalidArgument("n = " + std::to_string(n) + " exceeds the supported lattice rank");
  return g;
}

bool GeometryConfig::contains(int label) const {
  return std::find(indices.begin(), indices.end(), label) != indices.end();
}

std::size_t GeometryConfig::position(int label) const {
  auto it = std::find(indices.begin(), indices.end(), label);
  if (it == indices.end()) throw InvalidArgument("no fixed point p_" + std::to_string(label) + " for n = " + std::to_string(n));
  return static_cast<std::size_t>(it - indices.begin());
}

Character label_character(int j, std::size_t rank) {
  Character c(rank);
  if (j == 0) return c;
  const auto idx = static_cast<std::size_t>(std::abs(j));
  if (idx >= rank) throw ArityMismatch("label t_" + std::to_string(idx) + " outside the lattice");
  c[idx] = j > 0 ? 1 : -1;
  return c;
}

Character diagonal_character(std::size_t rank) { return Character::unit(rank, 0); }

Character coordinate_weight(int j, std::size_t rank) {
  return diagonal_character(rank) + label_character(j, rank);
}

std::vector<Character> ambient_weights(int n) {
  if (n < 1) throw InvalidArgument("ambient_weights needs n >= 1, got " + std::to_string(n));
  auto g = GeometryConfig::make(n);
  std::vector<Character> out;
  for (int j : g.indices) out.push_back(coordinate_weight(j, g.rank()));
  return out;
}

std::vector<FixedPointData> fixed_data_on(const std::vector<int>& labels, std::size_t rank) {
  std::vector<FixedPointData> out;
  for (int i : labels) {
    FixedPointData d;
    d.point = i;
    d.coordinate_weight = coordinate_weight(i, rank);
    for (int j : labels) {
      if (j != i) d.tangent.push_back(label_character(j, rank) - label_character(i, rank));
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<FixedPointData> projective_fixed_data(int n) {
  if (n < 2) throw InvalidArgument("projective_fixed_data needs n >= 2, got " + std::to_string(n));
  auto g = GeometryConfig::make(n);
  return fixed_data_on(g.indices, g.rank());
}

}  // namespace eck
