#include <doctest.h>

#include <algorithm>

#include "eck/errors.hpp"
#include "eck/torus.hpp"

using namespace eck;

namespace {

std::vector<Character> sorted(std::vector<Character> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// t_k -> -t_k for k >= 1.
Character involution(Character c) {
  for (std::size_t i = 1; i < c.rank(); ++i) c[i] = -c[i];
  return c;
}

}  // namespace

TEST_CASE("geometry config lists labels in index order") {
  CHECK(GeometryConfig::make(4).indices == std::vector<int>{-2, -1, 1, 2});
  CHECK(GeometryConfig::make(5).indices == std::vector<int>{-2, -1, 0, 1, 2});
  for (int n = 2; n <= 9; ++n) {
    const auto g = GeometryConfig::make(n);
    CHECK(g.indices.size() == static_cast<std::size_t>(n));
    CHECK(g.contains(0) == (n % 2 == 1));
    CHECK(g.rank() == static_cast<std::size_t>(n / 2 + 1));
  }
  CHECK_THROWS_AS(GeometryConfig::make(-1), InvalidArgument);
}

TEST_CASE("ambient weights") {
  CHECK(sorted(ambient_weights(2)) == sorted({Character{1, 1}, Character{1, -1}}));
  CHECK(sorted(ambient_weights(3)) == sorted({Character{1, 1}, Character{1, 0}, Character{1, -1}}));
  CHECK(sorted(ambient_weights(5)) == sorted({Character{1, 1, 0}, Character{1, -1, 0}, Character{1, 0, 1},
                                              Character{1, 0, -1}, Character{1, 0, 0}}));
  CHECK_THROWS_AS(ambient_weights(0), InvalidArgument);

  for (int n = 2; n <= 9; ++n) {
    const auto g = GeometryConfig::make(n);
    const auto w = ambient_weights(n);
    REQUIRE(w.size() == static_cast<std::size_t>(n));
    for (int j = 1; j <= g.m; ++j) {
      CHECK(w[g.position(j)] + w[g.position(-j)] == 2 * diagonal_character(g.rank()));
    }
  }
}

TEST_CASE("tangent weights at fixed points") {
  auto at = [](int n, int i) {
    for (const auto& f : projective_fixed_data(n))
      if (f.point == i) return sorted(f.tangent);
    FAIL("missing point");
    return std::vector<Character>{};
  };
  CHECK(at(2, 1) == std::vector<Character>{Character{0, -2}});
  CHECK(at(3, 0) == sorted({Character{0, 1}, Character{0, -1}}));
  CHECK(at(4, 1) == sorted({Character{0, -1, 1}, Character{0, -1, -1}, Character{0, -2, 0}}));
  CHECK_THROWS_AS(projective_fixed_data(1), InvalidArgument);

  for (int n = 2; n <= 9; ++n) {
    const auto g = GeometryConfig::make(n);
    for (const auto& f : projective_fixed_data(n)) {
      CHECK(f.tangent.size() == static_cast<std::size_t>(n - 1));
      CHECK(f.coordinate_weight == coordinate_weight(f.point, g.rank()));
      for (const auto& w : f.tangent) {
        CHECK(w[0] == 0);
        CHECK_FALSE(w.is_zero());
      }
    }
  }
}

TEST_CASE("tangent data is symmetric under the index involution") {
  for (int n = 2; n <= 9; ++n) {
    const auto data = projective_fixed_data(n);
    std::size_t total = 0;
    for (const auto& f : data) {
      total += f.tangent.size();
      const auto mirror = std::find_if(data.begin(), data.end(), [&](const auto& g) { return g.point == -f.point; });
      REQUIRE(mirror != data.end());
      std::vector<Character> image;
      for (const auto& w : f.tangent) image.push_back(involution(w));
      CHECK(sorted(image) == sorted(mirror->tangent));
    }
    CHECK(total == static_cast<std::size_t>(n * (n - 1)));
  }
}
