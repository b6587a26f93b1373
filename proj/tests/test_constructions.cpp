#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "support.hpp"
#include "upsilon/codes.hpp"
#include "upsilon/constructions.hpp"
#include "upsilon/error.hpp"
#include "upsilon/lattice.hpp"
#include "upsilon/tiling.hpp"

using namespace upsilon;
using testsupport::box;

TEST_CASE("binary construction") {
  const auto t3 = from_binary_perfect(binary_hamming(2));
  CHECK(t3.codewords() == std::vector<Point>{{0, 0, 0}, {2, 2, 2}});
  CHECK(t3.size() * upsilon_size(3) == 64);
  CHECK(verify(t3).is_tiling);
  const auto t7 = from_binary_perfect(binary_hamming(3));
  CHECK(t7.size() == 16);
  CHECK(t7.period() == 4);
  CHECK(verify(t7).is_tiling);
  CHECK(is_lattice_tiling(t7));
  const auto t15 = from_binary_perfect(binary_hamming(4));
  CHECK(t15.size() == 2048);
  CHECK_THROWS_AS(from_binary_perfect(BlockCode(2, 3, {{0, 0, 0}})), PreconditionError);
  CHECK_THROWS_AS(from_binary_perfect(ternary_hamming(1)), PreconditionError);
}

TEST_CASE("doubling turns hamming distance into cross distance") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& x : box(n, 0, 1))
      for (const auto& y : box(n, 0, 1)) CHECK(cross_distance(2 * x, 2 * y) == static_cast<Coord>(hamming_distance(x, y)));
  for (int k = 0; k < 200; ++k) {
    const auto x = testsupport::random_point(15, 0, 1);
    const auto y = testsupport::random_point(15, 0, 1);
    CHECK(cross_distance(2 * x, 2 * y) == static_cast<Coord>(hamming_distance(x, y)));
  }
}

TEST_CASE("binary recovery") {
  for (int t = 2; t <= 4; ++t) {
    const auto c = binary_hamming(t);
    CHECK(to_binary_perfect(from_binary_perfect(c)) == c);
  }
  CHECK(to_binary_perfect(PeriodicTiling(3, 4, {{0, 0, 0}, {2, 2, 2}})).codewords() ==
        std::vector<Point>{{0, 0, 0}, {1, 1, 1}});
  const auto xi = to_binary_perfect(PeriodicTiling(7, 4, testsupport::example_z4_7()));
  CHECK(xi.size() == 16);
  CHECK(is_perfect(xi).perfect);
  const auto star = to_binary_perfect(punctured_construction(binary_hamming(3)));
  CHECK(is_perfect(star).perfect);
  CHECK_THROWS_AS(to_binary_perfect(PeriodicTiling(3, 4, {{0, 0, 0}})), PreconditionError);
}

TEST_CASE("punctured construction") {
  const auto c = binary_hamming(3);
  const auto t = punctured_construction(c);
  CHECK(t.size() == c.size());
  CHECK(verify(t).is_tiling);
  std::size_t odd_last = 0;
  for (const auto& x : t.codewords()) odd_last += x[6] % 2;
  CHECK(odd_last == weight_split(puncture(c)).odd.size());
  CHECK(odd_last == 8);
  // Exactly the odd-split codewords get an odd last entry.
  for (const auto& w : c.codewords()) {
    Point x = 2 * w;
    Point head(6);
    for (std::size_t i = 0; i < 6; ++i) head[i] = w[i];
    if (hamming_weight(head) % 2 == 1) x[6] += 1;
    CHECK(t.contains(x));
  }
  CHECK(verify(punctured_construction(binary_hamming(2))).is_tiling);
  CHECK(verify(punctured_construction(binary_hamming(4))).is_tiling);
  CHECK(verify(PeriodicTiling(7, 4, testsupport::example_z4_7())).is_tiling);
}

TEST_CASE("binary locator") {
  const auto rep = binary_hamming(2);
  CHECK(locate_tile_binary({0, 0, 0}, rep) == Point{0, 0, 0});
  CHECK(locate_tile_binary({1, 1, 1}, rep) == Point{2, 2, 2});
  const auto c = binary_hamming(3);
  const auto t = from_binary_perfect(c);
  for (const auto& a : box(7, 0, 3)) {
    const auto x = locate_tile_binary(a, c);
    REQUIRE(covers(x, a));
    REQUIRE(t.contains(x.mod(4)));
  }
  for (int k = 0; k < 2000; ++k) {
    const auto a = testsupport::random_point(7, -50, 50);
    const auto x = locate_tile_binary(a, c);
    CHECK(covers(x, a));
    CHECK(t.contains(x.mod(4)));
  }
  CHECK_THROWS_AS(locate_tile_binary({0, 0}, c), DimensionMismatch);
}

TEST_CASE("class table") {
  const auto& tab = class_table();
  CHECK(tab.class_of(0, 0) == 0);
  CHECK(tab.class_of(1, 1) == 1);
  CHECK(tab.class_of(2, 0) == 2);
  CHECK(tab.adjust[1][1][0] == Pair{3, 2});
  // Every entry covers its point and sits in the target class mod the lattice.
  for (Coord x1 = 0; x1 < 3; ++x1)
    for (Coord x2 = 0; x2 < 4; ++x2)
      for (int target = 0; target < 3; ++target) {
        const auto v = tab.adjust[x1][x2][target];
        const Point X{v[0], v[1]};
        CHECK(covers(X, {x1, x2}));
        CHECK(lambda_n(1).contains(X - Point{phi(target)[0], phi(target)[1]}));
      }
}

TEST_CASE("phi and psi") {
  CHECK(phi(0) == Pair{0, 0});
  CHECK(phi(1) == Pair{1, 2});
  CHECK(phi(2) == Pair{2, 0});
  CHECK(Phi(Point(3)) == Point(6));
  CHECK(psi(2, 2) == 0);
  for (Coord s = 0; s < 3; ++s) CHECK(psi(phi(s)[0], phi(s)[1]) == s);
  for (std::size_t nu = 1; nu <= 3; ++nu)
    for (const auto& w : box(nu, 0, 2)) CHECK(Psi(Phi(w)) == w);
  // Homomorphism into Z^{2nu} / Lambda.
  for (std::size_t nu = 1; nu <= 2; ++nu) {
    const auto lat = lambda_n(nu);
    const auto words = box(nu, 0, 2);
    for (const auto& a : words)
      for (const auto& b : words) {
        CHECK(lat.contains(Phi(a) + Phi(b) - Phi((a + b).mod(3))));
        if (a != b) CHECK_FALSE(lat.contains(Phi(a) - Phi(b)));
      }
  }
  CHECK_THROWS_AS(phi(3), InvalidArgument);
}

TEST_CASE("reduction to representatives") {
  const auto r0 = reduce_to_representative({0, 0});
  CHECK(r0.b == Point{0, 0});
  CHECK(r0.y == Point{0, 0});
  const auto r1 = reduce_to_representative({3, 2});
  CHECK(r1.b == Point{0, 0});
  CHECK(r1.y == Point{-3, -2});
  const auto lat = lambda_n(1);
  for (const auto& a : box(2, -12, 12)) {
    const auto r = reduce_to_representative(a);
    CHECK(a + r.y == r.b);
    CHECK(r.b[0] >= 0);
    CHECK(r.b[0] < 3);
    CHECK(r.b[1] >= 0);
    CHECK(r.b[1] < 4);
    CHECK(lat.contains(r.y));
  }
}

TEST_CASE("ternary construction") {
  const auto t2 = from_ternary_perfect(ternary_hamming(1));
  CHECK(t2.codewords() == testsupport::lambda2_window());
  CHECK(verify(t2).is_tiling);
  CHECK(is_lattice_tiling(t2));
  CHECK_THROWS_AS(from_ternary_perfect(binary_hamming(2)), PreconditionError);
  CHECK_THROWS_AS(from_ternary_perfect(BlockCode(3, 2, {{0, 0}})), PreconditionError);
}

TEST_CASE("ternary locator") {
  const auto c1 = ternary_hamming(1);
  CHECK(locate_tile_ternary({0, 0}, c1) == Point{0, 0});
  CHECK(locate_tile_ternary({1, 1}, c1) == Point{3, 2});
  const auto t2 = from_ternary_perfect(c1);
  for (const auto& a : box(2, -24, 24)) {
    const auto x = locate_tile_ternary(a, c1);
    REQUIRE(covers(x, a));
    REQUIRE(t2.contains(x.mod(12)));
  }
  const auto c4 = ternary_hamming(2);
  const auto words = c4.codewords();
  const auto lat = lambda_n(4);
  for (int k = 0; k < 5000; ++k) {
    const auto a = testsupport::random_point(8, -30, 30);
    const auto x = locate_tile_ternary(a, c4);
    REQUIRE(covers(x, a));
    // X lies in Phi(C) + Lambda.
    bool member = false;
    for (const auto& w : words) member = member || lat.contains(x - Phi(w));
    CHECK(member);
  }
  CHECK_THROWS_AS(locate_tile_ternary({0, 0, 0}, c1), DimensionMismatch);
}
