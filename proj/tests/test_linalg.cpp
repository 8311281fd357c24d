#include <doctest.h>

#include <cstdlib>
#include <random>

#include "caus/affine.hpp"
#include "caus/error.hpp"
#include "caus/matrix.hpp"
#include "caus/rational.hpp"
#include "support.hpp"

using namespace caus;
using caus::testing::pick;

namespace {

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

RationalVector random_vector(std::mt19937_64& rng, std::size_t n) {
  RationalVector v(n);
  for (auto& x : v) x = make_rational(pick(rng, -4, 4), pick(rng, 1, 3));
  return v;
}

}  // namespace

TEST_CASE("rationals print as p/q and parse back") {
  CHECK(to_string(make_rational(2, 4)) == "1/2");
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-2/6") == make_rational(-1, 3));
  CHECK(parse_rational("+4/8") == make_rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("1/-2"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("x"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational(""), InvalidArgument);
  CHECK_THROWS_AS(make_rational(1, 0), InvalidArgument);
}

TEST_CASE("vector helpers") {
  CHECK(kron(vec({1, 2}), vec({0, 1, 3})) == vec({0, 1, 3, 0, 2, 6}));
  CHECK(concat(vec({1}), vec({2, 3})) == vec({1, 2, 3}));
  CHECK(dot(vec({1, 2}), vec({3, 4})) == 11);
  CHECK(is_zero(zeros(3)));
  CHECK(unit_vector(3, 1) == vec({0, 1, 0}));
}

TEST_CASE("rref, rank, null space and inverse") {
  RationalMatrix m = RationalMatrix::from_rows({vec({1, 2, 3}), vec({2, 4, 6}), vec({1, 0, 1})}, 3);
  CHECK(rank(m) == 2);
  const RationalMatrix ns = null_space(m);
  REQUIRE(ns.rows() == 1);
  CHECK(is_zero(m.apply(ns.row(0))));

  const RationalMatrix a = RationalMatrix::from_rows({vec({2, 1}), vec({1, 1})}, 2);
  CHECK(a * inverse(a) == RationalMatrix::identity(2));
  CHECK_THROWS(inverse(m));
  CHECK(inverse(RationalMatrix(0, 0)).rows() == 0);
}

TEST_CASE("inverse agrees with the identity on random invertible matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const auto n = static_cast<std::size_t>(pick(rng, 1, 5));
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = pick(rng, -3, 3);
    if (rank(m) < n) continue;
    CHECK(inverse(m) * m == RationalMatrix::identity(n));
  }
}

TEST_CASE("affine subspaces have a canonical form") {
  const auto s = AffineSubspace::from_basis(vec({1, 0, 0}), {vec({1, -1, 0})});
  const auto t = AffineSubspace::from_basis(vec({0, 1, 0}), {vec({-2, 2, 0})});
  CHECK(s == t);
  CHECK(s.dim() == 1);
  CHECK(s.contains(vec({3, -2, 0})));
  CHECK_FALSE(s.contains(vec({1, 1, 0})));
  CHECK_THROWS_AS(AffineSubspace::from_basis(vec({0, 0}), {vec({1, 0}), vec({2, 0})}), InvalidArgument);
  CHECK_THROWS_AS(AffineSubspace::from_basis(vec({0, 0}), {vec({1, 0, 0})}), DimensionError);
  CHECK(AffineSubspace::empty(3).dim() == -1);
  CHECK(AffineSubspace::full(2).dim() == 2);
}

TEST_CASE("canonical form does not depend on the spanning points") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(pick(rng, 1, 6));
    const auto k = static_cast<std::size_t>(pick(rng, 1, static_cast<long>(n) + 1));
    std::vector<RationalVector> pts;
    for (std::size_t i = 0; i < k; ++i) pts.push_back(random_vector(rng, n));
    const AffineSubspace s = affine_hull(pts, n);
    // Affine combinations of the same points, in a different order, span the same set.
    std::vector<RationalVector> mixed;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& a = pts[(i + 1) % k];
      const auto& b = pts[i];
      mixed.push_back(add(scale(Rational(2), a), scale(Rational(-1), b)));
    }
    mixed.push_back(pts.front());
    CHECK(affine_hull(mixed, n) == s);
    const Constraints c = constraints_of(s);
    CHECK(c.equations.rows() == n - static_cast<std::size_t>(s.dim()));
    CHECK(solve(c.equations, c.rhs) == s);
    for (const auto& p : pts) CHECK_FALSE(violated_constraint(c, p).has_value());
  }
}

TEST_CASE("intersection, subset and images") {
  const auto line = AffineSubspace::from_basis(vec({0, 0}), {vec({1, 1})});
  const auto shifted = AffineSubspace::from_basis(vec({1, 0}), {vec({1, 1})});
  CHECK(affine_intersect(line, shifted).is_empty());
  const auto axis = AffineSubspace::from_basis(vec({0, 0}), {vec({1, 0})});
  CHECK(affine_intersect(line, axis) == AffineSubspace::point(vec({0, 0})));
  CHECK(affine_intersect(line, line) == line);
  CHECK(affine_subset(AffineSubspace::point(vec({2, 2})), line));
  CHECK_FALSE(affine_subset(line, AffineSubspace::point(vec({2, 2}))));
  CHECK(affine_subset(AffineSubspace::empty(2), line));
  const RationalMatrix proj = RationalMatrix::from_rows({vec({1, 0})}, 2);
  CHECK(linear_image(proj, line) == AffineSubspace::full(1));
  CHECK(solve(RationalMatrix::from_rows({vec({1, 1}), vec({1, 1})}, 2), vec({1, 2})).is_empty());
}

TEST_CASE("dual bases") {
  const std::vector<RationalVector> states = {vec({1, 1, 0}), vec({0, 1, 1})};
  const auto effects = dual_basis(states, 3);
  REQUIRE(effects.size() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(dot(states[i], effects[j]) == (i == j ? 1 : 0));
  CHECK_THROWS(dual_basis({vec({1, 0}), vec({2, 0})}, 2));
}

TEST_CASE("ambient cap follows the environment") {
  CHECK(ambient_cap() == 1024);
  CHECK_THROWS_AS(check_ambient(1025), CapExceeded);
  setenv("CAUS_MAX_AMBIENT", "8", 1);
  CHECK(ambient_cap() == 8);
  CHECK_THROWS_AS(check_ambient(9), CapExceeded);
  setenv("CAUS_MAX_AMBIENT", "0", 1);
  CHECK(ambient_cap() == 1);
  unsetenv("CAUS_MAX_AMBIENT");
  CHECK_NOTHROW(check_ambient(1024));
}
