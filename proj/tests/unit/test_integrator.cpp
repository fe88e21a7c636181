#include <doctest.h>

#include <random>

#include "hyp/error.hpp"
#include "hyp/integrator.hpp"
#include "oracles.hpp"

using namespace hyp;

namespace {

MultiPoly from_terms(int arity, const oracle::Terms& t) {
  MultiPoly p(arity);
  for (const auto& [a, c] : t) p.add_term(a, c);
  return p;
}

RationalPolytope box(const RatVec& lo, const RatVec& hi) {
  const int d = static_cast<int>(lo.size());
  std::vector<RatVec> corners;
  for (int mask = 0; mask < (1 << d); ++mask) {
    RatVec c;
    for (int k = 0; k < d; ++k) c.push_back(mask >> k & 1 ? hi[k] : lo[k]);
    corners.push_back(c);
  }
  return convex_hull(corners);
}

}  // namespace

TEST_CASE("MultiPoly arithmetic") {
  auto x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  auto p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(p.degree() == 2);
  CHECK(p.evaluate({3, 2}) == 5);
  CHECK((x - x).is_zero());
  CHECK(x.pow(16).degree() == 16);
  CHECK_THROWS_AS(x.pow(17), Error);
  CHECK_THROWS_AS(x * MultiPoly::variable(3, 0), Error);
}

TEST_CASE("poly_compose_affine examples") {
  auto x = MultiPoly::variable(1, 0);
  AffineMap twice{{0}, {{2}}};
  CHECK(poly_compose_affine(x * x, twice) == MultiPoly::monomial({2}, 4));
  auto X = MultiPoly::variable(2, 0), Y = MultiPoly::variable(2, 1);
  AffineMap shear{{0, 0}, {{1, 0}, {1, 1}}};  // (u, v) -> (u + v, v)
  CHECK(poly_compose_affine(X - Y, shear) == MultiPoly::variable(2, 0));
  CHECK(poly_compose_affine(MultiPoly::constant(2, 1), shear) == MultiPoly::constant(2, 1));
  CHECK_THROWS_AS(poly_compose_affine(x, shear), Error);
}

TEST_CASE("integrate_monomial_simplex examples") {
  CHECK(integrate_monomial_simplex({2}, {{0}, {1}}) == Rational(1, 3));
  CHECK(integrate_monomial_simplex({0, 0}, {{0, 0}, {1, 0}, {0, 1}}) == Rational(1, 2));
  CHECK(integrate_monomial_simplex({0, 2}, {{0, 0}, {1, 0}, {1, 1}}) == Rational(1, 12));
  CHECK_THROWS_AS(integrate_monomial_simplex({1, 1}, {{0, 0}, {1, 1}, {2, 2}}), Error);
}

TEST_CASE("integrate_polynomial examples") {
  auto l = MultiPoly::variable(1, 0);
  CHECK(integrate_polynomial(convex_hull({{0}, {1}}), l * l).value == Rational(1, 3));
  CHECK(integrate_polynomial(convex_hull({{0}, {2}}), l * l).value == Rational(8, 3));
  auto sq = box({0, 0}, {1, 1});
  CHECK(integrate_polynomial(sq, MultiPoly::constant(2, 1)).value == volume(sq));
  CHECK_THROWS_AS(integrate_polynomial(sq, l), Error);
  auto flat = integrate_polynomial(convex_hull({{0, 0}, {1, 1}}), MultiPoly::constant(2, 1));
  CHECK(flat.lowdim);
  CHECK(flat.value == 0);
}

TEST_CASE("box oracle on random polynomials") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  int cases = 0;
  for (int rep = 0; rep < 120; ++rep) {
    const int dim = 1 + rep % 3;
    RatVec lo, hi;
    for (int k = 0; k < dim; ++k) {
      Rational a(num(rng), den(rng));
      a.canonicalize();
      lo.push_back(a);
      hi.push_back(a + Rational(1 + rep % 4) / 2);
    }
    const auto terms = oracle::random_poly(rng, dim, 4, 1 + rep % 6);
    const auto p = from_terms(dim, terms);
    CHECK(integrate_polynomial(box(lo, hi), p).value == oracle::box_integral(terms, lo, hi));
    ++cases;
  }
  CHECK(cases >= 100);
}

TEST_CASE("linearity, coning independence, non-negativity") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int rep = 0; rep < 20; ++rep) {
    const int dim = 2 + rep % 2;
    std::vector<RatVec> pts;
    for (int i = 0; i < dim + 3; ++i) {
      RatVec v;
      for (int k = 0; k < dim; ++k) v.push_back(c(rng));
      pts.push_back(v);
    }
    auto P = convex_hull(pts);
    if (!P.is_full_dimensional()) continue;
    const auto p = from_terms(dim, oracle::random_poly(rng, dim, 3, 4));
    const auto q = from_terms(dim, oracle::random_poly(rng, dim, 3, 4));
    const Rational a(3, 7), b(-2);
    CHECK(integrate_polynomial(P, p * a + q * b).value ==
          a * integrate_polynomial(P, p).value + b * integrate_polynomial(P, q).value);
    CHECK(integrate_polynomial(P, p, ConeApex::LexLeast).value ==
          integrate_polynomial(P, p, ConeApex::LexGreatest).value);
    CHECK(integrate_polynomial(P, p * p).value >= 0);
  }
}
