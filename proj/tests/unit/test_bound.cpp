#include <doctest.h>

#include <random>

#include "hyp/bound.hpp"
#include "hyp/error.hpp"

using namespace hyp;

namespace {

RepSystem torus(std::vector<IntVec> weights) {
  RepSystem s;
  s.group = GroupSpec::torus(static_cast<int>(weights.front().size()));
  for (auto& w : weights) s.reps.push_back(RepDescriptor{w, 0, 0, {}});
  return s;
}

RepSystem sl2(std::vector<int> syms) {
  RepSystem s;
  s.group = GroupSpec::sl2();
  for (int m : syms) s.reps.push_back(RepDescriptor{{}, m, 0, {}});
  return s;
}

RepSystem gl2(int m, int k) {
  RepSystem s;
  s.group = GroupSpec::gl2();
  s.reps.push_back(RepDescriptor{{}, m, k, {}});
  return s;
}

RepSystem rootsys_sys(rootsys::Family f, int rank, std::vector<IntVec> hws) {
  RepSystem s;
  s.group = GroupSpec::root_system(f, rank);
  for (auto& w : hws) s.reps.push_back(RepDescriptor{{}, 0, 0, w});
  return s;
}

std::vector<RatVec> verts(std::initializer_list<RatVec> v) { return v; }

}  // namespace

TEST_CASE("validation") {
  CHECK_NOTHROW(validate(sl2({1})));
  CHECK_THROWS_AS(validate(torus({{1, 0}, {1}})), Error);
  CHECK_THROWS_AS(validate(rootsys_sys(rootsys::Family::A, 2, {{-1, 1}})), Error);
  CHECK_THROWS_AS(validate(gl2(1, -1)), Error);
  RepSystem bad = sl2({1});
  bad.field = FieldSpec{3, 1};
  bad.coefficients = std::vector<FqMatrix>{{{ff::Elem{1}}}};
  CHECK_THROWS_AS(validate(bad), Error);
}

TEST_CASE("basis weights") {
  CHECK(basis_weights(GroupSpec::sl2(), RepDescriptor{{}, 2, 0, {}}) == std::vector<IntVec>{{2}, {0}, {-2}});
  CHECK(basis_weights(GroupSpec::gl2(), RepDescriptor{{}, 2, 1, {}}) ==
        std::vector<IntVec>{{3, 1}, {2, 2}, {1, 3}});
  GroupSpec g = GroupSpec::sl2();
  g.central_rank = 1;
  CHECK(basis_weights(g, RepDescriptor{{2}, 1, 0, {}}) == std::vector<IntVec>{{2, 1}, {2, -1}});
}

TEST_CASE("newton_polytopes examples") {
  auto k = newton_polytopes(torus({{1}, {-1}}));
  CHECK(k.delta_infty.vertices() == verts({{-1}, {1}}));
  auto s = newton_polytopes(sl2({1}));
  CHECK(s.delta_infty.vertices() == verts({{-1}, {1}}));
  CHECK(s.delta.vertices() == verts({{-1}, {1}}));
  auto g = newton_polytopes(gl2(1, 0));
  CHECK(g.delta_infty.vertices() == verts({{0, 0}, {0, 1}, {1, 0}}));
}

TEST_CASE("rank_bound examples") {
  auto k = rank_bound(torus({{1}, {-1}}));
  CHECK(k.d == 1);
  CHECK(k.bound == 2);
  auto s = rank_bound(sl2({1}));
  CHECK(s.d == 3);
  CHECK(s.bound == 2);
  CHECK(s.integral == Rational(1, 3));
  auto g = rank_bound(gl2(1, 0));
  CHECK(g.d == 4);
  CHECK(g.bound == 1);
  CHECK(g.integral == Rational(1, 24));
  CHECK(g.domain.vertices() == verts({{0, 0}, {Rational(1, 2), Rational(1, 2)}, {1, 0}}));
}

TEST_CASE("rank_bound on SL2 Sym^m matches the one-variable integral") {
  // 3! int_0^m lambda^2 = 2 m^3
  for (int m = 1; m <= 4; ++m) CHECK(rank_bound(sl2({m})).bound == 2 * m * m * m);
}

TEST_CASE("rank_bound for abstract root systems") {
  // A1 with highest weight 1: same as SL2 Sym^1
  CHECK(rank_bound(rootsys_sys(rootsys::Family::A, 1, {{1}})).bound == 2);
  auto a2 = rank_bound(rootsys_sys(rootsys::Family::A, 2, {{1, 0}}));
  CHECK(a2.d == 8);
  CHECK(a2.bound > 0);
  CHECK_FALSE(a2.lowdim_flag);
  // Delta_inf of the fundamental rep only meets the chamber in a
  // full-dimensional triangle, so the bound is positive; a G2 integrand has
  // degree 12 and stays under the cap.
  CHECK(rank_bound(rootsys_sys(rootsys::Family::G, 2, {{1, 0}})).bound > 0);
  CHECK_THROWS_AS(rank_bound(rootsys_sys(rootsys::Family::A, 4, {{1, 0, 0, 0}})), Error);
}

TEST_CASE("lower-dimensional domains give a zero bound with a flag") {
  auto r = rank_bound(torus({{1, 1}}));
  CHECK(r.lowdim_flag);
  CHECK(r.bound == 0);
}

TEST_CASE("homogenize examples") {
  auto h = homogenize(sl2({1}));
  CHECK(h.group.central_rank == 1);
  REQUIRE(h.reps.size() == 2);
  CHECK(highest_weight(h.group, h.reps[0]) == IntVec{1, 0});
  CHECK(highest_weight(h.group, h.reps[1]) == IntVec{1, 1});
  auto b = rank_bound(h);
  CHECK(b.domain.vertices() == verts({{0, 0}, {1, 0}, {1, 1}}));
  CHECK(b.bound == 2);
  CHECK(b.d == 4);

  auto t = homogenize(torus({{1}}));
  CHECK(t.group.central_rank == 2);
  CHECK(t.reps[0].central_weight == IntVec{1, 0});
  CHECK(t.reps[1].central_weight == IntVec{1, 1});
}

TEST_CASE("homogenize prepends an identity coefficient") {
  RepSystem s = sl2({1});
  s.field = FieldSpec{3, 1};
  s.coefficients = std::vector<FqMatrix>{{{ff::Elem{1}, ff::Elem{2}}, {ff::Elem{0}, ff::Elem{1}}}};
  auto h = homogenize(s);
  REQUIRE(h.coefficients);
  CHECK(h.coefficients->size() == 2);
  CHECK((*h.coefficients)[0] == FqMatrix{{ff::Elem{1}}});
  CHECK((*h.coefficients)[1] == (*s.coefficients)[0]);
}

TEST_CASE("homogenization identity") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> c(-2, 2);
  std::vector<RepSystem> systems{torus({{1}, {-1}}), sl2({1}), sl2({2}), sl2({3}), gl2(1, 0), gl2(2, 1),
                                 sl2({1, 2})};
  for (int i = 0; i < 4; ++i) {
    std::vector<IntVec> w;
    for (int j = 0; j < 3; ++j) w.push_back({c(rng), c(rng)});
    systems.push_back(torus(w));
  }
  for (const auto& s : systems) {
    const auto b = rank_bound(s);
    const auto h = rank_bound(homogenize(s));
    CHECK(h.bound == b.bound);
    CHECK(h.d == b.d + 1);
    CHECK(check_homogeneity(homogenize(s)));
  }
}

TEST_CASE("check_homogeneity") {
  CHECK(check_homogeneity(gl2(1, 0)));
  CHECK_FALSE(check_homogeneity(gl2(2, 0)));
  CHECK(check_homogeneity(gl2(1, 1) /* scalar acts by lambda^3 */) == false);
  CHECK_FALSE(check_homogeneity(sl2({1})));
  CHECK(check_homogeneity(torus({{1, 0}, {1, 3}})));
  CHECK_FALSE(check_homogeneity(torus({{2}, {4}})));
}

TEST_CASE("quasi-finiteness span criterion") {
  CHECK(quasi_finiteness_check(torus({{1, 0}, {0, 1}})));
  CHECK_FALSE(quasi_finiteness_check(torus({{1, 1}})));
  for (int m = 1; m <= 3; ++m) CHECK(quasi_finiteness_check(sl2({m})));
  CHECK_FALSE(quasi_finiteness_check(sl2({0})));
  CHECK(quasi_finiteness_check(gl2(1, 0)));
}

TEST_CASE("torus integrality and monotonicity") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int rep = 0; rep < 15; ++rep) {
    std::vector<IntVec> w;
    for (int j = 0; j < 3; ++j) w.push_back({c(rng), c(rng)});
    const auto b = rank_bound(torus(w));
    CHECK(b.bound >= 0);
    CHECK(b.bound.get_den() == 1);
    w.push_back({c(rng), c(rng)});
    const auto bigger = rank_bound(torus(w));
    CHECK(bigger.bound >= b.bound);
    for (const auto& v : b.delta_infty.vertices()) CHECK(bigger.delta_infty.contains(v));
  }
}

TEST_CASE("Delta_inf is Weyl invariant") {
  for (const auto& s : {rootsys_sys(rootsys::Family::A, 2, {{1, 1}}), rootsys_sys(rootsys::Family::B, 2, {{0, 1}}),
                        rootsys_sys(rootsys::Family::G, 2, {{1, 0}})}) {
    const auto lm = lattice_model(s.group);
    const auto P = newton_polytopes(s).delta_infty;
    for (const auto& w : lm.weyl_group)
      for (const auto& v : P.vertices()) {
        RatVec img(w.size());
        for (std::size_t r = 0; r < w.size(); ++r)
          for (std::size_t k = 0; k < v.size(); ++k) img[r] += Rational(static_cast<long>(w[r][k])) * v[k];
        CHECK(std::find(P.vertices().begin(), P.vertices().end(), img) != P.vertices().end());
      }
  }
}
