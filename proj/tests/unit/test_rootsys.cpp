#include <doctest.h>

#include <numeric>

#include "hyp/error.hpp"
#include "hyp/rootsys.hpp"
#include "oracles.hpp"

using namespace hyp;
using namespace hyp::rootsys;

namespace {

struct Case {
  Family f;
  int rank;
  char letter;
};

const Case kCases[] = {{Family::A, 1, 'A'}, {Family::A, 2, 'A'}, {Family::A, 3, 'A'},
                       {Family::A, 4, 'A'}, {Family::B, 2, 'B'}, {Family::G, 2, 'G'}};

std::vector<Weight> small_dominant(int rank, int max) {
  std::vector<Weight> out;
  IntVec w(static_cast<std::size_t>(rank), 0);
  while (true) {
    out.push_back(Weight{w});
    std::size_t i = 0;
    while (i < w.size() && w[i] == max) w[i++] = 0;
    if (i == w.size()) break;
    ++w[i];
  }
  return out;
}

}  // namespace

TEST_CASE("build_root_system examples") {
  auto a1 = build_root_system(Family::A, 1);
  CHECK(a1.positive_roots().size() == 1);
  CHECK(a1.weyl_order() == 2);
  auto a2 = build_root_system(Family::A, 2);
  CHECK(a2.positive_roots().size() == 3);
  CHECK(a2.weyl_order() == 6);
  auto g2 = build_root_system(Family::G, 2);
  CHECK(g2.positive_roots().size() == 6);
  CHECK(g2.weyl_order() == 12);
  CHECK_THROWS_AS(build_root_system(Family::B, 3), Error);
  CHECK_THROWS_AS(build_root_system(Family::A, 5), Error);
  CHECK_THROWS_AS(family_from_char('E'), Error);
}

TEST_CASE("root counts and Weyl orders agree with a Euclidean closure") {
  for (const auto& c : kCases) {
    CAPTURE(c.letter);
    CAPTURE(c.rank);
    const auto rs = build_root_system(c.f, c.rank);
    const auto ref = oracle::root_data(c.letter, c.rank);
    CHECK(rs.positive_roots().size() == ref.positive);
    CHECK(rs.weyl_order() == ref.weyl_order);
    CHECK(rs.group_dimension() == c.rank + 2 * static_cast<int>(ref.positive));
  }
}

TEST_CASE("Cartan matrix shape") {
  for (const auto& c : kCases) {
    const auto rs = build_root_system(c.f, c.rank);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) {
        if (i == j) CHECK(rs.cartan()[i][j] == 2);
        else CHECK(rs.cartan()[i][j] <= 0);
      }
  }
}

TEST_CASE("weyl_orbit examples") {
  auto a1 = build_root_system(Family::A, 1);
  CHECK(weyl_orbit(a1, Weight{{3}}) == std::vector<Weight>{Weight{{-3}}, Weight{{3}}});
  auto a2 = build_root_system(Family::A, 2);
  CHECK(weyl_orbit(a2, Weight{{1, 0}}) ==
        std::vector<Weight>{Weight{{-1, 1}}, Weight{{0, -1}}, Weight{{1, 0}}});
  for (const auto& c : kCases) {
    const auto rs = build_root_system(c.f, c.rank);
    CHECK(weyl_orbit(rs, Weight{IntVec(static_cast<std::size_t>(c.rank), 0)}).size() == 1);
  }
  CHECK_THROWS_AS(weyl_orbit(a2, Weight{{1}}), Error);
}

TEST_CASE("coroot pairing") {
  auto a1 = build_root_system(Family::A, 1);
  CHECK(coroot_pairing(a1, Weight{{5}}, 0) == 5);
  auto a2 = build_root_system(Family::A, 2);
  // the highest root alpha1 + alpha2 is last in height order
  CHECK(coroot_pairing(a2, Weight{{1, 1}}, 2) == 2);
  CHECK(coroot_pairing(a2, Weight{{0, 0}}, 1) == 0);
  CHECK_THROWS_AS(coroot_pairing(a2, Weight{{1, 1}}, 3), Error);
}

TEST_CASE("pairing is W-equivariant") {
  for (const auto& c : kCases) {
    const auto rs = build_root_system(c.f, c.rank);
    const Weight lambda{[&] {
      IntVec v;
      for (int i = 0; i < c.rank; ++i) v.push_back(i % 2 ? -2 : 3);
      return v;
    }()};
    for (const auto& w : rs.weyl_group()) {
      const Weight wl = rootsys::apply(w, lambda);
      for (std::size_t a = 0; a < rs.positive_roots().size(); ++a) {
        const IntVec image = apply_to_root(rs, w, a);
        // Find the positive root +-image and compare pairings with sign.
        for (std::size_t b = 0; b < rs.positive_roots().size(); ++b) {
          const IntVec rb = rs.root_in_weight_coords(rs.positive_roots()[b].root);
          IntVec neg = rb;
          for (auto& x : neg) x = -x;
          if (rb == image) CHECK(coroot_pairing(rs, wl, b) == coroot_pairing(rs, lambda, a));
          if (neg == image) CHECK(coroot_pairing(rs, wl, b) == -coroot_pairing(rs, lambda, a));
        }
      }
    }
  }
}

TEST_CASE("Weyl group elements: involutive generators, fixed zero, closure") {
  for (const auto& c : kCases) {
    const auto rs = build_root_system(c.f, c.rank);
    const auto& W = rs.weyl_group();
    std::set<IntMatrix> distinct(W.begin(), W.end());
    CHECK(distinct.size() == W.size());
    for (int i = 0; i < c.rank; ++i) {
      // s_i = I - alpha_i e_i^T
      IntMatrix s(static_cast<std::size_t>(c.rank), IntVec(static_cast<std::size_t>(c.rank), 0));
      const auto alpha = rs.simple_root(i);
      for (int r = 0; r < c.rank; ++r) {
        s[r][r] = 1;
        s[r][i] -= alpha[r];
      }
      CHECK(distinct.count(s) == 1);
      IntMatrix sq(s.size(), IntVec(s.size(), 0));
      for (std::size_t r = 0; r < s.size(); ++r)
        for (std::size_t k = 0; k < s.size(); ++k)
          for (std::size_t l = 0; l < s.size(); ++l) sq[r][l] += s[r][k] * s[k][l];
      for (std::size_t r = 0; r < s.size(); ++r)
        for (std::size_t l = 0; l < s.size(); ++l) CHECK(sq[r][l] == (r == l ? 1 : 0));
    }
  }
}

TEST_CASE("orbits: one dominant weight, size divides |W|") {
  for (const auto& c : kCases) {
    if (c.rank > 3) continue;
    const auto rs = build_root_system(c.f, c.rank);
    for (const auto& lambda : small_dominant(c.rank, 2)) {
      const auto orbit = weyl_orbit(rs, lambda);
      CHECK(rs.weyl_order() % orbit.size() == 0);
      int dominant = 0;
      for (const auto& w : orbit) {
        dominant += std::all_of(w.coords.begin(), w.coords.end(), [](auto x) { return x >= 0; });
        CHECK(dominant_representative(rs, w) == lambda);
      }
      CHECK(dominant == 1);
    }
  }
}

TEST_CASE("weyl_dimension examples and known tables") {
  auto a1 = build_root_system(Family::A, 1);
  for (int m = 0; m <= 6; ++m) CHECK(weyl_dimension(a1, Weight{{m}}) == m + 1);
  auto a2 = build_root_system(Family::A, 2);
  CHECK(weyl_dimension(a2, Weight{{1, 1}}) == 8);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      CHECK(weyl_dimension(a2, Weight{{a, b}}) == (a + 1) * (b + 1) * (a + b + 2) / 2);
  auto b2 = build_root_system(Family::B, 2);
  std::multiset<std::int64_t> b2dims;
  for (auto w : {IntVec{1, 0}, IntVec{0, 1}, IntVec{2, 0}, IntVec{0, 2}}) b2dims.insert(weyl_dimension(b2, Weight{w}));
  CHECK(b2dims == std::multiset<std::int64_t>{4, 5, 10, 14});
  auto g2 = build_root_system(Family::G, 2);
  std::multiset<std::int64_t> g2dims;
  for (auto w : {IntVec{1, 0}, IntVec{0, 1}, IntVec{2, 0}, IntVec{1, 1}}) g2dims.insert(weyl_dimension(g2, Weight{w}));
  CHECK(g2dims == std::multiset<std::int64_t>{7, 14, 27, 64});
  CHECK_THROWS_AS(weyl_dimension(a2, Weight{{-1, 0}}), Error);
}

TEST_CASE("Freudenthal multiplicities") {
  auto a1 = build_root_system(Family::A, 1);
  const auto m2 = freudenthal_multiplicities(a1, Weight{{2}});
  CHECK(m2 == std::map<Weight, std::int64_t>{{Weight{{-2}}, 1}, {Weight{{0}}, 1}, {Weight{{2}}, 1}});
  auto a2 = build_root_system(Family::A, 2);
  const auto f = freudenthal_multiplicities(a2, Weight{{1, 0}});
  CHECK(f.size() == 3);
  for (const auto& [w, m] : f) CHECK(m == 1);
  const auto adj = freudenthal_multiplicities(a2, Weight{{1, 1}});
  CHECK(adj.at(Weight{{0, 0}}) == 2);
  CHECK(freudenthal_multiplicities(a2, Weight{{0, 0}}).size() == 1);
  CHECK_THROWS_AS(freudenthal_multiplicities(a2, Weight{{0, -1}}), Error);
}

TEST_CASE("Weyl dimension equals total Freudenthal multiplicity") {
  int cases = 0;
  for (const auto& c : kCases) {
    if (c.rank > 2) continue;
    const auto rs = build_root_system(c.f, c.rank);
    for (const auto& lambda : small_dominant(c.rank, 3)) {
      std::int64_t total = 0;
      for (const auto& [w, m] : freudenthal_multiplicities(rs, lambda)) {
        total += m;
        CHECK(m > 0);
      }
      CHECK(total == weyl_dimension(rs, lambda));
      ++cases;
    }
  }
  CHECK(cases >= 36);
}

TEST_CASE("dominant chamber") {
  CHECK(dominant_chamber(build_root_system(Family::A, 1)).size() == 1);
  const auto a2 = dominant_chamber(build_root_system(Family::A, 2));
  REQUIRE(a2.size() == 2);
  CHECK(a2[0].normal == RatVec{-1, 0});
  CHECK(a2[0].offset == 0);
  CHECK(dominant_chamber(build_root_system(Family::B, 2)).size() == 2);
}
