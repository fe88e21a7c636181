#include <doctest.h>

#include "hyp/bound.hpp"
#include "hyp/error.hpp"
#include "hyp/nondegen.hpp"

using namespace hyp;
using namespace hyp::nondegen;

namespace {

RepSystem torus(std::vector<IntVec> weights) {
  RepSystem s;
  s.group = GroupSpec::torus(static_cast<int>(weights.front().size()));
  for (auto& w : weights) s.reps.push_back(RepDescriptor{w, 0, 0, {}});
  return s;
}

RepSystem sl2(int m) {
  RepSystem s;
  s.group = GroupSpec::sl2();
  s.reps.push_back(RepDescriptor{{}, m, 0, {}});
  return s;
}

RepSystem gl2(int m, int k) {
  RepSystem s;
  s.group = GroupSpec::gl2();
  s.reps.push_back(RepDescriptor{{}, m, k, {}});
  return s;
}

Face face_at(const RationalPolytope& p, const std::vector<RatVec>& vertices) {
  for (const auto& f : faces_without_origin(p))
    if (face_vertices(p, f) == vertices) return f;
  FAIL("face not found");
  return {};
}

FqMatrix mat(const ff::Field& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return {{f.from_int(a), f.from_int(b)}, {f.from_int(c), f.from_int(d)}};
}

groups::GroupPoint sl2_point(const ff::Field& f, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return {{}, {f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d)}, true};
}

}  // namespace

TEST_CASE("faces_without_origin examples") {
  const auto s = newton_polytopes(sl2(1)).delta_infty;
  const auto faces = faces_without_origin(s);
  REQUIRE(faces.size() == 2);
  CHECK(face_vertices(s, faces[0]) == std::vector<RatVec>{{-1}});
  CHECK(face_vertices(s, faces[1]) == std::vector<RatVec>{{1}});
  CHECK(weyl_orbit_classes(s, faces, lattice_model(GroupSpec::sl2())) == std::vector<std::size_t>{0, 0});

  const auto t = newton_polytopes(torus({{1}, {2}})).delta_infty;
  const auto tf = faces_without_origin(t);
  REQUIRE(tf.size() == 1);
  CHECK(face_vertices(t, tf[0]) == std::vector<RatVec>{{2}});

  const auto g = newton_polytopes(gl2(1, 0)).delta_infty;
  const auto gf = faces_without_origin(g);
  REQUIRE(gf.size() == 3);
  const auto orbits = weyl_orbit_classes(g, gf, lattice_model(GroupSpec::gl2()));
  CHECK(orbits[0] == orbits[1]);
  CHECK(orbits[2] != orbits[0]);
  CHECK(gf[2].affine_dim == 1);
}

TEST_CASE("A2 adjoint: hexagon vertices form one orbit, edges two orbits of three") {
  RepSystem s;
  s.group = GroupSpec::root_system(rootsys::Family::A, 2);
  s.reps.push_back(RepDescriptor{{}, 0, 0, {1, 1}});
  const auto p = newton_polytopes(s).delta_infty;
  const auto faces = faces_without_origin(p);
  CHECK(faces.size() == 12);
  const auto orbits = weyl_orbit_classes(p, faces, lattice_model(s.group));
  CHECK(*std::max_element(orbits.begin(), orbits.end()) == 2);
}

TEST_CASE("face_projector examples") {
  const auto s1 = newton_polytopes(sl2(1)).delta_infty;
  CHECK(face_projector(sl2(1), 0, s1, face_at(s1, {{1}})) == std::vector<bool>{true, false});
  const auto s2 = newton_polytopes(sl2(2)).delta_infty;
  CHECK(face_projector(sl2(2), 0, s2, face_at(s2, {{2}})) == std::vector<bool>{true, false, false});
  const auto ts = torus({{1}, {2}});
  const auto t = newton_polytopes(ts).delta_infty;
  const auto f2 = face_at(t, {{2}});
  CHECK(face_projector(ts, 0, t, f2) == std::vector<bool>{false});
  CHECK(face_projector(ts, 1, t, f2) == std::vector<bool>{true});
  const auto g = newton_polytopes(gl2(2, 0)).delta_infty;
  const auto edge = face_at(g, {{0, 2}, {2, 0}});
  CHECK(face_projector(gl2(2, 0), 0, g, edge) == std::vector<bool>{true, true, true});
  CHECK_THROWS_AS(face_projector(sl2(1), 1, s1, face_at(s1, {{1}})), Error);
}

TEST_CASE("projectors are idempotent and commute with the torus") {
  const ff::Field f(5, 1);
  const auto s = gl2(3, 1);
  const auto p = newton_polytopes(s).delta_infty;
  for (const auto& face : faces_without_origin(p)) {
    const auto d = face_projector(s, 0, p, face);
    FqMatrix E(d.size(), std::vector<ff::Elem>(d.size(), f.zero()));
    for (std::size_t i = 0; i < d.size(); ++i) E[i][i] = d[i] ? f.one() : f.zero();
    CHECK(groups::matmul(f, E, E) == E);
    for (std::int64_t a = 1; a < 5; ++a)
      for (std::int64_t b = 1; b < 5; ++b) {
        const groups::GroupPoint t{{}, {f.from_int(a), f.zero(), f.zero(), f.from_int(b)}, true};
        const auto r = groups::rep_matrix(f, s.group, s.reps[0], t);
        CHECK(groups::matmul(f, E, r) == groups::matmul(f, r, E));
      }
  }
}

TEST_CASE("witness search: singular A on SL2 is degenerate") {
  const ff::Field f(3, 1);
  const auto s = sl2(1);
  const auto p = newton_polytopes(s).delta_infty;
  const auto top = face_at(p, {{1}});
  const std::vector<FqMatrix> A{mat(f, 1, 0, 0, 0)};
  const auto st = critical_witness_search(s, A, p, top, f, 1);
  REQUIRE(st.kind == StatusKind::Degenerate);
  REQUIRE(st.witness);
  CHECK(verify_witness(s, A, p, top, f, *st.witness));
  CHECK(st.face == std::vector<RatVec>{{1}});

  const auto J = sl2_point(f, 0, -1, 1, 0), I = sl2_point(f, 1, 0, 0, 1);
  CHECK(verify_witness(s, A, p, top, f, Witness{1, J, J}));
  CHECK_FALSE(verify_witness(s, A, p, top, f, Witness{1, J, I}));
}

TEST_CASE("witness search: identity on SL2 has no witness up to s = 2") {
  const ff::Field f(3, 1);
  const auto s = sl2(1);
  const auto p = newton_polytopes(s).delta_infty;
  const auto st = critical_witness_search(s, {identity_matrix(f, 2)}, p, face_at(p, {{1}}), f, 2);
  CHECK(st.kind == StatusKind::NoWitnessUpTo);
  CHECK(st.extension_cap == 2);
  CHECK(st.assertable());
}

TEST_CASE("witness search: characteristic-2 collapse of t^2") {
  const ff::Field f(2, 1);
  const auto s = torus({{2}});
  const auto p = newton_polytopes(s).delta_infty;
  const auto st = critical_witness_search(s, {{{f.one()}}}, p, face_at(p, {{2}}), f, 1);
  CHECK(st.kind == StatusKind::Degenerate);
  CHECK(verify_witness(s, {{{f.one()}}}, p, face_at(p, {{2}}), f, *st.witness));
}

TEST_CASE("witness search size guard") {
  const ff::Field f(7, 1);
  const auto s = sl2(1);
  const auto p = newton_polytopes(s).delta_infty;
  CHECK(effective_extension_cap(s.group, f, 2) == 1);
  CHECK(effective_extension_cap(s.group, ff::Field(3, 1), 2) == 2);
  try {
    critical_witness_search(s, {identity_matrix(f, 2)}, p, face_at(p, {{1}}), f, 2);
    FAIL("expected SizeGuard");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeGuard);
  }
}

TEST_CASE("fast search and dual-number derivatives agree pointwise") {
  // Brute force over all pairs with dual-number derivatives decides the same.
  const ff::Field f(3, 1);
  const auto s = sl2(1);
  const auto p = newton_polytopes(s).delta_infty;
  const groups::PointEnumerator e(s.group, f);
  for (const auto& A : {mat(f, 1, 0, 0, 0), mat(f, 1, 1, 1, 1), mat(f, 0, 1, 2, 0)}) {
    for (const auto& face : faces_without_origin(p)) {
      bool any = false;
      for (std::uint64_t i = 0; i < e.size() && !any; ++i)
        for (std::uint64_t j = 0; j < e.size() && !any; ++j) {
          const auto d = critical_derivatives(s, {A}, p, face, f, f, e.at(i), e.at(j));
          any = std::all_of(d.begin(), d.end(), [](ff::Elem x) { return x.v == 0; });
        }
      const auto st = critical_witness_search(s, {A}, p, face, f, 1);
      CHECK(any == (st.kind == StatusKind::Degenerate));
    }
  }
}

TEST_CASE("exact univariate examples") {
  const ff::Field f5(5, 1);
  const auto k = torus({{1}, {-1}});
  for (std::int64_t a = 1; a < 5; ++a)
    for (std::int64_t b = 1; b < 5; ++b)
      CHECK(torus_nondegen_exact_univariate(k, {{{f5.from_int(a)}}, {{f5.from_int(b)}}}, f5).kind ==
            StatusKind::ExactNondegenerate);
  const ff::Field f2(2, 1);
  const auto sq = torus_nondegen_exact_univariate(torus({{2}}), {{{f2.one()}}}, f2);
  CHECK(sq.kind == StatusKind::ExactDegenerate);
  CHECK(sq.face == std::vector<RatVec>{{2}});
  for (std::uint32_t p : {2u, 3u, 7u}) {
    const ff::Field f(p, 1);
    CHECK(torus_nondegen_exact_univariate(torus({{1}}), {{{f.one()}}}, f).kind == StatusKind::ExactNondegenerate);
  }
  CHECK_THROWS_AS(torus_nondegen_exact_univariate(torus({{1, 0}}), {{{f5.one()}}}, f5), Error);
  CHECK_THROWS_AS(torus_nondegen_exact_univariate(sl2(1), {identity_matrix(f5, 2)}, f5), Error);
}

TEST_CASE("repeated weights add their coefficients") {
  const ff::Field f(5, 1);
  const auto s = torus({{1}, {1}});
  CHECK(torus_nondegen_exact_univariate(s, {{{f.from_int(2)}}, {{f.from_int(3)}}}, f).kind == StatusKind::ExactDegenerate);
  CHECK(torus_nondegen_exact_univariate(s, {{{f.from_int(2)}}, {{f.from_int(2)}}}, f).kind == StatusKind::ExactNondegenerate);
}

TEST_CASE("exact decision agrees with the witness search on a t + b t^2 over F_5") {
  const ff::Field f(5, 1);
  const auto s = torus({{1}, {2}});
  const auto p = newton_polytopes(s).delta_infty;
  for (std::int64_t a = 0; a < 5; ++a)
    for (std::int64_t b = 0; b < 5; ++b) {
      const std::vector<FqMatrix> A{{{f.from_int(a)}}, {{f.from_int(b)}}};
      const bool exact = torus_nondegen_exact_univariate(s, A, f).kind == StatusKind::ExactDegenerate;
      bool found = false;
      for (const auto& face : faces_without_origin(p))
        found = found || critical_witness_search(s, A, p, face, f, 2).kind == StatusKind::Degenerate;
      CHECK(exact == found);
      CHECK(exact == (b == 0));
    }
}

TEST_CASE("nondegen_status over all faces") {
  const ff::Field f(3, 1);
  const auto s = sl2(1);
  CHECK(nondegen_status(s, {mat(f, 1, 0, 0, 0)}, f, 2).kind == StatusKind::Degenerate);
  const auto st = nondegen_status(s, {mat(f, 1, 2, 0, 1)}, f, 2);
  CHECK(st.kind == StatusKind::NoWitnessUpTo);
  CHECK(st.extension_cap == 2);
  CHECK(nondegen_status(torus({{1}, {-1}}), {{{f.one()}}, {{f.one()}}}, f, 2).kind == StatusKind::ExactNondegenerate);
}

TEST_CASE("status names") {
  CHECK(to_string(StatusKind::Degenerate) == "Degenerate");
  CHECK(to_string(StatusKind::NoWitnessUpTo) == "NoWitnessUpTo");
  CHECK(to_string(StatusKind::ExactNondegenerate) == "ExactNondegenerate");
  CHECK(to_string(StatusKind::ExactDegenerate) == "ExactDegenerate");
}
