#include "hyp/nondegen.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "hyp/bound.hpp"
#include "hyp/error.hpp"

namespace hyp::nondegen {

namespace {

using groups::GroupPoint;

std::vector<FqMatrix> embed_all(const ff::Field& base, const ff::Field& big,
                                const std::vector<FqMatrix>& A) {
  const ff::Embedding emb(base, big);
  std::vector<FqMatrix> out = A;
  for (auto& m : out)
    for (auto& row : m)
      for (auto& e : row) e = emb(e);
  return out;
}

void check_coefficients(const RepSystem& sys, const std::vector<FqMatrix>& A, const ff::Field& f) {
  if (A.size() != sys.reps.size())
    fail(ErrorKind::DimensionMismatch, "one coefficient matrix per representation is required");
  for (std::size_t j = 0; j < A.size(); ++j) {
    const auto n = static_cast<std::size_t>(rep_dimension(sys.group, sys.reps[j]));
    if (A[j].size() != n)
      fail(ErrorKind::DimensionMismatch, "coefficient " + std::to_string(j) + " has the wrong size");
    for (const auto& row : A[j]) {
      if (row.size() != n)
        fail(ErrorKind::DimensionMismatch, "coefficient " + std::to_string(j) + " is not square");
      for (auto e : row)
        if (e.v >= f.q()) fail(ErrorKind::Validation, "coefficient entry outside the field");
    }
  }
}

std::vector<std::vector<bool>> all_projectors(const RepSystem& sys, const RationalPolytope& p,
                                              const Face& face) {
  std::vector<std::vector<bool>> out;
  for (std::size_t j = 0; j < sys.reps.size(); ++j) out.push_back(face_projector(sys, j, p, face));
  return out;
}

// f_tau over a ring, for points given over that ring.
template <class Ring>
typename Ring::value_type f_tau(const Ring& ring, const RepSystem& sys,
                                const std::vector<FqMatrix>& A,
                                const std::vector<std::vector<bool>>& proj,
                                const groups::Point<typename Ring::value_type>& g,
                                const groups::Point<typename Ring::value_type>& h,
                                auto lift_elem) {
  auto total = ring.zero();
  for (std::size_t j = 0; j < sys.reps.size(); ++j) {
    const auto rg = groups::rep_matrix<Ring>(ring, sys.group, sys.reps[j], g);
    const auto rh = groups::rep_matrix<Ring>(ring, sys.group, sys.reps[j], h);
    const std::size_t n = rg.size();
    // Tr(A rg E rh) = sum_{a,b,c} A[a][b] rg[b][c] E[c] rh[c][a]
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (A[j][a][b].v == 0) continue;
        auto inner = ring.zero();
        for (std::size_t c = 0; c < n; ++c)
          if (proj[j][c]) inner = ring.add(inner, ring.mul(rg[b][c], rh[c][a]));
        total = ring.add(total, ring.mul(lift_elem(A[j][a][b]), inner));
      }
  }
  return total;
}

std::vector<ff::Elem> derivatives_impl(const RepSystem& sys, const std::vector<FqMatrix>& Abig,
                                       const std::vector<std::vector<bool>>& proj,
                                       const ff::Field& big, const GroupPoint& g,
                                       const GroupPoint& h) {
  const ff::DualRing ring(big);
  auto lift = [&](ff::Elem e) { return ring.lift(e); };
  const auto dirs = groups::lie_basis_directions(sys.group);
  std::vector<ff::Elem> out;
  const auto gl = groups::lift(ring, g), hl = groups::lift(ring, h);
  for (const auto& d : dirs)
    out.push_back(f_tau(ring, sys, Abig, proj, groups::perturb(ring, g, d), hl, lift).deriv);
  for (const auto& d : dirs)
    out.push_back(f_tau(ring, sys, Abig, proj, gl, groups::perturb(ring, h, d), lift).deriv);
  return out;
}

bool is_torus_product(const GroupSpec& g) { return g.is_torus(); }

std::uint64_t pow_checked(std::uint64_t q, int s) {
  std::uint64_t r = 1;
  for (int i = 0; i < s; ++i)
    if (__builtin_mul_overflow(r, q, &r) || r > ff::kMaxFieldSize) return 0;
  return r;
}

bool extension_feasible(const GroupSpec& g, const ff::Field& f, int s) {
  const std::uint64_t qs = pow_checked(f.q(), s);
  if (qs == 0) return false;
  std::uint64_t order = 0;
  try {
    order = groups::group_order(g, qs);
  } catch (const Error&) {
    return false;
  }
  if (is_torus_product(g)) return order <= kMaxPairEvaluations;
  // order <= 1e9, so the square fits in 64 bits
  return order <= groups::kMaxGroupPoints && order * order <= kMaxPairEvaluations;
}

}  // namespace

std::string to_string(StatusKind k) {
  switch (k) {
    case StatusKind::Degenerate: return "Degenerate";
    case StatusKind::NoWitnessUpTo: return "NoWitnessUpTo";
    case StatusKind::ExactNondegenerate: return "ExactNondegenerate";
    case StatusKind::ExactDegenerate: return "ExactDegenerate";
  }
  return "?";
}

std::vector<Face> faces_without_origin(const RationalPolytope& delta_infty) {
  std::vector<Face> out;
  for (auto& f : enumerate_faces(delta_infty))
    if (!f.contains_origin) out.push_back(std::move(f));
  return out;
}

std::vector<RatVec> face_vertices(const RationalPolytope& p, const Face& face) {
  std::vector<RatVec> out;
  for (auto i : face.vertex_indices) out.push_back(p.vertices().at(i));
  return out;
}

std::vector<std::size_t> weyl_orbit_classes(const RationalPolytope& delta_infty,
                                            const std::vector<Face>& faces,
                                            const LatticeModel& lm) {
  std::map<std::set<RatVec>, std::size_t> index;
  std::vector<std::set<RatVec>> sets;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    auto v = face_vertices(delta_infty, faces[i]);
    sets.emplace_back(v.begin(), v.end());
    index.emplace(sets.back(), i);
  }
  std::vector<std::size_t> label(faces.size(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (label[i] != SIZE_MAX) continue;
    label[i] = next;
    for (const auto& w : lm.weyl_group) {
      std::set<RatVec> image;
      for (const auto& x : sets[i]) {
        RatVec y(w.size());
        for (std::size_t r = 0; r < w.size(); ++r)
          for (std::size_t c = 0; c < x.size(); ++c) y[r] += Rational(static_cast<long>(w[r][c])) * x[c];
        image.insert(std::move(y));
      }
      if (auto it = index.find(image); it != index.end() && label[it->second] == SIZE_MAX)
        label[it->second] = next;
    }
    ++next;
  }
  return label;
}

std::vector<bool> face_projector(const RepSystem& sys, std::size_t rep,
                                 const RationalPolytope& delta_infty, const Face& face) {
  if (rep >= sys.reps.size()) fail(ErrorKind::IndexOutOfRange, "representation index out of range");
  std::vector<bool> out;
  for (const auto& w : basis_weights(sys.group, sys.reps[rep])) {
    const RatVec x = to_rational(w);
    bool on = delta_infty.contains(x);
    for (auto fi : face.facet_indices) on = on && delta_infty.on_facet(fi, x);
    out.push_back(on);
  }
  return out;
}

int effective_extension_cap(const GroupSpec& g, const ff::Field& f, int cap) {
  if (cap < 1) fail(ErrorKind::Validation, "extension cap must be at least 1");
  int best = 1;
  for (int s = 1; s <= cap; ++s)
    if (extension_feasible(g, f, s)) best = s;
    else break;
  return best;
}

std::vector<ff::Elem> critical_derivatives(const RepSystem& sys, const std::vector<FqMatrix>& A,
                                           const RationalPolytope& delta_infty, const Face& face,
                                           const ff::Field& base, const ff::Field& big,
                                           const GroupPoint& g, const GroupPoint& h) {
  check_coefficients(sys, A, base);
  return derivatives_impl(sys, embed_all(base, big, A), all_projectors(sys, delta_infty, face), big,
                          g, h);
}

bool verify_witness(const RepSystem& sys, const std::vector<FqMatrix>& A,
                    const RationalPolytope& delta_infty, const Face& face, const ff::Field& base,
                    const Witness& w) {
  const ff::Field big(base.p(), base.m() * w.extension);
  for (auto e : critical_derivatives(sys, A, delta_infty, face, base, big, w.g, w.h))
    if (e.v != 0) return false;
  return true;
}

NondegenStatus critical_witness_search(const RepSystem& sys, const std::vector<FqMatrix>& A,
                                       const RationalPolytope& delta_infty, const Face& face,
                                       const ff::Field& f, int extension_cap) {
  if (!sys.group.has_matrix_model())
    fail(ErrorKind::NotEnumerable, "abstract root systems have no rational points to search");
  check_coefficients(sys, A, f);
  if (extension_cap < 1) fail(ErrorKind::Validation, "extension cap must be at least 1");
  for (int s = 1; s <= extension_cap; ++s)
    if (!extension_feasible(sys.group, f, s))
      fail(ErrorKind::SizeGuard, "witness search over F_{q^" + std::to_string(s) +
                                     "} exceeds the evaluation guard");

  const auto proj = all_projectors(sys, delta_infty, face);
  const bool torus = sys.group.is_torus();
  const auto dirs = groups::lie_basis_directions(sys.group);

  for (int s = 1; s <= extension_cap; ++s) {
    const ff::Field big(f.p(), f.m() * static_cast<std::uint32_t>(s));
    const auto Abig = embed_all(f, big, A);
    const groups::PointEnumerator points(sys.group, big);
    const ff::DualRing ring(big);
    const GroupPoint one = groups::identity_point(sys.group, big);

    // Block offsets of the flattened n_j x n_j matrices.
    std::vector<std::size_t> dims, offsets;
    std::size_t total = 0;
    for (const auto& rep : sys.reps) {
      dims.push_back(static_cast<std::size_t>(rep_dimension(sys.group, rep)));
      offsets.push_back(total);
      total += dims.back() * dims.back();
    }

    // d rho(xi) for every direction.
    std::vector<std::vector<FqMatrix>> drho(dirs.size());
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      const auto x = groups::perturb(ring, one, dirs[k]);
      for (const auto& rep : sys.reps) {
        const auto m = groups::rep_matrix<ff::DualRing>(ring, sys.group, rep, x);
        FqMatrix d(m.size(), std::vector<ff::Elem>(m.size()));
        for (std::size_t a = 0; a < m.size(); ++a)
          for (std::size_t b = 0; b < m.size(); ++b) d[a][b] = m[a][b].deriv;
        drho[k].push_back(std::move(d));
      }
    }

    // rho(h) transposed and flattened, so Tr(U rho(h)) = <flat(U), R_h>.
    const std::uint64_t nh = torus ? 1 : points.size();
    std::vector<ff::Elem> R(nh * total);
    auto h_at = [&](std::uint64_t i) { return torus ? one : points.at(i); };
    for (std::uint64_t i = 0; i < nh; ++i) {
      const GroupPoint h = h_at(i);
      for (std::size_t j = 0; j < sys.reps.size(); ++j) {
        const auto m = groups::rep_matrix(big, sys.group, sys.reps[j], h);
        for (std::size_t a = 0; a < dims[j]; ++a)
          for (std::size_t b = 0; b < dims[j]; ++b)
            R[i * total + offsets[j] + a * dims[j] + b] = m[b][a];
      }
    }

    std::vector<std::vector<ff::Elem>> covectors;
    for (std::uint64_t gi = 0; gi < points.size(); ++gi) {
      const GroupPoint g = points.at(gi);
      covectors.clear();
      std::vector<FqMatrix> AgE(sys.reps.size()), rgE(sys.reps.size());
      for (std::size_t j = 0; j < sys.reps.size(); ++j) {
        FqMatrix rg = groups::rep_matrix(big, sys.group, sys.reps[j], g);
        for (auto& row : rg)
          for (std::size_t c = 0; c < row.size(); ++c)
            if (!proj[j][c]) row[c] = big.zero();
        rgE[j] = std::move(rg);
      }
      for (std::size_t k = 0; k < dirs.size(); ++k) {
        // g-direction: A d rho(xi) rho(g) E;  h-direction: A rho(g) E d rho(xi).
        for (int side = 0; side < 2; ++side) {
          std::vector<ff::Elem> cov(total, big.zero());
          bool nonzero = false;
          for (std::size_t j = 0; j < sys.reps.size(); ++j) {
            const FqMatrix M =
                side == 0 ? groups::matmul(big, Abig[j], groups::matmul(big, drho[k][j], rgE[j]))
                          : groups::matmul(big, groups::matmul(big, Abig[j], rgE[j]), drho[k][j]);
            for (std::size_t a = 0; a < dims[j]; ++a)
              for (std::size_t b = 0; b < dims[j]; ++b) {
                cov[offsets[j] + a * dims[j] + b] = M[a][b];
                nonzero = nonzero || M[a][b].v != 0;
              }
          }
          if (nonzero) covectors.push_back(std::move(cov));
        }
      }
      for (std::uint64_t hi = 0; hi < nh; ++hi) {
        const ff::Elem* r = &R[hi * total];
        bool critical = true;
        for (const auto& cov : covectors) {
          ff::Elem acc = big.zero();
          for (std::size_t t = 0; t < total; ++t)
            if (cov[t].v != 0 && r[t].v != 0) acc = big.add(acc, big.mul(cov[t], r[t]));
          if (acc.v != 0) {
            critical = false;
            break;
          }
        }
        if (!critical) continue;
        Witness w{static_cast<std::uint32_t>(s), g, h_at(hi)};
        for (auto e : derivatives_impl(sys, Abig, proj, big, w.g, w.h))
          if (e.v != 0) throw std::logic_error("witness search and dual-number derivatives disagree");
        NondegenStatus st;
        st.kind = StatusKind::Degenerate;
        st.face = face_vertices(delta_infty, face);
        st.witness = std::move(w);
        return st;
      }
    }
  }
  NondegenStatus st;
  st.kind = StatusKind::NoWitnessUpTo;
  st.extension_cap = extension_cap;
  return st;
}

NondegenStatus torus_nondegen_exact_univariate(const RepSystem& sys, const std::vector<FqMatrix>& A,
                                               const ff::Field& f) {
  if (!sys.group.is_torus() || sys.group.central_rank != 1)
    fail(ErrorKind::NotUnivariateTorus, "exact decision needs a one-variable torus, got " +
                                            sys.group.describe());
  check_coefficients(sys, A, f);
  // Coefficient of t^w in f, summed over reps sharing a weight.
  std::map<std::int64_t, ff::Elem> coeff;
  for (std::size_t j = 0; j < sys.reps.size(); ++j) {
    const auto w = sys.reps[j].central_weight.at(0);
    auto [it, fresh] = coeff.try_emplace(w, f.zero());
    it->second = f.add(it->second, A[j][0][0]);
  }
  const auto delta_infty = newton_polytopes(sys).delta_infty;
  for (const auto& face : faces_without_origin(delta_infty)) {
    const auto verts = face_vertices(delta_infty, face);
    const Rational lo = verts.front()[0], hi = verts.back()[0];
    int nonzero_terms = 0;
    for (const auto& [w, c] : coeff) {
      if (Rational(static_cast<long>(w)) < lo || Rational(static_cast<long>(w)) > hi) continue;
      if (f.mul(f.from_int(w), c).v != 0) ++nonzero_terms;
    }
    const bool degenerate = face.affine_dim == 0 ? nonzero_terms == 0
                                                 : nonzero_terms == 0 || nonzero_terms >= 2;
    if (degenerate) {
      NondegenStatus st;
      st.kind = StatusKind::ExactDegenerate;
      st.face = verts;
      return st;
    }
  }
  NondegenStatus st;
  st.kind = StatusKind::ExactNondegenerate;
  return st;
}

NondegenStatus nondegen_status(const RepSystem& sys, const std::vector<FqMatrix>& A,
                               const ff::Field& f, int extension_cap) {
  if (extension_cap < 1) fail(ErrorKind::Validation, "extension cap must be at least 1");
  if (sys.group.is_torus() && sys.group.central_rank == 1)
    return torus_nondegen_exact_univariate(sys, A, f);
  const int cap = effective_extension_cap(sys.group, f, extension_cap);
  const auto delta_infty = newton_polytopes(sys).delta_infty;
  for (const auto& face : faces_without_origin(delta_infty)) {
    auto st = critical_witness_search(sys, A, delta_infty, face, f, cap);
    if (st.kind == StatusKind::Degenerate) return st;
  }
  NondegenStatus st;
  st.kind = StatusKind::NoWitnessUpTo;
  st.extension_cap = cap;
  return st;
}

}  // namespace hyp::nondegen
