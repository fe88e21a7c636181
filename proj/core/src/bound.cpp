#include "hyp/bound.hpp"

#include <algorithm>
#include <set>

#include "hyp/error.hpp"

namespace hyp {

namespace {

IntVec apply(const IntMatrix& w, const IntVec& v) {
  IntVec out(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += w[i][j] * v[j];
  return out;
}

std::vector<RatVec> as_points(const std::set<IntVec>& pts) {
  std::vector<RatVec> out;
  for (const auto& p : pts) out.push_back(to_rational(p));
  return out;
}

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace

std::vector<IntVec> weyl_orbit(const LatticeModel& lm, const IntVec& lambda) {
  std::set<IntVec> orbit;
  for (const auto& w : lm.weyl_group) orbit.insert(apply(w, lambda));
  return {orbit.begin(), orbit.end()};
}

NewtonPolytopes newton_polytopes(const RepSystem& sys) {
  validate(sys);
  const auto lm = lattice_model(sys.group);
  std::set<IntVec> pts;
  for (const auto& rep : sys.reps)
    for (auto& w : weyl_orbit(lm, highest_weight(sys.group, rep))) pts.insert(std::move(w));
  NewtonPolytopes out;
  out.delta = convex_hull(as_points(pts));
  pts.insert(IntVec(static_cast<std::size_t>(lm.rank), 0));
  out.delta_infty = convex_hull(as_points(pts));
  return out;
}

MultiPoly bound_integrand(const LatticeModel& lm) {
  MultiPoly integrand = MultiPoly::constant(lm.rank, 1);
  for (std::size_t a = 0; a < lm.positive_coroots.size(); ++a) {
    RatVec coeffs = to_rational(lm.positive_coroots[a]);
    const Rational inv = 1 / lm.rho_pairings[a];
    for (auto& x : coeffs) x *= inv;
    const MultiPoly form = MultiPoly::linear(coeffs);
    integrand = integrand * form * form;
  }
  return integrand;
}

BoundResult rank_bound(const RepSystem& sys) {
  const auto lm = lattice_model(sys.group);
  BoundResult out;
  out.d = lm.dimension;
  out.delta_infty = newton_polytopes(sys).delta_infty;
  out.domain = lm.chamber.empty() ? out.delta_infty
                                  : intersect_halfspaces(out.delta_infty, lm.chamber);
  const auto integral = integrate_polynomial(out.domain, bound_integrand(lm));
  out.integral = integral.value;
  out.lowdim_flag = integral.lowdim;
  out.bound = integral.value * Rational(factorial(static_cast<unsigned long>(out.d)));
  return out;
}

RepSystem homogenize(const RepSystem& sys) {
  validate(sys);
  RepSystem out;
  out.group = sys.group;
  out.group.central_rank += 1;
  out.field = sys.field;

  RepDescriptor unit = trivial_rep(out.group);
  unit.central_weight[0] = 1;
  out.reps.push_back(std::move(unit));
  for (auto rep : sys.reps) {
    rep.central_weight.insert(rep.central_weight.begin(), 1);
    out.reps.push_back(std::move(rep));
  }
  if (sys.coefficients) {
    std::vector<FqMatrix> coeffs;
    coeffs.push_back(FqMatrix{{ff::Elem{1}}});
    coeffs.insert(coeffs.end(), sys.coefficients->begin(), sys.coefficients->end());
    out.coefficients = std::move(coeffs);
  }
  return out;
}

bool check_homogeneity(const RepSystem& sys) {
  validate(sys);
  // Cocharacters of the connected center: Z^c, plus Z (1,1) for GL2, which
  // pairs with every weight of Sym^m (x) det^k as m + 2k.
  const bool gl2 = sys.group.base == BaseGroup::GL2;
  const std::size_t cols = static_cast<std::size_t>(sys.group.central_rank) + (gl2 ? 1 : 0);
  if (cols == 0) return false;
  IntMatrix rows;
  for (const auto& rep : sys.reps) {
    IntVec row = rep.central_weight;
    if (gl2) row.push_back(rep.sym + 2 * rep.det_twist);
    rows.push_back(std::move(row));
  }
  return has_integer_solution(rows, IntVec(rows.size(), 1));
}

bool quasi_finiteness_check(const RepSystem& sys) {
  validate(sys);
  RatMatrix weights;
  std::set<IntVec> distinct;
  for (const auto& rep : sys.reps)
    for (auto& w : basis_weights(sys.group, rep)) distinct.insert(std::move(w));
  for (const auto& w : distinct) weights.push_back(to_rational(w));
  return rank(weights) == sys.group.lattice_rank();
}

}  // namespace hyp
