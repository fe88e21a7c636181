#pragma once

// Newton polytopes of a representation system and the rank bound
//   d! * int_{Delta_inf cap C} prod_{alpha > 0} (lambda, alpha)^2 / (rho, alpha)^2 dlambda
// computed exactly, together with the homogenization transform.

#include <vector>

#include "hyp/integrator.hpp"
#include "hyp/polytope.hpp"
#include "hyp/system.hpp"

namespace hyp {

struct NewtonPolytopes {
  RationalPolytope delta;        // conv W(lambda_1, ..., lambda_N)
  RationalPolytope delta_infty;  // conv W(0, lambda_1, ..., lambda_N)
};

/// Sorted W-orbit of a lattice point.
std::vector<IntVec> weyl_orbit(const LatticeModel& lm, const IntVec& lambda);

NewtonPolytopes newton_polytopes(const RepSystem& sys);

/// prod_{alpha > 0} (lambda, alpha)^2 / (rho, alpha)^2; the constant 1 when
/// there are no roots.
MultiPoly bound_integrand(const LatticeModel& lm);

struct BoundResult {
  int d = 0;
  RationalPolytope delta_infty;
  /// Delta_inf cap C, the integration domain.
  RationalPolytope domain;
  Rational integral;
  Rational bound;
  /// Domain not full-dimensional: the integral is 0 and the bound vacuous.
  bool lowdim_flag = false;
};

BoundResult rank_bound(const RepSystem& sys);

/// Adjoins a Gm factor (prepended coordinate): every weight lambda_j becomes
/// (1, lambda_j) and a new first representation of weight (1, 0) is added.
/// Coefficients, when present, gain a leading 1x1 identity block.
RepSystem homogenize(const RepSystem& sys);

/// True iff some cocharacter of the connected center acts by the identity
/// character in every representation.
bool check_homogeneity(const RepSystem& sys);

/// Sufficient criterion for quasi-finiteness of g -> (rho_j(g))_j: the
/// weights of all representations span Lambda (x) Q.
bool quasi_finiteness_check(const RepSystem& sys);

}  // namespace hyp
