#pragma once

// Nondegeneracy of a coefficient tuple A: for every face tau of Delta_inf not
// containing the origin, f_tau(g, h) = sum_j Tr(A_j rho_j(g) e(tau)_j rho_j(h))
// must have no critical point on G x G. Over finite fields this is a
// semidecision (a witness certifies degeneracy); the one-variable torus case
// is decided exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyp/ffield.hpp"
#include "hyp/groups.hpp"
#include "hyp/polytope.hpp"
#include "hyp/system.hpp"

namespace hyp::nondegen {

inline constexpr std::uint64_t kMaxPairEvaluations = 100'000'000;

/// Faces of the polytope with contains_origin = false, in enumerate_faces order.
std::vector<Face> faces_without_origin(const RationalPolytope& delta_infty);

/// Orbit label per face: faces exchanged by some Weyl group element share a
/// label; labels are 0, 1, ... in order of first appearance.
std::vector<std::size_t> weyl_orbit_classes(const RationalPolytope& delta_infty,
                                            const std::vector<Face>& faces,
                                            const LatticeModel& lm);

/// Vertex coordinates of a face.
std::vector<RatVec> face_vertices(const RationalPolytope& p, const Face& face);

/// Diagonal of e(tau)_j: whether each basis weight of rep j lies on the face.
std::vector<bool> face_projector(const RepSystem& sys, std::size_t rep,
                                 const RationalPolytope& delta_infty, const Face& face);

enum class StatusKind { Degenerate, NoWitnessUpTo, ExactNondegenerate, ExactDegenerate };

std::string to_string(StatusKind k);

/// A critical point over F_{q^extension}, whose elements are encoded in the
/// field Field(p, m * extension).
struct Witness {
  std::uint32_t extension = 1;
  groups::GroupPoint g;
  groups::GroupPoint h;
};

struct NondegenStatus {
  StatusKind kind = StatusKind::NoWitnessUpTo;
  int extension_cap = 0;                // NoWitnessUpTo
  std::vector<RatVec> face;             // degenerate face, when known
  std::optional<Witness> witness;       // Degenerate

  bool assertable() const {
    return kind == StatusKind::NoWitnessUpTo || kind == StatusKind::ExactNondegenerate;
  }
};

/// Largest s <= cap (at least 1; cap < 1 throws Validation) with |G(F_{q^s})|^2 <= kMaxPairEvaluations,
/// or |G(F_{q^s})| for tori, where the search runs over one factor only.
int effective_extension_cap(const GroupSpec& g, const ff::Field& f, int cap);

/// All 2 dim G directional derivatives of f_tau at (g, h), computed with dual
/// numbers: g-directions first, then h-directions. `big` is the field the
/// points live in; A is given over `base` and embedded.
std::vector<ff::Elem> critical_derivatives(const RepSystem& sys, const std::vector<FqMatrix>& A,
                                           const RationalPolytope& delta_infty, const Face& face,
                                           const ff::Field& base, const ff::Field& big,
                                           const groups::GroupPoint& g,
                                           const groups::GroupPoint& h);

/// Recomputes the derivatives at the witness and checks that all vanish.
bool verify_witness(const RepSystem& sys, const std::vector<FqMatrix>& A,
                    const RationalPolytope& delta_infty, const Face& face,
                    const ff::Field& base, const Witness& w);

/// Searches G(F_{q^s})^2 for s = 1..extension_cap for a critical point of
/// f_tau. Tori search one factor (f_tau depends on gh only). Throws
/// SizeGuard when the cap exceeds effective_extension_cap.
NondegenStatus critical_witness_search(const RepSystem& sys, const std::vector<FqMatrix>& A,
                                       const RationalPolytope& delta_infty, const Face& face,
                                       const ff::Field& f, int extension_cap);

/// Exact decision for Gm^1: a vertex face {w} is degenerate iff w * sum a_j
/// vanishes in F_q; a segment face iff t f_tau' vanishes identically or has a
/// root on Gm over the algebraic closure. Throws NotUnivariateTorus.
NondegenStatus torus_nondegen_exact_univariate(const RepSystem& sys, const std::vector<FqMatrix>& A,
                                               const ff::Field& f);

/// Status of A over all faces without the origin: the exact path for
/// one-variable tori, else the witness search with the effective cap.
NondegenStatus nondegen_status(const RepSystem& sys, const std::vector<FqMatrix>& A,
                               const ff::Field& f, int extension_cap);

}  // namespace hyp::nondegen
