#pragma once

// Representation systems on groups of the form Gm^c x H, where H is trivial
// (a torus), SL2, GL2 or an abstract split root system. The weight lattice
// is Z^c x Lambda_H with the central coordinates first.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyp/ffield.hpp"
#include "hyp/linalg.hpp"
#include "hyp/polytope.hpp"
#include "hyp/rootsys.hpp"

namespace hyp {

enum class BaseGroup { Trivial, SL2, GL2, RootSystem };

struct GroupSpec {
  int central_rank = 0;
  BaseGroup base = BaseGroup::Trivial;
  rootsys::Family family = rootsys::Family::A;  // RootSystem only
  int family_rank = 0;                          // RootSystem only

  static GroupSpec torus(int n) { return {n, BaseGroup::Trivial, rootsys::Family::A, 0}; }
  static GroupSpec sl2() { return {0, BaseGroup::SL2, rootsys::Family::A, 0}; }
  static GroupSpec gl2() { return {0, BaseGroup::GL2, rootsys::Family::A, 0}; }
  static GroupSpec root_system(rootsys::Family f, int rank) {
    return {0, BaseGroup::RootSystem, f, rank};
  }

  bool is_torus() const { return base == BaseGroup::Trivial; }
  bool has_matrix_model() const { return base != BaseGroup::RootSystem; }
  int base_lattice_rank() const;
  int lattice_rank() const { return central_rank + base_lattice_rank(); }
  /// dim G
  int dimension() const;
  std::string describe() const;

  bool operator==(const GroupSpec&) const = default;
};

/// An irreducible representation: a central character times an irreducible
/// representation of H, fixed by its highest weight.
struct RepDescriptor {
  IntVec central_weight;  // length central_rank
  int sym = 0;            // SL2, GL2: Sym^sym of the standard representation
  int det_twist = 0;      // GL2: tensored with det^det_twist, >= 0
  IntVec highest_weight;  // RootSystem: dominant, fundamental-weight coordinates

  bool operator==(const RepDescriptor&) const = default;
};

/// Square matrix over the working field, row-major.
using FqMatrix = std::vector<std::vector<ff::Elem>>;

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t m = 1;

  bool operator==(const FieldSpec&) const = default;
};

struct RepSystem {
  GroupSpec group;
  std::vector<RepDescriptor> reps;
  /// One matrix per representation, when present.
  std::optional<std::vector<FqMatrix>> coefficients;
  std::optional<FieldSpec> field;
};

/// Checks the structural invariants; throws Validation / NotDominant /
/// InvalidRep with a message naming the offending representation.
void validate(const RepSystem& sys);

/// Dimension of the representation space.
int rep_dimension(const GroupSpec& g, const RepDescriptor& rep);

/// Highest weight in Z^c x Lambda_H.
IntVec highest_weight(const GroupSpec& g, const RepDescriptor& rep);

/// Weights of the basis vectors, in basis order. For SL2/GL2 this is the
/// monomial basis x^{m-i} y^i; for abstract root systems the Freudenthal
/// multiset expanded in sorted order.
std::vector<IntVec> basis_weights(const GroupSpec& g, const RepDescriptor& rep);

/// Weyl group, positive coroots and chamber of the group, written on the
/// full lattice Z^c x Lambda_H.
struct LatticeModel {
  int rank = 0;
  int dimension = 0;
  std::vector<IntMatrix> weyl_group;
  std::vector<IntVec> positive_coroots;  // (lambda, alpha) = coroot . lambda
  std::vector<Rational> rho_pairings;    // (rho, alpha)
  std::vector<Halfspace> chamber;
};

LatticeModel lattice_model(const GroupSpec& g);

/// The trivial representation of the group.
RepDescriptor trivial_rep(const GroupSpec& g);

/// Identity matrix of the given size over F_q.
FqMatrix identity_matrix(const ff::Field& f, int n);

}  // namespace hyp
