#pragma once

// Split root systems of types A1..A4, B2 and G2 in fundamental-weight
// coordinates. The simple root alpha_j has coordinates (C_1j, ..., C_rj)
// where C_ij = <alpha_j, alpha_i^vee>, so the dominant chamber is the
// positive orthant and the weight lattice is Z^rank.

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "hyp/linalg.hpp"
#include "hyp/polytope.hpp"

namespace hyp::rootsys {

enum class Family { A, B, G };

char to_char(Family f);
/// 'A', 'B', 'G' (case-insensitive); throws UnsupportedFamily otherwise.
Family family_from_char(char c);

struct Weight {
  IntVec coords;

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;
};

struct PositiveRoot {
  IntVec root;    // simple-root coordinates
  IntVec coroot;  // simple-coroot coordinates
};

class RootSystem {
 public:
  RootSystem(Family family, int rank, IntMatrix cartan, std::vector<PositiveRoot> roots,
             std::vector<IntMatrix> weyl_group);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
  /// Distinct rank x rank matrices acting on fundamental-weight coordinates.
  const std::vector<IntMatrix>& weyl_group() const { return weyl_group_; }
  std::size_t weyl_order() const { return weyl_group_.size(); }
  /// dim G = rank + 2|R+| for the simply-connected group.
  int group_dimension() const { return rank_ + 2 * static_cast<int>(positive_roots_.size()); }

  /// Fundamental-weight coordinates of the i-th simple root (column i of C).
  IntVec simple_root(int i) const;
  /// Fundamental-weight coordinates of a root given in simple-root coordinates.
  IntVec root_in_weight_coords(const IntVec& simple_coords) const;
  /// rho = sum of fundamental weights.
  Weight rho() const { return Weight{IntVec(static_cast<std::size_t>(rank_), 1)}; }

 private:
  Family family_;
  int rank_;
  IntMatrix cartan_;
  std::vector<PositiveRoot> positive_roots_;
  std::vector<IntMatrix> weyl_group_;
};

/// (A,1..4), (B,2), (G,2); anything else throws UnsupportedFamily.
RootSystem build_root_system(Family family, int rank);

/// Applies a Weyl matrix to a weight.
Weight apply(const IntMatrix& w, const Weight& lambda);
/// Image of a positive root under a Weyl matrix, in fundamental-weight coords.
IntVec apply_to_root(const RootSystem& rs, const IntMatrix& w, std::size_t root_index);

/// Sorted orbit of lambda under the simple reflections.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda);
/// The unique dominant weight in the orbit of lambda.
Weight dominant_representative(const RootSystem& rs, const Weight& lambda);

/// (lambda, alpha) = lambda(H_alpha) for the positive root with this index.
std::int64_t coroot_pairing(const RootSystem& rs, const Weight& lambda, std::size_t root_index);

/// prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha).
std::int64_t weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// Full weight multiset of the irreducible module of highest weight lambda,
/// by Freudenthal's recursion over dominant weights and Weyl transport.
std::map<Weight, std::int64_t> freudenthal_multiplicities(const RootSystem& rs,
                                                          const Weight& lambda);

/// { lambda : lambda_i >= 0 } written as -lambda_i <= 0.
std::vector<Halfspace> dominant_chamber(const RootSystem& rs);

}  // namespace hyp::rootsys
