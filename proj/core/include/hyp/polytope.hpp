#pragma once

// Exact rational convex geometry for ambient dimension <= 5.

#include <cstddef>
#include <vector>

#include "hyp/linalg.hpp"

namespace hyp {

/// normal . x <= offset
struct Halfspace {
  RatVec normal;
  Rational offset;

  bool operator==(const Halfspace&) const = default;
};

/// A nonempty face, given by the polytope vertices it contains.
struct Face {
  std::vector<std::size_t> vertex_indices;
  int affine_dim = 0;
  bool contains_origin = false;
  /// Facets of the parent polytope that contain the face.
  std::vector<std::size_t> facet_indices;
};

using Simplex = std::vector<std::size_t>;

enum class ConeApex { LexLeast, LexGreatest };

class RationalPolytope {
 public:
  RationalPolytope() = default;
  static RationalPolytope empty(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  /// -1 for the empty polytope.
  int affine_dim() const { return affine_dim_; }
  bool is_empty() const { return affine_dim_ < 0; }
  bool is_full_dimensional() const { return affine_dim_ == ambient_dim_; }

  /// Lexicographically sorted, irredundant.
  const std::vector<RatVec>& vertices() const { return vertices_; }
  /// Facets within the affine span, with coprime integer normals.
  const std::vector<Halfspace>& facets() const { return facets_; }
  /// Equations normal . x = offset cutting out the affine span.
  const std::vector<Halfspace>& equations() const { return equations_; }

  bool contains(const RatVec& x) const;
  /// True when x lies on the facet hyperplane.
  bool on_facet(std::size_t facet, const RatVec& x) const;

 private:
  friend RationalPolytope convex_hull(const std::vector<RatVec>& points);

  int ambient_dim_ = 0;
  int affine_dim_ = -1;
  std::vector<RatVec> vertices_;
  std::vector<Halfspace> facets_;
  std::vector<Halfspace> equations_;
};

/// Irredundant V- and H-representation of conv(points). Lower-dimensional
/// hulls keep facets relative to their affine span. Throws EmptyInput.
RationalPolytope convex_hull(const std::vector<RatVec>& points);

/// All nonempty faces, from vertices up to the polytope itself, obtained by
/// closing facet-incidence sets under intersection. Sorted by dimension.
std::vector<Face> enumerate_faces(const RationalPolytope& p);

/// P cut by the halfspaces. Returns the empty polytope rather than failing.
RationalPolytope intersect_halfspaces(const RationalPolytope& p,
                                      const std::vector<Halfspace>& halfspaces);

/// Pairs of vertex indices spanning an edge.
std::vector<std::pair<std::size_t, std::size_t>> edges(const RationalPolytope& p);

/// Cone from the chosen vertex over the recursively triangulated facets that
/// miss it. Simplices have affine_dim + 1 vertices. Throws DegeneratePolytope
/// when P is empty.
std::vector<Simplex> triangulate(const RationalPolytope& p, ConeApex apex = ConeApex::LexLeast);

/// Lebesgue volume; requires a full-dimensional polytope.
Rational volume(const RationalPolytope& p, ConeApex apex = ConeApex::LexLeast);

/// |det(v_1 - v_0, ..., v_d - v_0)| / d!
Rational simplex_volume(const std::vector<RatVec>& vertices);

}  // namespace hyp
