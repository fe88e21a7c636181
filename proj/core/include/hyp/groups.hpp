#pragma once

// Rational points of Gm^c x {1, SL2, GL2} over F_q and their representation
// matrices. Sym^m acts on the monomial basis x^{m-i} y^i (i = 0..m): for
// g = [[a, b], [c, d]], column i holds the coefficients of
// (a x + c y)^{m-i} (b x + d y)^i, scaled by det(g)^k for GL2 twists.
// Everything is templated on the coefficient ring so the same code yields
// exact values over F_q and first derivatives over F_q[eps]/(eps^2).

#include <array>
#include <cstdint>
#include <vector>

#include "hyp/error.hpp"
#include "hyp/ffield.hpp"
#include "hyp/system.hpp"

namespace hyp::groups {

inline constexpr std::uint64_t kMaxGroupPoints = 1'000'000'000;

template <class T>
struct Point {
  std::vector<T> torus;  // central coordinates, nonzero
  std::array<T, 4> mat{};  // a, b, c, d when the base is SL2 or GL2
  bool has_matrix = false;

  bool operator==(const Point&) const = default;
};

using GroupPoint = Point<ff::Elem>;

template <class Ring>
using Matrix = std::vector<std::vector<typename Ring::value_type>>;

/// (q-1)^c * |H(F_q)|; throws NotEnumerable for abstract root systems and
/// SizeGuard on overflow.
std::uint64_t group_order(const GroupSpec& g, std::uint64_t q);

/// Indexable enumeration of G(F_q): at(i) for i < size() lists every point
/// exactly once, so disjoint index ranges split the work.
class PointEnumerator {
 public:
  /// Throws NotEnumerable or SizeGuard (more than kMaxGroupPoints points).
  PointEnumerator(const GroupSpec& g, const ff::Field& f);

  std::uint64_t size() const { return size_; }
  GroupPoint at(std::uint64_t index) const;

 private:
  GroupSpec group_;
  const ff::Field* field_;
  std::uint64_t base_size_ = 1;
  std::uint64_t size_ = 0;
};

GroupPoint identity_point(const GroupSpec& g, const ff::Field& f);
GroupPoint multiply(const ff::Field& f, const GroupPoint& g, const GroupPoint& h);
GroupPoint inverse(const ff::Field& f, const GroupPoint& g);

/// A Lie algebra direction: t_i -> t_i (1 + eps) when central_index >= 0,
/// otherwise g -> (1 + eps xi) g with xi = [[xi0, xi1], [xi2, xi3]].
struct Direction {
  int central_index = -1;
  std::array<std::int64_t, 4> xi{};
};

/// c central directions followed by {E, F, H} (SL2) or the matrix units (GL2).
std::vector<Direction> lie_basis_directions(const GroupSpec& g);

/// The first-order perturbation of g along the direction.
Point<ff::Dual> perturb(const ff::DualRing& ring, const GroupPoint& g, const Direction& dir);

/// Constant lift of an F_q point into a ring over F_q.
inline Point<ff::Dual> lift(const ff::DualRing& ring, const GroupPoint& g) {
  Point<ff::Dual> out;
  for (auto t : g.torus) out.torus.push_back(ring.lift(t));
  for (std::size_t i = 0; i < 4; ++i) out.mat[i] = ring.lift(g.mat[i]);
  out.has_matrix = g.has_matrix;
  return out;
}

template <class Ring>
Matrix<Ring> rep_matrix(const Ring& ring, const GroupSpec& g, const RepDescriptor& rep,
                        const Point<typename Ring::value_type>& x) {
  using T = typename Ring::value_type;
  if (!g.has_matrix_model())
    fail(ErrorKind::NotEnumerable, "abstract root systems have no matrix model");
  if (rep.central_weight.size() != x.torus.size())
    fail(ErrorKind::InvalidRep, "central weight length does not match the point");

  T scalar = ring.one();
  for (std::size_t i = 0; i < x.torus.size(); ++i)
    if (rep.central_weight[i] != 0) scalar = ring.mul(scalar, ring.pow(x.torus[i], rep.central_weight[i]));

  if (g.base == BaseGroup::Trivial) return Matrix<Ring>{{scalar}};
  if (!x.has_matrix) fail(ErrorKind::InvalidRep, "point carries no matrix component");
  if (rep.sym < 0) fail(ErrorKind::InvalidRep, "negative Sym degree");

  const int m = rep.sym;
  const auto& [a, b, c, d] = x.mat;
  if (g.base == BaseGroup::GL2) {
    if (rep.det_twist < 0) fail(ErrorKind::InvalidRep, "negative det twist");
    const T det = ring.sub(ring.mul(a, d), ring.mul(b, c));
    scalar = ring.mul(scalar, ring.pow(det, rep.det_twist));
  } else if (rep.det_twist != 0) {
    fail(ErrorKind::InvalidRep, "det twist on SL2");
  }

  // Powers of the linear forms a + c y and b + d y as polynomials in y.
  using Poly = std::vector<T>;
  auto times = [&](const Poly& p, const T& c0, const T& c1) {
    Poly out(p.size() + 1, ring.zero());
    for (std::size_t r = 0; r < p.size(); ++r) {
      out[r] = ring.add(out[r], ring.mul(p[r], c0));
      out[r + 1] = ring.add(out[r + 1], ring.mul(p[r], c1));
    }
    return out;
  };
  std::vector<Poly> left{Poly{ring.one()}}, right{Poly{ring.one()}};
  for (int e = 1; e <= m; ++e) {
    left.push_back(times(left.back(), a, c));
    right.push_back(times(right.back(), b, d));
  }

  Matrix<Ring> out(static_cast<std::size_t>(m + 1),
                   std::vector<T>(static_cast<std::size_t>(m + 1), ring.zero()));
  for (int i = 0; i <= m; ++i) {
    const Poly& l = left[static_cast<std::size_t>(m - i)];
    const Poly& r = right[static_cast<std::size_t>(i)];
    for (std::size_t u = 0; u < l.size(); ++u)
      for (std::size_t v = 0; v < r.size(); ++v)
        out[u + v][static_cast<std::size_t>(i)] =
            ring.add(out[u + v][static_cast<std::size_t>(i)], ring.mul(l[u], r[v]));
  }
  for (auto& row : out)
    for (auto& e : row) e = ring.mul(e, scalar);
  return out;
}

/// Convenience overload over the field itself.
inline FqMatrix rep_matrix(const ff::Field& f, const GroupSpec& g, const RepDescriptor& rep,
                           const GroupPoint& x) {
  return rep_matrix<ff::Field>(f, g, rep, x);
}

FqMatrix matmul(const ff::Field& f, const FqMatrix& a, const FqMatrix& b);
ff::Elem trace(const ff::Field& f, const FqMatrix& a);
ff::Elem determinant(const ff::Field& f, const FqMatrix& a);

}  // namespace hyp::groups
