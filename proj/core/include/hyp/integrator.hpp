#pragma once

// Exact integration of rational polynomials over simplices and polytopes.

#include <map>
#include <vector>

#include "hyp/linalg.hpp"
#include "hyp/polytope.hpp"

namespace hyp {

using Exponents = std::vector<int>;

/// Sparse polynomial with exact rational coefficients. No zero coefficients
/// are stored; every exponent vector has length arity().
class MultiPoly {
 public:
  static constexpr int kMaxDegree = 16;

  explicit MultiPoly(int arity = 0) : arity_(arity) {}

  static MultiPoly constant(int arity, const Rational& c);
  static MultiPoly variable(int arity, int index);
  /// c_0 + sum_i coeffs[i] x_i
  static MultiPoly linear(const RatVec& coeffs, const Rational& c0 = 0);
  static MultiPoly monomial(const Exponents& exponents, const Rational& c = 1);

  int arity() const { return arity_; }
  int degree() const;
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& exponents, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  /// Throws DegreeCap when the product exceeds kMaxDegree.
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  bool operator==(const MultiPoly&) const = default;

  MultiPoly pow(int e) const;
  Rational evaluate(const RatVec& x) const;

 private:
  int arity_;
  std::map<Exponents, Rational> terms_;
};

/// u -> offset + sum_i u_i columns[i]
struct AffineMap {
  RatVec offset;
  std::vector<RatVec> columns;

  /// The map u -> v_0 + sum_i u_i (v_{i+1} - v_0) pulling the standard
  /// simplex back onto the simplex with these vertices.
  static AffineMap from_simplex(const std::vector<RatVec>& vertices);
};

/// p o map, a polynomial in map.columns.size() variables.
MultiPoly poly_compose_affine(const MultiPoly& p, const AffineMap& map);

/// Integral of prod x^a over the simplex via pullback and the Dirichlet
/// identity  int_{Delta_d} prod u^b = prod b_i! / (d + |b|)!.
Rational integrate_monomial_simplex(const Exponents& a, const std::vector<RatVec>& simplex);

/// Integral of p over the simplex.
Rational integrate_simplex(const MultiPoly& p, const std::vector<RatVec>& simplex);

struct IntegralResult {
  Rational value;
  /// Set when P is empty or not full-dimensional; value is then 0.
  bool lowdim = false;
};

IntegralResult integrate_polynomial(const RationalPolytope& p, const MultiPoly& poly,
                                    ConeApex apex = ConeApex::LexLeast);

}  // namespace hyp
