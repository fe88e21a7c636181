#include "hyp/integrator.hpp"

#include <numeric>
#include <string>

#include "hyp/error.hpp"

namespace hyp {

MultiPoly MultiPoly::constant(int arity, const Rational& c) {
  MultiPoly p(arity);
  p.add_term(Exponents(static_cast<std::size_t>(arity), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
  if (index < 0 || index >= arity) fail(ErrorKind::IndexOutOfRange, "variable index");
  Exponents e(static_cast<std::size_t>(arity), 0);
  e[index] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::linear(const RatVec& coeffs, const Rational& c0) {
  const int n = static_cast<int>(coeffs.size());
  MultiPoly p = constant(n, c0);
  for (int i = 0; i < n; ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

MultiPoly MultiPoly::monomial(const Exponents& exponents, const Rational& c) {
  MultiPoly p(static_cast<int>(exponents.size()));
  p.add_term(exponents, c);
  return p;
}

int MultiPoly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void MultiPoly::add_term(const Exponents& exponents, const Rational& c) {
  if (exponents.size() != static_cast<std::size_t>(arity_))
    fail(ErrorKind::ArityMismatch, "exponent vector length does not match arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  if (rhs.arity_ != arity_) fail(ErrorKind::ArityMismatch, "polynomial arity mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  if (rhs.arity_ != arity_) fail(ErrorKind::ArityMismatch, "polynomial arity mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity_ != b.arity_) fail(ErrorKind::ArityMismatch, "polynomial arity mismatch");
  if (!a.is_zero() && !b.is_zero() && a.degree() + b.degree() > MultiPoly::kMaxDegree)
    fail(ErrorKind::DegreeCap, "polynomial degree exceeds " + std::to_string(MultiPoly::kMaxDegree));
  MultiPoly out(a.arity_);
  Exponents e(static_cast<std::size_t>(a.arity_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly result = constant(arity_, 1);
  for (int i = 0; i < e; ++i) result = result * *this;
  return result;
}

Rational MultiPoly::evaluate(const RatVec& x) const {
  if (x.size() != static_cast<std::size_t>(arity_))
    fail(ErrorKind::ArityMismatch, "evaluation point length does not match arity");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= x[i];
    total += term;
  }
  return total;
}

AffineMap AffineMap::from_simplex(const std::vector<RatVec>& vertices) {
  if (vertices.empty()) fail(ErrorKind::EmptyInput, "simplex without vertices");
  AffineMap m;
  m.offset = vertices.front();
  for (std::size_t i = 1; i < vertices.size(); ++i) m.columns.push_back(sub(vertices[i], vertices[0]));
  return m;
}

MultiPoly poly_compose_affine(const MultiPoly& p, const AffineMap& map) {
  if (map.offset.size() != static_cast<std::size_t>(p.arity()))
    fail(ErrorKind::DimensionMismatch, "affine map target dimension does not match arity");
  for (const auto& col : map.columns)
    if (col.size() != map.offset.size())
      fail(ErrorKind::DimensionMismatch, "affine map columns of inconsistent length");
  const int n = static_cast<int>(map.columns.size());

  // x_k as an affine form in u, with cached powers.
  std::vector<std::vector<MultiPoly>> powers(static_cast<std::size_t>(p.arity()));
  for (int k = 0; k < p.arity(); ++k) {
    RatVec coeffs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) coeffs[i] = map.columns[i][k];
    powers[k].push_back(MultiPoly::constant(n, 1));
    powers[k].push_back(MultiPoly::linear(coeffs, map.offset[k]));
  }
  auto power = [&](int k, int e) -> const MultiPoly& {
    auto& cache = powers[k];
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };

  MultiPoly out(n);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(n, c);
    for (int k = 0; k < p.arity(); ++k)
      if (e[k] > 0) term = term * power(k, e[k]);
    out += term;
  }
  return out;
}

namespace {

mpz_class factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

// Integral over the standard simplex {u >= 0, sum u <= 1}.
Rational standard_simplex_integral(const MultiPoly& p) {
  const auto d = static_cast<unsigned long>(p.arity());
  Rational total = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_class num = 1;
    unsigned long deg = 0;
    for (int x : e) {
      num *= factorial(static_cast<unsigned long>(x));
      deg += static_cast<unsigned long>(x);
    }
    Rational w(num, factorial(d + deg));
    w.canonicalize();
    total += c * w;
  }
  return total;
}

Rational abs_jacobian(const std::vector<RatVec>& simplex) {
  const std::size_t d = simplex.front().size();
  if (simplex.size() != d + 1)
    fail(ErrorKind::DegenerateSimplex, "simplex in dimension " + std::to_string(d) + " needs " +
                                           std::to_string(d + 1) + " vertices");
  RatMatrix m;
  for (std::size_t i = 1; i <= d; ++i) m.push_back(sub(simplex[i], simplex[0]));
  Rational det = determinant(m);
  if (det == 0) fail(ErrorKind::DegenerateSimplex, "simplex has zero volume");
  return det < 0 ? Rational(-det) : det;
}

}  // namespace

Rational integrate_simplex(const MultiPoly& p, const std::vector<RatVec>& simplex) {
  if (simplex.empty()) fail(ErrorKind::DegenerateSimplex, "empty simplex");
  if (simplex.front().size() != static_cast<std::size_t>(p.arity()))
    fail(ErrorKind::ArityMismatch, "simplex dimension does not match polynomial arity");
  const Rational jac = abs_jacobian(simplex);
  return jac * standard_simplex_integral(poly_compose_affine(p, AffineMap::from_simplex(simplex)));
}

Rational integrate_monomial_simplex(const Exponents& a, const std::vector<RatVec>& simplex) {
  return integrate_simplex(MultiPoly::monomial(a), simplex);
}

IntegralResult integrate_polynomial(const RationalPolytope& p, const MultiPoly& poly,
                                    ConeApex apex) {
  if (poly.arity() != p.ambient_dim())
    fail(ErrorKind::ArityMismatch, "polynomial arity does not match polytope dimension");
  if (!p.is_full_dimensional()) return {Rational(0), true};
  Rational total = 0;
  for (const auto& s : triangulate(p, apex)) {
    std::vector<RatVec> verts;
    for (auto i : s) verts.push_back(p.vertices()[i]);
    total += integrate_simplex(poly, verts);
  }
  return {total, false};
}

}  // namespace hyp
