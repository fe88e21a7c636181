#pragma once

// Exact rational linear algebra shared by the geometry, integration and
// bound modules. Everything here is small-dimensional (<= 6) and exact.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyp {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;
using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;

/// Always "num/den", with the sign on the numerator ("2/1", "-1/3").
std::string to_string(const Rational& value);
/// Accepts "a/b", "a" or a decimal integer; throws hyp::Error(Validation).
Rational parse_rational(std::string_view text);

RatVec to_rational(std::span<const std::int64_t> v);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RatVec sub(std::span<const Rational> a, std::span<const Rational> b);
RatVec add(std::span<const Rational> a, std::span<const Rational> b);
RatVec scale(std::span<const Rational> a, const Rational& s);
bool is_zero(std::span<const Rational> v);

/// Rank of the row set.
int rank(const RatMatrix& rows);
/// Affine rank (dimension of the affine span) of a point set; -1 when empty.
int affine_dimension(const RatMatrix& points);
/// Basis of { x : row . x = 0 for every row } in Q^ncols.
RatMatrix nullspace(const RatMatrix& rows, std::size_t ncols);
Rational determinant(RatMatrix m);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);
RatVec mat_vec(const RatMatrix& m, std::span<const Rational> v);

/// Scales a hyperplane (normal . x <= offset) so the normal has coprime
/// integer entries. The direction is preserved.
void normalize_hyperplane(RatVec& normal, Rational& offset);

/// True when the integer system rows * mu = rhs has an integer solution mu.
bool has_integer_solution(const IntMatrix& rows, const IntVec& rhs);

}  // namespace hyp
