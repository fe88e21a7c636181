#include "hyp/linalg.hpp"

#include <algorithm>
#include <utility>

#include "hyp/error.hpp"

namespace hyp {

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    Rational r;
    if (slash == std::string::npos) {
      r = Rational(mpz_class(s, 10));
    } else {
      mpz_class num(s.substr(0, slash), 10);
      mpz_class den(s.substr(slash + 1), 10);
      if (den == 0) fail(ErrorKind::Validation, "zero denominator in '" + s + "'");
      r = Rational(num, den);
    }
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::Validation, "not a rational: '" + s + "'");
  }
}

RatVec to_rational(std::span<const std::int64_t> v) {
  RatVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec sub(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "sub: length mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec add(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "add: length mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec scale(std::span<const Rational> a, const Rational& s) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(const RatMatrix& rows) {
  if (rows.empty()) return 0;
  RatMatrix m = rows;
  return static_cast<int>(rref(m, m.front().size()).size());
}

int affine_dimension(const RatMatrix& points) {
  if (points.empty()) return -1;
  RatMatrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return rank(diffs);
}

RatMatrix nullspace(const RatMatrix& rows, std::size_t ncols) {
  RatMatrix m = rows;
  auto pivots = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  RatMatrix aug(n, RatVec(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug, n);
  if (pivots.size() != n) return std::nullopt;
  RatMatrix inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

RatVec mat_vec(const RatMatrix& m, std::span<const Rational> v) {
  RatVec out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(dot(row, v));
  return out;
}

void normalize_hyperplane(RatVec& normal, Rational& offset) {
  mpz_class lcm = 1;
  for (const auto& x : normal) lcm = ::lcm(lcm, x.get_den());
  lcm = ::lcm(lcm, offset.get_den());
  mpz_class g = 0;
  for (const auto& x : normal) g = ::gcd(g, Rational(x * lcm).get_num());
  if (g == 0) return;
  Rational factor(lcm, g);
  factor.canonicalize();
  for (auto& x : normal) x *= factor;
  offset *= factor;
}

bool has_integer_solution(const IntMatrix& rows, const IntVec& rhs) {
  const std::size_t nrows = rows.size();
  if (rhs.size() != nrows) fail(ErrorKind::DimensionMismatch, "integer system: rhs length");
  const std::size_t ncols = nrows == 0 ? 0 : rows.front().size();
  std::vector<std::vector<mpz_class>> h(nrows, std::vector<mpz_class>(ncols));
  for (std::size_t i = 0; i < nrows; ++i) {
    if (rows[i].size() != ncols) fail(ErrorKind::DimensionMismatch, "integer system: ragged rows");
    for (std::size_t j = 0; j < ncols; ++j) h[i][j] = static_cast<long>(rows[i][j]);
  }
  auto col_axpy = [&](std::size_t dst, std::size_t src, const mpz_class& f) {
    for (std::size_t r = 0; r < nrows; ++r) h[r][dst] -= f * h[r][src];
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < nrows; ++r) std::swap(h[r][a], h[r][b]);
  };

  // Column echelon form by unimodular column operations.
  std::vector<long> pivot_col(nrows, -1);
  std::size_t k = 0;
  for (std::size_t i = 0; i < nrows && k < ncols; ++i) {
    while (true) {
      std::size_t best = ncols;
      for (std::size_t j = k; j < ncols; ++j) {
        if (h[i][j] == 0) continue;
        if (best == ncols || abs(h[i][j]) < abs(h[i][best])) best = j;
      }
      if (best == ncols) break;
      col_swap(k, best);
      bool done = true;
      for (std::size_t j = k + 1; j < ncols; ++j) {
        if (h[i][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), h[i][j].get_mpz_t(), h[i][k].get_mpz_t());
        col_axpy(j, k, q);
        if (h[i][j] != 0) done = false;
      }
      if (done) {
        pivot_col[i] = static_cast<long>(k);
        ++k;
        break;
      }
    }
  }

  std::vector<mpz_class> nu(ncols, 0);
  for (std::size_t i = 0; i < nrows; ++i) {
    mpz_class acc = 0;
    const std::size_t limit = pivot_col[i] >= 0 ? static_cast<std::size_t>(pivot_col[i]) : k;
    for (std::size_t j = 0; j < limit; ++j) acc += h[i][j] * nu[j];
    mpz_class residual = mpz_class(static_cast<long>(rhs[i])) - acc;
    if (pivot_col[i] >= 0) {
      const auto& piv = h[i][static_cast<std::size_t>(pivot_col[i])];
      if (!mpz_divisible_p(residual.get_mpz_t(), piv.get_mpz_t())) return false;
      nu[static_cast<std::size_t>(pivot_col[i])] = residual / piv;
    } else if (residual != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace hyp
