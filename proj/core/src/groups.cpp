#include "hyp/groups.hpp"

#include <string>
#include <utility>

namespace hyp::groups {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r) || r > kMaxGroupPoints * 1000ULL)
    fail(ErrorKind::SizeGuard, "group order overflows");
  return r;
}

std::uint64_t base_order(BaseGroup b, std::uint64_t q) {
  switch (b) {
    case BaseGroup::Trivial: return 1;
    case BaseGroup::SL2: return checked_mul(checked_mul(q, q) - 1, q);
    case BaseGroup::GL2: return checked_mul(checked_mul(q, q) - 1, checked_mul(q, q) - q);
    case BaseGroup::RootSystem: break;
  }
  fail(ErrorKind::NotEnumerable, "abstract root systems cannot be enumerated");
}

}  // namespace

std::uint64_t group_order(const GroupSpec& g, std::uint64_t q) {
  std::uint64_t n = base_order(g.base, q);
  for (int i = 0; i < g.central_rank; ++i) n = checked_mul(n, q - 1);
  return n;
}

PointEnumerator::PointEnumerator(const GroupSpec& g, const ff::Field& f) : group_(g), field_(&f) {
  base_size_ = base_order(g.base, f.q());
  size_ = group_order(g, f.q());
  if (size_ > kMaxGroupPoints)
    fail(ErrorKind::SizeGuard, "|G(F_q)| = " + std::to_string(size_) + " exceeds the enumeration guard");
}

GroupPoint PointEnumerator::at(std::uint64_t index) const {
  if (index >= size_) fail(ErrorKind::IndexOutOfRange, "group point index out of range");
  const ff::Field& f = *field_;
  const std::uint64_t q = f.q();
  GroupPoint x;
  std::uint64_t b = index % base_size_;
  std::uint64_t rest = index / base_size_;
  x.torus.resize(static_cast<std::size_t>(group_.central_rank));
  for (auto& t : x.torus) {
    t = f.element(1 + rest % (q - 1));
    rest /= q - 1;
  }
  if (group_.base == BaseGroup::SL2) {
    x.has_matrix = true;
    // a != 0: (a, b, c) free with d = (1 + bc)/a; a = 0: b != 0, c = -1/b, d free.
    const std::uint64_t first = (q - 1) * q * q;
    if (b < first) {
      ff::Elem a = f.element(1 + b % (q - 1));
      b /= q - 1;
      ff::Elem bb = f.element(b % q);
      ff::Elem c = f.element(b / q);
      x.mat = {a, bb, c, f.div(f.add(f.one(), f.mul(bb, c)), a)};
    } else {
      b -= first;
      ff::Elem bb = f.element(1 + b % (q - 1));
      ff::Elem d = f.element(b / (q - 1));
      x.mat = {f.zero(), bb, f.neg(f.inv(bb)), d};
    }
  } else if (group_.base == BaseGroup::GL2) {
    x.has_matrix = true;
    // Nonzero first row, then second row = s * row1 + u * w with u != 0.
    const std::uint64_t r1 = 1 + b % (q * q - 1);
    b /= q * q - 1;
    ff::Elem a = f.element(r1 % q), bb = f.element(r1 / q);
    ff::Elem s = f.element(b % q);
    ff::Elem u = f.element(1 + b / q);
    ff::Elem c = f.mul(s, a), d = f.mul(s, bb);
    if (a != f.zero()) d = f.add(d, u);
    else c = f.add(c, u);
    x.mat = {a, bb, c, d};
  }
  return x;
}

GroupPoint identity_point(const GroupSpec& g, const ff::Field& f) {
  GroupPoint x;
  x.torus.assign(static_cast<std::size_t>(g.central_rank), f.one());
  if (g.base == BaseGroup::SL2 || g.base == BaseGroup::GL2) {
    x.has_matrix = true;
    x.mat = {f.one(), f.zero(), f.zero(), f.one()};
  }
  return x;
}

GroupPoint multiply(const ff::Field& f, const GroupPoint& g, const GroupPoint& h) {
  if (g.torus.size() != h.torus.size() || g.has_matrix != h.has_matrix)
    fail(ErrorKind::DimensionMismatch, "points of different groups");
  GroupPoint x;
  for (std::size_t i = 0; i < g.torus.size(); ++i) x.torus.push_back(f.mul(g.torus[i], h.torus[i]));
  x.has_matrix = g.has_matrix;
  if (g.has_matrix) {
    const auto& [a, b, c, d] = g.mat;
    const auto& [e, ff_, gg, hh] = h.mat;
    x.mat = {f.add(f.mul(a, e), f.mul(b, gg)), f.add(f.mul(a, ff_), f.mul(b, hh)),
             f.add(f.mul(c, e), f.mul(d, gg)), f.add(f.mul(c, ff_), f.mul(d, hh))};
  }
  return x;
}

GroupPoint inverse(const ff::Field& f, const GroupPoint& g) {
  GroupPoint x;
  for (auto t : g.torus) x.torus.push_back(f.inv(t));
  x.has_matrix = g.has_matrix;
  if (g.has_matrix) {
    const auto& [a, b, c, d] = g.mat;
    ff::Elem di = f.inv(f.sub(f.mul(a, d), f.mul(b, c)));
    x.mat = {f.mul(d, di), f.neg(f.mul(b, di)), f.neg(f.mul(c, di)), f.mul(a, di)};
  }
  return x;
}

std::vector<Direction> lie_basis_directions(const GroupSpec& g) {
  std::vector<Direction> out;
  for (int i = 0; i < g.central_rank; ++i) out.push_back({i, {}});
  switch (g.base) {
    case BaseGroup::SL2:
      out.push_back({-1, {0, 1, 0, 0}});
      out.push_back({-1, {0, 0, 1, 0}});
      out.push_back({-1, {1, 0, 0, -1}});
      break;
    case BaseGroup::GL2:
      out.push_back({-1, {1, 0, 0, 0}});
      out.push_back({-1, {0, 1, 0, 0}});
      out.push_back({-1, {0, 0, 1, 0}});
      out.push_back({-1, {0, 0, 0, 1}});
      break;
    case BaseGroup::Trivial: break;
    case BaseGroup::RootSystem:
      fail(ErrorKind::NotEnumerable, "abstract root systems have no matrix model");
  }
  return out;
}

Point<ff::Dual> perturb(const ff::DualRing& ring, const GroupPoint& g, const Direction& dir) {
  const ff::Field& f = ring.base();
  Point<ff::Dual> x = lift(ring, g);
  if (dir.central_index >= 0) {
    auto& t = x.torus.at(static_cast<std::size_t>(dir.central_index));
    t.deriv = t.value;
    return x;
  }
  if (!g.has_matrix) fail(ErrorKind::InvalidRep, "matrix direction on a torus point");
  ff::Elem xi[4];
  for (int i = 0; i < 4; ++i) xi[i] = f.from_int(dir.xi[static_cast<std::size_t>(i)]);
  const auto& [a, b, c, d] = g.mat;
  // (xi g) entries as derivatives.
  x.mat[0].deriv = f.add(f.mul(xi[0], a), f.mul(xi[1], c));
  x.mat[1].deriv = f.add(f.mul(xi[0], b), f.mul(xi[1], d));
  x.mat[2].deriv = f.add(f.mul(xi[2], a), f.mul(xi[3], c));
  x.mat[3].deriv = f.add(f.mul(xi[2], b), f.mul(xi[3], d));
  return x;
}

FqMatrix matmul(const ff::Field& f, const FqMatrix& a, const FqMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  FqMatrix out(n, std::vector<ff::Elem>(m, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) fail(ErrorKind::DimensionMismatch, "matrix shapes do not compose");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == f.zero()) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] = f.add(out[i][j], f.mul(a[i][l], b[l][j]));
    }
  }
  return out;
}

ff::Elem trace(const ff::Field& f, const FqMatrix& a) {
  ff::Elem t = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) t = f.add(t, a[i].at(i));
  return t;
}

ff::Elem determinant(const ff::Field& f, const FqMatrix& m) {
  FqMatrix a = m;
  const std::size_t n = a.size();
  ff::Elem det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == f.zero()) ++piv;
    if (piv == n) return f.zero();
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = f.neg(det);
    }
    det = f.mul(det, a[col][col]);
    const ff::Elem inv = f.inv(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == f.zero()) continue;
      const ff::Elem factor = f.mul(a[r][col], inv);
      for (std::size_t j = col; j < n; ++j) a[r][j] = f.sub(a[r][j], f.mul(factor, a[col][j]));
    }
  }
  return det;
}

}  // namespace hyp::groups
