#include "hyp/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "hyp/error.hpp"

namespace hyp {

namespace {

constexpr std::size_t kMaxDim = 5;

struct HullFacet {
  RatVec a;
  Rational b;
  std::vector<std::size_t> tight;
};

// Hyperplane a.x = b through k affinely independent points of Q^k, oriented
// so the interior reference point is strictly inside.
std::pair<RatVec, Rational> hyperplane_through(const RatMatrix& pts, const RatVec& interior) {
  const std::size_t k = interior.size();
  RatMatrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
  RatMatrix ns = nullspace(diffs, k);
  RatVec a = ns.front();
  Rational b = dot(a, pts[0]);
  if (dot(a, interior) > b) {
    for (auto& x : a) x = -x;
    b = -b;
  }
  normalize_hyperplane(a, b);
  return {std::move(a), std::move(b)};
}

std::vector<std::size_t> intersect_sorted(const std::vector<std::size_t>& x,
                                          const std::vector<std::size_t>& y) {
  std::vector<std::size_t> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

RatMatrix gather(const RatMatrix& pts, const std::vector<std::size_t>& idx) {
  RatMatrix out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(pts[i]);
  return out;
}

// Greedy selection of `count` affinely independent points from idx.
std::vector<std::size_t> independent_subset(const RatMatrix& pts, const std::vector<std::size_t>& idx,
                                            std::size_t count) {
  std::vector<std::size_t> chosen;
  RatMatrix diffs;
  for (auto i : idx) {
    if (chosen.size() == count) break;
    if (chosen.empty()) {
      chosen.push_back(i);
      continue;
    }
    diffs.push_back(sub(pts[i], pts[chosen.front()]));
    if (rank(diffs) == static_cast<int>(diffs.size())) {
      chosen.push_back(i);
    } else {
      diffs.pop_back();
    }
  }
  return chosen;
}

// Beneath-beyond hull of full-dimensional points in Q^k, k >= 1. `simplex`
// indexes k+1 affinely independent points.
std::vector<HullFacet> full_dim_hull(const RatMatrix& pts, const std::vector<std::size_t>& simplex) {
  const std::size_t k = pts.front().size();
  RatVec interior(k, Rational(0));
  for (auto i : simplex)
    for (std::size_t c = 0; c < k; ++c) interior[c] += pts[i][c];
  for (auto& x : interior) x /= static_cast<long>(k + 1);

  std::vector<std::size_t> processed = simplex;
  std::sort(processed.begin(), processed.end());

  auto tight_set = [&](const RatVec& a, const Rational& b) {
    std::vector<std::size_t> t;
    for (auto i : processed)
      if (dot(a, pts[i]) == b) t.push_back(i);
    return t;
  };

  std::vector<HullFacet> facets;
  for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
    RatMatrix face_pts;
    for (std::size_t j = 0; j < simplex.size(); ++j)
      if (j != skip) face_pts.push_back(pts[simplex[j]]);
    auto [a, b] = hyperplane_through(face_pts, interior);
    HullFacet f{std::move(a), std::move(b), {}};
    f.tight = tight_set(f.a, f.b);
    facets.push_back(std::move(f));
  }

  std::vector<bool> in_simplex(pts.size(), false);
  for (auto i : simplex) in_simplex[i] = true;

  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (in_simplex[p]) continue;
    const RatVec& x = pts[p];
    std::vector<bool> visible(facets.size());
    bool any_visible = false;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      visible[f] = dot(facets[f].a, x) > facets[f].b;
      any_visible = any_visible || visible[f];
    }
    processed.insert(std::upper_bound(processed.begin(), processed.end(), p), p);
    if (!any_visible) {
      for (auto& f : facets)
        if (dot(f.a, x) == f.b) f.tight.insert(std::upper_bound(f.tight.begin(), f.tight.end(), p), p);
      continue;
    }

    std::vector<HullFacet> created;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (!visible[f]) continue;
      for (std::size_t g = 0; g < facets.size(); ++g) {
        if (visible[g]) continue;
        auto ridge = intersect_sorted(facets[f].tight, facets[g].tight);
        if (affine_dimension(gather(pts, ridge)) != static_cast<int>(k) - 2) continue;
        if (dot(facets[g].a, x) == facets[g].b) continue;  // g absorbs p
        auto base = independent_subset(pts, ridge, k - 1);
        RatMatrix through = gather(pts, base);
        through.push_back(x);
        auto [a, b] = hyperplane_through(through, interior);
        const bool dup = std::any_of(created.begin(), created.end(), [&](const HullFacet& h) {
          return h.a == a && h.b == b;
        });
        if (!dup) created.push_back(HullFacet{std::move(a), std::move(b), {}});
      }
    }

    std::vector<HullFacet> next;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (visible[f]) continue;
      if (dot(facets[f].a, x) == facets[f].b)
        facets[f].tight.insert(
            std::upper_bound(facets[f].tight.begin(), facets[f].tight.end(), p), p);
      next.push_back(std::move(facets[f]));
    }
    for (auto& h : created) {
      const bool dup = std::any_of(next.begin(), next.end(), [&](const HullFacet& e) {
        return e.a == h.a && e.b == h.b;
      });
      if (dup) continue;
      h.tight = tight_set(h.a, h.b);
      next.push_back(std::move(h));
    }
    facets = std::move(next);
  }
  return facets;
}

}  // namespace

RationalPolytope RationalPolytope::empty(int ambient_dim) {
  RationalPolytope p;
  p.ambient_dim_ = ambient_dim;
  p.affine_dim_ = -1;
  return p;
}

bool RationalPolytope::contains(const RatVec& x) const {
  if (is_empty()) return false;
  if (x.size() != static_cast<std::size_t>(ambient_dim_))
    fail(ErrorKind::DimensionMismatch, "point dimension does not match polytope");
  for (const auto& e : equations_)
    if (dot(e.normal, x) != e.offset) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, x) > f.offset) return false;
  return true;
}

bool RationalPolytope::on_facet(std::size_t facet, const RatVec& x) const {
  if (facet >= facets_.size()) fail(ErrorKind::IndexOutOfRange, "facet index");
  return dot(facets_[facet].normal, x) == facets_[facet].offset;
}

RationalPolytope convex_hull(const std::vector<RatVec>& points) {
  if (points.empty()) fail(ErrorKind::EmptyInput, "convex_hull of an empty point set");
  const std::size_t dim = points.front().size();
  if (dim == 0 || dim > kMaxDim)
    fail(ErrorKind::DimensionMismatch, "ambient dimension must be in 1.." + std::to_string(kMaxDim));
  for (const auto& p : points)
    if (p.size() != dim) fail(ErrorKind::DimensionMismatch, "points of mixed dimension");

  RatMatrix pts = points;
  for (auto& p : pts)
    for (auto& x : p) x.canonicalize();
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  RationalPolytope out;
  out.ambient_dim_ = static_cast<int>(dim);

  // Affine frame: p0 plus points that raise the rank.
  std::vector<std::size_t> frame{0};
  RatMatrix diffs;
  for (std::size_t i = 1; i < pts.size() && diffs.size() < dim; ++i) {
    diffs.push_back(sub(pts[i], pts[0]));
    if (rank(diffs) == static_cast<int>(diffs.size())) {
      frame.push_back(i);
    } else {
      diffs.pop_back();
    }
  }
  const std::size_t k = diffs.size();
  out.affine_dim_ = static_cast<int>(k);
  const RatVec& p0 = pts[0];

  for (auto e : nullspace(diffs, dim)) {
    Rational off = dot(e, p0);
    normalize_hyperplane(e, off);
    out.equations_.push_back(Halfspace{std::move(e), std::move(off)});
  }
  std::sort(out.equations_.begin(), out.equations_.end(),
            [](const Halfspace& a, const Halfspace& b) {
              return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
            });

  if (k == 0) {
    out.vertices_ = {p0};
    return out;
  }

  // Coordinates u in the span: x = p0 + sum_c u_c diffs[c]; recovered from
  // k pivot coordinates of x - p0.
  RatMatrix diffs_copy = diffs;
  std::vector<std::size_t> pivots;
  {
    RatMatrix m = diffs;
    std::size_t row = 0;
    for (std::size_t col = 0; col < dim && row < m.size(); ++col) {
      std::size_t sel = row;
      while (sel < m.size() && m[sel][col] == 0) ++sel;
      if (sel == m.size()) continue;
      std::swap(m[row], m[sel]);
      for (std::size_t r = row + 1; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        Rational f = m[r][col] / m[row][col];
        for (std::size_t c = col; c < dim; ++c) m[r][c] -= f * m[row][c];
      }
      pivots.push_back(col);
      ++row;
    }
  }
  RatMatrix sq(k, RatVec(k));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) sq[r][c] = diffs_copy[c][pivots[r]];
  const RatMatrix sq_inv = *inverse(sq);

  RatMatrix local;
  local.reserve(pts.size());
  for (const auto& p : pts) {
    RatVec rhs(k);
    for (std::size_t r = 0; r < k; ++r) rhs[r] = p[pivots[r]] - p0[pivots[r]];
    local.push_back(mat_vec(sq_inv, rhs));
  }

  auto hull = full_dim_hull(local, frame);

  // Vertices: points whose tight facet normals have full rank.
  std::vector<std::vector<std::size_t>> tight_at(pts.size());
  for (std::size_t f = 0; f < hull.size(); ++f)
    for (auto i : hull[f].tight) tight_at[i].push_back(f);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    RatMatrix normals;
    for (auto f : tight_at[i]) normals.push_back(hull[f].a);
    if (rank(normals) == static_cast<int>(k)) out.vertices_.push_back(pts[i]);
  }
  std::sort(out.vertices_.begin(), out.vertices_.end());

  for (const auto& f : hull) {
    RatVec normal(dim, Rational(0));
    for (std::size_t r = 0; r < k; ++r) {
      Rational s = 0;
      for (std::size_t c = 0; c < k; ++c) s += sq_inv[c][r] * f.a[c];
      normal[pivots[r]] = s;
    }
    Rational offset = f.b + dot(normal, p0);
    normalize_hyperplane(normal, offset);
    out.facets_.push_back(Halfspace{std::move(normal), std::move(offset)});
  }
  std::sort(out.facets_.begin(), out.facets_.end(), [](const Halfspace& a, const Halfspace& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });
  return out;
}

std::vector<Face> enumerate_faces(const RationalPolytope& p) {
  std::vector<Face> out;
  if (p.is_empty()) return out;
  const auto& verts = p.vertices();
  const RatVec origin(static_cast<std::size_t>(p.ambient_dim()), Rational(0));
  const bool origin_in_p = p.contains(origin);

  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;

  std::vector<std::vector<std::size_t>> sets;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < verts.size(); ++v)
      if (p.on_facet(f, verts[v])) s.push_back(v);
    if (seen.insert(s).second) sets.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto s = intersect_sorted(sets[i], sets[j]);
      if (s.empty()) continue;
      if (seen.insert(s).second) sets.push_back(std::move(s));
    }
  }
  if (seen.insert(all).second) sets.push_back(all);

  for (auto& s : sets) {
    Face face;
    face.affine_dim = affine_dimension(gather(verts, s));
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
      const bool all_on = std::all_of(s.begin(), s.end(),
                                      [&](std::size_t v) { return p.on_facet(f, verts[v]); });
      if (all_on) face.facet_indices.push_back(f);
    }
    face.contains_origin =
        origin_in_p && std::all_of(face.facet_indices.begin(), face.facet_indices.end(),
                                   [&](std::size_t f) { return p.on_facet(f, origin); });
    face.vertex_indices = std::move(s);
    out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return std::tie(a.affine_dim, a.vertex_indices) < std::tie(b.affine_dim, b.vertex_indices);
  });
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> edges(const RationalPolytope& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& verts = p.vertices();
  const std::size_t nf = p.facets().size();
  std::vector<std::vector<bool>> on(verts.size(), std::vector<bool>(nf));
  for (std::size_t v = 0; v < verts.size(); ++v)
    for (std::size_t f = 0; f < nf; ++f) on[v][f] = p.on_facet(f, verts[v]);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      bool is_edge = true;
      for (std::size_t v = 0; v < verts.size() && is_edge; ++v) {
        if (v == i || v == j) continue;
        bool in_face = true;
        for (std::size_t f = 0; f < nf && in_face; ++f)
          if (on[i][f] && on[j][f] && !on[v][f]) in_face = false;
        if (in_face) is_edge = false;
      }
      if (is_edge) out.emplace_back(i, j);
    }
  }
  return out;
}

RationalPolytope intersect_halfspaces(const RationalPolytope& p,
                                      const std::vector<Halfspace>& halfspaces) {
  RationalPolytope cur = p;
  for (const auto& h : halfspaces) {
    if (cur.is_empty()) return RationalPolytope::empty(p.ambient_dim());
    if (h.normal.size() != static_cast<std::size_t>(p.ambient_dim()))
      fail(ErrorKind::DimensionMismatch, "halfspace dimension does not match polytope");
    const auto& verts = cur.vertices();
    std::vector<Rational> val;
    val.reserve(verts.size());
    for (const auto& v : verts) val.push_back(dot(h.normal, v) - h.offset);

    std::vector<RatVec> kept;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (val[i] <= 0) kept.push_back(verts[i]);
    if (kept.size() == verts.size()) continue;
    for (auto [i, j] : edges(cur)) {
      if ((val[i] < 0 && val[j] > 0) || (val[i] > 0 && val[j] < 0)) {
        Rational t = val[i] / (val[i] - val[j]);
        kept.push_back(add(verts[i], scale(sub(verts[j], verts[i]), t)));
      }
    }
    if (kept.empty()) return RationalPolytope::empty(p.ambient_dim());
    cur = convex_hull(kept);
  }
  return cur;
}

std::vector<Simplex> triangulate(const RationalPolytope& p, ConeApex apex) {
  if (p.is_empty()) fail(ErrorKind::DegeneratePolytope, "cannot triangulate the empty polytope");
  const auto faces = enumerate_faces(p);
  std::map<std::size_t, std::vector<Simplex>> memo;

  auto is_subset = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };

  auto recurse = [&](auto&& self, std::size_t fi) -> std::vector<Simplex> {
    if (auto it = memo.find(fi); it != memo.end()) return it->second;
    const Face& face = faces[fi];
    std::vector<Simplex> out;
    if (face.affine_dim == 0) {
      out.push_back({face.vertex_indices.front()});
    } else {
      const std::size_t top = apex == ConeApex::LexLeast ? face.vertex_indices.front()
                                                         : face.vertex_indices.back();
      for (std::size_t gi = 0; gi < faces.size(); ++gi) {
        const Face& g = faces[gi];
        if (g.affine_dim != face.affine_dim - 1 || !is_subset(g.vertex_indices, face.vertex_indices))
          continue;
        if (std::binary_search(g.vertex_indices.begin(), g.vertex_indices.end(), top)) continue;
        for (auto s : self(self, gi)) {
          s.push_back(top);
          std::sort(s.begin(), s.end());
          out.push_back(std::move(s));
        }
      }
    }
    memo[fi] = out;
    return out;
  };
  return recurse(recurse, faces.size() - 1);
}

Rational simplex_volume(const std::vector<RatVec>& vertices) {
  const std::size_t d = vertices.size() - 1;
  RatMatrix m;
  for (std::size_t i = 1; i <= d; ++i) m.push_back(sub(vertices[i], vertices[0]));
  Rational det = determinant(m);
  if (det < 0) det = -det;
  mpz_class fact = 1;
  for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<unsigned long>(i);
  return det / Rational(fact);
}

Rational volume(const RationalPolytope& p, ConeApex apex) {
  if (!p.is_full_dimensional())
    fail(ErrorKind::DegeneratePolytope, "volume requires a full-dimensional polytope");
  Rational total = 0;
  for (const auto& s : triangulate(p, apex)) {
    std::vector<RatVec> verts;
    for (auto i : s) verts.push_back(p.vertices()[i]);
    total += simplex_volume(verts);
  }
  return total;
}

}  // namespace hyp
