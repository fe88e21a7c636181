#include "hyp/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <string>
#include <utility>

#include "hyp/error.hpp"

namespace hyp::rootsys {

char to_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::G: return 'G';
  }
  return '?';
}

Family family_from_char(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'G': return Family::G;
    default: fail(ErrorKind::UnsupportedFamily, std::string("unsupported family '") + c + "'");
  }
}

RootSystem::RootSystem(Family family, int rank, IntMatrix cartan,
                       std::vector<PositiveRoot> roots, std::vector<IntMatrix> weyl_group)
    : family_(family),
      rank_(rank),
      cartan_(std::move(cartan)),
      positive_roots_(std::move(roots)),
      weyl_group_(std::move(weyl_group)) {}

IntVec RootSystem::simple_root(int i) const {
  IntVec out(static_cast<std::size_t>(rank_));
  for (int r = 0; r < rank_; ++r) out[r] = cartan_[r][i];
  return out;
}

IntVec RootSystem::root_in_weight_coords(const IntVec& simple_coords) const {
  IntVec out(static_cast<std::size_t>(rank_), 0);
  for (int r = 0; r < rank_; ++r)
    for (int j = 0; j < rank_; ++j) out[r] += cartan_[r][j] * simple_coords[j];
  return out;
}

namespace {

IntMatrix cartan_matrix(Family family, int rank) {
  IntMatrix c(static_cast<std::size_t>(rank), IntVec(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < rank; ++i) c[i][i + 1] = c[i + 1][i] = -1;
      break;
    case Family::B:
      // alpha_1 long, alpha_2 short.
      c[0][1] = -1;
      c[1][0] = -2;
      break;
    case Family::G:
      // alpha_1 short, alpha_2 long.
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

IntMatrix identity(int n) {
  IntMatrix m(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

// s_i(mu) = mu - mu_i alpha_i.
IntMatrix simple_reflection(const IntMatrix& cartan, int i) {
  const int n = static_cast<int>(cartan.size());
  IntMatrix s = identity(n);
  for (int r = 0; r < n; ++r) s[r][i] -= cartan[r][i];
  return s;
}

bool is_nonnegative(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

void check_length(const RootSystem& rs, const Weight& lambda) {
  if (lambda.coords.size() != static_cast<std::size_t>(rs.rank()))
    fail(ErrorKind::DimensionMismatch, "weight length " + std::to_string(lambda.coords.size()) +
                                           " does not match rank " + std::to_string(rs.rank()));
}

void check_dominant(const RootSystem& rs, const Weight& lambda) {
  check_length(rs, lambda);
  if (!is_nonnegative(lambda.coords)) fail(ErrorKind::NotDominant, "weight is not dominant");
}

}  // namespace

RootSystem build_root_system(Family family, int rank) {
  const bool supported = (family == Family::A && rank >= 1 && rank <= 4) ||
                         (family == Family::B && rank == 2) || (family == Family::G && rank == 2);
  if (!supported)
    fail(ErrorKind::UnsupportedFamily,
         std::string("unsupported root system ") + to_char(family) + std::to_string(rank));

  IntMatrix cartan = cartan_matrix(family, rank);
  const auto n = static_cast<std::size_t>(rank);

  // Positive roots with their coroots, closed under simple reflections.
  // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i and
  // s_i(beta^vee) = beta^vee - <alpha_i, beta^vee> alpha_i^vee.
  std::vector<PositiveRoot> roots;
  std::set<IntVec> seen;
  std::deque<PositiveRoot> todo;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    todo.push_back({e, e});
    seen.insert(e);
  }
  while (!todo.empty()) {
    PositiveRoot cur = todo.front();
    todo.pop_front();
    roots.push_back(cur);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t root_pair = 0;
      std::int64_t coroot_pair = 0;
      for (std::size_t j = 0; j < n; ++j) {
        root_pair += cur.root[j] * cartan[i][j];
        coroot_pair += cur.coroot[j] * cartan[j][i];
      }
      PositiveRoot next = cur;
      next.root[i] -= root_pair;
      next.coroot[i] -= coroot_pair;
      if (!is_nonnegative(next.root) || next.root == cur.root) continue;
      if (seen.insert(next.root).second) todo.push_back(next);
    }
  }
  std::sort(roots.begin(), roots.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    std::int64_t ha = 0, hb = 0;
    for (auto x : a.root) ha += x;
    for (auto x : b.root) hb += x;
    if (ha != hb) return ha < hb;
    return a.root > b.root;
  });

  std::vector<IntMatrix> gens;
  for (int i = 0; i < rank; ++i) gens.push_back(simple_reflection(cartan, i));
  std::set<IntMatrix> group{identity(rank)};
  std::deque<IntMatrix> frontier{identity(rank)};
  while (!frontier.empty()) {
    IntMatrix cur = frontier.front();
    frontier.pop_front();
    for (const auto& s : gens) {
      IntMatrix next = multiply(s, cur);
      if (group.insert(next).second) frontier.push_back(std::move(next));
    }
  }

  return RootSystem(family, rank, std::move(cartan), std::move(roots),
                    std::vector<IntMatrix>(group.begin(), group.end()));
}

Weight apply(const IntMatrix& w, const Weight& lambda) {
  Weight out{IntVec(w.size(), 0)};
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) out.coords[i] += w[i][j] * lambda.coords[j];
  return out;
}

IntVec apply_to_root(const RootSystem& rs, const IntMatrix& w, std::size_t root_index) {
  if (root_index >= rs.positive_roots().size())
    fail(ErrorKind::IndexOutOfRange, "root index " + std::to_string(root_index));
  Weight alpha{rs.root_in_weight_coords(rs.positive_roots()[root_index].root)};
  return rootsys::apply(w, alpha).coords;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda) {
  check_length(rs, lambda);
  std::set<Weight> orbit{lambda};
  std::deque<Weight> todo{lambda};
  while (!todo.empty()) {
    Weight mu = todo.front();
    todo.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      if (mu.coords[i] == 0) continue;
      Weight next = mu;
      const IntVec alpha = rs.simple_root(i);
      for (int r = 0; r < rs.rank(); ++r) next.coords[r] -= mu.coords[i] * alpha[r];
      if (orbit.insert(next).second) todo.push_back(std::move(next));
    }
  }
  return {orbit.begin(), orbit.end()};
}

Weight dominant_representative(const RootSystem& rs, const Weight& lambda) {
  check_length(rs, lambda);
  Weight mu = lambda;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rs.rank(); ++i) {
      if (mu.coords[i] >= 0) continue;
      const IntVec alpha = rs.simple_root(i);
      const std::int64_t c = mu.coords[i];
      for (int r = 0; r < rs.rank(); ++r) mu.coords[r] -= c * alpha[r];
      changed = true;
    }
  }
  return mu;
}

std::int64_t coroot_pairing(const RootSystem& rs, const Weight& lambda, std::size_t root_index) {
  check_length(rs, lambda);
  if (root_index >= rs.positive_roots().size())
    fail(ErrorKind::IndexOutOfRange, "root index " + std::to_string(root_index));
  const auto& coroot = rs.positive_roots()[root_index].coroot;
  std::int64_t s = 0;
  for (int i = 0; i < rs.rank(); ++i) s += coroot[i] * lambda.coords[i];
  return s;
}

std::int64_t weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  check_dominant(rs, lambda);
  Weight shifted = lambda;
  for (auto& x : shifted.coords) x += 1;
  mpz_class num = 1, den = 1;
  for (std::size_t a = 0; a < rs.positive_roots().size(); ++a) {
    num *= static_cast<long>(coroot_pairing(rs, shifted, a));
    den *= static_cast<long>(coroot_pairing(rs, rs.rho(), a));
  }
  mpz_class q = num / den;
  return q.get_si();
}

namespace {

// Symmetric W-invariant form on fundamental-weight coordinates:
// (omega_i, omega_j) = (C^-1)_ij d_i with d_i C_ij = d_j C_ji.
RatMatrix invariant_form(const RootSystem& rs) {
  const int n = rs.rank();
  const auto& c = rs.cartan();
  RatVec d(static_cast<std::size_t>(n), Rational(0));
  d[0] = 1;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i < n; ++i) {
      if (d[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (d[j] != 0 || c[i][j] == 0) continue;
        Rational ratio(static_cast<long>(c[i][j]), static_cast<long>(c[j][i]));
        ratio.canonicalize();
        d[j] = d[i] * ratio;
        progress = true;
      }
    }
  }
  RatMatrix cr(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cr[i][j] = static_cast<long>(c[i][j]);
  RatMatrix inv = *inverse(cr);
  RatMatrix form(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) form[i][j] = inv[i][j] * d[i];
  return form;
}

Rational form_value(const RatMatrix& form, const IntVec& x, const IntVec& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s += form[i][j] * (static_cast<long>(x[i] * y[j]));
  }
  return s;
}

}  // namespace

std::map<Weight, std::int64_t> freudenthal_multiplicities(const RootSystem& rs,
                                                          const Weight& lambda) {
  check_dominant(rs, lambda);
  const int n = rs.rank();
  const RatMatrix form = invariant_form(rs);

  RatMatrix cr(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cr[i][j] = static_cast<long>(rs.cartan()[i][j]);
  const RatMatrix cinv = *inverse(cr);
  auto depth = [&](const Weight& mu) {
    RatVec diff(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) diff[i] = static_cast<long>(lambda.coords[i] - mu.coords[i]);
    Rational h = 0;
    for (const auto& x : mat_vec(cinv, diff)) h += x;
    return h;
  };

  std::vector<IntVec> roots;
  for (const auto& r : rs.positive_roots()) roots.push_back(rs.root_in_weight_coords(r.root));

  // Dominant weights of the module: close {lambda} under subtracting positive
  // roots while staying dominant.
  std::set<Weight> dominant{lambda};
  std::deque<Weight> todo{lambda};
  while (!todo.empty()) {
    Weight mu = todo.front();
    todo.pop_front();
    for (const auto& alpha : roots) {
      Weight nu = mu;
      for (int i = 0; i < n; ++i) nu.coords[i] -= alpha[i];
      if (!is_nonnegative(nu.coords)) continue;
      if (dominant.insert(nu).second) todo.push_back(std::move(nu));
    }
  }
  std::vector<Weight> ordered(dominant.begin(), dominant.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](const Weight& a, const Weight& b) { return depth(a) < depth(b); });

  IntVec lambda_rho = lambda.coords;
  for (auto& x : lambda_rho) x += 1;
  const Rational top = form_value(form, lambda_rho, lambda_rho);

  std::map<Weight, Rational> dom_mult;
  auto mult_of = [&](const Weight& nu) -> Rational {
    auto it = dom_mult.find(dominant_representative(rs, nu));
    return it == dom_mult.end() ? Rational(0) : it->second;
  };
  auto in_module = [&](const Weight& nu) {
    return dominant.count(dominant_representative(rs, nu)) > 0;
  };

  for (const Weight& mu : ordered) {
    if (mu == lambda) {
      dom_mult[mu] = 1;
      continue;
    }
    Rational acc = 0;
    for (const auto& alpha : roots) {
      Weight nu = mu;
      while (true) {
        for (int i = 0; i < n; ++i) nu.coords[i] += alpha[i];
        if (!in_module(nu)) break;
        acc += mult_of(nu) * form_value(form, nu.coords, alpha);
      }
    }
    IntVec mu_rho = mu.coords;
    for (auto& x : mu_rho) x += 1;
    const Rational denom = top - form_value(form, mu_rho, mu_rho);
    dom_mult[mu] = 2 * acc / denom;
  }

  std::map<Weight, std::int64_t> result;
  for (const auto& [mu, m] : dom_mult) {
    if (m == 0) continue;
    const std::int64_t value = mpz_class(m.get_num() / m.get_den()).get_si();
    for (const auto& nu : weyl_orbit(rs, mu)) result[nu] = value;
  }
  return result;
}

std::vector<Halfspace> dominant_chamber(const RootSystem& rs) {
  std::vector<Halfspace> out;
  for (int i = 0; i < rs.rank(); ++i) {
    RatVec normal(static_cast<std::size_t>(rs.rank()), Rational(0));
    normal[i] = -1;
    out.push_back(Halfspace{std::move(normal), Rational(0)});
  }
  return out;
}

}  // namespace hyp::rootsys
