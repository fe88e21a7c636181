#include "hyp/system.hpp"

#include <algorithm>

#include "hyp/error.hpp"

namespace hyp {

int GroupSpec::base_lattice_rank() const {
  switch (base) {
    case BaseGroup::Trivial: return 0;
    case BaseGroup::SL2: return 1;
    case BaseGroup::GL2: return 2;
    case BaseGroup::RootSystem: return family_rank;
  }
  return 0;
}

int GroupSpec::dimension() const {
  switch (base) {
    case BaseGroup::Trivial: return central_rank;
    case BaseGroup::SL2: return central_rank + 3;
    case BaseGroup::GL2: return central_rank + 4;
    case BaseGroup::RootSystem:
      return central_rank + rootsys::build_root_system(family, family_rank).group_dimension();
  }
  return central_rank;
}

std::string GroupSpec::describe() const {
  std::string base_name;
  switch (base) {
    case BaseGroup::Trivial: return "Gm^" + std::to_string(central_rank);
    case BaseGroup::SL2: base_name = "SL2"; break;
    case BaseGroup::GL2: base_name = "GL2"; break;
    case BaseGroup::RootSystem:
      base_name = std::string(1, rootsys::to_char(family)) + std::to_string(family_rank);
      break;
  }
  if (central_rank == 0) return base_name;
  return "Gm^" + std::to_string(central_rank) + " x " + base_name;
}

int rep_dimension(const GroupSpec& g, const RepDescriptor& rep) {
  switch (g.base) {
    case BaseGroup::Trivial: return 1;
    case BaseGroup::SL2:
    case BaseGroup::GL2: return rep.sym + 1;
    case BaseGroup::RootSystem: {
      auto rs = rootsys::build_root_system(g.family, g.family_rank);
      return static_cast<int>(rootsys::weyl_dimension(rs, rootsys::Weight{rep.highest_weight}));
    }
  }
  return 1;
}

IntVec highest_weight(const GroupSpec& g, const RepDescriptor& rep) {
  IntVec w = rep.central_weight;
  switch (g.base) {
    case BaseGroup::Trivial: break;
    case BaseGroup::SL2: w.push_back(rep.sym); break;
    case BaseGroup::GL2:
      w.push_back(rep.sym + rep.det_twist);
      w.push_back(rep.det_twist);
      break;
    case BaseGroup::RootSystem:
      w.insert(w.end(), rep.highest_weight.begin(), rep.highest_weight.end());
      break;
  }
  return w;
}

std::vector<IntVec> basis_weights(const GroupSpec& g, const RepDescriptor& rep) {
  std::vector<IntVec> out;
  auto with_central = [&](std::initializer_list<std::int64_t> tail) {
    IntVec w = rep.central_weight;
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
  };
  switch (g.base) {
    case BaseGroup::Trivial: out.push_back(rep.central_weight); break;
    case BaseGroup::SL2:
      for (int i = 0; i <= rep.sym; ++i) out.push_back(with_central({rep.sym - 2 * i}));
      break;
    case BaseGroup::GL2:
      for (int i = 0; i <= rep.sym; ++i)
        out.push_back(with_central({rep.sym - i + rep.det_twist, i + rep.det_twist}));
      break;
    case BaseGroup::RootSystem: {
      auto rs = rootsys::build_root_system(g.family, g.family_rank);
      for (const auto& [mu, mult] :
           rootsys::freudenthal_multiplicities(rs, rootsys::Weight{rep.highest_weight})) {
        IntVec w = rep.central_weight;
        w.insert(w.end(), mu.coords.begin(), mu.coords.end());
        for (std::int64_t k = 0; k < mult; ++k) out.push_back(w);
      }
      break;
    }
  }
  return out;
}

void validate(const RepSystem& sys) {
  const auto& g = sys.group;
  if (g.central_rank < 0) fail(ErrorKind::Validation, "negative central rank");
  if (g.base == BaseGroup::RootSystem) rootsys::build_root_system(g.family, g.family_rank);
  if (g.lattice_rank() == 0) fail(ErrorKind::Validation, "group has a rank-0 weight lattice");
  if (sys.reps.empty()) fail(ErrorKind::Validation, "system has no representations");

  for (std::size_t j = 0; j < sys.reps.size(); ++j) {
    const auto& rep = sys.reps[j];
    const std::string tag = "representation " + std::to_string(j) + ": ";
    if (rep.central_weight.size() != static_cast<std::size_t>(g.central_rank))
      fail(ErrorKind::Validation, tag + "central weight has length " +
                                      std::to_string(rep.central_weight.size()) + ", expected " +
                                      std::to_string(g.central_rank));
    switch (g.base) {
      case BaseGroup::Trivial: break;
      case BaseGroup::SL2:
        if (rep.sym < 0) fail(ErrorKind::InvalidRep, tag + "negative Sym degree");
        break;
      case BaseGroup::GL2:
        if (rep.sym < 0) fail(ErrorKind::InvalidRep, tag + "negative Sym degree");
        if (rep.det_twist < 0) fail(ErrorKind::InvalidRep, tag + "negative det twist");
        break;
      case BaseGroup::RootSystem:
        if (rep.highest_weight.size() != static_cast<std::size_t>(g.family_rank))
          fail(ErrorKind::Validation, tag + "highest weight has the wrong length");
        if (std::any_of(rep.highest_weight.begin(), rep.highest_weight.end(),
                        [](std::int64_t x) { return x < 0; }))
          fail(ErrorKind::NotDominant, tag + "highest weight is not dominant");
        break;
    }
  }

  if (sys.coefficients) {
    if (!sys.field) fail(ErrorKind::Validation, "coefficients given without a field");
    const auto& coeffs = *sys.coefficients;
    if (coeffs.size() != sys.reps.size())
      fail(ErrorKind::Validation, "expected one coefficient matrix per representation");
    const std::uint64_t q = [&] {
      std::uint64_t q = 1;
      for (std::uint32_t i = 0; i < sys.field->m; ++i) q *= sys.field->p;
      return q;
    }();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      const auto n = static_cast<std::size_t>(rep_dimension(g, sys.reps[j]));
      if (coeffs[j].size() != n)
        fail(ErrorKind::Validation, "coefficient " + std::to_string(j) + " must be " +
                                        std::to_string(n) + "x" + std::to_string(n));
      for (const auto& row : coeffs[j]) {
        if (row.size() != n)
          fail(ErrorKind::Validation, "coefficient " + std::to_string(j) + " is not square");
        for (auto e : row)
          if (e.v >= q) fail(ErrorKind::Validation, "coefficient entry outside the field");
      }
    }
  }
}

LatticeModel lattice_model(const GroupSpec& g) {
  LatticeModel lm;
  lm.rank = g.lattice_rank();
  lm.dimension = g.dimension();
  const auto c = static_cast<std::size_t>(g.central_rank);
  const auto n = static_cast<std::size_t>(lm.rank);

  auto embed = [&](const IntMatrix& base) {
    IntMatrix m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < c; ++i) m[i][i] = 1;
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = 0; j < base.size(); ++j) m[c + i][c + j] = base[i][j];
    return m;
  };
  auto pad = [&](const IntVec& base) {
    IntVec v(n, 0);
    for (std::size_t i = 0; i < base.size(); ++i) v[c + i] = base[i];
    return v;
  };
  auto chamber_from = [&](const IntVec& base_normal) {
    IntVec v = pad(base_normal);
    return Halfspace{to_rational(v), Rational(0)};
  };

  switch (g.base) {
    case BaseGroup::Trivial:
      lm.weyl_group.push_back(embed({}));
      break;
    case BaseGroup::SL2:
      lm.weyl_group = {embed({{1}}), embed({{-1}})};
      lm.positive_coroots = {pad({1})};
      lm.rho_pairings = {Rational(1)};
      lm.chamber = {chamber_from({-1})};
      break;
    case BaseGroup::GL2:
      lm.weyl_group = {embed({{1, 0}, {0, 1}}), embed({{0, 1}, {1, 0}})};
      lm.positive_coroots = {pad({1, -1})};
      lm.rho_pairings = {Rational(1)};
      lm.chamber = {chamber_from({-1, 1})};
      break;
    case BaseGroup::RootSystem: {
      auto rs = rootsys::build_root_system(g.family, g.family_rank);
      for (const auto& w : rs.weyl_group()) lm.weyl_group.push_back(embed(w));
      for (std::size_t a = 0; a < rs.positive_roots().size(); ++a) {
        lm.positive_coroots.push_back(pad(rs.positive_roots()[a].coroot));
        lm.rho_pairings.emplace_back(static_cast<long>(rootsys::coroot_pairing(rs, rs.rho(), a)));
      }
      for (int i = 0; i < rs.rank(); ++i) {
        IntVec e(static_cast<std::size_t>(rs.rank()), 0);
        e[i] = -1;
        lm.chamber.push_back(chamber_from(e));
      }
      break;
    }
  }
  return lm;
}

RepDescriptor trivial_rep(const GroupSpec& g) {
  RepDescriptor r;
  r.central_weight.assign(static_cast<std::size_t>(g.central_rank), 0);
  if (g.base == BaseGroup::RootSystem)
    r.highest_weight.assign(static_cast<std::size_t>(g.family_rank), 0);
  return r;
}

FqMatrix identity_matrix(const ff::Field& f, int n) {
  FqMatrix m(static_cast<std::size_t>(n), std::vector<ff::Elem>(static_cast<std::size_t>(n), f.zero()));
  for (int i = 0; i < n; ++i) m[i][i] = f.one();
  return m;
}

}  // namespace hyp
