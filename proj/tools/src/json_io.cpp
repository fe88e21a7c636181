#include "hyp/cli/json_io.hpp"

#include <charconv>

#include "hyp/error.hpp"

namespace hyp::cli {

namespace {

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::Validation, where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) fail(ErrorKind::Validation, what + " must be an integer");
  return j.get<std::int64_t>();
}

IntVec as_int_vec(const json& j, const std::string& what) {
  if (!j.is_array()) fail(ErrorKind::Validation, what + " must be an array of integers");
  IntVec out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

GroupSpec group_from_json(const json& g) {
  const auto type = require(g, "type", "group").get<std::string>();
  const int central = g.contains("central_rank")
                          ? static_cast<int>(as_int(g.at("central_rank"), "central_rank"))
                          : 0;
  GroupSpec spec;
  if (type == "torus") {
    spec = GroupSpec::torus(static_cast<int>(as_int(require(g, "rank", "torus group"), "rank")));
    if (g.contains("central_rank")) fail(ErrorKind::Validation, "torus groups take \"rank\" only");
    return spec;
  }
  if (type == "sl2") spec = GroupSpec::sl2();
  else if (type == "gl2") spec = GroupSpec::gl2();
  else if (type == "rootsys") {
    const auto fam = require(g, "family", "rootsys group").get<std::string>();
    if (fam.size() != 1) fail(ErrorKind::Validation, "family must be a single letter");
    spec = GroupSpec::root_system(rootsys::family_from_char(fam[0]),
                                  static_cast<int>(as_int(require(g, "rank", "rootsys group"), "rank")));
  } else {
    fail(ErrorKind::Validation, "unknown group type \"" + type + "\"");
  }
  spec.central_rank = central;
  return spec;
}

json group_to_json(const GroupSpec& g) {
  json j;
  switch (g.base) {
    case BaseGroup::Trivial: return {{"type", "torus"}, {"rank", g.central_rank}};
    case BaseGroup::SL2: j = {{"type", "sl2"}}; break;
    case BaseGroup::GL2: j = {{"type", "gl2"}}; break;
    case BaseGroup::RootSystem:
      j = {{"type", "rootsys"},
           {"family", std::string(1, rootsys::to_char(g.family))},
           {"rank", g.family_rank}};
      break;
  }
  if (g.central_rank > 0) j["central_rank"] = g.central_rank;
  return j;
}

RepDescriptor rep_from_json(const GroupSpec& g, const json& r, std::size_t index) {
  const std::string where = "representation " + std::to_string(index);
  if (!r.is_object()) fail(ErrorKind::Validation, where + " must be an object");
  RepDescriptor rep;
  if (g.is_torus()) {
    rep.central_weight = as_int_vec(require(r, "weight", where), where + " weight");
    return rep;
  }
  rep.central_weight = r.contains("central_weight")
                           ? as_int_vec(r.at("central_weight"), where + " central_weight")
                           : IntVec(static_cast<std::size_t>(g.central_rank), 0);
  switch (g.base) {
    case BaseGroup::SL2:
      rep.sym = static_cast<int>(as_int(require(r, "sym", where), where + " sym"));
      break;
    case BaseGroup::GL2:
      rep.sym = static_cast<int>(as_int(require(r, "sym", where), where + " sym"));
      rep.det_twist = r.contains("det") ? static_cast<int>(as_int(r.at("det"), where + " det")) : 0;
      break;
    case BaseGroup::RootSystem:
      rep.highest_weight = as_int_vec(require(r, "highest_weight", where), where + " highest_weight");
      break;
    case BaseGroup::Trivial: break;
  }
  return rep;
}

json rep_to_json(const GroupSpec& g, const RepDescriptor& rep) {
  if (g.is_torus()) return {{"weight", rep.central_weight}};
  json j;
  switch (g.base) {
    case BaseGroup::SL2: j["sym"] = rep.sym; break;
    case BaseGroup::GL2: j["sym"] = rep.sym; j["det"] = rep.det_twist; break;
    case BaseGroup::RootSystem: j["highest_weight"] = rep.highest_weight; break;
    case BaseGroup::Trivial: break;
  }
  if (g.central_rank > 0) j["central_weight"] = rep.central_weight;
  return j;
}

json field_json(const ff::Field& f) { return {{"p", f.p()}, {"m", f.m()}, {"q", f.q()}}; }

}  // namespace

ff::Elem elem_from_json(const ff::Field& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  if (j.is_array()) {
    std::vector<std::int64_t> c;
    for (const auto& x : j) c.push_back(as_int(x, "field element coefficient"));
    if (c.size() > f.m())
      fail(ErrorKind::Validation, "field element has more than m coefficients");
    return f.from_coeffs(c);
  }
  fail(ErrorKind::Validation, "field element must be an integer or a coefficient array");
}

json elem_to_json(const ff::Field& f, ff::Elem x) {
  if (f.m() == 1) return x.v;
  return f.coeffs(x);
}

FqMatrix matrix_from_json(const ff::Field& f, const json& j) {
  if (j.is_number_integer()) return {{elem_from_json(f, j)}};
  if (!j.is_array() || j.empty() || !j.front().is_array())
    fail(ErrorKind::Validation, "coefficient must be a matrix (array of rows) or a bare integer");
  FqMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) fail(ErrorKind::Validation, "matrix rows must be arrays");
    std::vector<ff::Elem> r;
    for (const auto& e : row) r.push_back(elem_from_json(f, e));
    m.push_back(std::move(r));
  }
  return m;
}

json matrix_to_json(const ff::Field& f, const FqMatrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (auto e : row) r.push_back(elem_to_json(f, e));
    out.push_back(std::move(r));
  }
  return out;
}

RepSystem system_from_json(const json& j, std::optional<FieldSpec> field_override) {
  if (!j.is_object()) fail(ErrorKind::Validation, "system file must be a JSON object");
  RepSystem sys;
  sys.group = group_from_json(require(j, "group", "system"));
  const auto& reps = require(j, "representations", "system");
  if (!reps.is_array()) fail(ErrorKind::Validation, "representations must be an array");
  for (std::size_t i = 0; i < reps.size(); ++i) sys.reps.push_back(rep_from_json(sys.group, reps[i], i));
  if (j.contains("field")) {
    const auto& fj = j.at("field");
    FieldSpec fs;
    fs.p = static_cast<std::uint32_t>(as_int(require(fj, "p", "field"), "field p"));
    fs.m = fj.contains("m") ? static_cast<std::uint32_t>(as_int(fj.at("m"), "field m")) : 1;
    sys.field = fs;
  }
  if (field_override) sys.field = field_override;
  if (j.contains("coefficients")) {
    if (!sys.field) fail(ErrorKind::Validation, "coefficients given without a field");
    const ff::Field f(sys.field->p, sys.field->m);
    const auto& cj = j.at("coefficients");
    if (!cj.is_array()) fail(ErrorKind::Validation, "coefficients must be an array");
    std::vector<FqMatrix> coeffs;
    for (const auto& c : cj) coeffs.push_back(matrix_from_json(f, c));
    sys.coefficients = std::move(coeffs);
  }
  validate(sys);
  return sys;
}

json system_to_json(const RepSystem& sys) {
  json j;
  j["group"] = group_to_json(sys.group);
  j["representations"] = json::array();
  for (const auto& r : sys.reps) j["representations"].push_back(rep_to_json(sys.group, r));
  if (sys.field) j["field"] = {{"p", sys.field->p}, {"m", sys.field->m}};
  if (sys.coefficients) {
    const ff::Field f(sys.field->p, sys.field->m);
    j["coefficients"] = json::array();
    for (const auto& m : *sys.coefficients) j["coefficients"].push_back(matrix_to_json(f, m));
  }
  return j;
}

std::string decimal(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, end);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

json rational_vector(const RatVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

json polytope_to_json(const RationalPolytope& p) {
  json j;
  j["ambient_dim"] = p.ambient_dim();
  j["affine_dim"] = p.affine_dim();
  j["vertices"] = json::array();
  for (const auto& v : p.vertices()) j["vertices"].push_back(rational_vector(v));
  auto halfspaces = [](const std::vector<Halfspace>& hs) {
    json out = json::array();
    for (const auto& h : hs) out.push_back({{"normal", rational_vector(h.normal)}, {"offset", to_string(h.offset)}});
    return out;
  };
  j["facets"] = halfspaces(p.facets());
  j["equations"] = halfspaces(p.equations());
  return j;
}

json bound_to_json(const RepSystem& sys, const BoundResult& b) {
  return {{"group", sys.group.describe()},
          {"d", b.d},
          {"integral", to_string(b.integral)},
          {"bound", to_string(b.bound)},
          {"lowdim", b.lowdim_flag},
          {"homogeneous", check_homogeneity(sys)},
          {"quasi_finite", quasi_finiteness_check(sys)},
          {"delta_infty", polytope_to_json(b.delta_infty)},
          {"domain", polytope_to_json(b.domain)}};
}

json point_to_json(const ff::Field& f, const groups::GroupPoint& x) {
  json j;
  j["torus"] = json::array();
  for (auto t : x.torus) j["torus"].push_back(elem_to_json(f, t));
  if (x.has_matrix)
    j["matrix"] = matrix_to_json(f, {{x.mat[0], x.mat[1]}, {x.mat[2], x.mat[3]}});
  return j;
}

json status_to_json(const ff::Field& base, const nondegen::NondegenStatus& st) {
  json j;
  j["kind"] = nondegen::to_string(st.kind);
  j["assertable"] = st.assertable();
  j["heuristic"] = st.kind == nondegen::StatusKind::NoWitnessUpTo;
  if (st.kind == nondegen::StatusKind::NoWitnessUpTo) j["extension_cap"] = st.extension_cap;
  if (!st.face.empty()) {
    j["face"] = json::array();
    for (const auto& v : st.face) j["face"].push_back(rational_vector(v));
  }
  if (st.witness) {
    const auto& w = *st.witness;
    const ff::Field big(base.p(), base.m() * w.extension);
    j["witness"] = {{"extension", w.extension},
                    {"field", field_json(big)},
                    {"g", point_to_json(big, w.g)},
                    {"h", point_to_json(big, w.h)}};
  }
  return j;
}

json counts_to_json(const ff::Field& f, const ff::CharCounts& c) {
  const auto mag = ff::counts_eval(c, f.p());
  return {{"field", field_json(f)},
          {"counts", c.counts},
          {"total", c.total()},
          {"magnitude", decimal(mag.magnitude)},
          {"error_bound", mag.error_bound}};
}

json report_to_json(const ff::Field& f, const sums::VerifyReport& r) {
  json j;
  j["system"] = r.system;
  j["field"] = field_json(f);
  j["d"] = r.d;
  j["bound"] = to_string(r.bound);
  j["threshold"] = decimal(r.threshold);
  j["extension_cap"] = r.extension_cap;
  j["worst_ratio"] = r.worst_ratio ? json(*r.worst_ratio) : json(nullptr);
  j["failures"] = r.failures;
  j["entries"] = json::array();
  std::size_t asserted = 0;
  for (const auto& e : r.entries) {
    json A = json::array();
    for (const auto& m : e.A) A.push_back(matrix_to_json(f, m));
    j["entries"].push_back({{"A", A},
                            {"counts", e.counts.counts},
                            {"magnitude", decimal(e.magnitude.magnitude)},
                            {"error_bound", e.magnitude.error_bound},
                            {"asserted", e.asserted},
                            {"pass", e.pass},
                            {"status", status_to_json(f, e.status)}});
    asserted += e.asserted ? 1 : 0;
  }
  j["asserted"] = asserted;
  return j;
}

}  // namespace hyp::cli
