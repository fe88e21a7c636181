#include "hyp/cli/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyp/bound.hpp"
#include "hyp/cli/json_io.hpp"
#include "hyp/error.hpp"
#include "hyp/nondegen.hpp"
#include "hyp/sums.hpp"

namespace hyp::cli {

namespace {

struct Options {
  std::string file;
  std::optional<std::uint64_t> q;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> m;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  int extension_cap = 2;
  bool all = false;
  bool invertible = false;
  bool homogenize = false;
  std::string A;
  std::string weight;
};

std::optional<FieldSpec> field_override(const Options& o) {
  if (o.q) {
    if (o.p || o.m) fail(ErrorKind::Validation, "--q cannot be combined with --p/--m");
    const std::uint64_t q = *o.q;
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q < 2) fail(ErrorKind::Validation, "--q must be a prime power");
    if (q % p != 0) p = q;
    std::uint64_t r = q;
    std::uint32_t m = 0;
    while (r % p == 0) {
      r /= p;
      ++m;
    }
    if (r != 1) fail(ErrorKind::Validation, "--q " + std::to_string(q) + " is not a prime power");
    return FieldSpec{static_cast<std::uint32_t>(p), m};
  }
  if (o.p) return FieldSpec{*o.p, o.m.value_or(1)};
  if (o.m) fail(ErrorKind::Validation, "--m needs --p");
  return std::nullopt;
}

RepSystem load(const Options& o) {
  std::ifstream in(o.file);
  if (!in) fail(ErrorKind::Validation, "cannot open " + o.file);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorKind::Validation, o.file + ": " + e.what());
  }
  RepSystem sys = system_from_json(j, field_override(o));
  return o.homogenize ? homogenize(sys) : sys;
}

ff::Field field_of(const RepSystem& sys) {
  if (!sys.field) fail(ErrorKind::Validation, "no field: add \"field\" to the system or pass --q/--p");
  return ff::Field(sys.field->p, sys.field->m);
}

std::vector<FqMatrix> coefficients(const RepSystem& sys, const ff::Field& f, const std::string& A) {
  if (A.empty()) {
    if (!sys.coefficients) fail(ErrorKind::Validation, "no coefficients: add them to the system or pass --A");
    return *sys.coefficients;
  }
  std::vector<FqMatrix> out;
  for (const auto& rep : sys.reps) {
    const int n = rep_dimension(sys.group, rep);
    if (A == "identity") out.push_back(identity_matrix(f, n));
    else if (A == "zero")
      out.emplace_back(static_cast<std::size_t>(n), std::vector<ff::Elem>(static_cast<std::size_t>(n), f.zero()));
    else fail(ErrorKind::Validation, "--A must be identity or zero");
  }
  return out;
}

int cmd_bound(const Options& o, std::ostream& out) {
  const auto sys = load(o);
  out << bound_to_json(sys, rank_bound(sys)).dump(2) << '\n';
  return kOk;
}

int cmd_sum(const Options& o, std::ostream& out) {
  const auto sys = load(o);
  const auto f = field_of(sys);
  const auto A = coefficients(sys, f, o.A);
  const auto counts = sums::hyp_sum(sys, A, f);
  json j = counts_to_json(f, counts);
  j["group"] = sys.group.describe();
  j["group_order"] = groups::group_order(sys.group, f.q());
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto sys = load(o);
  const auto f = field_of(sys);
  sums::Selection sel;
  if (o.all) {
    sel = sums::Selection::all(o.invertible);
  } else if (o.samples) {
    sel = sums::Selection::sample(*o.samples, o.seed, o.invertible);
  } else {
    // Only the tuple in the file (or --A).
    const auto A = coefficients(sys, f, o.A);
    sums::VerifyReport r = sums::verify_bound(sys, f, sums::Selection::sample(0, o.seed), o.extension_cap);
    std::erase_if(r.entries, [&](const sums::VerifyEntry& e) { return e.A != A; });
    if (r.entries.empty()) {
      sums::VerifyEntry e;
      e.A = A;
      e.counts = sums::hyp_sum(sys, A, f);
      e.magnitude = ff::counts_eval(e.counts, f.p());
      e.status = nondegen::nondegen_status(sys, A, f, r.extension_cap);
      e.asserted = e.status.assertable();
      e.pass = !e.asserted || sums::within_bound(e.magnitude, r.threshold);
      r.entries.push_back(std::move(e));
    }
    r.failures = 0;
    r.worst_ratio.reset();
    for (const auto& e : r.entries) {
      if (e.asserted && !e.pass) ++r.failures;
      if (e.asserted && r.threshold > 0) {
        const double ratio = e.magnitude.magnitude / r.threshold;
        if (!r.worst_ratio || ratio > *r.worst_ratio) r.worst_ratio = ratio;
      }
    }
    out << report_to_json(f, r).dump(2) << '\n';
    return r.failures ? kVerifyFailed : kOk;
  }
  const auto r = sums::verify_bound(sys, f, sel, o.extension_cap);
  out << report_to_json(f, r).dump(2) << '\n';
  return r.failures ? kVerifyFailed : kOk;
}

int cmd_nondegen(const Options& o, std::ostream& out) {
  const auto sys = load(o);
  const auto f = field_of(sys);
  const auto A = coefficients(sys, f, o.A);
  const auto delta_infty = newton_polytopes(sys).delta_infty;
  const auto faces = nondegen::faces_without_origin(delta_infty);
  const auto orbits = nondegen::weyl_orbit_classes(delta_infty, faces, lattice_model(sys.group));
  json j;
  j["group"] = sys.group.describe();
  j["field"] = {{"p", f.p()}, {"m", f.m()}, {"q", f.q()}};
  j["faces"] = json::array();
  std::size_t orbit_count = 0;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    json verts = json::array();
    for (const auto& v : nondegen::face_vertices(delta_infty, faces[i])) verts.push_back(rational_vector(v));
    j["faces"].push_back({{"vertices", verts}, {"dim", faces[i].affine_dim}, {"orbit", orbits[i]}});
    orbit_count = std::max(orbit_count, orbits[i] + 1);
  }
  j["orbit_count"] = orbit_count;
  j["status"] = status_to_json(f, nondegen::nondegen_status(sys, A, f, o.extension_cap));
  out << j.dump(2) << '\n';
  return kOk;
}

IntVec parse_weight(const std::string& s) {
  IntVec out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(ErrorKind::Validation, "--weight must be comma-separated integers");
    }
  }
  return out;
}

int cmd_orbit(const Options& o, std::ostream& out) {
  const auto sys = load(o);
  const auto lm = lattice_model(sys.group);
  std::vector<IntVec> weights;
  if (!o.weight.empty()) {
    weights.push_back(parse_weight(o.weight));
    if (static_cast<int>(weights[0].size()) != lm.rank)
      fail(ErrorKind::DimensionMismatch, "--weight must have " + std::to_string(lm.rank) + " coordinates");
  } else {
    for (const auto& rep : sys.reps) weights.push_back(highest_weight(sys.group, rep));
  }
  json j;
  j["group"] = sys.group.describe();
  j["weyl_order"] = lm.weyl_group.size();
  j["orbits"] = json::array();
  for (const auto& w : weights) {
    const auto orbit = weyl_orbit(lm, w);
    j["orbits"].push_back({{"weight", w}, {"orbit", orbit}, {"size", orbit.size()}});
  }
  out << j.dump(2) << '\n';
  return kOk;
}

int cmd_polytope(const Options& o, std::ostream& out) {
  const auto sys = load(o);
  const auto np = newton_polytopes(sys);
  json j;
  j["group"] = sys.group.describe();
  j["delta"] = polytope_to_json(np.delta);
  j["delta_infty"] = polytope_to_json(np.delta_infty);
  out << j.dump(2) << '\n';
  return kOk;
}

int report_error(std::ostream& err, const std::string& kind, const std::string& msg, int code) {
  err << json{{"error", kind}, {"message", msg}}.dump() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hypergeometric exponential sums over split reductive groups"};
  app.name("hypsum");
  app.require_subcommand(1);
  Options o;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("system", o.file, "System JSON file")->required();
    sub->add_flag("--homogenize", o.homogenize, "Adjoin a central Gm acting with weight 1 first");
    return sub;
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--q", o.q, "Field size (prime power), overrides the file");
    sub->add_option("--p", o.p, "Field characteristic, overrides the file");
    sub->add_option("--m", o.m, "Field degree over F_p (with --p)");
  };

  auto* bound = add("bound", "Exact rank bound d! int_{Delta_inf cap C} prod (lambda,alpha)^2/(rho,alpha)^2");
  auto* sum = add("sum", "Exact character counts of Hyp(A)");
  add_field(sum);
  sum->add_option("--A", o.A, "Use A = identity or zero instead of the file's coefficients");
  auto* verify = add("verify", "Check |Hyp(A)| <= q^{d/2} * bound over coefficient tuples");
  add_field(verify);
  verify->add_flag("--all", o.all, "Sweep the whole coefficient space");
  verify->add_option("--samples", o.samples, "Number of seeded random tuples");
  verify->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  verify->add_flag("--invertible", o.invertible, "Keep only invertible coefficient matrices");
  verify->add_option("--extension-cap", o.extension_cap, "Witness search extension degree cap")
      ->capture_default_str();
  verify->add_option("--A", o.A, "Verify A = identity or zero only");
  auto* nd = add("nondegen", "Nondegeneracy status of A over all faces without the origin");
  add_field(nd);
  nd->add_option("--extension-cap", o.extension_cap, "Witness search extension degree cap")
      ->capture_default_str();
  nd->add_option("--A", o.A, "Use A = identity or zero instead of the file's coefficients");
  auto* orbit = add("orbit", "Weyl orbits of the highest weights (or of --weight)");
  orbit->add_option("--weight", o.weight, "Comma-separated lattice coordinates");
  auto* poly = add("polytope", "Vertices and facets of Delta and Delta_inf");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report_error(err, "Usage", e.what(), kValidation);
  }

  try {
    if (bound->parsed()) return cmd_bound(o, out);
    if (sum->parsed()) return cmd_sum(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (nd->parsed()) return cmd_nondegen(o, out);
    if (orbit->parsed()) return cmd_orbit(o, out);
    if (poly->parsed()) return cmd_polytope(o, out);
  } catch (const Error& e) {
    return report_error(err, std::string(to_string(e.kind())), e.what(),
                        e.kind() == ErrorKind::SizeGuard ? kSizeGuard : kValidation);
  } catch (const std::exception& e) {
    return report_error(err, "Internal", e.what(), kValidation);
  }
  return kValidation;
}

}  // namespace hyp::cli
