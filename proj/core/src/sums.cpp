#include "hyp/sums.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <thread>

#include "hyp/bound.hpp"
#include "hyp/error.hpp"
#include "hyp/groups.hpp"

namespace hyp::sums {

namespace {

void check_tuple(const RepSystem& sys, const std::vector<FqMatrix>& A, const ff::Field& f) {
  if (A.size() != sys.reps.size())
    fail(ErrorKind::DimensionMismatch, "expected " + std::to_string(sys.reps.size()) +
                                           " coefficient matrices, got " + std::to_string(A.size()));
  for (std::size_t j = 0; j < A.size(); ++j) {
    const auto n = static_cast<std::size_t>(rep_dimension(sys.group, sys.reps[j]));
    bool ok = A[j].size() == n;
    for (const auto& row : A[j]) ok = ok && row.size() == n;
    if (!ok)
      fail(ErrorKind::DimensionMismatch, "coefficient " + std::to_string(j) + " must be " +
                                             std::to_string(n) + "x" + std::to_string(n));
    for (const auto& row : A[j])
      for (auto e : row)
        if (e.v >= f.q()) fail(ErrorKind::Validation, "coefficient entry outside the field");
  }
}

// Tr(A rho) = sum_{a,b} A[a][b] rho[b][a]
ff::Elem trace_product(const ff::Field& f, const FqMatrix& A, const FqMatrix& rho) {
  ff::Elem acc = f.zero();
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < A.size(); ++b)
      if (A[a][b].v != 0) acc = f.add(acc, f.mul(A[a][b], rho[b][a]));
  return acc;
}

void accumulate(const RepSystem& sys, const std::vector<FqMatrix>& A, const ff::Field& f,
                const groups::PointEnumerator& points, std::uint64_t begin, std::uint64_t end,
                ff::CharCounts& out) {
  for (std::uint64_t i = begin; i < end; ++i) {
    const auto g = points.at(i);
    ff::Elem value = f.zero();
    for (std::size_t j = 0; j < sys.reps.size(); ++j)
      value = f.add(value, trace_product(f, A[j], groups::rep_matrix(f, sys.group, sys.reps[j], g)));
    out.add(f.trace(value));
  }
}

bool nonzero_entries_only(const RepSystem& sys) { return sys.group.is_torus(); }

// Flattened entries of a tuple, the canonical sort key.
std::vector<std::uint32_t> encode(const std::vector<FqMatrix>& A) {
  std::vector<std::uint32_t> key;
  for (const auto& m : A)
    for (const auto& row : m)
      for (auto e : row) key.push_back(e.v);
  return key;
}

std::vector<FqMatrix> decode(const RepSystem& sys, const std::vector<std::uint32_t>& key) {
  std::vector<FqMatrix> A;
  std::size_t pos = 0;
  for (const auto& rep : sys.reps) {
    const auto n = static_cast<std::size_t>(rep_dimension(sys.group, rep));
    FqMatrix m(n, std::vector<ff::Elem>(n));
    for (auto& row : m)
      for (auto& e : row) e = ff::Elem{key[pos++]};
    A.push_back(std::move(m));
  }
  return A;
}

bool invertible(const ff::Field& f, const std::vector<FqMatrix>& A) {
  for (const auto& m : A)
    if (groups::determinant(f, m).v == 0) return false;
  return true;
}

}  // namespace

ff::CharCounts hyp_sum(const RepSystem& sys, const std::vector<FqMatrix>& A, const ff::Field& f,
                       unsigned threads) {
  validate(sys);
  check_tuple(sys, A, f);
  const groups::PointEnumerator points(sys.group, f);
  const std::uint64_t n = points.size();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  constexpr std::uint64_t kMinChunk = 4096;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, n / kMinChunk)));

  std::vector<ff::CharCounts> partial(threads, ff::CharCounts(f.p()));
  if (threads == 1) {
    accumulate(sys, A, f, points, 0, n, partial[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        accumulate(sys, A, f, points, n * t / threads, n * (t + 1) / threads, partial[t]);
      });
  }
  ff::CharCounts total(f.p());
  for (const auto& c : partial) total.merge(c);
  return total;
}

std::vector<std::vector<FqMatrix>> coefficient_tuples(const RepSystem& sys, const ff::Field& f,
                                                      const Selection& sel) {
  validate(sys);
  const std::uint32_t lo = nonzero_entries_only(sys) ? 1 : 0;
  const std::uint64_t radix = f.q() - lo;
  std::size_t entries = 0;
  for (const auto& rep : sys.reps) {
    const auto n = static_cast<std::size_t>(rep_dimension(sys.group, rep));
    entries += n * n;
  }

  // Size of the space, saturating above kMaxSweep.
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < entries && space <= kMaxSweep; ++i) space *= radix;

  std::set<std::vector<std::uint32_t>> keys;
  auto admit = [&](const std::vector<std::uint32_t>& key) {
    if (sel.invertible_only && !invertible(f, decode(sys, key))) return;
    keys.insert(key);
  };

  if (sel.mode == Selection::Mode::All || (space <= kMaxSweep && sel.samples >= space)) {
    if (space > kMaxSweep)
      fail(ErrorKind::SizeGuard, "coefficient space exceeds " + std::to_string(kMaxSweep) +
                                     " tuples; use sampling");
    std::vector<std::uint32_t> key(entries, lo);
    for (std::uint64_t idx = 0; idx < space; ++idx) {
      std::uint64_t r = idx;
      for (std::size_t i = entries; i-- > 0;) {
        key[i] = static_cast<std::uint32_t>(lo + r % radix);
        r /= radix;
      }
      admit(key);
    }
  } else {
    std::vector<std::uint32_t> zero(entries, 0);
    admit(zero);
    std::vector<FqMatrix> id;
    for (const auto& rep : sys.reps) id.push_back(identity_matrix(f, rep_dimension(sys.group, rep)));
    admit(encode(id));
    std::mt19937_64 rng(sel.seed);
    std::uniform_int_distribution<std::uint32_t> dist(lo, f.q() - 1);
    const std::uint64_t target = keys.size() + sel.samples;
    // Rejection for invertibility can stall on tiny fields; bound the draws.
    const std::uint64_t max_draws = 100 * (sel.samples + 1);
    for (std::uint64_t draw = 0; draw < max_draws && keys.size() < target; ++draw) {
      std::vector<std::uint32_t> key(entries);
      for (auto& k : key) k = dist(rng);
      admit(key);
    }
  }

  std::vector<std::vector<FqMatrix>> out;
  for (const auto& key : keys) out.push_back(decode(sys, key));
  return out;
}

bool within_bound(const ff::Magnitude& mag, double threshold) {
  return mag.magnitude <= threshold * (1.0 + 1e-9) + mag.error_bound;
}

VerifyReport verify_bound(const RepSystem& sys, const ff::Field& f, const Selection& sel,
                          int extension_cap) {
  validate(sys);
  if (!sys.group.has_matrix_model())
    fail(ErrorKind::NotEnumerable, "sums need a group with rational points");
  groups::group_order(sys.group, f.q());
  const auto br = rank_bound(sys);

  VerifyReport report;
  report.system = sys.group.describe();
  report.p = f.p();
  report.m = f.m();
  report.q = f.q();
  report.d = br.d;
  report.bound = br.bound;
  report.threshold = std::pow(std::sqrt(static_cast<double>(f.q())), br.d) * br.bound.get_d();
  report.extension_cap = nondegen::effective_extension_cap(sys.group, f, extension_cap);

  for (auto& A : coefficient_tuples(sys, f, sel)) {
    VerifyEntry e;
    e.counts = hyp_sum(sys, A, f);
    e.magnitude = ff::counts_eval(e.counts, f.p());
    e.status = nondegen::nondegen_status(sys, A, f, report.extension_cap);
    e.asserted = e.status.assertable();
    if (e.asserted) {
      e.pass = within_bound(e.magnitude, report.threshold);
      if (!e.pass) ++report.failures;
      if (report.threshold > 0) {
        const double ratio = e.magnitude.magnitude / report.threshold;
        if (!report.worst_ratio || ratio > *report.worst_ratio) report.worst_ratio = ratio;
      }
    }
    e.A = std::move(A);
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace hyp::sums
