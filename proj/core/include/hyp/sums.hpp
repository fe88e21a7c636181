#pragma once

// Hyp(A) = sum_{g in G(F_q)} psi(sum_j Tr(A_j rho_j(g))) with
// psi(x) = zeta_p^{Tr_{F_q/F_p}(x)}, kept as exact residue counts, and the
// harness that checks |Hyp(A)| <= q^{d/2} * bound.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyp/ffield.hpp"
#include "hyp/linalg.hpp"
#include "hyp/nondegen.hpp"
#include "hyp/system.hpp"

namespace hyp::sums {

/// Largest coefficient space accepted by an exhaustive sweep.
inline constexpr std::uint64_t kMaxSweep = 1'000'000;

/// Exact counts over G(F_q). threads = 0 picks the hardware concurrency;
/// the result does not depend on it.
ff::CharCounts hyp_sum(const RepSystem& sys, const std::vector<FqMatrix>& A, const ff::Field& f,
                       unsigned threads = 0);

struct Selection {
  enum class Mode { All, Sample };
  Mode mode = Mode::All;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  /// Keep only tuples whose matrices are all invertible.
  bool invertible_only = false;

  static Selection all(bool invertible = false) { return {Mode::All, 0, 0, invertible}; }
  static Selection sample(std::uint64_t n, std::uint64_t seed, bool invertible = false) {
    return {Mode::Sample, n, seed, invertible};
  }
};

/// The coefficient tuples a selection denotes, in canonical order (sorted by
/// the row-major entry encoding). Entries of one-variable characters on a
/// torus range over F_q^*; all other entries over F_q. Samples are seeded,
/// distinct and always contain the anchors A = 0 and A = identity (subject
/// to invertible_only). Throws SizeGuard for sweeps over kMaxSweep tuples.
std::vector<std::vector<FqMatrix>> coefficient_tuples(const RepSystem& sys, const ff::Field& f,
                                                      const Selection& sel);

struct VerifyEntry {
  std::vector<FqMatrix> A;
  ff::CharCounts counts;
  ff::Magnitude magnitude;
  nondegen::NondegenStatus status;
  bool asserted = false;
  bool pass = true;
};

struct VerifyReport {
  std::string system;
  std::uint32_t p = 0;
  std::uint32_t m = 1;
  std::uint64_t q = 0;
  int d = 0;
  Rational bound;
  double threshold = 0.0;  // q^{d/2} * bound
  int extension_cap = 0;   // effective cap used by the witness search
  std::vector<VerifyEntry> entries;
  /// max magnitude / threshold over asserted entries; empty when the
  /// threshold is 0 or nothing was asserted.
  std::optional<double> worst_ratio;
  std::size_t failures = 0;
};

/// Whether a magnitude satisfies the bound, allowing the rounding error.
bool within_bound(const ff::Magnitude& mag, double threshold);

VerifyReport verify_bound(const RepSystem& sys, const ff::Field& f, const Selection& sel,
                          int extension_cap = 2);

}  // namespace hyp::sums
