#pragma once

// Finite fields F_{p^m} with elements encoded as integers sum c_i p^i, where
// c_i are the coefficients of the residue polynomial in the generator.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace hyp::ff {

/// Field enumeration guard: p^m must not exceed this.
inline constexpr std::uint64_t kMaxFieldSize = 10'000'000;

struct Elem {
  std::uint32_t v = 0;

  auto operator<=>(const Elem&) const = default;
  bool operator==(const Elem&) const = default;
};

bool is_prime(std::uint64_t n);

class Field {
 public:
  using value_type = Elem;

  /// Lexicographically smallest monic irreducible modulus of degree m.
  /// Throws NotPrime, SizeGuard (p^m > kMaxFieldSize) or Validation (m = 0).
  Field(std::uint32_t p, std::uint32_t m);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  /// Coefficients low to high, length m + 1, leading 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  /// The class of the polynomial variable, a root of modulus().
  Elem generator() const;
  Elem element(std::uint64_t index) const { return Elem{static_cast<std::uint32_t>(index)}; }
  Elem from_int(std::int64_t n) const;
  /// Little-endian coefficients over the generator; each reduced mod p.
  Elem from_coeffs(std::span<const std::int64_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem x) const;
  bool in_prime_field(Elem x) const { return x.v < p_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws Validation on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// Negative exponents invert first.
  Elem pow(Elem a, std::int64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, p_); }

  /// Tr_{F_q/F_p}(x) as a residue in [0, p).
  std::uint32_t trace(Elem x) const;

 private:
  struct Tables;

  Elem mul_slow(Elem a, Elem b) const;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> trace_basis_;
  std::shared_ptr<const Tables> tables_;
};

inline Field make_field(std::uint32_t p, std::uint32_t m) { return Field(p, m); }

/// Embeds a field into an extension of it: maps the small field's generator
/// to a root of its modulus in the big field.
class Embedding {
 public:
  Embedding(const Field& small, const Field& big);
  Elem operator()(Elem x) const { return image_[x.v]; }

 private:
  std::vector<Elem> image_;
};

/// value + eps * deriv with eps^2 = 0.
struct Dual {
  Elem value;
  Elem deriv;

  bool operator==(const Dual&) const = default;
};

class DualRing {
 public:
  using value_type = Dual;

  explicit DualRing(const Field& f) : f_(&f) {}
  const Field& base() const { return *f_; }

  Dual zero() const { return {f_->zero(), f_->zero()}; }
  Dual one() const { return {f_->one(), f_->zero()}; }
  Dual from_int(std::int64_t n) const { return {f_->from_int(n), f_->zero()}; }
  Dual lift(Elem x) const { return {x, f_->zero()}; }
  Dual add(Dual a, Dual b) const { return {f_->add(a.value, b.value), f_->add(a.deriv, b.deriv)}; }
  Dual sub(Dual a, Dual b) const { return {f_->sub(a.value, b.value), f_->sub(a.deriv, b.deriv)}; }
  Dual neg(Dual a) const { return {f_->neg(a.value), f_->neg(a.deriv)}; }
  Dual mul(Dual a, Dual b) const {
    return {f_->mul(a.value, b.value),
            f_->add(f_->mul(a.value, b.deriv), f_->mul(a.deriv, b.value))};
  }
  /// (a + eps b)^-1 = a^-1 - eps b a^-2
  Dual inv(Dual a) const {
    Elem ai = f_->inv(a.value);
    return {ai, f_->neg(f_->mul(a.deriv, f_->mul(ai, ai)))};
  }
  Dual pow(Dual a, std::int64_t e) const;

 private:
  const Field* f_;
};

/// c_j = number of summation points whose trace value is j; the sum is
/// then sum_j c_j zeta_p^j exactly.
struct CharCounts {
  std::vector<std::uint64_t> counts;

  CharCounts() = default;
  explicit CharCounts(std::uint32_t p) : counts(p, 0) {}

  void add(std::uint32_t residue, std::uint64_t n = 1) { counts[residue] += n; }
  CharCounts& merge(const CharCounts& other);
  std::uint64_t total() const;
  bool operator==(const CharCounts&) const = default;
};

struct Magnitude {
  double magnitude = 0.0;
  /// Conservative bound on the rounding error of `magnitude`.
  double error_bound = 0.0;
};

/// |sum_j c_j exp(2 pi i j / p)| in double precision.
Magnitude counts_eval(const CharCounts& c, std::uint32_t p);

}  // namespace hyp::ff
