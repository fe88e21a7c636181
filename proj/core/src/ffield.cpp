#include "hyp/ffield.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hyp/error.hpp"

namespace hyp::ff {

namespace {

constexpr std::uint32_t kTableLimit = 1u << 20;

using Poly = std::vector<std::uint32_t>;  // coefficients over F_p, low to high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t f = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - f * m[i] % p) % p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(std::move(out), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin: f of degree m is irreducible iff x^{p^m} = x mod f and
// gcd(x^{p^{m/r}} - x, f) = 1 for every prime r | m.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  auto frob_iter = [&](std::size_t times) {
    Poly h{0, 1};
    for (std::size_t i = 0; i < times; ++i) h = poly_powmod(h, p, f, p);
    return h;
  };
  auto minus_x = [&](Poly h) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    return h;
  };
  if (!minus_x(frob_iter(m)).empty()) return false;
  for (auto r : prime_factors(m)) {
    Poly g = poly_gcd(f, minus_x(frob_iter(m / r)), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct Field::Tables {
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> exp;
};

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) fail(ErrorKind::Validation, "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldSize)
      fail(ErrorKind::SizeGuard, "field size " + std::to_string(p) + "^" + std::to_string(m) +
                                     " exceeds " + std::to_string(kMaxFieldSize));
  }
  q_ = static_cast<std::uint32_t>(q);

  // Lower coefficients enumerated as integers, i.e. lexicographic from the
  // top coefficient down.
  for (std::uint64_t code = 0; code < q; ++code) {
    Poly f(m + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }

  if (m > 1 && q_ <= kTableLimit) {
    auto t = std::make_shared<Tables>();
    const auto factors = prime_factors(q_ - 1);
    Elem gen{0};
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
      bool primitive = true;
      for (auto r : factors) {
        Elem x{1}, b{cand};
        std::uint64_t e = (q_ - 1) / r;
        while (e > 0) {
          if (e & 1) x = mul_slow(x, b);
          b = mul_slow(b, b);
          e >>= 1;
        }
        if (x.v == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        gen = Elem{cand};
        break;
      }
    }
    t->exp.resize(q_ - 1);
    t->log.assign(q_, 0);
    Elem x{1};
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
      t->exp[i] = x.v;
      t->log[x.v] = i;
      x = mul_slow(x, gen);
    }
    tables_ = std::move(t);
  }

  trace_basis_.resize(m_);
  Elem basis{1};
  for (std::uint32_t i = 0; i < m_; ++i) {
    Elem acc{0}, y = basis;
    for (std::uint32_t j = 0; j < m_; ++j) {
      acc = add(acc, y);
      y = pow(y, p_);
    }
    trace_basis_[i] = acc.v;  // lies in F_p
    basis = mul(basis, generator());
  }
}

Elem Field::generator() const {
  if (m_ == 1) return Elem{(p_ - modulus_[0]) % p_};
  return Elem{p_};
}

Elem Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_coeffs(std::span<const std::int64_t> coeffs) const {
  Elem acc{0}, power{1};
  for (auto c : coeffs) {
    acc = add(acc, mul(from_int(c), power));
    power = mul(power, generator());
  }
  return acc;
}

std::vector<std::uint32_t> Field::coeffs(Elem x) const {
  std::vector<std::uint32_t> out(m_);
  std::uint32_t v = x.v;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
  return out;
}

Elem Field::add(Elem a, Elem b) const {
  if (m_ == 1) {
    std::uint32_t s = a.v + b.v;
    return Elem{s >= p_ ? s - p_ : s};
  }
  if (p_ == 2) return Elem{a.v ^ b.v};
  std::uint32_t out = 0, place = 1, x = a.v, y = b.v;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    out += d * place;
    place *= p_;
    x /= p_;
    y /= p_;
  }
  return Elem{out};
}

Elem Field::neg(Elem a) const {
  if (m_ == 1) return Elem{a.v == 0 ? 0 : p_ - a.v};
  if (p_ == 2) return a;
  std::uint32_t out = 0, place = 1, x = a.v;
  for (std::uint32_t i = 0; i < m_; ++i) {
    std::uint32_t d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    x /= p_;
  }
  return Elem{out};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_slow(Elem a, Elem b) const {
  Poly pa = coeffs(a);
  Poly pb = coeffs(b);
  trim(pa);
  trim(pb);
  Poly r = poly_mulmod(pa, pb, modulus_, p_);
  std::uint32_t out = 0, place = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    out += r[i] * place;
    place *= p_;
  }
  return Elem{out};
}

Elem Field::mul(Elem a, Elem b) const {
  if (m_ == 1) return Elem{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
  if (a.v == 0 || b.v == 0) return Elem{0};
  if (tables_) {
    std::uint32_t s = tables_->log[a.v] + tables_->log[b.v];
    if (s >= q_ - 1) s -= q_ - 1;
    return Elem{tables_->exp[s]};
  }
  return mul_slow(a, b);
}

Elem Field::inv(Elem a) const {
  if (a.v == 0) fail(ErrorKind::Validation, "inverse of zero");
  if (m_ == 1) return Elem{inv_mod(a.v, p_)};
  if (tables_) {
    std::uint32_t l = tables_->log[a.v];
    return Elem{tables_->exp[l == 0 ? 0 : q_ - 1 - l]};
  }
  return pow(a, static_cast<std::int64_t>(q_) - 2);
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Elem result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint32_t Field::trace(Elem x) const {
  std::uint64_t acc = 0;
  std::uint32_t v = x.v;
  for (std::uint32_t i = 0; i < m_; ++i) {
    acc += static_cast<std::uint64_t>(v % p_) * trace_basis_[i];
    v /= p_;
  }
  return static_cast<std::uint32_t>(acc % p_);
}

Embedding::Embedding(const Field& small, const Field& big) {
  if (small.p() != big.p() || big.m() % small.m() != 0)
    fail(ErrorKind::Validation, "field is not a subfield of the target");
  if (big.m() == small.m()) {
    image_.resize(small.q());
    for (std::uint32_t i = 0; i < small.q(); ++i) image_[i] = Elem{i};
    return;
  }
  const auto& mod = small.modulus();
  Elem root{0};
  bool found = false;
  for (std::uint32_t i = 0; i < big.q() && !found; ++i) {
    Elem r{i}, acc{0}, power{1};
    for (auto c : mod) {
      acc = big.add(acc, big.mul(big.from_int(c), power));
      power = big.mul(power, r);
    }
    if (acc.v == 0) {
      root = r;
      found = true;
    }
  }
  if (!found) fail(ErrorKind::Validation, "no root of the subfield modulus in the target field");
  image_.resize(small.q());
  for (std::uint32_t i = 0; i < small.q(); ++i) {
    Elem acc{0}, power{1};
    for (auto c : small.coeffs(Elem{i})) {
      acc = big.add(acc, big.mul(big.from_int(c), power));
      power = big.mul(power, root);
    }
    image_[i] = acc;
  }
}

Dual DualRing::pow(Dual a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Dual result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

CharCounts& CharCounts::merge(const CharCounts& other) {
  if (counts.empty()) counts.assign(other.counts.size(), 0);
  if (other.counts.size() != counts.size())
    fail(ErrorKind::DimensionMismatch, "merging counts over different primes");
  for (std::size_t j = 0; j < counts.size(); ++j) counts[j] += other.counts[j];
  return *this;
}

std::uint64_t CharCounts::total() const {
  std::uint64_t s = 0;
  for (auto c : counts) s += c;
  return s;
}

Magnitude counts_eval(const CharCounts& c, std::uint32_t p) {
  if (c.counts.size() != p) fail(ErrorKind::DimensionMismatch, "counts length differs from p");
  // Pair j with p - j so conjugate terms share one cosine evaluation.
  double re = static_cast<double>(c.counts[0]);
  double im = 0.0;
  for (std::uint32_t j = 1; 2 * j <= p; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(p);
    const std::uint32_t k = p - j;
    if (j == k) {
      re -= static_cast<double>(c.counts[j]);
      continue;
    }
    const double plus = static_cast<double>(c.counts[j]) + static_cast<double>(c.counts[k]);
    const double minus = static_cast<double>(c.counts[j]) - static_cast<double>(c.counts[k]);
    re += plus * std::cos(angle);
    im += minus * std::sin(angle);
  }
  const double total = static_cast<double>(c.total());
  const double eps = std::numeric_limits<double>::epsilon();
  return Magnitude{std::hypot(re, im), 4.0 * (static_cast<double>(p) + 4.0) * eps * total};
}

}  // namespace hyp::ff
