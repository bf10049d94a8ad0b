#include "qea/field.hpp"

#include <algorithm>

namespace qea {
namespace {

using Poly = std::vector<std::uint32_t>;  // dense, coeff of x^i at index i

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t k, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (k) {
    if (k & 1) r = r * b % m;
    b = b * b % m;
    k >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      fs.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) fs.push_back(m);
  return fs;
}

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f * g mod (modulus, p); modulus is monic of degree e given by low coeffs.
Poly poly_mulmod(const Poly& f, const Poly& g, const std::vector<std::uint16_t>& mod_low,
                 std::uint32_t p) {
  std::uint32_t e = std::uint32_t(mod_low.size());
  if (f.empty() || g.empty()) return {};
  Poly prod(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i]) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      prod[i + j] = (prod[i + j] + std::uint64_t(f[i]) * g[j]) % p;
  }
  // reduce: x^e = -sum c_i x^i
  for (std::size_t d = prod.size(); d-- > e;) {
    std::uint32_t top = prod[d];
    if (!top) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < e; ++i) {
      std::uint64_t sub = std::uint64_t(top) * mod_low[i] % p;
      prod[d - e + i] = std::uint32_t((prod[d - e + i] + p - sub) % p);
    }
  }
  prod.resize(e);
  poly_trim(prod);
  return prod;
}

Poly poly_powmod(Poly base, std::uint64_t k, const std::vector<std::uint16_t>& mod_low,
                 std::uint32_t p) {
  Poly r = {1};
  while (k) {
    if (k & 1) r = poly_mulmod(r, base, mod_low, p);
    base = poly_mulmod(base, base, mod_low, p);
    k >>= 1;
  }
  return r;
}

Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  // g monic-normalized below
  Poly gg = g;
  poly_trim(gg);
  std::uint32_t lead_inv = std::uint32_t(pow_mod(gg.back(), p - 2, p));
  while (true) {
    poly_trim(f);
    if (f.size() < gg.size()) return f;
    std::uint64_t c = std::uint64_t(f.back()) * lead_inv % p;
    std::size_t shift = f.size() - gg.size();
    for (std::size_t i = 0; i < gg.size(); ++i)
      f[shift + i] = std::uint32_t((f[shift + i] + p - c * gg[i] % p) % p);
  }
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin irreducibility test for a monic degree-e polynomial given by its low
// coefficients (x^e implied).
bool is_irreducible(const std::vector<std::uint16_t>& low, std::uint32_t p) {
  std::uint32_t e = std::uint32_t(low.size());
  Poly full(e + 1, 0);
  for (std::uint32_t i = 0; i < e; ++i) full[i] = low[i];
  full[e] = 1;

  // x^{p^e} == x mod f
  Poly x = {0, 1};
  Poly xq = x;
  // compute x^{p^e} by e successive p-th powers
  for (std::uint32_t i = 0; i < e; ++i) xq = poly_powmod(xq, p, low, p);
  Poly diff = xq;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = (diff[1] + p - 1) % p;
  poly_trim(diff);
  if (!diff.empty()) return false;

  for (std::uint64_t r : prime_factors(e)) {
    Poly xr = x;
    for (std::uint32_t i = 0; i < e / r; ++i) xr = poly_powmod(xr, p, low, p);
    Poly d = xr;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    poly_trim(d);
    Poly g = poly_gcd(full, d, p);
    if (g.size() != 1) return false;  // nontrivial common factor
  }
  return true;
}

std::vector<std::uint16_t> least_irreducible(std::uint32_t p, std::uint32_t e) {
  if (e == 1) return {0};  // x itself
  // Enumerate (c_{e-1}, ..., c_0) in lexicographic order, high coefficient
  // most significant.
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < e; ++i) total *= p;
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<std::uint16_t> low(e);
    std::uint64_t t = k;
    for (std::uint32_t i = 0; i < e; ++i) {  // c_0 is the least significant digit
      low[i] = std::uint16_t(t % p);
      t /= p;
    }
    if (is_irreducible(low, p)) return low;
  }
  fail(ErrorKind::UnsupportedField, "no irreducible polynomial found");  // unreachable
}

struct FieldKey {
  std::uint32_t p, e;
  bool operator<(const FieldKey& o) const { return p < o.p || (p == o.p && e < o.e); }
};

std::map<FieldKey, FieldPtr>& field_cache() {
  static std::map<FieldKey, FieldPtr> cache;
  return cache;
}
std::mutex& field_cache_mu() {
  static std::mutex mu;
  return mu;
}

}  // namespace

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q *= p;
  if (q > kMaxTableSize)
    fail(ErrorKind::UnsupportedField,
         "field size " + std::to_string(q) + " exceeds table limit " +
             std::to_string(kMaxTableSize));
  q_ = std::uint32_t(q);
  minpoly_ = least_irreducible(p, e);

  add_.resize(std::size_t(q_) * q_);
  mul_.resize(std::size_t(q_) * q_);
  neg_.resize(q_);
  inv_.resize(q_, 0);

  // addition: digitwise mod p
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t na = 0, pw = 1, ta = a;
    for (std::uint32_t i = 0; i < e; ++i) {
      std::uint32_t d = ta % p;
      na += ((p - d) % p) * pw;
      ta /= p;
      pw *= p;
    }
    neg_[a] = ffelt(na);
    for (std::uint32_t b = 0; b < q_; ++b) {
      std::uint32_t s = 0;
      pw = 1;
      std::uint32_t x = a, y = b;
      for (std::uint32_t i = 0; i < e; ++i) {
        s += ((x % p) + (y % p)) % p * pw;
        x /= p;
        y /= p;
        pw *= p;
      }
      add_[std::size_t(a) * q_ + b] = ffelt(s);
    }
  }

  // multiplication: residue polynomials mod minpoly
  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly fa;
    std::uint32_t ta = a;
    for (std::uint32_t i = 0; i < e; ++i) {
      fa.push_back(ta % p);
      ta /= p;
    }
    poly_trim(fa);
    for (std::uint32_t b = a; b < q_; ++b) {
      Poly fb;
      std::uint32_t tb = b;
      for (std::uint32_t i = 0; i < e; ++i) {
        fb.push_back(tb % p);
        tb /= p;
      }
      poly_trim(fb);
      Poly prod = poly_mulmod(fa, fb, minpoly_, p);
      std::uint32_t idx = 0, pw = 1;
      for (std::size_t i = 0; i < prod.size(); ++i) {
        idx += prod[i] * pw;
        pw *= p;
      }
      mul_[std::size_t(a) * q_ + b] = ffelt(idx);
      mul_[std::size_t(b) * q_ + a] = ffelt(idx);
    }
  }

  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul_[std::size_t(a) * q_ + b] == 1) {
        inv_[a] = ffelt(b);
        break;
      }
}

ffelt Field::pow(ffelt a, std::uint64_t k) const {
  ffelt r = 1, b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

std::uint32_t Field::coeff(ffelt a, std::uint32_t i) const {
  std::uint32_t t = a;
  for (std::uint32_t j = 0; j < i; ++j) t /= p_;
  return t % p_;
}

FieldPtr Field::prime_field(std::uint32_t p) { return extension_field(p, 1); }

FieldPtr Field::extension_field(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) fail(ErrorKind::UnsupportedField, "extension degree must be >= 1");
  std::lock_guard<std::mutex> lock(field_cache_mu());
  auto& cache = field_cache();
  FieldKey key{p, e};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  FieldPtr f(new Field(p, e));
  cache.emplace(key, f);
  return f;
}

FieldCtx FieldCtx::make(std::uint32_t p, std::uint32_t ell, std::uint32_t n) {
  if (ell < 2) fail(ErrorKind::EllTooSmall, "ell must be >= 2, got " + std::to_string(ell));
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if ((p - 1) % ell != 0)
    fail(ErrorKind::BadCongruence,
         "p = " + std::to_string(p) + " is not congruent to 1 mod ell = " + std::to_string(ell));
  if (n < 1) fail(ErrorKind::ValidationFailure, "n must be >= 1");

  // smallest primitive root of F_p
  auto factors = prime_factors(p - 1);
  std::uint32_t g = 0;
  for (std::uint32_t c = 2; c < p; ++c) {
    bool ok = true;
    for (auto f : factors)
      if (pow_mod(c, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = c;
      break;
    }
  }
  ffelt q = ffelt(pow_mod(g, (p - 1) / ell, p));

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->ell = ell;
  impl->n = n;
  impl->g = g;
  impl->q = q;
  impl->base = Field::extension_field(p, 1);
  impl->ext.emplace(1u, impl->base);

  FieldCtx ctx;
  ctx.impl_ = impl;
  return ctx;
}

FieldPtr FieldCtx::extension(std::uint32_t e) const {
  if (e < 1) fail(ErrorKind::UnsupportedField, "extension degree must be >= 1");
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto it = impl_->ext.find(e);
  if (it != impl_->ext.end()) return it->second;
  FieldPtr f = Field::extension_field(impl_->p, e);
  impl_->ext.emplace(e, f);
  return f;
}

ffelt FieldCtx::q_pow(std::int64_t k) const {
  std::int64_t ell = impl_->ell;
  std::int64_t r = ((k % ell) + ell) % ell;
  return impl_->base->pow(impl_->q, std::uint64_t(r));
}

std::uint64_t FieldCtx::group_order() const {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < n(); ++i) r *= ell();
  return r;
}

std::uint64_t FieldCtx::algebra_dim() const {
  std::uint64_t go = group_order();
  return go * go;
}

}  // namespace qea
