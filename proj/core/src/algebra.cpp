#include "qea/algebra.hpp"

namespace qea {

Algebra::Algebra(FieldCtx ctx) : ctx_(std::move(ctx)) {
  std::uint32_t n = ctx_.n(), ell = ctx_.ell();
  radix_.resize(2 * n);
  std::uint64_t place = 1;
  for (std::uint32_t d = 2 * n; d-- > 0;) {
    radix_[d] = std::uint32_t(place);
    place *= ell;
  }
  if (place > (1ull << 31))
    fail(ErrorKind::UnsupportedField, "algebra dimension ell^(2n) too large");
  dim_ = std::uint32_t(place);
}

std::uint32_t Algebra::mono_index(const std::vector<std::uint32_t>& a,
                                  const std::vector<std::uint32_t>& b) const {
  std::uint32_t n = ctx_.n(), idx = 0;
  for (std::uint32_t i = 0; i < n; ++i) idx += a[i] * radix_[i];
  for (std::uint32_t i = 0; i < n; ++i) idx += b[i] * radix_[n + i];
  return idx;
}

void Algebra::mono_decode(std::uint32_t idx, std::vector<std::uint32_t>& a,
                          std::vector<std::uint32_t>& b) const {
  std::uint32_t n = ctx_.n(), ell = ctx_.ell();
  a.assign(n, 0);
  b.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    a[i] = idx / radix_[i] % ell;
    b[i] = idx / radix_[n + i] % ell;
  }
}

AlgebraElement Algebra::zero() const { return AlgebraElement{ctx_, {}}; }

AlgebraElement Algebra::one() const { return AlgebraElement{ctx_, {{0, 1}}}; }

AlgebraElement Algebra::x_gen(std::uint32_t i) const {
  if (i >= ctx_.n()) fail(ErrorKind::IndexOutOfRange, "generator index");
  return AlgebraElement{ctx_, {{radix_[i], 1}}};
}

AlgebraElement Algebra::g_gen(std::uint32_t i) const {
  if (i >= ctx_.n()) fail(ErrorKind::IndexOutOfRange, "generator index");
  return AlgebraElement{ctx_, {{radix_[ctx_.n() + i], 1}}};
}

AlgebraElement Algebra::g_inv(std::uint32_t i) const {
  if (i >= ctx_.n()) fail(ErrorKind::IndexOutOfRange, "generator index");
  return AlgebraElement{ctx_, {{radix_[ctx_.n() + i] * (ctx_.ell() - 1), 1}}};
}

AlgebraElement Algebra::y_element(std::uint32_t i) const {
  if (i >= ctx_.n()) fail(ErrorKind::IndexOutOfRange, "y_element index");
  AlgebraElement y = x_gen(i);
  for (std::uint32_t j = 0; j < i; ++j) y = multiply(y, g_gen(j));
  return y;
}

AlgebraElement Algebra::tau(const std::vector<ffelt>& lambda) const {
  if (lambda.size() != ctx_.n()) fail(ErrorKind::IndexOutOfRange, "tau: expected n coordinates");
  AlgebraElement t = zero();
  bool nonzero = false;
  for (std::uint32_t i = 0; i < ctx_.n(); ++i) {
    if (lambda[i] == 0) continue;
    nonzero = true;
    t = add(t, scale(y_element(i), lambda[i]));
  }
  if (!nonzero) fail(ErrorKind::ZeroPoint, "tau of the zero tuple");
  return t;
}

void Algebra::add_term(std::map<std::uint32_t, ffelt>& terms, std::uint32_t idx, ffelt c) const {
  if (c == 0) return;
  auto it = terms.find(idx);
  if (it == terms.end()) {
    terms.emplace(idx, c);
    return;
  }
  ffelt s = ctx_.base()->add(it->second, c);
  if (s == 0)
    terms.erase(it);
  else
    it->second = s;
}

AlgebraElement Algebra::add(const AlgebraElement& u, const AlgebraElement& v) const {
  if (!u.ctx.same_as(v.ctx)) fail(ErrorKind::ContextMismatch, "algebra elements from different contexts");
  AlgebraElement r = u;
  for (auto& [idx, c] : v.terms) add_term(r.terms, idx, c);
  return r;
}

AlgebraElement Algebra::scale(const AlgebraElement& u, ffelt c) const {
  AlgebraElement r{u.ctx, {}};
  if (c == 0) return r;
  for (auto& [idx, v] : u.terms) {
    ffelt w = ctx_.base()->mul(v, c);
    if (w) r.terms.emplace(idx, w);
  }
  return r;
}

bool Algebra::mono_mul(std::uint32_t m1, std::uint32_t m2, std::uint32_t& out,
                       ffelt& coeff) const {
  std::uint32_t n = ctx_.n(), ell = ctx_.ell();
  std::uint32_t idx = 0;
  std::int64_t qexp = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t a = m1 / radix_[i] % ell;
    std::uint32_t c = m2 / radix_[i] % ell;
    if (a + c >= ell) return false;  // X_i^ℓ = 0
    idx += (a + c) * radix_[i];
    std::uint32_t b = m1 / radix_[n + i] % ell;
    std::uint32_t d = m2 / radix_[n + i] % ell;
    idx += (b + d) % ell * radix_[n + i];  // g_i^ℓ = 1
    qexp += std::int64_t(b) * c;           // g^b X^c = q^{<b,c>} X^c g^b
  }
  out = idx;
  coeff = ctx_.q_pow(qexp);
  return true;
}

AlgebraElement Algebra::multiply(const AlgebraElement& u, const AlgebraElement& v) const {
  if (!u.ctx.same_as(v.ctx)) fail(ErrorKind::ContextMismatch, "algebra elements from different contexts");
  AlgebraElement r{ctx_, {}};
  const Field& f = *ctx_.base();
  for (auto& [m1, c1] : u.terms)
    for (auto& [m2, c2] : v.terms) {
      std::uint32_t out;
      ffelt q;
      if (!mono_mul(m1, m2, out, q)) continue;
      add_term(r.terms, out, f.mul(f.mul(c1, c2), q));
    }
  return r;
}

AlgebraElement Algebra::power(const AlgebraElement& u, std::uint32_t k) const {
  AlgebraElement r = one();
  for (std::uint32_t i = 0; i < k; ++i) r = multiply(r, u);
  return r;
}

ffelt Algebra::counit(const AlgebraElement& u) const {
  // ε kills every X_i and sends g_i to 1: only monomials with a = 0 survive
  std::uint32_t n = ctx_.n(), ell = ctx_.ell();
  ffelt s = 0;
  const Field& f = *ctx_.base();
  for (auto& [idx, c] : u.terms) {
    bool pure_g = true;
    for (std::uint32_t i = 0; i < n; ++i)
      if (idx / radix_[i] % ell) {
        pure_g = false;
        break;
      }
    if (pure_g) s = f.add(s, c);
  }
  return s;
}

TensorElement Algebra::tensor_zero() const { return TensorElement{ctx_, {}}; }

TensorElement Algebra::tensor_of(const AlgebraElement& u, const AlgebraElement& v) const {
  TensorElement r{ctx_, {}};
  const Field& f = *ctx_.base();
  for (auto& [m1, c1] : u.terms)
    for (auto& [m2, c2] : v.terms) {
      ffelt c = f.mul(c1, c2);
      if (c) r.terms.emplace(std::uint64_t(m1) * dim_ + m2, c);
    }
  return r;
}

TensorElement Algebra::tensor_add(const TensorElement& s, const TensorElement& t) const {
  TensorElement r = s;
  const Field& f = *ctx_.base();
  for (auto& [idx, c] : t.terms) {
    auto it = r.terms.find(idx);
    if (it == r.terms.end()) {
      r.terms.emplace(idx, c);
      continue;
    }
    ffelt v = f.add(it->second, c);
    if (v == 0)
      r.terms.erase(it);
    else
      it->second = v;
  }
  return r;
}

TensorElement Algebra::tensor_scale(const TensorElement& s, ffelt c) const {
  TensorElement r{ctx_, {}};
  if (c == 0) return r;
  const Field& f = *ctx_.base();
  for (auto& [idx, v] : s.terms) {
    ffelt w = f.mul(v, c);
    if (w) r.terms.emplace(idx, w);
  }
  return r;
}

TensorElement Algebra::tensor_multiply(const TensorElement& s, const TensorElement& t) const {
  // componentwise algebra structure on A ⊗ A
  TensorElement r{ctx_, {}};
  const Field& f = *ctx_.base();
  for (auto& [i1, c1] : s.terms) {
    std::uint32_t l1 = std::uint32_t(i1 / dim_), r1 = std::uint32_t(i1 % dim_);
    for (auto& [i2, c2] : t.terms) {
      std::uint32_t l2 = std::uint32_t(i2 / dim_), r2 = std::uint32_t(i2 % dim_);
      std::uint32_t lo, ro;
      ffelt ql, qr;
      if (!mono_mul(l1, l2, lo, ql)) continue;
      if (!mono_mul(r1, r2, ro, qr)) continue;
      ffelt c = f.mul(f.mul(c1, c2), f.mul(ql, qr));
      if (!c) continue;
      std::uint64_t key = std::uint64_t(lo) * dim_ + ro;
      auto it = r.terms.find(key);
      if (it == r.terms.end()) {
        r.terms.emplace(key, c);
      } else {
        ffelt v = f.add(it->second, c);
        if (v == 0)
          r.terms.erase(it);
        else
          it->second = v;
      }
    }
  }
  return r;
}

TensorElement Algebra::coproduct(const AlgebraElement& u) const {
  // Δ is an algebra map; on a basis monomial it is the ordered product
  // Δ(X_1)^{a_1} ⋯ Δ(X_n)^{a_n} Δ(g_1)^{b_1} ⋯ Δ(g_n)^{b_n}
  std::uint32_t n = ctx_.n(), ell = ctx_.ell();
  TensorElement res = tensor_zero();
  std::vector<std::uint32_t> a, b;
  for (auto& [idx, c] : u.terms) {
    mono_decode(idx, a, b);
    TensorElement acc{ctx_, {{0, 1}}};  // 1 ⊗ 1
    for (std::uint32_t i = 0; i < n; ++i) {
      TensorElement dx = tensor_add(tensor_of(x_gen(i), one()), tensor_of(g_gen(i), x_gen(i)));
      for (std::uint32_t k = 0; k < a[i]; ++k) acc = tensor_multiply(acc, dx);
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!b[i]) continue;
      TensorElement dg = tensor_of(g_gen(i), g_gen(i));
      for (std::uint32_t k = 0; k < b[i] % ell; ++k) acc = tensor_multiply(acc, dg);
    }
    res = tensor_add(res, tensor_scale(acc, c));
  }
  return res;
}

AlgebraElement Algebra::antipode(const AlgebraElement& u, AntipodeSign sign) const {
  // anti-algebra map: S(X^a g^b) = S(g_n)^{b_n} ⋯ S(g_1)^{b_1} S(X_n)^{a_n} ⋯ S(X_1)^{a_1}
  std::uint32_t n = ctx_.n();
  const Field& f = *ctx_.base();
  AlgebraElement res = zero();
  std::vector<std::uint32_t> a, b;
  for (auto& [idx, c] : u.terms) {
    mono_decode(idx, a, b);
    AlgebraElement acc = one();
    for (std::uint32_t i = n; i-- > 0;) {
      if (!b[i]) continue;
      AlgebraElement sg = g_inv(i);
      if (sign == AntipodeSign::kNegatedInverse) sg = scale(sg, f.neg(1));
      for (std::uint32_t k = 0; k < b[i]; ++k) acc = multiply(acc, sg);
    }
    for (std::uint32_t i = n; i-- > 0;) {
      if (!a[i]) continue;
      AlgebraElement sx = scale(multiply(g_inv(i), x_gen(i)), f.neg(1));  // -g_i^{-1} X_i
      for (std::uint32_t k = 0; k < a[i]; ++k) acc = multiply(acc, sx);
    }
    res = add(res, scale(acc, c));
  }
  return res;
}

AlgebraElement Algebra::antipode_inv(const AlgebraElement& u) const {
  // S^{-1}(g_i) = g_i^{-1}, S^{-1}(X_i) = -q g_i^{-1} X_i, again anti-multiplicative
  std::uint32_t n = ctx_.n();
  const Field& f = *ctx_.base();
  AlgebraElement res = zero();
  std::vector<std::uint32_t> a, b;
  for (auto& [idx, c] : u.terms) {
    mono_decode(idx, a, b);
    AlgebraElement acc = one();
    for (std::uint32_t i = n; i-- > 0;) {
      if (!b[i]) continue;
      AlgebraElement sg = g_inv(i);
      for (std::uint32_t k = 0; k < b[i]; ++k) acc = multiply(acc, sg);
    }
    for (std::uint32_t i = n; i-- > 0;) {
      if (!a[i]) continue;
      AlgebraElement sx = scale(multiply(g_inv(i), x_gen(i)), f.neg(ctx_.q()));
      for (std::uint32_t k = 0; k < a[i]; ++k) acc = multiply(acc, sx);
    }
    res = add(res, scale(acc, c));
  }
  return res;
}

bool Algebra::equal(const AlgebraElement& u, const AlgebraElement& v) const {
  return u.terms == v.terms;
}

}  // namespace qea
