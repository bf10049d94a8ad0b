#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qea/errors.hpp"

namespace qea {

// Element of F_{p^e}, stored as an index in [0, p^e): the base-p digits of
// the index are the coefficients of the residue polynomial, constant
// coefficient first. For e = 1 the index is the residue itself.
using ffelt = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// F_{p^e} with full addition/multiplication lookup tables.
///
/// Fields are immutable and cached per (p, e); the modulus polynomial for an
/// extension is the lexicographically least monic irreducible of degree e
/// (coefficients compared high degree first), so every run of the program
/// picks the same field representation.
class Field {
public:
  // Largest p^e for which tables are built. Beyond this the point scans are
  // infeasible anyway at desk scale.
  static constexpr std::uint32_t kMaxTableSize = 2048;

  static FieldPtr prime_field(std::uint32_t p);
  static FieldPtr extension_field(std::uint32_t p, std::uint32_t e);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint32_t size() const { return q_; }

  // Coefficients c_0..c_{e-1} of the monic modulus x^e + c_{e-1}x^{e-1} + ... + c_0.
  const std::vector<std::uint16_t>& minpoly() const { return minpoly_; }

  ffelt zero() const { return 0; }
  ffelt one() const { return 1; }

  ffelt add(ffelt a, ffelt b) const { return add_[std::size_t(a) * q_ + b]; }
  ffelt mul(ffelt a, ffelt b) const { return mul_[std::size_t(a) * q_ + b]; }
  ffelt neg(ffelt a) const { return neg_[a]; }
  ffelt sub(ffelt a, ffelt b) const { return add(a, neg(b)); }

  /// Multiplicative inverse; a must be nonzero.
  ffelt inv(ffelt a) const {
    if (a == 0) fail(ErrorKind::Singular, "inverse of zero field element");
    return inv_[a];
  }

  ffelt pow(ffelt a, std::uint64_t k) const;

  /// Embed a residue mod p (works for any e: the constant digit).
  ffelt from_residue(std::uint64_t r) const { return ffelt(r % p_); }

  /// i-th base-p digit of the index, i.e. the coefficient of x^i.
  std::uint32_t coeff(ffelt a, std::uint32_t i) const;

  // Raw table access for elimination/multiplication inner loops.
  const ffelt* add_table() const { return add_.data(); }
  const ffelt* mul_row(ffelt a) const { return &mul_[std::size_t(a) * q_]; }

  bool same_as(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }

private:
  Field(std::uint32_t p, std::uint32_t e);

  std::uint32_t p_, e_, q_;
  std::vector<std::uint16_t> minpoly_;
  std::vector<ffelt> add_, mul_, neg_, inv_;
};

/// Shared arithmetic context: F_p with a primitive ℓ-th root of unity q and
/// the number n of generator pairs, plus cached extension fields.
///
/// q is pinned to g^((p-1)/ℓ) for the smallest primitive root g of F_p and
/// extension moduli are pinned by Field, so programs are reproducible
/// bit-for-bit.
class FieldCtx {
public:
  static FieldCtx make(std::uint32_t p, std::uint32_t ell, std::uint32_t n);

  std::uint32_t p() const { return impl_->p; }
  std::uint32_t ell() const { return impl_->ell; }
  std::uint32_t n() const { return impl_->n; }
  ffelt q() const { return impl_->q; }
  std::uint32_t primitive_root() const { return impl_->g; }

  FieldPtr base() const { return impl_->base; }
  FieldPtr extension(std::uint32_t e) const;

  /// q^k as an F_p residue, k may be negative.
  ffelt q_pow(std::int64_t k) const;

  bool same_as(const FieldCtx& o) const {
    return p() == o.p() && ell() == o.ell() && n() == o.n();
  }

  /// ℓ^n (order of the group G).
  std::uint64_t group_order() const;
  /// ℓ^{2n} (dimension of the algebra A).
  std::uint64_t algebra_dim() const;

private:
  struct Impl {
    std::uint32_t p, ell, n, g;
    ffelt q;
    FieldPtr base;
    mutable std::map<std::uint32_t, FieldPtr> ext;
    mutable std::mutex mu;
  };
  std::shared_ptr<Impl> impl_;
};

bool is_prime(std::uint64_t m);

}  // namespace qea
