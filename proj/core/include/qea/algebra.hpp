#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qea/field.hpp"

namespace qea {

/// Element of A in the PBW basis {X^a g^b}: sparse map from basis index to a
/// nonzero coefficient in F_p. Basis indices order the exponent tuple
/// (a_1..a_n, b_1..b_n) lexicographically, a_1 most significant.
struct AlgebraElement {
  FieldCtx ctx;
  std::map<std::uint32_t, ffelt> terms;
};

/// Element of A ⊗ A: key is left_index * dim(A) + right_index.
struct TensorElement {
  FieldCtx ctx;
  std::map<std::uint64_t, ffelt> terms;
};

enum class AntipodeSign {
  kAxiom,         // S(g_i) = g_i^{-1}, forced by S(g)g = ε(g)1
  kNegatedInverse,  // S(g_i) = -g_i^{-1}; violates the axiom, kept for the
                  // documentation suite
};

/// The algebra A = k[X_1..X_n]/(X_i^ℓ) ⋊ (ℤ/ℓℤ)^n for a fixed context,
/// with its Hopf structure. All operations are pure.
class Algebra {
public:
  explicit Algebra(FieldCtx ctx);

  const FieldCtx& ctx() const { return ctx_; }
  std::uint32_t n() const { return ctx_.n(); }
  std::uint32_t ell() const { return ctx_.ell(); }
  std::uint32_t dim() const { return dim_; }

  // Monomial codec. exponents are length-n vectors with entries in [0, ℓ).
  std::uint32_t mono_index(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b) const;
  void mono_decode(std::uint32_t idx, std::vector<std::uint32_t>& a,
                   std::vector<std::uint32_t>& b) const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement x_gen(std::uint32_t i) const;  // 0-based
  AlgebraElement g_gen(std::uint32_t i) const;
  AlgebraElement g_inv(std::uint32_t i) const;

  /// Y_i = X_i g_1 ⋯ g_{i-1} (0-based: Y_0 = X_0).
  AlgebraElement y_element(std::uint32_t i) const;

  /// τ_λ(t) = Σ λ_i Y_i for λ over F_p, not all zero.
  AlgebraElement tau(const std::vector<ffelt>& lambda) const;

  AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v) const;
  AlgebraElement scale(const AlgebraElement& u, ffelt c) const;
  AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) const;
  AlgebraElement power(const AlgebraElement& u, std::uint32_t k) const;

  ffelt counit(const AlgebraElement& u) const;
  TensorElement coproduct(const AlgebraElement& u) const;
  AlgebraElement antipode(const AlgebraElement& u,
                          AntipodeSign sign = AntipodeSign::kAxiom) const;
  AlgebraElement antipode_inv(const AlgebraElement& u) const;

  TensorElement tensor_zero() const;
  TensorElement tensor_of(const AlgebraElement& u, const AlgebraElement& v) const;
  TensorElement tensor_add(const TensorElement& s, const TensorElement& t) const;
  TensorElement tensor_scale(const TensorElement& s, ffelt c) const;
  TensorElement tensor_multiply(const TensorElement& s, const TensorElement& t) const;

  bool equal(const AlgebraElement& u, const AlgebraElement& v) const;

private:
  // product of two basis monomials: q^{<b,c>} X^{a+c} g^{b+d}, or zero on
  // X-exponent overflow
  bool mono_mul(std::uint32_t m1, std::uint32_t m2, std::uint32_t& out, ffelt& coeff) const;

  void add_term(std::map<std::uint32_t, ffelt>& terms, std::uint32_t idx, ffelt c) const;

  FieldCtx ctx_;
  std::uint32_t dim_;
  std::vector<std::uint32_t> radix_;  // place values for the 2n digits
};

}  // namespace qea
