#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qea/algebra.hpp"
#include "qea/matrix.hpp"

namespace qea {

/// Character of G = (ℤ/ℓℤ)^n: χ(g_i) = q^{c_i}.
struct Char {
  std::vector<std::uint32_t> c;  // length n, entries mod ℓ

  bool operator==(const Char& o) const { return c == o.c; }
};

/// Lexicographic index of a character (c_1 most significant); also the block
/// order used by every ⊕_χ decomposition.
std::uint32_t char_index(const FieldCtx& ctx, const Char& chi);
Char char_from_index(const FieldCtx& ctx, std::uint32_t idx);

/// Finite-dimensional A-module: matrices for the actions of X_1..X_n and
/// g_1..g_n over F_p. The defining relations
///   X_i X_j = X_j X_i,  X_i^ℓ = 0,  g_i^ℓ = I,  g_i g_j = g_j g_i,
///   g_i X_j g_i^{-1} = q^{δ_ij} X_j
/// are checked by checked(); functor outputs re-validate in debug builds.
class ModuleRep {
public:
  ModuleRep() = default;

  static ModuleRep checked(FieldCtx ctx, std::vector<Mat> X, std::vector<Mat> g);
  static ModuleRep trusted(FieldCtx ctx, std::vector<Mat> X, std::vector<Mat> g);

  const FieldCtx& ctx() const { return ctx_; }
  std::uint32_t dim() const { return dim_; }
  const Mat& X(std::uint32_t i) const { return X_[i]; }
  const Mat& g(std::uint32_t i) const { return g_[i]; }
  const std::vector<Mat>& X_all() const { return X_; }
  const std::vector<Mat>& g_all() const { return g_; }

  /// Throws ValidationFailure naming the violated relation.
  void validate() const;

private:
  FieldCtx ctx_;
  std::uint32_t dim_ = 0;
  std::vector<Mat> X_, g_;
};

/// Module over R = k[X_1..X_n]/(X_i^ℓ): commuting ℓ-nilpotent X matrices.
struct RModule {
  FieldCtx ctx;
  std::vector<Mat> X;

  std::uint32_t dim() const { return X.empty() ? 0 : X[0].rows(); }
  void validate() const;
};

/// Module over R_q = k<Y_1..Y_n>/(Y_jY_i - qY_iY_j, Y_i^ℓ): Y matrices with
/// Y_j Y_i = q Y_i Y_j for i < j.
struct RqModule {
  FieldCtx ctx;
  std::vector<Mat> Y;

  std::uint32_t dim() const { return Y.empty() ? 0 : Y[0].rows(); }
  void validate() const;
};

// ---- constructors ----

ModuleRep trivial_module(const FieldCtx& ctx);
ModuleRep simple_module(const FieldCtx& ctx, const Char& chi);
ModuleRep regular_rep(const FieldCtx& ctx);

/// P(χ) = A ⊗_{kG} k_χ on the basis {X^a ⊗ 1}: the projective cover of S_χ.
ModuleRep projective_indecomposable(const FieldCtx& ctx, const Char& chi);

/// A / A·u as a left module (quotient of the regular representation by the
/// image of right multiplication by u).
ModuleRep cyclic_quotient(const FieldCtx& ctx, const AlgebraElement& u);

// ---- functors ----

ModuleRep tensor(const ModuleRep& M, const ModuleRep& N);
ModuleRep dual(const ModuleRep& M);
ModuleRep dual_inv(const ModuleRep& M);
ModuleRep dsum(const ModuleRep& M, const ModuleRep& N);
RModule restrict_to_R(const ModuleRep& M);
RqModule restrict_to_Rq(const ModuleRep& M);
ModuleRep induce_R(const RModule& M);
ModuleRep induce_Rq(const RqModule& M);
RqModule twist_g(const RqModule& M, const std::vector<std::uint32_t>& b);

/// ρ_M(u) for an arbitrary algebra element.
Mat act(const ModuleRep& M, const AlgebraElement& u);

/// ρ(Y_i) = X_i g_1 ⋯ g_{i-1} as matrices.
std::vector<Mat> y_matrices(const ModuleRep& M);

/// Quotient of a list of action matrices by a common invariant subspace
/// (columns of S). Debug builds check invariance.
std::vector<Mat> quotient_action(const FieldPtr& f, const std::vector<Mat>& action, const Mat& S);

/// Quotient of M by an invariant subspace (columns of S).
ModuleRep quotient_module(const ModuleRep& M, const Mat& S);

/// Smallest subspace containing the columns of seed and closed under the
/// given action matrices; returned as a column basis.
Mat invariant_closure(const std::vector<Mat>& action, const Mat& seed);

/// Deterministic battery generator: modules drawn from a fixed grammar
/// (trivial, simples, Carlson modules, syzygies of k, projective
/// indecomposables, induced R-quotients, closed under tensor/dual/dsum),
/// truncated to dim ≤ size_budget.
ModuleRep random_module(const FieldCtx& ctx, std::uint64_t seed, std::uint32_t size_budget);

}  // namespace qea
