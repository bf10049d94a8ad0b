#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qea/module.hpp"

namespace qea {

/// Simultaneous eigenbasis for the commuting diagonalizable g-action.
/// Columns of P are grouped by character in lex order; weight[j] is the
/// character index of column j.
struct WeightBasis {
  Mat P, Pinv;
  std::vector<std::uint32_t> weight;
};

WeightBasis weight_decompose(const FieldCtx& ctx, const std::vector<Mat>& g);

/// Basis of Hom_A(M, N): each matrix T (dim N × dim M) satisfies
/// T ρ_M(u) = ρ_N(u) T for all generators u.
struct HomSpace {
  std::vector<Mat> basis;
};

HomSpace hom_space(const ModuleRep& M, const ModuleRep& N);

enum class IsoVerdict { kIsomorphic, kNotIsomorphic, kUndetermined };

struct IsoResult {
  IsoVerdict verdict;
  std::optional<Mat> witness;  // invertible intertwiner when kIsomorphic
};

/// Randomized isomorphism test: NotIsomorphic when dims differ or the hom
/// space is zero; otherwise samples `trials` random hom-space elements
/// (coefficients over an extension of F_p large enough for Schwartz-Zippel
/// to bite) and reports the first invertible one. Never coerces
/// kUndetermined into a verdict.
IsoResult is_isomorphic(const ModuleRep& M, const ModuleRep& N, std::uint32_t trials = 8,
                        std::uint64_t seed = 0);

/// Column basis of rad M = Σ X_i M.
Mat radical_basis(const ModuleRep& M);

/// Multiplicity of each simple S_χ in M / rad M, keyed by character index.
std::map<std::uint32_t, std::uint32_t> head_decompose(const ModuleRep& M);

/// Projectivity over A via freeness over the local ring R:
/// dim M == ℓ^n · dim(M / rad M).
bool is_projective(const ModuleRep& M);

struct CoverData {
  ModuleRep cover;     // ⊕_χ P(χ)^{m_χ}
  Mat surjection;      // dim M × dim cover, A-linear and surjective
  ModuleRep kernel;    // Ω M with the restricted action
  Mat kernel_embed;    // dim cover × dim Ω M, columns a basis of ker(surjection)
};

CoverData projective_cover(const ModuleRep& M);

ModuleRep omega(const ModuleRep& M);
ModuleRep omega_inv(const ModuleRep& M);

/// Ω^{-1}Ω M: M with its projective direct summands stripped.
ModuleRep stable_reduce(const ModuleRep& M);

}  // namespace qea
