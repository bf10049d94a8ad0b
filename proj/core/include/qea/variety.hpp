#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "qea/homological.hpp"
#include "qea/module.hpp"

namespace qea {

/// Point of ℙ^{n-1}(F_{p^e}); coordinates not all zero, equality up to a
/// nonzero scalar. Normal form: first nonzero coordinate is 1.
struct PPoint {
  FieldPtr fld;
  std::vector<ffelt> coords;
};

PPoint normalized(const PPoint& pt);

/// g^b translate: coordinate i scaled by q^{b_i}.
PPoint translate(const FieldCtx& ctx, const PPoint& pt, const std::vector<std::uint32_t>& b);

/// Canonical representative of the G-orbit: lexicographically least normal
/// form among all ℓ^n translates.
PPoint orbit_canonical(const FieldCtx& ctx, const PPoint& pt);

/// All points of ℙ^{n-1}(F_{p^e}) in first-nonzero-coordinate-1 normal form,
/// each exactly once.
std::vector<PPoint> enumerate_points(const FieldCtx& ctx, std::uint32_t e);

/// Independent union-find-free orbit count used as an oracle against the
/// canonical-representative machinery.
std::uint64_t orbit_count_bruteforce(const FieldCtx& ctx, std::uint32_t e);

/// Rank variety as finite point samples: per extension degree, the sorted set
/// of canonical orbit representatives where the module fails to restrict
/// freely. Ψ-images reuse the container with plain (orbit-free) points.
struct VarietySet {
  std::map<std::uint32_t, std::set<std::vector<ffelt>>> degrees;

  bool operator==(const VarietySet& o) const { return degrees == o.degrees; }
  std::uint64_t total_points() const;
};

/// N_λ = Σ λ_i ρ_M(Y_i) over the field of λ. Satisfies N_λ^ℓ = 0.
Mat tau_matrix(const ModuleRep& M, const PPoint& lambda);

/// Freeness of M over the subalgebra generated by τ_λ(t): false when
/// ℓ ∤ dim M, else rank(N_λ^{ℓ-1}) == dim M / ℓ.
bool point_is_projective(const ModuleRep& M, const PPoint& lambda);

VarietySet rank_variety(const ModuleRep& M, const std::vector<std::uint32_t>& degrees,
                        int workers = 0);
VarietySet rank_variety_R(const RModule& M, const std::vector<std::uint32_t>& degrees,
                          int workers = 0);
VarietySet rank_variety_Rq(const RqModule& M, const std::vector<std::uint32_t>& degrees,
                           int workers = 0);

/// All orbits of ℙ^{n-1}(F_{p^e}) per degree: the variety of the trivial
/// module.
VarietySet full_orbit_set(const FieldCtx& ctx, const std::vector<std::uint32_t>& degrees);

/// Coordinatewise ℓ-th power of each orbit representative; constant on
/// G-orbits, so the output needs no further quotient.
VarietySet psi_image(const FieldCtx& ctx, const VarietySet& V);

/// Carlson-type point module A / A·τ_λ(t) for λ over F_p; its rank variety
/// is the single orbit of λ.
ModuleRep carlson_module(const FieldCtx& ctx, const std::vector<ffelt>& lambda);

/// Matrix of τ_{Δʳλ} on M ⊠ N as a module over A ⊗ A, with the generators
/// ordered X_1⊗1, 1⊗X_1, ..., g_1⊗1, 1⊗g_1, ...
Mat boxtensor_tau_matrix(const FieldCtx& ctx, const std::vector<ffelt>& lambda,
                         const ModuleRep& M, const ModuleRep& N);

/// τ_{Δʳλ} on M ⊠ N equals the coproduct action of τ_λ on M ⊗ N.
bool diagonal_check(const FieldCtx& ctx, const std::vector<ffelt>& lambda, const ModuleRep& M,
                    const ModuleRep& N);

bool variety_eq(const VarietySet& V, const VarietySet& W);
VarietySet variety_cap(const VarietySet& V, const VarietySet& W);
VarietySet variety_cup(const VarietySet& V, const VarietySet& W);
bool variety_subset(const VarietySet& V, const VarietySet& W);

}  // namespace qea
