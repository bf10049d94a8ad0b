// Deterministic module battery for the theorem suites. Everything is a pure
// function of the seed, so failing cases replay exactly.

#include "qea/homological.hpp"
#include "qea/prng.hpp"

namespace qea {
namespace {

Char random_char(const FieldCtx& ctx, Rng& rng) {
  Char chi;
  chi.c.resize(ctx.n());
  for (auto& c : chi.c) c = std::uint32_t(rng.below(ctx.ell()));
  return chi;
}

std::vector<ffelt> random_base_point(const FieldCtx& ctx, Rng& rng) {
  std::vector<ffelt> lam(ctx.n());
  for (;;) {
    bool nz = false;
    for (auto& l : lam) {
      l = ffelt(rng.below(ctx.p()));
      nz |= (l != 0);
    }
    if (nz) return lam;
  }
}

RModule quotient_rmodule(const RModule& M, const Mat& S) {
  RModule q{M.ctx, quotient_action(M.ctx.base(), M.X, S)};
#ifndef NDEBUG
  q.validate();
#endif
  return q;
}

RModule free_rank_one_r(const FieldCtx& ctx) {
  // R on the monomial basis X^a, a lex-ordered
  std::uint32_t n = ctx.n(), ell = ctx.ell();
  std::uint32_t d = std::uint32_t(ctx.group_order());
  std::vector<std::uint32_t> radix(n);
  std::uint32_t place = 1;
  for (std::uint32_t i = n; i-- > 0;) {
    radix[i] = place;
    place *= ell;
  }
  RModule R{ctx, {}};
  for (std::uint32_t i = 0; i < n; ++i) {
    Mat xm(ctx.base(), d, d);
    for (std::uint32_t a = 0; a < d; ++a)
      if (a / radix[i] % ell + 1 < ell) xm.at(a + radix[i], a) = 1;
    R.X.push_back(std::move(xm));
  }
  return R;
}

RModule random_r_quotient(const FieldCtx& ctx, Rng& rng) {
  RModule R = free_rank_one_r(ctx);
  std::uint32_t d = R.dim();
  std::uint32_t gens = 1 + std::uint32_t(rng.below(2));
  Mat seed(ctx.base(), d, gens);
  for (std::uint32_t j = 0; j < gens; ++j)
    for (std::uint32_t r = 1; r < d; ++r)  // radical vectors only: no X^0 component
      seed.at(r, j) = ffelt(rng.below(ctx.p()));
  Mat sub = invariant_closure(R.X, seed);
  return quotient_rmodule(R, sub);
}

struct GenState {
  const FieldCtx& ctx;
  Rng& rng;
  std::uint32_t budget;
  int tensor_left = 2;
};

ModuleRep gen_leaf(GenState& st) {
  const FieldCtx& ctx = st.ctx;
  switch (st.rng.below(6)) {
    case 0:
      return trivial_module(ctx);
    case 1:
      return simple_module(ctx, random_char(ctx, st.rng));
    case 2: {  // Carlson module A / A·τ_λ
      std::uint64_t cdim = ctx.algebra_dim() / ctx.ell();
      std::vector<ffelt> lam = random_base_point(ctx, st.rng);
      if (cdim > st.budget) break;
      Algebra A(ctx);
      return cyclic_quotient(ctx, A.tau(lam));
    }
    case 3: {  // Ω^s(k)
      std::uint32_t s = 1 + std::uint32_t(st.rng.below(2));
      ModuleRep m = trivial_module(ctx);
      for (std::uint32_t i = 0; i < s; ++i) {
        m = omega(m);
        if (m.dim() > st.budget) return simple_module(ctx, random_char(ctx, st.rng));
      }
      return m;
    }
    case 4: {
      if (ctx.group_order() > st.budget) break;
      return projective_indecomposable(ctx, random_char(ctx, st.rng));
    }
    case 5: {
      RModule q = random_r_quotient(ctx, st.rng);
      if (std::uint64_t(q.dim()) * ctx.group_order() > st.budget) break;
      return induce_R(q);
    }
  }
  return simple_module(ctx, random_char(ctx, st.rng));
}

std::optional<ModuleRep> gen_expr(GenState& st, int depth) {
  bool leaf = depth >= 2 || st.rng.below(100) < 55;
  if (leaf) return gen_leaf(st);
  switch (st.rng.below(3)) {
    case 0: {
      if (st.tensor_left <= 0) break;
      --st.tensor_left;
      auto a = gen_expr(st, depth + 1);
      auto b = gen_expr(st, depth + 1);
      if (!a || !b) return std::nullopt;
      if (std::uint64_t(a->dim()) * b->dim() > st.budget) return std::nullopt;
      return tensor(*a, *b);
    }
    case 1: {
      auto a = gen_expr(st, depth + 1);
      if (!a) return std::nullopt;
      return dual(*a);
    }
    case 2:
      break;
  }
  auto a = gen_expr(st, depth + 1);
  auto b = gen_expr(st, depth + 1);
  if (!a || !b) return std::nullopt;
  if (std::uint64_t(a->dim()) + b->dim() > st.budget) return std::nullopt;
  return dsum(*a, *b);
}

}  // namespace

ModuleRep random_module(const FieldCtx& ctx, std::uint64_t seed, std::uint32_t size_budget) {
  if (size_budget < 1) fail(ErrorKind::BudgetTooSmall, "size budget must be >= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Rng sub = rng.fork(std::uint64_t(attempt));
    GenState st{ctx, sub, size_budget};
    auto m = gen_expr(st, 0);
    if (m && m->dim() >= 1 && m->dim() <= size_budget) return *m;
  }
  fail(ErrorKind::BudgetTooSmall, "no module fits the size budget");
}

}  // namespace qea
