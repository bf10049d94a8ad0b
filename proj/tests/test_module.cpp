#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qea/homological.hpp"
#include "qea/module.hpp"
#include "qea/prng.hpp"

using namespace qea;

namespace {

Char chi_of(std::initializer_list<std::uint32_t> cs) {
  Char chi;
  chi.c.assign(cs);
  return chi;
}

// R as a free rank-1 module over itself, basis X^a in lex order
RModule free_r(const FieldCtx& ctx) {
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

}  // namespace

TEST_CASE("trivial and simple modules") {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  ModuleRep k = trivial_module(ctx);
  CHECK(k.dim() == 1);
  CHECK(k.X(0).is_zero());
  CHECK(k.g(0).at(0, 0) == 1);

  ModuleRep s = simple_module(ctx, chi_of({1, 0}));
  CHECK(s.g(0).at(0, 0) == ctx.q());
  CHECK(s.g(1).at(0, 0) == 1);
  s.validate();

  // dual(simple(chi)) = simple(-chi), dual(trivial) = trivial
  ModuleRep d = dual(s);
  ModuleRep expect = simple_module(ctx, chi_of({2, 0}));
  CHECK(d.g(0) == expect.g(0));
  CHECK(d.g(1) == expect.g(1));
  CHECK(d.X(0).is_zero());
  ModuleRep dk = dual(k);
  CHECK(dk.g(0) == k.g(0));
  CHECK(dk.X(0) == k.X(0));
}

TEST_CASE("validation names the violated relation") {
  FieldCtx ctx = FieldCtx::make(5, 2, 1);
  Mat x(ctx.base(), 1, 1), g(ctx.base(), 1, 1);
  x.at(0, 0) = 1;  // X^2 = 1 != 0
  g.at(0, 0) = 1;
  CHECK_THROWS_WITH_AS(ModuleRep::checked(ctx, {x}, {g}), "ValidationFailure: X[0]^ell != 0",
                       Error);
}

TEST_CASE("regular representation") {
  FieldCtx c1 = FieldCtx::make(5, 2, 1);
  CHECK(regular_rep(c1).dim() == 4);

  FieldCtx c2 = FieldCtx::make(7, 3, 2);
  ModuleRep reg = regular_rep(c2);
  CHECK(reg.dim() == 81);
  reg.validate();

  // X_1 on the regular module is nilpotent of index exactly ell
  Mat x2 = reg.X(0).pow(2);
  CHECK(!x2.is_zero());
  CHECK((x2 * reg.X(0)).is_zero());
}

TEST_CASE("tensor of simples adds characters, trivial is the unit") {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  ModuleRep a = simple_module(ctx, chi_of({1, 2}));
  ModuleRep b = simple_module(ctx, chi_of({2, 2}));
  ModuleRep t = tensor(a, b);
  ModuleRep expect = simple_module(ctx, chi_of({0, 1}));
  for (std::uint32_t i = 0; i < 2; ++i) {
    CHECK(t.g(i) == expect.g(i));
    CHECK(t.X(i) == expect.X(i));
  }

  ModuleRep m = regular_rep(FieldCtx::make(5, 2, 1));
  ModuleRep tm = tensor(trivial_module(m.ctx()), m);
  for (std::uint32_t i = 0; i < 1; ++i) {
    CHECK(tm.X(i) == m.X(i));
    CHECK(tm.g(i) == m.g(i));
  }
}

TEST_CASE("tensor is strictly associative at the matrix level") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  Rng rng(11);
  ModuleRep M = random_module(ctx, rng.next(), 6);
  ModuleRep N = random_module(ctx, rng.next(), 6);
  ModuleRep P = random_module(ctx, rng.next(), 6);
  ModuleRep l = tensor(tensor(M, N), P);
  ModuleRep r = tensor(M, tensor(N, P));
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    CHECK(l.X(i) == r.X(i));
    CHECK(l.g(i) == r.g(i));
  }
}

TEST_CASE("double dual is conjugation by the product of the g inverses") {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  ModuleRep M = random_module(ctx, 5, 12);
  ModuleRep dd = dual(dual(M));
  Mat T = (M.g(0) * M.g(1)).pow(ctx.ell() - 1);  // rho((g_1 g_2)^{-1})
  REQUIRE(T.try_inverse().has_value());
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    CHECK(T * M.X(i) == dd.X(i) * T);
    CHECK(T * M.g(i) == dd.g(i) * T);
  }
}

TEST_CASE("the two dual conventions give isomorphic modules") {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  Rng rng(53);
  for (int k = 0; k < 4; ++k) {
    ModuleRep M = random_module(ctx, rng.next(), 12);
    CHECK(is_isomorphic(dual(M), dual_inv(M), 32, 6).verdict == IsoVerdict::kIsomorphic);
  }
}

TEST_CASE("dual reverses tensor products via the swap witness") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  Rng rng(23);
  ModuleRep M = random_module(ctx, rng.next(), 8);
  ModuleRep N = random_module(ctx, rng.next(), 8);
  ModuleRep lhs = dual(tensor(M, N));
  ModuleRep rhs = tensor(dual(N), dual(M));
  // basis change (m_i x n_j)* -> n_j* x m_i*
  Mat T(ctx.base(), N.dim() * M.dim(), M.dim() * N.dim());
  for (std::uint32_t i = 0; i < M.dim(); ++i)
    for (std::uint32_t j = 0; j < N.dim(); ++j) T.at(j * M.dim() + i, i * N.dim() + j) = 1;
  for (std::uint32_t k = 0; k < ctx.n(); ++k) {
    CHECK(T * lhs.X(k) == rhs.X(k) * T);
    CHECK(T * lhs.g(k) == rhs.g(k) * T);
  }
}

TEST_CASE("direct sum adds dimensions and restrictions validate") {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  ModuleRep M = random_module(ctx, 3, 10);
  ModuleRep N = random_module(ctx, 4, 10);
  CHECK(dsum(M, N).dim() == M.dim() + N.dim());

  RModule r = restrict_to_R(M);
  r.validate();
  RqModule rq = restrict_to_Rq(regular_rep(FieldCtx::make(5, 2, 2)));
  rq.validate();  // Y matrices q-commute

  RModule rs = restrict_to_R(simple_module(ctx, chi_of({1, 1})));
  CHECK(rs.dim() == 1);
  CHECK(rs.X[0].is_zero());
}

TEST_CASE("induction from R: dimensions and the free module recovers the regular module") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  RModule triv{ctx, {Mat(ctx.base(), 1, 1), Mat(ctx.base(), 1, 1)}};
  ModuleRep ind = induce_R(triv);
  CHECK(ind.dim() == ctx.group_order());
  ind.validate();

  // explicit intertwiner induce_R(R) -> A:  g^b x X^a  |->  q^{<a,b>} X^a g^b
  RModule fr = free_r(ctx);
  ModuleRep indf = induce_R(fr);
  ModuleRep reg = regular_rep(ctx);
  REQUIRE(indf.dim() == reg.dim());
  Algebra A(ctx);
  std::uint32_t go = std::uint32_t(ctx.group_order());
  std::uint32_t n = ctx.n(), ell = ctx.ell();
  std::vector<std::uint32_t> radix(n);
  std::uint32_t place = 1;
  for (std::uint32_t i = n; i-- > 0;) {
    radix[i] = place;
    place *= ell;
  }
  Mat T(ctx.base(), reg.dim(), indf.dim());
  for (std::uint32_t b = 0; b < go; ++b)
    for (std::uint32_t a = 0; a < go; ++a) {
      std::int64_t dot = 0;
      for (std::uint32_t i = 0; i < n; ++i)
        dot += std::int64_t(a / radix[i] % ell) * (b / radix[i] % ell);
      T.at(a * go + b, b * go + a) = ctx.q_pow(dot);
    }
  REQUIRE(T.try_inverse().has_value());
  for (std::uint32_t i = 0; i < n; ++i) {
    CHECK(T * indf.X(i) == reg.X(i) * T);
    CHECK(T * indf.g(i) == reg.g(i) * T);
  }
}

TEST_CASE("induction lemma via randomized isomorphism on a small module") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  ModuleRep M = random_module(ctx, 17, 6);
  ModuleRep ind = induce_R(restrict_to_R(M));
  ModuleRep sum = tensor(M, simple_module(ctx, char_from_index(ctx, 0)));
  for (std::uint32_t c = 1; c < ctx.group_order(); ++c)
    sum = dsum(sum, tensor(M, simple_module(ctx, char_from_index(ctx, c))));
  IsoResult iso = is_isomorphic(ind, sum, 32, 99);
  CHECK(iso.verdict == IsoVerdict::kIsomorphic);
}

TEST_CASE("induction from Rq: dimension, validity, eigen-decomposition of an induced simple") {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  ModuleRep s = simple_module(ctx, chi_of({1, 2}));
  RqModule rq = restrict_to_Rq(s);
  ModuleRep ind = induce_Rq(rq);
  CHECK(ind.dim() == ctx.group_order() * 1);
  ind.validate();

  // oracle: the induced module of a one-dimensional trivial Y-action splits
  // into l^n one-dimensional weight lines killed by every X_i
  WeightBasis wb = weight_decompose(ctx, ind.g_all());
  std::set<std::uint32_t> weights(wb.weight.begin(), wb.weight.end());
  CHECK(weights.size() == ctx.group_order());  // each multiplicity one
  for (std::uint32_t i = 0; i < ctx.n(); ++i) CHECK(ind.X(i).is_zero());
}

TEST_CASE("induction kills the twist: explicit permutation witness") {
  // (gM)↑ ≅ M↑ via g^b ⊗ m  |->  g^{b+c} ⊗ m
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  RqModule M = restrict_to_Rq(random_module(ctx, 14, 8));
  std::vector<std::uint32_t> c = {1, 2};
  ModuleRep indM = induce_Rq(M);
  ModuleRep indT = induce_Rq(twist_g(M, c));
  std::uint32_t dm = M.dim(), go = std::uint32_t(ctx.group_order());
  std::uint32_t n = ctx.n(), ell = ctx.ell();
  std::vector<std::uint32_t> radix(n);
  std::uint32_t place = 1;
  for (std::uint32_t i = n; i-- > 0;) {
    radix[i] = place;
    place *= ell;
  }
  Mat T(ctx.base(), indM.dim(), indT.dim());
  for (std::uint32_t b = 0; b < go; ++b) {
    std::uint32_t shifted = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      shifted += (b / radix[i] % ell + c[i]) % ell * radix[i];
    for (std::uint32_t m = 0; m < dm; ++m) T.at(shifted * dm + m, b * dm + m) = 1;
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    CHECK(T * indT.X(i) == indM.X(i) * T);
    CHECK(T * indT.g(i) == indM.g(i) * T);
  }
}

TEST_CASE("twisting scales Y matrices and is an ell-periodic group action") {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  RqModule M = restrict_to_Rq(random_module(ctx, 8, 10));

  RqModule id = twist_g(M, {0, 0});
  for (std::uint32_t i = 0; i < 2; ++i) CHECK(id.Y[i] == M.Y[i]);

  RqModule tw1 = twist_g(twist_g(M, {1, 2}), {1, 2});
  RqModule tw2 = twist_g(M, {2, 4});
  for (std::uint32_t i = 0; i < 2; ++i) CHECK(tw1.Y[i] == tw2.Y[i]);

  RqModule full = M;
  for (std::uint32_t k = 0; k < 3; ++k) full = twist_g(full, {1, 1});
  for (std::uint32_t i = 0; i < 2; ++i) CHECK(full.Y[i] == M.Y[i]);
}

TEST_CASE("projective indecomposables have simple head and the right size") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  Char chi = chi_of({1, 0});
  ModuleRep P = projective_indecomposable(ctx, chi);
  CHECK(P.dim() == ctx.group_order());
  P.validate();
  auto head = head_decompose(P);
  REQUIRE(head.size() == 1);
  CHECK(head.begin()->first == char_index(ctx, chi));
  CHECK(head.begin()->second == 1);
  CHECK(is_projective(P));
}

TEST_CASE("battery generator is deterministic, valid, and diverse") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  ModuleRep a = random_module(ctx, 1234, 40);
  ModuleRep b = random_module(ctx, 1234, 40);
  REQUIRE(a.dim() == b.dim());
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    CHECK(a.X(i) == b.X(i));
    CHECK(a.g(i) == b.g(i));
  }

  Rng rng(777);
  bool saw_nonprojective = false, saw_projective_free = false;
  for (int k = 0; k < 20; ++k) {
    ModuleRep m = random_module(ctx, rng.next(), 40);
    CHECK(m.dim() >= 1);
    CHECK(m.dim() <= 40);
    m.validate();
    if (!is_projective(m)) saw_nonprojective = true;
    if (stable_reduce(m).dim() == m.dim()) saw_projective_free = true;
  }
  CHECK(saw_nonprojective);
  CHECK(saw_projective_free);

  CHECK_THROWS_AS(random_module(ctx, 1, 0), Error);
}

TEST_CASE("act evaluates arbitrary algebra elements") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  ModuleRep M = regular_rep(ctx);
  Algebra A(ctx);
  AlgebraElement u = A.multiply(A.x_gen(0), A.g_gen(1));
  CHECK(act(M, u) == M.X(0) * M.g(1));
  CHECK(act(M, A.one()) == Mat::identity(ctx.base(), M.dim()));
}

TEST_CASE("context mismatch is rejected") {
  FieldCtx c1 = FieldCtx::make(5, 2, 2);
  FieldCtx c2 = FieldCtx::make(7, 3, 2);
  CHECK_THROWS_AS(tensor(trivial_module(c1), trivial_module(c2)), Error);
}
