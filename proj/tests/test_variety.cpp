#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qea/algebra.hpp"
#include "qea/prng.hpp"
#include "qea/variety.hpp"

using namespace qea;

namespace {

std::vector<ffelt> rand_point(const FieldCtx& ctx, Rng& rng) {
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

}  // namespace

TEST_CASE("tau matrix on the regular module at a unit vector is X_1") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  ModuleRep reg = regular_rep(ctx);
  PPoint lam{ctx.base(), {1, 0}};
  CHECK(tau_matrix(reg, lam) == reg.X(0));
  CHECK_THROWS_AS(tau_matrix(reg, PPoint{ctx.base(), {0, 0}}), Error);
}

TEST_CASE("tau matrices are ell-nilpotent with bounded rank profile") {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  Rng rng(5);
  for (int k = 0; k < 5; ++k) {
    ModuleRep M = random_module(ctx, rng.next(), 20);
    PPoint lam{ctx.base(), rand_point(ctx, rng)};
    Mat N = tau_matrix(M, lam);
    CHECK(N.pow(ctx.ell()).is_zero());
    if (M.dim() % ctx.ell() == 0)
      CHECK(N.pow(ctx.ell() - 1).rank() <= M.dim() / ctx.ell());
  }
}

TEST_CASE("point verdicts are scalar and G-translate invariant") {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  Rng rng(6);
  ModuleRep M = random_module(ctx, rng.next(), 18);
  for (int k = 0; k < 4; ++k) {
    PPoint lam{ctx.base(), rand_point(ctx, rng)};
    bool base = point_is_projective(M, lam);
    // scalar
    ffelt c = ffelt(1 + rng.below(ctx.p() - 1));
    PPoint scaled = lam;
    for (auto& x : scaled.coords) x = ctx.base()->mul(x, c);
    CHECK(point_is_projective(M, scaled) == base);
    // every group translate
    for (std::uint32_t b1 = 0; b1 < ctx.ell(); ++b1)
      for (std::uint32_t b2 = 0; b2 < ctx.ell(); ++b2) {
        CHECK(point_is_projective(M, translate(ctx, lam, {b1, b2})) == base);
      }
  }
}

TEST_CASE("the regular module is free at every point, the trivial at none") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  ModuleRep reg = regular_rep(ctx);
  ModuleRep k = trivial_module(ctx);
  for (std::uint32_t e : {1u, 2u})
    for (const PPoint& pt : enumerate_points(ctx, e)) {
      PPoint lifted{ctx.extension(e), pt.coords};
      CHECK(point_is_projective(reg, lifted));
      CHECK(!point_is_projective(k, lifted));
    }
}

TEST_CASE("free restrictions have the full rank profile") {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  ModuleRep reg = regular_rep(ctx);
  Rng rng(13);
  PPoint lam{ctx.base(), rand_point(ctx, rng)};
  Mat N = tau_matrix(reg, lam);
  std::uint32_t blocks = reg.dim() / ctx.ell();
  for (std::uint32_t j = 0; j <= ctx.ell(); ++j)
    CHECK(N.pow(j).rank() == blocks * (ctx.ell() - j));
}

TEST_CASE("orbit canonicalization is constant on orbits") {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  Rng rng(55);
  for (std::uint32_t e : {1u, 2u}) {
    FieldPtr f = ctx.extension(e);
    for (int k = 0; k < 20; ++k) {
      PPoint pt{f, {ffelt(rng.below(f->size())), ffelt(rng.below(f->size()))}};
      if (pt.coords[0] == 0 && pt.coords[1] == 0) continue;
      std::vector<ffelt> canon = orbit_canonical(ctx, pt).coords;
      for (std::uint32_t b1 = 0; b1 < 3; ++b1)
        for (std::uint32_t b2 = 0; b2 < 3; ++b2)
          CHECK(orbit_canonical(ctx, translate(ctx, pt, {b1, b2})).coords == canon);
    }
  }
}

TEST_CASE("point counts match the projective space formula") {
  // (p^{en} - 1) / (p^e - 1) points
  FieldCtx c3 = FieldCtx::make(5, 2, 3);
  CHECK(enumerate_points(c3, 1).size() == 31);    // 25 + 5 + 1
  CHECK(enumerate_points(c3, 2).size() == 651);   // 625 + 25 + 1
  FieldCtx c2 = FieldCtx::make(11, 5, 2);
  CHECK(enumerate_points(c2, 1).size() == 12);
  CHECK(enumerate_points(c2, 2).size() == 122);
}

TEST_CASE("point enumeration counts and orbit structure") {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  auto pts = enumerate_points(ctx, 1);
  CHECK(pts.size() == 8);  // p + 1 points of P^1(F_7)
  std::set<std::vector<ffelt>> uniq;
  for (auto& pt : pts) uniq.insert(normalized(pt).coords);
  CHECK(uniq.size() == 8);

  // orbit of [1:0] is a singleton
  PPoint e0{ctx.base(), {1, 0}};
  CHECK(orbit_canonical(ctx, e0).coords == e0.coords);

  // orbit sizes divide ell^{n-1} = 3: group points by canonical representative
  std::map<std::vector<ffelt>, std::uint32_t> orbit_sizes;
  for (auto& pt : pts) ++orbit_sizes[orbit_canonical(ctx, pt).coords];
  for (auto& [rep, size] : orbit_sizes) CHECK(3 % size == 0);
  CHECK(orbit_count_bruteforce(ctx, 1) == orbit_sizes.size());

  // e = 2 count: p^2 + 1 points of P^1(F_49)
  CHECK(enumerate_points(ctx, 2).size() == 50);
}

TEST_CASE("varieties of the basic modules") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  std::vector<std::uint32_t> degrees{1, 2};
  VarietySet vk = rank_variety(trivial_module(ctx), degrees);
  CHECK(variety_eq(vk, full_orbit_set(ctx, degrees)));
  CHECK(rank_variety(regular_rep(ctx), degrees).total_points() == 0);

  // union under direct sum
  Rng rng(15);
  ModuleRep M = random_module(ctx, rng.next(), 14);
  ModuleRep N = random_module(ctx, rng.next(), 14);
  VarietySet vs = rank_variety(dsum(M, N), degrees);
  CHECK(variety_eq(vs, variety_cup(rank_variety(M, degrees), rank_variety(N, degrees))));
}

TEST_CASE("degree-1 points embed consistently into the degree-2 sample") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  Rng rng(16);
  ModuleRep M = random_module(ctx, rng.next(), 16);
  VarietySet v = rank_variety(M, {1, 2});
  for (auto& coords : v.degrees.at(1)) CHECK(v.degrees.at(2).count(coords) == 1);
}

TEST_CASE("restriction to R preserves the variety; free R-modules vanish") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  Rng rng(17);
  ModuleRep M = random_module(ctx, rng.next(), 10);
  CHECK(variety_eq(rank_variety_R(restrict_to_R(M), {1, 2}), rank_variety(M, {1, 2})));

  // free rank-1 R-module induces to the regular module: empty variety
  std::uint32_t n = ctx.n(), ell = ctx.ell();
  std::uint32_t d = std::uint32_t(ctx.group_order());
  RModule fr{ctx, {}};
  std::vector<std::uint32_t> radix = {2, 1};
  for (std::uint32_t i = 0; i < n; ++i) {
    Mat xm(ctx.base(), d, d);
    for (std::uint32_t a = 0; a < d; ++a)
      if (a / radix[i] % ell + 1 < ell) xm.at(a + radix[i], a) = 1;
    fr.X.push_back(std::move(xm));
  }
  CHECK(rank_variety_R(fr, {1, 2}).total_points() == 0);
}

TEST_CASE("twisting an Rq module does not move its variety") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  RqModule M = restrict_to_Rq(random_module(ctx, 19, 6));
  VarietySet v0 = rank_variety_Rq(M, {1, 2});
  CHECK(variety_eq(rank_variety_Rq(twist_g(M, {1, 0}), {1, 2}), v0));
  CHECK(variety_eq(rank_variety_Rq(twist_g(M, {1, 1}), {1, 2}), v0));
}

TEST_CASE("psi raises coordinates to the ell-th power") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  // [1:2] -> [1:4]
  VarietySet v;
  v.degrees[1].insert({1, 2});
  VarietySet img = psi_image(ctx, v);
  CHECK(img.degrees.at(1).count({1, 4}) == 1);

  // constant on G-orbits: all translates of a point map to the same image
  Rng rng(20);
  for (int k = 0; k < 10; ++k) {
    PPoint lam{ctx.base(), rand_point(ctx, rng)};
    VarietySet a, b;
    a.degrees[1].insert(normalized(lam).coords);
    b.degrees[1].insert(normalized(translate(ctx, lam, {1, 0})).coords);
    CHECK(psi_image(ctx, a).degrees == psi_image(ctx, b).degrees);
  }

  // injective on the full orbit set
  for (std::uint32_t e : {1u, 2u}) {
    VarietySet full = full_orbit_set(ctx, {e});
    CHECK(psi_image(ctx, full).degrees.at(e).size() == full.degrees.at(e).size());
  }
}

TEST_CASE("carlson modules: dimension by the rank oracle and a one-point variety") {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  Algebra A(ctx);
  Rng rng(21);
  std::vector<ffelt> lam = rand_point(ctx, rng);

  // oracle: right multiplication by tau on A is the regular nilpotent of a
  // free k[t]/(t^ell)-module, so rank(R_tau^j) = (dim A / ell)(ell - j) and
  // the quotient has dimension dim A / ell
  AlgebraElement tau = A.tau(lam);
  std::uint32_t d = A.dim();
  Mat rmul(ctx.base(), d, d);
  for (std::uint32_t m = 0; m < d; ++m) {
    AlgebraElement mono{ctx, {{m, 1}}};
    for (auto& [idx, c] : A.multiply(mono, tau).terms) rmul.at(idx, m) = c;
  }
  std::uint32_t free_rank = d / ctx.ell();
  for (std::uint32_t j = 1; j <= ctx.ell(); ++j)
    CHECK(rmul.pow(j).rank() == free_rank * (ctx.ell() - j));

  ModuleRep c = carlson_module(ctx, lam);
  CHECK(c.dim() == d - rmul.rank());
  CHECK(c.dim() == free_rank);
  c.validate();

  VarietySet v = rank_variety(c, {1, 2});
  std::vector<ffelt> canon = orbit_canonical(ctx, PPoint{ctx.base(), lam}).coords;
  for (std::uint32_t e : {1u, 2u}) {
    REQUIRE(v.degrees.at(e).size() == 1);
    CHECK(*v.degrees.at(e).begin() == canon);
  }

  // a group translate of lambda has the same variety
  ModuleRep ct = carlson_module(ctx, translate(ctx, PPoint{ctx.base(), lam}, {1, 2}).coords);
  CHECK(variety_eq(rank_variety(ct, {1, 2}), v));
}

TEST_CASE("diagonal identity between the box tensor and the coproduct action") {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  Rng rng(22);
  ModuleRep M = random_module(ctx, rng.next(), 8);
  ModuleRep N = random_module(ctx, rng.next(), 8);

  std::vector<ffelt> e1(ctx.n(), 0);
  e1[0] = 1;
  CHECK(diagonal_check(ctx, e1, M, N));  // reduces to Delta(X_1) itself

  for (int k = 0; k < 10; ++k) {
    ModuleRep Mk = random_module(ctx, rng.next(), 8);
    ModuleRep Nk = random_module(ctx, rng.next(), 8);
    std::vector<ffelt> lam = rand_point(ctx, rng);
    CHECK(diagonal_check(ctx, lam, Mk, Nk));
  }
}

TEST_CASE("variety set algebra") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  ModuleRep M = random_module(ctx, 23, 12);
  VarietySet v = rank_variety(M, {1, 2});
  CHECK(variety_eq(variety_cap(v, v), v));
  VarietySet empty;
  for (auto& [e, pts] : v.degrees) empty.degrees[e];
  CHECK(variety_eq(variety_cup(v, empty), v));
  CHECK(variety_subset(empty, v));

  VarietySet other;
  other.degrees[1];
  CHECK_THROWS_AS(variety_cap(v, other), Error);  // degree sets differ
}

TEST_CASE("tensor product theorem on a pinned small pair") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  std::vector<ffelt> lam = {1, 0}, mu = {0, 1};
  ModuleRep cl = carlson_module(ctx, lam);
  ModuleRep cm = carlson_module(ctx, mu);
  VarietySet vl = rank_variety(cl, {1, 2});
  VarietySet vm = rank_variety(cm, {1, 2});
  VarietySet vt = rank_variety(tensor(cl, cm), {1, 2});
  CHECK(variety_eq(vt, variety_cap(vl, vm)));
  CHECK(vt.total_points() == 0);  // disjoint orbits
  CHECK(is_projective(tensor(cl, cm)));
}

TEST_CASE("short exact sequence containments for the cover triangle") {
  FieldCtx ctx = FieldCtx::make(5, 2, 2);
  ModuleRep M = random_module(ctx, 29, 10);
  CoverData cd = projective_cover(M);
  VarietySet vm = rank_variety(M, {1, 2});
  VarietySet vo = rank_variety(cd.kernel, {1, 2});
  VarietySet vp = rank_variety(cd.cover, {1, 2});
  CHECK(vp.total_points() == 0);
  CHECK(variety_subset(vo, variety_cup(vp, vm)));
  CHECK(variety_subset(vm, variety_cup(vp, vo)));
  CHECK(variety_eq(vo, vm));
}

TEST_CASE("worker count does not change the computed variety") {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  ModuleRep M = random_module(ctx, 33, 16);
  VarietySet v1 = rank_variety(M, {1, 2}, 1);
  VarietySet v4 = rank_variety(M, {1, 2}, 4);
  CHECK(variety_eq(v1, v4));
}
