#include "qea/suites.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "qea/algebra.hpp"
#include "qea/homological.hpp"
#include "qea/prng.hpp"
#include "qea/serialize.hpp"
#include "qea/variety.hpp"

namespace qea {

using json = nlohmann::json;

namespace {

std::uint64_t suite_seed(const SuiteConfig& cfg, const char* name) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ cfg.seed;
  for (const char* c = name; *c; ++c) h = (h ^ std::uint64_t(*c)) * 0x100000001b3ULL;
  return h;
}

FieldCtx make_ctx(const SuiteConfig& cfg) { return FieldCtx::make(cfg.p, cfg.ell, cfg.n); }

// Per-config work limits; the heavy (ℓ^n = 25) configuration gets smaller
// batteries where induced/cover dimensions blow up.
struct Knobs {
  std::uint32_t battery_budget;
  std::uint32_t tensor_factor;
  std::uint32_t omega_count, omega_budget;
  std::uint32_t induction_count, induction_budget;
  std::uint32_t twist_count, twist_budget;
  std::uint32_t carlson_partners, carlson_partner_budget;
  std::uint32_t diagonal_factor;
};

Knobs knobs_for(const FieldCtx& ctx, const SuiteConfig& cfg) {
  std::uint64_t go = ctx.group_order();
  Knobs k;
  k.battery_budget = cfg.size_budget ? cfg.size_budget : default_size_budget(cfg.ell, cfg.n);
  bool heavy = go >= 25;  // cover and induced dimensions scale with ℓ^n
  k.tensor_factor = 20;
  k.omega_count = std::min<std::uint32_t>(cfg.battery, 12);
  k.omega_budget = heavy ? 16 : k.battery_budget;
  k.induction_count = std::min<std::uint32_t>(cfg.battery, 8);
  k.induction_budget = heavy ? 8 : 14;
  k.twist_count = 4;
  k.twist_budget = heavy ? 5 : 8;
  std::uint64_t carlson_dim = ctx.algebra_dim() / ctx.ell();
  k.carlson_partners = std::min<std::uint32_t>(cfg.battery, 8);
  std::uint64_t cap = carlson_dim ? 400 / carlson_dim : 1;
  if (cap < 1) cap = 1;
  k.carlson_partner_budget = std::uint32_t(std::min<std::uint64_t>(cap, k.battery_budget));
  if (k.carlson_partner_budget < 1) k.carlson_partner_budget = 1;
  k.diagonal_factor = 12;
  return k;
}

std::vector<ModuleRep> make_battery(const FieldCtx& ctx, std::uint32_t count,
                                    std::uint32_t budget, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ModuleRep> mods;
  for (std::uint32_t i = 0; i < count; ++i)
    mods.push_back(random_module(ctx, rng.next(), budget));
  return mods;
}

std::vector<ffelt> random_point(const FieldCtx& ctx, Rng& rng) {
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

json point_json(const std::vector<ffelt>& lam) {
  json arr = json::array();
  for (auto c : lam) arr.push_back(c);
  return arr;
}

std::string repro(const char* suite, const std::string& case_id, std::uint64_t seed,
                  std::initializer_list<const ModuleRep*> mods,
                  const std::vector<ffelt>* lambda = nullptr, std::int64_t e = -1) {
  json j;
  j["suite"] = suite;
  j["case"] = case_id;
  j["seed"] = seed;
  json marr = json::array();
  for (const ModuleRep* m : mods) marr.push_back(json::parse(module_to_json(*m)));
  j["modules"] = std::move(marr);
  if (lambda) j["lambda"] = point_json(*lambda);
  if (e >= 0) j["e"] = e;
  return j.dump();
}

struct Ctx {
  const SuiteConfig& cfg;
  SuiteReport& rep;
  const char* suite;
  std::uint64_t seed;

  void check(bool ok, const std::string& case_id, const std::string& detail,
             std::string repro_json = "{}") {
    ++rep.cases;
    if (!ok) rep.failures.push_back({case_id, detail, std::move(repro_json)});
  }
};

// ---- hopf: Hopf axioms on the full basis, plus the antipode-sign
// documentation case ----

SuiteReport suite_hopf(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "hopf";
  Ctx t{cfg, rep, "hopf", suite_seed(cfg, "hopf")};
  FieldCtx ctx = make_ctx(cfg);
  Algebra A(ctx);
  const Field& f = *ctx.base();
  std::uint32_t n = ctx.n(), ell = ctx.ell();
  AntipodeSign sign = cfg.negated_antipode ? AntipodeSign::kNegatedInverse : AntipodeSign::kAxiom;

  // defining relations on generators
  for (std::uint32_t i = 0; i < n; ++i) {
    t.check(A.equal(A.power(A.x_gen(i), ell), A.zero()), "x-nilpotent-" + std::to_string(i),
            "X_i^ell != 0");
    t.check(A.equal(A.power(A.g_gen(i), ell), A.one()), "g-order-" + std::to_string(i),
            "g_i^ell != 1");
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i < j) {
        t.check(A.equal(A.multiply(A.x_gen(i), A.x_gen(j)), A.multiply(A.x_gen(j), A.x_gen(i))),
                "x-commute-" + std::to_string(i) + "-" + std::to_string(j), "X_i X_j != X_j X_i");
        t.check(A.equal(A.multiply(A.g_gen(i), A.g_gen(j)), A.multiply(A.g_gen(j), A.g_gen(i))),
                "g-commute-" + std::to_string(i) + "-" + std::to_string(j), "g_i g_j != g_j g_i");
      }
      ffelt qd = (i == j) ? ctx.q() : ffelt(1);
      t.check(A.equal(A.multiply(A.g_gen(i), A.x_gen(j)),
                      A.scale(A.multiply(A.x_gen(j), A.g_gen(i)), qd)),
              "gx-commutation-" + std::to_string(i) + "-" + std::to_string(j),
              "g_i X_j != q^{delta} X_j g_i");
    }
  }

  // coassociativity, counit, antipode on every basis monomial
  std::uint32_t dimA = A.dim();
  for (std::uint32_t m = 0; m < dimA; ++m) {
    AlgebraElement u{ctx, {{m, 1}}};
    TensorElement du = A.coproduct(u);

    // (Δ⊗id)Δ(u) == (id⊗Δ)Δ(u) as triple-index maps
    std::map<std::array<std::uint32_t, 3>, ffelt> left, right;
    auto add3 = [&](std::map<std::array<std::uint32_t, 3>, ffelt>& acc,
                    std::array<std::uint32_t, 3> key, ffelt c) {
      auto it = acc.find(key);
      ffelt v = it == acc.end() ? c : f.add(it->second, c);
      if (it != acc.end()) {
        if (v == 0)
          acc.erase(it);
        else
          it->second = v;
      } else if (c != 0) {
        acc.emplace(key, c);
      }
    };
    for (auto& [idx, c] : du.terms) {
      std::uint32_t l = std::uint32_t(idx / dimA), r = std::uint32_t(idx % dimA);
      for (auto& [idx2, c2] : A.coproduct(AlgebraElement{ctx, {{l, 1}}}).terms)
        add3(left, {std::uint32_t(idx2 / dimA), std::uint32_t(idx2 % dimA), r}, f.mul(c, c2));
      for (auto& [idx2, c2] : A.coproduct(AlgebraElement{ctx, {{r, 1}}}).terms)
        add3(right, {l, std::uint32_t(idx2 / dimA), std::uint32_t(idx2 % dimA)}, f.mul(c, c2));
    }
    t.check(left == right, "coassoc-" + std::to_string(m),
            "(Delta x id)Delta != (id x Delta)Delta on basis monomial");

    // counit
    AlgebraElement eps_l = A.zero(), eps_r = A.zero();
    for (auto& [idx, c] : du.terms) {
      std::uint32_t l = std::uint32_t(idx / dimA), r = std::uint32_t(idx % dimA);
      eps_l = A.add(eps_l, A.scale(AlgebraElement{ctx, {{r, 1}}},
                                   f.mul(c, A.counit(AlgebraElement{ctx, {{l, 1}}}))));
      eps_r = A.add(eps_r, A.scale(AlgebraElement{ctx, {{l, 1}}},
                                   f.mul(c, A.counit(AlgebraElement{ctx, {{r, 1}}}))));
    }
    t.check(A.equal(eps_l, u) && A.equal(eps_r, u), "counit-" + std::to_string(m),
            "(eps x id)Delta != id or (id x eps)Delta != id");

    // antipode axiom
    AlgebraElement conv_l = A.zero(), conv_r = A.zero();
    for (auto& [idx, c] : du.terms) {
      AlgebraElement l{ctx, {{std::uint32_t(idx / dimA), 1}}};
      AlgebraElement r{ctx, {{std::uint32_t(idx % dimA), 1}}};
      conv_l = A.add(conv_l, A.scale(A.multiply(A.antipode(l, sign), r), c));
      conv_r = A.add(conv_r, A.scale(A.multiply(l, A.antipode(r, sign)), c));
    }
    AlgebraElement target = A.scale(A.one(), A.counit(u));
    t.check(A.equal(conv_l, target) && A.equal(conv_r, target), "antipode-" + std::to_string(m),
            "sum S(u_1)u_2 != eps(u)1 or sum u_1 S(u_2) != eps(u)1");

    // S^2 = conjugation by (g_1...g_n)^{-1}, and the closed inverse formula
    if (sign == AntipodeSign::kAxiom) {
      AlgebraElement h = A.one(), hinv = A.one();
      for (std::uint32_t i = 0; i < n; ++i) {
        h = A.multiply(h, A.g_inv(i));
        hinv = A.multiply(hinv, A.g_gen(i));
      }
      t.check(A.equal(A.antipode(A.antipode(u), AntipodeSign::kAxiom),
                      A.multiply(A.multiply(h, u), hinv)),
              "s-squared-" + std::to_string(m), "S^2 != conjugation by (g_1...g_n)^{-1}");
      t.check(A.equal(A.antipode_inv(A.antipode(u)), u) &&
                  A.equal(A.antipode(A.antipode_inv(u)), u),
              "s-inverse-" + std::to_string(m), "antipode_inv is not inverse to S");
    }
  }

  // bialgebra: Δ(uv) = Δ(u)Δ(v) on seeded random basis pairs
  Rng rng(t.seed);
  for (std::uint32_t k = 0; k < 200; ++k) {
    std::uint32_t mu = std::uint32_t(rng.below(dimA)), mv = std::uint32_t(rng.below(dimA));
    AlgebraElement u{ctx, {{mu, 1}}}, v{ctx, {{mv, 1}}};
    t.check(A.tensor_add(A.coproduct(A.multiply(u, v)),
                         A.tensor_scale(A.tensor_multiply(A.coproduct(u), A.coproduct(v)),
                                        f.neg(1)))
                .terms.empty(),
            "bialgebra-" + std::to_string(k), "Delta(uv) != Delta(u)Delta(v)");
  }
  return rep;
}

// ---- structure: Y q-commutation and τ nilpotence (criterion 2) ----

SuiteReport suite_structure(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "structure";
  Ctx t{cfg, rep, "structure", suite_seed(cfg, "structure")};
  FieldCtx ctx = make_ctx(cfg);
  Algebra A(ctx);
  std::uint32_t n = ctx.n(), ell = ctx.ell();

  for (std::uint32_t i = 0; i < n; ++i) {
    t.check(A.equal(A.power(A.y_element(i), ell), A.zero()), "y-nilpotent-" + std::to_string(i),
            "Y_i^ell != 0");
    for (std::uint32_t j = i + 1; j < n; ++j)
      t.check(A.equal(A.multiply(A.y_element(j), A.y_element(i)),
                      A.scale(A.multiply(A.y_element(i), A.y_element(j)), ctx.q())),
              "y-commutation-" + std::to_string(i) + "-" + std::to_string(j),
              "Y_j Y_i != q Y_i Y_j for i < j");
  }

  Rng rng(t.seed);
  for (std::uint32_t k = 0; k < 100; ++k) {
    std::vector<ffelt> lam = random_point(ctx, rng);
    t.check(A.equal(A.power(A.tau(lam), ell), A.zero()), "tau-nilpotent-" + std::to_string(k),
            "tau(lambda)^ell != 0",
            repro("structure", "tau-nilpotent-" + std::to_string(k), t.seed, {}, &lam));
  }
  return rep;
}

// ---- trivial-variety: V(k) = P^{n-1}/G with independent orbit count ----

SuiteReport suite_trivial_variety(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "trivial-variety";
  Ctx t{cfg, rep, "trivial-variety", suite_seed(cfg, "trivial-variety")};
  FieldCtx ctx = make_ctx(cfg);
  ModuleRep k = trivial_module(ctx);
  VarietySet V = rank_variety(k, cfg.ext_degrees, cfg.workers);
  VarietySet full = full_orbit_set(ctx, cfg.ext_degrees);
  t.check(variety_eq(V, full), "full-projective-space", "V(k) != P^{n-1}/G");
  for (std::uint32_t e : cfg.ext_degrees) {
    std::uint64_t brute = orbit_count_bruteforce(ctx, e);
    t.check(V.degrees.at(e).size() == brute, "orbit-count-e" + std::to_string(e),
            "canonical orbit count " + std::to_string(V.degrees.at(e).size()) +
                " != brute-force count " + std::to_string(brute));
  }
  return rep;
}

// ---- shared machinery for the induction-lemma maps ----

struct InductionMaps {
  ModuleRep induced;   // M↓_R ↑^A
  ModuleRep sum;       // ⊕_χ (M ⊗ S_χ), χ in lex order
  Mat phi, psi;        // mutually inverse A-maps
};

InductionMaps induction_maps(const ModuleRep& M) {
  const FieldCtx& ctx = M.ctx();
  FieldPtr f = ctx.base();
  std::uint32_t n = ctx.n(), ell = ctx.ell();
  std::uint32_t go = std::uint32_t(ctx.group_order());
  std::uint32_t dm = M.dim();

  InductionMaps im;
  im.induced = induce_R(restrict_to_R(M));
  bool first = true;
  for (std::uint32_t c = 0; c < go; ++c) {
    ModuleRep block = tensor(M, simple_module(ctx, char_from_index(ctx, c)));
    im.sum = first ? block : dsum(im.sum, block);
    first = false;
  }

  // ρ(g^B) for every exponent vector B, lex order
  std::vector<std::uint32_t> radix(n);
  std::uint32_t place = 1;
  for (std::uint32_t i = n; i-- > 0;) {
    radix[i] = place;
    place *= ell;
  }
  std::vector<Mat> gb(go);
  gb[0] = Mat::identity(f, dm);
  for (std::uint32_t B = 1; B < go; ++B) {
    std::uint32_t i = 0;
    while (B / radix[i] % ell == 0) ++i;
    gb[B] = M.g(i) * gb[B - radix[i]];
  }
  auto dot = [&](std::uint32_t c, std::uint32_t B) {
    std::int64_t s = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      s += std::int64_t(c / radix[i] % ell) * (B / radix[i] % ell);
    return s;
  };

  // φ(g^B ⊗ m) = (χ(g^B) g^B m ⊗ 1)_χ
  im.phi = Mat(f, go * dm, go * dm);
  for (std::uint32_t B = 0; B < go; ++B)
    for (std::uint32_t c = 0; c < go; ++c) {
      ffelt coeff = ctx.q_pow(dot(c, B));
      for (std::uint32_t r = 0; r < dm; ++r)
        for (std::uint32_t s = 0; s < dm; ++s) {
          ffelt v = gb[B].at(r, s);
          if (v) im.phi.at(c * dm + r, B * dm + s) = f->mul(coeff, v);
        }
    }

  // ψ((m_χ ⊗ 1)_χ) = (1/|G|) Σ_χ Σ_B χ(g^{-B}) g^B ⊗ g^{-B} m_χ
  ffelt inv_go = f->inv(f->from_residue(go));
  im.psi = Mat(f, go * dm, go * dm);
  for (std::uint32_t c = 0; c < go; ++c)
    for (std::uint32_t B = 0; B < go; ++B) {
      std::uint32_t Binv = 0;
      for (std::uint32_t i = 0; i < n; ++i)
        Binv += (ell - B / radix[i] % ell) % ell * radix[i];
      ffelt coeff = f->mul(inv_go, ctx.q_pow(-dot(c, B)));
      for (std::uint32_t r = 0; r < dm; ++r)
        for (std::uint32_t s = 0; s < dm; ++s) {
          ffelt v = gb[Binv].at(r, s);
          if (v) im.psi.at(B * dm + r, c * dm + s) = f->mul(coeff, v);
        }
    }
  return im;
}

bool intertwines(const Mat& T, const ModuleRep& src, const ModuleRep& dst) {
  for (std::uint32_t i = 0; i < src.ctx().n(); ++i) {
    if (!(T * src.X(i) == dst.X(i) * T)) return false;
    if (!(T * src.g(i) == dst.g(i) * T)) return false;
  }
  return true;
}

// ---- conjugate: S_χ ⊗ M ⊗ S_χ^# ≅ M with witness g_i^{-1} ----

SuiteReport suite_conjugate(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "conjugate";
  Ctx t{cfg, rep, "conjugate", suite_seed(cfg, "conjugate")};
  FieldCtx ctx = make_ctx(cfg);
  Knobs kb = knobs_for(ctx, cfg);
  auto battery = make_battery(ctx, cfg.battery, kb.battery_budget, t.seed);

  for (std::size_t bi = 0; bi < battery.size(); ++bi) {
    const ModuleRep& M = battery[bi];
    for (std::uint32_t i = 0; i < ctx.n(); ++i) {
      Char chi;
      chi.c.assign(ctx.n(), 0);
      chi.c[i] = 1;
      ModuleRep s = simple_module(ctx, chi);
      ModuleRep src = tensor(tensor(s, M), dual(s));
      Mat T = M.g(i).pow(ctx.ell() - 1);  // φ(1⊗m⊗1) = g_i^{-1} m
      std::string id = "module-" + std::to_string(bi) + "-chi" + std::to_string(i);
      std::string rj = repro("conjugate", id, t.seed, {&M});
      t.check(intertwines(T, src, M), id + "-intertwiner",
              "conjugation witness is not A-linear", rj);
      t.check(T * M.g(i) == Mat::identity(ctx.base(), M.dim()), id + "-inverse",
              "witness inverse formula phi^{-1}(m) = 1 x g_i m x 1 fails", rj);
    }
  }
  return rep;
}

// ---- simples: M↓↑ ≅ ⊕_χ (M ⊗ S_χ) via the explicit φ, ψ ----

SuiteReport suite_simples(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "simples";
  Ctx t{cfg, rep, "simples", suite_seed(cfg, "simples")};
  FieldCtx ctx = make_ctx(cfg);
  Knobs kb = knobs_for(ctx, cfg);
  std::uint32_t count = std::min<std::uint32_t>(cfg.battery, 10);
  std::uint32_t budget = std::min<std::uint32_t>(kb.induction_budget, kb.battery_budget);
  auto battery = make_battery(ctx, count, budget, t.seed);

  for (std::size_t bi = 0; bi < battery.size(); ++bi) {
    const ModuleRep& M = battery[bi];
    InductionMaps im = induction_maps(M);
    std::string id = "module-" + std::to_string(bi);
    std::string rj = repro("simples", id, t.seed, {&M});
    Mat I = Mat::identity(ctx.base(), im.induced.dim());
    t.check(im.phi * im.psi == I, id + "-phi-psi", "phi . psi != id", rj);
    t.check(im.psi * im.phi == I, id + "-psi-phi", "psi . phi != id", rj);
    t.check(intertwines(im.phi, im.induced, im.sum), id + "-phi-intertwiner",
            "phi is not A-linear", rj);
    t.check(intertwines(im.psi, im.sum, im.induced), id + "-psi-intertwiner",
            "psi is not A-linear", rj);
  }
  return rep;
}

// ---- duality: V(M) = V(M^#), both dual conventions ----

SuiteReport suite_duality(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "duality";
  Ctx t{cfg, rep, "duality", suite_seed(cfg, "duality")};
  FieldCtx ctx = make_ctx(cfg);
  Knobs kb = knobs_for(ctx, cfg);
  auto battery = make_battery(ctx, cfg.battery, kb.battery_budget, t.seed);

  for (std::size_t bi = 0; bi < battery.size(); ++bi) {
    const ModuleRep& M = battery[bi];
    VarietySet vm = rank_variety(M, cfg.ext_degrees, cfg.workers);
    VarietySet vd = rank_variety(dual(M), cfg.ext_degrees, cfg.workers);
    VarietySet vdi = rank_variety(dual_inv(M), cfg.ext_degrees, cfg.workers);
    std::string id = "module-" + std::to_string(bi);
    std::string rj = repro("duality", id, t.seed, {&M});
    t.check(variety_eq(vm, vd), id + "-dual", "V(M) != V(dual M)", rj);
    t.check(variety_eq(vm, vdi), id + "-dual-inv", "V(M) != V(dual_inv M)", rj);
  }
  return rep;
}

// ---- tensor: V(M⊗N) = V(M) ∩ V(N), one-sided containments reported ----

SuiteReport suite_tensor(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "tensor";
  Ctx t{cfg, rep, "tensor", suite_seed(cfg, "tensor")};
  FieldCtx ctx = make_ctx(cfg);
  Knobs kb = knobs_for(ctx, cfg);
  Rng rng(t.seed);

  std::vector<std::pair<ModuleRep, ModuleRep>> pairs;
  for (std::uint32_t k = 0; k < cfg.battery; ++k) {
    ModuleRep M = random_module(ctx, rng.next(), kb.tensor_factor);
    ModuleRep N = random_module(ctx, rng.next(), kb.tensor_factor);
    for (int retry = 0; retry < 12 && std::uint64_t(M.dim()) * N.dim() > 400; ++retry) {
      M = random_module(ctx, rng.next(), kb.tensor_factor);
      N = random_module(ctx, rng.next(), kb.tensor_factor);
    }
    if (std::uint64_t(M.dim()) * N.dim() > 400) {
      Char chi;
      chi.c.assign(ctx.n(), 0);
      N = simple_module(ctx, chi);
    }
    pairs.emplace_back(std::move(M), std::move(N));
  }

  // one pair near the size envelope: a Carlson module against the largest
  // partner that keeps the product within 400 (a proper subvariety on the left)
  std::uint64_t carlson_dim = ctx.algebra_dim() / ctx.ell();
  if (carlson_dim <= 400) {
    std::uint32_t partner_budget =
        std::uint32_t(std::min<std::uint64_t>(400 / carlson_dim, kb.battery_budget));
    if (partner_budget >= 1)
      pairs.emplace_back(carlson_module(ctx, random_point(ctx, rng)),
                         random_module(ctx, rng.next(), partner_budget));
  }
  // and one pair with a projective factor: both sides must come out empty
  std::uint64_t go = ctx.group_order();
  if (go <= 400) {
    std::uint32_t partner_budget =
        std::uint32_t(std::min<std::uint64_t>(400 / go, kb.battery_budget));
    if (partner_budget >= 1)
      pairs.emplace_back(projective_indecomposable(ctx, char_from_index(ctx, 1)),
                         random_module(ctx, rng.next(), partner_budget));
  }

  if (cfg.inject_fault && !pairs.empty()) {
    // test hook: corrupt one matrix entry (X_1 of the trivial module becomes
    // the identity, breaking nilpotence), bypassing validation. Tensored
    // against a projective, the corrupted factor pushes a point into the
    // product variety while the intersection stays empty, so the suite must
    // catch and report it.
    ModuleRep M = trivial_module(ctx);
    std::vector<Mat> X = M.X_all(), g = M.g_all();
    X[0].at(0, 0) = 1;
    pairs[0].first = ModuleRep::trusted(ctx, std::move(X), std::move(g));
    pairs[0].second = projective_indecomposable(ctx, char_from_index(ctx, 0));
  }

  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const ModuleRep& M = pairs[k].first;
    const ModuleRep& N = pairs[k].second;
    std::string id = "pair-" + std::to_string(k);
    std::string rj = repro("tensor", id, t.seed, {&M, &N});
    try {
      VarietySet vm = rank_variety(M, cfg.ext_degrees, cfg.workers);
      VarietySet vn = rank_variety(N, cfg.ext_degrees, cfg.workers);
      VarietySet vt = rank_variety(tensor(M, N), cfg.ext_degrees, cfg.workers);
      VarietySet cap = variety_cap(vm, vn);
      t.check(variety_subset(vt, cap), id + "-subset",
              "V(M x N) is not contained in V(M) ∩ V(N)", rj);
      t.check(variety_subset(cap, vt), id + "-superset",
              "V(M) ∩ V(N) is not contained in V(M x N)", rj);
      t.check(variety_eq(vt, cap), id + "-equality", "V(M x N) != V(M) ∩ V(N)", rj);
    } catch (const Error& e) {
      t.check(false, id + "-exception", e.what(), rj);
    }
  }

  // Carlson modules at disjoint orbits: the tensor product must be projective.
  // Needs n >= 2; P^0 has a single point.
  std::uint64_t cdim = carlson_dim;
  if (ctx.n() >= 2 && cdim * cdim <= 1100) {
    std::vector<ffelt> lam(ctx.n(), 0), mu(ctx.n(), 0);
    lam[0] = 1;
    mu[ctx.n() - 1] = 1;
    ModuleRep cl = carlson_module(ctx, lam);
    ModuleRep cm = carlson_module(ctx, mu);
    ModuleRep prod = tensor(cl, cm);
    std::string rj = repro("tensor", "carlson-disjoint", t.seed, {&cl, &cm});
    t.check(is_projective(prod), "carlson-disjoint-projective",
            "tensor of Carlson modules at disjoint orbits is not projective", rj);
    if (std::uint64_t(prod.dim()) <= 400) {
      VarietySet vt = rank_variety(prod, cfg.ext_degrees, cfg.workers);
      t.check(vt.total_points() == 0, "carlson-disjoint-variety",
              "variety of the disjoint Carlson tensor is nonempty", rj);
    }
  }
  return rep;
}

// ---- omega: V(ΩM) = V(M) and dim Ω(k) = ℓ^n - 1 ----

SuiteReport suite_omega(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "omega";
  Ctx t{cfg, rep, "omega", suite_seed(cfg, "omega")};
  FieldCtx ctx = make_ctx(cfg);
  Knobs kb = knobs_for(ctx, cfg);

  ModuleRep ok = omega(trivial_module(ctx));
  t.check(ok.dim() == ctx.group_order() - 1, "omega-k-dim",
          "dim Omega(k) = " + std::to_string(ok.dim()) + " != l^n - 1");

  auto battery = make_battery(ctx, kb.omega_count, kb.omega_budget, t.seed);
  for (std::size_t bi = 0; bi < battery.size(); ++bi) {
    const ModuleRep& M = battery[bi];
    CoverData cd = projective_cover(M);
    std::string id = "module-" + std::to_string(bi);
    std::string rj = repro("omega", id, t.seed, {&M});
    // minimality: the kernel sits inside the radical of the cover
    Mat rad = radical_basis(cd.cover);
    t.check(rad.hstack(cd.kernel_embed).rank() == rad.rank(), id + "-minimal",
            "cover kernel is not contained in rad(cover)", rj);
    VarietySet vm = rank_variety(M, cfg.ext_degrees, cfg.workers);
    VarietySet vo = rank_variety(cd.kernel, cfg.ext_degrees, cfg.workers);
    t.check(variety_eq(vm, vo), id + "-variety", "V(Omega M) != V(M)", rj);
  }
  return rep;
}

// ---- induction: V_R(M↓_R) = V_A(M) ----

SuiteReport suite_induction(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "induction";
  Ctx t{cfg, rep, "induction", suite_seed(cfg, "induction")};
  FieldCtx ctx = make_ctx(cfg);
  Knobs kb = knobs_for(ctx, cfg);
  auto battery = make_battery(ctx, kb.induction_count, kb.induction_budget, t.seed);

  for (std::size_t bi = 0; bi < battery.size(); ++bi) {
    const ModuleRep& M = battery[bi];
    VarietySet va = rank_variety(M, cfg.ext_degrees, cfg.workers);
    VarietySet vr = rank_variety_R(restrict_to_R(M), cfg.ext_degrees, cfg.workers);
    std::string id = "module-" + std::to_string(bi);
    t.check(variety_eq(va, vr), id + "-restriction", "V_R(M|_R) != V_A(M)",
            repro("induction", id, t.seed, {&M}));
  }
  return rep;
}

// ---- diagonal: τ_{Δʳλ} on M ⊠ N equals the coproduct action on M ⊗ N ----

SuiteReport suite_diagonal(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "diagonal";
  Ctx t{cfg, rep, "diagonal", suite_seed(cfg, "diagonal")};
  FieldCtx ctx = make_ctx(cfg);
  Knobs kb = knobs_for(ctx, cfg);
  Rng rng(t.seed);

  for (std::uint32_t k = 0; k < 50; ++k) {
    ModuleRep M = random_module(ctx, rng.next(), kb.diagonal_factor);
    ModuleRep N = random_module(ctx, rng.next(), kb.diagonal_factor);
    for (int retry = 0; retry < 12 && std::uint64_t(M.dim()) * N.dim() > 200; ++retry) {
      M = random_module(ctx, rng.next(), kb.diagonal_factor);
      N = random_module(ctx, rng.next(), kb.diagonal_factor);
    }
    std::vector<ffelt> lam = random_point(ctx, rng);
    std::string id = "triple-" + std::to_string(k);
    std::string rj = repro("diagonal", id, t.seed, {&M, &N}, &lam);
    t.check(diagonal_check(ctx, lam, M, N), id + "-identity",
            "tau_{diag lambda} on M boxtimes N != Delta(tau_lambda) on M x N", rj);
    // consequence: the point verdict transported through Δʳ
    ModuleRep T = tensor(M, N);
    PPoint pt{ctx.base(), lam};
    bool via_tensor = point_is_projective(T, pt);
    Mat big = boxtensor_tau_matrix(ctx, lam, M, N);
    bool via_box = T.dim() % ctx.ell() == 0 &&
                   big.pow(ctx.ell() - 1).rank() == T.dim() / ctx.ell();
    t.check(via_tensor == via_box, id + "-verdict",
            "projectivity verdict differs between the two routes", rj);
  }
  return rep;
}

// ---- carlson: V(V(λ)) = {λ} and the point criterion through tensoring ----

SuiteReport suite_carlson(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "carlson";
  Ctx t{cfg, rep, "carlson", suite_seed(cfg, "carlson")};
  FieldCtx ctx = make_ctx(cfg);
  Knobs kb = knobs_for(ctx, cfg);
  Rng rng(t.seed);

  std::uint64_t expected_dim = ctx.algebra_dim() / ctx.ell();
  for (std::uint32_t k = 0; k < 10; ++k) {
    std::vector<ffelt> lam = random_point(ctx, rng);
    ModuleRep c = carlson_module(ctx, lam);
    std::string id = "lambda-" + std::to_string(k);
    std::string rj = repro("carlson", id, t.seed, {}, &lam);
    t.check(c.dim() == expected_dim, id + "-dim",
            "Carlson module dimension " + std::to_string(c.dim()) + " != l^{2n-1}", rj);
    VarietySet v = rank_variety(c, cfg.ext_degrees, cfg.workers);
    PPoint base{ctx.base(), lam};
    std::vector<ffelt> canon = orbit_canonical(ctx, base).coords;
    bool single = true;
    for (std::uint32_t e : cfg.ext_degrees) {
      const auto& pts = v.degrees.at(e);
      single = single && pts.size() == 1 && *pts.begin() == canon;
    }
    t.check(single, id + "-variety", "V(carlson(lambda)) != {orbit(lambda)}", rj);
  }

  // λ ∈ V(M) ⟺ carlson(λ) ⊗ M not projective, against the direct point test
  auto partners = make_battery(ctx, kb.carlson_partners, kb.carlson_partner_budget,
                               suite_seed(cfg, "carlson-partners"));
  std::vector<PPoint> pts = enumerate_points(ctx, 1);
  std::vector<ModuleRep> carlsons;
  for (const PPoint& pt : pts) carlsons.push_back(carlson_module(ctx, pt.coords));
  for (std::size_t bi = 0; bi < partners.size(); ++bi) {
    const ModuleRep& M = partners[bi];
    for (std::size_t pi = 0; pi < pts.size(); ++pi) {
      bool in_variety = !point_is_projective(M, pts[pi]);
      bool via_tensor = !is_projective(tensor(carlsons[pi], M));
      std::string id = "criterion-" + std::to_string(bi) + "-" + std::to_string(pi);
      t.check(in_variety == via_tensor, id,
              "lambda in V(M) disagrees with projectivity of carlson(lambda) x M",
              repro("carlson", id, t.seed, {&M}, &pts[pi].coords, 1));
    }
  }
  return rep;
}

// ---- twist: V_{R_q}(ᵍM) = V_{R_q}(M) ----

SuiteReport suite_twist(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "twist";
  Ctx t{cfg, rep, "twist", suite_seed(cfg, "twist")};
  FieldCtx ctx = make_ctx(cfg);
  Knobs kb = knobs_for(ctx, cfg);
  Rng rng(t.seed);
  std::uint32_t n = ctx.n(), ell = ctx.ell();
  std::uint64_t go = ctx.group_order();

  for (std::uint32_t k = 0; k < kb.twist_count; ++k) {
    ModuleRep Msrc = random_module(ctx, rng.next(), kb.twist_budget);
    RqModule M = restrict_to_Rq(Msrc);
    VarietySet v0 = rank_variety_Rq(M, cfg.ext_degrees, cfg.workers);
    for (std::uint64_t gidx = 1; gidx < go; ++gidx) {
      std::vector<std::uint32_t> b(n);
      std::uint64_t v = gidx;
      for (std::uint32_t i = n; i-- > 0;) {
        b[i] = std::uint32_t(v % ell);
        v /= ell;
      }
      VarietySet vg = rank_variety_Rq(twist_g(M, b), cfg.ext_degrees, cfg.workers);
      std::string id = "module-" + std::to_string(k) + "-g" + std::to_string(gidx);
      t.check(variety_eq(v0, vg), id, "V_{Rq}(gM) != V_{Rq}(M)",
              repro("twist", id, t.seed, {&Msrc}));
    }
  }
  return rep;
}

// ---- projectivity: head test vs empty rank variety (cross-oracle) ----

SuiteReport suite_projectivity(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "projectivity";
  Ctx t{cfg, rep, "projectivity", suite_seed(cfg, "projectivity")};
  FieldCtx ctx = make_ctx(cfg);
  Knobs kb = knobs_for(ctx, cfg);
  auto battery = make_battery(ctx, cfg.battery, kb.battery_budget, t.seed);

  for (std::size_t bi = 0; bi < battery.size(); ++bi) {
    const ModuleRep& M = battery[bi];
    bool head_free = is_projective(M);
    bool variety_empty = rank_variety(M, cfg.ext_degrees, cfg.workers).total_points() == 0;
    std::string id = "module-" + std::to_string(bi);
    t.check(head_free == variety_empty, id,
            "projectivity (free over R) disagrees with empty rank variety",
            repro("projectivity", id, t.seed, {&M}));
  }
  return rep;
}

// ---- thickwitness: M is a split summand of M↓_R↑^A ----

SuiteReport suite_thickwitness(const SuiteConfig& cfg) {
  SuiteReport rep;
  rep.suite = "thickwitness";
  Ctx t{cfg, rep, "thickwitness", suite_seed(cfg, "thickwitness")};
  FieldCtx ctx = make_ctx(cfg);
  Knobs kb = knobs_for(ctx, cfg);
  std::uint32_t count = std::min<std::uint32_t>(cfg.battery, 10);
  std::uint32_t budget = std::min<std::uint32_t>(kb.induction_budget, kb.battery_budget);
  auto battery = make_battery(ctx, count, budget, t.seed);

  for (std::size_t bi = 0; bi < battery.size(); ++bi) {
    const ModuleRep& M = battery[bi];
    InductionMaps im = induction_maps(M);
    std::uint32_t dm = M.dim();
    FieldPtr f = ctx.base();
    // trivial-character block of ψ gives the split injection, of φ the retraction
    Mat inj(f, im.induced.dim(), dm), proj(f, dm, im.induced.dim());
    for (std::uint32_t r = 0; r < im.induced.dim(); ++r)
      for (std::uint32_t c = 0; c < dm; ++c) inj.at(r, c) = im.psi.at(r, c);
    for (std::uint32_t r = 0; r < dm; ++r)
      for (std::uint32_t c = 0; c < im.induced.dim(); ++c) proj.at(r, c) = im.phi.at(r, c);
    std::string id = "module-" + std::to_string(bi);
    std::string rj = repro("thickwitness", id, t.seed, {&M});
    t.check(proj * inj == Mat::identity(f, dm), id + "-split", "retraction . injection != id",
            rj);
    t.check(intertwines(inj, M, im.induced), id + "-injection",
            "split injection is not A-linear", rj);
    t.check(intertwines(proj, im.induced, M), id + "-retraction",
            "retraction is not A-linear", rj);
  }
  return rep;
}

using SuiteFn = SuiteReport (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"hopf", suite_hopf},
      {"structure", suite_structure},
      {"trivial-variety", suite_trivial_variety},
      {"conjugate", suite_conjugate},
      {"simples", suite_simples},
      {"duality", suite_duality},
      {"tensor", suite_tensor},
      {"omega", suite_omega},
      {"induction", suite_induction},
      {"diagonal", suite_diagonal},
      {"carlson", suite_carlson},
      {"twist", suite_twist},
      {"projectivity", suite_projectivity},
      {"thickwitness", suite_thickwitness},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

bool is_suite_name(const std::string& name) {
  for (auto& [n, fn] : registry())
    if (n == name) return true;
  return false;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  for (auto& [n, fn] : registry())
    if (n == name) {
      auto start = std::chrono::steady_clock::now();
      SuiteReport rep = fn(cfg);
      rep.wall_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      return rep;
    }
  fail(ErrorKind::BadFile, "unknown suite: " + name);
}

std::vector<SuiteReport> run_all(const SuiteConfig& cfg) {
  std::vector<SuiteReport> reps;
  for (auto& [name, fn] : registry()) reps.push_back(run_suite(name, cfg));
  return reps;
}

std::uint32_t default_size_budget(std::uint32_t ell, std::uint32_t n) {
  std::uint64_t go = 1;
  for (std::uint32_t i = 0; i < n; ++i) go *= ell;
  if (go <= 4) return 40;
  if (go <= 9) return 45;
  return 26;
}

std::vector<SuiteConfig> default_configs(std::uint64_t seed) {
  std::vector<SuiteConfig> cfgs;
  const std::array<std::array<std::uint32_t, 3>, 4> params = {
      {{2, 2, 5}, {3, 2, 7}, {2, 3, 5}, {5, 2, 11}}};  // (ℓ, n, p)
  for (auto& [ell, n, p] : params) {
    SuiteConfig cfg;
    cfg.ell = ell;
    cfg.n = n;
    cfg.p = p;
    cfg.seed = seed;
    cfg.size_budget = 0;
    cfgs.push_back(std::move(cfg));
  }
  return cfgs;
}

std::string report_to_json(const std::vector<ConfigReport>& reports) {
  json j;
  j["schema"] = 1;
  j["kind"] = "report";
  bool all_pass = true;
  json configs = json::array();
  for (auto& cr : reports) {
    json c;
    c["p"] = cr.cfg.p;
    c["ell"] = cr.cfg.ell;
    c["n"] = cr.cfg.n;
    c["seed"] = cr.cfg.seed;
    c["battery"] = cr.cfg.battery;
    c["size_budget"] = cr.cfg.size_budget;
    c["ext_degrees"] = cr.cfg.ext_degrees;
    c["trials"] = cr.cfg.trials;
    json suites = json::array();
    for (auto& s : cr.suites) {
      json sj;
      sj["name"] = s.suite;
      sj["cases"] = s.cases;
      json fails = json::array();
      for (auto& fl : s.failures) {
        json fj;
        fj["case"] = fl.case_id;
        fj["detail"] = fl.detail;
        fj["repro"] = json::parse(fl.repro_json.empty() ? "{}" : fl.repro_json);
        fails.push_back(std::move(fj));
      }
      sj["failures"] = std::move(fails);
      sj["pass"] = s.passed();
      suites.push_back(std::move(sj));
    }
    c["suites"] = std::move(suites);
    c["pass"] = cr.passed();
    all_pass = all_pass && cr.passed();
    configs.push_back(std::move(c));
  }
  j["configs"] = std::move(configs);
  j["pass"] = all_pass;
  return j.dump(2) + "\n";
}

std::string report_to_text(const std::vector<ConfigReport>& reports, bool include_times) {
  std::ostringstream out;
  bool all_pass = true;
  for (auto& cr : reports) {
    out << "config p=" << cr.cfg.p << " ell=" << cr.cfg.ell << " n=" << cr.cfg.n
        << " seed=" << cr.cfg.seed << "\n";
    for (auto& s : cr.suites) {
      out << "  " << (s.passed() ? "PASS" : "FAIL") << " " << s.suite << " (cases=" << s.cases;
      if (include_times) out << ", " << std::uint64_t(s.wall_ms) << " ms";
      out << ")\n";
      for (auto& fl : s.failures) out << "    failure " << fl.case_id << ": " << fl.detail << "\n";
      all_pass = all_pass && s.passed();
    }
  }
  out << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return out.str();
}

}  // namespace qea
