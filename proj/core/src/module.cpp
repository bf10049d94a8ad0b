#include "qea/module.hpp"

#include <cassert>

namespace qea {
namespace {

void check_ctx(const FieldCtx& a, const FieldCtx& b) {
  if (!a.same_as(b)) fail(ErrorKind::ContextMismatch, "modules over different contexts");
}

}  // namespace

std::uint32_t char_index(const FieldCtx& ctx, const Char& chi) {
  std::uint32_t idx = 0;
  for (std::uint32_t i = 0; i < ctx.n(); ++i) idx = idx * ctx.ell() + chi.c[i] % ctx.ell();
  return idx;
}

Char char_from_index(const FieldCtx& ctx, std::uint32_t idx) {
  Char chi;
  chi.c.assign(ctx.n(), 0);
  for (std::uint32_t i = ctx.n(); i-- > 0;) {
    chi.c[i] = idx % ctx.ell();
    idx /= ctx.ell();
  }
  return chi;
}

ModuleRep ModuleRep::checked(FieldCtx ctx, std::vector<Mat> X, std::vector<Mat> g) {
  ModuleRep m = trusted(std::move(ctx), std::move(X), std::move(g));
  m.validate();
  return m;
}

ModuleRep ModuleRep::trusted(FieldCtx ctx, std::vector<Mat> X, std::vector<Mat> g) {
  ModuleRep m;
  m.ctx_ = std::move(ctx);
  if (X.size() != m.ctx_.n() || g.size() != m.ctx_.n())
    fail(ErrorKind::ValidationFailure, "expected n X-matrices and n g-matrices");
  m.dim_ = X.empty() ? 0 : X[0].rows();
  for (auto& mat : X)
    if (mat.rows() != m.dim_ || mat.cols() != m.dim_)
      fail(ErrorKind::ValidationFailure, "X matrices must be square of equal dimension");
  for (auto& mat : g)
    if (mat.rows() != m.dim_ || mat.cols() != m.dim_)
      fail(ErrorKind::ValidationFailure, "g matrices must be square of equal dimension");
  m.X_ = std::move(X);
  m.g_ = std::move(g);
  return m;
}

void ModuleRep::validate() const {
  std::uint32_t n = ctx_.n(), ell = ctx_.ell();
  const Mat id = Mat::identity(ctx_.base(), dim_);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!(X_[i].pow(ell)).is_zero())
      fail(ErrorKind::ValidationFailure, "X[" + std::to_string(i) + "]^ell != 0");
    if (!(g_[i].pow(ell) == id))
      fail(ErrorKind::ValidationFailure, "g[" + std::to_string(i) + "]^ell != I");
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (!(X_[i] * X_[j] == X_[j] * X_[i]))
        fail(ErrorKind::ValidationFailure,
             "X[" + std::to_string(i) + "] and X[" + std::to_string(j) + "] do not commute");
      if (!(g_[i] * g_[j] == g_[j] * g_[i]))
        fail(ErrorKind::ValidationFailure,
             "g[" + std::to_string(i) + "] and g[" + std::to_string(j) + "] do not commute");
    }
  }
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      ffelt qd = (i == j) ? ctx_.q() : ffelt(1);
      if (!(g_[i] * X_[j] == (X_[j] * g_[i]).scaled(qd)))
        fail(ErrorKind::ValidationFailure, "g[" + std::to_string(i) + "]X[" + std::to_string(j) +
                                               "] != q^delta X[" + std::to_string(j) + "]g[" +
                                               std::to_string(i) + "]");
    }
}

void RModule::validate() const {
  std::uint32_t n = ctx.n(), ell = ctx.ell();
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!X[i].pow(ell).is_zero())
      fail(ErrorKind::ValidationFailure, "R-module: X[" + std::to_string(i) + "]^ell != 0");
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (!(X[i] * X[j] == X[j] * X[i]))
        fail(ErrorKind::ValidationFailure, "R-module: X matrices do not commute");
  }
}

void RqModule::validate() const {
  std::uint32_t n = ctx.n(), ell = ctx.ell();
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!Y[i].pow(ell).is_zero())
      fail(ErrorKind::ValidationFailure, "Rq-module: Y[" + std::to_string(i) + "]^ell != 0");
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (!(Y[j] * Y[i] == (Y[i] * Y[j]).scaled(ctx.q())))
        fail(ErrorKind::ValidationFailure, "Rq-module: Y[j]Y[i] != q Y[i]Y[j] for i<j");
  }
}

ModuleRep trivial_module(const FieldCtx& ctx) {
  return simple_module(ctx, char_from_index(ctx, 0));
}

ModuleRep simple_module(const FieldCtx& ctx, const Char& chi) {
  std::vector<Mat> X, g;
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    Mat x(ctx.base(), 1, 1);
    Mat gm(ctx.base(), 1, 1);
    gm.at(0, 0) = ctx.q_pow(chi.c[i]);
    X.push_back(x);
    g.push_back(gm);
  }
  return ModuleRep::trusted(ctx, std::move(X), std::move(g));
}

ModuleRep regular_rep(const FieldCtx& ctx) {
  Algebra A(ctx);
  std::uint32_t d = A.dim();
  std::vector<Mat> X, g;
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    Mat xm(ctx.base(), d, d), gm(ctx.base(), d, d);
    AlgebraElement xi = A.x_gen(i), gi = A.g_gen(i);
    for (std::uint32_t m = 0; m < d; ++m) {
      AlgebraElement mono{ctx, {{m, 1}}};
      for (auto& [idx, c] : A.multiply(xi, mono).terms) xm.at(idx, m) = c;
      for (auto& [idx, c] : A.multiply(gi, mono).terms) gm.at(idx, m) = c;
    }
    X.push_back(std::move(xm));
    g.push_back(std::move(gm));
  }
  return ModuleRep::trusted(ctx, std::move(X), std::move(g));
}

ModuleRep projective_indecomposable(const FieldCtx& ctx, const Char& chi) {
  // basis {X^a ⊗ 1}, a in lex order: X_i shifts a_i up, g_i is diagonal
  // with entry q^{a_i + c_i}
  std::uint32_t n = ctx.n(), ell = ctx.ell();
  std::uint32_t d = std::uint32_t(ctx.group_order());
  std::vector<std::uint32_t> radix(n);
  std::uint32_t place = 1;
  for (std::uint32_t i = n; i-- > 0;) {
    radix[i] = place;
    place *= ell;
  }
  std::vector<Mat> X, g;
  for (std::uint32_t i = 0; i < n; ++i) {
    Mat xm(ctx.base(), d, d), gm(ctx.base(), d, d);
    for (std::uint32_t a = 0; a < d; ++a) {
      std::uint32_t ai = a / radix[i] % ell;
      if (ai + 1 < ell) xm.at(a + radix[i], a) = 1;
      gm.at(a, a) = ctx.q_pow(std::int64_t(ai) + chi.c[i]);
    }
    X.push_back(std::move(xm));
    g.push_back(std::move(gm));
  }
  return ModuleRep::trusted(ctx, std::move(X), std::move(g));
}

Mat invariant_closure(const std::vector<Mat>& action, const Mat& seed) {
  Mat basis = seed.column_space_basis();
  for (;;) {
    Mat stacked = basis;
    for (const Mat& a : action) stacked = stacked.hstack(a * basis);
    Mat next = stacked.column_space_basis();
    if (next.cols() == basis.cols()) return next;
    basis = next;
  }
}

std::vector<Mat> quotient_action(const FieldPtr& f, const std::vector<Mat>& action,
                                 const Mat& S) {
  std::uint32_t d = action.empty() ? S.rows() : action[0].rows();
  Mat basis = S.column_space_basis();
  std::uint32_t s = basis.cols();
#ifndef NDEBUG
  for (const Mat& a : action) assert(invariant_closure({a}, basis).cols() == s);
#endif
  // complement: standard basis vectors at non-pivot rows of the echelon basis
  std::vector<bool> pivot_row(d, false);
  for (std::uint32_t j = 0; j < s; ++j) {
    std::uint32_t r = 0;
    while (r < d && basis.at(r, j) == 0) ++r;
    pivot_row[r] = true;
  }
  std::uint32_t qd = d - s;
  Mat full(f, d, d);
  std::vector<std::uint32_t> comp;
  for (std::uint32_t j = 0; j < s; ++j)
    for (std::uint32_t r = 0; r < d; ++r) full.at(r, j) = basis.at(r, j);
  for (std::uint32_t r = 0; r < d; ++r)
    if (!pivot_row[r]) {
      full.at(r, s + std::uint32_t(comp.size())) = 1;
      comp.push_back(r);
    }
  Mat finv = full.inverse();
  // projection to complement coordinates = last qd rows of finv
  Mat proj(f, qd, d);
  for (std::uint32_t r = 0; r < qd; ++r)
    for (std::uint32_t c = 0; c < d; ++c) proj.at(r, c) = finv.at(s + r, c);

  std::vector<Mat> out;
  for (const Mat& rho : action) {
    Mat cols(f, d, qd);
    for (std::uint32_t j = 0; j < qd; ++j)
      for (std::uint32_t r = 0; r < d; ++r) cols.at(r, j) = rho.at(r, comp[j]);
    out.push_back(proj * cols);
  }
  return out;
}

ModuleRep quotient_module(const ModuleRep& M, const Mat& S) {
  std::vector<Mat> all = M.X_all();
  for (const Mat& g : M.g_all()) all.push_back(g);
  std::vector<Mat> quot = quotient_action(M.ctx().base(), all, S);
  std::vector<Mat> X(quot.begin(), quot.begin() + M.ctx().n());
  std::vector<Mat> g(quot.begin() + M.ctx().n(), quot.end());
  ModuleRep Q = ModuleRep::trusted(M.ctx(), std::move(X), std::move(g));
#ifndef NDEBUG
  Q.validate();
#endif
  return Q;
}

ModuleRep cyclic_quotient(const FieldCtx& ctx, const AlgebraElement& u) {
  Algebra A(ctx);
  std::uint32_t d = A.dim();
  Mat rmul(ctx.base(), d, d);
  for (std::uint32_t m = 0; m < d; ++m) {
    AlgebraElement mono{ctx, {{m, 1}}};
    for (auto& [idx, c] : A.multiply(mono, u).terms) rmul.at(idx, m) = c;
  }
  return quotient_module(regular_rep(ctx), rmul);
}

ModuleRep tensor(const ModuleRep& M, const ModuleRep& N) {
  check_ctx(M.ctx(), N.ctx());
  const FieldCtx& ctx = M.ctx();
  std::vector<Mat> X, g;
  Mat idM = Mat::identity(ctx.base(), M.dim());
  Mat idN = Mat::identity(ctx.base(), N.dim());
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    X.push_back(M.X(i).kron(idN) + M.g(i).kron(N.X(i)));
    g.push_back(M.g(i).kron(N.g(i)));
  }
  ModuleRep T = ModuleRep::trusted(ctx, std::move(X), std::move(g));
#ifndef NDEBUG
  T.validate();
#endif
  return T;
}

ModuleRep dual(const ModuleRep& M) {
  // ρ_{M^#}(u) = ρ_M(S(u))^T on generators
  const FieldCtx& ctx = M.ctx();
  std::vector<Mat> X, g;
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    Mat ginv = M.g(i).pow(ctx.ell() - 1);
    g.push_back(ginv.transpose());
    X.push_back((ginv * M.X(i)).negated().transpose());
  }
  ModuleRep D = ModuleRep::trusted(ctx, std::move(X), std::move(g));
#ifndef NDEBUG
  D.validate();
#endif
  return D;
}

ModuleRep dual_inv(const ModuleRep& M) {
  // same with S^{-1}: S^{-1}(X_i) = -q g_i^{-1} X_i
  const FieldCtx& ctx = M.ctx();
  std::vector<Mat> X, g;
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    Mat ginv = M.g(i).pow(ctx.ell() - 1);
    g.push_back(ginv.transpose());
    X.push_back((ginv * M.X(i)).scaled(ctx.q()).negated().transpose());
  }
  ModuleRep D = ModuleRep::trusted(ctx, std::move(X), std::move(g));
#ifndef NDEBUG
  D.validate();
#endif
  return D;
}

ModuleRep dsum(const ModuleRep& M, const ModuleRep& N) {
  check_ctx(M.ctx(), N.ctx());
  std::vector<Mat> X, g;
  for (std::uint32_t i = 0; i < M.ctx().n(); ++i) {
    X.push_back(M.X(i).dsum(N.X(i)));
    g.push_back(M.g(i).dsum(N.g(i)));
  }
  return ModuleRep::trusted(M.ctx(), std::move(X), std::move(g));
}

RModule restrict_to_R(const ModuleRep& M) { return RModule{M.ctx(), M.X_all()}; }

RqModule restrict_to_Rq(const ModuleRep& M) { return RqModule{M.ctx(), y_matrices(M)}; }

std::vector<Mat> y_matrices(const ModuleRep& M) {
  std::vector<Mat> Y;
  Mat gprod = Mat::identity(M.ctx().base(), M.dim());
  for (std::uint32_t i = 0; i < M.ctx().n(); ++i) {
    Y.push_back(M.X(i) * gprod);
    gprod = gprod * M.g(i);
  }
  return Y;
}

namespace {

// shared shape of induce_R / induce_Rq: basis {g^b ⊗ m}, b lex-ordered;
// g_j shifts b, the coefficient action is block diagonal with block b scaled
// by q^{-b_i}.
std::vector<Mat> induced_g(const FieldCtx& ctx, std::uint32_t dm) {
  std::uint32_t n = ctx.n(), ell = ctx.ell();
  std::uint32_t go = std::uint32_t(ctx.group_order());
  std::vector<std::uint32_t> radix(n);
  std::uint32_t place = 1;
  for (std::uint32_t i = n; i-- > 0;) {
    radix[i] = place;
    place *= ell;
  }
  std::vector<Mat> g;
  for (std::uint32_t j = 0; j < n; ++j) {
    Mat gm(ctx.base(), go * dm, go * dm);
    for (std::uint32_t b = 0; b < go; ++b) {
      std::uint32_t bj = b / radix[j] % ell;
      std::uint32_t tb = (bj + 1 < ell) ? b + radix[j] : b - radix[j] * (ell - 1);
      for (std::uint32_t m = 0; m < dm; ++m) gm.at(tb * dm + m, b * dm + m) = 1;
    }
    g.push_back(std::move(gm));
  }
  return g;
}

std::vector<Mat> induced_coeff_action(const FieldCtx& ctx, const std::vector<Mat>& act,
                                      std::uint32_t dm) {
  std::uint32_t n = ctx.n(), ell = ctx.ell();
  std::uint32_t go = std::uint32_t(ctx.group_order());
  std::vector<std::uint32_t> radix(n);
  std::uint32_t place = 1;
  for (std::uint32_t i = n; i-- > 0;) {
    radix[i] = place;
    place *= ell;
  }
  std::vector<Mat> out;
  for (std::uint32_t i = 0; i < n; ++i) {
    Mat am(ctx.base(), go * dm, go * dm);
    for (std::uint32_t b = 0; b < go; ++b) {
      std::uint32_t bi = b / radix[i] % ell;
      ffelt c = ctx.q_pow(-std::int64_t(bi));
      for (std::uint32_t r = 0; r < dm; ++r)
        for (std::uint32_t s = 0; s < dm; ++s) {
          ffelt v = act[i].at(r, s);
          if (v) am.at(b * dm + r, b * dm + s) = ctx.base()->mul(c, v);
        }
    }
    out.push_back(std::move(am));
  }
  return out;
}

}  // namespace

ModuleRep induce_R(const RModule& M) {
  std::uint32_t dm = M.dim();
  std::vector<Mat> g = induced_g(M.ctx, dm);
  std::vector<Mat> X = induced_coeff_action(M.ctx, M.X, dm);
  ModuleRep I = ModuleRep::trusted(M.ctx, std::move(X), std::move(g));
#ifndef NDEBUG
  I.validate();
#endif
  return I;
}

ModuleRep induce_Rq(const RqModule& M) {
  std::uint32_t dm = M.dim();
  std::vector<Mat> g = induced_g(M.ctx, dm);
  std::vector<Mat> Y = induced_coeff_action(M.ctx, M.Y, dm);
  // transport through R_q ⋊ G ≅ A:  X_i = Y_i (g_1 ⋯ g_{i-1})^{-1}
  std::vector<Mat> X;
  Mat gprod = Mat::identity(M.ctx.base(), g[0].rows());
  for (std::uint32_t i = 0; i < M.ctx.n(); ++i) {
    X.push_back(Y[i] * gprod.pow(M.ctx.ell() - 1));
    gprod = gprod * g[i];
  }
  ModuleRep I = ModuleRep::trusted(M.ctx, std::move(X), std::move(g));
#ifndef NDEBUG
  I.validate();
#endif
  return I;
}

RqModule twist_g(const RqModule& M, const std::vector<std::uint32_t>& b) {
  if (b.size() != M.ctx.n()) fail(ErrorKind::IndexOutOfRange, "twist: expected n exponents");
  RqModule T{M.ctx, {}};
  for (std::uint32_t i = 0; i < M.ctx.n(); ++i)
    T.Y.push_back(M.Y[i].scaled(M.ctx.q_pow(-std::int64_t(b[i] % M.ctx.ell()))));
  return T;
}

Mat act(const ModuleRep& M, const AlgebraElement& u) {
  if (!M.ctx().same_as(u.ctx)) fail(ErrorKind::ContextMismatch, "act: element from another context");
  Algebra A(M.ctx());
  std::uint32_t n = M.ctx().n();
  Mat res(M.ctx().base(), M.dim(), M.dim());
  std::vector<std::uint32_t> a, bexp;
  for (auto& [idx, c] : u.terms) {
    A.mono_decode(idx, a, bexp);
    Mat m = Mat::identity(M.ctx().base(), M.dim());
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < a[i]; ++k) m = m * M.X(i);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < bexp[i]; ++k) m = m * M.g(i);
    res = res + m.scaled(c);
  }
  return res;
}

}  // namespace qea
