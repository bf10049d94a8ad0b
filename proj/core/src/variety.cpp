#include "qea/variety.hpp"

#include <mutex>

#include "qea/parallel.hpp"

namespace qea {
namespace {

void check_degrees(const VarietySet& V, const VarietySet& W) {
  if (V.degrees.size() != W.degrees.size())
    fail(ErrorKind::DegreeMismatch, "variety sets cover different extension degrees");
  auto it = V.degrees.begin();
  auto jt = W.degrees.begin();
  for (; it != V.degrees.end(); ++it, ++jt)
    if (it->first != jt->first)
      fail(ErrorKind::DegreeMismatch, "variety sets cover different extension degrees");
}

}  // namespace

PPoint normalized(const PPoint& pt) {
  PPoint r = pt;
  for (ffelt c : r.coords) {
    if (c == 0) continue;
    if (c != 1) {
      ffelt inv = r.fld->inv(c);
      for (auto& x : r.coords) x = r.fld->mul(x, inv);
    }
    return r;
  }
  fail(ErrorKind::ZeroPoint, "projective point with all coordinates zero");
}

PPoint translate(const FieldCtx& ctx, const PPoint& pt, const std::vector<std::uint32_t>& b) {
  PPoint r = pt;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    ffelt qb = r.fld->from_residue(ctx.q_pow(b[i]));
    r.coords[i] = r.fld->mul(r.coords[i], qb);
  }
  return r;
}

PPoint orbit_canonical(const FieldCtx& ctx, const PPoint& pt) {
  std::uint32_t n = ctx.n(), ell = ctx.ell();
  std::uint64_t go = ctx.group_order();
  PPoint best = normalized(pt);
  std::vector<std::uint32_t> b(n, 0);
  for (std::uint64_t t = 1; t < go; ++t) {
    std::uint64_t v = t;
    for (std::uint32_t i = n; i-- > 0;) {
      b[i] = std::uint32_t(v % ell);
      v /= ell;
    }
    PPoint cand = normalized(translate(ctx, pt, b));
    if (cand.coords < best.coords) best = cand;
  }
  return best;
}

std::vector<PPoint> enumerate_points(const FieldCtx& ctx, std::uint32_t e) {
  FieldPtr f = ctx.extension(e);
  std::uint32_t n = ctx.n(), q = f->size();
  std::vector<PPoint> pts;
  for (std::uint32_t lead = 0; lead < n; ++lead) {
    std::uint64_t tail = n - 1 - lead;
    std::uint64_t count = 1;
    for (std::uint64_t i = 0; i < tail; ++i) count *= q;
    for (std::uint64_t t = 0; t < count; ++t) {
      PPoint pt{f, std::vector<ffelt>(n, 0)};
      pt.coords[lead] = 1;
      std::uint64_t v = t;
      for (std::uint32_t i = n; i-- > lead + 1;) {
        pt.coords[i] = ffelt(v % q);
        v /= q;
      }
      pts.push_back(std::move(pt));
    }
  }
  return pts;
}

std::uint64_t orbit_count_bruteforce(const FieldCtx& ctx, std::uint32_t e) {
  std::uint32_t n = ctx.n(), ell = ctx.ell();
  std::uint64_t go = ctx.group_order();
  std::set<std::vector<ffelt>> visited;
  std::uint64_t orbits = 0;
  std::vector<std::uint32_t> b(n, 0);
  for (const PPoint& pt : enumerate_points(ctx, e)) {
    if (visited.count(pt.coords)) continue;
    ++orbits;
    for (std::uint64_t t = 0; t < go; ++t) {
      std::uint64_t v = t;
      for (std::uint32_t i = n; i-- > 0;) {
        b[i] = std::uint32_t(v % ell);
        v /= ell;
      }
      visited.insert(normalized(translate(ctx, pt, b)).coords);
    }
  }
  return orbits;
}

std::uint64_t VarietySet::total_points() const {
  std::uint64_t t = 0;
  for (auto& [e, s] : degrees) t += s.size();
  return t;
}

Mat tau_matrix(const ModuleRep& M, const PPoint& lambda) {
  bool nonzero = false;
  for (ffelt c : lambda.coords) nonzero |= (c != 0);
  if (!nonzero) fail(ErrorKind::ZeroPoint, "tau_matrix at the zero point");
  if (lambda.coords.size() != M.ctx().n())
    fail(ErrorKind::IndexOutOfRange, "tau_matrix: expected n coordinates");
  if (lambda.fld->characteristic() != M.ctx().p())
    fail(ErrorKind::ContextMismatch, "point field has a different characteristic");
  std::vector<Mat> Y = y_matrices(M);
  Mat N(lambda.fld, M.dim(), M.dim());
  for (std::uint32_t i = 0; i < M.ctx().n(); ++i)
    if (lambda.coords[i]) N = N + Y[i].lift(lambda.fld).scaled(lambda.coords[i]);
  return N;
}

bool point_is_projective(const ModuleRep& M, const PPoint& lambda) {
  std::uint32_t ell = M.ctx().ell();
  if (M.dim() % ell != 0) return false;
  Mat N = tau_matrix(M, lambda);
  return N.pow(ell - 1).rank() == M.dim() / ell;
}

namespace {

// one lifted copy of the Y matrices per extension degree, shared by the scan
struct Scanner {
  FieldPtr fld;
  std::uint32_t dim, ell;
  std::vector<Mat> Y;

  bool projective(const std::vector<ffelt>& coords) const {
    if (dim % ell != 0) return false;
    Mat N(fld, dim, dim);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i]) N = N + Y[i].scaled(coords[i]);
    return N.pow(ell - 1).rank() == dim / ell;
  }
};

}  // namespace

VarietySet rank_variety(const ModuleRep& M, const std::vector<std::uint32_t>& degrees,
                        int workers) {
  VarietySet V;
  const FieldCtx& ctx = M.ctx();
  std::vector<Mat> Y = y_matrices(M);
  for (std::uint32_t e : degrees) {
    std::vector<PPoint> pts = enumerate_points(ctx, e);
    std::set<std::vector<ffelt>>& out = V.degrees[e];
    Scanner sc{ctx.extension(e), M.dim(), ctx.ell(), {}};
    for (auto& y : Y) sc.Y.push_back(y.lift(sc.fld));

    std::mutex mu;
    parallel_chunks(pts.size(), workers, [&](std::size_t, std::size_t begin, std::size_t end) {
      std::vector<std::vector<ffelt>> local;
      for (std::size_t i = begin; i < end; ++i)
        if (!sc.projective(pts[i].coords))
          local.push_back(orbit_canonical(ctx, pts[i]).coords);
      std::lock_guard<std::mutex> lock(mu);
      for (auto& c : local) out.insert(std::move(c));
    });
  }
  return V;
}

VarietySet rank_variety_R(const RModule& M, const std::vector<std::uint32_t>& degrees,
                          int workers) {
  return rank_variety(induce_R(M), degrees, workers);
}

VarietySet rank_variety_Rq(const RqModule& M, const std::vector<std::uint32_t>& degrees,
                           int workers) {
  return rank_variety(induce_Rq(M), degrees, workers);
}

VarietySet full_orbit_set(const FieldCtx& ctx, const std::vector<std::uint32_t>& degrees) {
  VarietySet V;
  for (std::uint32_t e : degrees) {
    auto& out = V.degrees[e];
    for (const PPoint& pt : enumerate_points(ctx, e))
      out.insert(orbit_canonical(ctx, pt).coords);
  }
  return V;
}

VarietySet psi_image(const FieldCtx& ctx, const VarietySet& V) {
  VarietySet W;
  for (auto& [e, pts] : V.degrees) {
    FieldPtr f = ctx.extension(e);
    auto& out = W.degrees[e];
    for (auto& coords : pts) {
      PPoint img{f, {}};
      img.coords.reserve(coords.size());
      for (ffelt c : coords) img.coords.push_back(f->pow(c, ctx.ell()));
      out.insert(normalized(img).coords);
    }
  }
  return W;
}

ModuleRep carlson_module(const FieldCtx& ctx, const std::vector<ffelt>& lambda) {
  Algebra A(ctx);
  return cyclic_quotient(ctx, A.tau(lambda));
}

Mat boxtensor_tau_matrix(const FieldCtx& ctx, const std::vector<ffelt>& lambda,
                         const ModuleRep& M, const ModuleRep& N) {
  bool nz = false;
  for (ffelt c : lambda) nz |= (c != 0);
  if (!nz) fail(ErrorKind::ZeroPoint, "boxtensor tau at the zero point");

  FieldPtr f = ctx.base();
  // With the generators of A⊗A ordered X_1⊗1, 1⊗X_1, ..., the Y-elements in
  // positions 2i-1 and 2i act as Y_i ⊗ (g_1…g_{i-1}) and (g_1…g_i) ⊗ Y_i,
  // and Δʳλ repeats each λ_i across both.
  std::vector<Mat> YM = y_matrices(M), YN = y_matrices(N);
  Mat PM = Mat::identity(f, M.dim());
  Mat PN = Mat::identity(f, N.dim());
  Mat T(f, M.dim() * N.dim(), M.dim() * N.dim());
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    Mat PMnext = PM * M.g(i);
    if (lambda[i]) {
      T = T + YM[i].kron(PN).scaled(lambda[i]);
      T = T + PMnext.kron(YN[i]).scaled(lambda[i]);
    }
    PM = PMnext;
    PN = PN * N.g(i);
  }
  return T;
}

bool diagonal_check(const FieldCtx& ctx, const std::vector<ffelt>& lambda, const ModuleRep& M,
                    const ModuleRep& N) {
  Mat T1 = boxtensor_tau_matrix(ctx, lambda, M, N);
  PPoint lam{ctx.base(), lambda};
  Mat T2 = tau_matrix(tensor(M, N), lam);
  return T1 == T2;
}

bool variety_eq(const VarietySet& V, const VarietySet& W) {
  check_degrees(V, W);
  return V.degrees == W.degrees;
}

VarietySet variety_cap(const VarietySet& V, const VarietySet& W) {
  check_degrees(V, W);
  VarietySet R;
  for (auto& [e, pts] : V.degrees) {
    auto& out = R.degrees[e];
    const auto& other = W.degrees.at(e);
    for (auto& c : pts)
      if (other.count(c)) out.insert(c);
  }
  return R;
}

VarietySet variety_cup(const VarietySet& V, const VarietySet& W) {
  check_degrees(V, W);
  VarietySet R = V;
  for (auto& [e, pts] : W.degrees) R.degrees[e].insert(pts.begin(), pts.end());
  return R;
}

bool variety_subset(const VarietySet& V, const VarietySet& W) {
  check_degrees(V, W);
  for (auto& [e, pts] : V.degrees) {
    const auto& other = W.degrees.at(e);
    for (auto& c : pts)
      if (!other.count(c)) return false;
  }
  return true;
}

}  // namespace qea
