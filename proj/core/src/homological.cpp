#include "qea/homological.hpp"

#include <cassert>

#include "qea/prng.hpp"

namespace qea {

WeightBasis weight_decompose(const FieldCtx& ctx, const std::vector<Mat>& g) {
  std::uint32_t d = g.empty() ? 0 : g[0].rows();
  FieldPtr f = ctx.base();
  // refine blocks one generator at a time; character digits accumulate in lex order
  struct Block {
    Mat basis;  // d × b
    std::uint32_t chi;
  };
  std::vector<Block> blocks{{Mat::identity(f, d), 0}};
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    std::vector<Block> next;
    for (auto& blk : blocks) {
      if (blk.basis.cols() == 0) continue;
      Mat gb = g[i] * blk.basis;
      std::uint32_t found = 0;
      for (std::uint32_t c = 0; c < ctx.ell(); ++c) {
        Mat shifted = gb - blk.basis.scaled(ctx.q_pow(c));
        Mat ker = shifted.kernel_basis();
        if (ker.cols() == 0) continue;
        next.push_back({blk.basis * ker, blk.chi * ctx.ell() + c});
        found += ker.cols();
      }
      if (found != blk.basis.cols())
        fail(ErrorKind::ValidationFailure, "g-action is not diagonalizable");
    }
    blocks = std::move(next);
  }
  WeightBasis wb;
  wb.P = Mat(f, d, d);
  wb.weight.resize(d);
  std::uint32_t col = 0;
  for (auto& blk : blocks)
    for (std::uint32_t j = 0; j < blk.basis.cols(); ++j, ++col) {
      for (std::uint32_t r = 0; r < d; ++r) wb.P.at(r, col) = blk.basis.at(r, j);
      wb.weight[col] = blk.chi;
    }
  wb.Pinv = wb.P.inverse();
  return wb;
}

HomSpace hom_space(const ModuleRep& M, const ModuleRep& N) {
  if (!M.ctx().same_as(N.ctx())) fail(ErrorKind::ContextMismatch, "hom_space across contexts");
  const FieldCtx& ctx = M.ctx();
  FieldPtr f = ctx.base();
  std::uint32_t dm = M.dim(), dn = N.dim();
  HomSpace hs;
  if (dm == 0 || dn == 0) return hs;

  WeightBasis wm = weight_decompose(ctx, M.g_all());
  WeightBasis wn = weight_decompose(ctx, N.g_all());
  std::vector<Mat> xm, xn;
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    xm.push_back(wm.Pinv * M.X(i) * wm.P);
    xn.push_back(wn.Pinv * N.X(i) * wn.P);
  }

  // unknowns: entries T[a][b] with matching weights
  std::vector<std::int32_t> slot(std::size_t(dn) * dm, -1);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> unknowns;
  for (std::uint32_t a = 0; a < dn; ++a)
    for (std::uint32_t b = 0; b < dm; ++b)
      if (wn.weight[a] == wm.weight[b]) {
        slot[std::size_t(a) * dm + b] = std::int32_t(unknowns.size());
        unknowns.emplace_back(a, b);
      }
  std::uint32_t U = std::uint32_t(unknowns.size());
  if (U == 0) return hs;

  // equations T X'_M[i] - X'_N[i] T = 0, one row per (i, a, b)
  std::vector<std::vector<ffelt>> rows;
  std::vector<ffelt> row(U);
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    for (std::uint32_t a = 0; a < dn; ++a)
      for (std::uint32_t b = 0; b < dm; ++b) {
        std::fill(row.begin(), row.end(), 0);
        bool any = false;
        for (std::uint32_t c = 0; c < dm; ++c) {
          ffelt v = xm[i].at(c, b);
          if (!v) continue;
          std::int32_t s = slot[std::size_t(a) * dm + c];
          if (s < 0) continue;
          row[s] = f->add(row[s], v);
          any = true;
        }
        for (std::uint32_t c = 0; c < dn; ++c) {
          ffelt v = xn[i].at(a, c);
          if (!v) continue;
          std::int32_t s = slot[std::size_t(c) * dm + b];
          if (s < 0) continue;
          row[s] = f->sub(row[s], v);
          any = true;
        }
        if (any) rows.push_back(row);
      }
  }

  Mat sys(f, std::uint32_t(rows.size()), U);
  for (std::uint32_t r = 0; r < rows.size(); ++r)
    for (std::uint32_t c = 0; c < U; ++c) sys.at(r, c) = rows[r][c];
  Mat ker = rows.empty() ? Mat::identity(f, U) : sys.kernel_basis();

  for (std::uint32_t j = 0; j < ker.cols(); ++j) {
    Mat t(f, dn, dm);
    for (std::uint32_t u = 0; u < U; ++u) t.at(unknowns[u].first, unknowns[u].second) = ker.at(u, j);
    hs.basis.push_back(wn.P * t * wm.Pinv);
  }
  return hs;
}

IsoResult is_isomorphic(const ModuleRep& M, const ModuleRep& N, std::uint32_t trials,
                        std::uint64_t seed) {
  if (M.dim() != N.dim()) return {IsoVerdict::kNotIsomorphic, std::nullopt};
  if (M.dim() == 0) return {IsoVerdict::kIsomorphic, Mat(M.ctx().base(), 0, 0)};
  HomSpace hs = hom_space(M, N);
  if (hs.basis.empty()) return {IsoVerdict::kNotIsomorphic, std::nullopt};

  // sample over an extension big enough that a nonzero determinant polynomial
  // is unlikely to vanish at a random point
  std::uint32_t e = 1, pe = M.ctx().p();
  while (pe < 25) {
    ++e;
    pe *= M.ctx().p();
  }
  FieldPtr big = M.ctx().extension(e);
  std::vector<Mat> lifted;
  for (auto& t : hs.basis) lifted.push_back(t.lift(big));

  Rng rng(seed);
  for (std::uint32_t t = 0; t < trials; ++t) {
    Mat cand(big, N.dim(), M.dim());
    for (auto& b : lifted) {
      ffelt c = ffelt(rng.below(big->size()));
      if (c) cand = cand + b.scaled(c);
    }
    if (cand.try_inverse()) return {IsoVerdict::kIsomorphic, cand};
  }
  return {IsoVerdict::kUndetermined, std::nullopt};
}

Mat radical_basis(const ModuleRep& M) {
  Mat stacked(M.ctx().base(), M.dim(), 0);
  for (std::uint32_t i = 0; i < M.ctx().n(); ++i) stacked = stacked.hstack(M.X(i));
  return stacked.column_space_basis();
}

std::map<std::uint32_t, std::uint32_t> head_decompose(const ModuleRep& M) {
  std::map<std::uint32_t, std::uint32_t> mult;
  if (M.dim() == 0) return mult;
  ModuleRep head = quotient_module(M, radical_basis(M));
  if (head.dim() == 0) return mult;
  WeightBasis wb = weight_decompose(M.ctx(), head.g_all());
  for (std::uint32_t j = 0; j < head.dim(); ++j) ++mult[wb.weight[j]];
  return mult;
}

bool is_projective(const ModuleRep& M) {
  std::uint32_t head_dim = M.dim() - radical_basis(M).rank();
  return std::uint64_t(M.dim()) == M.ctx().group_order() * head_dim;
}

CoverData projective_cover(const ModuleRep& M) {
  const FieldCtx& ctx = M.ctx();
  FieldPtr f = ctx.base();
  std::uint32_t d = M.dim();
  std::uint32_t n = ctx.n(), ell = ctx.ell();
  std::uint32_t go = std::uint32_t(ctx.group_order());

  // head with explicit projection, then lift each head weight vector into the
  // matching weight space of M
  Mat rad = radical_basis(M);
  std::uint32_t s = rad.cols();
  std::uint32_t hd = d - s;

  CoverData cd;
  if (hd == 0) {
    // only the zero module has no head (rad A is nilpotent)
    if (d != 0)
      fail(ErrorKind::ValidationFailure, "nonzero module with rad M = M is not an A-module");
    std::vector<Mat> z(n, Mat(f, 0, 0));
    cd.cover = ModuleRep::trusted(ctx, z, z);
    cd.surjection = Mat(f, d, 0);
    cd.kernel = cd.cover;
    cd.kernel_embed = Mat(f, 0, 0);
    return cd;
  }

  // projection to complement coordinates (same construction as quotient_module)
  std::vector<bool> pivot_row(d, false);
  for (std::uint32_t j = 0; j < s; ++j) {
    std::uint32_t r = 0;
    while (r < d && rad.at(r, j) == 0) ++r;
    pivot_row[r] = true;
  }
  Mat full(f, d, d);
  std::vector<std::uint32_t> comp;
  for (std::uint32_t j = 0; j < s; ++j)
    for (std::uint32_t r = 0; r < d; ++r) full.at(r, j) = rad.at(r, j);
  for (std::uint32_t r = 0; r < d; ++r)
    if (!pivot_row[r]) {
      full.at(r, s + std::uint32_t(comp.size())) = 1;
      comp.push_back(r);
    }
  Mat finv = full.inverse();
  Mat proj(f, hd, d);
  for (std::uint32_t r = 0; r < hd; ++r)
    for (std::uint32_t c = 0; c < d; ++c) proj.at(r, c) = finv.at(s + r, c);

  std::vector<Mat> head_g;
  for (std::uint32_t i = 0; i < n; ++i) {
    Mat cols(f, d, hd);
    for (std::uint32_t j = 0; j < hd; ++j)
      for (std::uint32_t r = 0; r < d; ++r) cols.at(r, j) = M.g(i).at(r, comp[j]);
    head_g.push_back(proj * cols);
  }
  WeightBasis head_wb = weight_decompose(ctx, head_g);
  WeightBasis full_wb = weight_decompose(ctx, M.g_all());

  // group the weight columns of M by character for lifting
  std::map<std::uint32_t, std::vector<std::uint32_t>> weight_cols;
  for (std::uint32_t j = 0; j < d; ++j) weight_cols[full_wb.weight[j]].push_back(j);

  // one P(χ) block per head column, in head weight-basis order
  std::vector<ModuleRep> blocks;
  std::vector<Mat> lifts;  // d × 1 generator v per block
  for (std::uint32_t j = 0; j < hd; ++j) {
    std::uint32_t chi = head_wb.weight[j];
    Mat target(f, hd, 1);
    for (std::uint32_t r = 0; r < hd; ++r) target.at(r, 0) = head_wb.P.at(r, j);
    auto& cols = weight_cols[chi];
    Mat mchi(f, d, std::uint32_t(cols.size()));
    for (std::uint32_t c = 0; c < cols.size(); ++c)
      for (std::uint32_t r = 0; r < d; ++r) mchi.at(r, c) = full_wb.P.at(r, cols[c]);
    Mat sol = (proj * mchi).solve(target);
    lifts.push_back(mchi * sol);
    blocks.push_back(projective_indecomposable(ctx, char_from_index(ctx, chi)));
  }

  ModuleRep cover = blocks[0];
  for (std::uint32_t j = 1; j < hd; ++j) cover = dsum(cover, blocks[j]);

  // surjection column for basis element X^a of block j is ρ_M(X^a) v_j
  std::vector<std::uint32_t> radix(n);
  std::uint32_t place = 1;
  for (std::uint32_t i = n; i-- > 0;) {
    radix[i] = place;
    place *= ell;
  }
  Mat surj(f, d, cover.dim());
  for (std::uint32_t j = 0; j < hd; ++j) {
    std::vector<std::vector<ffelt>> vecs(go);
    for (std::uint32_t a = 0; a < go; ++a) {
      if (a == 0) {
        vecs[0].resize(d);
        for (std::uint32_t r = 0; r < d; ++r) vecs[0][r] = lifts[j].at(r, 0);
      } else {
        std::uint32_t i = 0;
        while (a / radix[i] % ell == 0) ++i;
        const std::vector<ffelt>& prev = vecs[a - radix[i]];
        std::vector<ffelt>& cur = vecs[a];
        cur.assign(d, 0);
        const Mat& xi = M.X(i);
        for (std::uint32_t r = 0; r < d; ++r) {
          ffelt acc = 0;
          for (std::uint32_t c = 0; c < d; ++c) {
            ffelt v = xi.at(r, c);
            if (v && prev[c]) acc = f->add(acc, f->mul(v, prev[c]));
          }
          cur[r] = acc;
        }
      }
      for (std::uint32_t r = 0; r < d; ++r) surj.at(r, j * go + a) = vecs[a][r];
    }
  }

  if (surj.rank() != d)
    fail(ErrorKind::ValidationFailure, "projective cover map is not surjective");

  Mat K = surj.kernel_basis();
  std::vector<Mat> kx, kg;
  for (std::uint32_t i = 0; i < n; ++i) {
    kx.push_back(K.solve(cover.X(i) * K));
    kg.push_back(K.solve(cover.g(i) * K));
  }
  cd.cover = std::move(cover);
  cd.surjection = std::move(surj);
  cd.kernel = ModuleRep::trusted(ctx, std::move(kx), std::move(kg));
#ifndef NDEBUG
  cd.kernel.validate();
#endif
  cd.kernel_embed = std::move(K);
  return cd;
}

ModuleRep omega(const ModuleRep& M) { return projective_cover(M).kernel; }

ModuleRep omega_inv(const ModuleRep& M) { return dual(omega(dual(M))); }

ModuleRep stable_reduce(const ModuleRep& M) { return omega_inv(omega(M)); }

}  // namespace qea
