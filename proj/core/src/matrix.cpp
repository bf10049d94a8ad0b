#include "qea/matrix.hpp"

#include <cstring>

namespace qea {
namespace {

// dst += c * src, all length len over f. Hot loop of everything below.
inline void axpy(const Field& f, ffelt c, const ffelt* src, ffelt* dst, std::uint32_t len) {
  if (c == 0) return;
  const ffelt* mrow = f.mul_row(c);
  const ffelt* add = f.add_table();
  const std::uint32_t q = f.size();
  for (std::uint32_t j = 0; j < len; ++j)
    dst[j] = add[std::size_t(dst[j]) * q + mrow[src[j]]];
}

inline void scale_row(const Field& f, ffelt c, ffelt* dst, std::uint32_t len) {
  const ffelt* mrow = f.mul_row(c);
  for (std::uint32_t j = 0; j < len; ++j) dst[j] = mrow[dst[j]];
}

// In-place reduced row echelon form; returns pivot column list.
std::vector<std::uint32_t> rref(const Field& f, std::vector<ffelt>& a, std::uint32_t rows,
                                std::uint32_t cols) {
  std::vector<std::uint32_t> pivots;
  std::uint32_t r = 0;
  for (std::uint32_t c = 0; c < cols && r < rows; ++c) {
    std::uint32_t pr = r;
    while (pr < rows && a[std::size_t(pr) * cols + c] == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::uint32_t j = c; j < cols; ++j)
        std::swap(a[std::size_t(pr) * cols + j], a[std::size_t(r) * cols + j]);
    ffelt piv = a[std::size_t(r) * cols + c];
    if (piv != 1) scale_row(f, f.inv(piv), &a[std::size_t(r) * cols + c], cols - c);
    for (std::uint32_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      ffelt v = a[std::size_t(i) * cols + c];
      if (v == 0) continue;
      axpy(f, f.neg(v), &a[std::size_t(r) * cols + c], &a[std::size_t(i) * cols + c], cols - c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Mat Mat::identity(FieldPtr f, std::uint32_t d) {
  Mat m(std::move(f), d, d);
  for (std::uint32_t i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  for (ffelt v : a_)
    if (v) return false;
  return true;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->sub(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  Mat r(f_, rows_, o.cols_);
  const Field& f = *f_;
  for (std::uint32_t i = 0; i < rows_; ++i) {
    ffelt* ri = r.row(i);
    for (std::uint32_t k = 0; k < cols_; ++k) {
      ffelt v = at(i, k);
      if (v) axpy(f, v, o.row(k), ri, o.cols_);
    }
  }
  return r;
}

Mat Mat::scaled(ffelt c) const {
  Mat r(f_, rows_, cols_);
  const ffelt* mrow = f_->mul_row(c);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = mrow[a_[i]];
  return r;
}

Mat Mat::negated() const {
  Mat r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->neg(a_[i]);
  return r;
}

Mat Mat::transpose() const {
  Mat r(f_, cols_, rows_);
  for (std::uint32_t i = 0; i < rows_; ++i)
    for (std::uint32_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::pow(std::uint32_t k) const {
  if (k == 0) return identity(f_, rows_);
  Mat b = *this;
  while (!(k & 1)) {
    b = b * b;
    k >>= 1;
  }
  Mat r = b;
  k >>= 1;
  while (k) {
    b = b * b;
    if (k & 1) r = r * b;
    k >>= 1;
  }
  return r;
}

Mat Mat::kron(const Mat& o) const {
  Mat r(f_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::uint32_t i = 0; i < rows_; ++i)
    for (std::uint32_t j = 0; j < cols_; ++j) {
      ffelt v = at(i, j);
      if (!v) continue;
      const ffelt* mrow = f_->mul_row(v);
      for (std::uint32_t k = 0; k < o.rows_; ++k) {
        ffelt* dst = r.row(i * o.rows_ + k) + std::size_t(j) * o.cols_;
        const ffelt* src = o.row(k);
        for (std::uint32_t l = 0; l < o.cols_; ++l) dst[l] = mrow[src[l]];
      }
    }
  return r;
}

Mat Mat::hstack(const Mat& o) const {
  Mat r(f_, rows_, cols_ + o.cols_);
  for (std::uint32_t i = 0; i < rows_; ++i) {
    std::memcpy(r.row(i), row(i), cols_ * sizeof(ffelt));
    std::memcpy(r.row(i) + cols_, o.row(i), o.cols_ * sizeof(ffelt));
  }
  return r;
}

Mat Mat::dsum(const Mat& o) const {
  Mat r(f_, rows_ + o.rows_, cols_ + o.cols_);
  for (std::uint32_t i = 0; i < rows_; ++i)
    std::memcpy(r.row(i), row(i), cols_ * sizeof(ffelt));
  for (std::uint32_t i = 0; i < o.rows_; ++i)
    std::memcpy(r.row(rows_ + i) + cols_, o.row(i), o.cols_ * sizeof(ffelt));
  return r;
}

Mat Mat::lift(const FieldPtr& to) const {
  Mat r(to, rows_, cols_);
  // residues embed as constant digits, so indices carry over unchanged
  r.a_ = a_;
  return r;
}

std::uint32_t Mat::rank() const {
  std::vector<ffelt> a = a_;
  return std::uint32_t(rref(*f_, a, rows_, cols_).size());
}

Mat Mat::kernel_basis() const {
  std::vector<ffelt> a = a_;
  auto pivots = rref(*f_, a, rows_, cols_);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::uint32_t nullity = cols_ - std::uint32_t(pivots.size());
  Mat ker(f_, cols_, nullity);
  std::uint32_t kcol = 0;
  for (std::uint32_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    ker.at(c, kcol) = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      ker.at(pivots[pr], kcol) = f_->neg(a[pr * cols_ + c]);
    ++kcol;
  }
  return ker;
}

Mat Mat::column_space_basis() const {
  // echelonize the transpose, return nonzero rows transposed back
  Mat t = transpose();
  std::vector<ffelt> a = t.a_;
  auto pivots = rref(*f_, a, t.rows_, t.cols_);
  Mat basis(f_, rows_, std::uint32_t(pivots.size()));
  for (std::uint32_t j = 0; j < pivots.size(); ++j)
    for (std::uint32_t i = 0; i < rows_; ++i)
      basis.at(i, j) = a[std::size_t(j) * t.cols_ + i];
  return basis;
}

std::optional<Mat> Mat::try_solve(const Mat& rhs) const {
  std::uint32_t acols = cols_, bcols = rhs.cols_;
  Mat aug = hstack(rhs);
  auto pivots = rref(*f_, aug.a_, rows_, aug.cols_);
  // pivot in the rhs block means inconsistency
  std::vector<std::uint32_t> apiv;
  for (auto c : pivots) {
    if (c >= acols) return std::nullopt;
    apiv.push_back(c);
  }
  Mat x(f_, acols, bcols);
  for (std::size_t pr = 0; pr < apiv.size(); ++pr)
    for (std::uint32_t j = 0; j < bcols; ++j)
      x.at(apiv[pr], j) = aug.at(std::uint32_t(pr), acols + j);
  return x;
}

Mat Mat::solve(const Mat& rhs) const {
  auto x = try_solve(rhs);
  if (!x) fail(ErrorKind::NoSolution, "linear system is inconsistent");
  return *x;
}

std::optional<Mat> Mat::try_inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Mat aug = hstack(identity(f_, rows_));
  std::vector<ffelt> a = aug.a_;
  auto pivots = rref(*f_, a, rows_, aug.cols_);
  if (pivots.size() != rows_) return std::nullopt;
  for (std::uint32_t i = 0; i < rows_; ++i)
    if (pivots[i] != i) return std::nullopt;
  Mat inv(f_, rows_, rows_);
  for (std::uint32_t i = 0; i < rows_; ++i)
    std::memcpy(inv.row(i), &a[std::size_t(i) * aug.cols_ + rows_], rows_ * sizeof(ffelt));
  return inv;
}

Mat Mat::inverse() const {
  auto inv = try_inverse();
  if (!inv) fail(ErrorKind::Singular, "matrix is not invertible");
  return *inv;
}

}  // namespace qea
