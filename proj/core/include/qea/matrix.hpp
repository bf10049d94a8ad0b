#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qea/field.hpp"

namespace qea {

/// Dense row-major matrix over a single F_{p^e}.
class Mat {
public:
  Mat() = default;
  Mat(FieldPtr f, std::uint32_t rows, std::uint32_t cols)
      : f_(std::move(f)), rows_(rows), cols_(cols),
        a_(std::size_t(rows) * cols, 0) {}

  static Mat identity(FieldPtr f, std::uint32_t d);

  const FieldPtr& field() const { return f_; }
  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }

  ffelt at(std::uint32_t r, std::uint32_t c) const { return a_[std::size_t(r) * cols_ + c]; }
  ffelt& at(std::uint32_t r, std::uint32_t c) { return a_[std::size_t(r) * cols_ + c]; }
  const ffelt* row(std::uint32_t r) const { return &a_[std::size_t(r) * cols_]; }
  ffelt* row(std::uint32_t r) { return &a_[std::size_t(r) * cols_]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_zero() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(ffelt c) const;
  Mat negated() const;
  Mat transpose() const;
  Mat pow(std::uint32_t k) const;

  /// Kronecker product, this factor outermost: index (i*o.rows+k, j*o.cols+l).
  Mat kron(const Mat& o) const;

  /// Horizontal concatenation [this | o].
  Mat hstack(const Mat& o) const;
  /// Block diagonal sum.
  Mat dsum(const Mat& o) const;

  /// Entry-wise re-embedding into an extension of the same prime field.
  Mat lift(const FieldPtr& to) const;

  std::uint32_t rank() const;
  /// Columns span the right kernel; rank() + kernel_basis().cols() == cols().
  Mat kernel_basis() const;
  /// Column space basis in column echelon form.
  Mat column_space_basis() const;

  /// Solve this * X = rhs. Empty optional when inconsistent.
  std::optional<Mat> try_solve(const Mat& rhs) const;
  Mat solve(const Mat& rhs) const;

  std::optional<Mat> try_inverse() const;
  Mat inverse() const;

private:
  FieldPtr f_;
  std::uint32_t rows_ = 0, cols_ = 0;
  std::vector<ffelt> a_;
};

}  // namespace qea
