#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shiftkit/field.hpp"

namespace shiftkit {

/// Dense row-major matrix over a field F. Scalars are always canonical.
template <class F>
class Mat {
 public:
  using Elem = typename F::Elem;

  Mat() = default;
  Mat(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Mat identity(const F& field, std::size_t n) {
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }
  static Mat from_rows(const F& field, std::size_t cols, const std::vector<std::vector<Elem>>& rows);
  /// Convenience for tests and literals: integer entries mapped into the field.
  static Mat from_ints(const F& field, const std::vector<std::vector<long long>>& rows);

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Mat& o) const;

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Elem& s) const;
  /// this += s * o
  void add_scaled(const Mat& o, const Elem& s);

  Mat select_rows(std::span<const std::size_t> idx) const;
  Mat select_cols(std::span<const std::size_t> idx) const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  void append_row(std::span<const Elem> r);

  static Mat vstack(const Mat& top, const Mat& bottom);
  static Mat hstack(const Mat& left, const Mat& right);

  /// Flattened row-major entries as a 1 x (rows*cols) matrix.
  Mat flatten() const;

 private:
  F field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

template <class F>
struct Rref {
  Mat<F> mat;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

template <class F>
struct KernelImage {
  Mat<F> kernel;  // columns span {x : m x = 0}
  Mat<F> image;   // columns span the column space of m
};

/// Reduced row echelon form. Over Q the forward pass is fraction-free.
template <class F>
Rref<F> rref(const Mat<F>& m);

template <class F>
std::size_t rank(const Mat<F>& m);

template <class F>
KernelImage<F> kernel_image(const Mat<F>& m);

/// Canonical particular solution of a x = b (free variables zero), or nullopt.
template <class F>
std::optional<Mat<F>> linear_solve(const Mat<F>& a, const Mat<F>& b);

// Row-vector helpers. Subspaces are represented by matrices whose rows form a basis.

/// Nonzero rows of the rref: canonical basis of the row space.
template <class F>
Mat<F> row_basis(const Mat<F>& m);

/// Rows spanning {x : m x^T = 0}, one per free column, with 1 on that column and 0 on the others.
template <class F>
Mat<F> kernel_rows(const Mat<F>& m);

/// Rows spanning {v : v m = 0}.
template <class F>
Mat<F> left_kernel(const Mat<F>& m);

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m);

template <class F>
Mat<F> power(const Mat<F>& m, std::size_t e);

template <class F>
bool is_nilpotent(const Mat<F>& m);

/// Canonical basis of the sum of two row spaces.
template <class F>
Mat<F> subspace_sum(const Mat<F>& a, const Mat<F>& b);

/// Coordinates of each row of v in the canonical basis `basis` (rref rows with `pivots`).
/// Throws MathError if a row is not in the span.
template <class F>
Mat<F> coordinates_in(const Mat<F>& basis, std::span<const std::size_t> pivots, const Mat<F>& v);

/// Pivot columns of an rref'd basis.
template <class F>
std::vector<std::size_t> pivot_columns(const Mat<F>& basis);

}  // namespace shiftkit
