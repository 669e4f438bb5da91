#include "shiftkit/matrix.hpp"

#include <algorithm>
#include <type_traits>

namespace shiftkit {

template <class F>
Mat<F> Mat<F>::from_rows(const F& field, std::size_t cols, const std::vector<std::vector<Elem>>& rows) {
  Mat m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("Mat::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class F>
Mat<F> Mat<F>::from_ints(const F& field, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Mat m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("Mat::from_ints: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

template <class F>
bool Mat<F>::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [&](const Elem& e) { return field_.is_zero(e); });
}

template <class F>
bool Mat<F>::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Elem& e = (*this)(i, j);
      if (i == j ? !field_.is_one(e) : !field_.is_zero(e)) return false;
    }
  return true;
}

template <class F>
bool Mat<F>::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!field_.eq(data_[k], o.data_[k])) return false;
  return true;
}

template <class F>
Mat<F> Mat<F>::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class F>
Mat<F> Mat<F>::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
  Mat r(field_, rows_, o.cols_);
  if constexpr (std::is_same_v<F, PrimeField>) {
    // Delayed reduction: each product is < 2^62, so sums of four fit in 64 bits.
    const std::uint64_t p = field_.characteristic();
    std::vector<std::uint64_t> acc(o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      unsigned pending = 0;
      for (std::size_t k = 0; k < cols_; ++k) {
        const std::uint64_t a = (*this)(i, k);
        if (a == 0) continue;
        const Elem* orow = o.data_.data() + k * o.cols_;
        for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * orow[j];
        if (++pending == 3) {
          for (auto& x : acc) x %= p;
          pending = 0;
        }
      }
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = static_cast<Elem>(acc[j] % p);
    }
  } else {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Elem& b = o(k, j);
          if (!field_.is_zero(b)) r(i, j) = field_.add(r(i, j), field_.mul(a, b));
        }
      }
  }
  return r;
}

template <class F>
Mat<F> Mat<F>::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator+: shape mismatch");
  Mat r(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.add(data_[k], o.data_[k]);
  return r;
}

template <class F>
Mat<F> Mat<F>::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator-: shape mismatch");
  Mat r(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = field_.sub(data_[k], o.data_[k]);
  return r;
}

template <class F>
Mat<F> Mat<F>::scaled(const Elem& s) const {
  Mat r(*this);
  for (auto& e : r.data_) e = field_.mul(e, s);
  return r;
}

template <class F>
void Mat<F>::add_scaled(const Mat& o, const Elem& s) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::add_scaled: shape mismatch");
  if (field_.is_zero(s)) return;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!field_.is_zero(o.data_[k])) data_[k] = field_.add(data_[k], field_.mul(s, o.data_[k]));
}

template <class F>
Mat<F> Mat<F>::select_rows(std::span<const std::size_t> idx) const {
  Mat r(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(idx[i] * cols_), cols_,
                r.data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  return r;
}

template <class F>
Mat<F> Mat<F>::select_cols(std::span<const std::size_t> idx) const {
  Mat r(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
  return r;
}

template <class F>
Mat<F> Mat<F>::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Mat r(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

template <class F>
void Mat<F>::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

template <class F>
void Mat<F>::append_row(std::span<const Elem> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("Mat::append_row: width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

template <class F>
Mat<F> Mat<F>::vstack(const Mat& top, const Mat& bottom) {
  if (top.rows_ == 0) return bottom;
  if (bottom.rows_ == 0) return top;
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("Mat::vstack: width mismatch");
  Mat r(top);
  r.data_.insert(r.data_.end(), bottom.data_.begin(), bottom.data_.end());
  r.rows_ += bottom.rows_;
  return r;
}

template <class F>
Mat<F> Mat<F>::hstack(const Mat& left, const Mat& right) {
  if (left.rows_ != right.rows_) throw std::invalid_argument("Mat::hstack: height mismatch");
  Mat r(left.field_, left.rows_, left.cols_ + right.cols_);
  r.set_block(0, 0, left);
  r.set_block(0, left.cols_, right);
  return r;
}

template <class F>
Mat<F> Mat<F>::flatten() const {
  Mat r(field_, 1, rows_ * cols_);
  r.data_ = data_;
  return r;
}

namespace {

template <class F>
Rref<F> rref_gauss_jordan(Mat<F> m) {
  const F& f = m.field();
  Rref<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && f.is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    auto inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      auto factor = m(i, c);
      if (f.is_zero(factor)) continue;
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!f.is_zero(m(r, j))) m(i, j) = f.sub_mul(m(i, j), factor, m(r, j));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.mat = std::move(m);
  return out;
}

// Fraction-free (Bareiss) forward elimination on integer rows, then rational back substitution.
Rref<Rationals> rref_fraction_free(const Mat<Rationals>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  Mat<Rationals> out(Rationals{}, rows, cols);
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t pc = pivots[k];
    mpq_class inv(1);
    inv /= mpq_class(a[k][pc]);
    for (std::size_t j = pc; j < cols; ++j) {
      out(k, j) = mpq_class(a[k][j]) * inv;
    }
    for (std::size_t kk = k + 1; kk < pivots.size(); ++kk) {
      // Clear the entries of row k at later pivot columns using already reduced rows.
      const std::size_t qc = pivots[kk];
      mpq_class factor = out(k, qc);
      if (sgn(factor) == 0) continue;
      for (std::size_t j = qc; j < cols; ++j)
        if (sgn(out(kk, j)) != 0) out(k, j) -= factor * out(kk, j);
    }
  }
  return {std::move(out), std::move(pivots)};
}

}  // namespace

template <class F>
Rref<F> rref(const Mat<F>& m) {
  if constexpr (std::is_same_v<F, Rationals>) {
    return rref_fraction_free(m);
  } else {
    return rref_gauss_jordan(m);
  }
}

template <class F>
std::size_t rank(const Mat<F>& m) {
  return rref(m).rank();
}

template <class F>
Mat<F> row_basis(const Mat<F>& m) {
  auto r = rref(m);
  return r.mat.block(0, 0, r.rank(), m.cols());
}

template <class F>
Mat<F> kernel_rows(const Mat<F>& m) {
  const F& f = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  Mat<F> k(f, m.cols() - r.rank(), m.cols());
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    k(row, c) = f.one();
    for (std::size_t i = 0; i < r.rank(); ++i) k(row, r.pivots[i]) = f.neg(r.mat(i, c));
    ++row;
  }
  return k;
}

template <class F>
Mat<F> left_kernel(const Mat<F>& m) {
  return kernel_rows(m.transpose());
}

template <class F>
KernelImage<F> kernel_image(const Mat<F>& m) {
  return {kernel_rows(m).transpose(), row_basis(m.transpose()).transpose()};
}

template <class F>
std::optional<Mat<F>> linear_solve(const Mat<F>& a, const Mat<F>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("linear_solve: dimension mismatch");
  auto r = rref(Mat<F>::hstack(a, b));
  Mat<F> x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < r.rank(); ++i) {
    const std::size_t pc = r.pivots[i];
    if (pc >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = r.mat(i, a.cols() + j);
  }
  return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto r = rref(Mat<F>::hstack(m, Mat<F>::identity(m.field(), m.rows())));
  if (r.rank() < m.rows() || (m.rows() > 0 && r.pivots[m.rows() - 1] != m.rows() - 1)) return std::nullopt;
  return r.mat.block(0, m.cols(), m.rows(), m.rows());
}

template <class F>
Mat<F> power(const Mat<F>& m, std::size_t e) {
  Mat<F> result = Mat<F>::identity(m.field(), m.rows());
  Mat<F> base = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

template <class F>
bool is_nilpotent(const Mat<F>& m) {
  Mat<F> p = m;
  std::size_t e = 1;
  while (e < m.rows() && !p.is_zero()) {
    p = p * p;
    e *= 2;
  }
  return p.is_zero();
}

template <class F>
Mat<F> subspace_sum(const Mat<F>& a, const Mat<F>& b) {
  return row_basis(Mat<F>::vstack(a, b));
}

template <class F>
std::vector<std::size_t> pivot_columns(const Mat<F>& basis) {
  const F& f = basis.field();
  std::vector<std::size_t> piv;
  piv.reserve(basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t c = 0;
    while (c < basis.cols() && f.is_zero(basis(i, c))) ++c;
    if (c == basis.cols()) throw MathError("pivot_columns: zero row in basis");
    piv.push_back(c);
  }
  return piv;
}

template <class F>
Mat<F> coordinates_in(const Mat<F>& basis, std::span<const std::size_t> pivots, const Mat<F>& v) {
  const F& f = v.field();
  Mat<F> coords(f, v.rows(), basis.rows());
  for (std::size_t i = 0; i < v.rows(); ++i) {
    std::vector<typename F::Elem> rest(v.row(i).begin(), v.row(i).end());
    for (std::size_t k = 0; k < basis.rows(); ++k) {
      auto c = rest[pivots[k]];
      coords(i, k) = c;
      if (f.is_zero(c)) continue;
      for (std::size_t j = 0; j < basis.cols(); ++j)
        if (!f.is_zero(basis(k, j))) rest[j] = f.sub_mul(rest[j], c, basis(k, j));
    }
    for (const auto& e : rest)
      if (!f.is_zero(e)) throw MathError("coordinates_in: vector not in span");
  }
  return coords;
}

#define SHIFTKIT_INSTANTIATE_MATRIX(F)                                                           \
  template class Mat<F>;                                                                         \
  template Rref<F> rref(const Mat<F>&);                                                          \
  template std::size_t rank(const Mat<F>&);                                                      \
  template KernelImage<F> kernel_image(const Mat<F>&);                                           \
  template std::optional<Mat<F>> linear_solve(const Mat<F>&, const Mat<F>&);                     \
  template Mat<F> row_basis(const Mat<F>&);                                                      \
  template Mat<F> kernel_rows(const Mat<F>&);                                                    \
  template Mat<F> left_kernel(const Mat<F>&);                                                    \
  template std::optional<Mat<F>> inverse(const Mat<F>&);                                         \
  template Mat<F> power(const Mat<F>&, std::size_t);                                             \
  template bool is_nilpotent(const Mat<F>&);                                                     \
  template Mat<F> subspace_sum(const Mat<F>&, const Mat<F>&);                                    \
  template std::vector<std::size_t> pivot_columns(const Mat<F>&);                                \
  template Mat<F> coordinates_in(const Mat<F>&, std::span<const std::size_t>, const Mat<F>&);

SHIFTKIT_INSTANTIATE_MATRIX(PrimeField)
SHIFTKIT_INSTANTIATE_MATRIX(Rationals)

}  // namespace shiftkit
