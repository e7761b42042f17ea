#include "orthoposet/matrix.hpp"

#include <stdexcept>

namespace orthoposet {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<std::vector<Scalar>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols_hint) {
  std::size_t cols = cols_hint;
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged row list");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  std::vector<Scalar> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

Matrix Matrix::conj_transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c).conj();
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix m(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, c) += a * o.at(k, c);
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
  return m;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (rows_ == 0 && cols_ == 0) return o;
  if (o.rows_ == 0 && o.cols_ == 0) return *this;
  if (cols_ != o.cols_) throw std::invalid_argument("vstack column mismatch");
  Matrix m(rows_ + o.rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
  for (std::size_t r = 0; r < o.rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m.at(rows_ + r, c) = o.at(r, c);
  return m;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("hstack row mismatch");
  Matrix m(rows_, cols_ + o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
    for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, cols_ + c) = o.at(r, c);
  }
  return m;
}

Scalar Matrix::det() const {
  if (!is_square()) throw std::invalid_argument("det of non-square matrix");
  Matrix work = *this;
  std::size_t n = rows_;
  Scalar result = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(work.at(pivot, c), work.at(col, c));
      result = -result;
    }
    const Scalar p = work.at(col, col);
    result *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (work.at(r, col).is_zero()) continue;
      Scalar f = work.at(r, col) / p;
      for (std::size_t c = col; c < n; ++c) work.at(r, c) -= f * work.at(col, c);
    }
  }
  return result;
}

Matrix Matrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = rows_;
  Matrix aug = hstack(identity(n));
  RrefResult r = rref(aug);
  if (r.rank != n || (n > 0 && r.pivot_cols.back() >= n))
    throw std::domain_error("matrix not invertible");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.matrix.at(i, n + j);
  return inv;
}

RrefResult rref(const Matrix& m) {
  Matrix work = m;
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows; ++col) {
    std::size_t pivot = lead;
    while (pivot < rows && work.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead)
      for (std::size_t c = 0; c < cols; ++c) std::swap(work.at(pivot, c), work.at(lead, c));
    Scalar inv = Scalar(1) / work.at(lead, col);
    for (std::size_t c = col; c < cols; ++c) work.at(lead, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || work.at(r, col).is_zero()) continue;
      Scalar f = work.at(r, col);
      for (std::size_t c = col; c < cols; ++c) work.at(r, c) -= f * work.at(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  RrefResult out;
  out.rank = pivots.size();
  out.pivot_cols = std::move(pivots);
  Matrix reduced(out.rank, cols);
  for (std::size_t r = 0; r < out.rank; ++r)
    for (std::size_t c = 0; c < cols; ++c) reduced.at(r, c) = work.at(r, c);
  out.matrix = std::move(reduced);
  return out;
}

Matrix kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivot_cols) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols);
    v[f] = 1;
    for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr)
      v[r.pivot_cols[pr]] = -r.matrix.at(pr, f);
    rows.push_back(std::move(v));
  }
  return Matrix::from_rows(rows, cols);
}

std::size_t rank_of(const Matrix& m) { return rref(m).rank; }

}  // namespace orthoposet
