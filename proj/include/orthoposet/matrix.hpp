#pragma once

#include "orthoposet/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace orthoposet {

// Dense matrix over the Gaussian rationals. Row-major storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<Scalar>> rows);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols_hint = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;
  Matrix conj_transpose() const;
  Matrix transpose() const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;

  // Stacks o below (same column count) or to the right (same row count).
  Matrix vstack(const Matrix& o) const;
  Matrix hstack(const Matrix& o) const;

  Scalar det() const;  // square matrices only
  Matrix inverse() const;  // throws if singular

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix matrix;                         // canonical reduced row-echelon form
  std::vector<std::size_t> pivot_cols;   // ascending
  std::size_t rank = 0;
};

RrefResult rref(const Matrix& m);

// Rows form a canonical basis of the right null space {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);

std::size_t rank_of(const Matrix& m);

}  // namespace orthoposet
