#include "orthoposet/subspace.hpp"

#include <stdexcept>

namespace orthoposet {

RationalSubspace RationalSubspace::zero(std::size_t ambient) {
  RationalSubspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

RationalSubspace RationalSubspace::full(std::size_t ambient) {
  RationalSubspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

RationalSubspace::RationalSubspace(std::size_t ambient, const Matrix& spanning_rows) {
  if (spanning_rows.cols() != ambient && spanning_rows.rows() != 0)
    throw std::invalid_argument("subspace basis width != ambient dimension");
  ambient_ = ambient;
  RrefResult r = rref(spanning_rows.cols() == ambient ? spanning_rows : Matrix(0, ambient));
  basis_ = std::move(r.matrix);
  pivots_ = std::move(r.pivot_cols);
}

bool RationalSubspace::contains_vector(const std::vector<Scalar>& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length != ambient dimension");
  // Reduce v against the RREF basis; membership iff the residue vanishes.
  std::vector<Scalar> w = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Scalar& f = w[pivots_[r]];
    if (f.is_zero()) continue;
    Scalar g = f;  // pivot entries are 1
    for (std::size_t c = 0; c < ambient_; ++c) w[c] -= g * basis_.at(r, c);
  }
  for (const auto& s : w)
    if (!s.is_zero()) return false;
  return true;
}

bool RationalSubspace::contains(const RationalSubspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("containment across different ambient dimensions");
  for (std::size_t r = 0; r < other.basis_.rows(); ++r)
    if (!contains_vector(other.basis_.row(r))) return false;
  return true;
}

Matrix RationalSubspace::annihilator() const {
  // y * b^T = 0  <=>  (basis) y^T = 0, so take the kernel of the basis.
  return kernel_basis(basis_);
}

bool operator<(const RationalSubspace& a, const RationalSubspace& b) {
  if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t r = 0; r < a.basis_.rows(); ++r)
    for (std::size_t c = 0; c < a.basis_.cols(); ++c) {
      const Scalar &x = a.basis_.at(r, c), &y = b.basis_.at(r, c);
      if (x.re != y.re) return x.re < y.re;
      if (x.im != y.im) return x.im < y.im;
    }
  return false;
}

RationalSubspace subspace_sum(const RationalSubspace& a, const RationalSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace sum across different ambient dimensions");
  return RationalSubspace(a.ambient_dim(), a.basis().vstack(b.basis()));
}

RationalSubspace subspace_intersection(const RationalSubspace& a, const RationalSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace intersection across different ambient dimensions");
  // x in A∩B  <=>  x = u A = v B. Solve [A^T | -B^T] (u,v)^T = 0 and map the
  // u-part back through A.
  const Matrix& A = a.basis();
  const Matrix& B = b.basis();
  if (A.rows() == 0 || B.rows() == 0) return RationalSubspace::zero(a.ambient_dim());
  Matrix stacked = A.transpose().hstack(B.transpose().scaled(Scalar(-1)));
  Matrix ker = kernel_basis(stacked);  // rows (u, v)
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    std::vector<Scalar> x(a.ambient_dim());
    for (std::size_t k = 0; k < A.rows(); ++k) {
      const Scalar& u = ker.at(r, k);
      if (u.is_zero()) continue;
      for (std::size_t c = 0; c < a.ambient_dim(); ++c) x[c] += u * A.at(k, c);
    }
    rows.push_back(std::move(x));
  }
  return RationalSubspace(a.ambient_dim(), Matrix::from_rows(rows, a.ambient_dim()));
}

}  // namespace orthoposet
