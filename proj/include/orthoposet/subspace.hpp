#pragma once

#include "orthoposet/matrix.hpp"

#include <cstddef>

namespace orthoposet {

// Subspace of Q(i)^n held as a canonical RREF basis (rows = basis vectors,
// sorted by pivot column). Two subspaces are equal iff their stored bases
// compare equal entrywise.
class RationalSubspace {
 public:
  RationalSubspace() = default;

  static RationalSubspace zero(std::size_t ambient);
  static RationalSubspace full(std::size_t ambient);

  // Canonicalizes the given spanning rows; rows may be dependent.
  RationalSubspace(std::size_t ambient, const Matrix& spanning_rows);
  static RationalSubspace span_rows(const Matrix& rows) {
    return RationalSubspace(rows.cols(), rows);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

  bool is_zero() const { return dim() == 0; }
  bool contains_vector(const std::vector<Scalar>& v) const;
  bool contains(const RationalSubspace& other) const;

  // Rows spanning {y : y * b^T = 0 for every basis vector b}; used to cut
  // out the subspace by linear equations.
  Matrix annihilator() const;

  friend bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const RationalSubspace& a, const RationalSubspace& b) {
    return !(a == b);
  }
  friend bool operator<(const RationalSubspace& a, const RationalSubspace& b);

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;  // RREF, no zero rows
  std::vector<std::size_t> pivots_;
};

RationalSubspace subspace_sum(const RationalSubspace& a, const RationalSubspace& b);
RationalSubspace subspace_intersection(const RationalSubspace& a, const RationalSubspace& b);

}  // namespace orthoposet
