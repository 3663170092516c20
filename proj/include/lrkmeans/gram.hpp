#pragma once

#include "lrkmeans/types.hpp"

namespace lrkmeans {

// Matrix-free access to the negative Gram matrix A = -X^T X.
//
// All products are evaluated as -X^T (X U) in that fixed order, so every
// apply costs O(npr) time and O(np + nr) memory; the n x n matrix A is never
// formed. Read-only after construction; concurrent apply calls are safe.
class GramOperator {
 public:
  // Holds a reference to `data`; the caller keeps it alive. With
  // `center = true` a centered copy of X (global mean subtracted from every
  // column) is stored instead, so inner products act on centered data.
  explicit GramOperator(const DataMatrix& data, bool center = false);

  int n() const { return static_cast<int>(x().cols()); }
  int p() const { return static_cast<int>(x().rows()); }

  // A U = -X^T (X U). Throws std::invalid_argument on dimension mismatch.
  Matrix apply(const Matrix& U) const;

  // In-place variant writing into `out` (resized as needed); avoids the
  // return-value allocation in the solver hot loop. `xu` is scratch for the
  // p x r intermediate.
  void apply_into(const Matrix& U, Matrix& xu, Matrix& out) const;

  // <A, U U^T> = -||X U||_F^2, evaluated in factored form.
  double quadratic_form(const Matrix& U) const;

 private:
  const Matrix& x() const { return centered_.size() > 0 ? centered_ : data_->values; }

  const DataMatrix* data_;
  Matrix centered_;  // empty unless centering requested
};

}  // namespace lrkmeans
