#include "lrkmeans/gram.hpp"

#include <stdexcept>

namespace lrkmeans {

GramOperator::GramOperator(const DataMatrix& data, bool center)
    : data_(&data) {
  if (center) {
    const Vector mean = data.values.rowwise().mean();
    centered_ = data.values.colwise() - mean;
  }
}

Matrix GramOperator::apply(const Matrix& U) const {
  Matrix xu, out;
  apply_into(U, xu, out);
  return out;
}

void GramOperator::apply_into(const Matrix& U, Matrix& xu, Matrix& out) const {
  const Matrix& X = x();
  if (U.rows() != X.cols()) {
    throw std::invalid_argument("GramOperator::apply: U has " +
                                std::to_string(U.rows()) +
                                " rows, expected " + std::to_string(X.cols()));
  }
  xu.noalias() = X * U;
  out.noalias() = -(X.transpose() * xu);
}

double GramOperator::quadratic_form(const Matrix& U) const {
  const Matrix& X = x();
  if (U.rows() != X.cols()) {
    throw std::invalid_argument("GramOperator::quadratic_form: dimension mismatch");
  }
  return -(X * U).squaredNorm();
}

}  // namespace lrkmeans
