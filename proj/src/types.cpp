#include "abc/types.hpp"

#include <stdexcept>

namespace abc {

UniformBoxPrior::UniformBoxPrior(Vector lo, Vector hi)
    : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size() || lower.size() == 0) {
    throw std::invalid_argument("UniformBoxPrior: bound size mismatch");
  }
  for (int k = 0; k < lower.size(); ++k) {
    if (!(lower[k] < upper[k])) {
      throw std::invalid_argument("UniformBoxPrior: lower must be < upper in every dimension");
    }
  }
}

double UniformBoxPrior::volume() const { return (upper - lower).prod(); }

bool UniformBoxPrior::contains(const ParamVector& theta) const {
  if (theta.size() != lower.size()) return false;
  for (int k = 0; k < theta.size(); ++k) {
    if (theta[k] < lower[k] || theta[k] > upper[k]) return false;
  }
  return true;
}

Vector Standardizer::transform(const Vector& v) const {
  return (v - mean).cwiseQuotient(scale);
}

Vector Standardizer::inverse(const Vector& v) const {
  return v.cwiseProduct(scale) + mean;
}

Matrix Standardizer::transform_rows(const Matrix& rows) const {
  return (rows.rowwise() - mean.transpose()).array().rowwise() /
         scale.transpose().array();
}

Matrix Standardizer::inverse_rows(const Matrix& rows) const {
  return (rows.array().rowwise() * scale.transpose().array()).matrix().rowwise() +
         mean.transpose();
}

Standardizer Standardizer::identity(int dim) {
  Standardizer s;
  s.mean = Vector::Zero(dim);
  s.scale = Vector::Ones(dim);
  s.constant_dim.assign(static_cast<size_t>(dim), false);
  return s;
}

}  // namespace abc
