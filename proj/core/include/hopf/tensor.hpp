#pragma once

#include <cstddef>
#include <vector>

#include "hopf/linalg.hpp"

namespace hopf {

// Cubic array of scalars indexed by basis triples. Used for the product
// (t(i, j, k) = coefficient of e_k in e_i e_j) and for the coproduct
// (t(i, j, k) = coefficient of e_j (x) e_k in Delta(e_i)).
class Tensor3 {
 public:
  Tensor3() : field_(FieldSpec::rational()), dim_(0) {}
  Tensor3(const FieldSpec& field, std::size_t dim)
      : field_(field), dim_(dim), data_(dim * dim * dim, Scalar::zero(field)) {}

  std::size_t dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<Scalar> data_;
};

}  // namespace hopf
