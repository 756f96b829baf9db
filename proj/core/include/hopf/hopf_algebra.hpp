#pragma once

#include <span>
#include <string>
#include <vector>

#include "hopf/linalg.hpp"
#include "hopf/report.hpp"
#include "hopf/tensor.hpp"

namespace hopf {

// Structure constants of a finite-dimensional bialgebra on a fixed basis
// e_0, ..., e_{n-1}. The unit is an arbitrary coordinate column.
struct Bialgebra {
  std::string name;
  FieldSpec field = FieldSpec::rational();
  std::vector<std::string> basis;
  Tensor3 mul;    // mul(i, j, k): coefficient of e_k in e_i e_j
  Vec unit;       // coordinates of 1
  Tensor3 comul;  // comul(i, j, k): coefficient of e_j (x) e_k in Delta(e_i)
  Vec counit;     // counit[i] = eps(e_i)

  std::size_t dim() const { return basis.size(); }
  // Throws ShapeError when sizes or fields disagree.
  void check_shape() const;
};

// Element-level operations on structure constants. Elements of A are
// coordinate vectors of length n, elements of A (x) A have length n^2 with
// index i * n + j for e_i (x) e_j.
class StructureOps {
 public:
  explicit StructureOps(const Bialgebra& data);

  std::size_t dim() const { return n_; }
  const FieldSpec& field() const { return field_; }

  Vec multiply(std::span<const Scalar> a, std::span<const Scalar> b) const;
  Vec coproduct(std::span<const Scalar> a) const;
  Scalar counit(std::span<const Scalar> a) const;
  // Componentwise product in A (x) A.
  Vec multiply2(std::span<const Scalar> x, std::span<const Scalar> y) const;
  // (k-1)-fold coproduct into A^{(x)k}; k = 1 returns a itself.
  Vec iterated_coproduct(std::span<const Scalar> a, unsigned legs) const;

  // n x n^2 matrix of the product map.
  Matrix product_map() const;
  // n^2 x n matrix of the coproduct.
  Matrix coproduct_map() const;
  Matrix left_multiplication(std::span<const Scalar> a) const;
  Matrix right_multiplication(std::span<const Scalar> a) const;

  struct Term {
    std::size_t index;
    Scalar coeff;
  };
  struct Term2 {
    std::size_t left;
    std::size_t right;
    Scalar coeff;
  };
  const std::vector<Term>& basis_product(std::size_t i, std::size_t j) const {
    return products_[i * n_ + j];
  }
  const std::vector<Term2>& basis_coproduct(std::size_t i) const { return coproducts_[i]; }

 private:
  std::size_t n_;
  FieldSpec field_;
  std::vector<std::vector<Term>> products_;
  std::vector<std::vector<Term2>> coproducts_;
  Vec counit_;
};

// A bialgebra together with a stored antipode (S(e_i) is column i).
class HopfAlgebra {
 public:
  HopfAlgebra(Bialgebra data, Matrix antipode);

  const Bialgebra& data() const { return data_; }
  const std::string& name() const { return data_.name; }
  const FieldSpec& field() const { return data_.field; }
  std::size_t dim() const { return data_.dim(); }
  const std::vector<std::string>& basis() const { return data_.basis; }
  const Tensor3& mul() const { return data_.mul; }
  const Tensor3& comul() const { return data_.comul; }
  const Vec& unit() const { return data_.unit; }
  const Vec& counit() const { return data_.counit; }
  const Matrix& antipode() const { return antipode_; }
  const StructureOps& ops() const { return ops_; }

  Vec basis_vec(std::size_t i) const { return unit_vec(field(), dim(), i); }
  Vec multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
    return ops_.multiply(a, b);
  }
  Vec coproduct(std::span<const Scalar> a) const { return ops_.coproduct(a); }
  Scalar apply_counit(std::span<const Scalar> a) const { return ops_.counit(a); }
  Vec apply_antipode(std::span<const Scalar> a) const { return antipode_.apply(a); }

  HopfAlgebra renamed(std::string name) const;

 private:
  Bialgebra data_;
  Matrix antipode_;
  StructureOps ops_;
};

// Result of checking every Hopf axiom on all basis indices.
struct ValidationReport {
  Report report;
  bool ok() const { return report.all_pass(); }
};

ValidationReport validate(const HopfAlgebra& h);

// A Hopf algebra that has passed validate(); the only entry point to the
// integral and duality computations.
class ValidatedAlgebra {
 public:
  // Throws InvalidAlgebra carrying the failing report lines.
  explicit ValidatedAlgebra(HopfAlgebra h);

  const HopfAlgebra& algebra() const { return algebra_; }
  const HopfAlgebra* operator->() const { return &algebra_; }
  const HopfAlgebra& operator*() const { return algebra_; }
  const Matrix& antipode_inverse() const { return antipode_inverse_; }

 private:
  HopfAlgebra algebra_;
  Matrix antipode_inverse_;
};

// Convolution m o (f (x) g) o Delta of two endomorphisms.
Matrix convolve(const Matrix& f, const Matrix& g, const StructureOps& ops);
// unit o counit as an n x n matrix.
Matrix unit_counit(const Bialgebra& data);

// Solves S * id = unit o counit in the convolution algebra and checks the
// right-sided law. Throws NoAntipode (inconsistent system or right law fails)
// or CorruptedData (non-unique solution).
Matrix compute_antipode(const Bialgebra& data);

// T1(a (x) b) = Delta(a)(1 (x) b) and T2(a (x) b) = (a (x) 1)Delta(b) as
// n^2 x n^2 matrices, with their inverses.
struct GaloisMaps {
  Matrix t1;
  Matrix t2;
  Matrix t1_inverse;
  Matrix t2_inverse;
};

// Throws NotRegular when T1 or T2 is singular.
GaloisMaps galois_maps(const Bialgebra& data);

// Regularity checks for the report: T1, T2 invertible with exact two-sided
// inverses.
Report check_galois(const HopfAlgebra& h);

}  // namespace hopf
