#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "hopf/scalar.hpp"

namespace hopf {

// Coordinates of a vector with respect to a fixed basis.
using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec& field, std::size_t n);
Vec unit_vec(const FieldSpec& field, std::size_t n, std::size_t index);
bool is_zero(std::span<const Scalar> v);
Vec add(std::span<const Scalar> a, std::span<const Scalar> b);
Vec sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vec scale(const Scalar& s, std::span<const Scalar> v);
// In-place y += s * x.
void axpy(Vec& y, const Scalar& s, std::span<const Scalar> x);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
// Coordinates of a (x) b in the basis e_i (x) e_j, index i * |b| + j.
Vec tensor(std::span<const Scalar> a, std::span<const Scalar> b);

// Dense row-major matrix of exact scalars. Linear maps act on column
// coordinate vectors: column j is the image of the j-th basis vector.
class Matrix {
 public:
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  static Matrix zero(const FieldSpec& field, std::size_t rows, std::size_t cols) {
    return Matrix(field, rows, cols);
  }
  static Matrix from_columns(const FieldSpec& field, std::size_t rows,
                             const std::vector<Vec>& columns);
  static Matrix from_rows(const FieldSpec& field, std::size_t cols,
                          const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  std::span<const Scalar> row_span(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Matrix transpose() const;
  Vec apply(std::span<const Scalar> v) const;
  // Row vector times matrix.
  Vec apply_left(std::span<const Scalar> row_vec) const;
  Matrix pow(unsigned exponent) const;

  bool is_identity() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

// Result of fraction-free elimination followed by normalisation: the reduced
// row echelon form and the pivot column of each nonzero row.
struct EchelonForm {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Bareiss elimination (pivot = first nonzero entry in column order), then
// back-substitution to reduced row echelon form.
EchelonForm row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

// Basis of the kernel, one vector per free column, in increasing order of the
// free column; each basis vector has a 1 in its free column.
std::vector<Vec> nullspace(const Matrix& m);

// Unique solution of m x = b. Throws NoSolution when the system is
// inconsistent and NonUniqueSolution when it is underdetermined.
Vec solve(const Matrix& m, std::span<const Scalar> b);

// Throws SingularMatrix when m is not invertible.
Matrix invert(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);

// Smallest k >= 1 with m^k = I, or nullopt if none up to `limit`.
std::optional<unsigned> multiplicative_order(const Matrix& m, unsigned limit);

}  // namespace hopf
