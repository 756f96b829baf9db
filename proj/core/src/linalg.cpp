#include "hopf/linalg.hpp"

#include <ostream>
#include <utility>

#include "hopf/errors.hpp"

namespace hopf {

Vec zero_vec(const FieldSpec& field, std::size_t n) {
  return Vec(n, Scalar::zero(field));
}

Vec unit_vec(const FieldSpec& field, std::size_t n, std::size_t index) {
  Vec v = zero_vec(field, n);
  v.at(index) = Scalar::one(field);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vec add(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw ShapeError("vector sizes differ");
  Vec r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw ShapeError("vector sizes differ");
  Vec r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& s, std::span<const Scalar> v) {
  Vec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.is_zero() ? x : s * x);
  return r;
}

void axpy(Vec& y, const Scalar& s, std::span<const Scalar> x) {
  if (y.size() != x.size()) throw ShapeError("vector sizes differ");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += s * x[i];
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw ShapeError("vector sizes differ");
  if (a.empty()) throw ShapeError("dot product of empty vectors");
  Scalar acc = Scalar::zero(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  return acc;
}

Vec tensor(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.empty() || b.empty()) throw ShapeError("tensor of empty vectors");
  Vec r = zero_vec(a[0].field(), a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

// ---------------------------------------------------------------------------

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& field, std::size_t rows,
                            const std::vector<Vec>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw ShapeError("column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols,
                         const std::vector<Vec>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vec Matrix::row(std::size_t r) const {
  auto s = row_span(r);
  return Vec(s.begin(), s.end());
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw ShapeError("matrix-vector size mismatch");
  Vec out = zero_vec(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& e = (*this)(r, c);
      if (!e.is_zero()) out[r] += e * v[c];
    }
  }
  return out;
}

Vec Matrix::apply_left(std::span<const Scalar> row_vec) const {
  if (row_vec.size() != rows_) throw ShapeError("vector-matrix size mismatch");
  Vec out = zero_vec(field_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (row_vec[r].is_zero()) continue;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& e = (*this)(r, c);
      if (!e.is_zero()) out[c] += row_vec[r] * e;
    }
  }
  return out;
}

Matrix Matrix::pow(unsigned exponent) const {
  if (rows_ != cols_) throw ShapeError("power of a non-square matrix");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent) base = base * base;
  }
  return result;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& e = (*this)(r, c);
      if (r == c ? !e.is_one() : !e.is_zero()) return false;
    }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product size mismatch");
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product over different fields");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum size mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw ShapeError("matrix difference size mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out = m;
  for (auto& e : out.data_)
    if (!e.is_zero()) e = s * e;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (!(a.field_ == b.field_)) throw FieldMismatch("comparing matrices over different fields");
  for (std::size_t i = 0; i < a.data_.size(); ++i)
    if (!(a.data_[i] == b.data_[i])) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << "]";
  }
  return os << "]";
}

// ---------------------------------------------------------------------------
// Elimination

EchelonForm row_reduce(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const FieldSpec field = m.field();
  std::vector<std::size_t> pivots;
  Scalar prev = Scalar::one(field);
  std::size_t r = 0;
  std::vector<std::size_t> support;

  // Fraction-free forward sweep: after step k every entry below the pivot
  // rows is a (k+1)-minor of the input, so prev divides exactly.
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Scalar pivot = m(r, c);
    const Scalar inv_prev = prev.inverse();
    const Scalar factor = pivot * inv_prev;
    support.clear();
    for (std::size_t j = c + 1; j < cols; ++j)
      if (!m(r, j).is_zero()) support.push_back(j);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Scalar lead = m(i, c);
      if (lead.is_zero()) {
        if (factor.is_one()) continue;
        for (std::size_t j = c + 1; j < cols; ++j)
          if (!m(i, j).is_zero()) m(i, j) = m(i, j) * factor;
        continue;
      }
      const Scalar lead_scaled = lead * inv_prev;
      std::size_t s = 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        const bool in_support = s < support.size() && support[s] == j;
        if (in_support) ++s;
        Scalar& e = m(i, j);
        if (in_support) {
          e = (e.is_zero() ? e : e * factor) - lead_scaled * m(r, j);
        } else if (!e.is_zero() && !factor.is_one()) {
          e = e * factor;
        }
      }
      m(i, c) = Scalar::zero(field);
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }

  // Back substitution to reduced form.
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t pc = pivots[k];
    const Scalar inv = m(k, pc).inverse();
    support.clear();
    for (std::size_t j = pc; j < cols; ++j) {
      if (m(k, j).is_zero()) continue;
      m(k, j) = m(k, j) * inv;
      support.push_back(j);
    }
    for (std::size_t i = 0; i < k; ++i) {
      const Scalar lead = m(i, pc);
      if (lead.is_zero()) continue;
      for (std::size_t j : support) m(i, j) -= lead * m(k, j);
    }
  }
  return EchelonForm{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<Vec> nullspace(const Matrix& m) {
  const EchelonForm ef = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : ef.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(m.field(), cols);
    v[f] = Scalar::one(m.field());
    for (std::size_t k = 0; k < ef.pivots.size(); ++k) v[ef.pivots[k]] = -ef.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw ShapeError("right-hand side has wrong length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const EchelonForm ef = row_reduce(std::move(aug));
  if (!ef.pivots.empty() && ef.pivots.back() == m.cols()) throw NoSolution();
  if (ef.rank() < m.cols()) throw NonUniqueSolution();
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t k = 0; k < ef.pivots.size(); ++k) x[ef.pivots[k]] = ef.reduced(k, m.cols());
  return x;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(m.field());
  }
  const EchelonForm ef = row_reduce(std::move(aug));
  if (ef.rank() < n || ef.pivots[n - 1] != n - 1) throw SingularMatrix();
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
  return inv;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("kron over different fields");
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& bkl = b(k, l);
          if (!bkl.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return out;
}

std::optional<unsigned> multiplicative_order(const Matrix& m, unsigned limit) {
  if (m.rows() != m.cols()) throw ShapeError("order of a non-square matrix");
  Matrix power = m;
  for (unsigned k = 1; k <= limit; ++k) {
    if (power.is_identity()) return k;
    power = power * m;
  }
  return std::nullopt;
}

}  // namespace hopf
