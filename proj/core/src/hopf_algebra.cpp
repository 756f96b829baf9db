#include "hopf/hopf_algebra.hpp"

#include <string>

#include "hopf/errors.hpp"

namespace hopf {

namespace {

std::string name_of(const Bialgebra& d, std::size_t i) { return d.basis.at(i); }

}  // namespace

void Bialgebra::check_shape() const {
  const std::size_t n = dim();
  if (n == 0) throw ShapeError(name + ": dimension must be positive");
  if (mul.dim() != n) throw ShapeError(name + ": product tensor has wrong dimension");
  if (comul.dim() != n) throw ShapeError(name + ": coproduct tensor has wrong dimension");
  if (unit.size() != n) throw ShapeError(name + ": unit has wrong length");
  if (counit.size() != n) throw ShapeError(name + ": counit has wrong length");
  if (!(mul.field() == field) || !(comul.field() == field))
    throw FieldMismatch(name + ": structure constants over the wrong field");
  for (const auto& s : unit)
    if (!(s.field() == field)) throw FieldMismatch(name + ": unit over the wrong field");
  for (const auto& s : counit)
    if (!(s.field() == field)) throw FieldMismatch(name + ": counit over the wrong field");
}

// ---------------------------------------------------------------------------

StructureOps::StructureOps(const Bialgebra& data)
    : n_(data.dim()), field_(data.field), products_(n_ * n_), coproducts_(n_),
      counit_(data.counit) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        if (!data.mul(i, j, k).is_zero())
          products_[i * n_ + j].push_back({k, data.mul(i, j, k)});
        if (!data.comul(i, j, k).is_zero()) coproducts_[i].push_back({j, k, data.comul(i, j, k)});
      }
}

Vec StructureOps::multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
  Vec out = zero_vec(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar ab = a[i] * b[j];
      for (const auto& t : products_[i * n_ + j]) out[t.index] += ab * t.coeff;
    }
  }
  return out;
}

Vec StructureOps::coproduct(std::span<const Scalar> a) const {
  Vec out = zero_vec(field_, n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& t : coproducts_[i]) out[t.left * n_ + t.right] += a[i] * t.coeff;
  }
  return out;
}

Scalar StructureOps::counit(std::span<const Scalar> a) const { return dot(a, counit_); }

Vec StructureOps::multiply2(std::span<const Scalar> x, std::span<const Scalar> y) const {
  Vec out = zero_vec(field_, n_ * n_);
  for (std::size_t p = 0; p < n_ * n_; ++p) {
    if (x[p].is_zero()) continue;
    const std::size_t i = p / n_, j = p % n_;
    for (std::size_t q = 0; q < n_ * n_; ++q) {
      if (y[q].is_zero()) continue;
      const std::size_t k = q / n_, l = q % n_;
      const Scalar c = x[p] * y[q];
      for (const auto& left : products_[i * n_ + k])
        for (const auto& right : products_[j * n_ + l])
          out[left.index * n_ + right.index] += c * left.coeff * right.coeff;
    }
  }
  return out;
}

Vec StructureOps::iterated_coproduct(std::span<const Scalar> a, unsigned legs) const {
  if (legs == 0) throw Error("iterated coproduct needs at least one leg");
  Vec current(a.begin(), a.end());
  for (unsigned m = 1; m < legs; ++m) {
    Vec next = zero_vec(field_, current.size() * n_);
    for (std::size_t idx = 0; idx < current.size(); ++idx) {
      if (current[idx].is_zero()) continue;
      const std::size_t prefix = idx / n_, last = idx % n_;
      for (const auto& t : coproducts_[last])
        next[(prefix * n_ + t.left) * n_ + t.right] += current[idx] * t.coeff;
    }
    current = std::move(next);
  }
  return current;
}

Matrix StructureOps::product_map() const {
  Matrix m(field_, n_, n_ * n_);
  for (std::size_t p = 0; p < n_ * n_; ++p)
    for (const auto& t : products_[p]) m(t.index, p) = t.coeff;
  return m;
}

Matrix StructureOps::coproduct_map() const {
  Matrix m(field_, n_ * n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (const auto& t : coproducts_[i]) m(t.left * n_ + t.right, i) = t.coeff;
  return m;
}

Matrix StructureOps::left_multiplication(std::span<const Scalar> a) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < n_; ++j) cols.push_back(multiply(a, unit_vec(field_, n_, j)));
  return Matrix::from_columns(field_, n_, cols);
}

Matrix StructureOps::right_multiplication(std::span<const Scalar> a) const {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < n_; ++j) cols.push_back(multiply(unit_vec(field_, n_, j), a));
  return Matrix::from_columns(field_, n_, cols);
}

// ---------------------------------------------------------------------------

namespace {

Bialgebra checked(Bialgebra data) {
  data.check_shape();
  return data;
}

}  // namespace

HopfAlgebra::HopfAlgebra(Bialgebra data, Matrix antipode)
    : data_(checked(std::move(data))), antipode_(std::move(antipode)), ops_(data_) {
  if (antipode_.rows() != dim() || antipode_.cols() != dim())
    throw ShapeError(name() + ": antipode has wrong shape");
  if (!(antipode_.field() == field())) throw FieldMismatch(name() + ": antipode over the wrong field");
}

HopfAlgebra HopfAlgebra::renamed(std::string name) const {
  Bialgebra d = data_;
  d.name = std::move(name);
  return HopfAlgebra(std::move(d), antipode_);
}

// ---------------------------------------------------------------------------

Matrix unit_counit(const Bialgebra& data) {
  const std::size_t n = data.dim();
  Matrix m(data.field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (!data.unit[r].is_zero() && !data.counit[c].is_zero())
        m(r, c) = data.unit[r] * data.counit[c];
  return m;
}

Matrix convolve(const Matrix& f, const Matrix& g, const StructureOps& ops) {
  const std::size_t n = ops.dim();
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < n; ++i) {
    Vec out = zero_vec(ops.field(), n);
    for (const auto& t : ops.basis_coproduct(i))
      axpy(out, t.coeff, ops.multiply(f.column(t.left), g.column(t.right)));
    cols.push_back(std::move(out));
  }
  return Matrix::from_columns(ops.field(), n, cols);
}

Matrix compute_antipode(const Bialgebra& data) {
  data.check_shape();
  const std::size_t n = data.dim();
  const StructureOps ops(data);
  // Unknown S(p, j) sits at index p * n + j; equation (k, i) is the
  // e_k-coordinate of (S * id)(e_i).
  Matrix system(data.field, n * n, n * n);
  Vec rhs = zero_vec(data.field, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : ops.basis_coproduct(i))
      for (std::size_t p = 0; p < n; ++p)
        for (const auto& prod : ops.basis_product(p, t.right))
          system(prod.index * n + i, p * n + t.left) += t.coeff * prod.coeff;
    for (std::size_t k = 0; k < n; ++k) rhs[k * n + i] = data.unit[k] * data.counit[i];
  }
  Vec solution;
  try {
    solution = solve(system, rhs);
  } catch (const NoSolution&) {
    throw NoAntipode(data.name + ": id has no convolution inverse (no antipode)");
  } catch (const NonUniqueSolution&) {
    throw CorruptedData(data.name +
                        ": antipode equation has several solutions; bialgebra data is corrupted");
  }
  Matrix s(data.field, n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t j = 0; j < n; ++j) s(p, j) = solution[p * n + j];
  if (!(convolve(Matrix::identity(data.field, n), s, ops) == unit_counit(data)))
    throw NoAntipode(data.name + ": left convolution inverse of id is not a right inverse");
  return s;
}

// ---------------------------------------------------------------------------

ValidationReport validate(const HopfAlgebra& h) {
  const Bialgebra& d = h.data();
  const StructureOps& ops = h.ops();
  const std::size_t n = h.dim();
  const FieldSpec& f = h.field();
  auto e = [&](std::size_t i) { return unit_vec(f, n, i); };
  auto nm = [&](std::size_t i) { return name_of(d, i); };

  Report report{h.name(), {}};

  {
    Check c("axiom.associativity", "a,b,c in basis(A)");
    for (std::size_t i = 0; i < n && c.passing(); ++i)
      for (std::size_t j = 0; j < n && c.passing(); ++j) {
        const Vec ij = ops.multiply(e(i), e(j));
        for (std::size_t k = 0; k < n && c.passing(); ++k) {
          const Vec lhs = ops.multiply(ij, e(k));
          const Vec rhs = ops.multiply(e(i), ops.multiply(e(j), e(k)));
          c.expect(lhs == rhs, [&] {
            return "a=" + nm(i) + " b=" + nm(j) + " c=" + nm(k) + " " + mismatch(lhs, rhs);
          });
        }
      }
    report.results.push_back(c.result());
  }
  {
    Check c("axiom.unit", "a in basis(A)");
    for (std::size_t i = 0; i < n && c.passing(); ++i) {
      const Vec left = ops.multiply(d.unit, e(i));
      const Vec right = ops.multiply(e(i), d.unit);
      c.expect(left == e(i) && right == e(i), [&] {
        return "a=" + nm(i) + " 1a=" + format_vec(left) + " a1=" + format_vec(right);
      });
    }
    report.results.push_back(c.result());
  }
  {
    Check c("axiom.coassociativity", "a in basis(A)");
    for (std::size_t i = 0; i < n && c.passing(); ++i) {
      const Vec delta = ops.coproduct(e(i));
      // (Delta (x) id)Delta and (id (x) Delta)Delta in A^{(x)3}.
      Vec lhs = zero_vec(f, n * n * n), rhs = zero_vec(f, n * n * n);
      for (std::size_t p = 0; p < n * n; ++p) {
        if (delta[p].is_zero()) continue;
        const std::size_t a = p / n, b = p % n;
        for (const auto& t : ops.basis_coproduct(a))
          lhs[(t.left * n + t.right) * n + b] += delta[p] * t.coeff;
        for (const auto& t : ops.basis_coproduct(b))
          rhs[(a * n + t.left) * n + t.right] += delta[p] * t.coeff;
      }
      c.expect(lhs == rhs, [&] { return "a=" + nm(i) + " " + mismatch(lhs, rhs); });
    }
    report.results.push_back(c.result());
  }
  {
    Check c("axiom.counit", "a in basis(A)");
    for (std::size_t i = 0; i < n && c.passing(); ++i) {
      Vec left = zero_vec(f, n), right = zero_vec(f, n);
      for (const auto& t : ops.basis_coproduct(i)) {
        left[t.right] += t.coeff * d.counit[t.left];
        right[t.left] += t.coeff * d.counit[t.right];
      }
      c.expect(left == e(i) && right == e(i), [&] {
        return "a=" + nm(i) + " (eps x id)=" + format_vec(left) +
               " (id x eps)=" + format_vec(right);
      });
    }
    report.results.push_back(c.result());
  }
  {
    Check c("axiom.coproduct_multiplicative", "a,b in basis(A)");
    std::vector<Vec> deltas;
    for (std::size_t i = 0; i < n; ++i) deltas.push_back(ops.coproduct(e(i)));
    for (std::size_t i = 0; i < n && c.passing(); ++i)
      for (std::size_t j = 0; j < n && c.passing(); ++j) {
        const Vec lhs = ops.coproduct(ops.multiply(e(i), e(j)));
        const Vec rhs = ops.multiply2(deltas[i], deltas[j]);
        c.expect(lhs == rhs,
                 [&] { return "a=" + nm(i) + " b=" + nm(j) + " " + mismatch(lhs, rhs); });
      }
    report.results.push_back(c.result());
  }
  {
    Check c("axiom.coproduct_unital", "1");
    const Vec lhs = ops.coproduct(d.unit);
    const Vec rhs = tensor(d.unit, d.unit);
    c.expect(lhs == rhs, [&] { return mismatch(lhs, rhs); });
    report.results.push_back(c.result());
  }
  {
    Check c("axiom.counit_multiplicative", "a,b in basis(A)");
    const Scalar eps1 = ops.counit(d.unit);
    c.expect(eps1.is_one(), [&] { return "eps(1)=" + eps1.to_string(); });
    for (std::size_t i = 0; i < n && c.passing(); ++i)
      for (std::size_t j = 0; j < n && c.passing(); ++j) {
        const Scalar lhs = ops.counit(ops.multiply(e(i), e(j)));
        const Scalar rhs = d.counit[i] * d.counit[j];
        c.expect(lhs == rhs,
                 [&] { return "a=" + nm(i) + " b=" + nm(j) + " " + mismatch(lhs, rhs); });
      }
    report.results.push_back(c.result());
  }
  {
    const Matrix target = unit_counit(d);
    const Matrix id = Matrix::identity(f, n);
    const Matrix left = convolve(h.antipode(), id, ops);
    const Matrix right = convolve(id, h.antipode(), ops);
    Check cl("axiom.antipode_left", "a in basis(A)");
    Check cr("axiom.antipode_right", "a in basis(A)");
    for (std::size_t i = 0; i < n; ++i) {
      const Vec want = target.column(i);
      const Vec gl = left.column(i), gr = right.column(i);
      cl.expect(gl == want, [&] { return "a=" + nm(i) + " " + mismatch(gl, want); });
      cr.expect(gr == want, [&] { return "a=" + nm(i) + " " + mismatch(gr, want); });
    }
    report.results.push_back(cl.result());
    report.results.push_back(cr.result());
  }
  {
    Check c("axiom.antipode_bijective", "S");
    try {
      (void)invert(h.antipode());
    } catch (const SingularMatrix&) {
      c.fail("S is singular");
    }
    report.results.push_back(c.result());
  }
  return ValidationReport{std::move(report)};
}

ValidatedAlgebra::ValidatedAlgebra(HopfAlgebra h)
    : algebra_(std::move(h)), antipode_inverse_(Matrix::identity(algebra_.field(), 1)) {
  const ValidationReport vr = validate(algebra_);
  if (!vr.ok()) {
    std::string failures;
    for (const auto& r : vr.report.results)
      if (!r.pass) failures += "\n  " + r.id + ": " + r.counterexample;
    throw InvalidAlgebra(algebra_.name() + " fails the Hopf axioms:" + failures);
  }
  antipode_inverse_ = invert(algebra_.antipode());
}

// ---------------------------------------------------------------------------

namespace {

std::pair<Matrix, Matrix> build_t1_t2(const Bialgebra& data, const StructureOps& ops) {
  const std::size_t n = data.dim();
  Matrix t1(data.field, n * n, n * n), t2(data.field, n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t col = a * n + b;
      for (const auto& t : ops.basis_coproduct(a))
        for (const auto& p : ops.basis_product(t.right, b))
          t1(t.left * n + p.index, col) += t.coeff * p.coeff;
      for (const auto& t : ops.basis_coproduct(b))
        for (const auto& p : ops.basis_product(a, t.left))
          t2(p.index * n + t.right, col) += t.coeff * p.coeff;
    }
  return {std::move(t1), std::move(t2)};
}

}  // namespace

GaloisMaps galois_maps(const Bialgebra& data) {
  data.check_shape();
  const StructureOps ops(data);
  auto [t1, t2] = build_t1_t2(data, ops);
  Matrix t1_inv = Matrix::identity(data.field, 1), t2_inv = Matrix::identity(data.field, 1);
  try {
    t1_inv = invert(t1);
  } catch (const SingularMatrix&) {
    throw NotRegular(data.name + ": T1 is singular; not a (regular) multiplier Hopf algebra");
  }
  try {
    t2_inv = invert(t2);
  } catch (const SingularMatrix&) {
    throw NotRegular(data.name + ": T2 is singular; not a (regular) multiplier Hopf algebra");
  }
  return GaloisMaps{std::move(t1), std::move(t2), std::move(t1_inv), std::move(t2_inv)};
}

Report check_galois(const HopfAlgebra& h) {
  Report report{h.name(), {}};
  auto [t1, t2] = build_t1_t2(h.data(), h.ops());
  auto check = [&](const char* id, const Matrix& t, const char* label) {
    Check c(id, "A(x)A");
    try {
      const Matrix inv = invert(t);
      c.expect((t * inv).is_identity() && (inv * t).is_identity(),
               [&] { return std::string(label) + " * " + label + "^-1 != id"; });
    } catch (const SingularMatrix&) {
      c.fail(std::string(label) + " is singular");
    }
    report.results.push_back(c.result());
  };
  check("regularity.T1_invertible", t1, "T1");
  check("regularity.T2_invertible", t2, "T2");
  return report;
}

}  // namespace hopf
