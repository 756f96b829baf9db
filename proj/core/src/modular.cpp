#include "hopf/modular.hpp"

#include "hopf/errors.hpp"

namespace hopf {

Vec apply_tensor(const Matrix& f, const Matrix& g, std::span<const Scalar> x) {
  const std::size_t n = f.cols();
  const std::size_t m = g.cols();
  if (x.size() != n * m) throw ShapeError("apply_tensor: size mismatch");
  Vec out = zero_vec(f.field(), f.rows() * g.rows());
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p].is_zero()) continue;
    const std::size_t i = p / m, j = p % m;
    for (std::size_t r = 0; r < f.rows(); ++r) {
      const Scalar& fr = f(r, i);
      if (fr.is_zero()) continue;
      const Scalar c = x[p] * fr;
      for (std::size_t s = 0; s < g.rows(); ++s)
        if (!g(s, j).is_zero()) out[r * g.rows() + s] += c * g(s, j);
    }
  }
  return out;
}

namespace {

// Returns c with v = c * base, or nullopt.
std::optional<Scalar> proportionality(std::span<const Scalar> v, std::span<const Scalar> base) {
  std::size_t k = 0;
  while (k < base.size() && base[k].is_zero()) ++k;
  if (k == base.size()) return std::nullopt;
  const Scalar c = v[k] / base[k];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(v[i] == c * base[i])) return std::nullopt;
  return c;
}

Vec normalise_first_nonzero(Vec v) {
  std::size_t k = 0;
  while (k < v.size() && v[k].is_zero()) ++k;
  if (k == v.size()) throw CorruptedData("cannot normalise the zero functional");
  const Scalar inv = v[k].inverse();
  for (auto& s : v) s = s * inv;
  return v;
}

}  // namespace

std::vector<Vec> left_integral_space(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  // Row (i, j): e_j-coordinate of (id (x) phi)Delta(e_i) - phi(e_i) 1.
  Matrix system(h.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : h.ops().basis_coproduct(i)) system(i * n + t.left, t.right) += t.coeff;
    for (std::size_t j = 0; j < n; ++j) system(i * n + j, i) -= h.unit()[j];
  }
  return nullspace(system);
}

std::vector<Vec> right_integral_space(const HopfAlgebra& h) {
  const std::size_t n = h.dim();
  Matrix system(h.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : h.ops().basis_coproduct(i)) system(i * n + t.right, t.left) += t.coeff;
    for (std::size_t j = 0; j < n; ++j) system(i * n + j, i) -= h.unit()[j];
  }
  return nullspace(system);
}

Vec left_integral(const ValidatedAlgebra& h) {
  const auto space = left_integral_space(*h);
  if (space.empty()) throw CorruptedData(h->name() + ": no left integral exists");
  if (space.size() > 1)
    throw CorruptedData(h->name() + ": left integrals span a " + std::to_string(space.size()) +
                        "-dimensional space");
  return normalise_first_nonzero(space.front());
}

Matrix gram_matrix(const HopfAlgebra& h, std::span<const Scalar> functional) {
  const std::size_t n = h.dim();
  Matrix b(h.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& t : h.ops().basis_product(i, j))
        if (!functional[t.index].is_zero()) b(i, j) += t.coeff * functional[t.index];
  return b;
}

ModularElement modular_element(const ValidatedAlgebra& h, std::span<const Scalar> phi) {
  const HopfAlgebra& a = *h;
  const Matrix b = gram_matrix(a, phi);
  const Vec phi_s = a.antipode().apply_left(phi);
  Vec delta;
  try {
    delta = solve(b, phi_s);
  } catch (const NonUniqueSolution&) {
    throw CorruptedData(a.name() + ": the left integral is not faithful");
  } catch (const NoSolution&) {
    throw CorruptedData(a.name() + ": no modular element solves phi(S(a)) = phi(a delta)");
  }
  if (!(a.coproduct(delta) == tensor(delta, delta)) || !a.apply_counit(delta).is_one())
    throw CorruptedData(a.name() + ": modular element " + format_vec(delta) + " is not group-like");
  Vec inverse;
  try {
    inverse = solve(a.ops().left_multiplication(delta), a.unit());
  } catch (const Error&) {
    throw CorruptedData(a.name() + ": modular element is not invertible");
  }
  if (!(a.multiply(inverse, delta) == a.unit()))
    throw CorruptedData(a.name() + ": delta^-1 is only a one-sided inverse");
  if (!(a.apply_antipode(delta) == inverse))
    throw CorruptedData(a.name() + ": S(delta) differs from the solved delta^-1");
  return ModularElement{std::move(delta), std::move(inverse)};
}

Matrix modular_automorphism(const ValidatedAlgebra& h, std::span<const Scalar> functional) {
  const HopfAlgebra& a = *h;
  const Matrix b = gram_matrix(a, functional);
  Matrix b_inv = Matrix::identity(a.field(), 1);
  try {
    b_inv = invert(b);
  } catch (const SingularMatrix&) {
    throw CorruptedData(a.name() + ": functional is not faithful (singular Gram matrix)");
  }
  Matrix sigma = b_inv * b.transpose();
  const std::size_t n = a.dim();
  if (!(sigma.apply(a.unit()) == a.unit()))
    throw CorruptedData(a.name() + ": modular automorphism does not fix 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec lhs = sigma.apply(a.multiply(a.basis_vec(i), a.basis_vec(j)));
      const Vec rhs = a.multiply(sigma.column(i), sigma.column(j));
      if (!(lhs == rhs))
        throw CorruptedData(a.name() + ": modular automorphism is not multiplicative at (" +
                            a.basis()[i] + ", " + a.basis()[j] + ")");
    }
  return sigma;
}

Scalar scaling_constant(const ValidatedAlgebra& h, std::span<const Scalar> phi) {
  const Matrix s2 = h->antipode() * h->antipode();
  const Vec phi_s2 = s2.apply_left(phi);
  auto tau = proportionality(phi_s2, phi);
  if (!tau) throw CorruptedData(h->name() + ": phi o S^2 is not a multiple of phi");
  return *tau;
}

ModularData compute_modular_data(const ValidatedAlgebra& h, std::optional<Vec> phi) {
  const HopfAlgebra& a = *h;
  if (phi) {
    const auto space = left_integral_space(a);
    if (space.size() != 1 || !proportionality(*phi, space.front()) || is_zero(*phi))
      throw CorruptedData(a.name() + ": supplied functional is not a left integral");
  } else {
    phi = left_integral(h);
  }
  Vec psi = a.antipode().apply_left(*phi);
  ModularElement me = modular_element(h, *phi);
  Matrix sigma = modular_automorphism(h, *phi);
  Matrix sigma_prime = modular_automorphism(h, psi);
  Scalar tau = scaling_constant(h, *phi);
  Matrix sigma_inv = invert(sigma);
  Matrix sigma_prime_inv = invert(sigma_prime);
  return ModularData{std::move(*phi),        std::move(psi),      std::move(me.delta),
                     std::move(me.inverse),  std::move(sigma),    std::move(sigma_inv),
                     std::move(sigma_prime), std::move(sigma_prime_inv), std::move(tau)};
}

// ---------------------------------------------------------------------------

Report check_modular(const ValidatedAlgebra& h, const ModularData& md) {
  const HopfAlgebra& a = *h;
  const std::size_t n = a.dim();
  const FieldSpec& f = a.field();
  const Matrix& s = a.antipode();
  const Matrix s2 = s * s;
  const Matrix s_inv2 = h.antipode_inverse() * h.antipode_inverse();
  auto nm = [&](std::size_t i) { return a.basis()[i]; };
  auto e = [&](std::size_t i) { return a.basis_vec(i); };
  Report report{a.name(), {}};
  auto push = [&](const Check& c) { report.results.push_back(c.result()); };

  {
    Check c("integral.left_unique", "left integral space");
    const auto dim = left_integral_space(a).size();
    c.expect(dim == 1, [&] { return "dimension=" + std::to_string(dim); });
    push(c);
  }
  {
    Check c("integral.right_unique", "right integral space");
    const auto space = right_integral_space(a);
    c.expect(space.size() == 1, [&] { return "dimension=" + std::to_string(space.size()); });
    if (space.size() == 1)
      c.expect(proportionality(md.psi, space.front()).has_value(),
               [] { return std::string("phi o S is not in the right integral space"); });
    push(c);
  }
  {
    Check left("integral.left_invariance", "a in basis(A)");
    Check right("integral.right_invariance", "a in basis(A)");
    for (std::size_t i = 0; i < n; ++i) {
      Vec lhs_l = zero_vec(f, n), lhs_r = zero_vec(f, n);
      for (const auto& t : a.ops().basis_coproduct(i)) {
        lhs_l[t.left] += t.coeff * md.phi[t.right];
        lhs_r[t.right] += t.coeff * md.psi[t.left];
      }
      const Vec rhs_l = scale(md.phi[i], a.unit());
      const Vec rhs_r = scale(md.psi[i], a.unit());
      left.expect(lhs_l == rhs_l, [&] { return "a=" + nm(i) + " " + mismatch(lhs_l, rhs_l); });
      right.expect(lhs_r == rhs_r, [&] { return "a=" + nm(i) + " " + mismatch(lhs_r, rhs_r); });
    }
    push(left);
    push(right);
  }
  {
    Check c("modular.delta_defining", "a in basis(A)");
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar lhs = dot(md.phi, s.column(i));
      const Scalar rhs = dot(md.phi, a.multiply(e(i), md.delta));
      c.expect(lhs == rhs, [&] { return "a=" + nm(i) + " " + mismatch(lhs, rhs); });
    }
    push(c);
  }
  {
    Check c("modular.delta_grouplike", "delta");
    const Vec lhs = a.coproduct(md.delta);
    const Vec rhs = tensor(md.delta, md.delta);
    c.expect(lhs == rhs, [&] { return "Delta(delta): " + mismatch(lhs, rhs); });
    const Scalar eps = a.apply_counit(md.delta);
    c.expect(eps.is_one(), [&] { return "eps(delta)=" + eps.to_string(); });
    const Vec sd = a.apply_antipode(md.delta);
    c.expect(sd == md.delta_inverse, [&] { return "S(delta): " + mismatch(sd, md.delta_inverse); });
    const Vec prod = a.multiply(md.delta, md.delta_inverse);
    c.expect(prod == a.unit(), [&] { return "delta delta^-1=" + format_vec(prod); });
    push(c);
  }
  {
    Check kms_phi("modular.kms_phi", "a,b in basis(A)");
    Check kms_psi("modular.kms_psi", "a,b in basis(A)");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec ab = a.multiply(e(i), e(j));
        const Scalar l1 = dot(md.phi, ab);
        const Scalar r1 = dot(md.phi, a.multiply(e(j), md.sigma.column(i)));
        kms_phi.expect(l1 == r1,
                       [&] { return "a=" + nm(i) + " b=" + nm(j) + " " + mismatch(l1, r1); });
        const Scalar l2 = dot(md.psi, ab);
        const Scalar r2 = dot(md.psi, a.multiply(e(j), md.sigma_prime.column(i)));
        kms_psi.expect(l2 == r2,
                       [&] { return "a=" + nm(i) + " b=" + nm(j) + " " + mismatch(l2, r2); });
      }
    push(kms_phi);
    push(kms_psi);
  }
  {
    Check c("modular.scaling_constant", "a in basis(A)");
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar lhs = dot(md.phi, s2.column(i));
      const Scalar rhs = md.tau * md.phi[i];
      c.expect(lhs == rhs, [&] { return "a=" + nm(i) + " " + mismatch(lhs, rhs); });
    }
    push(c);
  }
  {
    Check c("modular.mutual_commutation", "sigma, sigma', S^2");
    c.expect(md.sigma * md.sigma_prime == md.sigma_prime * md.sigma,
             [] { return std::string("sigma sigma' != sigma' sigma"); });
    c.expect(md.sigma * s2 == s2 * md.sigma, [] { return std::string("sigma S^2 != S^2 sigma"); });
    c.expect(md.sigma_prime * s2 == s2 * md.sigma_prime,
             [] { return std::string("sigma' S^2 != S^2 sigma'"); });
    push(c);
  }
  {
    Check c("modular.antipode_sigma_prime", "a in basis(A)");
    const Matrix lhs = s * md.sigma_prime;
    const Matrix rhs = md.sigma_inverse * s;
    for (std::size_t i = 0; i < n; ++i) {
      const Vec l = lhs.column(i), r = rhs.column(i);
      c.expect(l == r, [&] { return "a=" + nm(i) + " " + mismatch(l, r); });
    }
    push(c);
  }
  {
    Check c("modular.delta_sigma", "a in basis(A)");
    for (std::size_t i = 0; i < n; ++i) {
      const Vec lhs = a.multiply(md.delta, md.sigma.column(i));
      const Vec rhs = a.multiply(md.sigma_prime.column(i), md.delta);
      c.expect(lhs == rhs, [&] { return "a=" + nm(i) + " " + mismatch(lhs, rhs); });
    }
    push(c);
  }
  {
    Check t1("modular.twist_sigma", "a in basis(A)");
    Check t2("modular.twist_sigma_prime", "a in basis(A)");
    Check t3("modular.twist_S2", "a in basis(A)");
    Check t4("modular.twist_S2_S2", "a in basis(A)");
    for (std::size_t i = 0; i < n; ++i) {
      const Vec delta_a = a.coproduct(e(i));
      const Vec l1 = a.coproduct(md.sigma.column(i));
      const Vec r1 = apply_tensor(s2, md.sigma, delta_a);
      t1.expect(l1 == r1, [&] { return "a=" + nm(i) + " " + mismatch(l1, r1); });
      const Vec l2 = a.coproduct(md.sigma_prime.column(i));
      const Vec r2 = apply_tensor(md.sigma_prime, s_inv2, delta_a);
      t2.expect(l2 == r2, [&] { return "a=" + nm(i) + " " + mismatch(l2, r2); });
      const Vec l3 = a.coproduct(s2.column(i));
      const Vec r3 = apply_tensor(md.sigma, md.sigma_prime_inverse, delta_a);
      t3.expect(l3 == r3, [&] { return "a=" + nm(i) + " " + mismatch(l3, r3); });
      const Vec r4 = apply_tensor(s2, s2, delta_a);
      t4.expect(l3 == r4, [&] { return "a=" + nm(i) + " " + mismatch(l3, r4); });
    }
    push(t1);
    push(t2);
    push(t3);
    push(t4);
  }
  {
    Check c("modular.counit_sigma", "a in basis(A)");
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar lhs = a.apply_counit(md.sigma.column(i));
      const Scalar rhs = a.apply_counit(md.sigma_prime.column(i));
      c.expect(lhs == rhs, [&] { return "a=" + nm(i) + " " + mismatch(lhs, rhs); });
    }
    push(c);
  }
  {
    Check c("modular.counit_sigma_inv_delta", "delta");
    const Scalar lhs = a.apply_counit(md.sigma_inverse.apply(md.delta));
    c.expect(lhs == md.tau, [&] { return mismatch(lhs, md.tau); });
    push(c);
  }
  return report;
}

Report check_antipode_properties(const ValidatedAlgebra& h) {
  const HopfAlgebra& a = *h;
  const std::size_t n = a.dim();
  const Matrix& s = a.antipode();
  const Matrix s2 = s * s;
  auto nm = [&](std::size_t i) { return a.basis()[i]; };
  auto e = [&](std::size_t i) { return a.basis_vec(i); };
  Report report{a.name(), {}};

  {
    Check c("antipode.matches_convolution_inverse", "S");
    try {
      const Matrix solved = compute_antipode(a.data());
      c.expect(solved == s, [] { return std::string("stored S differs from the solved antipode"); });
    } catch (const Error& err) {
      c.fail(err.what());
    }
    report.results.push_back(c.result());
  }
  {
    Check c("antipode.inverse", "S");
    c.expect((s * h.antipode_inverse()).is_identity() && (h.antipode_inverse() * s).is_identity(),
             [] { return std::string("S S^-1 != id"); });
    report.results.push_back(c.result());
  }
  {
    Check c("antipode.algebra_antihomomorphism", "a,b in basis(A)");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vec lhs = s.apply(a.multiply(e(i), e(j)));
        const Vec rhs = a.multiply(s.column(j), s.column(i));
        c.expect(lhs == rhs,
                 [&] { return "a=" + nm(i) + " b=" + nm(j) + " " + mismatch(lhs, rhs); });
      }
    const Vec su = s.apply(a.unit());
    c.expect(su == a.unit(), [&] { return "S(1)=" + format_vec(su); });
    report.results.push_back(c.result());
  }
  {
    Check c("antipode.coalgebra_antihomomorphism", "a in basis(A)");
    for (std::size_t i = 0; i < n; ++i) {
      const Vec lhs = a.coproduct(s.column(i));
      // (S (x) S) applied to the flipped coproduct.
      const Vec d = a.coproduct(e(i));
      Vec flipped = zero_vec(a.field(), n * n);
      for (std::size_t p = 0; p < n * n; ++p) flipped[(p % n) * n + p / n] = d[p];
      const Vec rhs = apply_tensor(s, s, flipped);
      c.expect(lhs == rhs, [&] { return "a=" + nm(i) + " " + mismatch(lhs, rhs); });
    }
    report.results.push_back(c.result());
  }
  {
    Check c("antipode.counit", "a in basis(A)");
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar lhs = a.apply_counit(s.column(i));
      const Scalar& rhs = a.counit()[i];
      c.expect(lhs == rhs, [&] { return "a=" + nm(i) + " " + mismatch(lhs, rhs); });
    }
    report.results.push_back(c.result());
  }
  {
    Check c("antipode.square_comultiplicative", "a in basis(A)");
    for (std::size_t i = 0; i < n; ++i) {
      const Vec lhs = a.coproduct(s2.column(i));
      const Vec rhs = apply_tensor(s2, s2, a.coproduct(e(i)));
      c.expect(lhs == rhs, [&] { return "a=" + nm(i) + " " + mismatch(lhs, rhs); });
    }
    report.results.push_back(c.result());
  }
  return report;
}

}  // namespace hopf
