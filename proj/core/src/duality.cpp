#include "hopf/duality.hpp"

#include "hopf/errors.hpp"

namespace hopf {

namespace {

std::optional<Scalar> proportionality(std::span<const Scalar> v, std::span<const Scalar> base) {
  std::size_t k = 0;
  while (k < base.size() && base[k].is_zero()) ++k;
  if (k == base.size()) return std::nullopt;
  const Scalar c = v[k] / base[k];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(v[i] == c * base[i])) return std::nullopt;
  return c;
}

std::string dual_name(const std::string& basis_name) { return basis_name + "*"; }

CheckResult single_integral_check(const std::string& id, const std::vector<Vec>& space,
                                  const Vec& formula) {
  Check check(id, "one-dimensional solution space");
  if (space.size() != 1) {
    check.fail("solution space has dimension " + std::to_string(space.size()));
  } else if (!proportionality(formula, space.front())) {
    check.fail("formula=" + format_vec(formula) + " solve=" + format_vec(space.front()));
  }
  return check.result();
}

}  // namespace

HopfAlgebra build_dual(const ValidatedAlgebra& h) {
  const HopfAlgebra& a = *h;
  const std::size_t n = a.dim();
  Bialgebra d;
  d.name = a.name() + "_dual";
  d.field = a.field();
  for (const auto& b : a.basis()) d.basis.push_back(dual_name(b));
  d.mul = Tensor3(a.field(), n);
  d.comul = Tensor3(a.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        d.mul(i, j, k) = a.comul()(k, i, j);
        d.comul(k, i, j) = a.mul()(i, j, k);
      }
  d.unit = a.counit();
  d.counit = a.unit();
  return HopfAlgebra(std::move(d), a.antipode().transpose());
}

Scalar pairing(std::span<const Scalar> a, std::span<const Scalar> y) { return dot(a, y); }

Vec act_on_dual_left(const HopfAlgebra& h, std::span<const Scalar> a, std::span<const Scalar> y) {
  const std::size_t n = h.dim();
  Vec out = zero_vec(h.field(), n);
  for (std::size_t q = 0; q < n; ++q) {
    if (a[q].is_zero()) continue;
    for (std::size_t p = 0; p < n; ++p)
      for (const auto& t : h.ops().basis_product(p, q))
        if (!y[t.index].is_zero()) out[p] += a[q] * t.coeff * y[t.index];
  }
  return out;
}

Vec act_on_dual_right(const HopfAlgebra& h, std::span<const Scalar> y, std::span<const Scalar> a) {
  const std::size_t n = h.dim();
  Vec out = zero_vec(h.field(), n);
  for (std::size_t q = 0; q < n; ++q) {
    if (a[q].is_zero()) continue;
    for (std::size_t p = 0; p < n; ++p)
      for (const auto& t : h.ops().basis_product(q, p))
        if (!y[t.index].is_zero()) out[p] += a[q] * t.coeff * y[t.index];
  }
  return out;
}

Vec dual_act_left(const HopfAlgebra& h, std::span<const Scalar> y, std::span<const Scalar> a) {
  Vec out = zero_vec(h.field(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& t : h.ops().basis_coproduct(i))
      if (!y[t.right].is_zero()) out[t.left] += a[i] * t.coeff * y[t.right];
  }
  return out;
}

Vec dual_act_right(const HopfAlgebra& h, std::span<const Scalar> a, std::span<const Scalar> y) {
  Vec out = zero_vec(h.field(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& t : h.ops().basis_coproduct(i))
      if (!y[t.left].is_zero()) out[t.right] += a[i] * t.coeff * y[t.left];
  }
  return out;
}

Matrix harpoon_sandwich(const HopfAlgebra& h, std::span<const Scalar> y,
                        std::span<const Scalar> z) {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < h.dim(); ++i)
    cols.push_back(dual_act_right(h, dual_act_left(h, y, h.basis_vec(i)), z));
  return Matrix::from_columns(h.field(), h.dim(), cols);
}

DualIntegralFormulas dual_integral_formulas(const ValidatedAlgebra& h, const ModularData& md) {
  // omega = phi(. a) has coordinates B a, so psi^(f_k) = eps(B^-1 e_k).
  const Matrix b_phi = gram_matrix(*h, md.phi);
  const Matrix b_psi = gram_matrix(*h, md.psi);
  DualIntegralFormulas out;
  try {
    out.psi_hat = invert(b_phi).apply_left(h->counit());
    // omega = psi(a .) has coordinates B_psi^T a.
    out.phi_hat = invert(b_psi.transpose()).apply_left(h->counit());
  } catch (const SingularMatrix&) {
    throw CorruptedData(h->name() + ": integral is not faithful");
  }
  return out;
}

PairedSystem PairedSystem::build(HopfAlgebra primal_algebra) {
  ValidatedAlgebra primal(std::move(primal_algebra));
  ModularData primal_md = compute_modular_data(primal);
  std::optional<ValidatedAlgebra> dual;
  try {
    dual.emplace(build_dual(primal));
  } catch (const InvalidAlgebra& err) {
    throw CorruptedData(primal->name() + ": dual fails validation: " + err.what());
  }
  DualIntegralFormulas formulas = dual_integral_formulas(primal, primal_md);

  Report report{primal->name(), {}};
  report.results.push_back(single_integral_check("duality.psi_hat_right_integral",
                                                 right_integral_space(**dual), formulas.psi_hat));
  report.results.push_back(single_integral_check("duality.phi_hat_left_integral",
                                                 left_integral_space(**dual), formulas.phi_hat));
  {
    Check check("duality.psi_hat_is_phi_hat_S", "functional on A^");
    const Vec phi_hat_s = (*dual)->antipode().apply_left(formulas.phi_hat);
    check.expect(phi_hat_s == formulas.psi_hat,
                 [&] { return mismatch(formulas.psi_hat, phi_hat_s); });
    report.results.push_back(check.result());
  }
  if (!report.all_pass())
    throw CorruptedData(primal->name() + ": dual integral routes disagree\n" + report.to_text());

  ModularData dual_md = compute_modular_data(*dual, formulas.phi_hat);
  {
    Check check("duality.delta_hat_two_routes", "a in basis(A)");
    const Vec from_prop = primal_md.sigma_inverse.apply_left(primal->counit());
    for (std::size_t a = 0; a < primal->dim(); ++a)
      check.expect(dual_md.delta[a] == from_prop[a], [&] {
        return "a=" + primal->basis()[a] + " " + mismatch(dual_md.delta[a], from_prop[a]);
      });
    report.results.push_back(check.result());
  }
  if (!report.all_pass())
    throw CorruptedData(primal->name() + ": dual integral routes disagree\n" + report.to_text());

  const std::size_t n = primal->dim();
  Matrix pairing = Matrix::identity(primal->field(), n);
  return PairedSystem(std::move(primal), std::move(*dual), std::move(pairing),
                      std::move(primal_md), std::move(dual_md), std::move(formulas),
                      std::move(report));
}

PairedSystem PairedSystem::swapped() const { return build(dual_.algebra()); }

Report check_pairing(const PairedSystem& sys) {
  const HopfAlgebra& a = *sys.primal();
  const HopfAlgebra& d = *sys.dual();
  const std::size_t n = a.dim();
  const auto& names = a.basis();
  Report report{a.name(), {}};

  Check product("pairing.product_coproduct", "a,b in basis(A), y in basis(A^)");
  Check coproduct("pairing.coproduct_product", "a in basis(A), y,y' in basis(A^)");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec ab = a.multiply(a.basis_vec(i), a.basis_vec(j));
      const Vec yy = d.multiply(d.basis_vec(i), d.basis_vec(j));
      for (std::size_t k = 0; k < n; ++k) {
        // <e_i e_j, f_k> against <e_i (x) e_j, Delta^(f_k)>.
        const Vec dk = d.coproduct(d.basis_vec(k));
        const Scalar lhs = pairing(ab, d.basis_vec(k));
        product.expect(lhs == dk[i * n + j], [&] {
          return "a=" + names[i] + " b=" + names[j] + " y=" + d.basis()[k] + " " +
                 mismatch(lhs, dk[i * n + j]);
        });
        // <e_k, f_i f_j> against sum <e_k(1), f_i><e_k(2), f_j>.
        const Vec ck = a.coproduct(a.basis_vec(k));
        const Scalar lhs2 = pairing(a.basis_vec(k), yy);
        coproduct.expect(lhs2 == ck[i * n + j], [&] {
          return "a=" + names[k] + " y=" + d.basis()[i] + " y'=" + d.basis()[j] + " " +
                 mismatch(lhs2, ck[i * n + j]);
        });
      }
    }
  report.results.push_back(product.result());
  report.results.push_back(coproduct.result());

  Check units("pairing.units_counits", "a in basis(A), y in basis(A^)");
  Check antipode("pairing.antipode", "a in basis(A), y in basis(A^)");
  for (std::size_t i = 0; i < n; ++i) {
    const Vec y = d.basis_vec(i);
    const Vec e = a.basis_vec(i);
    units.expect(pairing(a.unit(), y) == d.apply_counit(y),
                 [&] { return "y=" + d.basis()[i]; });
    units.expect(pairing(e, d.unit()) == a.apply_counit(e), [&] { return "a=" + names[i]; });
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar lhs = pairing(a.apply_antipode(a.basis_vec(j)), y);
      const Scalar rhs = pairing(a.basis_vec(j), d.apply_antipode(y));
      antipode.expect(lhs == rhs, [&] {
        return "a=" + names[j] + " y=" + d.basis()[i] + " " + mismatch(lhs, rhs);
      });
    }
  }
  report.results.push_back(units.result());
  report.results.push_back(antipode.result());

  Check nondegenerate("pairing.nondegenerate", "pairing matrix");
  nondegenerate.expect(rank(sys.pairing_matrix()) == n, [&] {
    return "rank " + std::to_string(rank(sys.pairing_matrix())) + " < " + std::to_string(n);
  });
  report.results.push_back(nondegenerate.result());
  return report;
}

Report check_actions(const PairedSystem& sys) {
  const HopfAlgebra& a = *sys.primal();
  const HopfAlgebra& d = *sys.dual();
  const std::size_t n = a.dim();
  const auto& an = a.basis();
  const auto& dn = d.basis();
  Report report{a.name(), {}};

  // Cached actions of basis elements on basis elements.
  std::vector<Vec> l_dual(n * n), r_dual(n * n), l_a(n * n), r_a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      l_dual[i * n + j] = act_on_dual_left(a, a.basis_vec(i), d.basis_vec(j));
      r_dual[i * n + j] = act_on_dual_right(a, d.basis_vec(j), a.basis_vec(i));
      l_a[i * n + j] = dual_act_left(a, d.basis_vec(i), a.basis_vec(j));
      r_a[i * n + j] = dual_act_right(a, a.basis_vec(j), d.basis_vec(i));
    }

  Check adj1("actions.adjoint_left_on_dual", "a',a in basis(A), y in basis(A^)");
  Check adj2("actions.adjoint_right_on_dual", "a',a in basis(A), y in basis(A^)");
  Check adj3("actions.adjoint_left_on_A", "a in basis(A), y',y in basis(A^)");
  Check adj4("actions.adjoint_right_on_A", "a in basis(A), y,y' in basis(A^)");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Vec pq = a.multiply(a.basis_vec(p), a.basis_vec(q));
      const Vec qp = a.multiply(a.basis_vec(q), a.basis_vec(p));
      const Vec ypq = d.multiply(d.basis_vec(p), d.basis_vec(q));
      const Vec yqp = d.multiply(d.basis_vec(q), d.basis_vec(p));
      for (std::size_t r = 0; r < n; ++r) {
        const Vec fr = d.basis_vec(r);
        const Vec er = a.basis_vec(r);
        // <e_p e_q, f_r> = <e_p, e_q -> f_r>
        adj1.expect(pairing(pq, fr) == l_dual[q * n + r][p], [&] {
          return "a'=" + an[p] + " a=" + an[q] + " y=" + dn[r];
        });
        // <e_q e_p, f_r> = <e_p, f_r <- e_q>
        adj2.expect(pairing(qp, fr) == r_dual[q * n + r][p], [&] {
          return "a'=" + an[p] + " a=" + an[q] + " y=" + dn[r];
        });
        // <e_r, f_p f_q> = <f_q -> e_r, f_p>
        adj3.expect(pairing(er, ypq) == l_a[q * n + r][p], [&] {
          return "a=" + an[r] + " y'=" + dn[p] + " y=" + dn[q];
        });
        // <e_r, f_q f_p> = <e_r <- f_q, f_p>
        adj4.expect(pairing(er, yqp) == r_a[q * n + r][p], [&] {
          return "a=" + an[r] + " y=" + dn[q] + " y'=" + dn[p];
        });
      }
    }
  report.results.push_back(adj1.result());
  report.results.push_back(adj2.result());
  report.results.push_back(adj3.result());
  report.results.push_back(adj4.result());

  Check mod1("actions.module_left_on_dual", "a,b in basis(A), y in basis(A^)");
  Check mod2("actions.module_right_on_dual", "a,b in basis(A), y in basis(A^)");
  Check mod3("actions.module_left_on_A", "y,y' in basis(A^), a in basis(A)");
  Check mod4("actions.module_right_on_A", "y,y' in basis(A^), a in basis(A)");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Vec ab = a.multiply(a.basis_vec(p), a.basis_vec(q));
      const Vec yy = d.multiply(d.basis_vec(p), d.basis_vec(q));
      for (std::size_t r = 0; r < n; ++r) {
        const Vec lhs1 = act_on_dual_left(a, ab, d.basis_vec(r));
        const Vec rhs1 = act_on_dual_left(a, a.basis_vec(p), l_dual[q * n + r]);
        mod1.expect(lhs1 == rhs1, [&] {
          return "a=" + an[p] + " b=" + an[q] + " y=" + dn[r] + " " + mismatch(lhs1, rhs1);
        });
        const Vec lhs2 = act_on_dual_right(a, d.basis_vec(r), ab);
        const Vec rhs2 = act_on_dual_right(a, r_dual[p * n + r], a.basis_vec(q));
        mod2.expect(lhs2 == rhs2, [&] {
          return "a=" + an[p] + " b=" + an[q] + " y=" + dn[r] + " " + mismatch(lhs2, rhs2);
        });
        const Vec lhs3 = dual_act_left(a, yy, a.basis_vec(r));
        const Vec rhs3 = dual_act_left(a, d.basis_vec(p), l_a[q * n + r]);
        mod3.expect(lhs3 == rhs3, [&] {
          return "y=" + dn[p] + " y'=" + dn[q] + " a=" + an[r] + " " + mismatch(lhs3, rhs3);
        });
        const Vec lhs4 = dual_act_right(a, a.basis_vec(r), yy);
        const Vec rhs4 = dual_act_right(a, r_a[p * n + r], d.basis_vec(q));
        mod4.expect(lhs4 == rhs4, [&] {
          return "y=" + dn[p] + " y'=" + dn[q] + " a=" + an[r] + " " + mismatch(lhs4, rhs4);
        });
      }
    }
  report.results.push_back(mod1.result());
  report.results.push_back(mod2.result());
  report.results.push_back(mod3.result());
  report.results.push_back(mod4.result());

  Check unital("actions.unital", "a in basis(A), y in basis(A^)");
  for (std::size_t i = 0; i < n; ++i) {
    const Vec y = d.basis_vec(i);
    const Vec e = a.basis_vec(i);
    unital.expect(act_on_dual_left(a, a.unit(), y) == y, [&] { return "1 -> " + dn[i]; });
    unital.expect(act_on_dual_right(a, y, a.unit()) == y, [&] { return dn[i] + " <- 1"; });
    unital.expect(dual_act_left(a, d.unit(), e) == e, [&] { return "eps -> " + an[i]; });
    unital.expect(dual_act_right(a, e, d.unit()) == e, [&] { return an[i] + " <- eps"; });
  }
  report.results.push_back(unital.result());

  Check extended("actions.extended_pairing_delta_hat", "a in basis(A), y in basis(A^)");
  const Vec& dhat = sys.dual_modular().delta;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar lhs = pairing(a.basis_vec(i), d.multiply(dhat, d.basis_vec(j)));
      const Scalar rhs = pairing(l_a[j * n + i], dhat);
      extended.expect(lhs == rhs,
                      [&] { return "a=" + an[i] + " y=" + dn[j] + " " + mismatch(lhs, rhs); });
    }
  report.results.push_back(extended.result());
  return report;
}

Report biduality_check(const PairedSystem& sys) {
  const HopfAlgebra& a = *sys.primal();
  const HopfAlgebra& d = *sys.dual();
  const std::size_t n = a.dim();
  Report report{a.name(), {}};

  Check formula("duality.biduality_formula", "a in basis(A), omega' in basis(A^)");
  const Matrix b_phi = gram_matrix(a, sys.primal_modular().phi);
  const Vec& psi_hat = sys.dual_modular().psi;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec omega = b_phi.column(i);  // phi(. e_i)
    const Vec s_inv = sys.primal().antipode_inverse().column(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar lhs = dot(psi_hat, d.multiply(d.basis_vec(j), omega));
      formula.expect(lhs == s_inv[j], [&] {
        return "a=" + a.basis()[i] + " omega'=" + d.basis()[j] + " " + mismatch(lhs, s_inv[j]);
      });
    }
  }
  report.results.push_back(formula.result());

  Check iso("duality.bidual_isomorphism", "structure constants of A and A^^");
  const HopfAlgebra bidual = build_dual(sys.dual());
  for (std::size_t i = 0; i < n && iso.passing(); ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        iso.expect(bidual.mul()(i, j, k) == a.mul()(i, j, k), [&] {
          return "mul(" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + ") " + mismatch(bidual.mul()(i, j, k), a.mul()(i, j, k));
        });
        iso.expect(bidual.comul()(i, j, k) == a.comul()(i, j, k), [&] {
          return "comul(" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + ") " +
                 mismatch(bidual.comul()(i, j, k), a.comul()(i, j, k));
        });
      }
  iso.expect(bidual.unit() == a.unit(), [&] { return "unit " + mismatch(bidual.unit(), a.unit()); });
  iso.expect(bidual.counit() == a.counit(),
             [&] { return "counit " + mismatch(bidual.counit(), a.counit()); });
  iso.expect(bidual.antipode() == a.antipode(), [] { return std::string("antipode differs"); });
  try {
    ValidatedAlgebra checked(bidual);
  } catch (const InvalidAlgebra& err) {
    iso.fail(std::string("bidual fails validation: ") + err.what());
  }
  report.results.push_back(iso.result());
  return report;
}

}  // namespace hopf
