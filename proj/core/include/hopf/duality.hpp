#pragma once

#include "hopf/hopf_algebra.hpp"
#include "hopf/modular.hpp"

namespace hopf {

// The dual Hopf algebra on the canonical dual basis f_j = e_j^*:
//   f_i f_j has f_k-coefficient comul(k, i, j)   (<a, yy'> = <a_(1), y><a_(2), y'>)
//   Delta(f_k) has f_i (x) f_j-coefficient mul(i, j, k)
//   unit = eps, counit(f_k) = <1, f_k>, antipode = S^T.
// The result is validated; a failure is a convention error and throws.
HopfAlgebra build_dual(const ValidatedAlgebra& h);

// <a, y> for a in A and y in A^ (both as coordinates).
Scalar pairing(std::span<const Scalar> a, std::span<const Scalar> y);

// The four harpoon actions, defined through
//   <a'a, y> = <a', a -> y>      <a a', y> = <a', y <- a>
//   <a, y'y> = <y -> a, y'>      <a, y y'> = <a <- y, y'>.
// `h` is the algebra A; elements of A^ are coordinates in the dual basis.
Vec act_on_dual_left(const HopfAlgebra& h, std::span<const Scalar> a, std::span<const Scalar> y);
Vec act_on_dual_right(const HopfAlgebra& h, std::span<const Scalar> y, std::span<const Scalar> a);
// y -> a = sum a_(1) <a_(2), y>
Vec dual_act_left(const HopfAlgebra& h, std::span<const Scalar> y, std::span<const Scalar> a);
// a <- y = sum <a_(1), y> a_(2)
Vec dual_act_right(const HopfAlgebra& h, std::span<const Scalar> a, std::span<const Scalar> y);

// a |-> y -> a <- z as a matrix on A.
Matrix harpoon_sandwich(const HopfAlgebra& h, std::span<const Scalar> y,
                        std::span<const Scalar> z);

// Dual integrals computed from the defining formulas, before any cross-check.
struct DualIntegralFormulas {
  Vec psi_hat;  // psi^(omega) = eps(a) for omega = phi(. a)
  Vec phi_hat;  // phi^(omega) = eps(a) for omega = psi(a .)
};
DualIntegralFormulas dual_integral_formulas(const ValidatedAlgebra& h, const ModularData& md);

// A, its dual, the canonical (identity) pairing, and the modular data on both
// sides. The dual side is normalised by phi^(omega) = eps(a) for
// omega = psi(a .), so that psi^ = phi^ o S agrees with the formula
// psi^(phi(. a)) = eps(a).
class PairedSystem {
 public:
  // Validates A, builds A^, computes both modular data and runs the dual
  // integral cross-checks; any disagreement throws CorruptedData.
  static PairedSystem build(HopfAlgebra primal);

  const ValidatedAlgebra& primal() const { return primal_; }
  const ValidatedAlgebra& dual() const { return dual_; }
  const Matrix& pairing_matrix() const { return pairing_; }
  const ModularData& primal_modular() const { return primal_modular_; }
  const ModularData& dual_modular() const { return dual_modular_; }
  const DualIntegralFormulas& formulas() const { return formulas_; }
  // Cross-checks performed while building (all pass for a built system).
  const Report& dual_integral_report() const { return dual_report_; }

  // The same data with the roles of A and A^ exchanged: the new dual is the
  // bidual, identified with A through the canonical evaluation map.
  PairedSystem swapped() const;

 private:
  PairedSystem(ValidatedAlgebra primal, ValidatedAlgebra dual, Matrix pairing,
               ModularData primal_modular, ModularData dual_modular,
               DualIntegralFormulas formulas, Report dual_report)
      : primal_(std::move(primal)),
        dual_(std::move(dual)),
        pairing_(std::move(pairing)),
        primal_modular_(std::move(primal_modular)),
        dual_modular_(std::move(dual_modular)),
        formulas_(std::move(formulas)),
        dual_report_(std::move(dual_report)) {}

  ValidatedAlgebra primal_;
  ValidatedAlgebra dual_;
  Matrix pairing_;
  ModularData primal_modular_;
  ModularData dual_modular_;
  DualIntegralFormulas formulas_;
  Report dual_report_;
};

// Pairing invariants: duality of product and coproduct, <S(a), y> = <a, S(y)>,
// nondegeneracy.
Report check_pairing(const PairedSystem& sys);

// Module laws, unitality, the defining adjoint relations of the four actions,
// and the extended pairing <a, m y> = <y -> a, m> with m = dhat.
Report check_actions(const PairedSystem& sys);

// psi^(omega' omega) = omega'(S^-1(a)) for omega = phi(. a), and the canonical
// map A -> A^^ being an isomorphism of Hopf algebras.
Report biduality_check(const PairedSystem& sys);

}  // namespace hopf
