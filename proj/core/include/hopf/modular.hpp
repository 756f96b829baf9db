#pragma once

#include <optional>
#include <vector>

#include "hopf/hopf_algebra.hpp"

namespace hopf {

// Integral apparatus of a finite-dimensional Hopf algebra. Functionals are
// rows of values on the basis; elements are coordinate columns.
struct ModularData {
  Vec phi;            // left integral
  Vec psi;            // right integral, psi = phi o S
  Vec delta;          // modular element: phi(S(a)) = phi(a delta)
  Vec delta_inverse;
  Matrix sigma;       // phi(ab) = phi(b sigma(a))
  Matrix sigma_inverse;
  Matrix sigma_prime;  // psi(ab) = psi(b sigma'(a))
  Matrix sigma_prime_inverse;
  Scalar tau;         // phi(S^2(a)) = tau phi(a)
};

// Kernels of the left / right invariance systems. For a Hopf algebra both are
// one-dimensional.
std::vector<Vec> left_integral_space(const HopfAlgebra& h);
std::vector<Vec> right_integral_space(const HopfAlgebra& h);

// The left integral normalised so that its first nonzero value is 1. Throws
// CorruptedData unless the solution space is exactly one-dimensional.
Vec left_integral(const ValidatedAlgebra& h);

// Gram matrix B(i, j) = f(e_i e_j).
Matrix gram_matrix(const HopfAlgebra& h, std::span<const Scalar> functional);

struct ModularElement {
  Vec delta;
  Vec inverse;
};

// Solves phi(S(a)) = phi(a delta), checks that delta is group-like, and
// computes delta^-1 both by solving delta x = 1 and as S(delta). Throws
// CorruptedData when phi is not faithful or a cross-check fails.
ModularElement modular_element(const ValidatedAlgebra& h, std::span<const Scalar> phi);

// sigma = B^-1 B^T for the Gram matrix B of the functional; the result is
// checked to be an algebra automorphism. Throws CorruptedData when the
// functional is not faithful.
Matrix modular_automorphism(const ValidatedAlgebra& h, std::span<const Scalar> functional);

// tau with phi o S^2 = tau phi. Throws CorruptedData when not proportional.
Scalar scaling_constant(const ValidatedAlgebra& h, std::span<const Scalar> phi);

// Full modular data. With `phi` given, it must be a left integral and is used
// as is (the dual side uses this to keep its own normalisation).
ModularData compute_modular_data(const ValidatedAlgebra& h,
                                 std::optional<Vec> phi = std::nullopt);

// Every identity relating the modular data on all basis elements / pairs.
Report check_modular(const ValidatedAlgebra& h, const ModularData& md);

// Antipode properties: anti-(co)multiplicativity, eps o S = eps,
// Delta o S^2 = (S^2 (x) S^2) o Delta, and agreement with compute_antipode.
Report check_antipode_properties(const ValidatedAlgebra& h);

// (f (x) g) applied to an element of A (x) A.
Vec apply_tensor(const Matrix& f, const Matrix& g, std::span<const Scalar> x);

}  // namespace hopf
