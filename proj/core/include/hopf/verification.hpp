#pragma once

#include <string>

#include "hopf/duality.hpp"

namespace hopf {

using VerificationReport = Report;

// <a, dhat> = eps(sigma^-1(a)) = eps(sigma'^-1(a)) and
// <a, dhat^-1> = eps(sigma(a)) = eps(sigma'(a)) for every basis element a.
VerificationReport check_prop21(const PairedSystem& sys);

// For all basis a in A, b in A^:
//   <sigma(a), b>     = <a, S^2(b) dhat^-1>
//   <sigma^-1(a), b>  = <a, S^-2(b) dhat>
//   <sigma'(a), b>    = <a, dhat^-1 S^-2(b)>
//   <sigma'^-1(a), b> = <a, dhat S^2(b)>
// plus the b = 1 specialisation reproducing the first group of formulas.
VerificationReport check_prop22(const PairedSystem& sys);

// Consequences for special cases, emitted only when their hypothesis holds:
// sigma = id gives dhat = 1 and S^2 = id; delta = 1 gives sigma^ = S^2 on A^.
VerificationReport check_corollaries(const PairedSystem& sys);

// S^4 = delta^-1 (dhat -> . <- dhat^-1) delta as matrices, the intermediate
// formulas sigma(x) = dhat^-1 -> S^2(x) and sigma'(x) = S^-2(x) <- dhat^-1, the
// resulting identity (a <- dhat^-1) delta = delta (dhat^-1 -> S^4(a)), the
// scaling of dhat -> . against multiplication by delta, and the
// finite-dimensional form S^4(h) = g (alpha -> h <- alpha^-1) g^-1.
VerificationReport check_radford(const PairedSystem& sys);

// Radford for the dual (run on the swapped system, ids prefixed "dual."), the
// transported form dhat^-1 (delta -> b <- delta^-1) dhat = S^4(b) on A^, and
// agreement of the Radford outcome on A and on the bidual.
VerificationReport check_selfduality(const PairedSystem& sys);

// Every check in a fixed order: axioms, regularity, antipode, integrals and
// modular data on both sides, duality, dhat formulas, corollaries, Radford,
// self-duality.
VerificationReport full_report(const PairedSystem& sys);

// Copy of `report` with every id prefixed.
Report prefixed(const Report& report, const std::string& prefix);

}  // namespace hopf
