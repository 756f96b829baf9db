#include <doctest.h>

#include "hopf/catalog.hpp"
#include "hopf/verification.hpp"

using namespace hopf;

namespace {

bool has_failure(const Report& r) { return !r.all_pass(); }

// S^4 against g (alpha -> h <- alpha^-1) g^-1 for a chosen dictionary.
bool intro_form_holds(const PairedSystem& sys, const Vec& g, const Vec& g_inv, const Vec& alpha,
                      const Vec& alpha_inv) {
  const HopfAlgebra& h = *sys.primal();
  const Matrix s4 = h.antipode().pow(4);
  const Matrix sandwich = harpoon_sandwich(h, alpha, alpha_inv);
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const Vec rhs = h.multiply(h.multiply(g, sandwich.apply(h.basis_vec(i))), g_inv);
    if (rhs != s4.column(i)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("full report passes on every builtin") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const PairedSystem sys = PairedSystem::build(build_builtin(name));
    const Report r = full_report(sys);
    CHECK(r.all_pass());
    CHECK(r.find("radford.S4_sandwich") != nullptr);
    CHECK(r.find("dual.modular.kms_phi") != nullptr);
    for (const auto& c : r.results) CHECK(c.counterexample.empty());
  }
}

TEST_CASE("report lines carry the algebra name") {
  const PairedSystem sys = PairedSystem::build(build_builtin("taft_T3"));
  const std::string text = check_radford(sys).to_text();
  CHECK(text.find("radford.S4_sandwich taft_T3 PASS") != std::string::npos);
}

TEST_CASE("corollaries only appear under their hypotheses") {
  const PairedSystem group = PairedSystem::build(build_builtin("group_S3"));
  const Report g = check_corollaries(group);
  CHECK(g.find("corollary.trace_dual_unimodular") != nullptr);
  CHECK(g.find("corollary.trace_S2_identity") != nullptr);
  CHECK(g.find("corollary.unimodular_sigma_hat_S2") != nullptr);
  CHECK(g.all_pass());
  const PairedSystem taft = PairedSystem::build(build_builtin("taft_T3"));
  CHECK(check_corollaries(taft).results.empty());
}

TEST_CASE("tau commutation factor") {
  const PairedSystem sys = PairedSystem::build(build_builtin("taft_T3"));
  const HopfAlgebra& h = *sys.primal();
  const Vec& dhat = sys.dual_modular().delta;
  const Vec& delta = sys.primal_modular().delta;
  const Scalar& tau = sys.primal_modular().tau;
  CHECK(!tau.is_one());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const Vec a = h.basis_vec(i);
    CHECK(dual_act_left(h, dhat, h.multiply(delta, a)) ==
          scale(tau, h.multiply(delta, dual_act_left(h, dhat, a))));
  }
  CHECK(pairing(delta, dhat) == tau);
}

TEST_CASE("the alternative intro-form dictionary fails on Taft T3") {
  const PairedSystem sys = PairedSystem::build(build_builtin("taft_T3"));
  const ModularData& md = sys.primal_modular();
  const ModularData& dmd = sys.dual_modular();
  // g = delta^-1, alpha = dhat reproduces S^4.
  CHECK(intro_form_holds(sys, md.delta_inverse, md.delta, dmd.delta, dmd.delta_inverse));
  // g = delta^-1, alpha = dhat^-1 does not.
  CHECK_FALSE(intro_form_holds(sys, md.delta_inverse, md.delta, dmd.delta_inverse, dmd.delta));
}

TEST_CASE("a convention swap is detected by the Radford check") {
  // Reversing the order of dhat and dhat^-1 only matters when dhat^2 != eps.
  for (const char* name : {"sweedler_H4", "taft_T3"}) {
    const PairedSystem sys = PairedSystem::build(build_builtin(name));
    const HopfAlgebra& h = *sys.primal();
    const ModularData& md = sys.primal_modular();
    const ModularData& dmd = sys.dual_modular();
    const Matrix swapped = harpoon_sandwich(h, dmd.delta_inverse, dmd.delta);
    bool agrees = true;
    for (std::size_t i = 0; i < h.dim(); ++i) {
      const Vec rhs =
          h.multiply(h.multiply(md.delta_inverse, swapped.apply(h.basis_vec(i))), md.delta);
      agrees = agrees && rhs == h.antipode().pow(4).column(i);
    }
    CHECK(agrees == (std::string(name) == "sweedler_H4"));
  }
}

TEST_CASE("prefixed renames ids") {
  Report r{"A", {{"x.y", "a in basis(A)", true, ""}}};
  const Report p = prefixed(r, "dual.");
  CHECK(p.results.at(0).id == "dual.x.y");
  CHECK_FALSE(has_failure(p));
}
