#include <doctest.h>

#include "hopf/catalog.hpp"
#include "hopf/duality.hpp"

using namespace hopf;

TEST_CASE("the dual of a group algebra is the function algebra") {
  for (const auto& g : {GroupPresentation::cyclic(6), GroupPresentation::symmetric3()}) {
    CAPTURE(g.name);
    const ValidatedAlgebra kg(build_group_algebra(g));
    const HopfAlgebra dual = build_dual(kg);
    const HopfAlgebra fun = build_function_algebra(g);
    CHECK(dual.mul() == fun.mul());
    CHECK(dual.comul() == fun.comul());
    CHECK(dual.unit() == fun.unit());
    CHECK(dual.counit() == fun.counit());
    CHECK(dual.antipode() == fun.antipode());
    CHECK(dual.name() == kg->name() + "_dual");
    CHECK(dual.basis()[1] == kg->basis()[1] + "*");
  }
}

TEST_CASE("dual structure constants transpose the primal ones") {
  const ValidatedAlgebra h(build_taft(3));
  const HopfAlgebra d = build_dual(h);
  const std::size_t n = h->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        CHECK(d.mul()(i, j, k) == h->comul()(k, i, j));
        CHECK(d.comul()(k, i, j) == h->mul()(i, j, k));
      }
  CHECK(d.unit() == h->counit());
  CHECK(d.counit() == h->unit());
  CHECK(d.antipode() == h->antipode().transpose());
}

TEST_CASE("Sweedler dual modular element and harpoons") {
  const PairedSystem sys = PairedSystem::build(build_sweedler());
  const HopfAlgebra& h = *sys.primal();
  const FieldSpec f = h.field();
  const Vec dhat = sys.dual_modular().delta;
  CHECK(dhat == Vec{Scalar(f, 1), Scalar(f, -1), Scalar(f, 0), Scalar(f, 0)});
  CHECK(sys.dual_modular().tau == Scalar(f, -1));
  const Vec x = h.basis_vec(2), gx = h.basis_vec(3);
  // dhat -> x = x_(1) <x_(2), dhat> with Delta(x) = x (x) 1 + g (x) x.
  CHECK(dual_act_left(h, dhat, x) == x);
  // x <- dhat = <x_(1), dhat> x_(2) = x + (-1) x.
  CHECK(dual_act_right(h, x, dhat) == scale(Scalar(f, -1), x));
  CHECK(harpoon_sandwich(h, dhat, sys.dual_modular().delta_inverse).apply(x) ==
        scale(Scalar(f, -1), x));
  CHECK(pairing(gx, unit_vec(f, 4, 3)).is_one());
}

TEST_CASE("actions are adjoint to the products") {
  const PairedSystem sys = PairedSystem::build(build_taft(3));
  const HopfAlgebra& h = *sys.primal();
  const HopfAlgebra& d = *sys.dual();
  const std::size_t n = h.dim();
  for (std::size_t p = 0; p < n; p += 2)
    for (std::size_t q = 1; q < n; q += 3)
      for (std::size_t r = 0; r < n; r += 4) {
        const Vec a = h.basis_vec(p), b = h.basis_vec(q), y = d.basis_vec(r);
        CHECK(pairing(h.multiply(b, a), y) == pairing(b, act_on_dual_left(h, a, y)));
        CHECK(pairing(h.multiply(a, b), y) == pairing(b, act_on_dual_right(h, y, a)));
        const Vec z = d.basis_vec(q);
        CHECK(pairing(a, d.multiply(z, y)) == pairing(dual_act_left(h, y, a), z));
        CHECK(pairing(a, d.multiply(y, z)) == pairing(dual_act_right(h, a, y), z));
      }
}

TEST_CASE("paired system reports pass on every builtin") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const PairedSystem sys = PairedSystem::build(build_builtin(name));
    CHECK(sys.dual_integral_report().all_pass());
    CHECK(check_pairing(sys).all_pass());
    CHECK(check_actions(sys).all_pass());
    CHECK(biduality_check(sys).all_pass());
    CHECK(sys.pairing_matrix().is_identity());
    // Two routes to dhat: the dual solve and eps o sigma^-1.
    CHECK(sys.primal_modular().sigma_inverse.apply_left(sys.primal()->counit()) ==
          sys.dual_modular().delta);
  }
}

TEST_CASE("swapping twice returns the primal structure") {
  const PairedSystem sys = PairedSystem::build(build_taft(3));
  const PairedSystem sw = sys.swapped();
  CHECK(sw.primal()->mul() == sys.dual()->mul());
  CHECK(sw.dual()->mul() == sys.primal()->mul());
  CHECK(sw.dual()->comul() == sys.primal()->comul());
  CHECK(sw.dual_modular().delta == sys.primal_modular().delta);
}
