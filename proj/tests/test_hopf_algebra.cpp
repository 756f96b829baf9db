#include <doctest.h>

#include "hopf/catalog.hpp"
#include "hopf/errors.hpp"
#include "hopf/hopf_algebra.hpp"
#include "hopf/modular.hpp"

using namespace hopf;

namespace {

// Sweedler's algebra with the antipode replaced by zero.
HopfAlgebra corrupted_sweedler() {
  const HopfAlgebra h = build_sweedler();
  return HopfAlgebra(h.data(), Matrix::zero(h.field(), h.dim(), h.dim()));
}

}  // namespace

TEST_CASE("every builtin satisfies the axioms and is regular") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const HopfAlgebra h = build_builtin(name);
    CHECK(validate(h).ok());
    CHECK(check_galois(h).all_pass());
    CHECK(compute_antipode(h.data()) == h.antipode());
  }
}

TEST_CASE("antipode is the convolution inverse of the identity") {
  for (const auto& name : {"group_S3", "sweedler_H4", "taft_T3"}) {
    CAPTURE(name);
    const HopfAlgebra h = build_builtin(name);
    const Matrix id = Matrix::identity(h.field(), h.dim());
    CHECK(convolve(h.antipode(), id, h.ops()) == unit_counit(h.data()));
    CHECK(convolve(id, h.antipode(), h.ops()) == unit_counit(h.data()));
  }
}

TEST_CASE("Galois maps have exact inverses") {
  const HopfAlgebra h = build_taft(3);
  const GaloisMaps g = galois_maps(h.data());
  CHECK((g.t1 * g.t1_inverse).is_identity());
  CHECK((g.t2_inverse * g.t2).is_identity());
}

TEST_CASE("Sweedler structure on 1, g, x, gx") {
  const HopfAlgebra h = build_sweedler();
  const FieldSpec f = h.field();
  const Vec one = h.basis_vec(0), g = h.basis_vec(1), x = h.basis_vec(2), gx = h.basis_vec(3);
  CHECK(h.multiply(g, g) == one);
  CHECK(is_zero(h.multiply(x, x)));
  CHECK(h.multiply(x, g) == scale(Scalar(f, -1), gx));
  CHECK(h.coproduct(x) == add(tensor(x, one), tensor(g, x)));
  CHECK(h.apply_antipode(x) == scale(Scalar(f, -1), gx));
  CHECK(h.apply_counit(x).is_zero());
  CHECK(multiplicative_order(h.antipode(), 16) == 4u);
}

TEST_CASE("iterated coproduct is coassociative") {
  const HopfAlgebra h = build_taft(3);
  const StructureOps& ops = h.ops();
  for (std::size_t i = 0; i < h.dim(); ++i) {
    const Vec a = h.basis_vec(i);
    const Vec d3 = ops.iterated_coproduct(a, 3);
    const Matrix id = Matrix::identity(h.field(), h.dim());
    CHECK(kron(ops.coproduct_map(), id).apply(ops.coproduct(a)) == d3);
    CHECK(kron(id, ops.coproduct_map()).apply(ops.coproduct(a)) == d3);
    CHECK(ops.iterated_coproduct(a, 1) == a);
  }
}

TEST_CASE("a zeroed antipode fails validation") {
  const HopfAlgebra bad = corrupted_sweedler();
  const ValidationReport r = validate(bad);
  CHECK_FALSE(r.ok());
  const CheckResult* left = r.report.find("axiom.antipode_left");
  REQUIRE(left != nullptr);
  CHECK_FALSE(left->pass);
  CHECK_FALSE(left->counterexample.empty());
  CHECK_THROWS_AS(ValidatedAlgebra{bad}, InvalidAlgebra);
}

TEST_CASE("a broken product fails associativity") {
  Bialgebra data = build_group_algebra(GroupPresentation::cyclic(3)).data();
  data.mul(1, 1, 2) = Scalar(data.field, 2);
  const HopfAlgebra h(data, compute_antipode(build_group_algebra(GroupPresentation::cyclic(3)).data()));
  CHECK_FALSE(validate(h).ok());
}

TEST_CASE("shape errors") {
  Bialgebra data = build_sweedler().data();
  data.counit.pop_back();
  CHECK_THROWS_AS(data.check_shape(), ShapeError);
}
