#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "hopf/catalog.hpp"
#include "hopf/duality.hpp"
#include "hopf/modular.hpp"

using namespace hopf;

namespace {

const nlohmann::json& oracle() {
  static const nlohmann::json values = [] {
    std::ifstream in(HOPFKIT_ORACLE_FILE);
    return nlohmann::json::parse(in);
  }();
  return values;
}

Vec parse_vec(const FieldSpec& f, const nlohmann::json& j) {
  Vec v;
  for (const auto& s : j) v.push_back(Scalar::parse(f, s.get<std::string>()));
  return v;
}

Matrix parse_matrix(const FieldSpec& f, const nlohmann::json& j) {
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(parse_vec(f, r));
  return Matrix::from_rows(f, rows.size(), rows);
}

}  // namespace

TEST_CASE("modular data agrees with the sympy oracle") {
  for (const char* name : {"sweedler_H4", "taft_T3", "taft_T4"}) {
    CAPTURE(name);
    const auto& o = oracle().at(name);
    const PairedSystem sys = PairedSystem::build(build_builtin(name));
    const FieldSpec f = sys.primal()->field();
    const ModularData& md = sys.primal_modular();
    CHECK(md.phi == parse_vec(f, o.at("phi")));
    CHECK(md.delta == parse_vec(f, o.at("delta")));
    CHECK(md.tau == Scalar::parse(f, o.at("tau").get<std::string>()));
    CHECK(md.sigma == parse_matrix(f, o.at("sigma")));
    CHECK(sys.dual_modular().delta == parse_vec(f, o.at("delta_hat")));
    CHECK(sys.dual_modular().tau == Scalar::parse(f, o.at("tau_hat").get<std::string>()));
    CHECK(multiplicative_order(sys.primal()->antipode(), 64) ==
          o.at("antipode_order").get<unsigned>());
  }
}

TEST_CASE("scaling constant of Sweedler's algebra is -1") {
  const ValidatedAlgebra h(build_sweedler());
  const Vec phi = left_integral(h);
  CHECK(scaling_constant(h, phi) == Scalar(h->field(), -1));
}

TEST_CASE("group and function algebras are unimodular with trivial sigma") {
  for (const char* name : {"group_Z2", "group_Z6", "group_S3", "fun_Z2", "fun_Z6", "fun_S3"}) {
    CAPTURE(name);
    const ValidatedAlgebra h(build_builtin(name));
    const ModularData md = compute_modular_data(h);
    CHECK(md.delta == h->unit());
    CHECK(md.tau.is_one());
    CHECK(md.sigma.is_identity());
    CHECK(md.sigma_prime.is_identity());
  }
}

TEST_CASE("group algebra integral is the coefficient of the identity") {
  const ValidatedAlgebra h(build_group_algebra(GroupPresentation::symmetric3()));
  CHECK(left_integral(h) == unit_vec(h->field(), 6, 0));
}

TEST_CASE("integral spaces are one-dimensional") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const HopfAlgebra h = build_builtin(name);
    CHECK(left_integral_space(h).size() == 1);
    CHECK(right_integral_space(h).size() == 1);
  }
}

TEST_CASE("modular identities on every builtin") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const ValidatedAlgebra h(build_builtin(name));
    const ModularData md = compute_modular_data(h);
    const Report r = check_modular(h, md);
    CHECK(r.all_pass());
    CHECK(check_antipode_properties(h).all_pass());
    // sigma is an algebra automorphism.
    for (std::size_t i = 0; i < h->dim(); ++i)
      for (std::size_t j = 0; j < h->dim(); ++j)
        CHECK(md.sigma.apply(h->multiply(h->basis_vec(i), h->basis_vec(j))) ==
              h->multiply(md.sigma.column(i), md.sigma.column(j)));
    CHECK(h->multiply(md.delta, md.delta_inverse) == h->unit());
    CHECK(md.psi == h->antipode().apply_left(md.phi));
  }
}

TEST_CASE("rescaling phi leaves delta, sigma and tau unchanged") {
  const ValidatedAlgebra h(build_taft(3));
  const ModularData md = compute_modular_data(h);
  const Scalar c = Scalar::parse(h->field(), "2*z - 3");
  const ModularData scaled = compute_modular_data(h, scale(c, md.phi));
  CHECK(scaled.delta == md.delta);
  CHECK(scaled.sigma == md.sigma);
  CHECK(scaled.tau == md.tau);
}
