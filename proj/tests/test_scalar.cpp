#include <doctest.h>

#include <random>

#include "hopf/errors.hpp"
#include "hopf/scalar.hpp"

using namespace hopf;

namespace {

Scalar random_scalar(const FieldSpec& f, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<Rational> coeffs;
  for (unsigned i = 0; i < f.degree(); ++i) coeffs.emplace_back(num(rng), den(rng));
  for (auto& c : coeffs) c.canonicalize();
  return Scalar::from_polynomial(f, coeffs);
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  const FieldSpec q = FieldSpec::rational();
  const Scalar a(q, Rational(1, 3));
  const Scalar b(q, Rational(1, 6));
  CHECK(a + b == Scalar(q, Rational(1, 2)));
  CHECK(a * b == Scalar(q, Rational(1, 18)));
  CHECK((a / b).is_one() == false);
  CHECK(a / b == Scalar(q, 2));
  CHECK((a - a).is_zero());
  CHECK(a.inverse() == Scalar(q, 3));
  CHECK(Scalar(q, -2).pow(-3) == Scalar(q, Rational(-1, 8)));
}

TEST_CASE("cyclotomic fields") {
  SUBCASE("z^3 = 1 and 1 + z + z^2 = 0 in Q(zeta_3)") {
    const FieldSpec f = FieldSpec::cyclotomic(3);
    const Scalar z = Scalar::generator(f);
    CHECK(f.degree() == 2);
    CHECK(z.pow(3).is_one());
    CHECK((Scalar::one(f) + z + z * z).is_zero());
    CHECK((z * z).to_string() == "-z - 1");
    CHECK(z.inverse() == z * z);
  }
  SUBCASE("i^2 = -1 in Q(zeta_4)") {
    const FieldSpec f = FieldSpec::cyclotomic(4);
    const Scalar i = Scalar::generator(f);
    CHECK(i * i == Scalar(f, -1));
    CHECK(Scalar::root_of_unity(f, 2) == Scalar(f, -1));
  }
  SUBCASE("cyclotomic polynomials and Euler phi") {
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(7) == 6);
    const auto& phi6 = cyclotomic_polynomial(6);  // z^2 - z + 1
    REQUIRE(phi6.size() == 3);
    CHECK(phi6[0] == 1);
    CHECK(phi6[1] == -1);
    CHECK(phi6[2] == 1);
  }
}

TEST_CASE("parse and print round-trip") {
  const FieldSpec f = FieldSpec::cyclotomic(5);
  for (const char* text : {"0", "1", "-3/4", "z", "-z - 1", "1/2*z^3 - z + 3", "z^2"}) {
    const Scalar s = Scalar::parse(f, text);
    CHECK(Scalar::parse(f, s.to_string()) == s);
  }
  CHECK(Scalar::parse(f, "1/2*z^3 - z + 3").to_string() == "1/2*z^3 - z + 3");
  CHECK_THROWS_AS(Scalar::parse(f, "1/0"), Error);
  CHECK_THROWS_AS(Scalar::parse(f, "z +"), Error);
  CHECK_THROWS_AS(Scalar::parse(FieldSpec::rational(), "z"), Error);
}

TEST_CASE("errors") {
  const FieldSpec q = FieldSpec::rational();
  CHECK_THROWS_AS(Scalar(q, 1) / Scalar(q, 0), DivisionByZero);
  CHECK_THROWS_AS(Scalar::zero(q).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(q, 1) + Scalar::one(FieldSpec::cyclotomic(3)), FieldMismatch);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  for (unsigned n : {1u, 3u, 4u, 5u, 8u}) {
    const FieldSpec f = n == 1 ? FieldSpec::rational() : FieldSpec::cyclotomic(n);
    for (int trial = 0; trial < 25; ++trial) {
      const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CHECK(Scalar::parse(f, a.to_string()) == a);
    }
  }
}

TEST_CASE("embedding rational values") {
  const Scalar half(FieldSpec::rational(), Rational(1, 2));
  const Scalar e = half.embed(FieldSpec::cyclotomic(6));
  CHECK(e.field() == FieldSpec::cyclotomic(6));
  CHECK(e + e == Scalar::one(FieldSpec::cyclotomic(6)));
  CHECK_THROWS_AS(Scalar::generator(FieldSpec::cyclotomic(3)).embed(FieldSpec::rational()), Error);
}
