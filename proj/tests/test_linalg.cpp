#include <doctest.h>

#include <random>

#include "hopf/errors.hpp"
#include "hopf/linalg.hpp"

using namespace hopf;

namespace {

Matrix random_matrix(const FieldSpec& f, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = Scalar::from_polynomial(f, {Rational(d(rng)), Rational(d(rng))});
  return m;
}

}  // namespace

TEST_CASE("small systems") {
  const FieldSpec q = FieldSpec::rational();
  const Matrix m = Matrix::from_rows(q, 2, {{Scalar(q, 2), Scalar(q, 1)},
                                             {Scalar(q, 1), Scalar(q, 3)}});
  const Vec x = solve(m, Vec{Scalar(q, 3), Scalar(q, 4)});
  CHECK(x == Vec{Scalar(q, 1), Scalar(q, 1)});
  CHECK(m * invert(m) == Matrix::identity(q, 2));
  CHECK(rank(m) == 2);
  CHECK(m.transpose().apply(x) == m.apply_left(x));
}

TEST_CASE("singular matrices") {
  const FieldSpec q = FieldSpec::rational();
  const Matrix m = Matrix::from_rows(q, 2, {{Scalar(q, 1), Scalar(q, 2)},
                                             {Scalar(q, 2), Scalar(q, 4)}});
  CHECK(rank(m) == 1);
  CHECK_THROWS_AS(invert(m), SingularMatrix);
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(m.apply(ns[0])));
  CHECK_THROWS_AS(solve(m, Vec{Scalar(q, 1), Scalar(q, 0)}), Error);
}

TEST_CASE("multiplicative order") {
  const FieldSpec q = FieldSpec::rational();
  const Matrix swap = Matrix::from_rows(q, 2, {{Scalar(q, 0), Scalar(q, 1)},
                                                {Scalar(q, 1), Scalar(q, 0)}});
  CHECK(multiplicative_order(swap, 10) == 2u);
  const Matrix shear = Matrix::from_rows(q, 2, {{Scalar(q, 1), Scalar(q, 1)},
                                                 {Scalar(q, 0), Scalar(q, 1)}});
  CHECK(!multiplicative_order(shear, 50).has_value());
}

TEST_CASE("random matrices over Q(zeta_3)") {
  std::mt19937 rng(11);
  const FieldSpec f = FieldSpec::cyclotomic(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = random_matrix(f, 4, rng), b = random_matrix(f, 4, rng);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK(kron(a, b).rows() == 16);
    const std::size_t r = rank(a);
    CHECK(r + nullspace(a).size() == 4);
    for (const Vec& v : nullspace(a)) CHECK(is_zero(a.apply(v)));
    if (r == 4) {
      CHECK((a * invert(a)).is_identity());
      const Vec rhs = b.column(0);
      CHECK(a.apply(solve(a, rhs)) == rhs);
    }
  }
}

TEST_CASE("kron acts on tensors") {
  std::mt19937 rng(3);
  const FieldSpec f = FieldSpec::cyclotomic(3);
  const Matrix a = random_matrix(f, 3, rng), b = random_matrix(f, 3, rng);
  const Vec u = a.column(1), v = b.column(2);
  CHECK(kron(a, b).apply(tensor(u, v)) == tensor(a.apply(u), b.apply(v)));
}
