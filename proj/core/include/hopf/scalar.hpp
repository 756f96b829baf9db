#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hopf {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator.
using Rational = mpq_class;

// Which field a scalar lives in. Q(zeta_1) and Q(zeta_2) are isomorphic to Q
// but remain distinct specs: scalars from different specs never mix.
class FieldSpec {
 public:
  enum class Kind { rational, cyclotomic };

  static FieldSpec rational() { return FieldSpec(Kind::rational, 1); }
  static FieldSpec cyclotomic(unsigned order);

  Kind kind() const { return kind_; }
  // N for cyclotomic(N); 1 for the rationals.
  unsigned order() const { return order_; }
  // Dimension over Q, i.e. Euler phi of the order.
  unsigned degree() const;

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, unsigned order) : kind_(kind), order_(order) {}

  Kind kind_;
  unsigned order_;
};

std::ostream& operator<<(std::ostream& os, const FieldSpec& spec);

// Integer coefficients of the N-th cyclotomic polynomial, lowest degree
// first. Computed by dividing x^N - 1 by Phi_d for every proper divisor d;
// cached for the lifetime of the process.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

namespace detail {
// Interned per-spec data. Lives until program exit, so scalars may hold a
// raw pointer to it and compare fields by address.
struct Field {
  FieldSpec spec;
  unsigned degree;
  std::vector<Rational> modulus;  // monic Phi_N, length degree + 1
};
const Field* intern_field(const FieldSpec& spec);
}  // namespace detail

// Exact element of Q or Q(zeta_N) = Q[z]/Phi_N(z), stored as the coefficient
// vector of its reduced representative (length = field degree).
class Scalar {
 public:
  using Coefficients = boost::container::small_vector<Rational, 2>;

  // Zero of Q.
  Scalar();
  Scalar(const FieldSpec& spec, const Rational& value);
  Scalar(const FieldSpec& spec, long value) : Scalar(spec, Rational(value)) {}

  static Scalar zero(const FieldSpec& spec) { return Scalar(spec, 0L); }
  static Scalar one(const FieldSpec& spec) { return Scalar(spec, 1L); }
  // Polynomial in z with the given coefficients (lowest degree first); any
  // length is accepted and reduced modulo Phi_N.
  static Scalar from_polynomial(const FieldSpec& spec,
                                const std::vector<Rational>& coeffs);
  // The generator z of Q(zeta_N).
  static Scalar generator(const FieldSpec& spec);

  // A primitive n-th root of unity; requires n | N for cyclotomic(N), and
  // n <= 2 over Q.
  static Scalar root_of_unity(const FieldSpec& spec, unsigned n);

  // Parses "p", "p/q", or a polynomial in z such as "1/2*z^2 - z + 3".
  static Scalar parse(const FieldSpec& spec, std::string_view text);

  const FieldSpec& field() const { return field_->spec; }
  const Coefficients& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True iff the value lies in Q (all higher coefficients vanish).
  bool is_rational() const;
  // The rational value; throws if !is_rational().
  const Rational& rational_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  // Multiplicative inverse; throws DivisionByZero for zero.
  Scalar inverse() const;
  Scalar pow(long exponent) const;

  // Structural equality after normalisation. Throws FieldMismatch when the
  // two scalars belong to different fields.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  // Total order on the coefficient vectors; only meaningful for
  // deterministic sorting, not as a field ordering.
  int compare(const Scalar& other) const;

  // Canonical text form, inverse of parse().
  std::string to_string() const;

  // Re-interprets a rational-valued scalar in another field.
  Scalar embed(const FieldSpec& target) const;

 private:
  Scalar(const detail::Field* field, Coefficients coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {}
  void check_same_field(const Scalar& other) const;
  void reduce_high(std::vector<Rational>& poly) const;

  const detail::Field* field_;
  Coefficients coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& value);

}  // namespace hopf
