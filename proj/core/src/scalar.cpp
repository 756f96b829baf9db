#include "hopf/scalar.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "hopf/errors.hpp"

namespace hopf {

FieldSpec FieldSpec::cyclotomic(unsigned order) {
  if (order == 0) throw Error("cyclotomic field order must be positive");
  return FieldSpec(Kind::cyclotomic, order);
}

unsigned FieldSpec::degree() const {
  return kind_ == Kind::rational ? 1 : euler_phi(order_);
}

std::string FieldSpec::to_string() const {
  if (kind_ == Kind::rational) return "rational";
  return "cyclotomic(" + std::to_string(order_) + ")";
}

std::ostream& operator<<(std::ostream& os, const FieldSpec& spec) {
  return os << spec.to_string();
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// Exact division of integer polynomials (lowest degree first) by a monic
// divisor.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num,
                                    const std::vector<mpz_class>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<mpz_class> quot(num.size() - dd);
  for (std::size_t k = num.size(); k-- > dd;) {
    const mpz_class c = num[k];
    quot[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dd; ++t) num[k - dd + t] -= c * den[t];
  }
  return quot;
}

const std::vector<mpz_class>& cyclotomic_locked(
    unsigned n, std::map<unsigned, std::vector<mpz_class>>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<mpz_class> poly(n + 1);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_locked(d, cache));
  }
  return cache.emplace(n, std::move(poly)).first->second;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw Error("cyclotomic polynomial order must be positive");
  static std::map<unsigned, std::vector<mpz_class>> cache;
  std::lock_guard lock(cache_mutex());
  return cyclotomic_locked(n, cache);
}

namespace detail {

const Field* intern_field(const FieldSpec& spec) {
  static std::map<std::pair<int, unsigned>, std::unique_ptr<Field>> fields;
  static std::mutex m;
  {
    std::lock_guard lock(m);
    auto key = std::make_pair(static_cast<int>(spec.kind()), spec.order());
    if (auto it = fields.find(key); it != fields.end()) return it->second.get();
  }
  auto field = std::make_unique<Field>(Field{spec, spec.degree(), {}});
  if (spec.kind() == FieldSpec::Kind::rational) {
    field->modulus = {Rational(0), Rational(1)};
  } else {
    for (const auto& c : cyclotomic_polynomial(spec.order()))
      field->modulus.emplace_back(c);
  }
  std::lock_guard lock(m);
  auto key = std::make_pair(static_cast<int>(spec.kind()), spec.order());
  auto [it, inserted] = fields.emplace(key, std::move(field));
  return it->second.get();
}

}  // namespace detail

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder and quotient of a by b over Q (b nonzero, trimmed).
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t t = 0; t < b.size(); ++t) a[shift + t] -= c * b[t];
    a.pop_back();
    trim(a);
  }
  return {std::move(q), std::move(a)};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

Scalar::Scalar() : Scalar(FieldSpec::rational(), 0L) {}

Scalar::Scalar(const FieldSpec& spec, const Rational& value)
    : field_(detail::intern_field(spec)) {
  coeffs_.assign(field_->degree, Rational(0));
  coeffs_[0] = value;
}

Scalar Scalar::from_polynomial(const FieldSpec& spec,
                               const std::vector<Rational>& coeffs) {
  Scalar s = zero(spec);
  std::vector<Rational> poly = coeffs;
  s.reduce_high(poly);
  for (std::size_t i = 0; i < poly.size() && i < s.coeffs_.size(); ++i)
    s.coeffs_[i] = poly[i];
  return s;
}

Scalar Scalar::generator(const FieldSpec& spec) {
  if (spec.kind() == FieldSpec::Kind::rational)
    throw Error("the rational field has no generator z");
  return from_polynomial(spec, {Rational(0), Rational(1)});
}

Scalar Scalar::root_of_unity(const FieldSpec& spec, unsigned n) {
  if (n == 0) throw Error("root of unity order must be positive");
  if (n == 1) return one(spec);
  if (spec.kind() == FieldSpec::Kind::rational) {
    if (n == 2) return Scalar(spec, -1L);
    throw Error("Q contains no primitive " + std::to_string(n) + "-th root of unity");
  }
  if (spec.order() % n != 0)
    throw Error(std::to_string(n) + " does not divide the field order " +
                std::to_string(spec.order()));
  return generator(spec).pow(spec.order() / n);
}

void Scalar::reduce_high(std::vector<Rational>& poly) const {
  const auto& mod = field_->modulus;
  const std::size_t d = field_->degree;
  for (std::size_t k = poly.size(); k-- > d;) {
    if (poly[k] == 0) continue;
    const Rational c = poly[k];
    for (std::size_t t = 0; t <= d; ++t) poly[k - d + t] -= c * mod[t];
  }
  if (poly.size() > d) poly.resize(d);
}

bool Scalar::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

const Rational& Scalar::rational_value() const {
  if (!is_rational()) throw Error("scalar " + to_string() + " is not rational");
  return coeffs_[0];
}

void Scalar::check_same_field(const Scalar& other) const {
  if (field_ != other.field_)
    throw FieldMismatch("mixed fields: " + field_->spec.to_string() + " and " +
                        other.field_->spec.to_string());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
  lhs.check_same_field(rhs);
  const std::size_t d = lhs.coeffs_.size();
  if (d == 1) {
    Scalar::Coefficients c;
    c.emplace_back(lhs.coeffs_[0] * rhs.coeffs_[0]);
    return Scalar(lhs.field_, std::move(c));
  }
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(rhs.coeffs_[j]) == 0) continue;
      prod[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  lhs.reduce_high(prod);
  return Scalar(lhs.field_, Scalar::Coefficients(prod.begin(), prod.end()));
}

Scalar& Scalar::operator*=(const Scalar& other) {
  *this = *this * other;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  *this = *this * other.inverse();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (coeffs_.size() == 1) {
    Coefficients c;
    c.emplace_back(1 / coeffs_[0]);
    return Scalar(field_, std::move(c));
  }
  // Extended Euclid on (value, Phi_N): track s with s*value == r (mod Phi_N).
  Poly r0 = field_->modulus;
  Poly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1)
    throw MalformedScalar("element " + to_string() + " is not invertible modulo Phi_" +
                          std::to_string(field_->spec.order()));
  for (auto& c : s0) c /= r0[0];
  Scalar result = from_polynomial(field_->spec, s0);
  return result;
}

Scalar Scalar::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Scalar result = one(field_->spec);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  lhs.check_same_field(rhs);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    if (lhs.coeffs_[i] != rhs.coeffs_[i]) return false;
  return true;
}

int Scalar::compare(const Scalar& other) const {
  check_same_field(other);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const int c = cmp(coeffs_[i], other.coeffs_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string Scalar::to_string() const {
  if (field_->spec.kind() == FieldSpec::Kind::rational || is_rational())
    return coeffs_[0].get_str();
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "z";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Scalar Scalar::embed(const FieldSpec& target) const {
  if (target == field_->spec) return *this;
  return Scalar(target, rational_value());
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) {
  return os << value.to_string();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ScalarLexer {
 public:
  explicit ScalarLexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ScalarParseError("bad scalar \"" + std::string(text_) + "\" at offset " +
                           std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(const FieldSpec& spec, std::string_view text) {
  ScalarLexer lex(text);
  if (lex.at_end()) lex.fail("empty scalar");
  std::vector<Rational> poly(1, Rational(0));
  bool first = true;
  while (!lex.at_end()) {
    int sign = 1;
    if (lex.accept('-')) {
      sign = -1;
    } else if (lex.accept('+')) {
    } else if (!first) {
      lex.fail("expected '+' or '-'");
    }
    first = false;
    Rational coeff(1);
    bool has_coeff = false;
    if (lex.peek_digit()) {
      mpz_class num(lex.digits());
      mpz_class den(1);
      if (lex.accept('/')) {
        den = mpz_class(lex.digits());
        if (den == 0) lex.fail("zero denominator");
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      has_coeff = true;
    }
    std::size_t power = 0;
    if (has_coeff && lex.accept('*')) {
      if (lex.peek() != 'z') lex.fail("expected 'z' after '*'");
    }
    if (lex.accept('z')) {
      if (spec.kind() == FieldSpec::Kind::rational)
        lex.fail("'z' is not defined over the rationals");
      power = 1;
      if (lex.accept('^')) power = std::stoul(lex.digits());
    } else if (!has_coeff) {
      lex.fail("expected a number or 'z'");
    }
    if (poly.size() <= power) poly.resize(power + 1, Rational(0));
    poly[power] += sign * coeff;
  }
  return from_polynomial(spec, poly);
}

}  // namespace hopf
