#include "hopfheap/scalar.hpp"

#include <charconv>
#include <ostream>

#include "hopfheap/errors.hpp"

namespace hopfheap {

namespace {

std::uint64_t reduce_mod(const mpz_class& value, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

mpz_class parse_integer(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ParseError("malformed integer '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw ParseError("malformed integer '" + std::string(text) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  // mpz_probab_prime_p is deterministic (BPSW) for 64-bit inputs.
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw ParseError("field modulus " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(Kind::PrimeField, p);
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:") || text.starts_with("F_p:")) {
    auto digits = text.substr(text.find(':') + 1);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("malformed prime in field '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

Scalar::Scalar(const FieldSpec& field, long value) : field_(field), value_(std::uint64_t{0}) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce_mod(mpz_class(value), field.modulus());
  }
}

Scalar::Scalar(const FieldSpec& field, const mpz_class& numerator, const mpz_class& denominator)
    : field_(field), value_(std::uint64_t{0}) {
  if (denominator == 0) throw DivisionByZeroError("zero denominator");
  if (field.is_rational()) {
    mpq_class q(numerator, denominator);
    q.canonicalize();
    value_ = std::move(q);
  } else {
    std::uint64_t p = field.modulus();
    std::uint64_t den = reduce_mod(denominator, p);
    if (den == 0) throw DivisionByZeroError("denominator vanishes modulo " + std::to_string(p));
    value_ = mul_mod(reduce_mod(numerator, p), pow_mod(den, p - 2, p), p);
  }
}

Scalar Scalar::parse(std::string_view text, const FieldSpec& field) {
  try {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Scalar(field, parse_integer(text), mpz_class(1));
    }
    auto num = parse_integer(text.substr(0, slash));
    auto den = parse_integer(text.substr(slash + 1));
    return Scalar(field, num, den);
  } catch (const DivisionByZeroError& e) {
    throw ParseError("scalar '" + std::string(text) + "': " + e.what());
  }
}

bool Scalar::is_zero() const {
  if (field_.is_rational()) return sgn(rational()) == 0;
  return residue() == 0;
}

bool Scalar::is_one() const {
  if (field_.is_rational()) return rational() == 1;
  return residue() == 1;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return rational().get_str();
  return std::to_string(residue());
}

void Scalar::require_same_field(const Scalar& other) const {
  if (!(field_ == other.field_)) {
    throw FieldMismatchError("mixed fields: " + field_.to_string() + " and " +
                             other.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero");
  if (field_.is_rational()) return Scalar(field_, mpq_class(1 / rational()));
  std::uint64_t p = field_.modulus();
  return Scalar(field_, pow_mod(residue(), p - 2, p), std::monostate{});
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += other.rational();
  } else {
    std::uint64_t p = field_.modulus();
    std::uint64_t a = residue(), b = other.residue();
    value_ = (a >= p - b) ? a - (p - b) : a + b;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= other.rational();
  } else {
    std::uint64_t p = field_.modulus();
    std::uint64_t a = residue(), b = other.residue();
    value_ = (a >= b) ? a - b : a + (p - b);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= other.rational();
  } else {
    value_ = mul_mod(residue(), other.residue(), field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-rational()));
  std::uint64_t r = residue();
  return Scalar(field_, r == 0 ? 0 : field_.modulus() - r, std::monostate{});
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar scalar_arith(ScalarOp op, const Scalar& x, const Scalar* y) {
  switch (op) {
    case ScalarOp::Add:
      if (y == nullptr) throw ShapeError("add needs two operands");
      return x + *y;
    case ScalarOp::Mul:
      if (y == nullptr) throw ShapeError("mul needs two operands");
      return x * *y;
    case ScalarOp::Neg:
      return -x;
    case ScalarOp::Inv:
      return x.inverse();
  }
  throw ShapeError("unknown scalar operation");
}

}  // namespace hopfheap
