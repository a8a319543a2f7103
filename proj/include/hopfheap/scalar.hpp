#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace hopfheap {

/// The base field: the rationals or a prime field F_p.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws ParseError unless p is prime.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rationals; }
  /// Modulus of a prime field, 0 for the rationals.
  std::uint64_t modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_; }

  /// "Q" or "Fp:<p>".
  std::string to_string() const;
  /// Inverse of to_string().
  static FieldSpec parse(std::string_view text);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

/// An exact element of a FieldSpec, always stored in canonical form: a reduced
/// fraction with positive denominator, or a residue in [0, p).  Equality is
/// therefore componentwise.
class Scalar {
 public:
  /// Zero of the rationals; exists so containers can be resized.
  Scalar() : field_(FieldSpec::rationals()), value_(mpq_class(0)) {}
  Scalar(const FieldSpec& field, long value);
  /// numerator / denominator, canonicalised.  Throws on a zero denominator.
  Scalar(const FieldSpec& field, const mpz_class& numerator, const mpz_class& denominator);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }

  /// Parses "a", "a/b" (b nonzero).  In F_p the value is reduced mod p.
  static Scalar parse(std::string_view text, const FieldSpec& field);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Canonical string: "a", "a/b" with b > 1, or the residue.
  std::string to_string() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

  /// Rational value; only meaningful over Q.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  /// Residue; only meaningful over F_p.
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

 private:
  Scalar(const FieldSpec& field, std::uint64_t residue, std::monostate)
      : field_(field), value_(residue) {}
  Scalar(const FieldSpec& field, mpq_class q) : field_(field), value_(std::move(q)) {}

  void require_same_field(const Scalar& other) const;

  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

/// Explicit spelling of the four field operations.
enum class ScalarOp { Add, Mul, Neg, Inv };
Scalar scalar_arith(ScalarOp op, const Scalar& x, const Scalar* y = nullptr);

}  // namespace hopfheap
