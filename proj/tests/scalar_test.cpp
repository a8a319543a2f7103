#include "hopfheap/scalar.hpp"

#include <random>

#include "gtest/gtest.h"

#include "hopfheap/errors.hpp"
#include "test_support.hpp"

namespace hopfheap {
namespace {

using testing::kF7;
using testing::kQ;
using testing::random_scalar;

TEST(FieldSpec, PrimeCheck) {
  EXPECT_NO_THROW(FieldSpec::prime(2));
  EXPECT_NO_THROW(FieldSpec::prime(7));
  EXPECT_NO_THROW(FieldSpec::prime(2305843009213693951ULL));  // 2^61 - 1
  EXPECT_THROW(FieldSpec::prime(0), ParseError);
  EXPECT_THROW(FieldSpec::prime(1), ParseError);
  EXPECT_THROW(FieldSpec::prime(8), ParseError);
  EXPECT_THROW(FieldSpec::prime(561), ParseError);  // Carmichael
}

TEST(FieldSpec, TextRoundTrip) {
  EXPECT_EQ(FieldSpec::parse("Q"), kQ);
  EXPECT_EQ(FieldSpec::parse("Fp:7"), kF7);
  EXPECT_EQ(FieldSpec::parse(kF7.to_string()), kF7);
  EXPECT_EQ(kQ.to_string(), "Q");
  EXPECT_THROW(FieldSpec::parse("Fp:9"), ParseError);
  EXPECT_THROW(FieldSpec::parse("Fp:"), ParseError);
  EXPECT_THROW(FieldSpec::parse("R"), ParseError);
}

TEST(Scalar, RationalCanonicalForm) {
  EXPECT_EQ(Scalar::parse("2/4", kQ), Scalar::parse("1/2", kQ));
  EXPECT_EQ(Scalar::parse("2/4", kQ).to_string(), "1/2");
  EXPECT_EQ(Scalar::parse("3/-6", kQ).to_string(), "-1/2");
  EXPECT_EQ(Scalar::parse("-4/2", kQ).to_string(), "-2");
  EXPECT_EQ(Scalar::parse("+0/5", kQ).to_string(), "0");
  EXPECT_TRUE(Scalar::parse("0/5", kQ).is_zero());
}

TEST(Scalar, PrimeFieldReduction) {
  EXPECT_EQ(Scalar::parse("-1", kF7).to_string(), "6");
  EXPECT_EQ(Scalar::parse("1/2", kF7).to_string(), "4");
  EXPECT_EQ(Scalar::parse("15", kF7), Scalar(kF7, 1));
  EXPECT_EQ(Scalar::parse("3/9", kF7), Scalar::parse("1/3", kF7));
}

TEST(Scalar, MalformedText) {
  EXPECT_THROW(Scalar::parse("1/0", kQ), ParseError);
  EXPECT_THROW(Scalar::parse("1/7", kF7), ParseError);
  EXPECT_THROW(Scalar::parse("", kQ), ParseError);
  EXPECT_THROW(Scalar::parse("1.5", kQ), ParseError);
  EXPECT_THROW(Scalar::parse("1/", kQ), ParseError);
  EXPECT_THROW(Scalar::parse("x", kQ), ParseError);
}

TEST(Scalar, Errors) {
  EXPECT_THROW(Scalar::zero(kQ).inverse(), DivisionByZeroError);
  EXPECT_THROW(Scalar::zero(kF7).inverse(), DivisionByZeroError);
  EXPECT_THROW(Scalar(kQ, 1) + Scalar(kF7, 1), FieldMismatchError);
  EXPECT_THROW(Scalar(kF7, 1) * Scalar(FieldSpec::prime(5), 1), FieldMismatchError);
  EXPECT_NE(Scalar(kQ, 1), Scalar(kF7, 1));
}

TEST(Scalar, NamedOperations) {
  Scalar a(kF7, 3), b(kF7, 5);
  EXPECT_EQ(scalar_arith(ScalarOp::Add, a, &b), Scalar(kF7, 1));
  EXPECT_EQ(scalar_arith(ScalarOp::Mul, a, &b), Scalar(kF7, 1));
  EXPECT_EQ(scalar_arith(ScalarOp::Neg, a), Scalar(kF7, 4));
  EXPECT_EQ(scalar_arith(ScalarOp::Inv, a), b);
  EXPECT_THROW(scalar_arith(ScalarOp::Add, a), ShapeError);
}

TEST(Scalar, LargeModulusNoOverflow) {
  FieldSpec f = FieldSpec::prime(2305843009213693951ULL);
  Scalar m = -Scalar::one(f);
  EXPECT_EQ(m * m, Scalar::one(f));
  Scalar big = Scalar::parse("1152921504606846976", f);  // 2^60
  EXPECT_EQ(big * Scalar(f, 2), Scalar::one(f));
  EXPECT_EQ(big * big.inverse(), Scalar::one(f));
}

class FieldAxioms : public ::testing::TestWithParam<FieldSpec> {};

TEST_P(FieldAxioms, RandomTriples) {
  const FieldSpec f = GetParam();
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 300; ++trial) {
    Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a - a, Scalar::zero(f));
    EXPECT_EQ(a + (-a), Scalar::zero(f));
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Scalar::one(f));
      EXPECT_EQ((b / a) * a, b);
    }
    EXPECT_EQ(Scalar::parse(a.to_string(), f), a);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms,
                         ::testing::Values(FieldSpec::rationals(), FieldSpec::prime(7),
                                           FieldSpec::prime(101),
                                           FieldSpec::prime(2305843009213693951ULL)));

}  // namespace
}  // namespace hopfheap
