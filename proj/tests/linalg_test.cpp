#include "hopfheap/linalg.hpp"

#include <random>

#include "gtest/gtest.h"

#include "hopfheap/errors.hpp"
#include "test_support.hpp"

namespace hopfheap {
namespace {

using testing::ints;
using testing::kF7;
using testing::kQ;
using testing::random_matrix;

TEST(Rref, KnownMatrix) {
  Matrix m = Matrix::from_ints(kQ, {{2, 4, 6}, {1, 2, 4}, {0, 0, 1}});
  RrefResult r = rref(m);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(r.reduced, Matrix::from_ints(kQ, {{1, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
  EXPECT_EQ(rank(m), 2u);
}

TEST(Rref, RankDependsOnField) {
  // det = 7, singular only modulo 7.
  Matrix q = Matrix::from_ints(kQ, {{3, 1}, {1, 5}});
  Matrix p = Matrix::from_ints(kF7, {{3, 1}, {1, 5}});
  EXPECT_EQ(rank(q), 2u);
  EXPECT_EQ(rank(p), 1u);
  EXPECT_TRUE(inverse(q).has_value());
  EXPECT_FALSE(inverse(p).has_value());
}

TEST(Solve, ConsistentAndInconsistent) {
  Matrix m = Matrix::from_ints(kQ, {{1, 1}, {2, 2}});
  auto x = solve(m, ints(kQ, {3, 6}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m.apply(*x), ints(kQ, {3, 6}));
  EXPECT_EQ(*x, ints(kQ, {3, 0}));  // free variable set to zero
  EXPECT_FALSE(solve(m, ints(kQ, {1, 1})).has_value());
}

TEST(Matrix, ShapeErrors) {
  Matrix a(kQ, 2, 3), b(kQ, 2, 3);
  EXPECT_THROW(a * b, ShapeError);
  EXPECT_THROW(a.apply(ints(kQ, {1, 2})), ShapeError);
  EXPECT_THROW(a + Matrix(kQ, 3, 2), ShapeError);
}

TEST(PairIndex, Bounds) {
  EXPECT_EQ(pair_index(2, 1, 3), 7u);
  EXPECT_EQ(pair_unindex(7, 3), (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_THROW(pair_index(3, 0, 3), ShapeError);
  EXPECT_THROW(pair_unindex(9, 3), ShapeError);
}

class LinalgProperties : public ::testing::TestWithParam<FieldSpec> {};

TEST_P(LinalgProperties, InverseIsTwoSided) {
  const FieldSpec f = GetParam();
  std::mt19937 rng(7);
  int inverted = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m = random_matrix(f, 5, 5, rng, 0.6);
    auto inv = inverse(m);
    EXPECT_EQ(inv.has_value(), rank(m) == 5);
    if (!inv) continue;
    ++inverted;
    EXPECT_TRUE((m * *inv).is_identity());
    EXPECT_TRUE((*inv * m).is_identity());
  }
  EXPECT_GT(inverted, 10);
}

TEST_P(LinalgProperties, RankNullity) {
  const FieldSpec f = GetParam();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m = random_matrix(f, 4, 7, rng, 0.4);
    SubspaceBasis ker = SubspaceBasis::kernel_of(m);
    EXPECT_EQ(ker.dim() + rank(m), 7u);
    for (const auto& v : ker.vectors()) EXPECT_TRUE(is_zero(m.apply(v)));
    EXPECT_EQ(SubspaceBasis::row_space(m).dim(), rank(m));
    EXPECT_EQ(rank(m.transpose()), rank(m));
  }
}

TEST_P(LinalgProperties, SubspaceSumAndIntersection) {
  const FieldSpec f = GetParam();
  std::mt19937 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    SubspaceBasis u = SubspaceBasis::row_space(random_matrix(f, 3, 6, rng, 0.5));
    SubspaceBasis w = SubspaceBasis::row_space(random_matrix(f, 4, 6, rng, 0.5));
    SubspaceBasis s = u.sum(w), i = u.intersect(w);
    EXPECT_EQ(s.dim() + i.dim(), u.dim() + w.dim());
    EXPECT_TRUE(s.contains(u));
    EXPECT_TRUE(s.contains(w));
    EXPECT_TRUE(u.contains(i));
    EXPECT_TRUE(w.contains(i));
    EXPECT_EQ(u.sum(w), w.sum(u));
  }
}

TEST_P(LinalgProperties, SpanIsOrderIndependent) {
  const FieldSpec f = GetParam();
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(f, 4, 5, rng, 0.5);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < 4; ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
    SubspaceBasis a = SubspaceBasis::span(f, 5, rows);
    std::reverse(rows.begin(), rows.end());
    SubspaceBasis b = SubspaceBasis::span(f, 5, rows);
    EXPECT_EQ(a, b);
    for (const auto& v : rows) {
      auto x = a.coordinates(v);
      ASSERT_TRUE(x.has_value());
      Vector back = zero_vector(f, 5);
      for (std::size_t k = 0; k < a.dim(); ++k) axpy(back, (*x)[k], a.vectors()[k]);
      EXPECT_EQ(back, v);
    }
  }
}

TEST_P(LinalgProperties, QuotientProjectionAndSection) {
  const FieldSpec f = GetParam();
  std::mt19937 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    SubspaceBasis w = SubspaceBasis::row_space(random_matrix(f, 3, 6, rng, 0.5));
    QuotientData q = quotient(w);
    EXPECT_EQ(q.quotient_dim() + w.dim(), 6u);
    EXPECT_TRUE((q.projection * q.section).is_identity() || q.quotient_dim() == 0);
    for (const auto& v : w.vectors()) EXPECT_TRUE(is_zero(q.project(v)));
    // v - section(pi(v)) lies in W
    Matrix m = random_matrix(f, 1, 6, rng);
    Vector v(m.row(0).begin(), m.row(0).end());
    Vector back = q.section.apply(q.project(v));
    for (std::size_t k = 0; k < 6; ++k) back[k] = v[k] - back[k];
    EXPECT_TRUE(w.contains(back));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, LinalgProperties,
                         ::testing::Values(FieldSpec::rationals(), FieldSpec::prime(7),
                                           FieldSpec::prime(3)));

}  // namespace
}  // namespace hopfheap
