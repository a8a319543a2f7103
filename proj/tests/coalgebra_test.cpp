#include "hopfheap/coalgebra.hpp"

#include "gtest/gtest.h"

#include "hopfheap/catalog.hpp"
#include "hopfheap/errors.hpp"
#include "test_support.hpp"

namespace hopfheap {
namespace {

using testing::ints;
using testing::kF7;
using testing::kQ;

TEST(Coalgebra, GrouplikePasses) {
  for (std::size_t n : {1u, 2u, 5u}) {
    EXPECT_TRUE(check_coalgebra(Coalgebra::grouplike(kQ, n)));
    EXPECT_TRUE(check_coalgebra(Coalgebra::grouplike(kF7, n)));
  }
}

TEST(Coalgebra, SweedlerPasses) {
  EXPECT_TRUE(check_coalgebra(gen_sweedler(kQ).coalgebra()));
  EXPECT_TRUE(check_coalgebra(gen_sweedler(FieldSpec::prime(3)).coalgebra()));
}

TEST(Coalgebra, PerturbedComultiplicationFailsCounit) {
  Coalgebra c = Coalgebra::grouplike(kQ, 3);
  Coalgebra bad = perturb(c, {0, 0, 0}, Scalar(kQ, 2));
  Report r = check_coalgebra(bad);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.axiom, "counit-left");
  ASSERT_FALSE(r.witness.empty());
  EXPECT_EQ(r.witness[0], 0u);
}

TEST(Coalgebra, NonCoassociativeIsReported) {
  // Delta(e1) gains e0 (x) e0; coassociativity is checked first.
  Coalgebra c = Coalgebra::grouplike(kQ, 2);
  Coalgebra bad = perturb(c, {1, 0, 0}, Scalar(kQ, 1));
  Report r = check_coalgebra(bad);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.axiom, "coassociativity");
}

TEST(Coalgebra, PerturbOutOfRange) {
  Coalgebra c = Coalgebra::grouplike(kQ, 2);
  EXPECT_THROW(perturb(c, {2, 0, 0}, Scalar(kQ, 1)), ShapeError);
  EXPECT_THROW(perturb(c, {0, 0}, Scalar(kQ, 1)), ShapeError);
}

TEST(Coalgebra, CoOppositeIsInvolution) {
  Coalgebra s = gen_sweedler(kQ).coalgebra();
  Coalgebra op = co_opposite(s);
  EXPECT_TRUE(check_coalgebra(op));
  EXPECT_FALSE(op == s);
  EXPECT_EQ(co_opposite(op), s);
  // Delta^cop(x) = 1 (x) x + x (x) g
  EXPECT_EQ(op.comul()(2, 0, 2), Scalar(kQ, 1));
  EXPECT_EQ(op.comul()(2, 2, 1), Scalar(kQ, 1));
}

TEST(Coalgebra, TensorProduct) {
  Coalgebra s = gen_sweedler(kQ).coalgebra();
  Coalgebra g = Coalgebra::grouplike(kQ, 2);
  Coalgebra t = tensor_coalgebra(s, g);
  EXPECT_EQ(t.dim(), 8u);
  EXPECT_TRUE(check_coalgebra(t));
  // e_i (x) f_j at i * 2 + j
  EXPECT_EQ(t.counit(), ints(kQ, {1, 1, 1, 1, 0, 0, 0, 0}));
  EXPECT_TRUE(check_coalgebra(tensor_coalgebra(s, co_opposite(s))));
}

TEST(Coalgebra, IteratedCoproduct) {
  Coalgebra s = gen_sweedler(kQ).coalgebra();
  // Delta^2(x) = x 1 1 + g x 1 + g g x
  auto terms = s.iterated(2, 3);
  EXPECT_EQ(terms.size(), 3u);
  for (const auto& t : terms) EXPECT_EQ(t.coef, Scalar(kQ, 1));
  EXPECT_EQ(s.iterated(2, 1).size(), 1u);
}

TEST(Coalgebra, GrouplikeScan) {
  Coalgebra s = gen_sweedler(kQ).coalgebra();
  GrouplikeScan scan = grouplike_scan(s);
  ASSERT_EQ(scan.grouplikes.size(), 2u);
  EXPECT_EQ(scan.grouplikes[0], ints(kQ, {1, 0, 0, 0}));
  EXPECT_EQ(scan.grouplikes[1], ints(kQ, {0, 1, 0, 0}));
  EXPECT_FALSE(scan.note.empty());
  EXPECT_FALSE(is_grouplike(s, ints(kQ, {0, 0, 1, 0})));
  EXPECT_FALSE(is_grouplike(s, ints(kQ, {1, 1, 0, 0})));
  // a candidate that is not grouplike is dropped
  GrouplikeScan with = grouplike_scan(s, {ints(kQ, {1, 0, 1, 0})});
  EXPECT_EQ(with.grouplikes.size(), 2u);
}

TEST(Coalgebra, UnitElements) {
  Coalgebra s = gen_sweedler(kQ).coalgebra();
  EXPECT_EQ(canonical_unit_element(s), ints(kQ, {1, 0, 0, 0}));
  EXPECT_EQ(unit_elements(s).size(), 2u);
  for (const auto& e : unit_elements(s)) EXPECT_EQ(s.counit_of(e), Scalar::one(kQ));
}

TEST(Coalgebra, ReductionModTwoIsMorphism) {
  HopfAlgebraData c4 = gen_group_algebra(GroupName::C4, kQ);
  HopfAlgebraData c2 = gen_group_algebra(GroupName::C2, kQ);
  Matrix f = c4_to_c2(kQ);
  EXPECT_TRUE(check_coalgebra_morphism(c4.coalgebra(), c2.coalgebra(), f));
  Matrix bad = f;
  bad(0, 0) = Scalar(kQ, 2);
  Report r = check_coalgebra_morphism(c4.coalgebra(), c2.coalgebra(), bad);
  EXPECT_FALSE(r);
  EXPECT_THROW(check_coalgebra_morphism(c2.coalgebra(), c4.coalgebra(), f), ShapeError);
}

}  // namespace
}  // namespace hopfheap
