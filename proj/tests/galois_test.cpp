#include "hopfheap/galois.hpp"

#include "gtest/gtest.h"

#include "hopfheap/catalog.hpp"
#include "hopfheap/errors.hpp"
#include "test_support.hpp"

namespace hopfheap {
namespace {

using testing::ints;
using testing::kF7;
using testing::kQ;

// H acts on C by c . h = c epsilon(h)
GaloisCoObject trivial_action(const Coalgebra& c, const HopfAlgebraData& h) {
  Tensor action(c.field(), {c.dim(), h.dim(), c.dim()});
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j) action(i, j, i) = h.coalgebra().counit()[j];
  return {c, h, action};
}

// F[C4] acting on the points of C2 through reduction mod 2
GaloisCoObject c4_on_c2(const FieldSpec& f) {
  Tensor action(f, {2, 4, 2});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 4; ++j) action(i, j, (i + j) % 2) = Scalar::one(f);
  return {Coalgebra::grouplike(f, 2), gen_group_algebra(GroupName::C4, f), action};
}

TEST(Galois, RegularObjects) {
  for (GroupName g : {GroupName::C1, GroupName::C2, GroupName::C3, GroupName::S3})
    EXPECT_TRUE(check_galois(regular_galois(gen_group_algebra(g, kQ)))) << to_string(g);
  EXPECT_TRUE(check_galois(regular_galois(sweedler_hopf(kF7))));
}

TEST(Galois, TrivialActionFailsConditionA) {
  HopfAlgebraData h = gen_group_algebra(GroupName::C2, kQ);
  Report r = check_galois(trivial_action(h.coalgebra(), h));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.axiom, "condition-a");
  // on a one-point coalgebra ker epsilon is zero, so only bijectivity fails
  GaloisCoObject one = trivial_action(Coalgebra::grouplike(kQ, 1), h);
  r = check_galois(one);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.axiom, "condition-b");
}

TEST(Galois, DimensionMismatchFailsConditionB) {
  GaloisCoObject g = c4_on_c2(kQ);
  Report r = check_galois(g);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.axiom, "condition-b");
  EXPECT_NE(r.detail.find("differs"), std::string::npos);
  EXPECT_THROW(cotranslation(g), ConstructionError);
  EXPECT_EQ(canonical_map(g).rows(), 4u);
  EXPECT_EQ(canonical_map(g).cols(), 8u);
}

TEST(Galois, PerturbedActionFails) {
  GaloisCoObject g = regular_galois(gen_group_algebra(GroupName::C3, kQ));
  GaloisCoObject bad = perturb(g, {0, 0, 0}, g.action(0, 0, 0) + Scalar::one(kQ));
  Report r = check_galois(bad);
  ASSERT_FALSE(r);
  EXPECT_EQ(r.axiom, "module-unit");
  EXPECT_THROW(perturb(g, {3, 0, 0}, Scalar::one(kQ)), ShapeError);
}

TEST(Galois, ActionShapeChecked) {
  GaloisCoObject g = regular_galois(gen_group_algebra(GroupName::C3, kQ));
  g.action = Tensor(kQ, {3, 2, 3});
  EXPECT_THROW(check_galois(g), ShapeError);
}

TEST(Cotranslation, GroupAlgebraIsLeftDivision) {
  // tau(a (x) b) = a^-1 b
  GroupName name = GroupName::S3;
  GroupTable t = group_table(name);
  CotranslationTable ct = cotranslation(regular_galois(gen_group_algebra(name, kQ)));
  for (std::size_t a = 0; a < t.size; ++a)
    for (std::size_t b = 0; b < t.size; ++b)
      EXPECT_EQ(ct.tau(a, b), unit_vector(kQ, t.size, t.mul[t.inverse[a]][b]));
}

TEST(Cotranslation, EqualsTranslationCoordinates) {
  for (const auto& entry : heap_catalog()) {
    SCOPED_TRACE(entry.name);
    TranslationAlgebra right = build_right_translations(entry.heap);
    GaloisCoObject g = galois_from_translations(right);
    EXPECT_TRUE(check_galois(g));
    CotranslationTable ct = cotranslation(g);
    std::size_t n = entry.heap.dim();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) ASSERT_EQ(ct.tau(a, b), right.coords(a, b));
    EXPECT_TRUE(check_cotranslation_props(g, ct));
    EXPECT_EQ(rank(canonical_map(g)), n * n);
  }
}

TEST(Cotranslation, BilinearExtension) {
  GaloisCoObject g = regular_galois(sweedler_hopf(kQ));
  CotranslationTable ct = cotranslation(g);
  Vector a = ints(kQ, {1, 0, 2, 0}), b = ints(kQ, {0, 3, 0, -1});
  Vector want = zero_vector(kQ, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) axpy(want, a[i] * b[j], ct.tau(i, j));
  EXPECT_EQ(ct.tau(a, b), want);
  EXPECT_THROW(ct.tau(a, ints(kQ, {1, 0})), ShapeError);
}

TEST(AntipodeFromGalois, BialgebraOnly) {
  HopfAlgebraData bare = gen_sweedler(kQ);
  GaloisCoObject g = regular_galois(bare);
  EXPECT_TRUE(check_galois(g));
  Matrix s = antipode_from_galois(g);
  EXPECT_EQ(s, *solve_antipode(bare));
  EXPECT_EQ(with_galois_antipode(g).h.antipode(), s);
  CotranslationTable ct = cotranslation(g);
  for (const auto& e : unit_elements(g.c)) EXPECT_EQ(antipode_from_galois(g, ct, e), s);
  EXPECT_TRUE(check_cotranslation_props(g, ct));
}

TEST(Ehresmann, DimensionsAndIso) {
  struct Case {
    HopfHeap heap;
    std::size_t dim;
  };
  std::vector<Case> cases = {{group_heap(GroupName::C2, kQ), 2},
                             {group_heap(GroupName::S3, kQ), 6},
                             {sweedler_heap(kQ), 4}};
  for (const auto& c : cases) {
    EhresmannHopf e = ehresmann_hopf(galois_from_heap(c.heap));
    EXPECT_EQ(e.hopf.dim(), c.dim);
    EXPECT_EQ(e.ambient.dim(), c.dim * c.dim);
    EXPECT_EQ(e.coideal.dim(), c.dim * c.dim - c.dim);
    EXPECT_TRUE(check_bialgebra(e.hopf));
    EXPECT_TRUE(check_antipode(e.hopf, *e.hopf.antipode()));
    TranslationAlgebra left = build_left_translations(c.heap);
    Matrix iso = ehresmann_iso_left_translations(e, left);
    EXPECT_TRUE(check_hopf_morphism(iso, e.hopf, left.hopf));
    EXPECT_TRUE(inverse(iso).has_value());
  }
}

TEST(Ehresmann, S3IsNoncommutative) {
  EhresmannHopf e = ehresmann_hopf(galois_from_heap(group_heap(GroupName::S3, kQ)));
  bool commutative = true;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      if (e.hopf.multiply(unit_vector(kQ, 6, i), unit_vector(kQ, 6, j)) !=
          e.hopf.multiply(unit_vector(kQ, 6, j), unit_vector(kQ, 6, i)))
        commutative = false;
  EXPECT_FALSE(commutative);
}

TEST(HeapFromGalois, RecoversBracketAndTheta) {
  for (const auto& entry : heap_catalog()) {
    SCOPED_TRACE(entry.name);
    HeapWithGrunspan back = heap_from_galois(galois_from_heap(entry.heap));
    EXPECT_EQ(back.heap.chi(), entry.heap.chi());
    EXPECT_EQ(back.theta, grunspan_map(entry.heap));
  }
  HopfAlgebraData s = sweedler_hopf(kQ);
  HeapWithGrunspan from_regular = heap_from_galois(regular_galois(s));
  EXPECT_EQ(from_regular.theta, *s.antipode() * *s.antipode());
  EXPECT_EQ(from_regular.heap.chi(), sweedler_heap(kQ).chi());
}

TEST(PhiIso, RegularGroupAlgebra) {
  PhiIso p = phi_iso(regular_galois(gen_group_algebra(GroupName::C3, kQ)));
  EXPECT_TRUE((p.forward * p.inverse).is_identity());
  EXPECT_TRUE((p.inverse * p.forward).is_identity());
  EXPECT_EQ(p.translations.dim(), 3u);
}

TEST(PhiIso, Sweedler) {
  HopfAlgebraData s = sweedler_hopf(FieldSpec::prime(5));
  PhiIso p = phi_iso(regular_galois(s));
  EXPECT_TRUE(check_hopf_morphism(p.forward, p.translations.hopf, s));
}

TEST(GaloisMorphism, IdentityAndReduction) {
  HopfAlgebraData c4 = gen_group_algebra(GroupName::C4, kQ);
  HopfAlgebraData c2 = gen_group_algebra(GroupName::C2, kQ);
  GaloisCoObject g4 = regular_galois(c4), g2 = regular_galois(c2);
  Matrix id = Matrix::identity(kQ, 4);
  EXPECT_TRUE(check_galois_morphism(id, id, g4, g4));
  Matrix f = c4_to_c2(kQ);
  EXPECT_TRUE(check_galois_morphism(f, f, g4, g2));
  EXPECT_TRUE(check_phi_naturality(f, f, g4, g2));
  EXPECT_TRUE(check_phi_naturality(id, id, g4, g4));
}

TEST(GaloisMorphism, CollapsedHopfMapFailsActionCompatibility) {
  HopfAlgebraData c4 = gen_group_algebra(GroupName::C4, kQ);
  HopfAlgebraData c2 = gen_group_algebra(GroupName::C2, kQ);
  Matrix collapse(kQ, 2, 4);
  for (std::size_t k = 0; k < 4; ++k) collapse(0, k) = Scalar::one(kQ);
  ASSERT_TRUE(check_hopf_morphism(collapse, c4, c2));
  Report r = check_galois_morphism(c4_to_c2(kQ), collapse, regular_galois(c4), regular_galois(c2));
  ASSERT_FALSE(r);
  EXPECT_EQ(r.axiom, "action-compatibility");
}

TEST(Roundtrip, CatalogSamples) {
  EXPECT_TRUE(roundtrip_check(group_heap(GroupName::C1, kQ)));
  EXPECT_TRUE(roundtrip_check(group_heap(GroupName::C3, kF7)));
  EXPECT_TRUE(roundtrip_check(sweedler_heap(kQ)));
  HopfHeap c4 = group_heap(GroupName::C4, kQ);
  HopfHeap c2 = group_heap(GroupName::C2, kQ);
  Report r = roundtrip_check(c4, {HeapMorphism{c4, c2, c4_to_c2(kQ)}});
  EXPECT_TRUE(r) << r.summary();
}

TEST(Roundtrip, BadMorphismIsReported) {
  HopfHeap c4 = group_heap(GroupName::C4, kQ);
  Matrix swap = Matrix::identity(kQ, 4);
  swap(0, 0) = swap(1, 1) = Scalar::zero(kQ);
  swap(0, 1) = swap(1, 0) = Scalar::one(kQ);
  Report r = roundtrip_check(c4, {HeapMorphism{c4, c4, swap}});
  EXPECT_FALSE(r);
  EXPECT_EQ(r.axiom, "bracket-preservation");
}

}  // namespace
}  // namespace hopfheap
