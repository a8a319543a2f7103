#include "hopfheap/translations.hpp"

#include "gtest/gtest.h"

#include "hopfheap/catalog.hpp"
#include "hopfheap/errors.hpp"
#include "test_support.hpp"

namespace hopfheap {
namespace {

using testing::ints;
using testing::kQ;

class CatalogTranslations : public ::testing::TestWithParam<std::size_t> {
 protected:
  static const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = heap_catalog();
    return c;
  }
  const CatalogEntry& entry() const { return catalog()[GetParam()]; }
};

TEST_P(CatalogTranslations, DimensionAndGenerators) {
  const HopfHeap& h = entry().heap;
  std::size_t n = h.dim();
  for (Side side : {Side::Right, Side::Left}) {
    TranslationAlgebra t = build_translations(h, side);
    EXPECT_EQ(t.dim(), n);
    EXPECT_TRUE(check_bialgebra(t.hopf));
    EXPECT_TRUE(check_antipode(t.hopf, *t.hopf.antipode()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vector ek = unit_vector(h.field(), n, k);
          Vector got = t.act(t.coords(i, j), ek);
          Vector want = side == Side::Right
                            ? h.bracket(ek, unit_vector(h.field(), n, i), unit_vector(h.field(), n, j))
                            : h.bracket(unit_vector(h.field(), n, i), unit_vector(h.field(), n, j), ek);
          ASSERT_EQ(got, want) << to_string(side) << " generator (" << i << "," << j << ") on " << k;
        }
  }
}

TEST_P(CatalogTranslations, AntipodeFormulasAgree) {
  const HopfHeap& h = entry().heap;
  for (Side side : {Side::Right, Side::Left}) {
    TranslationAlgebra t = build_translations(h, side);
    Matrix from_theta = translation_antipode_from_grunspan(t);
    EXPECT_EQ(from_theta, *t.hopf.antipode());
    for (const auto& e : unit_elements(h.coalgebra()))
      EXPECT_EQ(translation_antipode_with_unit_element(t, e), from_theta);
  }
}

TEST_P(CatalogTranslations, GrouplikeIsomorphisms) {
  const HopfHeap& h = entry().heap;
  for (Side side : {Side::Right, Side::Left}) {
    TranslationAlgebra t = build_translations(h, side);
    for (const auto& x : grouplike_scan(h.coalgebra()).grouplikes) {
      GrouplikeIso iso = grouplike_iso(t, x);
      EXPECT_TRUE((iso.forward * iso.inverse).is_identity());
      EXPECT_TRUE((iso.inverse * iso.forward).is_identity());
      EXPECT_TRUE(check_hopf_morphism(iso.forward, hopf_at_grouplike(h, x), t.hopf));
    }
  }
}

TEST_P(CatalogTranslations, Identities) {
  const HopfHeap& h = entry().heap;
  EXPECT_TRUE(check_translation_identities(h, grunspan_map(h)));
}

TEST_P(CatalogTranslations, AbelianSwap) {
  const CatalogEntry& e = entry();
  AbelianSwapReport r = abelian_swap_check(e.heap);
  bool abelian = e.group && is_abelian(group_table(*e.group));
  EXPECT_EQ(r.is_abelian_heap, abelian);
  EXPECT_EQ(r.swap_is_antialgebra_map, abelian);
  EXPECT_EQ(static_cast<bool>(r.detail), abelian);
}

INSTANTIATE_TEST_SUITE_P(Catalog, CatalogTranslations,
                         ::testing::Range<std::size_t>(0, heap_catalog().size()));

TEST(Translations, WrongThetaBreaksIdentities) {
  HopfHeap h = sweedler_heap(kQ);
  Report r = check_translation_identities(h, Matrix::identity(kQ, 4));
  EXPECT_FALSE(r);
}

TEST(Translations, DescendRejectsIllDefinedAssignment) {
  // on C2, tau_0^0 = tau_1^1 = id, so sending only one of them to 1 is not
  // well defined
  HopfHeap h = group_heap(GroupName::C2, kQ);
  TranslationAlgebra t = build_right_translations(h);
  EXPECT_GT(t.relations.dim(), 0u);
  Matrix values(kQ, 1, 4);
  values(0, pair_index(0, 0, 2)) = Scalar::one(kQ);
  EXPECT_THROW(t.descend(values, "test map"), ConstructionError);
  values(0, pair_index(1, 1, 2)) = Scalar::one(kQ);
  Matrix ok = t.descend(values, "test map");
  EXPECT_EQ(ok.rows(), 1u);
  EXPECT_EQ(ok.cols(), 2u);
}

TEST(Translations, SweedlerRelations) {
  // 16 generators span a 4-dimensional algebra
  TranslationAlgebra t = build_right_translations(sweedler_heap(kQ));
  EXPECT_EQ(t.dim(), 4u);
  EXPECT_EQ(t.relations.dim(), 12u);
  EXPECT_EQ(t.generator_coords.rows(), 4u);
  EXPECT_EQ(t.generator_coords.cols(), 16u);
}

TEST(Translations, InducedMorphismCommutesWithGrouplikeIsos) {
  HopfHeap c4 = group_heap(GroupName::C4, kQ);
  HopfHeap c2 = group_heap(GroupName::C2, kQ);
  Matrix f = c4_to_c2(kQ);
  for (Side side : {Side::Right, Side::Left}) {
    TranslationAlgebra s = build_translations(c4, side);
    TranslationAlgebra t = build_translations(c2, side);
    Matrix tf = induced_morphism({c4, c2, f}, s, t);
    EXPECT_TRUE(check_hopf_morphism(tf, s.hopf, t.hopf));
    GrouplikeIso is = grouplike_iso(s, ints(kQ, {1, 0, 0, 0}));
    GrouplikeIso it = grouplike_iso(t, ints(kQ, {1, 0}));
    EXPECT_EQ(tf * is.forward, it.forward * f);
  }
  TranslationAlgebra r = build_right_translations(c4);
  TranslationAlgebra l = build_left_translations(c2);
  EXPECT_THROW(induced_morphism({c4, c2, f}, r, l), ShapeError);
}

TEST(Translations, SideNames) {
  EXPECT_EQ(to_string(Side::Right), "right");
  EXPECT_EQ(to_string(Side::Left), "left");
}

}  // namespace
}  // namespace hopfheap
