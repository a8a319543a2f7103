#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hopfheap/galois.hpp"

namespace hopfheap {

enum class GroupName { C1, C2, C3, C4, C5, C6, V4, S3 };

std::string to_string(GroupName g);
/// Throws ParseError on an unknown name.
GroupName parse_group_name(std::string_view text);
std::vector<GroupName> all_groups();

/// A finite group by its multiplication table; mul[a][b] = ab.
struct GroupTable {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> mul;
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;
};

/// Exhaustive check of the group axioms, including the stored identity and
/// inverse table.
bool is_group(const GroupTable& g);
bool is_abelian(const GroupTable& g);

/// Hard-coded tables.  S3 lists the permutations of {0,1,2} in
/// lexicographic order, so index 0 is the identity.
GroupTable group_table(GroupName name);

/// A ternary operation on {0..size-1}; at(x,y,z) = [x,y,z].
struct FiniteHeapTable {
  std::size_t size = 0;
  std::vector<std::size_t> table;

  std::size_t at(std::size_t x, std::size_t y, std::size_t z) const {
    return table[(x * size + y) * size + z];
  }
};

/// Para-associativity and both Mal'cev identities on all tuples.
bool is_heap(const FiniteHeapTable& t);

/// [x, y, z] = x y^-1 z.
FiniteHeapTable gen_heap_from_group(const GroupTable& g);

/// Grouplike coalgebra on the points with the bracket extended linearly.
HopfHeap linearize_heap(const FiniteHeapTable& t, const FieldSpec& field);

struct TranslationGroup {
  GroupTable group;
  /// maps[g][c] = image of point c under translation g.
  std::vector<std::vector<std::size_t>> maps;
  /// generator[a * size + b] = the element c -> [c, a, b].
  std::vector<std::size_t> generator;
};

/// The distinct maps c -> [c, a, b], in order of first appearance, with the
/// product "apply g, then h".  Throws ConstructionError unless they form a
/// group acting freely and transitively.
TranslationGroup set_translation_group(const FiniteHeapTable& t);

/// Compares Tn^r of linearize_heap(t) with the group algebra of
/// set_translation_group(t): equal dimension, and the matching that sends a
/// group element to the translation realising it is a bijective unital map
/// preserving products.
Report check_oracle_bridge(const FiniteHeapTable& t, const FieldSpec& field);

/// Group algebra with grouplike basis and S(g) = g^-1.
HopfAlgebraData group_algebra(const GroupTable& g, const FieldSpec& field,
                              std::vector<std::string> labels = {});
HopfAlgebraData gen_group_algebra(GroupName name, const FieldSpec& field);

/// Basis {1, g, x, gx}: g^2 = 1, x^2 = 0, xg = -gx, Delta x = x (x) 1 + g (x) x.
/// No antipode is installed.  Throws ConstructionError in characteristic 2.
HopfAlgebraData gen_sweedler(const FieldSpec& field);

/// One tensor entry replaced.  Throws ShapeError if the slot is out of range.
Coalgebra perturb(const Coalgebra& c, const Index& slot, const Scalar& value);
HopfAlgebraData perturb(const HopfAlgebraData& h, const Index& slot, const Scalar& value);
HopfHeap perturb(const HopfHeap& h, const Index& slot, const Scalar& value);
GaloisCoObject perturb(const GaloisCoObject& g, const Index& slot, const Scalar& value);

/// A named heap of the example catalog.
struct CatalogEntry {
  std::string name;  // "C3/Q", "Sweedler/Fp:5", ...
  HopfHeap heap;
  std::optional<GroupName> group;
  /// The Hopf algebra the heap was derived from, with its antipode.
  HopfAlgebraData hopf;
};

HopfHeap group_heap(GroupName name, const FieldSpec& field);
HopfAlgebraData sweedler_hopf(const FieldSpec& field);
HopfHeap sweedler_heap(const FieldSpec& field);

/// Every group over Q and F_7, Sweedler over Q and F_5.
std::vector<CatalogEntry> heap_catalog();

/// Reduction mod 2 on grouplike bases, a Hopf map F[C4] -> F[C2].
Matrix c4_to_c2(const FieldSpec& field);

}  // namespace hopfheap
