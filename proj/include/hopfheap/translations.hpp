#pragma once

#include "hopfheap/hopf_heap.hpp"

namespace hopfheap {

enum class Side { Right, Left };

std::string to_string(Side side);

/// The right (or left) translation Hopf algebra of a Hopf heap, realised as a
/// subspace of End(C).
///
/// Endomorphisms are flattened row-major: entry pair_index(l, k, n) is the
/// coefficient of e_l in T(e_k).  The generators are indexed by (i, j) at
/// pair_index(i, j, n):
///   right: tau_i^j (e_k)  = [e_k, e_i, e_j]
///   left:  sigma^i_j(e_k) = [e_i, e_j, e_k]
/// The abstract basis is the RREF basis of their span.  Products follow the
/// side: p q = "apply p, then q" on the right, p q = p o q on the left.
struct TranslationAlgebra {
  Side side;
  HopfHeap heap;
  Matrix theta;                 // Grunspan map of the heap
  SubspaceBasis basis;          // inside the n^2-dimensional End(C)
  HopfAlgebraData hopf;         // on the abstract basis
  Matrix generator_coords;      // dim x n^2, column (i, j) = coordinates of the generator
  Matrix basis_preimages;       // n^2 x dim, generator combination giving each basis element
  SubspaceBasis relations;      // linear relations among the generators
  Tensor action;                // (n, dim, n): coefficient of e_l in b_p(e_c) at (c, p, l)

  std::size_t dim() const { return basis.dim(); }
  Vector coords(std::size_t i, std::size_t j) const;
  /// b_p as an n x n matrix acting on coordinate columns.
  Matrix endomorphism(std::size_t p) const;
  /// Evaluation of an abstract element on a vector of C.
  Vector act(std::span<const Scalar> element, std::span<const Scalar> c) const;

  /// Pushes a generator-level linear assignment (one column per generator)
  /// down to the abstract basis, after checking that every generator relation
  /// is sent to zero.  Throws ConstructionError naming the relation otherwise.
  Matrix descend(const Matrix& generator_values, const std::string& what) const;
};

/// Builds the right translation Hopf algebra.  Counit, coproduct and both
/// antipode formulas are assigned on generators and verified well defined;
/// the two antipode formulas must agree (VerificationError otherwise).
TranslationAlgebra build_right_translations(const HopfHeap& h);
/// Mirror image of build_right_translations with sigma^a_b(c) = [a,b,c].
TranslationAlgebra build_left_translations(const HopfHeap& h);
TranslationAlgebra build_translations(const HopfHeap& h, Side side);

/// Antipode of the translation algebra from
///   right: S(tau_a^b)  = sum tau_{[e1,a,b]}^{e2}
///   left:  S(sigma^a_b) = sum sigma^{e1}_{[a,b,e2]}
/// for a given element e with epsilon(e) = 1.
Matrix translation_antipode_with_unit_element(const TranslationAlgebra& t,
                                              std::span<const Scalar> e);
/// Antipode from S(tau_a^b) = tau_b^{theta(a)} (right) or
/// S(sigma^a_b) = sigma^{theta(b)}_a (left).
Matrix translation_antipode_from_grunspan(const TranslationAlgebra& t);

struct GrouplikeIso {
  Matrix forward;  // H_x(C) -> translation algebra
  Matrix inverse;  // translation algebra -> H_x(C)
};

/// a -> tau_x^a with inverse tau_a^b -> [x,a,b] (right side), or
/// a -> sigma^a_x with inverse sigma^a_b -> [a,b,x] (left side).  Verified as
/// mutually inverse Hopf algebra maps; throws VerificationError otherwise.
GrouplikeIso grouplike_iso(const TranslationAlgebra& t, std::span<const Scalar> x);

/// Tn f on the abstract bases: generator (a,b) -> generator (f(a), f(b)).
/// Verified well defined and a Hopf algebra map.
Matrix induced_morphism(const HeapMorphism& f, const TranslationAlgebra& source,
                        const TranslationAlgebra& target);

struct AbelianSwapReport {
  bool is_abelian_heap = false;
  bool swap_is_antialgebra_map = false;
  /// Why the swap failed, or a success report.
  Report detail;
};

/// Whether [a,b,c] = [c,b,a], and whether sigma^a_b -> tau_b^a is a well
/// defined unital map Tn^l C -> Tn^r C reversing products.
AbelianSwapReport abelian_swap_check(const TranslationAlgebra& left,
                                     const TranslationAlgebra& right);
AbelianSwapReport abelian_swap_check(const HopfHeap& h);

/// The seven identities satisfied by right translations, evaluated as
/// endomorphism equations on all basis inputs:
///   coproduct          Delta(tau_a^b(c)) = sum tau_{a2}^{b1}(c1) (x) tau_{a1}^{b2}(c2)
///   absorb             sum tau_{a1}^{[a2,b,c]} = epsilon(a) tau_b^c
///   unit-sum           sum tau_{a1}^{a2} = epsilon(a) id
///   composition        tau_c^d o tau_a^b = tau_a^{[b,c,d]}
///   absorb-theta       sum tau_{a2}^{[theta(a1),b,c]} = epsilon(a) tau_b^c
///   unit-sum-theta     sum tau_{a2}^{theta(a1)} = epsilon(a) id
///   composition-theta  tau_c^d o tau_a^{theta(b)} = tau_{[c,b,a]}^d
Report check_translation_identities(const HopfHeap& h, const Matrix& theta);

}  // namespace hopfheap
