#pragma once

#include "hopfheap/hopf_algebra.hpp"

namespace hopfheap {

/// A coalgebra C with a ternary operation [-,-,-] : C (x) C^co (x) C -> C,
/// stored as chi(i, j, k, l) = coefficient of e_l in [e_i, e_j, e_k].
class HopfHeap {
 public:
  HopfHeap(Coalgebra coalgebra, Tensor chi);

  const Coalgebra& coalgebra() const { return coalgebra_; }
  const FieldSpec& field() const { return coalgebra_.field(); }
  std::size_t dim() const { return coalgebra_.dim(); }
  const Tensor& chi() const { return chi_; }

  /// Nonzero coordinates of [e_i, e_j, e_k].
  const SparseVector& bracket(std::size_t i, std::size_t j, std::size_t k) const {
    return brackets_[(i * dim() + j) * dim() + k];
  }
  /// Trilinear extension to arbitrary vectors.
  Vector bracket(std::span<const Scalar> a, std::span<const Scalar> b,
                 std::span<const Scalar> c) const;

  friend bool operator==(const HopfHeap& a, const HopfHeap& b) {
    return a.coalgebra_ == b.coalgebra_ && a.chi_ == b.chi_;
  }

 private:
  Coalgebra coalgebra_;
  Tensor chi_;
  std::vector<SparseVector> brackets_;
};

/// Checks, in order: the coalgebra axioms, chi counital, chi comultiplicative
/// with the middle slot co-opposite, the two Mal'cev laws, associativity.
Report check_hopf_heap(const HopfHeap& h);

/// c -> sum [c_(1), [c_(4), c_(3), c_(2)], c_(5)].
Matrix grunspan_five_fold(const HopfHeap& h);
/// c -> sum [c_(1), [e_(1), c_(3), c_(2)], e_(2)] for an element e with
/// epsilon(e) = 1.
Matrix grunspan_with_unit_element(const HopfHeap& h, std::span<const Scalar> e);

/// The Grunspan map by the five-fold formula, cross-checked against the
/// unit-element formula with the canonical e.  Throws VerificationError if
/// the two disagree.
Matrix grunspan_map(const HopfHeap& h);

/// theta is a coalgebra endomorphism and [[a,b,theta(c)],d,e] = [a,[d,c,b],e]
/// on all basis 5-tuples.
Report check_grunspan(const HopfHeap& h, const Matrix& theta);

/// [a, b, c] = a S(b) c.  Throws ConstructionError without an antipode.
HopfHeap heap_from_hopf(const HopfAlgebraData& h);

/// The Hopf algebra H_x(C): ab = [a, x, b], unit x, S(a) = [x, a, x].
/// Throws ConstructionError unless x is grouplike.
HopfAlgebraData hopf_at_grouplike(const HopfHeap& h, std::span<const Scalar> x);

struct HeapMorphism {
  HopfHeap source;
  HopfHeap target;
  Matrix map;  // dim target x dim source
};

/// Coalgebra map, f([a,b,c]) = [f(a),f(b),f(c)], and f theta_s = theta_t f.
Report check_heap_morphism(const HeapMorphism& m, const Matrix& theta_source,
                           const Matrix& theta_target);

}  // namespace hopfheap
