#pragma once

#include <optional>

#include "hopfheap/coalgebra.hpp"

namespace hopfheap {

/// A bialgebra, optionally with an antipode, by structure constants:
/// mult(i, j, k) is the coefficient of e_k in e_i e_j.  The antipode matrix
/// has S(e_c) as its column c.
class HopfAlgebraData {
 public:
  HopfAlgebraData(Coalgebra coalgebra, Tensor mult, Vector unit,
                  std::optional<Matrix> antipode = std::nullopt);

  const Coalgebra& coalgebra() const { return coalgebra_; }
  const FieldSpec& field() const { return coalgebra_.field(); }
  std::size_t dim() const { return coalgebra_.dim(); }
  const Tensor& mult() const { return mult_; }
  const Vector& unit() const { return unit_; }
  const std::optional<Matrix>& antipode() const { return antipode_; }

  /// Nonzero coordinates of e_i e_j.
  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i * dim() + j]; }
  Vector multiply(std::span<const Scalar> a, std::span<const Scalar> b) const;

  HopfAlgebraData with_antipode(Matrix antipode) const;

  friend bool operator==(const HopfAlgebraData& a, const HopfAlgebraData& b) {
    return a.coalgebra_ == b.coalgebra_ && a.mult_ == b.mult_ && a.unit_ == b.unit_ &&
           a.antipode_ == b.antipode_;
  }

 private:
  Coalgebra coalgebra_;
  Tensor mult_;
  Vector unit_;
  std::optional<Matrix> antipode_;
  std::vector<SparseVector> products_;
};

/// Coalgebra axioms, associativity, unit, then compatibility of Delta and
/// epsilon with the product and the unit.
Report check_bialgebra(const HopfAlgebraData& h);

/// Both convolution identities S * id = eta epsilon = id * S on basis vectors.
Report check_antipode(const HopfAlgebraData& h, const Matrix& s);

/// Solves S(h_(1)) h_(2) = epsilon(h) 1 as one linear system in the n^2
/// entries of S, then verifies the right-hand identity.  nullopt means no
/// antipode exists.
std::optional<Matrix> solve_antipode(const HopfAlgebraData& h);

/// h with its antipode replaced by solve_antipode(h); throws
/// ConstructionError if there is none.
HopfAlgebraData with_solved_antipode(const HopfAlgebraData& h);

/// Coalgebra map, unital, multiplicative, and S_t f = f S_s when both
/// antipodes are present.
Report check_hopf_morphism(const Matrix& f, const HopfAlgebraData& source,
                           const HopfAlgebraData& target);

}  // namespace hopfheap
