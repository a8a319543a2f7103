#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hopfheap/linalg.hpp"
#include "hopfheap/tensor.hpp"

namespace hopfheap {

/// One summand c_(1) (x) c_(2) of a coproduct of a basis vector.
struct CoTerm {
  std::size_t left;
  std::size_t right;
  Scalar coef;
};

/// One summand of an iterated coproduct c_(1) (x) ... (x) c_(k).
struct MultiTerm {
  Index legs;
  Scalar coef;
};

/// A finite-dimensional coalgebra given by structure constants:
/// comul(i, j, k) is the coefficient of e_j (x) e_k in Delta(e_i) and
/// counit[i] = epsilon(e_i).  The constructor only checks shapes; the axioms
/// are verified by check_coalgebra.
class Coalgebra {
 public:
  Coalgebra(const FieldSpec& field, Tensor comul, Vector counit,
            std::vector<std::string> labels = {});

  /// The coalgebra of a finite set: every basis vector grouplike.
  static Coalgebra grouplike(const FieldSpec& field, std::size_t n);

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Tensor& comul() const { return comul_; }
  const Vector& counit() const { return counit_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Basis label, falling back to "e<i>".
  std::string label(std::size_t i) const;

  /// Nonzero summands of Delta(e_i).
  const std::vector<CoTerm>& terms(std::size_t i) const { return terms_[i]; }
  /// (legs-1)-fold iterated coproduct of e_i, duplicates merged; legs >= 1.
  std::vector<MultiTerm> iterated(std::size_t i, std::size_t legs) const;

  Scalar counit_of(std::span<const Scalar> v) const;
  /// Delta(v) as a vector in the n*n space, flat index pair_index(j, k, n).
  Vector coproduct(std::span<const Scalar> v) const;
  /// Delta as an (n*n) x n matrix.
  Matrix coproduct_matrix() const;

  friend bool operator==(const Coalgebra& a, const Coalgebra& b) {
    return a.field_ == b.field_ && a.comul_ == b.comul_ && a.counit_ == b.counit_;
  }

 private:
  FieldSpec field_;
  std::size_t dim_;
  Tensor comul_;
  Vector counit_;
  std::vector<std::string> labels_;
  std::vector<std::vector<CoTerm>> terms_;
};

/// Coassociativity, then the two counit laws.
Report check_coalgebra(const Coalgebra& c);

/// Comultiplication c -> c_(2) (x) c_(1).
Coalgebra co_opposite(const Coalgebra& c);

/// a (x) b with basis e_i (x) f_j at flat index i * dim_b + j.
Coalgebra tensor_coalgebra(const Coalgebra& a, const Coalgebra& b);

bool is_grouplike(const Coalgebra& c, std::span<const Scalar> v);

struct GrouplikeScan {
  std::vector<Vector> grouplikes;
  /// States that only basis vectors and supplied candidates were tried.
  std::string note;
};

/// Finds grouplikes among the basis vectors and the counit-normalised
/// candidates.  This is not a full solve of Delta(v) = v (x) v.
GrouplikeScan grouplike_scan(const Coalgebra& c, const std::vector<Vector>& candidates = {});

/// The first basis vector with nonzero counit, rescaled to counit 1.
Vector canonical_unit_element(const Coalgebra& c);
/// Every basis vector with nonzero counit, rescaled to counit 1.
std::vector<Vector> unit_elements(const Coalgebra& c);

struct CoalgebraMorphism {
  Coalgebra source;
  Coalgebra target;
  Matrix matrix;  // dim target x dim source
};

Report check_coalgebra_morphism(const Coalgebra& source, const Coalgebra& target,
                                const Matrix& f);
inline Report check_coalgebra_morphism(const CoalgebraMorphism& f) {
  return check_coalgebra_morphism(f.source, f.target, f.matrix);
}

}  // namespace hopfheap
