#pragma once

#include <optional>
#include <vector>

#include "hopfheap/translations.hpp"

namespace hopfheap {

/// A coalgebra C with a right action of a bialgebra H, stored as
/// action(i, j, k) = coefficient of e_k in e_i . h_j.
struct GaloisCoObject {
  Coalgebra c;
  HopfAlgebraData h;
  Tensor action;  // (dim C, dim H, dim C)

  /// Bilinear extension of the action.
  Vector act(std::span<const Scalar> x, std::span<const Scalar> y) const;
};

/// can(e_i (x) h_j) = sum e_(i1) (x) e_(i2) . h_j as an n^2 x (n m) matrix.
/// Input column i * m + j, output row pair_index(p, q, n).
Matrix canonical_map(const GaloisCoObject& g);

/// Module laws, module coalgebra laws, then condition (a) (the action span
/// of c.h - c epsilon(h) is ker epsilon) and condition (b) (can bijective).
/// Throws ShapeError if the tensors do not conform.
Report check_galois(const GaloisCoObject& g);

/// tau = (epsilon (x) id) o can^-1.  values has tau(e_i (x) e_j) as column
/// pair_index(i, j, n).
struct CotranslationTable {
  Matrix can_inverse;  // (n m) x n^2
  Matrix values;       // m x n^2

  Vector tau(std::size_t i, std::size_t j) const;
  Vector tau(std::span<const Scalar> a, std::span<const Scalar> b) const;
};

/// Throws ConstructionError when can is not invertible.
CotranslationTable cotranslation(const GaloisCoObject& g);

/// The seven cotranslation identities on all basis tuples:
///   counit          epsilon(tau(a (x) b)) = epsilon(a) epsilon(b)
///   unit-sum        sum tau(a1 (x) a2) = epsilon(a) 1
///   right-linearity tau(a (x) b.h) = tau(a (x) b) h
///   reconstruction  sum a1 . tau(a2 (x) b) = epsilon(a) b
///   coproduct       Delta tau(a (x) b) = sum tau(a2 (x) b1) (x) tau(a1 (x) b2)
///   absorb          tau(a . tau(b (x) c) (x) d) = S tau(b (x) c) tau(a (x) d)
///   twist           sum tau(b (x) c1) S tau(c3 (x) c2) = S tau(c (x) b)
/// When H carries no antipode, the one from antipode_from_galois is used.
Report check_cotranslation_props(const GaloisCoObject& g, const CotranslationTable& t);

/// S(h) = sum tau(e1 . h (x) e2) for the canonical unit element e.  The result
/// is verified two-sided and compared with solve_antipode; a disagreement is
/// a VerificationError.
Matrix antipode_from_galois(const GaloisCoObject& g);
/// Same formula with a caller-chosen e (epsilon(e) = 1), without the
/// comparison.
Matrix antipode_from_galois(const GaloisCoObject& g, const CotranslationTable& t,
                            std::span<const Scalar> e);

/// g with its acting bialgebra completed by antipode_from_galois if needed.
GaloisCoObject with_galois_antipode(const GaloisCoObject& g);

/// The Hopf algebra (C (x) C^co) / I, where I is spanned by
///   a (x) b epsilon(c) - sum a . tau(b (x) c1) (x) c2.
/// Classes multiply as [a (x) b][c (x) d] = [a . tau(b (x) c) (x) d], the
/// unit is [sum e1 (x) e2] and S[a (x) b] = [sum e1 (x) a . tau(b (x) e2)].
struct EhresmannHopf {
  Coalgebra ambient;       // tensor_coalgebra(C, co_opposite(C))
  SubspaceBasis coideal;   // I
  QuotientData quotient;
  HopfAlgebraData hopf;    // on the complement basis of the quotient
};

/// Verifies that I is a coideal, that the product, unit and antipode do not
/// depend on representatives (exhaustively over a basis of I) or on the
/// choice of e, and that the result is a Hopf algebra.
EhresmannHopf ehresmann_hopf(const GaloisCoObject& g);

/// [a (x) b] -> sigma^a_b into the left translations of the same heap,
/// verified well defined and a Hopf isomorphism.
Matrix ehresmann_iso_left_translations(const EhresmannHopf& e, const TranslationAlgebra& left);

struct HeapWithGrunspan {
  HopfHeap heap;
  Matrix theta;
};

/// [a, b, c] = a . tau(b (x) c) with theta(c) = sum c1 . S tau(c3 (x) c2).
/// The heap and theta are verified, and theta must equal grunspan_map.
HeapWithGrunspan heap_from_galois(const GaloisCoObject& g);

/// (C, Tn^r C) with the evaluation action c . tau_a^b = [c, a, b].  Verified
/// with check_galois; can^-1 must match a (x) b -> sum a1 (x) tau_{a2}^b.
GaloisCoObject galois_from_heap(const HopfHeap& h);
GaloisCoObject galois_from_translations(const TranslationAlgebra& right);

/// H acting on its own coalgebra by right multiplication.
GaloisCoObject regular_galois(const HopfAlgebraData& h);

struct PhiIso {
  TranslationAlgebra translations;  // Tn^r of heap_from_galois(g)
  Matrix forward;                   // Tn^r C -> H, tau_a^b -> tau(a (x) b)
  Matrix inverse;                   // H -> Tn^r C, h -> tau_{e1}^{e2 . h}
};

/// Builds and verifies the isomorphism, including c . t = c . forward(t).
PhiIso phi_iso(const GaloisCoObject& g);

/// fc: C -> D a coalgebra map, gh: H -> K a Hopf map, fc(c . h) = fc(c) . gh(h),
/// and tau_D o (fc (x) fc) = gh o tau_C.
Report check_galois_morphism(const Matrix& fc, const Matrix& gh, const GaloisCoObject& source,
                             const GaloisCoObject& target);

/// g o phi_source = phi_target o Tn^r f for a Galois morphism (fc, gh).
Report check_phi_naturality(const Matrix& fc, const Matrix& gh, const GaloisCoObject& source,
                            const GaloisCoObject& target);

/// The round trip of a heap through its Galois co-object: the recovered
/// bracket equals the original, phi_iso verifies, the left and right
/// translation actions commute, and every supplied heap morphism (with
/// source h) gives a Galois morphism whose naturality square commutes.
Report roundtrip_check(const HopfHeap& h, const std::vector<HeapMorphism>& morphisms = {});

}  // namespace hopfheap
