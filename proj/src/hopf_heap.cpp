#include "hopfheap/hopf_heap.hpp"

#include "hopfheap/errors.hpp"

namespace hopfheap {

HopfHeap::HopfHeap(Coalgebra coalgebra, Tensor chi)
    : coalgebra_(std::move(coalgebra)), chi_(std::move(chi)) {
  std::size_t n = coalgebra_.dim();
  if (chi_.shape() != std::vector<std::size_t>{n, n, n, n}) {
    throw ShapeError("heap tensor must have shape n x n x n x n with n = " + std::to_string(n));
  }
  if (!(chi_.field() == coalgebra_.field())) throw FieldMismatchError("heap tensor field");
  brackets_.resize(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto& out = brackets_[(i * n + j) * n + k];
        auto fiber = chi_.fiber({i, j, k});
        for (std::size_t l = 0; l < n; ++l)
          if (!fiber[l].is_zero()) out.push_back({l, fiber[l]});
      }
}

Vector HopfHeap::bracket(std::span<const Scalar> a, std::span<const Scalar> b,
                         std::span<const Scalar> c) const {
  std::size_t n = dim();
  if (a.size() != n || b.size() != n || c.size() != n) {
    throw ShapeError("bracket: vector length differs from dimension");
  }
  Vector out = zero_vector(field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (c[k].is_zero()) continue;
        Scalar abc = ab * c[k];
        for (const auto& t : bracket(i, j, k)) out[t.index] += abc * t.coef;
      }
    }
  }
  return out;
}

Report check_hopf_heap(const HopfHeap& h) {
  const std::string name = "hopf-heap";
  const auto& c = h.coalgebra();
  if (auto r = check_coalgebra(c); !r) {
    r.check = name;
    return r;
  }
  const auto& f = h.field();
  std::size_t n = h.dim();
  auto lbl = [&](std::size_t i) { return c.label(i); };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar eps = Scalar::zero(f);
        for (const auto& t : h.bracket(i, j, k)) eps += t.coef * c.counit()[t.index];
        if (!(eps == c.counit()[i] * c.counit()[j] * c.counit()[k])) {
          return Report::failure(name, "chi-counit", {i, j, k},
                                 "epsilon([a,b,c]) != epsilon(a)epsilon(b)epsilon(c)");
        }
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = zero_vector(f, n * n);
        for (const auto& t : h.bracket(i, j, k))
          for (const auto& d : c.terms(t.index)) lhs[d.left * n + d.right] += t.coef * d.coef;
        Vector rhs = zero_vector(f, n * n);
        for (const auto& a : c.terms(i))
          for (const auto& b : c.terms(j))
            for (const auto& e : c.terms(k)) {
              Scalar coef = a.coef * b.coef * e.coef;
              // [a1, b2, c1] (x) [a2, b1, c2]
              for (const auto& l : h.bracket(a.left, b.right, e.left))
                for (const auto& r : h.bracket(a.right, b.left, e.right))
                  rhs[l.index * n + r.index] += coef * l.coef * r.coef;
            }
        for (std::size_t pq = 0; pq < n * n; ++pq) {
          if (!(lhs[pq] == rhs[pq])) {
            return Report::failure(name, "chi-comultiplicativity", {i, j, k, pq / n, pq % n},
                                   "Delta([a,b,c]) != sum [a1,b2,c1] x [a2,b1,c2] for " +
                                       lbl(i) + "," + lbl(j) + "," + lbl(k));
          }
        }
      }

  for (std::size_t cc = 0; cc < n; ++cc)
    for (std::size_t a = 0; a < n; ++a) {
      Vector left = zero_vector(f, n), right = zero_vector(f, n);
      for (const auto& t : c.terms(cc)) {
        for (const auto& u : h.bracket(t.left, t.right, a)) left[u.index] += t.coef * u.coef;
        for (const auto& u : h.bracket(a, t.left, t.right)) right[u.index] += t.coef * u.coef;
      }
      Vector expected = zero_vector(f, n);
      expected[a] = c.counit()[cc];
      for (std::size_t l = 0; l < n; ++l) {
        if (!(left[l] == expected[l])) {
          return Report::failure(name, "malcev-left", {cc, a, l},
                                 "sum [c1,c2,a] != epsilon(c) a for c,a = " + lbl(cc) + "," +
                                     lbl(a));
        }
      }
      for (std::size_t l = 0; l < n; ++l) {
        if (!(right[l] == expected[l])) {
          return Report::failure(name, "malcev-right", {cc, a, l},
                                 "sum [a,c1,c2] != epsilon(c) a for c,a = " + lbl(cc) + "," +
                                     lbl(a));
        }
      }
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc) {
        const auto& abc = h.bracket(a, b, cc);
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t e = 0; e < n; ++e) {
            Vector left = zero_vector(f, n), right = zero_vector(f, n);
            for (const auto& t : abc)
              for (const auto& u : h.bracket(t.index, d, e)) left[u.index] += t.coef * u.coef;
            for (const auto& t : h.bracket(cc, d, e))
              for (const auto& u : h.bracket(a, b, t.index)) right[u.index] += t.coef * u.coef;
            for (std::size_t l = 0; l < n; ++l) {
              if (!(left[l] == right[l])) {
                return Report::failure(name, "associativity", {a, b, cc, d, e, l},
                                       "[[a,b,c],d,e] != [a,b,[c,d,e]]");
              }
            }
          }
      }
  return Report::success(name);
}

Matrix grunspan_five_fold(const HopfHeap& h) {
  const auto& f = h.field();
  std::size_t n = h.dim();
  Matrix theta(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : h.coalgebra().iterated(i, 5)) {
      const auto& c = t.legs;
      for (const auto& inner : h.bracket(c[3], c[2], c[1]))
        for (const auto& outer : h.bracket(c[0], inner.index, c[4]))
          theta(outer.index, i) += t.coef * inner.coef * outer.coef;
    }
  }
  return theta;
}

Matrix grunspan_with_unit_element(const HopfHeap& h, std::span<const Scalar> e) {
  const auto& f = h.field();
  const auto& c = h.coalgebra();
  std::size_t n = h.dim();
  if (!c.counit_of(e).is_one()) throw ConstructionError("unit element must have counit 1");
  // Delta(e) as (left, right, coef) summands.
  std::vector<CoTerm> de;
  for (std::size_t u = 0; u < n; ++u) {
    if (e[u].is_zero()) continue;
    for (const auto& t : c.terms(u)) de.push_back({t.left, t.right, e[u] * t.coef});
  }
  Matrix theta(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : c.iterated(i, 3)) {
      const auto& legs = t.legs;
      for (const auto& d : de)
        for (const auto& inner : h.bracket(d.left, legs[2], legs[1]))
          for (const auto& outer : h.bracket(legs[0], inner.index, d.right))
            theta(outer.index, i) += t.coef * d.coef * inner.coef * outer.coef;
    }
  }
  return theta;
}

Matrix grunspan_map(const HopfHeap& h) {
  Matrix theta = grunspan_five_fold(h);
  Matrix via_unit = grunspan_with_unit_element(h, canonical_unit_element(h.coalgebra()));
  if (!(theta == via_unit)) {
    throw VerificationError(
        "Grunspan map: the five-fold coproduct formula and the unit-element formula disagree");
  }
  return theta;
}

Report check_grunspan(const HopfHeap& h, const Matrix& theta) {
  const std::string name = "grunspan";
  std::size_t n = h.dim();
  if (theta.rows() != n || theta.cols() != n) throw ShapeError("Grunspan matrix must be n x n");
  if (auto r = check_coalgebra_morphism(h.coalgebra(), h.coalgebra(), theta); !r) {
    r.check = name;
    return r;
  }
  const auto& f = h.field();
  std::vector<Vector> theta_cols;
  for (std::size_t c = 0; c < n; ++c) theta_cols.push_back(theta.column(c));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        // [a, b, theta(c)]
        Vector abt = zero_vector(f, n);
        for (std::size_t l = 0; l < n; ++l) {
          if (theta_cols[c][l].is_zero()) continue;
          for (const auto& t : h.bracket(a, b, l)) abt[t.index] += theta_cols[c][l] * t.coef;
        }
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t e = 0; e < n; ++e) {
            Vector left = zero_vector(f, n), right = zero_vector(f, n);
            for (std::size_t l = 0; l < n; ++l) {
              if (abt[l].is_zero()) continue;
              for (const auto& t : h.bracket(l, d, e)) left[t.index] += abt[l] * t.coef;
            }
            for (const auto& inner : h.bracket(d, c, b))
              for (const auto& t : h.bracket(a, inner.index, e))
                right[t.index] += inner.coef * t.coef;
            for (std::size_t l = 0; l < n; ++l) {
              if (!(left[l] == right[l])) {
                return Report::failure(name, "grunspan-identity", {a, b, c, d, e, l},
                                       "[[a,b,theta(c)],d,e] != [a,[d,c,b],e]");
              }
            }
          }
      }
  return Report::success(name);
}

HopfHeap heap_from_hopf(const HopfAlgebraData& h) {
  if (!h.antipode()) throw ConstructionError("heap_from_hopf: Hopf algebra has no antipode");
  const auto& f = h.field();
  std::size_t n = h.dim();
  const Matrix& s = *h.antipode();
  Tensor chi(f, {n, n, n, n});
  for (std::size_t j = 0; j < n; ++j) {
    Vector sj = s.column(j);
    for (std::size_t i = 0; i < n; ++i) {
      Vector isj = h.multiply(unit_vector(f, n, i), sj);
      for (std::size_t k = 0; k < n; ++k) {
        Vector v = h.multiply(isj, unit_vector(f, n, k));
        for (std::size_t l = 0; l < n; ++l) chi(i, j, k, l) = v[l];
      }
    }
  }
  return HopfHeap(h.coalgebra(), std::move(chi));
}

HopfAlgebraData hopf_at_grouplike(const HopfHeap& h, std::span<const Scalar> x) {
  if (!is_grouplike(h.coalgebra(), x)) {
    throw ConstructionError("hopf_at_grouplike: the supplied vector is not grouplike");
  }
  const auto& f = h.field();
  std::size_t n = h.dim();
  Tensor mult(f, {n, n, n});
  Matrix s(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector ei = unit_vector(f, n, i);
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = h.bracket(ei, x, unit_vector(f, n, j));
      for (std::size_t k = 0; k < n; ++k) mult(i, j, k) = v[k];
    }
    Vector si = h.bracket(x, ei, x);
    for (std::size_t r = 0; r < n; ++r) s(r, i) = si[r];
  }
  return HopfAlgebraData(h.coalgebra(), std::move(mult), Vector(x.begin(), x.end()),
                         std::move(s));
}

Report check_heap_morphism(const HeapMorphism& m, const Matrix& theta_source,
                           const Matrix& theta_target) {
  const std::string name = "heap-morphism";
  const auto& src = m.source;
  const auto& tgt = m.target;
  if (m.map.rows() != tgt.dim() || m.map.cols() != src.dim()) {
    throw ShapeError("heap morphism matrix must be dim(target) x dim(source)");
  }
  if (theta_source.rows() != src.dim() || theta_source.cols() != src.dim() ||
      theta_target.rows() != tgt.dim() || theta_target.cols() != tgt.dim()) {
    throw ShapeError("Grunspan matrices do not match the heap dimensions");
  }
  if (auto r = check_coalgebra_morphism(src.coalgebra(), tgt.coalgebra(), m.map); !r) {
    r.check = name;
    return r;
  }
  std::size_t n = src.dim();
  const auto& f = src.field();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(m.map.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector v = zero_vector(f, n);
        for (const auto& t : src.bracket(i, j, k)) v[t.index] += t.coef;
        Vector lhs = m.map.apply(v);
        Vector rhs = tgt.bracket(images[i], images[j], images[k]);
        if (lhs != rhs) {
          return Report::failure(name, "bracket-preservation", {i, j, k},
                                 "f([a,b,c]) != [f(a),f(b),f(c)]");
        }
      }
  Matrix lhs = m.map * theta_source;
  Matrix rhs = theta_target * m.map;
  for (std::size_t i = 0; i < n; ++i) {
    if (lhs.column(i) != rhs.column(i)) {
      return Report::failure(name, "grunspan-compatibility", {i}, "f(theta(a)) != theta(f(a))");
    }
  }
  return Report::success(name);
}

}  // namespace hopfheap
