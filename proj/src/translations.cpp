#include "hopfheap/translations.hpp"

#include "hopfheap/errors.hpp"

namespace hopfheap {

std::string to_string(Side side) { return side == Side::Right ? "right" : "left"; }

Vector TranslationAlgebra::coords(std::size_t i, std::size_t j) const {
  return generator_coords.column(pair_index(i, j, heap.dim()));
}

Matrix TranslationAlgebra::endomorphism(std::size_t p) const {
  std::size_t n = heap.dim();
  Matrix m(heap.field(), n, n);
  const auto& v = basis.vectors().at(p);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k) m(l, k) = v[pair_index(l, k, n)];
  return m;
}

Vector TranslationAlgebra::act(std::span<const Scalar> element, std::span<const Scalar> c) const {
  std::size_t n = heap.dim();
  if (element.size() != dim() || c.size() != n) throw ShapeError("act: vector length mismatch");
  Vector out = zero_vector(heap.field(), n);
  for (std::size_t k = 0; k < n; ++k) {
    if (c[k].is_zero()) continue;
    for (std::size_t p = 0; p < dim(); ++p) {
      if (element[p].is_zero()) continue;
      Scalar w = c[k] * element[p];
      for (std::size_t l = 0; l < n; ++l) {
        const Scalar& a = action(k, p, l);
        if (!a.is_zero()) out[l] += w * a;
      }
    }
  }
  return out;
}

Matrix TranslationAlgebra::descend(const Matrix& generator_values, const std::string& what) const {
  std::size_t n = heap.dim();
  if (generator_values.cols() != n * n) {
    throw ShapeError("descend: expected one column per generator");
  }
  for (std::size_t r = 0; r < relations.dim(); ++r) {
    const auto& rel = relations.vectors()[r];
    if (!is_zero(generator_values.apply(rel))) {
      std::string terms;
      for (std::size_t g = 0; g < rel.size(); ++g) {
        if (rel[g].is_zero()) continue;
        auto [i, j] = pair_unindex(g, n);
        terms += (terms.empty() ? "" : " + ") + rel[g].to_string() + "*(" +
                 heap.coalgebra().label(i) + "," + heap.coalgebra().label(j) + ")";
      }
      throw ConstructionError(what + " is not well defined on the " + to_string(side) +
                              " translation span: the relation " + terms +
                              " = 0 is not respected");
    }
  }
  return generator_values * basis_preimages;
}

namespace {

Vector generator_endomorphism(const HopfHeap& h, Side side, std::size_t i, std::size_t j) {
  std::size_t n = h.dim();
  Vector v = zero_vector(h.field(), n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto& image = side == Side::Right ? h.bracket(k, i, j) : h.bracket(i, j, k);
    for (const auto& t : image) v[pair_index(t.index, k, n)] = t.coef;
  }
  return v;
}

// Flattened matrix product a * b of two flattened n x n endomorphisms.
Vector compose(const FieldSpec& f, std::size_t n, std::span<const Scalar> a,
               std::span<const Scalar> b) {
  Vector out = zero_vector(f, n * n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) {
      const Scalar& x = a[l * n + m];
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& y = b[m * n + k];
        if (!y.is_zero()) out[l * n + k] += x * y;
      }
    }
  return out;
}

std::vector<CoTerm> coproduct_of(const Coalgebra& c, std::span<const Scalar> e) {
  std::vector<CoTerm> out;
  for (std::size_t u = 0; u < c.dim(); ++u) {
    if (e[u].is_zero()) continue;
    for (const auto& t : c.terms(u)) out.push_back({t.left, t.right, e[u] * t.coef});
  }
  return out;
}

}  // namespace

Matrix translation_antipode_with_unit_element(const TranslationAlgebra& t,
                                              std::span<const Scalar> e) {
  const auto& h = t.heap;
  const auto& f = h.field();
  std::size_t n = h.dim();
  if (!h.coalgebra().counit_of(e).is_one()) {
    throw ConstructionError("unit element must have counit 1");
  }
  auto de = coproduct_of(h.coalgebra(), e);
  Matrix values(f, t.dim(), n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector v = zero_vector(f, t.dim());
      for (const auto& d : de) {
        if (t.side == Side::Right) {
          for (const auto& x : h.bracket(d.left, a, b)) axpy(v, d.coef * x.coef, t.coords(x.index, d.right));
        } else {
          for (const auto& x : h.bracket(a, b, d.right)) axpy(v, d.coef * x.coef, t.coords(d.left, x.index));
        }
      }
      for (std::size_t p = 0; p < t.dim(); ++p) values(p, pair_index(a, b, n)) = v[p];
    }
  return t.descend(values, "the unit-element antipode formula");
}

Matrix translation_antipode_from_grunspan(const TranslationAlgebra& t) {
  const auto& f = t.heap.field();
  std::size_t n = t.heap.dim();
  Matrix values(f, t.dim(), n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector v = zero_vector(f, t.dim());
      for (std::size_t l = 0; l < n; ++l) {
        if (t.side == Side::Right) {
          if (!t.theta(l, a).is_zero()) axpy(v, t.theta(l, a), t.coords(b, l));
        } else {
          if (!t.theta(l, b).is_zero()) axpy(v, t.theta(l, b), t.coords(l, a));
        }
      }
      for (std::size_t p = 0; p < t.dim(); ++p) values(p, pair_index(a, b, n)) = v[p];
    }
  return t.descend(values, "the Grunspan antipode formula");
}

TranslationAlgebra build_translations(const HopfHeap& h, Side side) {
  const auto& f = h.field();
  const auto& c = h.coalgebra();
  std::size_t n = h.dim();
  std::size_t nn = n * n;

  std::vector<Vector> generators;
  generators.reserve(nn);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) generators.push_back(generator_endomorphism(h, side, i, j));
  Matrix gen_rows = Matrix::from_rows(f, nn, generators);
  SubspaceBasis basis = SubspaceBasis::row_space(gen_rows);
  std::size_t r = basis.dim();

  Matrix generator_coords(f, r, nn);
  for (std::size_t g = 0; g < nn; ++g) {
    auto x = basis.coordinates(generators[g]);
    for (std::size_t p = 0; p < r; ++p) generator_coords(p, g) = (*x)[p];
  }
  Matrix gen_cols = gen_rows.transpose();
  SubspaceBasis relations = SubspaceBasis::kernel_of(gen_cols);
  Matrix preimages(f, nn, r);
  for (std::size_t p = 0; p < r; ++p) {
    auto lambda = solve(gen_cols, basis.vectors()[p]);
    if (!lambda) throw ConstructionError("basis element outside the generator span");
    for (std::size_t g = 0; g < nn; ++g) preimages(g, p) = (*lambda)[g];
  }

  // Placeholder Hopf data, replaced below once the structure is known.
  Tensor action(f, {n, r, n});
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < n; ++k) action(k, p, l) = basis.vectors()[p][pair_index(l, k, n)];

  TranslationAlgebra t{side,
                       h,
                       grunspan_map(h),
                       basis,
                       HopfAlgebraData(Coalgebra::grouplike(f, r), Tensor(f, {r, r, r}),
                                       zero_vector(f, r)),
                       std::move(generator_coords),
                       std::move(preimages),
                       std::move(relations),
                       std::move(action)};

  Vector identity = zero_vector(f, nn);
  for (std::size_t k = 0; k < n; ++k) identity[pair_index(k, k, n)] = Scalar::one(f);
  auto unit = basis.coordinates(identity);
  if (!unit) throw ConstructionError("the identity map is not in the translation span");

  Tensor mult(f, {r, r, r});
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t q = 0; q < r; ++q) {
      const auto& bp = basis.vectors()[p];
      const auto& bq = basis.vectors()[q];
      Vector prod = side == Side::Right ? compose(f, n, bq, bp) : compose(f, n, bp, bq);
      auto x = basis.coordinates(prod);
      if (!x) throw ConstructionError("the translation span is not closed under composition");
      for (std::size_t s = 0; s < r; ++s) mult(p, q, s) = (*x)[s];
    }

  Matrix counit_values(f, 1, nn);
  Matrix comul_values(f, r * r, nn);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t g = pair_index(a, b, n);
      counit_values(0, g) = c.counit()[a] * c.counit()[b];
      Vector delta = zero_vector(f, r * r);
      for (const auto& ta : c.terms(a))
        for (const auto& tb : c.terms(b)) {
          // right: tau_{a2}^{b1} (x) tau_{a1}^{b2};  left: sigma^{a1}_{b2} (x) sigma^{a2}_{b1}
          Vector x = side == Side::Right ? t.coords(ta.right, tb.left) : t.coords(ta.left, tb.right);
          Vector y = side == Side::Right ? t.coords(ta.left, tb.right) : t.coords(ta.right, tb.left);
          Scalar w = ta.coef * tb.coef;
          for (std::size_t p = 0; p < r; ++p) {
            if (x[p].is_zero()) continue;
            for (std::size_t q = 0; q < r; ++q)
              if (!y[q].is_zero()) delta[p * r + q] += w * x[p] * y[q];
          }
        }
      for (std::size_t pq = 0; pq < r * r; ++pq) comul_values(pq, g) = delta[pq];
    }
  Matrix counit_m = t.descend(counit_values, "the counit");
  Matrix comul_m = t.descend(comul_values, "the comultiplication");
  Tensor comul(f, {r, r, r});
  Vector counit = zero_vector(f, r);
  for (std::size_t p = 0; p < r; ++p) {
    counit[p] = counit_m(0, p);
    for (std::size_t pq = 0; pq < r * r; ++pq) comul(p, pq / r, pq % r) = comul_m(pq, p);
  }
  t.hopf = HopfAlgebraData(Coalgebra(f, std::move(comul), std::move(counit)), std::move(mult),
                           std::move(*unit));

  Matrix s_theta = translation_antipode_from_grunspan(t);
  Matrix s_unit = translation_antipode_with_unit_element(t, canonical_unit_element(c));
  if (!(s_theta == s_unit)) {
    throw VerificationError("the Grunspan and unit-element antipode formulas disagree on the " +
                            to_string(side) + " translation algebra");
  }
  t.hopf = t.hopf.with_antipode(std::move(s_theta));

  if (auto rep = check_bialgebra(t.hopf); !rep) {
    throw ConstructionError(to_string(side) + " translation algebra is not a bialgebra: " +
                            rep.summary());
  }
  if (auto rep = check_antipode(t.hopf, *t.hopf.antipode()); !rep) {
    throw ConstructionError(to_string(side) + " translation antipode fails: " + rep.summary());
  }
  return t;
}

TranslationAlgebra build_right_translations(const HopfHeap& h) {
  return build_translations(h, Side::Right);
}

TranslationAlgebra build_left_translations(const HopfHeap& h) {
  return build_translations(h, Side::Left);
}

GrouplikeIso grouplike_iso(const TranslationAlgebra& t, std::span<const Scalar> x) {
  const auto& h = t.heap;
  const auto& f = h.field();
  std::size_t n = h.dim();
  HopfAlgebraData hx = hopf_at_grouplike(h, x);  // throws unless x is grouplike

  Matrix forward(f, t.dim(), n);
  for (std::size_t a = 0; a < n; ++a) {
    Vector v = zero_vector(f, t.dim());
    for (std::size_t u = 0; u < n; ++u) {
      if (x[u].is_zero()) continue;
      axpy(v, x[u], t.side == Side::Right ? t.coords(u, a) : t.coords(a, u));
    }
    for (std::size_t p = 0; p < t.dim(); ++p) forward(p, a) = v[p];
  }
  Matrix values(f, n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector ea = unit_vector(f, n, a), eb = unit_vector(f, n, b);
      Vector v = t.side == Side::Right ? h.bracket(x, ea, eb) : h.bracket(ea, eb, x);
      for (std::size_t l = 0; l < n; ++l) values(l, pair_index(a, b, n)) = v[l];
    }
  Matrix inverse = t.descend(values, "the inverse of the grouplike isomorphism");

  if (auto r = check_hopf_morphism(forward, hx, t.hopf); !r) {
    throw VerificationError("grouplike isomorphism forward map: " + r.summary());
  }
  if (auto r = check_hopf_morphism(inverse, t.hopf, hx); !r) {
    throw VerificationError("grouplike isomorphism inverse map: " + r.summary());
  }
  if (!(forward * inverse).is_identity() || !(inverse * forward).is_identity()) {
    throw VerificationError("grouplike isomorphism: the two maps are not mutually inverse");
  }
  return {std::move(forward), std::move(inverse)};
}

Matrix induced_morphism(const HeapMorphism& m, const TranslationAlgebra& source,
                        const TranslationAlgebra& target) {
  if (source.side != target.side) throw ShapeError("induced_morphism: sides differ");
  const auto& f = source.heap.field();
  std::size_t n = source.heap.dim();
  std::size_t nt = target.heap.dim();
  if (m.map.rows() != nt || m.map.cols() != n) throw ShapeError("induced_morphism: map shape");
  Matrix values(f, target.dim(), n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector v = zero_vector(f, target.dim());
      for (std::size_t u = 0; u < nt; ++u) {
        if (m.map(u, a).is_zero()) continue;
        for (std::size_t w = 0; w < nt; ++w) {
          if (m.map(w, b).is_zero()) continue;
          axpy(v, m.map(u, a) * m.map(w, b), target.coords(u, w));
        }
      }
      for (std::size_t p = 0; p < target.dim(); ++p) values(p, pair_index(a, b, n)) = v[p];
    }
  Matrix induced = source.descend(values, "the induced morphism");
  if (auto r = check_hopf_morphism(induced, source.hopf, target.hopf); !r) {
    throw VerificationError("induced morphism is not a Hopf algebra map: " + r.summary());
  }
  return induced;
}

AbelianSwapReport abelian_swap_check(const TranslationAlgebra& left,
                                     const TranslationAlgebra& right) {
  if (left.side != Side::Left || right.side != Side::Right) {
    throw ShapeError("abelian_swap_check expects (left, right) translation algebras");
  }
  const auto& h = right.heap;
  const auto& f = h.field();
  std::size_t n = h.dim();
  AbelianSwapReport out;
  out.is_abelian_heap = true;
  for (std::size_t a = 0; a < n && out.is_abelian_heap; ++a)
    for (std::size_t b = 0; b < n && out.is_abelian_heap; ++b)
      for (std::size_t c = 0; c < n && out.is_abelian_heap; ++c) {
        Vector x = zero_vector(f, n), y = zero_vector(f, n);
        for (const auto& t : h.bracket(a, b, c)) x[t.index] += t.coef;
        for (const auto& t : h.bracket(c, b, a)) y[t.index] += t.coef;
        if (x != y) out.is_abelian_heap = false;
      }

  const std::string name = "abelian-swap";
  Matrix values(f, right.dim(), n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector v = right.coords(b, a);
      for (std::size_t p = 0; p < right.dim(); ++p) values(p, pair_index(a, b, n)) = v[p];
    }
  Matrix swap(f, right.dim(), left.dim());
  try {
    swap = left.descend(values, "the swap sigma^a_b -> tau_b^a");
  } catch (const ConstructionError& e) {
    out.detail = Report::failure(name, "well-definedness", {}, e.what());
    return out;
  }
  if (swap.apply(left.hopf.unit()) != right.hopf.unit()) {
    out.detail = Report::failure(name, "unitality", {}, "swap(1) != 1");
    return out;
  }
  for (std::size_t p = 0; p < left.dim(); ++p)
    for (std::size_t q = 0; q < left.dim(); ++q) {
      Vector pq = zero_vector(f, left.dim());
      for (const auto& t : left.hopf.product(p, q)) pq[t.index] += t.coef;
      Vector lhs = swap.apply(pq);
      Vector rhs = right.hopf.multiply(swap.column(q), swap.column(p));
      if (lhs != rhs) {
        out.detail = Report::failure(name, "anti-multiplicativity", {p, q},
                                     "swap(pq) != swap(q) swap(p)");
        return out;
      }
    }
  out.swap_is_antialgebra_map = true;
  out.detail = Report::success(name);
  return out;
}

AbelianSwapReport abelian_swap_check(const HopfHeap& h) {
  return abelian_swap_check(build_left_translations(h), build_right_translations(h));
}

Report check_translation_identities(const HopfHeap& h, const Matrix& theta) {
  const std::string name = "translation-identities";
  const auto& f = h.field();
  const auto& c = h.coalgebra();
  std::size_t n = h.dim();
  if (theta.rows() != n || theta.cols() != n) throw ShapeError("Grunspan matrix must be n x n");

  auto dense = [&](const SparseVector& s) {
    Vector v = zero_vector(f, n);
    for (const auto& t : s) v[t.index] += t.coef;
    return v;
  };
  auto basis = [&](std::size_t i) { return unit_vector(f, n, i); };
  std::vector<Vector> theta_cols;
  for (std::size_t i = 0; i < n; ++i) theta_cols.push_back(theta.column(i));

  // coproduct: Delta([c,a,b]) = sum [c1,a2,b1] (x) [c2,a1,b2]
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t x = 0; x < n; ++x) {
        Vector lhs = c.coproduct(dense(h.bracket(x, a, b)));
        Vector rhs = zero_vector(f, n * n);
        for (const auto& ta : c.terms(a))
          for (const auto& tb : c.terms(b))
            for (const auto& tx : c.terms(x)) {
              Scalar w = ta.coef * tb.coef * tx.coef;
              for (const auto& l : h.bracket(tx.left, ta.right, tb.left))
                for (const auto& r : h.bracket(tx.right, ta.left, tb.right))
                  rhs[l.index * n + r.index] += w * l.coef * r.coef;
            }
        if (lhs != rhs) return Report::failure(name, "coproduct", {a, b, x});
      }

  for (std::size_t a = 0; a < n; ++a) {
    const Scalar& eps = c.counit()[a];
    for (std::size_t d = 0; d < n; ++d) {
      // unit-sum: sum [d, a1, a2] = epsilon(a) d
      Vector lhs = zero_vector(f, n);
      for (const auto& t : c.terms(a))
        for (const auto& u : h.bracket(d, t.left, t.right)) lhs[u.index] += t.coef * u.coef;
      Vector rhs = zero_vector(f, n);
      rhs[d] = eps;
      if (lhs != rhs) return Report::failure(name, "unit-sum", {a, d});
      // unit-sum-theta: sum [d, a2, theta(a1)] = epsilon(a) d
      Vector lhs2 = zero_vector(f, n);
      for (const auto& t : c.terms(a)) {
        Vector v = h.bracket(basis(d), basis(t.right), theta_cols[t.left]);
        axpy(lhs2, t.coef, v);
      }
      if (lhs2 != rhs) return Report::failure(name, "unit-sum-theta", {a, d});
    }
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc) {
        Vector bc_expected_scale = zero_vector(f, n);
        for (std::size_t d = 0; d < n; ++d) {
          Vector rhs = dense(h.bracket(d, b, cc));
          for (auto& s : rhs) s *= c.counit()[a];
          // absorb: sum [d, a1, [a2,b,c]]
          Vector lhs = zero_vector(f, n);
          for (const auto& t : c.terms(a))
            for (const auto& inner : h.bracket(t.right, b, cc))
              for (const auto& u : h.bracket(d, t.left, inner.index))
                lhs[u.index] += t.coef * inner.coef * u.coef;
          if (lhs != rhs) return Report::failure(name, "absorb", {a, b, cc, d});
          // absorb-theta: sum [d, a2, [theta(a1), b, c]]
          Vector lhs2 = zero_vector(f, n);
          for (const auto& t : c.terms(a)) {
            Vector inner = h.bracket(theta_cols[t.left], basis(b), basis(cc));
            axpy(lhs2, t.coef, h.bracket(basis(d), basis(t.right), inner));
          }
          if (lhs2 != rhs) return Report::failure(name, "absorb-theta", {a, b, cc, d});
        }
      }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc)
        for (std::size_t d = 0; d < n; ++d) {
          Vector bcd = dense(h.bracket(b, cc, d));
          Vector cba = dense(h.bracket(cc, b, a));
          for (std::size_t x = 0; x < n; ++x) {
            // composition: [[x,a,b],c,d] = [x,a,[b,c,d]]
            Vector xab = dense(h.bracket(x, a, b));
            Vector lhs = h.bracket(xab, basis(cc), basis(d));
            Vector rhs = h.bracket(basis(x), basis(a), bcd);
            if (lhs != rhs) return Report::failure(name, "composition", {a, b, cc, d, x});
            // composition-theta: [[x,a,theta(b)],c,d] = [x,[c,b,a],d]
            Vector xat = h.bracket(basis(x), basis(a), theta_cols[b]);
            Vector lhs2 = h.bracket(xat, basis(cc), basis(d));
            Vector rhs2 = h.bracket(basis(x), cba, basis(d));
            if (lhs2 != rhs2) return Report::failure(name, "composition-theta", {a, b, cc, d, x});
          }
        }
  return Report::success(name);
}

}  // namespace hopfheap
