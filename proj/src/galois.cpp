#include "hopfheap/galois.hpp"

#include "hopfheap/errors.hpp"

namespace hopfheap {

namespace {

struct Leg {
  std::size_t left;
  std::size_t right;
  Scalar coef;
};

std::vector<Leg> coproduct_terms(const Coalgebra& c, std::span<const Scalar> v) {
  std::vector<Leg> out;
  for (std::size_t u = 0; u < c.dim(); ++u) {
    if (v[u].is_zero()) continue;
    for (const auto& t : c.terms(u)) out.push_back({t.left, t.right, v[u] * t.coef});
  }
  return out;
}

Vector outer(const FieldSpec& f, std::span<const Scalar> x, std::span<const Scalar> y) {
  Vector out = zero_vector(f, x.size() * y.size());
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (x[p].is_zero()) continue;
    for (std::size_t q = 0; q < y.size(); ++q)
      if (!y[q].is_zero()) out[p * y.size() + q] = x[p] * y[q];
  }
  return out;
}

Vector scaled(Vector v, const Scalar& s) {
  for (auto& x : v) x *= s;
  return v;
}

void require_action_shape(const GaloisCoObject& g) {
  std::size_t n = g.c.dim();
  std::size_t m = g.h.dim();
  if (g.action.shape() != std::vector<std::size_t>{n, m, n}) {
    throw ShapeError("action tensor must have shape dim C x dim H x dim C");
  }
  if (!(g.c.field() == g.h.field()) || !(g.action.field() == g.c.field())) {
    throw FieldMismatchError("coalgebra, bialgebra and action live over different fields");
  }
}

}  // namespace

Vector GaloisCoObject::act(std::span<const Scalar> x, std::span<const Scalar> y) const {
  std::size_t n = c.dim();
  std::size_t m = h.dim();
  if (x.size() != n || y.size() != m) throw ShapeError("act: vector length mismatch");
  Vector out = zero_vector(c.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& a = action(i, j, k);
        if (!a.is_zero()) out[k] += w * a;
      }
    }
  }
  return out;
}

Matrix canonical_map(const GaloisCoObject& g) {
  require_action_shape(g);
  std::size_t n = g.c.dim();
  std::size_t m = g.h.dim();
  Matrix can(g.c.field(), n * n, n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& t : g.c.terms(i))
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& a = g.action(t.right, j, k);
          if (!a.is_zero()) can(pair_index(t.left, k, n), i * m + j) += t.coef * a;
        }
  return can;
}

Report check_galois(const GaloisCoObject& g) {
  const std::string name = "galois";
  require_action_shape(g);
  const auto& f = g.c.field();
  const auto& c = g.c;
  const auto& h = g.h;
  std::size_t n = c.dim();
  std::size_t m = h.dim();

  std::vector<Vector> ec, eh;
  for (std::size_t i = 0; i < n; ++i) ec.push_back(unit_vector(f, n, i));
  for (std::size_t j = 0; j < m; ++j) eh.push_back(unit_vector(f, m, j));

  for (std::size_t i = 0; i < n; ++i) {
    if (g.act(ec[i], h.unit()) != ec[i]) {
      return Report::failure(name, "module-unit", {i}, "c . 1 != c for c = " + c.label(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector ch = g.act(ec[i], eh[j]);
      for (std::size_t k = 0; k < m; ++k) {
        Vector lhs = g.act(ch, eh[k]);
        Vector rhs = g.act(ec[i], h.multiply(eh[j], eh[k]));
        if (lhs != rhs) {
          return Report::failure(name, "module-associativity", {i, j, k}, "(c.h).h' != c.(hh')");
        }
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector ch = g.act(ec[i], eh[j]);
      if (!(c.counit_of(ch) == c.counit()[i] * h.coalgebra().counit()[j])) {
        return Report::failure(name, "module-counit", {i, j},
                               "epsilon(c.h) != epsilon(c) epsilon(h)");
      }
      Vector lhs = c.coproduct(ch);
      Vector rhs = zero_vector(f, n * n);
      for (const auto& tc : c.terms(i))
        for (const auto& th : h.coalgebra().terms(j)) {
          Vector l = g.act(ec[tc.left], eh[th.left]);
          Vector r = g.act(ec[tc.right], eh[th.right]);
          axpy(rhs, tc.coef * th.coef, outer(f, l, r));
        }
      for (std::size_t pq = 0; pq < n * n; ++pq) {
        if (!(lhs[pq] == rhs[pq])) {
          return Report::failure(name, "module-comultiplicativity", {i, j, pq / n, pq % n},
                                 "Delta(c.h) != sum c1.h1 (x) c2.h2");
        }
      }
    }

  std::vector<Vector> differences;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vector v = g.act(ec[i], eh[j]);
      v[i] -= h.coalgebra().counit()[j];
      differences.push_back(std::move(v));
    }
  SubspaceBasis span = SubspaceBasis::span(f, n, differences);
  SubspaceBasis ker = SubspaceBasis::kernel_of(Matrix::from_rows(f, n, {c.counit()}));
  if (!(span == ker)) {
    return Report::failure(name, "condition-a", {},
                           "span of c.h - c epsilon(h) has dimension " +
                               std::to_string(span.dim()) + ", ker epsilon has dimension " +
                               std::to_string(ker.dim()));
  }
  if (m != n) {
    return Report::failure(name, "condition-b", {},
                           "dim H = " + std::to_string(m) + " differs from dim C = " +
                               std::to_string(n) + ", so the canonical map cannot be bijective");
  }
  std::size_t r = rank(canonical_map(g));
  if (r != n * n) {
    return Report::failure(name, "condition-b", {},
                           "canonical map has rank " + std::to_string(r) + " < " +
                               std::to_string(n * n));
  }
  return Report::success(name);
}

Vector CotranslationTable::tau(std::size_t i, std::size_t j) const {
  std::size_t n = 0;
  while (n * n < values.cols()) ++n;
  return values.column(pair_index(i, j, n));
}

Vector CotranslationTable::tau(std::span<const Scalar> a, std::span<const Scalar> b) const {
  std::size_t n = a.size();
  if (b.size() != n || n * n != values.cols()) throw ShapeError("tau: vector length mismatch");
  Vector out = zero_vector(values.field(), values.rows());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Scalar w = a[i] * b[j];
      std::size_t col = pair_index(i, j, n);
      for (std::size_t r = 0; r < values.rows(); ++r)
        if (!values(r, col).is_zero()) out[r] += w * values(r, col);
    }
  }
  return out;
}

CotranslationTable cotranslation(const GaloisCoObject& g) {
  std::size_t n = g.c.dim();
  std::size_t m = g.h.dim();
  Matrix can = canonical_map(g);
  if (can.rows() != can.cols()) {
    throw ConstructionError("canonical map is not square, so it has no inverse");
  }
  auto inv = inverse(can);
  if (!inv) throw ConstructionError("canonical map is not invertible");
  Matrix values(g.c.field(), m, n * n);
  for (std::size_t col = 0; col < n * n; ++col)
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar& eps = g.c.counit()[i];
      if (eps.is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) values(j, col) += eps * (*inv)(i * m + j, col);
    }
  return {std::move(*inv), std::move(values)};
}

Matrix antipode_from_galois(const GaloisCoObject& g, const CotranslationTable& t,
                            std::span<const Scalar> e) {
  const auto& f = g.c.field();
  std::size_t n = g.c.dim();
  std::size_t m = g.h.dim();
  if (!g.c.counit_of(e).is_one()) throw ConstructionError("unit element must have counit 1");
  auto de = coproduct_terms(g.c, e);
  Matrix s(f, m, m);
  for (std::size_t j = 0; j < m; ++j) {
    Vector col = zero_vector(f, m);
    for (const auto& d : de) {
      Vector moved = g.act(unit_vector(f, n, d.left), unit_vector(f, m, j));
      axpy(col, d.coef, t.tau(moved, unit_vector(f, n, d.right)));
    }
    for (std::size_t r = 0; r < m; ++r) s(r, j) = col[r];
  }
  return s;
}

Matrix antipode_from_galois(const GaloisCoObject& g) {
  CotranslationTable t = cotranslation(g);
  Matrix s = antipode_from_galois(g, t, canonical_unit_element(g.c));
  if (auto r = check_antipode(g.h, s); !r) {
    throw VerificationError("antipode from the cotranslation map fails: " + r.summary());
  }
  for (const auto& e : unit_elements(g.c)) {
    if (!(antipode_from_galois(g, t, e) == s)) {
      throw VerificationError("antipode from the cotranslation map depends on the unit element");
    }
  }
  auto solved = solve_antipode(g.h);
  if (!solved || !(*solved == s)) {
    throw VerificationError("antipode from the cotranslation map differs from solve_antipode");
  }
  return s;
}

GaloisCoObject with_galois_antipode(const GaloisCoObject& g) {
  if (g.h.antipode()) return g;
  return {g.c, g.h.with_antipode(antipode_from_galois(g)), g.action};
}

Report check_cotranslation_props(const GaloisCoObject& g, const CotranslationTable& t) {
  const std::string name = "cotranslation";
  const auto& f = g.c.field();
  const auto& c = g.c;
  const auto& h = g.h;
  std::size_t n = c.dim();
  std::size_t m = h.dim();
  Matrix s = h.antipode() ? *h.antipode()
                          : antipode_from_galois(g, t, canonical_unit_element(c));

  std::vector<Vector> tau(n * n), stau(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      tau[a * n + b] = t.tau(a, b);
      stau[a * n + b] = s.apply(tau[a * n + b]);
    }
  auto ec = [&](std::size_t i) { return unit_vector(f, n, i); };
  auto eh = [&](std::size_t j) { return unit_vector(f, m, j); };

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!(h.coalgebra().counit_of(tau[a * n + b]) == c.counit()[a] * c.counit()[b])) {
        return Report::failure(name, "counit", {a, b}, "epsilon(tau(a (x) b)) != epsilon(a)epsilon(b)");
      }

  for (std::size_t a = 0; a < n; ++a) {
    Vector lhs = zero_vector(f, m);
    for (const auto& x : c.terms(a)) axpy(lhs, x.coef, tau[x.left * n + x.right]);
    if (lhs != scaled(h.unit(), c.counit()[a])) {
      return Report::failure(name, "unit-sum", {a}, "sum tau(a1 (x) a2) != epsilon(a) 1");
    }
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t j = 0; j < m; ++j) {
        Vector lhs = t.tau(ec(a), g.act(ec(b), eh(j)));
        Vector rhs = h.multiply(tau[a * n + b], eh(j));
        if (lhs != rhs) {
          return Report::failure(name, "right-linearity", {a, b, j}, "tau(a (x) b.h) != tau(a (x) b) h");
        }
      }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector lhs = zero_vector(f, n);
      for (const auto& x : c.terms(a)) axpy(lhs, x.coef, g.act(ec(x.left), tau[x.right * n + b]));
      if (lhs != scaled(ec(b), c.counit()[a])) {
        return Report::failure(name, "reconstruction", {a, b}, "sum a1 . tau(a2 (x) b) != epsilon(a) b");
      }
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector lhs = h.coalgebra().coproduct(tau[a * n + b]);
      Vector rhs = zero_vector(f, m * m);
      for (const auto& x : c.terms(a))
        for (const auto& y : c.terms(b))
          axpy(rhs, x.coef * y.coef, outer(f, tau[x.right * n + y.left], tau[x.left * n + y.right]));
      if (lhs != rhs) {
        return Report::failure(name, "coproduct", {a, b},
                               "Delta tau(a (x) b) != sum tau(a2 (x) b1) (x) tau(a1 (x) b2)");
      }
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc) {
        Vector moved = g.act(ec(a), tau[b * n + cc]);
        for (std::size_t d = 0; d < n; ++d) {
          Vector lhs = t.tau(moved, ec(d));
          Vector rhs = h.multiply(stau[b * n + cc], tau[a * n + d]);
          if (lhs != rhs) {
            return Report::failure(name, "absorb", {a, b, cc, d},
                                   "tau(a.tau(b (x) c) (x) d) != S tau(b (x) c) tau(a (x) d)");
          }
        }
      }

  for (std::size_t cc = 0; cc < n; ++cc) {
    auto legs = c.iterated(cc, 3);
    for (std::size_t b = 0; b < n; ++b) {
      Vector lhs = zero_vector(f, m);
      for (const auto& x : legs) {
        axpy(lhs, x.coef,
             h.multiply(tau[b * n + x.legs[0]], stau[x.legs[2] * n + x.legs[1]]));
      }
      if (lhs != stau[cc * n + b]) {
        return Report::failure(name, "twist", {b, cc},
                               "sum tau(b (x) c1) S tau(c3 (x) c2) != S tau(c (x) b)");
      }
    }
  }
  return Report::success(name);
}

EhresmannHopf ehresmann_hopf(const GaloisCoObject& g) {
  const auto& f = g.c.field();
  const auto& c = g.c;
  std::size_t n = c.dim();
  std::size_t nn = n * n;
  CotranslationTable t = cotranslation(g);
  Coalgebra ambient = tensor_coalgebra(c, co_opposite(c));

  // moved[(a * n + b) * n + cc] = a . tau(b (x) cc)
  std::vector<Vector> moved(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc)
        moved[(a * n + b) * n + cc] = g.act(unit_vector(f, n, a), t.tau(b, cc));
  auto mv = [&](std::size_t a, std::size_t b, std::size_t cc) -> const Vector& {
    return moved[(a * n + b) * n + cc];
  };

  std::vector<Vector> generators;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc) {
        Vector v = zero_vector(f, nn);
        v[pair_index(a, b, n)] += c.counit()[cc];
        for (const auto& x : c.terms(cc)) {
          const Vector& w = mv(a, b, x.left);
          for (std::size_t l = 0; l < n; ++l)
            if (!w[l].is_zero()) v[pair_index(l, x.right, n)] -= x.coef * w[l];
        }
        generators.push_back(std::move(v));
      }
  SubspaceBasis coideal = SubspaceBasis::span(f, nn, generators);
  QuotientData q = quotient(coideal);
  std::size_t qd = q.quotient_dim();

  // (pi (x) pi) Delta on the ambient space.
  auto project_coproduct = [&](std::span<const Scalar> v) {
    Vector d = ambient.coproduct(v);
    Vector out = zero_vector(f, qd * qd);
    for (std::size_t pq = 0; pq < nn * nn; ++pq) {
      if (d[pq].is_zero()) continue;
      std::size_t p = pq / nn, r = pq % nn;
      for (std::size_t x = 0; x < qd; ++x) {
        const Scalar& px = q.projection(x, p);
        if (px.is_zero()) continue;
        for (std::size_t y = 0; y < qd; ++y) {
          const Scalar& py = q.projection(y, r);
          if (!py.is_zero()) out[x * qd + y] += d[pq] * px * py;
        }
      }
    }
    return out;
  };

  for (std::size_t k = 0; k < coideal.dim(); ++k) {
    const auto& v = coideal.vectors()[k];
    if (!ambient.counit_of(v).is_zero()) {
      throw ConstructionError("I is not a coideal: the counit does not vanish on basis vector " +
                              std::to_string(k));
    }
    if (!is_zero(project_coproduct(v))) {
      throw ConstructionError("I is not a coideal: Delta(I) is not inside I (x) A + A (x) I");
    }
  }

  auto mul_rep = [&](std::span<const Scalar> x, std::span<const Scalar> y) {
    Vector out = zero_vector(f, nn);
    for (std::size_t ab = 0; ab < nn; ++ab) {
      if (x[ab].is_zero()) continue;
      for (std::size_t cd = 0; cd < nn; ++cd) {
        if (y[cd].is_zero()) continue;
        Scalar w = x[ab] * y[cd];
        const Vector& m = mv(ab / n, ab % n, cd / n);
        for (std::size_t l = 0; l < n; ++l)
          if (!m[l].is_zero()) out[pair_index(l, cd % n, n)] += w * m[l];
      }
    }
    return out;
  };
  auto unit_rep = [&](std::span<const Scalar> e) {
    Vector out = zero_vector(f, nn);
    for (const auto& d : coproduct_terms(c, e)) out[pair_index(d.left, d.right, n)] += d.coef;
    return out;
  };
  auto antipode_rep = [&](std::span<const Scalar> x, std::span<const Scalar> e) {
    Vector out = zero_vector(f, nn);
    auto de = coproduct_terms(c, e);
    for (std::size_t ab = 0; ab < nn; ++ab) {
      if (x[ab].is_zero()) continue;
      for (const auto& d : de) {
        const Vector& m = mv(ab / n, ab % n, d.right);
        for (std::size_t l = 0; l < n; ++l)
          if (!m[l].is_zero()) out[pair_index(d.left, l, n)] += x[ab] * d.coef * m[l];
      }
    }
    return out;
  };

  Vector e = canonical_unit_element(c);
  std::vector<Vector> reps;
  for (std::size_t k = 0; k < qd; ++k) reps.push_back(q.section.column(k));

  for (const auto& v : coideal.vectors()) {
    for (std::size_t p = 0; p < nn; ++p) {
      Vector ep = unit_vector(f, nn, p);
      if (!is_zero(q.project(mul_rep(v, ep))) || !is_zero(q.project(mul_rep(ep, v)))) {
        throw ConstructionError("product of classes depends on the representative");
      }
    }
    if (!is_zero(q.project(antipode_rep(v, e)))) {
      throw ConstructionError("antipode of classes depends on the representative");
    }
  }

  Tensor comul(f, {qd, qd, qd});
  Vector counit = zero_vector(f, qd);
  Tensor mult(f, {qd, qd, qd});
  Matrix s(f, qd, qd);
  for (std::size_t k = 0; k < qd; ++k) {
    counit[k] = ambient.counit_of(reps[k]);
    Vector d = project_coproduct(reps[k]);
    for (std::size_t xy = 0; xy < qd * qd; ++xy) comul(k, xy / qd, xy % qd) = d[xy];
    for (std::size_t l = 0; l < qd; ++l) {
      Vector prod = q.project(mul_rep(reps[k], reps[l]));
      for (std::size_t r = 0; r < qd; ++r) mult(k, l, r) = prod[r];
    }
    Vector sk = q.project(antipode_rep(reps[k], e));
    for (std::size_t r = 0; r < qd; ++r) s(r, k) = sk[r];
  }
  Vector unit = q.project(unit_rep(e));

  for (const auto& other : unit_elements(c)) {
    if (q.project(unit_rep(other)) != unit) {
      throw VerificationError("unit of the quotient depends on the unit element");
    }
    for (std::size_t k = 0; k < qd; ++k) {
      if (q.project(antipode_rep(reps[k], other)) != s.column(k)) {
        throw VerificationError("antipode of the quotient depends on the unit element");
      }
    }
  }

  std::vector<std::string> labels;
  for (std::size_t idx : q.complement_indices) labels.push_back("[" + ambient.label(idx) + "]");
  HopfAlgebraData hopf(Coalgebra(f, std::move(comul), std::move(counit), std::move(labels)),
                       std::move(mult), std::move(unit), std::move(s));
  if (auto r = check_bialgebra(hopf); !r) {
    throw ConstructionError("quotient is not a bialgebra: " + r.summary());
  }
  if (auto r = check_antipode(hopf, *hopf.antipode()); !r) {
    throw ConstructionError("quotient antipode fails: " + r.summary());
  }
  return {std::move(ambient), std::move(coideal), std::move(q), std::move(hopf)};
}

Matrix ehresmann_iso_left_translations(const EhresmannHopf& e, const TranslationAlgebra& left) {
  if (left.side != Side::Left) throw ShapeError("expected the left translation algebra");
  const auto& f = left.heap.field();
  std::size_t n = left.heap.dim();
  if (e.ambient.dim() != n * n) throw ShapeError("quotient and translations come from different heaps");
  auto image = [&](std::span<const Scalar> v) {
    Vector out = zero_vector(f, left.dim());
    for (std::size_t p = 0; p < n * n; ++p)
      if (!v[p].is_zero()) axpy(out, v[p], left.coords(p / n, p % n));
    return out;
  };
  for (const auto& v : e.coideal.vectors()) {
    if (!is_zero(image(v))) {
      throw ConstructionError("a (x) b -> sigma^a_b does not vanish on I");
    }
  }
  std::size_t qd = e.quotient.quotient_dim();
  Matrix phi(f, left.dim(), qd);
  for (std::size_t k = 0; k < qd; ++k) {
    Vector col = image(e.quotient.section.column(k));
    for (std::size_t r = 0; r < left.dim(); ++r) phi(r, k) = col[r];
  }
  if (auto r = check_hopf_morphism(phi, e.hopf, left.hopf); !r) {
    throw VerificationError("quotient to left translations: " + r.summary());
  }
  if (phi.rows() != phi.cols() || !inverse(phi)) {
    throw VerificationError("quotient to left translations is not bijective");
  }
  return phi;
}

HeapWithGrunspan heap_from_galois(const GaloisCoObject& g) {
  const auto& f = g.c.field();
  std::size_t n = g.c.dim();
  CotranslationTable t = cotranslation(g);
  Tensor chi(f, {n, n, n, n});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t cc = 0; cc < n; ++cc) {
        Vector v = g.act(unit_vector(f, n, a), t.tau(b, cc));
        for (std::size_t l = 0; l < n; ++l) chi(a, b, cc, l) = v[l];
      }
  HopfHeap heap(g.c, std::move(chi));
  if (auto r = check_hopf_heap(heap); !r) {
    throw ConstructionError("bracket from the cotranslation map is not a Hopf heap: " + r.summary());
  }
  Matrix s = g.h.antipode() ? *g.h.antipode() : antipode_from_galois(g);
  Matrix theta(f, n, n);
  for (std::size_t cc = 0; cc < n; ++cc) {
    Vector col = zero_vector(f, n);
    for (const auto& x : g.c.iterated(cc, 3)) {
      Vector st = s.apply(t.tau(x.legs[2], x.legs[1]));
      axpy(col, x.coef, g.act(unit_vector(f, n, x.legs[0]), st));
    }
    for (std::size_t l = 0; l < n; ++l) theta(l, cc) = col[l];
  }
  if (auto r = check_grunspan(heap, theta); !r) {
    throw VerificationError("Grunspan map from the cotranslation map fails: " + r.summary());
  }
  if (!(grunspan_map(heap) == theta)) {
    throw VerificationError("Grunspan map from the cotranslation map differs from grunspan_map");
  }
  return {std::move(heap), std::move(theta)};
}

GaloisCoObject galois_from_translations(const TranslationAlgebra& right) {
  if (right.side != Side::Right) throw ShapeError("expected the right translation algebra");
  const auto& f = right.heap.field();
  const auto& c = right.heap.coalgebra();
  std::size_t n = c.dim();
  std::size_t m = right.dim();
  GaloisCoObject g{c, right.hopf, right.action};
  if (auto r = check_galois(g); !r) {
    throw ConstructionError("heap with its right translations is not Galois: " + r.summary());
  }
  auto inv = inverse(canonical_map(g));
  Matrix closed(f, n * m, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& x : c.terms(a)) {
        Vector tau = right.coords(x.right, b);
        for (std::size_t p = 0; p < m; ++p)
          if (!tau[p].is_zero()) closed(x.left * m + p, pair_index(a, b, n)) += x.coef * tau[p];
      }
  if (!inv || !(*inv == closed)) {
    throw VerificationError("inverse canonical map differs from a (x) b -> sum a1 (x) tau_{a2}^b");
  }
  return g;
}

GaloisCoObject galois_from_heap(const HopfHeap& h) {
  return galois_from_translations(build_right_translations(h));
}

GaloisCoObject regular_galois(const HopfAlgebraData& h) {
  return {h.coalgebra(), h, h.mult()};
}

PhiIso phi_iso(const GaloisCoObject& g0) {
  GaloisCoObject g = with_galois_antipode(g0);
  const auto& f = g.c.field();
  std::size_t n = g.c.dim();
  std::size_t m = g.h.dim();
  CotranslationTable t = cotranslation(g);
  HeapWithGrunspan hg = heap_from_galois(g);
  TranslationAlgebra tr = build_right_translations(hg.heap);

  Matrix values(f, m, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector v = t.tau(a, b);
      for (std::size_t r = 0; r < m; ++r) values(r, pair_index(a, b, n)) = v[r];
    }
  Matrix forward = tr.descend(values, "tau_a^b -> tau(a (x) b)");

  auto de = coproduct_terms(g.c, canonical_unit_element(g.c));
  Matrix backward(f, tr.dim(), m);
  for (std::size_t j = 0; j < m; ++j) {
    Vector col = zero_vector(f, tr.dim());
    for (const auto& d : de) {
      Vector x = g.act(unit_vector(f, n, d.right), unit_vector(f, m, j));
      for (std::size_t l = 0; l < n; ++l)
        if (!x[l].is_zero()) axpy(col, d.coef * x[l], tr.coords(d.left, l));
    }
    for (std::size_t r = 0; r < tr.dim(); ++r) backward(r, j) = col[r];
  }

  if (auto r = check_hopf_morphism(forward, tr.hopf, g.h); !r) {
    throw VerificationError("translations to H: " + r.summary());
  }
  if (forward.rows() != forward.cols() || !(forward * backward).is_identity() ||
      !(backward * forward).is_identity()) {
    throw VerificationError("translations to H and h -> tau_{e1}^{e2.h} are not inverse");
  }
  for (std::size_t cc = 0; cc < n; ++cc)
    for (std::size_t p = 0; p < tr.dim(); ++p) {
      Vector ep = unit_vector(f, tr.dim(), p);
      Vector ec = unit_vector(f, n, cc);
      if (tr.act(ep, ec) != g.act(ec, forward.column(p))) {
        throw VerificationError("translations to H do not respect the action on C");
      }
    }
  return {std::move(tr), std::move(forward), std::move(backward)};
}

Report check_galois_morphism(const Matrix& fc, const Matrix& gh, const GaloisCoObject& source,
                             const GaloisCoObject& target) {
  const std::string name = "galois-morphism";
  std::size_t ns = source.c.dim(), nt = target.c.dim();
  std::size_t ms = source.h.dim(), mt = target.h.dim();
  if (fc.rows() != nt || fc.cols() != ns) throw ShapeError("coalgebra map must be dim D x dim C");
  if (gh.rows() != mt || gh.cols() != ms) throw ShapeError("Hopf map must be dim K x dim H");
  if (auto r = check_coalgebra_morphism(source.c, target.c, fc); !r) {
    r.check = name;
    return r;
  }
  if (auto r = check_hopf_morphism(gh, source.h, target.h); !r) {
    r.check = name;
    return r;
  }
  const auto& f = source.c.field();
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = 0; j < ms; ++j) {
      Vector lhs = fc.apply(source.act(unit_vector(f, ns, i), unit_vector(f, ms, j)));
      Vector rhs = target.act(fc.column(i), gh.column(j));
      if (lhs != rhs) {
        return Report::failure(name, "action-compatibility", {i, j}, "f(c.h) != f(c).g(h)");
      }
    }
  CotranslationTable ts = cotranslation(source);
  CotranslationTable tt = cotranslation(target);
  for (std::size_t a = 0; a < ns; ++a)
    for (std::size_t b = 0; b < ns; ++b) {
      Vector lhs = tt.tau(fc.column(a), fc.column(b));
      Vector rhs = gh.apply(ts.tau(a, b));
      if (lhs != rhs) {
        return Report::failure(name, "cotranslation-compatibility", {a, b},
                               "tau_D(f a (x) f b) != g(tau_C(a (x) b))");
      }
    }
  return Report::success(name);
}

Report check_phi_naturality(const Matrix& fc, const Matrix& gh, const GaloisCoObject& source,
                            const GaloisCoObject& target) {
  const std::string name = "phi-naturality";
  try {
    PhiIso ps = phi_iso(source);
    PhiIso pt = phi_iso(target);
    HeapMorphism hm{ps.translations.heap, pt.translations.heap, fc};
    Matrix tn = induced_morphism(hm, ps.translations, pt.translations);
    Matrix lhs = gh * ps.forward;
    Matrix rhs = pt.forward * tn;
    for (std::size_t p = 0; p < lhs.cols(); ++p) {
      if (lhs.column(p) != rhs.column(p)) {
        return Report::failure(name, "naturality", {p}, "g o phi != phi o Tn f");
      }
    }
  } catch (const ConstructionError& e) {
    return Report::failure(name, "construction", {}, e.what());
  } catch (const VerificationError& e) {
    return Report::failure(name, "verification", {}, e.what());
  }
  return Report::success(name);
}

Report roundtrip_check(const HopfHeap& h, const std::vector<HeapMorphism>& morphisms) {
  const std::string name = "roundtrip";
  const auto& f = h.field();
  std::size_t n = h.dim();
  try {
    TranslationAlgebra right = build_right_translations(h);
    GaloisCoObject g = galois_from_translations(right);
    HeapWithGrunspan back = heap_from_galois(g);
    const auto& a = back.heap.chi().data();
    const auto& b = h.chi().data();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(a[i] == b[i])) {
        return Report::failure(name, "bracket-recovery", h.chi().unflatten(i),
                               "bracket of the Galois co-object differs from the heap");
      }
    }
    phi_iso(g);

    TranslationAlgebra left = build_left_translations(h);
    for (std::size_t p = 0; p < left.dim(); ++p)
      for (std::size_t q = 0; q < right.dim(); ++q)
        for (std::size_t x = 0; x < n; ++x) {
          Vector ep = unit_vector(f, left.dim(), p);
          Vector eq = unit_vector(f, right.dim(), q);
          Vector ex = unit_vector(f, n, x);
          if (right.act(eq, left.act(ep, ex)) != left.act(ep, right.act(eq, ex))) {
            return Report::failure(name, "bimodule-compatibility", {p, q, x},
                                   "(s.x).t != s.(x.t)");
          }
        }

    for (std::size_t k = 0; k < morphisms.size(); ++k) {
      const auto& mor = morphisms[k];
      if (!(mor.source == h)) throw ShapeError("morphism source is not the heap under test");
      if (auto r = check_heap_morphism(mor, grunspan_map(mor.source), grunspan_map(mor.target)); !r) {
        r.check = name;
        return r;
      }
      TranslationAlgebra target_right = build_right_translations(mor.target);
      GaloisCoObject gt = galois_from_translations(target_right);
      Matrix gh = induced_morphism(mor, right, target_right);
      if (auto r = check_galois_morphism(mor.map, gh, g, gt); !r) {
        r.check = name;
        return r;
      }
      if (auto r = check_phi_naturality(mor.map, gh, g, gt); !r) {
        r.check = name;
        return r;
      }
    }
  } catch (const ConstructionError& e) {
    return Report::failure(name, "construction", {}, e.what());
  } catch (const VerificationError& e) {
    return Report::failure(name, "verification", {}, e.what());
  }
  return Report::success(name);
}

}  // namespace hopfheap
