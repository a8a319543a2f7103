#include "hopfheap/hopf_algebra.hpp"

#include "hopfheap/errors.hpp"

namespace hopfheap {

HopfAlgebraData::HopfAlgebraData(Coalgebra coalgebra, Tensor mult, Vector unit,
                                 std::optional<Matrix> antipode)
    : coalgebra_(std::move(coalgebra)),
      mult_(std::move(mult)),
      unit_(std::move(unit)),
      antipode_(std::move(antipode)) {
  std::size_t n = coalgebra_.dim();
  if (mult_.shape() != std::vector<std::size_t>{n, n, n}) {
    throw ShapeError("multiplication tensor must have shape n x n x n with n = " +
                     std::to_string(n));
  }
  if (unit_.size() != n) throw ShapeError("unit vector length differs from dimension");
  if (antipode_ && (antipode_->rows() != n || antipode_->cols() != n)) {
    throw ShapeError("antipode must be an n x n matrix");
  }
  products_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!mult_(i, j, k).is_zero()) products_[i * n + j].push_back({k, mult_(i, j, k)});
}

Vector HopfAlgebraData::multiply(std::span<const Scalar> a, std::span<const Scalar> b) const {
  std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw ShapeError("multiply: vector length differs");
  Vector out = zero_vector(field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& t : product(i, j)) out[t.index] += ab * t.coef;
    }
  }
  return out;
}

HopfAlgebraData HopfAlgebraData::with_antipode(Matrix antipode) const {
  return HopfAlgebraData(coalgebra_, mult_, unit_, std::move(antipode));
}

namespace {

Vector sparse_to_dense(const FieldSpec& f, std::size_t n, const SparseVector& v) {
  Vector out = zero_vector(f, n);
  for (const auto& t : v) out[t.index] += t.coef;
  return out;
}

}  // namespace

Report check_bialgebra(const HopfAlgebraData& h) {
  const std::string name = "bialgebra";
  if (auto r = check_coalgebra(h.coalgebra()); !r) {
    r.check = name;
    return r;
  }
  const auto& f = h.field();
  const auto& c = h.coalgebra();
  std::size_t n = h.dim();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector left = zero_vector(f, n), right = zero_vector(f, n);
        for (const auto& t : h.product(i, j))
          for (const auto& u : h.product(t.index, k)) left[u.index] += t.coef * u.coef;
        for (const auto& t : h.product(j, k))
          for (const auto& u : h.product(i, t.index)) right[u.index] += t.coef * u.coef;
        if (left != right) {
          return Report::failure(name, "associativity", {i, j, k},
                                 "(ab)c != a(bc) for a,b,c = " + c.label(i) + "," + c.label(j) +
                                     "," + c.label(k));
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    Vector e = unit_vector(f, n, i);
    if (h.multiply(h.unit(), e) != e) {
      return Report::failure(name, "unit-left", {i}, "1 a != a for a = " + c.label(i));
    }
    if (h.multiply(e, h.unit()) != e) {
      return Report::failure(name, "unit-right", {i}, "a 1 != a for a = " + c.label(i));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector ij = sparse_to_dense(f, n, h.product(i, j));
      if (!(c.counit_of(ij) == c.counit()[i] * c.counit()[j])) {
        return Report::failure(name, "counit-multiplicativity", {i, j},
                               "epsilon(ab) != epsilon(a)epsilon(b)");
      }
      Vector lhs = c.coproduct(ij);
      Vector rhs = zero_vector(f, n * n);
      for (const auto& a : c.terms(i)) {
        for (const auto& b : c.terms(j)) {
          Scalar ab = a.coef * b.coef;
          for (const auto& l : h.product(a.left, b.left))
            for (const auto& r : h.product(a.right, b.right))
              rhs[l.index * n + r.index] += ab * l.coef * r.coef;
        }
      }
      for (std::size_t pq = 0; pq < n * n; ++pq) {
        if (!(lhs[pq] == rhs[pq])) {
          return Report::failure(name, "comultiplicativity", {i, j, pq / n, pq % n},
                                 "Delta(ab) != Delta(a)Delta(b) for a,b = " + c.label(i) + "," +
                                     c.label(j));
        }
      }
    }
  }

  if (!c.counit_of(h.unit()).is_one()) {
    return Report::failure(name, "counit-of-unit", {}, "epsilon(1) != 1");
  }
  Vector delta_unit = c.coproduct(h.unit());
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (!(delta_unit[p * n + q] == h.unit()[p] * h.unit()[q])) {
        return Report::failure(name, "coproduct-of-unit", {p, q}, "Delta(1) != 1 x 1");
      }
    }
  }
  return Report::success(name);
}

Report check_antipode(const HopfAlgebraData& h, const Matrix& s) {
  const std::string name = "antipode";
  std::size_t n = h.dim();
  if (s.rows() != n || s.cols() != n) throw ShapeError("antipode must be an n x n matrix");
  const auto& f = h.field();
  const auto& c = h.coalgebra();
  for (std::size_t i = 0; i < n; ++i) {
    Vector expected = h.unit();
    for (auto& x : expected) x *= c.counit()[i];
    Vector left = zero_vector(f, n), right = zero_vector(f, n);
    for (const auto& t : c.terms(i)) {
      Vector sl = s.column(t.left);
      Vector sr = s.column(t.right);
      Vector a = h.multiply(sl, unit_vector(f, n, t.right));
      Vector b = h.multiply(unit_vector(f, n, t.left), sr);
      axpy(left, t.coef, a);
      axpy(right, t.coef, b);
    }
    if (left != expected) {
      return Report::failure(name, "antipode-left", {i},
                             "S(h_(1)) h_(2) != epsilon(h) 1 for h = " + c.label(i));
    }
    if (right != expected) {
      return Report::failure(name, "antipode-right", {i},
                             "h_(1) S(h_(2)) != epsilon(h) 1 for h = " + c.label(i));
    }
  }
  return Report::success(name);
}

std::optional<Matrix> solve_antipode(const HopfAlgebraData& h) {
  std::size_t n = h.dim();
  const auto& f = h.field();
  const auto& c = h.coalgebra();
  // Unknown S(r, j) sits at r * n + j; equation (i, k) is the e_k-coordinate
  // of sum S(e_(i1)) e_(i2) = epsilon(e_i) 1.
  Matrix system(f, n * n, n * n);
  Vector rhs = zero_vector(f, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) rhs[i * n + k] = c.counit()[i] * h.unit()[k];
    for (const auto& t : c.terms(i)) {
      for (std::size_t r = 0; r < n; ++r) {
        for (const auto& p : h.product(r, t.right)) {
          system(i * n + p.index, r * n + t.left) += t.coef * p.coef;
        }
      }
    }
  }
  auto x = solve(system, rhs);
  if (!x) return std::nullopt;
  Matrix s(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) s(r, j) = (*x)[r * n + j];
  if (!check_antipode(h, s)) return std::nullopt;
  return s;
}

HopfAlgebraData with_solved_antipode(const HopfAlgebraData& h) {
  auto s = solve_antipode(h);
  if (!s) throw ConstructionError("bialgebra has no antipode");
  return h.with_antipode(std::move(*s));
}

Report check_hopf_morphism(const Matrix& f, const HopfAlgebraData& source,
                           const HopfAlgebraData& target) {
  const std::string name = "hopf-morphism";
  if (f.rows() != target.dim() || f.cols() != source.dim()) {
    throw ShapeError("Hopf morphism matrix must be dim(target) x dim(source)");
  }
  if (auto r = check_coalgebra_morphism(source.coalgebra(), target.coalgebra(), f); !r) {
    r.check = name;
    return r;
  }
  if (f.apply(source.unit()) != target.unit()) {
    return Report::failure(name, "unitality", {}, "f(1) != 1");
  }
  const auto& fld = source.field();
  std::size_t n = source.dim();
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(f.column(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = f.apply(sparse_to_dense(fld, n, source.product(i, j)));
      Vector rhs = target.multiply(images[i], images[j]);
      if (lhs != rhs) {
        return Report::failure(name, "multiplicativity", {i, j}, "f(ab) != f(a)f(b)");
      }
    }
  }
  if (source.antipode() && target.antipode()) {
    Matrix lhs = *target.antipode() * f;
    Matrix rhs = f * *source.antipode();
    for (std::size_t i = 0; i < n; ++i) {
      if (lhs.column(i) != rhs.column(i)) {
        return Report::failure(name, "antipode-compatibility", {i}, "S(f(a)) != f(S(a))");
      }
    }
  }
  return Report::success(name);
}

}  // namespace hopfheap
