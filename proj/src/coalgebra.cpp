#include "hopfheap/coalgebra.hpp"

#include <map>

#include "hopfheap/errors.hpp"

namespace hopfheap {

Coalgebra::Coalgebra(const FieldSpec& field, Tensor comul, Vector counit,
                     std::vector<std::string> labels)
    : field_(field),
      dim_(counit.size()),
      comul_(std::move(comul)),
      counit_(std::move(counit)),
      labels_(std::move(labels)) {
  if (dim_ == 0) throw ShapeError("coalgebra must have dimension at least one");
  if (comul_.shape() != std::vector<std::size_t>{dim_, dim_, dim_}) {
    throw ShapeError("comultiplication tensor must have shape n x n x n with n = " +
                     std::to_string(dim_));
  }
  if (!(comul_.field() == field_)) throw FieldMismatchError("comultiplication tensor field");
  for (const auto& s : counit_) {
    if (!(s.field() == field_)) throw FieldMismatchError("counit field");
  }
  if (!labels_.empty() && labels_.size() != dim_) {
    throw ShapeError("basis label count differs from dimension");
  }
  terms_.resize(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = comul_(i, j, k);
        if (!c.is_zero()) terms_[i].push_back({j, k, c});
      }
    }
  }
}

Coalgebra Coalgebra::grouplike(const FieldSpec& field, std::size_t n) {
  Tensor d(field, {n, n, n});
  for (std::size_t i = 0; i < n; ++i) d(i, i, i) = Scalar::one(field);
  return Coalgebra(field, std::move(d), Vector(n, Scalar::one(field)));
}

std::string Coalgebra::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "e" + std::to_string(i);
}

std::vector<MultiTerm> Coalgebra::iterated(std::size_t i, std::size_t legs) const {
  if (legs == 0) throw ShapeError("iterated coproduct needs at least one leg");
  std::map<Index, Scalar> current{{Index{i}, Scalar::one(field_)}};
  for (std::size_t step = 1; step < legs; ++step) {
    std::map<Index, Scalar> next;
    for (const auto& [idx, coef] : current) {
      for (const auto& t : terms_[idx.back()]) {
        Index grown(idx.begin(), idx.end() - 1);
        grown.push_back(t.left);
        grown.push_back(t.right);
        auto [it, inserted] = next.try_emplace(grown, coef * t.coef);
        if (!inserted) it->second += coef * t.coef;
      }
    }
    current.clear();
    for (auto& [idx, coef] : next) {
      if (!coef.is_zero()) current.emplace(idx, std::move(coef));
    }
  }
  std::vector<MultiTerm> out;
  out.reserve(current.size());
  for (auto& [idx, coef] : current) out.push_back({idx, coef});
  return out;
}

Scalar Coalgebra::counit_of(std::span<const Scalar> v) const {
  if (v.size() != dim_) throw ShapeError("counit_of: vector length differs from dimension");
  Scalar s = Scalar::zero(field_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!v[i].is_zero()) s += v[i] * counit_[i];
  }
  return s;
}

Vector Coalgebra::coproduct(std::span<const Scalar> v) const {
  if (v.size() != dim_) throw ShapeError("coproduct: vector length differs from dimension");
  Vector out = zero_vector(field_, dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : terms_[i]) out[t.left * dim_ + t.right] += v[i] * t.coef;
  }
  return out;
}

Matrix Coalgebra::coproduct_matrix() const {
  Matrix m(field_, dim_ * dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (const auto& t : terms_[i]) m(t.left * dim_ + t.right, i) = t.coef;
  return m;
}

Report check_coalgebra(const Coalgebra& c) {
  const std::string name = "coalgebra";
  const auto& f = c.field();
  std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Accumulator lhs(f), rhs(f);
    for (const auto& outer : c.terms(i)) {
      // (Delta (x) id) Delta
      for (const auto& inner : c.terms(outer.left)) {
        lhs.add({inner.left, inner.right, outer.right}, outer.coef * inner.coef);
      }
      // (id (x) Delta) Delta
      for (const auto& inner : c.terms(outer.right)) {
        rhs.add({outer.left, inner.left, inner.right}, outer.coef * inner.coef);
      }
    }
    if (auto diff = lhs.first_difference(rhs)) {
      Index w{i};
      w.insert(w.end(), diff->begin(), diff->end());
      return Report::failure(name, "coassociativity", w,
                             "(Delta x id)Delta and (id x Delta)Delta differ on " + c.label(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vector left = zero_vector(f, n), right = zero_vector(f, n);
    for (const auto& t : c.terms(i)) {
      left[t.right] += t.coef * c.counit()[t.left];
      right[t.left] += t.coef * c.counit()[t.right];
    }
    Vector expected = unit_vector(f, n, i);
    for (std::size_t k = 0; k < n; ++k) {
      if (!(left[k] == expected[k])) {
        return Report::failure(name, "counit-left", {i, k},
                               "sum epsilon(c_(1)) c_(2) != c for c = " + c.label(i));
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!(right[k] == expected[k])) {
        return Report::failure(name, "counit-right", {i, k},
                               "sum c_(1) epsilon(c_(2)) != c for c = " + c.label(i));
      }
    }
  }
  return Report::success(name);
}

Coalgebra co_opposite(const Coalgebra& c) {
  std::size_t n = c.dim();
  Tensor d(c.field(), {n, n, n});
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : c.terms(i)) d(i, t.right, t.left) = t.coef;
  return Coalgebra(c.field(), std::move(d), c.counit(), c.labels());
}

Coalgebra tensor_coalgebra(const Coalgebra& a, const Coalgebra& b) {
  if (!(a.field() == b.field())) throw FieldMismatchError("tensor_coalgebra: fields differ");
  const auto& f = a.field();
  std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  Tensor d(f, {n, n, n});
  Vector counit = zero_vector(f, n);
  std::vector<std::string> labels;
  bool labelled = !a.labels().empty() || !b.labels().empty();
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      std::size_t ij = i * nb + j;
      counit[ij] = a.counit()[i] * b.counit()[j];
      if (labelled) labels.push_back(a.label(i) + "|" + b.label(j));
      for (const auto& ta : a.terms(i)) {
        for (const auto& tb : b.terms(j)) {
          d(ij, ta.left * nb + tb.left, ta.right * nb + tb.right) += ta.coef * tb.coef;
        }
      }
    }
  }
  return Coalgebra(f, std::move(d), std::move(counit), std::move(labels));
}

bool is_grouplike(const Coalgebra& c, std::span<const Scalar> v) {
  if (v.size() != c.dim()) throw ShapeError("is_grouplike: vector length differs from dimension");
  if (!c.counit_of(v).is_one()) return false;
  Vector delta = c.coproduct(v);
  std::size_t n = c.dim();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      if (!(delta[j * n + k] == v[j] * v[k])) return false;
  return true;
}

GrouplikeScan grouplike_scan(const Coalgebra& c, const std::vector<Vector>& candidates) {
  GrouplikeScan scan;
  scan.note = "scanned " + std::to_string(c.dim()) + " basis vectors and " +
              std::to_string(candidates.size()) +
              " supplied candidates; grouplikes outside this set are not searched for";
  auto consider = [&](const Vector& v) {
    if (!is_grouplike(c, v)) return;
    for (const auto& g : scan.grouplikes) {
      if (g == v) return;
    }
    scan.grouplikes.push_back(v);
  };
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const Scalar& e = c.counit()[i];
    if (e.is_zero()) continue;
    Vector v = zero_vector(c.field(), c.dim());
    v[i] = e.inverse();
    consider(v);
  }
  for (const auto& cand : candidates) {
    Scalar e = c.counit_of(cand);
    if (e.is_zero()) continue;
    Vector v = cand;
    Scalar inv = e.inverse();
    for (auto& s : v) s *= inv;
    consider(v);
  }
  return scan;
}

std::vector<Vector> unit_elements(const Coalgebra& c) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const Scalar& e = c.counit()[i];
    if (e.is_zero()) continue;
    Vector v = zero_vector(c.field(), c.dim());
    v[i] = e.inverse();
    out.push_back(std::move(v));
  }
  return out;
}

Vector canonical_unit_element(const Coalgebra& c) {
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const Scalar& e = c.counit()[i];
    if (e.is_zero()) continue;
    Vector v = zero_vector(c.field(), c.dim());
    v[i] = e.inverse();
    return v;
  }
  throw ConstructionError("counit vanishes on every basis vector");
}

Report check_coalgebra_morphism(const Coalgebra& source, const Coalgebra& target,
                                const Matrix& f) {
  const std::string name = "coalgebra-morphism";
  if (f.rows() != target.dim() || f.cols() != source.dim()) {
    throw ShapeError("coalgebra morphism matrix must be dim(target) x dim(source)");
  }
  const auto& fld = source.field();
  std::size_t m = target.dim();
  for (std::size_t i = 0; i < source.dim(); ++i) {
    Vector image = f.column(i);
    Vector lhs = target.coproduct(image);
    Vector rhs = zero_vector(fld, m * m);
    for (const auto& t : source.terms(i)) {
      for (std::size_t p = 0; p < m; ++p) {
        const Scalar& fp = f(p, t.left);
        if (fp.is_zero()) continue;
        for (std::size_t q = 0; q < m; ++q) {
          const Scalar& fq = f(q, t.right);
          if (!fq.is_zero()) rhs[p * m + q] += t.coef * fp * fq;
        }
      }
    }
    for (std::size_t pq = 0; pq < m * m; ++pq) {
      if (!(lhs[pq] == rhs[pq])) {
        return Report::failure(name, "comultiplicativity", {i, pq / m, pq % m},
                               "Delta(f(" + source.label(i) + ")) != (f x f)Delta(" +
                                   source.label(i) + ")");
      }
    }
    if (!(target.counit_of(image) == source.counit()[i])) {
      return Report::failure(name, "counitality", {i},
                             "epsilon(f(" + source.label(i) + ")) != epsilon(" +
                                 source.label(i) + ")");
    }
  }
  return Report::success(name);
}

}  // namespace hopfheap
