#include "hopfheap/linalg.hpp"

#include <string>

#include "hopfheap/errors.hpp"

namespace hopfheap {

Vector zero_vector(const FieldSpec& field, std::size_t n) {
  return Vector(n, Scalar::zero(field));
}

Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

void axpy(Vector& y, const Scalar& a, std::span<const Scalar> x) {
  if (y.size() != x.size()) throw ShapeError("axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& field, std::size_t rows,
                            const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw ShapeError("from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& field, const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("from_ints: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(field, rows[r][c]);
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) {
    throw ShapeError("apply: matrix has " + std::to_string(cols_) + " columns, vector has " +
                     std::to_string(v.size()) + " entries");
  }
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

bool Matrix::is_identity() const {
  return rows_ == cols_ && *this == identity(field_, rows_);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product: inner dimensions differ");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix sum: shapes differ");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix difference: shapes differ");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < r.rows() && r(sel, col).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != lead) {
      for (std::size_t c = col; c < r.cols(); ++c) std::swap(r(sel, c), r(lead, c));
    }
    Scalar inv = r(lead, col).inverse();
    for (std::size_t c = col; c < r.cols(); ++c) {
      if (!r(lead, c).is_zero()) r(lead, c) *= inv;
    }
    for (std::size_t row = 0; row < r.rows(); ++row) {
      if (row == lead || r(row, col).is_zero()) continue;
      Scalar factor = r(row, col);
      for (std::size_t c = col; c < r.cols(); ++c) {
        if (!r(lead, c).is_zero()) r(row, c) -= factor * r(lead, c);
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows()) {
    throw ShapeError("solve: matrix has " + std::to_string(m.rows()) + " rows, rhs has " +
                     std::to_string(rhs.size()));
  }
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  auto [red, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar::one(m.field());
  }
  auto [red, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

SubspaceBasis::SubspaceBasis(const FieldSpec& field, std::size_t ambient_dim)
    : field_(field), ambient_dim_(ambient_dim) {}

SubspaceBasis SubspaceBasis::row_space(const Matrix& m) {
  SubspaceBasis s(m.field(), m.cols());
  auto [red, pivots] = rref(m);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    auto row = red.row(i);
    s.vectors_.emplace_back(row.begin(), row.end());
  }
  s.pivots_ = std::move(pivots);
  return s;
}

SubspaceBasis SubspaceBasis::span(const FieldSpec& field, std::size_t ambient_dim,
                                  const std::vector<Vector>& vectors) {
  if (vectors.empty()) return SubspaceBasis(field, ambient_dim);
  return row_space(Matrix::from_rows(field, ambient_dim, vectors));
}

SubspaceBasis SubspaceBasis::full(const FieldSpec& field, std::size_t ambient_dim) {
  return row_space(Matrix::identity(field, ambient_dim));
}

SubspaceBasis SubspaceBasis::kernel_of(const Matrix& m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(m.field(), m.cols(), free);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
    basis.push_back(std::move(v));
  }
  return span(m.field(), m.cols(), basis);
}

void SubspaceBasis::require_ambient(const SubspaceBasis& other) const {
  if (ambient_dim_ != other.ambient_dim_ || !(field_ == other.field_)) {
    throw ShapeError("subspaces live in different ambient spaces");
  }
}

Vector SubspaceBasis::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim_) throw ShapeError("vector length differs from ambient dimension");
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(r, -c, vectors_[i]);
  }
  return r;
}

bool SubspaceBasis::contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

bool SubspaceBasis::contains(const SubspaceBasis& other) const {
  require_ambient(other);
  for (const auto& v : other.vectors_) {
    if (!contains(v)) return false;
  }
  return true;
}

std::optional<Vector> SubspaceBasis::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords;
  coords.reserve(pivots_.size());
  for (auto p : pivots_) coords.push_back(v[p]);
  return coords;
}

SubspaceBasis SubspaceBasis::sum(const SubspaceBasis& other) const {
  require_ambient(other);
  std::vector<Vector> all = vectors_;
  all.insert(all.end(), other.vectors_.begin(), other.vectors_.end());
  return span(field_, ambient_dim_, all);
}

SubspaceBasis SubspaceBasis::intersect(const SubspaceBasis& other) const {
  require_ambient(other);
  // Relations a.U + b.W = 0 give the intersection as a.U.
  std::size_t k = vectors_.size();
  std::vector<Vector> stacked = vectors_;
  stacked.insert(stacked.end(), other.vectors_.begin(), other.vectors_.end());
  if (stacked.empty()) return SubspaceBasis(field_, ambient_dim_);
  Matrix rows = Matrix::from_rows(field_, ambient_dim_, stacked);
  SubspaceBasis relations = kernel_of(rows.transpose());
  std::vector<Vector> out;
  for (const auto& rel : relations.vectors()) {
    Vector w = zero_vector(field_, ambient_dim_);
    for (std::size_t i = 0; i < k; ++i) axpy(w, rel[i], vectors_[i]);
    out.push_back(std::move(w));
  }
  return span(field_, ambient_dim_, out);
}

bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
  return a.field_ == b.field_ && a.ambient_dim_ == b.ambient_dim_ && a.pivots_ == b.pivots_ &&
         a.vectors_ == b.vectors_;
}

QuotientData quotient(const SubspaceBasis& sub) {
  const auto& field = sub.field();
  std::size_t n = sub.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : sub.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_pivot[i]) complement.push_back(i);
  }
  Matrix projection(field, complement.size(), n);
  Matrix section(field, n, complement.size());
  for (std::size_t q = 0; q < complement.size(); ++q) {
    std::size_t c = complement[q];
    projection(q, c) = Scalar::one(field);
    // v - sum_r v[p_r] row_r, read off at the complement coordinate c.
    for (std::size_t r = 0; r < sub.pivots().size(); ++r) {
      projection(q, sub.pivots()[r]) = -sub.vectors()[r][c];
    }
    section(c, q) = Scalar::one(field);
  }
  return QuotientData{n, sub, std::move(complement), std::move(projection), std::move(section)};
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i >= n || j >= n) {
    throw ShapeError("pair_index: (" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range for n=" + std::to_string(n));
  }
  return i * n + j;
}

std::pair<std::size_t, std::size_t> pair_unindex(std::size_t flat, std::size_t n) {
  if (n == 0 || flat >= n * n) throw ShapeError("pair_unindex: flat index out of range");
  return {flat / n, flat % n};
}

}  // namespace hopfheap
