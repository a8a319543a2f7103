#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hopfheap/scalar.hpp"

namespace hopfheap {

/// Coordinate vector with respect to some basis.
using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& field, std::size_t n);
Vector unit_vector(const FieldSpec& field, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
/// y += a * x
void axpy(Vector& y, const Scalar& a, std::span<const Scalar> x);

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  /// Rows given as vectors of equal length.
  static Matrix from_rows(const FieldSpec& field, std::size_t cols, const std::vector<Vector>& rows);
  /// Columns given as vectors of equal length.
  static Matrix from_columns(const FieldSpec& field, std::size_t rows,
                             const std::vector<Vector>& cols);
  /// Integer entries, for tests and generators.
  static Matrix from_ints(const FieldSpec& field, const std::vector<std::vector<long>>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Vector apply(std::span<const Scalar> v) const;
  bool is_identity() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivots are strictly increasing.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Solves m x = rhs with free variables set to zero; nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> rhs);
std::optional<Matrix> inverse(const Matrix& m);

/// A subspace of F^n, kept as the nonzero rows of its RREF basis.  The RREF
/// is unique, so two SubspaceBasis values are equal iff the spans are.
class SubspaceBasis {
 public:
  SubspaceBasis(const FieldSpec& field, std::size_t ambient_dim);

  static SubspaceBasis span(const FieldSpec& field, std::size_t ambient_dim,
                            const std::vector<Vector>& vectors);
  static SubspaceBasis row_space(const Matrix& m);
  /// Null space {x : m x = 0}.
  static SubspaceBasis kernel_of(const Matrix& m);
  static SubspaceBasis full(const FieldSpec& field, std::size_t ambient_dim);

  const FieldSpec& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return pivots_.size(); }
  const std::vector<Vector>& vectors() const { return vectors_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const SubspaceBasis& other) const;
  /// Coordinates of v in the RREF basis; nullopt if v is outside the span.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  /// v minus its reduction by the basis (zero iff v is in the span).
  Vector reduce(std::span<const Scalar> v) const;

  SubspaceBasis sum(const SubspaceBasis& other) const;
  SubspaceBasis intersect(const SubspaceBasis& other) const;

  friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b);

 private:
  void require_ambient(const SubspaceBasis& other) const;

  FieldSpec field_;
  std::size_t ambient_dim_;
  std::vector<Vector> vectors_;
  std::vector<std::size_t> pivots_;
};

/// F^n / W with the non-pivot coordinates of W's RREF as the complement.
struct QuotientData {
  std::size_t ambient_dim;
  SubspaceBasis subspace;
  std::vector<std::size_t> complement_indices;
  Matrix projection;  // quotient_dim x ambient_dim
  Matrix section;     // ambient_dim x quotient_dim

  std::size_t quotient_dim() const { return complement_indices.size(); }
  Vector project(std::span<const Scalar> v) const { return projection.apply(v); }
};

QuotientData quotient(const SubspaceBasis& sub);

/// Flat index of e_i (x) e_j in an n*n space, and back.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);
std::pair<std::size_t, std::size_t> pair_unindex(std::size_t flat, std::size_t n);

}  // namespace hopfheap
