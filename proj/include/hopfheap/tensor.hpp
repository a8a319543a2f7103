#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopfheap/scalar.hpp"

namespace hopfheap {

using Index = std::vector<std::size_t>;

/// Dense structure-constant tensor, row-major in its index order.
class Tensor {
 public:
  Tensor(const FieldSpec& field, std::vector<std::size_t> shape);

  const FieldSpec& field() const { return field_; }
  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return data_.size(); }

  template <class... I>
  Scalar& operator()(I... idx) {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  template <class... I>
  const Scalar& operator()(I... idx) const {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }

  Scalar& at(const Index& idx) { return data_[offset(idx)]; }
  const Scalar& at(const Index& idx) const { return data_[offset(idx)]; }

  /// Contiguous run over the last index, with the leading indices fixed.
  std::span<const Scalar> fiber(const Index& leading) const;

  std::span<const Scalar> data() const { return data_; }
  Index unflatten(std::size_t flat) const;

  friend bool operator==(const Tensor& a, const Tensor& b) = default;

 private:
  std::size_t offset(std::initializer_list<std::size_t> idx) const;
  std::size_t offset(const Index& idx) const;

  FieldSpec field_;
  std::vector<std::size_t> shape_;
  std::vector<Scalar> data_;
};

/// One nonzero coordinate of a sparse vector.
struct Term {
  std::size_t index;
  Scalar coef;
};
using SparseVector = std::vector<Term>;

/// Sparse multi-indexed sum, used to compare both sides of an identity.
class Accumulator {
 public:
  explicit Accumulator(const FieldSpec& field) : field_(field) {}

  void add(const Index& key, const Scalar& value);
  /// Smallest key (lexicographic) whose coefficients differ, if any.
  std::optional<Index> first_difference(const Accumulator& other) const;

 private:
  FieldSpec field_;
  std::map<Index, Scalar> entries_;
};

/// Result of an axiom check.  A failure carries the first violated axiom
/// (in a fixed check order) and the basis-index witness.
struct Report {
  std::string check;
  bool pass = true;
  std::string axiom;
  Index witness;
  std::string detail;

  static Report success(std::string check);
  static Report failure(std::string check, std::string axiom, Index witness,
                        std::string detail = {});

  explicit operator bool() const { return pass; }
  /// One-line human summary.
  std::string summary() const;
};

std::string format_index(const Index& idx);

}  // namespace hopfheap
