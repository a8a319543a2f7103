#include "hopfheap/tensor.hpp"

#include <sstream>

#include "hopfheap/errors.hpp"

namespace hopfheap {

Tensor::Tensor(const FieldSpec& field, std::vector<std::size_t> shape)
    : field_(field), shape_(std::move(shape)) {
  std::size_t total = 1;
  for (auto d : shape_) total *= d;
  data_.assign(total, Scalar::zero(field));
}

std::size_t Tensor::offset(std::initializer_list<std::size_t> idx) const {
  if (idx.size() != shape_.size()) throw ShapeError("tensor index has wrong rank");
  std::size_t flat = 0;
  std::size_t axis = 0;
  for (auto i : idx) {
    if (i >= shape_[axis]) throw ShapeError("tensor index out of range");
    flat = flat * shape_[axis] + i;
    ++axis;
  }
  return flat;
}

std::size_t Tensor::offset(const Index& idx) const {
  if (idx.size() != shape_.size()) throw ShapeError("tensor index has wrong rank");
  std::size_t flat = 0;
  for (std::size_t axis = 0; axis < idx.size(); ++axis) {
    if (idx[axis] >= shape_[axis]) throw ShapeError("tensor index out of range");
    flat = flat * shape_[axis] + idx[axis];
  }
  return flat;
}

std::span<const Scalar> Tensor::fiber(const Index& leading) const {
  if (leading.size() + 1 != shape_.size()) throw ShapeError("fiber: wrong number of indices");
  Index full = leading;
  full.push_back(0);
  return {data_.data() + offset(full), shape_.back()};
}

Index Tensor::unflatten(std::size_t flat) const {
  Index idx(shape_.size());
  for (std::size_t axis = shape_.size(); axis-- > 0;) {
    idx[axis] = flat % shape_[axis];
    flat /= shape_[axis];
  }
  return idx;
}

void Accumulator::add(const Index& key, const Scalar& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

std::optional<Index> Accumulator::first_difference(const Accumulator& other) const {
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (a == entries_.end()) return b->first;
    if (b == other.entries_.end()) return a->first;
    if (a->first < b->first) return a->first;
    if (b->first < a->first) return b->first;
    if (!(a->second == b->second)) return a->first;
    ++a;
    ++b;
  }
  return std::nullopt;
}

Report Report::success(std::string check) {
  Report r;
  r.check = std::move(check);
  return r;
}

Report Report::failure(std::string check, std::string axiom, Index witness, std::string detail) {
  Report r;
  r.check = std::move(check);
  r.pass = false;
  r.axiom = std::move(axiom);
  r.witness = std::move(witness);
  r.detail = std::move(detail);
  return r;
}

std::string format_index(const Index& idx) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << ')';
  return os.str();
}

std::string Report::summary() const {
  if (pass) return check + ": pass";
  std::string s = check + ": FAIL axiom=" + axiom + " witness=" + format_index(witness);
  if (!detail.empty()) s += " (" + detail + ")";
  return s;
}

}  // namespace hopfheap
