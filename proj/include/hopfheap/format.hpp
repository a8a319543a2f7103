#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "hopfheap/galois.hpp"

namespace hopfheap {

/// In-memory form of a structure file.  Tensors use the library's index
/// conventions; the antipode is stored as a matrix with S(e_c) in column c.
/// On disk every sparse entry is [indices..., "coefficient"], sorted by index
/// tuple, and the antipode entry [i, j, "c"] is the coefficient of e_j in
/// S(e_i).
struct StructureFile {
  FieldSpec field = FieldSpec::rationals();
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  Vector counit;
  Tensor comul{FieldSpec::rationals(), {0, 0, 0}};
  std::optional<Tensor> heap;
  std::optional<Tensor> mult;
  std::optional<Vector> unit;
  std::optional<Matrix> antipode;
  std::optional<Tensor> action;
  std::shared_ptr<const StructureFile> hopf;
  std::optional<std::string> quotient_of;
};

/// Throws ParseError on malformed input and ShapeError on indices out of range.
StructureFile parse_structure(const nlohmann::json& j);
nlohmann::json to_json(const StructureFile& s);

StructureFile structure_of(const Coalgebra& c);
StructureFile structure_of(const HopfHeap& h);
StructureFile structure_of(const HopfAlgebraData& h);
StructureFile structure_of(const GaloisCoObject& g);

Coalgebra coalgebra_of(const StructureFile& s);
/// Throw ParseError when the required sections are missing.
HopfHeap heap_of(const StructureFile& s);
HopfAlgebraData hopf_of(const StructureFile& s);
GaloisCoObject galois_of(const StructureFile& s);

/// Two-space indented JSON with a trailing newline.  Object keys are sorted.
std::string dump(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file, then renames it over path.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace hopfheap
