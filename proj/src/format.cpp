#include "hopfheap/format.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hopfheap/errors.hpp"

namespace hopfheap {

using nlohmann::json;

namespace {

// Programmatically built json stores small literals as signed integers.
bool is_natural(const json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

FieldSpec parse_field(const json& j) {
  if (j.is_string()) return FieldSpec::parse(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) throw ParseError("field must be an object with a \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "Fp") {
    if (!j.contains("p") || !is_natural(j.at("p"))) {
      throw ParseError("field Fp needs a positive integer \"p\"");
    }
    return FieldSpec::prime(j.at("p").get<std::uint64_t>());
  }
  throw ParseError("unknown field kind '" + kind + "'");
}

json field_json(const FieldSpec& f) {
  if (f.is_rational()) return {{"kind", "Q"}};
  return {{"kind", "Fp"}, {"p", f.modulus()}};
}

Scalar parse_scalar(const json& j, const FieldSpec& f) {
  if (!j.is_string()) throw ParseError("scalars must be written as strings, got " + j.dump());
  return Scalar::parse(j.get<std::string>(), f);
}

Vector parse_dense(const json& j, const FieldSpec& f, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) {
    throw ShapeError(what + " must be a list of " + std::to_string(n) + " scalars");
  }
  Vector v;
  for (const auto& x : j) v.push_back(parse_scalar(x, f));
  return v;
}

json dense_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Tensor parse_sparse(const json& j, const FieldSpec& f, const std::vector<std::size_t>& shape,
                    const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be a list of sparse entries");
  Tensor t(f, shape);
  std::set<Index> seen;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != shape.size() + 1) {
      throw ParseError(what + " entries must have " + std::to_string(shape.size()) +
                       " indices and a coefficient");
    }
    Index idx;
    for (std::size_t k = 0; k < shape.size(); ++k) {
      if (!is_natural(entry[k])) throw ParseError(what + " indices must be non-negative integers");
      std::size_t i = entry[k].get<std::size_t>();
      if (i >= shape[k]) {
        throw ShapeError(what + " index " + std::to_string(i) + " out of range " +
                         std::to_string(shape[k]));
      }
      idx.push_back(i);
    }
    if (!seen.insert(idx).second) throw ParseError(what + " repeats index " + format_index(idx));
    t.at(idx) = parse_scalar(entry[shape.size()], f);
  }
  return t;
}

json sparse_json(const Tensor& t) {
  json out = json::array();
  auto data = t.data();
  for (std::size_t flat = 0; flat < data.size(); ++flat) {
    if (data[flat].is_zero()) continue;
    json entry = json::array();
    for (auto i : t.unflatten(flat)) entry.push_back(i);
    entry.push_back(data[flat].to_string());
    out.push_back(std::move(entry));
  }
  return out;
}

StructureFile parse_object(const json& top) {
  if (!top.is_object()) throw ParseError("structure file must be a JSON object");
  const json& base = top.contains("coalgebra") ? top.at("coalgebra") : top;
  if (!base.is_object()) throw ParseError("\"coalgebra\" must be an object");
  StructureFile s;
  const json* field = base.contains("field") ? &base.at("field")
                      : top.contains("field") ? &top.at("field")
                                              : nullptr;
  if (!field) throw ParseError("missing \"field\"");
  s.field = parse_field(*field);
  if (!base.contains("dim") || !is_natural(base.at("dim"))) {
    throw ParseError("missing or invalid \"dim\"");
  }
  s.dim = base.at("dim").get<std::size_t>();
  if (s.dim == 0) throw ShapeError("dim must be positive");
  std::size_t n = s.dim;
  if (base.contains("basis_labels")) {
    s.basis_labels = base.at("basis_labels").get<std::vector<std::string>>();
    if (s.basis_labels.size() != n) throw ShapeError("basis_labels must have dim entries");
  }
  if (!base.contains("counit") || !base.contains("comul")) {
    throw ParseError("missing \"counit\" or \"comul\"");
  }
  s.counit = parse_dense(base.at("counit"), s.field, n, "counit");
  s.comul = parse_sparse(base.at("comul"), s.field, {n, n, n}, "comul");
  if (top.contains("heap")) s.heap = parse_sparse(top.at("heap"), s.field, {n, n, n, n}, "heap");
  if (top.contains("mult")) s.mult = parse_sparse(top.at("mult"), s.field, {n, n, n}, "mult");
  if (top.contains("unit")) s.unit = parse_dense(top.at("unit"), s.field, n, "unit");
  if (top.contains("antipode")) {
    Tensor t = parse_sparse(top.at("antipode"), s.field, {n, n}, "antipode");
    Matrix m(s.field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(j, i) = t(i, j);
    s.antipode = std::move(m);
  }
  if (top.contains("hopf")) {
    auto h = std::make_shared<StructureFile>(parse_object(top.at("hopf")));
    if (!(h->field == s.field)) throw ParseError("hopf sub-record uses a different field");
    s.hopf = std::move(h);
  }
  if (top.contains("action")) {
    if (!s.hopf) throw ParseError("\"action\" needs a \"hopf\" sub-record");
    s.action = parse_sparse(top.at("action"), s.field, {n, s.hopf->dim, n}, "action");
  }
  if (top.contains("quotient_of")) s.quotient_of = top.at("quotient_of").get<std::string>();
  return s;
}

}  // namespace

StructureFile parse_structure(const json& j) {
  try {
    return parse_object(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed structure file: ") + e.what());
  }
}

json to_json(const StructureFile& s) {
  json out;
  out["field"] = field_json(s.field);
  out["dim"] = s.dim;
  if (!s.basis_labels.empty()) out["basis_labels"] = s.basis_labels;
  out["counit"] = dense_json(s.counit);
  out["comul"] = sparse_json(s.comul);
  if (s.heap) out["heap"] = sparse_json(*s.heap);
  if (s.mult) out["mult"] = sparse_json(*s.mult);
  if (s.unit) out["unit"] = dense_json(*s.unit);
  if (s.antipode) {
    Tensor t(s.field, {s.dim, s.dim});
    for (std::size_t i = 0; i < s.dim; ++i)
      for (std::size_t j = 0; j < s.dim; ++j) t(i, j) = (*s.antipode)(j, i);
    out["antipode"] = sparse_json(t);
  }
  if (s.hopf) out["hopf"] = to_json(*s.hopf);
  if (s.action) out["action"] = sparse_json(*s.action);
  if (s.quotient_of) out["quotient_of"] = *s.quotient_of;
  return out;
}

StructureFile structure_of(const Coalgebra& c) {
  StructureFile s;
  s.field = c.field();
  s.dim = c.dim();
  s.basis_labels = c.labels();
  s.counit = c.counit();
  s.comul = c.comul();
  return s;
}

StructureFile structure_of(const HopfHeap& h) {
  StructureFile s = structure_of(h.coalgebra());
  s.heap = h.chi();
  return s;
}

StructureFile structure_of(const HopfAlgebraData& h) {
  StructureFile s = structure_of(h.coalgebra());
  s.mult = h.mult();
  s.unit = h.unit();
  s.antipode = h.antipode();
  return s;
}

StructureFile structure_of(const GaloisCoObject& g) {
  StructureFile s = structure_of(g.c);
  s.hopf = std::make_shared<StructureFile>(structure_of(g.h));
  s.action = g.action;
  return s;
}

Coalgebra coalgebra_of(const StructureFile& s) {
  return Coalgebra(s.field, s.comul, s.counit, s.basis_labels);
}

HopfHeap heap_of(const StructureFile& s) {
  if (!s.heap) throw ParseError("file has no \"heap\" section");
  return HopfHeap(coalgebra_of(s), *s.heap);
}

HopfAlgebraData hopf_of(const StructureFile& s) {
  if (!s.mult || !s.unit) throw ParseError("file has no \"mult\" and \"unit\" sections");
  return HopfAlgebraData(coalgebra_of(s), *s.mult, *s.unit, s.antipode);
}

GaloisCoObject galois_of(const StructureFile& s) {
  if (!s.hopf || !s.action) throw ParseError("file has no \"hopf\" and \"action\" sections");
  return {coalgebra_of(s), hopf_of(*s.hopf), *s.action};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": invalid JSON: " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw Error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace hopfheap
