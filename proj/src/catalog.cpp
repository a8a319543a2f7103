#include "hopfheap/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "hopfheap/errors.hpp"

namespace hopfheap {

namespace {

constexpr std::array<std::pair<GroupName, std::string_view>, 8> kGroupNames{{
    {GroupName::C1, "C1"},
    {GroupName::C2, "C2"},
    {GroupName::C3, "C3"},
    {GroupName::C4, "C4"},
    {GroupName::C5, "C5"},
    {GroupName::C6, "C6"},
    {GroupName::V4, "V4"},
    {GroupName::S3, "S3"},
}};

GroupTable from_mul(std::vector<std::vector<std::size_t>> mul) {
  GroupTable g;
  g.size = mul.size();
  g.mul = std::move(mul);
  for (std::size_t e = 0; e < g.size; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < g.size && ok; ++a) ok = g.mul[e][a] == a && g.mul[a][e] == a;
    if (ok) {
      g.identity = e;
      break;
    }
  }
  g.inverse.assign(g.size, 0);
  for (std::size_t a = 0; a < g.size; ++a)
    for (std::size_t b = 0; b < g.size; ++b)
      if (g.mul[a][b] == g.identity) g.inverse[a] = b;
  return g;
}

GroupTable cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return from_mul(std::move(mul));
}

GroupTable klein() {
  std::vector<std::vector<std::size_t>> mul(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) mul[a][b] = a ^ b;
  return from_mul(std::move(mul));
}

GroupTable symmetric3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::size_t n = perms.size();
  std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::array<std::size_t, 3> ab{};
      for (std::size_t x = 0; x < 3; ++x) ab[x] = perms[a][perms[b][x]];
      mul[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  return from_mul(std::move(mul));
}

std::vector<std::string> group_labels(GroupName name) {
  std::size_t n = group_table(name).size;
  std::vector<std::string> labels;
  if (name == GroupName::S3) return {"()", "(12)", "(01)", "(012)", "(021)", "(02)"};
  if (name == GroupName::V4) return {"1", "a", "b", "ab"};
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : "g^" + std::to_string(i));
  return labels;
}

void require_slot(const Tensor& t, const Index& slot) {
  if (slot.size() != t.rank()) throw ShapeError("perturb: slot rank differs from tensor rank");
  for (std::size_t k = 0; k < slot.size(); ++k) {
    if (slot[k] >= t.shape()[k]) throw ShapeError("perturb: slot " + format_index(slot) + " out of range");
  }
}

Tensor replaced(Tensor t, const Index& slot, const Scalar& value) {
  require_slot(t, slot);
  t.at(slot) = value;
  return t;
}

}  // namespace

std::string to_string(GroupName g) {
  for (const auto& [k, v] : kGroupNames)
    if (k == g) return std::string(v);
  return "?";
}

GroupName parse_group_name(std::string_view text) {
  for (const auto& [k, v] : kGroupNames)
    if (v == text) return k;
  throw ParseError("unknown group '" + std::string(text) + "' (expected C1..C6, V4 or S3)");
}

std::vector<GroupName> all_groups() {
  std::vector<GroupName> out;
  for (const auto& [k, v] : kGroupNames) out.push_back(k);
  return out;
}

GroupTable group_table(GroupName name) {
  switch (name) {
    case GroupName::C1: return cyclic(1);
    case GroupName::C2: return cyclic(2);
    case GroupName::C3: return cyclic(3);
    case GroupName::C4: return cyclic(4);
    case GroupName::C5: return cyclic(5);
    case GroupName::C6: return cyclic(6);
    case GroupName::V4: return klein();
    case GroupName::S3: return symmetric3();
  }
  throw ParseError("unknown group");
}

bool is_group(const GroupTable& g) {
  std::size_t n = g.size;
  if (n == 0 || g.mul.size() != n || g.inverse.size() != n || g.identity >= n) return false;
  for (const auto& row : g.mul) {
    if (row.size() != n) return false;
    for (auto x : row)
      if (x >= n) return false;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (g.mul[g.identity][a] != a || g.mul[a][g.identity] != a) return false;
    if (g.mul[a][g.inverse[a]] != g.identity || g.mul[g.inverse[a]][a] != g.identity) return false;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]]) return false;
  }
  return true;
}

bool is_abelian(const GroupTable& g) {
  for (std::size_t a = 0; a < g.size; ++a)
    for (std::size_t b = 0; b < g.size; ++b)
      if (g.mul[a][b] != g.mul[b][a]) return false;
  return true;
}

bool is_heap(const FiniteHeapTable& t) {
  std::size_t n = t.size;
  if (n == 0 || t.table.size() != n * n * n) return false;
  for (auto x : t.table)
    if (x >= n) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (t.at(x, x, y) != y || t.at(y, x, x) != y) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t e = 0; e < n; ++e)
            if (t.at(t.at(a, b, c), d, e) != t.at(a, b, t.at(c, d, e))) return false;
  return true;
}

FiniteHeapTable gen_heap_from_group(const GroupTable& g) {
  FiniteHeapTable t{g.size, std::vector<std::size_t>(g.size * g.size * g.size)};
  for (std::size_t x = 0; x < g.size; ++x)
    for (std::size_t y = 0; y < g.size; ++y)
      for (std::size_t z = 0; z < g.size; ++z)
        t.table[(x * g.size + y) * g.size + z] = g.mul[g.mul[x][g.inverse[y]]][z];
  return t;
}

HopfHeap linearize_heap(const FiniteHeapTable& t, const FieldSpec& field) {
  std::size_t n = t.size;
  Tensor chi(field, {n, n, n, n});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) chi(x, y, z, t.at(x, y, z)) = Scalar::one(field);
  return HopfHeap(Coalgebra::grouplike(field, n), std::move(chi));
}

TranslationGroup set_translation_group(const FiniteHeapTable& t) {
  std::size_t n = t.size;
  TranslationGroup out;
  std::map<std::vector<std::size_t>, std::size_t> index;
  out.generator.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<std::size_t> m(n);
      for (std::size_t c = 0; c < n; ++c) m[c] = t.at(c, a, b);
      auto [it, fresh] = index.emplace(m, out.maps.size());
      if (fresh) out.maps.push_back(m);
      out.generator[a * n + b] = it->second;
    }
  std::size_t k = out.maps.size();
  std::vector<std::vector<std::size_t>> mul(k, std::vector<std::size_t>(k));
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t h = 0; h < k; ++h) {
      std::vector<std::size_t> m(n);
      for (std::size_t c = 0; c < n; ++c) m[c] = out.maps[h][out.maps[g][c]];
      auto it = index.find(m);
      if (it == index.end()) throw ConstructionError("translations are not closed under composition");
      mul[g][h] = it->second;
    }
  out.group = from_mul(std::move(mul));
  if (!is_group(out.group)) throw ConstructionError("translations do not form a group");
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<bool> hit(n, false);
    for (std::size_t g = 0; g < k; ++g) {
      if (hit[out.maps[g][c]]) throw ConstructionError("translation group does not act freely");
      hit[out.maps[g][c]] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      throw ConstructionError("translation group does not act transitively");
    }
  }
  return out;
}

Report check_oracle_bridge(const FiniteHeapTable& t, const FieldSpec& field) {
  const std::string name = "oracle-bridge";
  TranslationGroup tg = set_translation_group(t);
  TranslationAlgebra tn = build_right_translations(linearize_heap(t, field));
  std::size_t k = tg.group.size;
  if (tn.dim() != k) {
    return Report::failure(name, "dimension", {tn.dim(), k},
                           "translation algebra and translation group differ in size");
  }
  std::vector<Vector> images(k);
  for (std::size_t ab = 0; ab < t.size * t.size; ++ab) {
    images[tg.generator[ab]] = tn.coords(ab / t.size, ab % t.size);
  }
  Matrix match = Matrix::from_columns(field, k, images);
  if (!inverse(match)) return Report::failure(name, "bijectivity", {}, "matching is singular");
  if (images[tg.group.identity] != tn.hopf.unit()) {
    return Report::failure(name, "unit", {tg.group.identity}, "identity translation is not the unit");
  }
  for (std::size_t g = 0; g < k; ++g)
    for (std::size_t h = 0; h < k; ++h) {
      if (tn.hopf.multiply(images[g], images[h]) != images[tg.group.mul[g][h]]) {
        return Report::failure(name, "multiplication", {g, h}, "product of translations differs");
      }
    }
  return Report::success(name);
}

HopfAlgebraData group_algebra(const GroupTable& g, const FieldSpec& field,
                              std::vector<std::string> labels) {
  std::size_t n = g.size;
  Tensor mult(field, {n, n, n});
  Matrix s(field, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult(a, b, g.mul[a][b]) = Scalar::one(field);
    s(g.inverse[a], a) = Scalar::one(field);
  }
  Coalgebra c = Coalgebra::grouplike(field, n);
  if (!labels.empty()) c = Coalgebra(field, c.comul(), c.counit(), std::move(labels));
  return HopfAlgebraData(std::move(c), std::move(mult), unit_vector(field, n, g.identity), std::move(s));
}

HopfAlgebraData gen_group_algebra(GroupName name, const FieldSpec& field) {
  return group_algebra(group_table(name), field, group_labels(name));
}

HopfAlgebraData gen_sweedler(const FieldSpec& field) {
  if (field.characteristic() == 2) {
    throw ConstructionError("the Sweedler algebra needs characteristic other than 2");
  }
  const Scalar one = Scalar::one(field);
  const Scalar minus = -one;
  // basis 0 = 1, 1 = g, 2 = x, 3 = gx
  Tensor comul(field, {4, 4, 4});
  comul(0, 0, 0) = one;
  comul(1, 1, 1) = one;
  comul(2, 2, 0) = one;
  comul(2, 1, 2) = one;
  comul(3, 3, 1) = one;
  comul(3, 0, 3) = one;
  Vector counit{one, one, Scalar::zero(field), Scalar::zero(field)};
  Tensor mult(field, {4, 4, 4});
  for (std::size_t i = 0; i < 4; ++i) {
    mult(0, i, i) = one;
    mult(i, 0, i) = one;
  }
  mult(1, 1, 0) = one;
  mult(1, 2, 3) = one;
  mult(1, 3, 2) = one;
  mult(2, 1, 3) = minus;
  mult(3, 1, 2) = minus;
  return HopfAlgebraData(Coalgebra(field, std::move(comul), std::move(counit), {"1", "g", "x", "gx"}),
                         std::move(mult), unit_vector(field, 4, 0));
}

Coalgebra perturb(const Coalgebra& c, const Index& slot, const Scalar& value) {
  return Coalgebra(c.field(), replaced(c.comul(), slot, value), c.counit(), c.labels());
}

HopfAlgebraData perturb(const HopfAlgebraData& h, const Index& slot, const Scalar& value) {
  return HopfAlgebraData(h.coalgebra(), replaced(h.mult(), slot, value), h.unit(), h.antipode());
}

HopfHeap perturb(const HopfHeap& h, const Index& slot, const Scalar& value) {
  return HopfHeap(h.coalgebra(), replaced(h.chi(), slot, value));
}

GaloisCoObject perturb(const GaloisCoObject& g, const Index& slot, const Scalar& value) {
  return {g.c, g.h, replaced(g.action, slot, value)};
}

HopfHeap group_heap(GroupName name, const FieldSpec& field) {
  return heap_from_hopf(gen_group_algebra(name, field));
}

HopfAlgebraData sweedler_hopf(const FieldSpec& field) {
  return with_solved_antipode(gen_sweedler(field));
}

HopfHeap sweedler_heap(const FieldSpec& field) { return heap_from_hopf(sweedler_hopf(field)); }

std::vector<CatalogEntry> heap_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
    for (GroupName g : all_groups()) {
      HopfAlgebraData h = gen_group_algebra(g, field);
      out.push_back({to_string(g) + "/" + field.to_string(), heap_from_hopf(h), g, h});
    }
  }
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    HopfAlgebraData h = sweedler_hopf(field);
    out.push_back({"Sweedler/" + field.to_string(), heap_from_hopf(h), std::nullopt, h});
  }
  return out;
}

Matrix c4_to_c2(const FieldSpec& field) {
  Matrix m(field, 2, 4);
  for (std::size_t k = 0; k < 4; ++k) m(k % 2, k) = Scalar::one(field);
  return m;
}

}  // namespace hopfheap
