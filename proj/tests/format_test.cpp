#include "hopfheap/format.hpp"

#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"

#include "hopfheap/catalog.hpp"
#include "hopfheap/errors.hpp"
#include "test_support.hpp"

namespace hopfheap {
namespace {

using nlohmann::json;
using testing::kF7;
using testing::kQ;

json round(const json& j) { return json::parse(dump(j)); }

TEST(Format, HeapRoundTrip) {
  for (const auto& e : heap_catalog()) {
    json j = to_json(structure_of(e.heap));
    EXPECT_EQ(heap_of(parse_structure(round(j))), e.heap) << e.name;
  }
}

TEST(Format, HopfRoundTripKeepsAntipode) {
  HopfAlgebraData s = sweedler_hopf(kQ);
  HopfAlgebraData back = hopf_of(parse_structure(round(to_json(structure_of(s)))));
  EXPECT_EQ(back, s);
  // S(x) = -gx is stored as [2, 3, "-1"]
  json j = to_json(structure_of(s));
  EXPECT_NE(std::find(j["antipode"].begin(), j["antipode"].end(), json::array({2, 3, "-1"})),
            j["antipode"].end());
  HopfAlgebraData bare = gen_sweedler(kQ);
  EXPECT_FALSE(hopf_of(parse_structure(to_json(structure_of(bare)))).antipode().has_value());
}

TEST(Format, GaloisRoundTrip) {
  GaloisCoObject g = galois_from_heap(sweedler_heap(kF7));
  json j = round(to_json(structure_of(g)));
  EXPECT_TRUE(j.contains("hopf"));
  EXPECT_TRUE(j.contains("action"));
  GaloisCoObject back = galois_of(parse_structure(j));
  EXPECT_EQ(back.c, g.c);
  EXPECT_EQ(back.h, g.h);
  EXPECT_EQ(back.action, g.action);
}

TEST(Format, Deterministic) {
  HopfHeap h = group_heap(GroupName::S3, kQ);
  EXPECT_EQ(dump(to_json(structure_of(h))), dump(to_json(structure_of(h))));
  std::string text = dump(to_json(structure_of(h)));
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(dump(to_json(parse_structure(json::parse(text)))), text);
}

TEST(Format, AcceptsWrapperAndStringField) {
  json j = {{"coalgebra",
             {{"field", "Fp:7"},
              {"dim", 1},
              {"counit", {"1"}},
              {"comul", {{0, 0, 0, "1"}}}}}};
  StructureFile s = parse_structure(j);
  EXPECT_EQ(s.field, kF7);
  EXPECT_EQ(coalgebra_of(s), Coalgebra::grouplike(kF7, 1));
}

json minimal() {
  return {{"field", {{"kind", "Q"}}}, {"dim", 2}, {"counit", {"1", "1"}},
          {"comul", {{0, 0, 0, "1"}, {1, 1, 1, "1"}}}};
}

TEST(Format, MinimalCoalgebra) {
  EXPECT_EQ(coalgebra_of(parse_structure(minimal())), Coalgebra::grouplike(kQ, 2));
  EXPECT_THROW(heap_of(parse_structure(minimal())), ParseError);
  EXPECT_THROW(hopf_of(parse_structure(minimal())), ParseError);
  EXPECT_THROW(galois_of(parse_structure(minimal())), ParseError);
}

TEST(Format, MalformedInputs) {
  json j = minimal();
  j.erase("dim");
  EXPECT_THROW(parse_structure(j), ParseError);

  j = minimal();
  j["field"] = {{"kind", "Fp"}, {"p", 9}};
  EXPECT_THROW(parse_structure(j), ParseError);

  j = minimal();
  j["field"] = {{"kind", "R"}};
  EXPECT_THROW(parse_structure(j), ParseError);

  j = minimal();
  j["comul"].push_back({0, 0, 0, "2"});
  EXPECT_THROW(parse_structure(j), ParseError);

  j = minimal();
  j["comul"].push_back({0, 2, 0, "1"});
  EXPECT_THROW(parse_structure(j), ShapeError);

  j = minimal();
  j["comul"][0][3] = 1;  // numbers must be strings
  EXPECT_THROW(parse_structure(j), ParseError);

  j = minimal();
  j["comul"][0][3] = "1/0";
  EXPECT_THROW(parse_structure(j), ParseError);

  j = minimal();
  j["counit"] = {"1"};
  EXPECT_THROW(parse_structure(j), ShapeError);

  EXPECT_THROW(parse_structure(json::array()), ParseError);
}

TEST(Format, FileIo) {
  auto dir = std::filesystem::temp_directory_path() / "hopfheap_format_test";
  std::filesystem::create_directories(dir);
  auto path = dir / "c2.json";
  write_file_atomic(path, dump(minimal()));
  EXPECT_EQ(read_json_file(path), minimal());
  EXPECT_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  {
    std::ofstream bad(dir / "bad.json");
    bad << "{not json";
  }
  EXPECT_THROW(read_json_file(dir / "bad.json"), ParseError);
  EXPECT_THROW(read_json_file(dir / "missing.json"), Error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace hopfheap
