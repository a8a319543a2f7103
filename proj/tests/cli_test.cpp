#include "hopfheap/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "hopfheap/format.hpp"

namespace hopfheap {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hopfheap_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string generate(const std::string& kind, const std::string& name,
                       std::vector<std::string> extra) {
    std::vector<std::string> args = {"generate", kind, "-o", path(name)};
    args.insert(args.end(), extra.begin(), extra.end());
    EXPECT_EQ(run(args), cli::kPass) << err_.str();
    return path(name);
  }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(Cli, CheckHeapPassAndFail) {
  std::string h = generate("heap", "c3.json", {"--group", "C3"});
  EXPECT_EQ(run({"check-heap", h}), cli::kPass);

  nlohmann::json j = read_json_file(h);
  j["heap"][0][4] = "2";
  write_file_atomic(path("bad.json"), dump(j));
  EXPECT_EQ(run({"check-heap", path("bad.json"), "--report", path("r.json")}), cli::kAxiomFailure);
  nlohmann::json r = read_json_file(path("r.json"));
  EXPECT_EQ(r["pass"], false);
  EXPECT_EQ(r["exit_code"], 1);
  EXPECT_TRUE(r.contains("axiom"));
  EXPECT_TRUE(r.contains("witness"));
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(run({"check-heap", path("missing.json")}), cli::kInputError);
  EXPECT_EQ(run({"frobnicate"}), cli::kInputError);
  EXPECT_EQ(run({}), cli::kInputError);
  EXPECT_EQ(run({"generate", "heap", "--group", "C3", "--field", "Fp:9"}), cli::kInputError);
  EXPECT_EQ(run({"generate", "heap", "--group", "C9"}), cli::kInputError);
  EXPECT_EQ(run({"generate", "sweedler", "--field", "Fp:2"}), cli::kAxiomFailure);
  std::string h = generate("heap", "c2.json", {"--group", "C2"});
  EXPECT_EQ(run({"translations", h, "--side", "up"}), cli::kInputError);
  // a heap file has no mult section
  EXPECT_EQ(run({"check-hopf", h}), cli::kInputError);
}

TEST_F(Cli, TranslationDimensions) {
  struct Case {
    std::string group;
    int dim;
  };
  for (const auto& c : std::vector<Case>{{"C2", 2}, {"S3", 6}, {"C1", 1}}) {
    std::string h = generate("heap", c.group + ".json", {"--group", c.group});
    for (std::string side : {"right", "left"}) {
      std::string o = path(c.group + "_" + side + ".json");
      ASSERT_EQ(run({"translations", h, "--side", side, "-o", o}), cli::kPass) << err_.str();
      EXPECT_NE(out_.str().find(side + " translation Hopf algebra: dimension " + std::to_string(c.dim)),
                std::string::npos);
      ASSERT_EQ(run({"check-hopf", o}), cli::kPass) << out_.str();
      EXPECT_TRUE(fs::exists(o + ".action.json"));
    }
  }
}

TEST_F(Cli, GrunspanSweedler) {
  std::string h = generate("heap", "sw.json", {"--sweedler"});
  ASSERT_EQ(run({"grunspan", h, "-o", path("theta.json")}), cli::kPass) << err_.str();
  EXPECT_NE(out_.str().find("theta != id"), std::string::npos);
  EXPECT_NE(out_.str().find("theta(x) = -x"), std::string::npos);
  EXPECT_NE(out_.str().find("theta(gx) = -gx"), std::string::npos);
  nlohmann::json t = read_json_file(path("theta.json"));
  EXPECT_EQ(t["is_identity"], false);
  EXPECT_EQ(t["dim"], 4);

  std::string g = generate("heap", "c4.json", {"--group", "C4"});
  ASSERT_EQ(run({"grunspan", g}), cli::kPass);
  EXPECT_NE(out_.str().find("theta = id"), std::string::npos);
}

TEST_F(Cli, RoundtripAndGalois) {
  std::string h = generate("heap", "sw.json", {"--sweedler", "--field", "Fp:5"});
  EXPECT_EQ(run({"roundtrip", h}), cli::kPass) << out_.str() << err_.str();
  std::string p = generate("pair", "pair.json", {"--group", "S3"});
  EXPECT_EQ(run({"check-galois", p}), cli::kPass) << out_.str();
}

TEST_F(Cli, GeneratedSweedlerIsHopf) {
  std::string s = generate("sweedler", "sw.json", {"--field", "Q"});
  EXPECT_EQ(run({"check-hopf", s}), cli::kPass);
  std::string g = generate("group-algebra", "v4.json", {"--group", "V4", "--field", "Fp:7"});
  EXPECT_EQ(run({"check-hopf", g}), cli::kPass);
  ASSERT_EQ(run({"generate", "sweedler"}), cli::kPass);
  EXPECT_EQ(nlohmann::json::parse(out_.str())["dim"], 4);
}

TEST_F(Cli, HopfWithoutAntipode) {
  // two-element monoid {1, z}
  nlohmann::json j = {{"field", "Q"},
                      {"dim", 2},
                      {"counit", {"1", "1"}},
                      {"comul", {{0, 0, 0, "1"}, {1, 1, 1, "1"}}},
                      {"mult", {{0, 0, 0, "1"}, {0, 1, 1, "1"}, {1, 0, 1, "1"}, {1, 1, 1, "1"}}},
                      {"unit", {"1", "0"}}};
  write_file_atomic(path("monoid.json"), dump(j));
  EXPECT_EQ(run({"check-hopf", path("monoid.json"), "--report", path("r.json")}),
            cli::kAxiomFailure);
  EXPECT_EQ(read_json_file(path("r.json"))["axiom"], "antipode-existence");
}

TEST_F(Cli, Ehresmann) {
  std::string h = generate("heap", "s3.json", {"--group", "S3"});
  ASSERT_EQ(run({"ehresmann", h, "-o", path("e.json")}), cli::kPass) << err_.str();
  EXPECT_NE(out_.str().find("E(C,H): dimension 6"), std::string::npos);
  StructureFile e = parse_structure(read_json_file(path("e.json")));
  ASSERT_TRUE(e.quotient_of.has_value());
  EXPECT_EQ(*e.quotient_of, "s3.json");
  EXPECT_EQ(run({"check-hopf", path("e.json")}), cli::kPass);

  std::string p = generate("pair", "pair.json", {"--sweedler"});
  ASSERT_EQ(run({"ehresmann", p}), cli::kPass) << err_.str();
  EXPECT_NE(out_.str().find("E(C,H): dimension 4"), std::string::npos);
}

TEST_F(Cli, ReportsAreByteIdentical) {
  std::string h = generate("heap", "c6.json", {"--group", "C6", "--field", "Fp:7"});
  ASSERT_EQ(run({"roundtrip", h, "--report", path("a.json")}), cli::kPass);
  ASSERT_EQ(run({"roundtrip", h, "--report", path("b.json")}), cli::kPass);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  generate("heap", "c6b.json", {"--group", "C6", "--field", "Fp:7"});
  EXPECT_EQ(slurp(h), slurp(path("c6b.json")));
}

}  // namespace
}  // namespace hopfheap
