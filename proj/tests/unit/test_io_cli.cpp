#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "couples/cli/commands.hpp"
#include "couples/gen/random_couples.hpp"
#include "couples/io/document.hpp"

using namespace couples;

namespace {

const std::filesystem::path kFixtures = COUPLES_FIXTURE_DIR;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "couples");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return (kFixtures / name).string(); }

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto p = std::filesystem::temp_directory_path() / ("couples_test_" + name);
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

}  // namespace

TEST(Document, FixturesRoundTripByteForByte) {
  std::size_t count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".json") continue;
    const std::string text = slurp(entry.path());
    if (entry.path().filename() == "beta_not_filtered.json") {
      EXPECT_THROW(parse_document(text), DocumentError);
      continue;
    }
    EXPECT_EQ(serialize(parse_document(text)), text) << entry.path();
    ++count;
  }
  EXPECT_GE(count, 7u);
}

TEST(Document, RandomCouplesRoundTrip) {
  std::mt19937_64 rng(91);
  for (int i = 0; i < 20; ++i) {
    const auto v = dump_canonical(to_json(random_massey_couple(rng).couple));
    EXPECT_EQ(serialize(parse_document(v)), v);
    const auto f = dump_canonical(to_json(random_graded_filt_couple(rng)));
    const auto doc = parse_document(f);
    ASSERT_TRUE(doc.filt);
    EXPECT_EQ(serialize(doc), f);
  }
}

TEST(Document, RationalFormatting) {
  const Matrix m = Matrix::from_rows({{parse_rational("2/4"), 3}, {parse_rational("-6/3"), 0}});
  EXPECT_EQ(matrix_to_json(m).dump(), R"([["1/2","3"],["-2","0"]])");
  const Json j = Json::parse(R"([["2/4", 3], ["-1", "0/5"]])");
  const Matrix back = matrix_from_json(j, 2, 2, "/m");
  EXPECT_EQ(back(0, 0), Rational(1, 2));
  EXPECT_EQ(back(0, 1), Rational(3));
  EXPECT_THROW(matrix_from_json(Json::parse(R"([["1/0"]])"), 1, 1, "/m"), DocumentError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"([[0.5]])"), 1, 1, "/m"), DocumentError);
  EXPECT_THROW(matrix_from_json(Json::parse(R"([["1", "2"]])"), 1, 1, "/m"), DocumentError);
}

TEST(Document, SyntaxErrorsCarryPosition) {
  try {
    parse_document("{\n  \"format_version\": 1,\n  \"kind\": ]\n}");
    FAIL();
  } catch (const DocumentError& e) {
    ASSERT_TRUE(e.line());
    EXPECT_EQ(*e.line(), 3u);
    ASSERT_TRUE(e.column());
  }
}

TEST(Document, SemanticErrors) {
  auto j = to_json(alpha_zero_couple());
  auto bad_version = j;
  bad_version["format_version"] = 2;
  EXPECT_THROW(parse_document(bad_version.dump()), DocumentError);
  auto bad_shape = j;
  bad_shape["morphisms"]["beta"] = Json::parse(R"([["1"]])");
  EXPECT_THROW(parse_document(bad_shape.dump()), DocumentError);
  auto tree = j;
  tree["kind"] = "tree";
  EXPECT_THROW(parse_document(tree.dump()), DocumentError);
  auto backend = j;
  backend["backend"] = "sheaves";
  EXPECT_THROW(parse_document(backend.dump()), DocumentError);
  try {
    parse_document(slurp(kFixtures / "beta_not_filtered.json"));
    FAIL();
  } catch (const DocumentError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("beta"), std::string::npos);
    EXPECT_NE(what.find("level 1"), std::string::npos);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"check", fixture("zero.json")}).code, cli::kExitOk);
  EXPECT_EQ(invoke({"check", fixture("f1.json")}).code, cli::kExitOk);
  EXPECT_EQ(invoke({"check", fixture("beta_not_filtered.json")}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"check"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"check", "/nonexistent/file.json"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"derive", fixture("zero.json"), "--side", "up"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"derive", fixture("zero.json"), "--depth", "x"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"derive", fixture("beta_nonstrict.json")}).code, cli::kExitInvalid);

  // An inexact couple parses but fails validation.
  auto j = to_json(alpha_zero_couple());
  j["morphisms"]["gamma"] = Json::parse(R"([["0", "0"]])");
  const auto p = temp_file("inexact.json", dump_canonical(j));
  const auto r = invoke({"check", p.string()});
  EXPECT_EQ(r.code, cli::kExitInvalid);
  EXPECT_NE(r.out.find("FAILS"), std::string::npos);
  std::filesystem::remove(p);
}

TEST(Cli, CheckReports) {
  const auto z = invoke({"check", fixture("zero.json")});
  EXPECT_NE(z.out.find("valid"), std::string::npos);
  const auto f = invoke({"check", fixture("f1.json")});
  EXPECT_NE(f.out.find("strict: alpha yes, beta yes, gamma yes"), std::string::npos);
  EXPECT_NE(f.out.find("ker gamma certified-true"), std::string::npos);
  const auto probed = invoke({"check", fixture("f1.json"), "--probes", "10", "--seed", "4"});
  EXPECT_EQ(probed.code, 0);
  EXPECT_NE(probed.out.find("probed-true"), std::string::npos);
  const auto bad = invoke({"check", fixture("beta_not_filtered.json")});
  EXPECT_NE(bad.err.find("level 1"), std::string::npos);
  EXPECT_EQ(bad.out.find('.'), std::string::npos);
}

TEST(Cli, DeriveWritesTree) {
  const auto out = std::filesystem::temp_directory_path() / "couples_test_tree.json";
  const auto r = invoke({"derive", fixture("degenerate.json"), "--depth", "3", "--out", out.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json tree = Json::parse(slurp(out));
  EXPECT_EQ(tree["kind"], "tree");
  EXPECT_EQ(tree["nodes"].size(), 15u);
  EXPECT_EQ(tree["omegas"].size(), 7u);
  EXPECT_TRUE(tree["failures"].empty());
  std::filesystem::remove(out);

  const auto f1 = invoke({"derive", fixture("f1.json"), "--depth", "1", "--side", "both"});
  EXPECT_EQ(f1.code, 0);
  EXPECT_NE(f1.out.find("omega at root: unique, bimorphism, iso"), std::string::npos);

  const auto m = invoke({"derive", fixture("massey_complex.json"), "--depth", "2", "--parallel"});
  EXPECT_EQ(m.code, 0) << m.err;
  EXPECT_NE(m.out.find("page 3 at LL"), std::string::npos);
  EXPECT_EQ(m.out.find("mismatch"), std::string::npos);

  const auto left = invoke({"derive", fixture("partial_zero.json"), "--depth", "2", "--side", "left"});
  EXPECT_EQ(left.code, 0);
  EXPECT_NE(left.out.find("LL"), std::string::npos);
  EXPECT_EQ(left.out.find("R "), std::string::npos);
}

TEST(Cli, CohomologyReports) {
  const auto z = invoke({"cohomology", fixture("partial_zero.json")});
  EXPECT_EQ(z.code, 0);
  EXPECT_NE(z.out.find("H-: dim 2"), std::string::npos);
  EXPECT_NE(z.out.find("H+: dim 2"), std::string::npos);
  const auto a = invoke({"cohomology", fixture("alpha_zero.json")});
  EXPECT_NE(a.out.find("H-: dim 0"), std::string::npos);
  EXPECT_NE(a.out.find("H+: dim 0"), std::string::npos);
  const auto c = invoke({"cohomology", fixture("f1.json"), "--certificate"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("iso yes"), std::string::npos);
}
