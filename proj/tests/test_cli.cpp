#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "generators.hpp"
#include "prejj/io.hpp"

using namespace prejj;
using namespace prejj::testing;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string &name) { return std::string(PREJJ_TEST_DATA) + "/" + name; }

struct Outcome {
  int code;
  std::string out, err;
  io::Json json() const { return io::parse_json(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
public:
  TempDir() : path_(fs::temp_directory_path() / ("prejj_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string &name, const std::string &content = "") const {
    std::string p = (path_ / name).string();
    if (!content.empty())
      std::ofstream(p) << content;
    return p;
  }

private:
  fs::path path_;
};

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST(IO, AlgebraRoundTrip) {
  Gen g(501);
  for (const Field &f : {Q(), F(5), F(7)})
    for (int trial = 0; trial < 30; ++trial) {
      Algebra a = g.algebra(f, static_cast<std::size_t>(g.integer(1, 3)), 0.4);
      if (g.coin())
        a = a.with_labels(default_labels(a.dim(), "x", "'"));
      io::Json j = io::to_json(a);
      Algebra back = io::algebra_from_json(io::parse_json(io::dump(j)));
      EXPECT_EQ(back, a);
      EXPECT_EQ(back.labels(), a.labels());
      EXPECT_EQ(io::dump(io::to_json(back)), io::dump(j));
    }
}

TEST(IO, PrimeScalarsUseModForm) {
  io::Json j = io::to_json(Algebra::from_ints(F(5), 1, {3}));
  EXPECT_EQ(j["products"][0]["coeffs"][0], "3 mod 5");
  EXPECT_EQ(io::to_json(Algebra::from_constants(Q(), 1, {Scalar(Rational::normalize(3, -6))}))["products"][0]["coeffs"][0],
            "-1/2");
}

TEST(IO, StructuredRoundTrips) {
  PreJJBimodule bm = regular_bimodule(class_III());
  EXPECT_EQ(io::bimodule_from_json(io::to_json(bm)), bm);
  JJRep rep = adjoint_rep(sub_adjacent(class_I()));
  EXPECT_EQ(io::rep_from_json(io::to_json(rep)), rep);
  PreJJMatchedPair mp = dual_structure_maps(case_algebra(1), case_dual(1));
  PreJJMatchedPair back = io::prejj_matched_pair_from_json(io::to_json(mp));
  EXPECT_EQ(back.A, mp.A);
  EXPECT_EQ(back.rB, mp.rB);
  JJMatchedPair jp = jj_dual_structure_maps(sub_adjacent(case_algebra(1)), sub_adjacent(case_dual(1)));
  JJMatchedPair jback = io::jj_matched_pair_from_json(io::to_json(jp));
  EXPECT_EQ(jback.rho, jp.rho);
  EXPECT_EQ(jback.mu, jp.mu);
}

TEST(IO, ParseErrorsCarryPositions) {
  try {
    io::parse_json("{\n  \"dim\": 2,\n  oops\n}", "x.json");
    FAIL();
  } catch (const io::ParseError &e) {
    EXPECT_EQ(std::string(e.what()).rfind("x.json:3:", 0), 0u) << e.what();
  }
  auto bad = io::parse_json(R"({"dim":2,"field":{"kind":"rational"},"products":[{"i":0,"j":0,"coeffs":["1"]}]})");
  try {
    io::algebra_from_json(bad);
    FAIL();
  } catch (const io::ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("/products/0/coeffs"), std::string::npos) << e.what();
  }
  auto range = io::parse_json(R"({"dim":1,"field":{"kind":"rational"},"products":[{"i":1,"j":0,"coeffs":["1"]}]})");
  EXPECT_THROW(io::algebra_from_json(range), io::ParseError);
  auto nonprime = io::parse_json(
      R"({"dim":1,"field":{"kind":"prime","p":4},"products":[]})");
  EXPECT_THROW(io::algebra_from_json(nonprime), io::ParseError);
  auto scalar = io::parse_json(R"({"dim":1,"field":{"kind":"rational"},"products":[{"i":0,"j":0,"coeffs":["1/0"]}]})");
  EXPECT_THROW(io::algebra_from_json(scalar), io::ParseError);
}

TEST(IO, RenderTable) {
  EXPECT_EQ(io::render_table(class_I()), "e1 * e1 = e2\n");
  EXPECT_EQ(io::render_table(class_zero()), "all products vanish\n");
  EXPECT_EQ(io::render_table(Algebra::from_ints(F(5), 2, {0, 2, 0, 0, 0, 0, 3, 0})), "e1 * e1 = 2e2\ne2 * e2 = 3e1\n");
}

TEST(Cli, CheckExamples) {
  Outcome r = run({"check", data("class_I.json"), "--identity", "left-prejj"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["schema_version"], 1);
  for (const char *kind : {"antiassoc", "left-prejj", "right-prejj", "jj", "operad"})
    EXPECT_EQ(run({"check", data("class_zero.json"), "--identity", kind}).code, 0) << kind;

  Outcome bad = run({"check", data("idempotent.json"), "--identity", "antiassoc"});
  EXPECT_EQ(bad.code, 1);
  auto w = bad.json()["reports"][0]["witnesses"][0];
  EXPECT_EQ(w["indices"], (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(w["defect"][0], "2");
}

TEST(Cli, CheckAllAndFieldOverride) {
  Outcome all = run({"check", data("class_II.json"), "--identity", "all"});
  EXPECT_EQ(all.code, 1);
  EXPECT_EQ(all.json()["reports"].size(), 5u);
  Outcome f5 = run({"--field", "F_5", "check", data("class_III.json")});
  EXPECT_EQ(f5.code, 0) << f5.err;
  Outcome after = run({"check", data("class_III.json"), "--field", "5"});
  EXPECT_EQ(after.code, 0) << after.err;
}

TEST(Cli, CheckOtherSubjects) {
  TempDir t;
  std::string bm = t.file("bm.json", io::dump(io::to_json(regular_bimodule(class_I()))));
  Outcome r = run({"check", bm});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["subject"], "bimodule");
  std::string mp = t.file("mp.json", io::dump(io::to_json(dual_structure_maps(case_algebra(1), case_dual(1)))));
  EXPECT_EQ(run({"check", mp}).code, 0);
  EXPECT_EQ(run({"check", mp, "--equations", "printed"}).code, 0);
  std::string jp = t.file("jp.json", io::dump(io::to_json(zero_jj_matched_pair(sub_adjacent(class_I()),
                                                                             sub_adjacent(class_III())))));
  EXPECT_EQ(run({"check", jp}).json()["subject"], "jj_matched_pair");
}

TEST(Cli, MaxWitnessesAndOut) {
  TempDir t;
  std::string out = t.file("report.json");
  Outcome r = run({"--max-witnesses", "1", "--out", out, "check", data("class_II.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
  auto j = io::read_json_file(out);
  EXPECT_EQ(j["reports"][0]["witnesses"].size(), 1u);
  EXPECT_GT(j["reports"][0]["violations"].get<int>(), 1);
}

TEST(Cli, UsageAndParseErrors) {
  TempDir t;
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"check", "/nonexistent.json"}).code, 2);
  std::string broken = t.file("broken.json", "{\"dim\": 2,\n\"field\": }");
  Outcome r = run({"check", broken});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(":2:"), std::string::npos) << r.err;
  EXPECT_EQ(run({"check", data("class_I.json"), "--identity", "lie"}).code, 2);
  EXPECT_EQ(run({"check", data("class_I.json"), "--field", "F_4"}).code, 2);
}

TEST(Cli, DoubleCaseI) {
  Outcome r = run({"double", data("class_I.json"), data("case_I_dual.json"), "--conformance", data("case_I_table.json")});
  // Two printed entries disagree with recomputation.
  EXPECT_EQ(r.code, 1) << r.err;
  auto j = r.json();
  EXPECT_TRUE(j["invariance"]["passed"].get<bool>());
  EXPECT_TRUE(j["ambient_check"]["passed"].get<bool>());
  EXPECT_TRUE(j["equivalence"]["coincide"].get<bool>());
  EXPECT_EQ(j["conformance"][1]["lhs"], "(e1+e1*)*(e1+e2*)");
  EXPECT_EQ(j["conformance"][1]["recomputed"], "2e2 + e1*");
  EXPECT_TRUE(j["conformance"][1]["match"].get<bool>());
  EXPECT_EQ(j["conformance_mismatches"], 2);
  EXPECT_EQ(j["ambient"]["basis"], (std::vector<std::string>{"e1", "e2", "e1*", "e2*"}));
}

TEST(Cli, DoubleZeroAndErrors) {
  Outcome z = run({"double", data("class_zero.json"), data("class_zero.json")});
  EXPECT_EQ(z.code, 0) << z.err;
  EXPECT_TRUE(z.json()["ambient"]["products"].empty());
  EXPECT_TRUE(z.json()["invariance"]["passed"].get<bool>());
  EXPECT_EQ(run({"double", data("class_I.json"), data("idempotent.json")}).code, 2);
  Outcome enforce = run({"double", data("class_II.json"), data("case_II_dual.json"), "--enforce"});
  EXPECT_EQ(enforce.code, 1);
  EXPECT_EQ(enforce.json()["precondition_failures"][0], "A fails left_pre_jj");
  Outcome jj = run({"double", "--jj", data("class_zero.json"), data("class_zero.json")});
  EXPECT_EQ(jj.code, 0);
  EXPECT_EQ(jj.json()["kind"], "jj");
}

TEST(Cli, DoubleCaseIIDiffFlagsMismatch) {
  Outcome r = run({"double", data("class_II.json"), data("case_II_dual.json"), "--conformance",
               data("case_II_table.json")});
  EXPECT_EQ(r.code, 1);
  auto j = r.json();
  EXPECT_EQ(j["conformance"].size(), 16u);
  bool flagged = false;
  for (const auto &e : j["conformance"])
    if (e["lhs"] == "(e2+e2*)*(e1+e2*)") {
      flagged = !e["match"].get<bool>();
      EXPECT_EQ(e["expected"], "e1*");
    }
  EXPECT_TRUE(flagged);
}

TEST(Cli, Classify) {
  Outcome one = run({"classify", "--dim", "1", "--prime", "5"});
  EXPECT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(one.json()["censuses"][0]["orbit_count"], 1);

  Outcome f2 = run({"classify", "--dim", "2", "--prime", "2", "--kind", "antiassoc"});
  auto c = f2.json()["censuses"][0];
  EXPECT_EQ(c["total_solutions"], 28);
  EXPECT_EQ(c["orbit_count"], 8);
  EXPECT_EQ(c["warnings"][0], "characteristic 2 outside paper hypotheses");

  Outcome big = run({"classify", "--dim", "2", "--prime", "13"});
  EXPECT_EQ(big.code, 2);
  EXPECT_NE(big.err.find("estimated"), std::string::npos);
  EXPECT_EQ(run({"classify", "--dim", "3", "--prime", "2"}).code, 2);
  EXPECT_EQ(run({"classify", "--dim", "2"}).code, 2);
}

TEST(Cli, ClassifyBothKindsAndDeterminism) {
  TempDir t;
  std::string a = t.file("a.json"), b = t.file("b.json");
  EXPECT_EQ(run({"--out", a, "classify", "--prime", "5", "--kind", "both", "--workers", "1"}).code, 0);
  EXPECT_EQ(run({"--out", b, "classify", "--prime", "5", "--kind", "both", "--workers", "3"}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  auto j = io::read_json_file(a);
  EXPECT_EQ(j["censuses"].size(), 2u);
  EXPECT_TRUE(j["comparison"]["solution_sets_equal"].get<bool>());
}

TEST(Cli, Iso) {
  Outcome yes = run({"iso", data("class_I.json"), data("class_III.json")});
  EXPECT_EQ(yes.code, 0);
  LinearMap p = LinearMap::of(Q(), 2, 2, {0, 0, 0, 0});
  auto m = yes.json()["matrix"];
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      p(r, c) = Scalar::parse(m[r][c].get<std::string>(), Q());
  EXPECT_EQ(apply_basis_change(class_I(), p), class_III());
  EXPECT_EQ(run({"iso", data("class_zero.json"), data("class_III.json")}).code, 1);
  EXPECT_EQ(run({"--field", "7", "iso", data("class_I.json"), data("class_III.json")}).code, 0);
}

TEST(Cli, Table) {
  EXPECT_EQ(run({"table", data("class_I.json")}).out, "e1 * e1 = e2\n");
  EXPECT_EQ(run({"table", data("class_zero.json")}).out, "all products vanish\n");
  EXPECT_EQ(run({"table", data("case_III_dual.json")}).out, "e2* * e1* = e2*\n");
}

TEST(Cli, SubadjacentAndSemidirect) {
  TempDir t;
  Outcome s = run({"subadjacent", data("class_I.json")});
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(io::algebra_from_json(s.json()), sub_adjacent(class_I()));
  EXPECT_EQ(run({"subadjacent", data("class_zero.json")}).code, 0);
  Outcome h = run({"subadjacent", "--halved", data("class_III.json")});
  EXPECT_EQ(io::algebra_from_json(h.json()), sub_adjacent(class_III(), true));
  // Chaining: the output is itself an algebra file.
  std::string sj = t.file("s.json", s.out);
  EXPECT_EQ(run({"check", sj, "--identity", "jj"}).code, 0);

  std::string bm = t.file("bm.json", io::dump(io::to_json(regular_bimodule(class_I()))));
  Outcome sd = run({"semidirect", bm});
  EXPECT_EQ(sd.code, 0) << sd.err;
  EXPECT_EQ(io::algebra_from_json(sd.json()), prejj_semidirect(regular_bimodule(class_I())));
  std::string zb = t.file("zb.json", io::dump(io::to_json(zero_bimodule(class_zero(), 1))));
  EXPECT_EQ(io::algebra_from_json(run({"semidirect", zb}).json()), Algebra(Q(), 3));
  std::string rep = t.file("rep.json", io::dump(io::to_json(adjoint_rep(sub_adjacent(class_I())))));
  EXPECT_EQ(run({"semidirect", rep}).code, 0);
  EXPECT_EQ(run({"semidirect", data("class_I.json")}).code, 2);
}

TEST(Cli, OutputIsDeterministic) {
  auto a = run({"double", data("class_I.json"), data("case_I_dual.json"), "--conformance", data("case_I_table.json")});
  auto b = run({"double", data("class_I.json"), data("case_I_dual.json"), "--conformance", data("case_I_table.json")});
  EXPECT_EQ(a.out, b.out);
}
