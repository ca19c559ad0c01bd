#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "braxtope/serialization.hpp"

namespace {

struct Result {
  int status = -1;
  std::string out;
  std::string err;
};

Result brax(const std::string& args, const std::string& env = "") {
  const std::string err_file = "cli_stderr.txt";
  const std::string cmd = env + " " + BRAX_EXE + " " + args + " 2>" + err_file;
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream e(err_file);
  std::stringstream ss;
  ss << e.rdbuf();
  r.err = ss.str();
  return r;
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

int count_lines(const std::string& s, const std::string& prefix = "") {
  std::istringstream in(s);
  int n = 0;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.rfind(prefix, 0) == 0) ++n;
  }
  return n;
}

}  // namespace

TEST(Cli, GenBraxtope) {
  const auto r = brax("gen braxtope --d 4 --n 6");
  ASSERT_EQ(r.status, 0) << r.err;
  const auto doc = braxtope::parse_document(r.out);
  EXPECT_EQ(doc.family.size(), 9U);
}

TEST(Cli, GenOtherKinds) {
  const auto m = brax("gen multiplex --d 3 --n 4");
  ASSERT_EQ(m.status, 0);
  EXPECT_EQ(braxtope::parse_document(m.out).family.size(), 5U);
  const auto rd = brax("gen rd-braxtope --r 2 --d 4 --n 5");
  ASSERT_EQ(rd.status, 0);
  EXPECT_EQ(braxtope::parse_document(rd.out).family.size(), 8U);
  EXPECT_EQ(braxtope::parse_document(brax("gen cyclic --d 4 --n 5").out).family.size(), 9U);
}

TEST(Cli, GenRejectsBadArguments) {
  EXPECT_EQ(brax("gen braxtope --d 3 --n 2").status, 2);
  EXPECT_EQ(brax("gen rd-braxtope --d 4 --n 5").status, 2);
  EXPECT_EQ(brax("gen prism --d 3 --n 5").status, 2);
  EXPECT_EQ(brax("gen braxtope --d x --n 5").status, 2);
  EXPECT_EQ(brax("").status, 2);
}

TEST(Cli, AnalyzeInvariants) {
  ASSERT_EQ(brax("gen braxtope --d 4 --n 6 --out q46.json").status, 0);
  ASSERT_EQ(brax("gen braxtope --d 3 --n 4 --out q34.json").status, 0);
  const auto f = brax("analyze q46.json --fvector");
  EXPECT_EQ(f.status, 0);
  EXPECT_EQ(f.out, "f = (7, 18, 20, 9)\n");
  EXPECT_EQ(brax("analyze q46.json --hvector").out, "h = (1, 3, 3, 3, 1)\n");
  const auto flags = brax("analyze q34.json --flagvector");
  EXPECT_EQ(count_lines(flags.out, "f_{"), 8);
  EXPECT_NE(flags.out.find("f_{0,1} = 18"), std::string::npos);
  const auto cmp = brax("analyze q46.json --compare-reference");
  EXPECT_EQ(cmp.status, 0);
  EXPECT_NE(cmp.out.find("{0,3}\t38\t38\tyes"), std::string::npos);
  EXPECT_NE(cmp.out.find("flag vectors equal"), std::string::npos);
}

TEST(Cli, AnalyzeHVectorOfSimplicial) {
  ASSERT_EQ(brax("gen cyclic --d 4 --n 5 --out c45.json").status, 0);
  EXPECT_EQ(brax("analyze c45.json --hvector").out, "h = (1, 2, 3, 2, 1)\n");
  ASSERT_EQ(brax("gen multiplex --d 4 --n 6 --out m46.json").status, 0);
  EXPECT_NE(brax("analyze m46.json --hvector").out.find("unavailable"), std::string::npos);
}

TEST(Cli, Verify) {
  const auto all = brax("verify --d 4 --n 6 --suite all");
  EXPECT_EQ(all.status, 0) << all.out << all.err;
  const auto conj = brax("verify --d 4 --n 6 --suite conjectures");
  EXPECT_EQ(conj.status, 0);
  EXPECT_NE(conj.out.find("flag-conjecture: report-only"), std::string::npos);
  const auto js = brax("verify --d 3 --n 5 --suite shelling --json");
  ASSERT_EQ(js.status, 0);
  EXPECT_TRUE(braxtope::json::parse(js.out)["passed"].get<bool>());
  EXPECT_EQ(brax("verify --d 4 --n 6 --suite nonsense").status, 2);
  EXPECT_EQ(brax("verify").status, 2);
}

TEST(Cli, VerifyBadFamily) {
  // Q^{3,4} with labels 1 and 2 exchanged: a polytope, but not in braxtope order.
  // (Exchanging 1 and 4 would be an automorphism.)
  write_file("bad-family.json", R"({"kind":"custom","parameters":{"d":3,"n":4},
    "facets":[[0,1,2],[1,2,3],[1,3,4],[0,2,3],[0,1,4],[0,3,4]]})");
  const auto r = brax("verify bad-family.json");
  EXPECT_EQ(r.status, 1) << r.err;
  EXPECT_NE(r.out.find("witness"), std::string::npos);
  write_file("not-lattice.json", R"({"parameters":{"d":3,"n":4},"facets":[[0,1,2],[1,2,3]]})");
  const auto n = brax("verify not-lattice.json");
  EXPECT_EQ(n.status, 1);
  EXPECT_NE(n.out.find("lattice: fail"), std::string::npos);
}

TEST(Cli, Realize) {
  const auto r = brax("realize --d 3 --n 7 --out q37.json");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out, "8 points, oracle-verified, 12 facets\n");
  const auto doc = braxtope::parse_document([] {
    std::ifstream in("q37.json");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }());
  ASSERT_TRUE(doc.vertices);
  EXPECT_EQ(doc.vertices->points.size(), 8U);
  const auto piped = brax("realize --d 3 --n 5");
  EXPECT_EQ(piped.status, 0);
  EXPECT_EQ(braxtope::parse_document(piped.out).vertices->points.size(), 6U);
  EXPECT_NE(piped.err.find("oracle-verified"), std::string::npos);
  EXPECT_EQ(brax("verify q37.json --suite geometry").status, 0);
}

TEST(Cli, RealizeWithSeed) {
  const auto plain = brax("realize --d 4 --n 6");
  ASSERT_EQ(plain.status, 0);
  EXPECT_EQ(brax("realize --d 4 --n 6").out, plain.out);
  const auto seeded = brax("realize --d 4 --n 6", "BRAX_SEED=3");
  ASSERT_EQ(seeded.status, 0) << seeded.err;
  EXPECT_NE(seeded.err.find("oracle-verified"), std::string::npos);
  EXPECT_NE(seeded.out, plain.out);
  EXPECT_EQ(brax("realize --d 4 --n 6", "BRAX_SEED=abc").status, 2);
  EXPECT_EQ(brax("realize --d 2 --n 6").status, 2);
}

TEST(Cli, Triangulate) {
  const auto r = brax("triangulate --d 4 --n 6 --check-shallow");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("J_1 = {0,1,2,3,4}"), std::string::npos);
  EXPECT_NE(r.out.find("J_3 = {0,3,4,5,6}"), std::string::npos);
  EXPECT_NE(r.out.find("h = (1, 2, 0, 0, 0, 0)"), std::string::npos);
  EXPECT_NE(r.out.find("shallow: true"), std::string::npos);
  const auto js = braxtope::json::parse(brax("triangulate --d 3 --n 4 --json").out);
  EXPECT_EQ(js["simplices"].size(), 2U);
}

TEST(Cli, Shell) {
  ASSERT_EQ(brax("gen braxtope --d 3 --n 4 --out shell34.json").status, 0);
  const auto r = brax("shell shell34.json --colex");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("F_3 = {1,2,3}  G = {2,3}"), std::string::npos);
  EXPECT_NE(r.out.find("colex shelling: valid"), std::string::npos);
  EXPECT_EQ(braxtope::json::parse(brax("shell shell34.json --colex --json").out)["valid"], true);
}

TEST(Cli, ExportIncidence) {
  ASSERT_EQ(brax("gen braxtope --d 3 --n 4 --out inc34.json").status, 0);
  const auto r = brax("export inc34.json --format incidence");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 1 1 0 0\n1 1 0 1 0\n0 1 1 1 0\n1 0 1 0 1\n1 0 0 1 1\n0 0 1 1 1\n");
  EXPECT_EQ(brax("export inc34.json --format xml").status, 2);
}

TEST(Cli, RoundTrip) {
  ASSERT_EQ(brax("gen braxtope --d 5 --n 8 --out rt.json").status, 0);
  ASSERT_EQ(brax("export rt.json --format json --out rt2.json").status, 0);
  const std::string flags = " --fvector --flagvector --hvector";
  const auto a = brax("analyze rt.json" + flags);
  const auto b = brax("analyze rt2.json" + flags);
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(brax("export rt.json --format json").out, brax("export rt2.json --format json").out);
}

TEST(Cli, MalformedJson) {
  write_file("broken.json", "{\"kind\": \"braxtope\", ");
  const auto r = brax("analyze broken.json");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("malformed"), std::string::npos);
  EXPECT_EQ(brax("analyze does-not-exist.json").status, 2);
  write_file("range.json", R"({"parameters":{"d":2,"n":2},"facets":[[0,1],[1,5],[0,2]]})");
  EXPECT_EQ(brax("export range.json").status, 2);
}
