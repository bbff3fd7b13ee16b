#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MLDHAT_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(MLD_TEST_DATA_DIR) + "/" + name; }

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, ToricQuadricCone) {
  auto r = run("toric --cone " + data("quadric_cone.json"));
  ASSERT_EQ(r.code, 0);
  auto j = parse(r);
  EXPECT_EQ(j["lambda"], 0);
  EXPECT_EQ(j["mather_mld"], 2);
  EXPECT_EQ(j["status"], "EXACT");
}

TEST(Cli, ToricFaceFromFile) {
  auto r = run("toric --cone " + data("orthant3_face.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["mather_mld"], 3);
}

TEST(Cli, HyperWithCertify) {
  auto r = run("hyper --support " + data("curve.json") + " --certify --oracle-prime 10007");
  ASSERT_EQ(r.code, 0);
  auto j = parse(r);
  EXPECT_EQ(j["lambda_lower_bound"], 0);
  EXPECT_EQ(j["status"], "EXACT");
  EXPECT_EQ(j["diagnostics"]["certificate"]["verdict"], "CERTIFIED_PROBABILISTIC");
}

TEST(Cli, HyperWithoutCertifyStaysLowerBound) {
  auto r = run("hyper --support " + data("curve.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["status"], "LOWER_BOUND");
}

TEST(Cli, BoxBoundMarksHeuristic) {
  auto r = run("--box-bound 5 hyper --support " + data("e8.json"));
  ASSERT_EQ(r.code, 0);
  auto j = parse(r);
  EXPECT_EQ(j["status"], "HEURISTIC");
  EXPECT_EQ(j["lambda_lower_bound"], 2);
}

TEST(Cli, HilbertAndDual) {
  auto h = run("hilbert --cone " + data("quadric_cone.json"));
  ASSERT_EQ(h.code, 0);
  EXPECT_EQ(parse(h)["elements"], nlohmann::json::parse("[[1,0],[1,1],[1,2]]"));
  auto d = run("hilbert --direct --cone " + data("hilbert_dual.json"));
  EXPECT_EQ(parse(d)["elements"], nlohmann::json::parse("[[1,0],[1,1],[1,2]]"));
  auto c = run("dual --cone " + data("quadric_cone.json"));
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(parse(c)["rays"], nlohmann::json::parse("[[1,0],[1,2]]"));
}

TEST(Cli, OracleSubcommands) {
  auto s = run("oracle staircase --support " + data("whitney.json") +
               " --alpha 2,1,2 --m 8 --prime 10007 --trials 50");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(parse(s)["estimated_dim"], 15);
  auto t = run("oracle torus-point --support " + data("curve.json") + " --alpha 1,1 --trials 20");
  ASSERT_EQ(t.code, 0);
  EXPECT_TRUE(parse(t)["found"].get<bool>());
  auto e = run("oracle expand --support " + data("whitney.json") + " --alpha 2,1,2 --m 5");
  ASSERT_EQ(e.code, 0);
  EXPECT_TRUE(parse(e)["g"].contains("5"));
}

TEST(Cli, ValidationErrorsExitTwo) {
  EXPECT_EQ(run("toric --cone " + data("not_pointed.json")).code, 2);
  EXPECT_EQ(run("toric --cone " + data("malformed.json")).code, 2);
  EXPECT_EQ(run("hyper --support " + data("origin.json")).code, 2);
  EXPECT_EQ(run("oracle staircase --support " + data("whitney.json") + " --alpha 2,1 --m 8").code, 2);
  EXPECT_EQ(run("toric --cone /nonexistent.json").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, SubsetLimitExitsThree) {
  EXPECT_EQ(run("--max-subsets 1 toric --no-fast-paths --cone " + data("binomial_cone.json")).code, 3);
}

TEST(Cli, DeterministicOutput) {
  const std::string args = "--seed 5 hyper --certify --support " + data("curve.json");
  auto a = run(args);
  auto b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = run("--seed 5 oracle staircase --support " + data("a1_surface.json") + " --alpha 1,1,1 --m 5 --prime 101");
  auto d = run("--seed 5 oracle staircase --support " + data("a1_surface.json") + " --alpha 1,1,1 --m 5 --prime 101");
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, TimingsOnlyWhenAsked) {
  auto r = run("--timings toric --cone " + data("quadric_cone.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(parse(r).contains("timings"));
  EXPECT_FALSE(parse(run("toric --cone " + data("quadric_cone.json"))).contains("timings"));
}
