#include "bvkit/io/instance_file.hpp"
#include "bvkit/structures/check.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

using namespace bvkit;
using namespace testsupport;

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args) {
  std::string cmd = std::string(BVCHECK_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bvkit_cli_" + name);
}

/// Expected exit code of `check` computed from the library: 0 iff at least one
/// relation ran and none failed.
int expected_check_code(const Instance& inst, const std::string& suite, const Window& w) {
  std::vector<RelationId> ids;
  if (suite == "bvui") ids = bvui_full();
  if (suite == "frobenius") ids = frobenius_full();
  if (suite == "consequences") ids = consequence_suite();
  if (suite == "nine") ids = {RelationId::NineTerm};
  if (suite == "all") {
    ids = inst.has_counit() ? frobenius_full() : bvui_full();
    ids.insert(ids.end(), consequence_suite().begin(), consequence_suite().end());
    if (!applicability_problem(builtin_relation(RelationId::NineTerm), inst)) ids.push_back(RelationId::NineTerm);
  }
  std::size_t pass = 0, fail = 0;
  for (const auto& r : check_structure(inst, ids, w)) {
    pass += r.passed();
    fail += r.failed();
  }
  return fail == 0 && pass > 0 ? 0 : 3;
}

}  // namespace

TEST(Cli, CheckMatrixOverModelsAndSuites) {
  const std::vector<std::string> models{"sphere:3", "sphere:5", "sphere-frob:3", "sphere-frob:5",
                                        "trivial",  "exterior", "three-dim"};
  const std::vector<std::string> suites{"bvui", "frobenius", "consequences", "nine", "all"};
  for (const auto& name : models) {
    Instance inst = *builtin_model(name);
    Window w = inst.basis.is_finite() ? Window::all() : Window::up_to(3, 2);
    std::string window_args = inst.basis.is_finite() ? "" : " --window 3 --window3 2";
    for (const auto& suite : suites) {
      CliResult r = run("check " + name + " --suite " + suite + window_args);
      EXPECT_EQ(r.code, expected_check_code(inst, suite, w)) << name << " " << suite << "\n" << r.out;
    }
  }
}

TEST(Cli, SphereFullSuiteExitsZero) {
  CliResult r = run("check sphere:3 --suite all --window 4");
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, FrobeniusSuiteOnSphereOnlySkips) {
  // No counit: every Frobenius-only relation is skipped; the rest run and pass.
  CliResult r = run("check sphere:3 --suite Counit --window 2");
  EXPECT_EQ(r.code, 3) << r.out;
  EXPECT_NE(r.out.find("skipped"), std::string::npos);
}

TEST(Cli, EvalPrintsResult) {
  CliResult r = run("eval sphere:3 --expr \"lambda . Delta . mu\" --input \"AU^1 (x) U^1\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2*A(x)1 - 2*1(x)A\n");
  CliResult j = run("eval sphere:3 --expr \"Delta\" --input \"AU^2\" --json");
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["result"], "2*U");
  EXPECT_EQ(doc["degree"], 1);
}

TEST(Cli, DoubleThenCheck) {
  auto path = temp_file("double_trivial.json");
  CliResult d = run("double trivial --save " + path.string());
  EXPECT_EQ(d.code, 0) << d.out;
  CliResult c = run("check " + path.string() + " --suite all");
  EXPECT_EQ(c.code, 0) << c.out;
  std::filesystem::remove(path);
}

TEST(Cli, DoubleRejectsNonzeroCopairing) {
  auto path = temp_file("frob_as_bvui.json");
  save_instance(forget_frobenius_to_bvui(sphere_frobenius_model(3)), path);
  EXPECT_EQ(run("double " + path.string()).code, 2);
  EXPECT_EQ(run("double sphere:3").code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, GysinCommand) {
  EXPECT_EQ(run("gysin sphere:3 --window 5").code, 0);
  // Delta = 0: the axioms run and pass, the bracket relations have nothing to check.
  CliResult r = run("gysin three-dim");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("skipped"), std::string::npos);
}

TEST(Cli, MutateCommand) {
  EXPECT_EQ(run("mutate sphere:3 --mutation sphere-lambda-flip --suite Cocomm --window 3").code, 0);
  EXPECT_EQ(run("mutate sphere:3 --mutation sphere-delta-coeff --suite nine --window 3").code, 0);
  EXPECT_EQ(run("mutate sphere:3 --mutation identity --suite bvui --window 2").code, 4);
  EXPECT_EQ(run("mutate three-dim --mutation negate:lambda:b --suite bvui").code, 4);
  EXPECT_EQ(run("mutate three-dim --mutation negate:mu:1,b --suite bvui").code, 0);
  EXPECT_EQ(run("mutate sphere:3 --mutation bogus").code, 64);
}

TEST(Cli, FieldOptions) {
  EXPECT_EQ(run("check sphere:3 --field Fp:101 --window 3").code, 0);
  EXPECT_EQ(run("check sphere:3 --field Fp:2 --window 2").code, 64);
  EXPECT_EQ(run("check sphere:3 --field Fp:2 --diagnostic-char-two --window 2").code, 0);
  EXPECT_EQ(run("check sphere:3 --field Fp:9").code, 64);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 64);
  EXPECT_EQ(run("check").code, 64);
  EXPECT_EQ(run("check torus").code, 64);
  EXPECT_EQ(run("check sphere:3 --suite nonsense").code, 64);
  EXPECT_EQ(run("eval sphere:3 --expr \"mu .\" --input \"U (x) U\"").code, 64);
  EXPECT_EQ(run("eval sphere:3 --expr mu --input \"Q (x) U\"").code, 64);
  EXPECT_EQ(run("check sphere:3 --threads 0").code, 64);
  EXPECT_EQ(run("frobnicate").code, 64);
}

TEST(Cli, ValidationErrors) {
  auto path = temp_file("bad.json");
  {
    std::ofstream f(path);
    f << R"({"name": "bad", "field": "Q", "lambda_degree": 2, "basis": [{"name": "1", "degree": 0}],
            "mu": [], "lambda": [], "Delta": [], "eta": [{"name": "1", "coeff": 1}]})";
  }
  EXPECT_EQ(run("check " + path.string()).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, ReportsAreByteIdenticalAcrossRunsAndThreads) {
  auto a = temp_file("report_a.json");
  auto b = temp_file("report_b.json");
  CliResult r1 = run("check sphere:3 --window 3 --threads 1 --json --out " + a.string());
  CliResult r2 = run("check sphere:3 --window 3 --threads 4 --json --out " + b.string());
  EXPECT_EQ(r1.out, r2.out);
  std::ifstream fa(a), fb(b);
  std::string sa((std::istreambuf_iterator<char>(fa)), {});
  std::string sb((std::istreambuf_iterator<char>(fb)), {});
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, sb);
  auto doc = nlohmann::json::parse(sa);
  EXPECT_EQ(doc["command"], "check");
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
