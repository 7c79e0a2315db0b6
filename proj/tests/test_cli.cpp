// Drives the built qalg binary as a subprocess.

#include <gtest/gtest.h>

#include <json.hpp>
#include <support/fixtures.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <unistd.h>
#include <sys/wait.h>

using qalg::testing::fixture_path;
using qalg::testing::fixture_names;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
    int exit_code = -1;
    std::string out;
};

/// Runs the CLI with stderr folded into the captured output when `merge`.
Run run(const std::string& args, bool merge = false, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + std::string(QALG_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Json run_json(const std::string& args) {
    auto r = run("--json " + args);
    EXPECT_EQ(r.exit_code, 0) << args;
    return Json::parse(r.out);
}

std::string fx(const std::string& name) { return fixture_path(name); }

}  // namespace

TEST(Cli, ReportOnTheSquare) {
    auto j = run_json("report " + fx("example2.qalg"));
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["presentation"]["ring"], "K[x]/()");
    ASSERT_EQ(j["presentation"]["generators"].size(), 1u);
    EXPECT_EQ(j["presentation"]["generators"][0]["degree"], 4);
    EXPECT_EQ(j["classification"],
              Json::parse(R"({"1":"Nontrivial","2":"Trivial","3":"Nontrivial","4":"Trivial"})"));
    EXPECT_EQ(j["input"]["sha256"].get<std::string>().size(), 64u);
    EXPECT_FALSE(j.contains("timing_ms"));
}

TEST(Cli, ReportTextMentionsTheRing) {
    auto r = run("report " + fx("example2.qalg"));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("K[x]/()"), std::string::npos);
}

TEST(Cli, StackedOnTheTriangles) {
    auto j = run_json("stacked " + fx("example1.qalg"));
    EXPECT_EQ(j["stacked"]["D"], 2);
    EXPECT_EQ(j["stacked"]["A"], 1);
}

TEST(Cli, HhOnNonStackedIsAPreconditionFailure) {
    auto r = run("hh " + fx("nonstacked.qalg"), true);
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.out.find("NotStacked"), std::string::npos) << r.out;
}

TEST(Cli, ReportOnNonStackedSucceedsWithNullSections) {
    auto j = run_json("report " + fx("nonstacked.qalg"));
    EXPECT_FALSE(j["stacked"]["is_stacked"].get<bool>());
    EXPECT_TRUE(j["presentation"].is_null());
}

TEST(Cli, ValidationFailuresExitOne) {
    auto r = run("validate /nonexistent/file.qalg", true);
    EXPECT_EQ(r.exit_code, 1);
    char tmpl[] = "/tmp/qalg_cli_XXXXXX";
    int fd = mkstemp(tmpl);
    ASSERT_GE(fd, 0);
    const std::string text = "algebra x\nvertices 1\narrow a 1 2\n";
    ASSERT_EQ(write(fd, text.data(), text.size()), static_cast<ssize_t>(text.size()));
    close(fd);
    r = run(std::string("validate ") + tmpl, true);
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.out.find(":3:11: error E003"), std::string::npos) << r.out;
    std::remove(tmpl);
}

TEST(Cli, InfiniteDimensionalExitsOne) {
    char tmpl[] = "/tmp/qalg_cli_XXXXXX";
    int fd = mkstemp(tmpl);
    ASSERT_GE(fd, 0);
    const std::string text = "algebra x\nvertices 1\narrow a 1 1\n";
    ASSERT_EQ(write(fd, text.data(), text.size()), static_cast<ssize_t>(text.size()));
    close(fd);
    auto r = run(std::string("validate ") + tmpl, true);
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.out.find("InfiniteDimensional"), std::string::npos) << r.out;
    std::remove(tmpl);
}

TEST(Cli, BadWindowIsAnInputError) {
    EXPECT_EQ(run("fg-probe --window 6-12 " + fx("example1.qalg")).exit_code, 1);
}

TEST(Cli, ProjectiveDimensionOfOneVertex) {
    auto j = run_json("pd --vertex 5 " + fx("four_cycle_trail.qalg"));
    ASSERT_EQ(j["projective_dimensions"].size(), 1u);
    EXPECT_EQ(j["projective_dimensions"][0]["kind"], "Finite");
    EXPECT_EQ(j["projective_dimensions"][0]["value"], 0);
}

TEST(Cli, ResolveInjective) {
    auto j = run_json("resolve --module inj:3 --max 6 " + fx("example3.qalg"));
    const auto& terms = j["resolution"]["terms"];
    ASSERT_EQ(terms.size(), 7u);
    EXPECT_EQ(terms[0]["multiplicities"], Json::parse(R"({"3":2})"));
    EXPECT_EQ(terms[6]["multiplicities"], Json::parse(R"({"2":12})"));
    EXPECT_EQ(j["resolution"]["outcome"], "PeriodicityCertificate");
}

TEST(Cli, CenterAndProbe) {
    EXPECT_EQ(run_json("center " + fx("example2.qalg"))["center"]["dimension"], 2);
    auto j = run_json("fg-probe --window 6..12 " + fx("example1.qalg"));
    EXPECT_EQ(j["fg_evidence"]["kind"], "Positive");
}

TEST(Cli, EnvironmentOverridesDefaultBounds) {
    auto r = run("--json chains " + fx("example4.qalg"), false, "QALG_MAX_DEGREE=3");
    ASSERT_EQ(r.exit_code, 0);
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["max_degree"], 3);
    EXPECT_EQ(j["degrees"].size(), 4u);
    EXPECT_EQ(run_json("ext " + fx("example4.qalg"))["max_degree"], 12);
}

TEST(Cli, ReportIsDeterministicAcrossRunsAndThreading) {
    for (const auto& name : fixture_names()) {
        auto a = run("--json report " + fx(name));
        auto b = run("--json report " + fx(name));
        auto c = run("--json --parallel report " + fx(name));
        EXPECT_EQ(a.exit_code, 0) << name;
        EXPECT_EQ(a.out, b.out) << name;
        EXPECT_EQ(a.out, c.out) << name;
        auto t1 = run("report " + fx(name)), t2 = run("--parallel report " + fx(name));
        EXPECT_EQ(t1.out, t2.out) << name;
    }
}

TEST(Cli, TimingIsOptIn) {
    auto j = run_json("--timing report " + fx("example1.qalg"));
    EXPECT_TRUE(j.contains("timing_ms"));
}

TEST(Cli, EveryFixtureReportsWithinOneSecond) {
    for (const auto& name : fixture_names()) {
        auto t0 = std::chrono::steady_clock::now();
        auto r = run("report " + fx(name));
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        EXPECT_EQ(r.exit_code, 0) << name;
        EXPECT_LT(ms, 1000) << name;
    }
}
