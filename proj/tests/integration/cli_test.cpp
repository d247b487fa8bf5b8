#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef MINCUT_CLI_PATH
#error "MINCUT_CLI_PATH must name the mincut_cli binary"
#endif

namespace {

struct CliRun {
  int status = -1;
  std::string output;  // stdout and stderr interleaved
};

CliRun run_shell(const std::string& line) {
  const std::string cmd = "( " + line + " ) 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

CliRun run(const std::string& args) { return run_shell(std::string(MINCUT_CLI_PATH) + " " + args); }

// Generates a graph and feeds it to a second command through a pipe.
CliRun gen_then(const std::string& gen, const std::string& cmd) {
  return run("gen " + gen + " | " + std::string(MINCUT_CLI_PATH) + " " + cmd + " -");
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

TEST(Cli, EnumerateVerifiesOnCycle) {
  const CliRun r = gen_then("cycle 4", "enumerate --verify");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "verify=pass")) << r.output;
  EXPECT_TRUE(contains(r.output, "c 2 0-1 0-3")) << r.output;
}

TEST(Cli, CountOnly) {
  const CliRun r = gen_then("cycle 5", "enumerate --count-only");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.output, "total=10")) << r.output;
}

TEST(Cli, AuditOnTightnessGraph) {
  const CliRun r = gen_then("tightness 27 8 4", "audit");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_TRUE(contains(r.output, "vertices_Kprime=3 bound=101 pass=true")) << r.output;
  EXPECT_TRUE(contains(r.output, "edges_H=6 edge_bound=8 pass=true")) << r.output;
}

TEST(Cli, EveryStageVerifiesOnSmallGraph) {
  for (const char* cmd : {"mincut", "cactus", "compact", "sparsify", "enumerate"}) {
    const CliRun r = gen_then("random 12 0.3 --seed 4", std::string(cmd) + " --verify");
    EXPECT_EQ(r.status, 0) << cmd << ": " << r.output;
    EXPECT_TRUE(contains(r.output, "verify=pass")) << cmd << ": " << r.output;
  }
}

TEST(Cli, OracleRefusesLargeGraphWithoutLimit) {
  const CliRun r = gen_then("random 25 0.3 --seed 1", "oracle");
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(contains(r.output, "oracle limit exceeded")) << r.output;
  const CliRun flow = gen_then("random 25 0.3 --seed 1", "oracle --flow --count-only");
  EXPECT_EQ(flow.status, 0) << flow.output;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("gen tightness 27 8 3").status, 2);
  EXPECT_EQ(run("gen cycle").status, 2);
  EXPECT_EQ(run("enumerate /nonexistent/graph.txt").status, 2);
  EXPECT_EQ(run("enumerate --threads 0 -").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, MalformedInputIsRejected) {
  EXPECT_EQ(run("enumerate - < /dev/null").status, 2);
  const CliRun r = run_shell("printf 'p 3 2\\ne 0 1\\ne 1 9\\n' | " + std::string(MINCUT_CLI_PATH) + " enumerate -");
  EXPECT_EQ(r.status, 2) << r.output;
  EXPECT_TRUE(contains(r.output, "line 3")) << r.output;
}

TEST(Cli, DisconnectedInputIsRejected) {
  const CliRun r = gen_then("cliques 27 8", "enumerate");
  EXPECT_EQ(r.status, 2) << r.output;
}

TEST(Cli, OutputIsDeterministic) {
  const std::string cmd = "enumerate --threads 4";
  const CliRun a = gen_then("random 30 0.2 --seed 11", cmd);
  const CliRun b = gen_then("random 30 0.2 --seed 11", "enumerate --threads 1");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.output, b.output);
}

}  // namespace
