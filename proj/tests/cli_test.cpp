#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status;
  std::string out;
};

Outcome rgoi(const std::string& args) {
  std::string cmd = std::string(RGOI_CLI) + " " + args + " 2>/dev/null";
  Outcome r{0, {}};
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, {}};
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string sample(const std::string& name) { return std::string(RGOI_SOURCE_DIR) + "/samples/" + name; }

fs::path scratch(const std::string& name, const std::string& content) {
  fs::path dir = fs::temp_directory_path() / "rgoi_cli_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << content;
  return p;
}

TEST(Cli, Golden) {
  EXPECT_EQ(rgoi("count " + sample("ex1.rterm")).out, "addends: 2, regular paths: 2, MATCH\n");
  EXPECT_EQ(rgoi("count " + sample("three.rterm")).out, "addends: 6, regular paths: 6, MATCH\n");
  EXPECT_EQ(rgoi("normalize " + sample("short_bag.rterm")).out, "0\n");
  EXPECT_EQ(rgoi("normalize " + sample("ex1.rterm")).out, "2⋆\n");
  EXPECT_EQ(rgoi("normalize " + sample("weakening.rterm")).out, "⋆\n");
  EXPECT_EQ(rgoi("exec " + sample("star.rnet.json")).out, "⋆\n");
  EXPECT_EQ(rgoi("exec " + sample("ex1.rnet.json")).out, "2·⋆\n");
  EXPECT_EQ(rgoi("exec --ascii " + sample("ex1.rterm")).out, "2.*\n");
  EXPECT_EQ(rgoi("check " + sample("ex1.rterm")).out, "⋆\n");
  EXPECT_EQ(rgoi("check --ascii " + sample("ex1.rterm")).out, "*\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(rgoi("").status, 1);
  EXPECT_EQ(rgoi("frobnicate x").status, 1);
  EXPECT_EQ(rgoi("check /nonexistent/t.rterm").status, 1);
  EXPECT_EQ(rgoi("check " + scratch("bad.rterm", "(\\x:*. x").string()).status, 2);
  EXPECT_EQ(rgoi("exec " + scratch("bad.rnet.json", "{\"vertices\": [").string()).status, 2);
  EXPECT_EQ(rgoi("check " + sample("delta.rterm")).status, 3);
  // two ⋆ links on one vertex: same polarity
  std::string clash = R"({"vertices":[{"id":1,"type":"*"}],"links":[
    {"kind":"star","premises":[],"conclusion":1},{"kind":"star","premises":[],"conclusion":1}]})";
  EXPECT_EQ(rgoi("exec " + scratch("clash.rnet.json", clash).string()).status, 4);
  // the counting corollary is for ground terms; the identity has two regular
  // paths and one addend
  Outcome id = rgoi("count " + scratch("id.rterm", "\\x:*. x").string());
  EXPECT_EQ(id.status, 5);
  EXPECT_EQ(id.out, "addends: 1, regular paths: 2, MISMATCH\n");
}

TEST(Cli, OutputsAreByteIdentical) {
  for (const char* args : {"translate ", "paths --weights ", "render ", "net-normalize "}) {
    std::string a = rgoi(args + sample("ex1.rterm")).out;
    EXPECT_FALSE(a.empty()) << args;
    EXPECT_EQ(a, rgoi(args + sample("ex1.rterm")).out) << args;
  }
  EXPECT_EQ(rgoi("verify --count 10 --format json").out, rgoi("verify --count 10 --format json").out);
}

TEST(Cli, Paths) {
  Outcome r = rgoi("paths --live --comprehensive --weights --format json " + sample("ex1.rterm"));
  ASSERT_EQ(r.status, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.at("paths").size(), 2u);
  for (const auto& p : j.at("paths")) {
    EXPECT_EQ(p.at("addend"), 0);
    EXPECT_EQ(p.at("weight"), "⋆");
  }
  Outcome s = rgoi("paths " + sample("star.rterm"));
  EXPECT_EQ(s.out, "[0] (v1, v1)\n");
}

// Translate, then normalize the net, agrees with normalizing the term.
TEST(Cli, RoundTrip) {
  for (const char* name : {"ex1", "short_bag", "star", "weakening", "three", "sum"}) {
    std::string term = sample(std::string(name) + ".rterm");
    fs::path net = scratch(std::string(name) + ".rnet.json", "");
    ASSERT_EQ(rgoi("translate " + term + " -o " + net.string()).status, 0);
    Outcome nf = rgoi("net-normalize " + net.string());
    ASSERT_EQ(nf.status, 0) << name;
    auto addends = nlohmann::json::parse(nf.out).at("addends").size();
    std::string count = rgoi("count " + term).out;
    EXPECT_EQ(count.rfind("addends: " + std::to_string(addends) + ",", 0), 0u) << name << ": " << count;
    fs::path normal = scratch(std::string(name) + ".nf.rnet.json", nf.out);
    EXPECT_EQ(rgoi("exec " + normal.string()).out, rgoi("exec " + net.string()).out) << name;
  }
}

TEST(Cli, Verify) {
  Outcome r = rgoi("verify --seed 3 --count 15 --max-depth 4 --max-bag 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("15 terms, 0 skipped"), std::string::npos) << r.out;
  auto j = nlohmann::json::parse(rgoi("verify --count 5 --format json").out);
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_EQ(j.at("reports").size(), 8u);
}

}  // namespace
