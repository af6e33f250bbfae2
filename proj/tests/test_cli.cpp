#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sftcd/cli.hpp"
#include "sftcd/io.hpp"

using sftcd::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;

  json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sftcd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = sftcd::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "sftcd_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_builtin(const std::string& name) {
  const auto path = scratch() / (name + ".json");
  std::ofstream(path) << sftcd::builtin_document(name).dump(2);
  return path.string();
}

}  // namespace

TEST(Cli, ClassDegreeOfPhi) {
  const auto r = run({"class-degree", "--triple", write_builtin("xor2"), "--max-len", "5"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto doc = r.doc();
  EXPECT_EQ(doc["value"], 2);
  EXPECT_EQ(doc["stabilized"], true);
  EXPECT_TRUE(doc.contains("block"));
  EXPECT_TRUE(doc.contains("coordinate"));
  EXPECT_TRUE(doc.contains("routing_set"));
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, VerifyBuiltinCorpus) {
  const auto r = run({"verify", "--corpus", "builtin"});
  EXPECT_EQ(r.status, 0) << r.out;
  std::istringstream lines(r.out);
  std::string line, last;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    json::parse(line);
    last = line;
    ++count;
  }
  EXPECT_EQ(count, sftcd::builtin_names().size() + 1);
  EXPECT_EQ(json::parse(last)["summary"]["fail"], 0);
}

TEST(Cli, VerifyEmptyCorpus) {
  const auto empty = scratch() / "empty";
  std::filesystem::create_directories(empty);
  const auto r = run({"verify", "--corpus", empty.string()});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(json::parse(r.out)["summary"]["cases"], 0);
}

TEST(Cli, VerifyGeneratedSpecs) {
  const auto r = run({"verify", "--gen", R"([{"sweep": [1, 5]}, {"seed": 9, "y_symbols": 2, "z_symbols": 1}])",
                      "--max-len", "8", "--jobs", "2"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("\"gen-9\""), std::string::npos);
}

TEST(Cli, InvalidBlockExitsTwo) {
  const auto path = write_builtin("xor2");
  EXPECT_EQ(run({"depth", "--triple", path, "--block", "11", "--which", "pi"}).status, 2);
  EXPECT_EQ(run({"depth", "--triple", path, "--block", "12"}).status, 2);
  EXPECT_EQ(run({"rdepth", "--triple", "golden-trivial", "--block", "11"}).status, 2);
  const auto ok = run({"depth", "--triple", path, "--block", "11"});
  EXPECT_EQ(ok.status, 0);
  EXPECT_EQ(ok.doc()["value"], 2);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"bogus"}).status, 2);
  EXPECT_EQ(run({"depth", "--triple", "xor2"}).status, 2);
  EXPECT_EQ(run({"class-degree", "--triple", "/nonexistent.json"}).status, 2);
  EXPECT_EQ(run({"dump", "--triple", "xor2", "--format", "svg"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, DepthAndRelativeDepth) {
  const auto d = run({"depth", "--triple", "xor2", "--which", "pi", "--block", "zzzzz"});
  ASSERT_EQ(d.status, 0) << d.err;
  EXPECT_EQ(d.doc()["value"], 1);
  EXPECT_EQ(d.doc()["coordinate"], 3);
  EXPECT_EQ(d.doc()["routing_set"], json::array({"00"}));
  const auto rd = run({"rdepth", "--triple", "xor2", "--block", "0"});
  ASSERT_EQ(rd.status, 0);
  EXPECT_EQ(rd.doc()["value"], 2);
}

TEST(Cli, RelativeDegree) {
  const auto r = run({"relative", "--triple", "xor2", "--max-len", "6"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.doc()["value"], 1);
  const auto p = run({"relative", "--triple", "xor2-identity", "--point", "(0)", "--max-len", "5"});
  ASSERT_EQ(p.status, 0) << p.err;
  EXPECT_EQ(p.doc()["value"], 2);
}

TEST(Cli, Magic) {
  const auto r = run({"magic", "--triple", "mod3", "--max-len", "4"});
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.doc()["value"], 3);
  EXPECT_EQ(r.doc()["certified"], true);
}

TEST(Cli, Bridge) {
  const auto code = scratch() / "xor2_phi.json";
  std::ofstream(code) << sftcd::code_to_json(sftcd::load_code("xor2").code).dump();
  const auto none = run({"bridge", "--code", code.string(), "--from", "(00)", "--to", "(11)", "--m", "0",
                         "--window", "8"});
  ASSERT_EQ(none.status, 0) << none.err;
  EXPECT_EQ(none.doc()["found"], false);
  const auto built = run({"bridge", "--triple", "xor2", "--from", "(00)", "--to", "(11)", "--block", "00000"});
  ASSERT_EQ(built.status, 0) << built.err;
  EXPECT_EQ(built.doc()["verified"], true);
  EXPECT_EQ(built.doc()["forward"]["middle"], "00·00·00·01·11");
  const auto bad = run({"bridge", "--triple", "xor2", "--from", "(00·11)", "--to", "(11)"});
  EXPECT_EQ(bad.status, 2);
}

TEST(Cli, ClassesFixed) {
  const auto r = run({"classes-fixed", "--triple", "two-loops", "--z", "z"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.doc()["count"], 2);
  EXPECT_EQ(run({"classes-fixed", "--triple", "two-loops", "--z", "q"}).status, 2);
}

TEST(Cli, GenerateIsDeterministic) {
  const auto a = run({"generate", "--seed", "5", "--y", "3", "--blowup-max", "3", "--z", "2"});
  const auto b = run({"generate", "--seed", "5", "--y", "3", "--blowup-max", "3", "--z", "2"});
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(sftcd::triple_from_json(a.doc()));
}

TEST(Cli, DumpRoundTrip) {
  for (const auto& name : sftcd::builtin_names()) {
    const auto first = run({"dump", "--triple", name});
    ASSERT_EQ(first.status, 0);
    const auto path = scratch() / ("dump_" + name + ".json");
    std::ofstream(path) << first.out;
    const auto second = run({"dump", "--triple", path.string()});
    EXPECT_EQ(first.out, second.out) << name;
  }
  const auto dot = run({"dump", "--triple", "xor2", "--format", "dot"});
  EXPECT_EQ(dot.status, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
}
