#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "stabclass/cli.hpp"

using namespace stabclass;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "stabclass");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("stabclass_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

nlohmann::ordered_json load(const std::filesystem::path& p) { return nlohmann::ordered_json::parse(slurp(p)); }

}  // namespace

TEST(Decide, ExitCodes) {
  EXPECT_EQ(run({"decide", "--group-a", "C12", "--group-b", "C4", "--prime", "2"}).code, 0);
  const auto r = run({"decide", "--group-a", "S3", "--group-b", "C3", "--prime", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness Q = C3"), std::string::npos);
  EXPECT_NE(r.out.find("verdict: algebraic criterion fails at p = 3"), std::string::npos);
  EXPECT_EQ(run({"decide", "--group-a", "C4", "--group-b", "C2xC2", "--prime", "2"}).code, 1);
  EXPECT_EQ(run({"decide", "--group-a", "S3", "--group-b", "C2", "--prime", "2", "--check-props"}).code, 0);
}

TEST(Decide, ErrorsExitTwo) {
  EXPECT_EQ(run({"decide", "--group-a", "C4", "--group-b", "Z4", "--prime", "2"}).code, 2);
  EXPECT_EQ(run({"decide", "--group-a", "C4", "--group-b", "C2", "--prime", "4"}).code, 2);
  EXPECT_EQ(run({"decide", "--group-a", "C4", "--prime", "2"}).code, 2);
  EXPECT_EQ(run({"decide", "--group-a", "S5", "--group-b", "C2", "--prime", "2", "--max-order", "24"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  const auto r = run({"decide", "--group-a", "C2xQ3", "--group-b", "C2", "--prime", "2"});
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Decide, JsonSchemaAndRoundTrip) {
  const auto path = temp_file("decide.json");
  ASSERT_EQ(run({"decide", "--group-a", "D8", "--group-b", "Q8", "--prime", "2", "--json", path.string()}).code, 1);
  const auto text = slurp(path);
  const auto doc = nlohmann::ordered_json::parse(text);
  EXPECT_EQ(doc.dump(2) + "\n", text);
  std::vector<std::string> keys;
  for (const auto& item : doc.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "inputs", "verdict", "per_q", "props", "lemmas"}));
  EXPECT_FALSE(doc["verdict"]["equivalent"].get<bool>());
  bool saw_klein = false;
  for (const auto& q : doc["per_q"]) {
    ASSERT_TRUE(q.contains("q"));
    ASSERT_TRUE(q.contains("inj_sizes"));
    ASSERT_TRUE(q.contains("profiles"));
    ASSERT_TRUE(q.contains("iso"));
    if (q["q"] == "C2xC2") {
      saw_klein = true;
      EXPECT_FALSE(q["iso"].get<bool>());
      EXPECT_EQ(q["inj_sizes"][1].get<std::size_t>(), 0u);
    }
  }
  EXPECT_TRUE(saw_klein);
  std::filesystem::remove(path);
}

TEST(Inspect, SpecExamples) {
  const auto path = temp_file("inspect.json");
  ASSERT_EQ(run({"inspect", "--group", "C2xC2", "--prime", "2", "--q", "C2", "--json", path.string()}).code, 0);
  auto doc = load(path);
  EXPECT_EQ(doc["per_q"][0]["inj"], 3);
  EXPECT_EQ(doc["per_q"][0]["cen"], 0);
  ASSERT_EQ(run({"inspect", "--group", "S3", "--prime", "2", "--q", "C2", "--json", path.string()}).code, 0);
  doc = load(path);
  EXPECT_EQ(doc["per_q"][0]["inj"], 1);
  EXPECT_EQ(doc["per_q"][0]["cen"], 1);
  EXPECT_EQ(doc["per_q"][0]["ncen"], 0);
  const auto r = run({"inspect", "--group", "C2", "--prime", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("tilde classes"), std::string::npos);
  EXPECT_EQ(run({"inspect", "--group", "C2x", "--prime", "2"}).code, 2);
  std::filesystem::remove(path);
}

TEST(Verify, SmokeAndNegativeControl) {
  EXPECT_EQ(run({"verify", "--max-order", "4", "--prime", "2"}).code, 0);
  const auto path = temp_file("corrupt.json");
  const auto bad = run({"verify", "--max-order", "8", "--prime", "2", "--corrupt-fixture", "--json", path.string()});
  EXPECT_NE(bad.code, 0);
  const auto doc = load(path);
  EXPECT_FALSE(doc["verdict"]["passed"].get<bool>());
  ASSERT_FALSE(doc["verdict"]["failures"].empty());
  EXPECT_EQ(run({"verify", "--max-order", "4", "--prime", "7"}).code, 0);
  EXPECT_EQ(run({"verify", "--max-order", "40", "--prime", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "--max-order", "4", "--prime", "x"}).code, 2);
  std::filesystem::remove(path);
}

TEST(Binary, DeterministicJson) {
  const std::string bin = STABCLASS_BINARY;
  const auto out = temp_file("det.json");
  const std::string cmd = bin + " verify --max-order 8 --prime all --json " + out.string() + " > /dev/null";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  const std::string first = slurp(out);
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(first, slurp(out));
  EXPECT_FALSE(first.empty());
  std::filesystem::remove(out);
}
