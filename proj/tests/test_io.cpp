#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "minram/cache.hpp"
#include "minram/cli.hpp"
#include "minram/config.hpp"
#include "minram/errors.hpp"

using namespace minram;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(std::string name) : path(std::move(name)) { std::remove(path.c_str()); }
  ~TempFile() { std::remove(path.c_str()); }
};

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  int code = cli::run_command(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cache records round-trip with version and timestamp") {
  TempFile tmp("minram_test_cache.jsonl");
  CacheRecord rec;
  rec.kind = "schinzel";
  rec.params = R"({"n":2})";
  rec.payload = R"({"t":"4"})";
  append_cache_record(tmp.path, rec);
  append_cache_record(tmp.path, rec);

  std::vector<CacheRecord> back = read_cache_records(tmp.path);
  REQUIRE(back.size() == 2);
  CHECK(back[0].kind == "schinzel");
  CHECK(back[0].params == R"({"n":2})");
  CHECK(back[0].payload == R"({"t":"4"})");
  CHECK(back[0].tool_version == tool_version_string());
  // ISO-8601 UTC: 2026-08-14T12:00:00Z.
  REQUIRE(back[0].timestamp.size() == 20);
  CHECK(back[0].timestamp[4] == '-');
  CHECK(back[0].timestamp[10] == 'T');
  CHECK(back[0].timestamp.back() == 'Z');
}

TEST_CASE("cache reader names the offending line") {
  TempFile tmp("minram_test_cache_bad.jsonl");
  {
    std::ofstream f(tmp.path);
    f << R"({"v":1,"kind":"bms","params":{},"payload":{}})" << "\n";
    f << "not json\n";
  }
  try {
    read_cache_records(tmp.path);
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  {
    std::ofstream f(tmp.path);
    f << R"({"v":1,"kind":"bms"})" << "\n";
  }
  CHECK_THROWS_AS(read_cache_records(tmp.path), parse_error);
  CHECK_THROWS_AS(read_cache_records("no_such_cache_file.jsonl"), input_error);
}

TEST_CASE("cache path resolution prefers the explicit path") {
  setenv("MINRAM_CACHE", "env_cache.jsonl", 1);
  CHECK(resolve_cache_path("explicit.jsonl") == "explicit.jsonl");
  CHECK(resolve_cache_path("") == "env_cache.jsonl");
  unsetenv("MINRAM_CACHE");
  CHECK(resolve_cache_path("").empty());
}

TEST_CASE("config files parse key = value lines with comments") {
  TempFile tmp("minram_test_run.cfg");
  {
    std::ofstream f(tmp.path);
    f << "# defaults\n\nn = 3\nt-max = 99  # inline comment\n";
  }
  RunConfig cfg = load_run_config(tmp.path);
  CHECK(cfg.values.size() == 2);
  CHECK(cfg.get("n") == "3");
  CHECK(cfg.get("t-max") == "99");
  CHECK(cfg.has("n"));
  CHECK_FALSE(cfg.has("seed"));

  {
    std::ofstream f(tmp.path);
    f << "n = 2\nbroken line\n";
  }
  try {
    load_run_config(tmp.path);
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  {
    std::ofstream f(tmp.path);
    f << "= 5\n";
  }
  CHECK_THROWS_AS(load_run_config(tmp.path), parse_error);
  CHECK_THROWS_AS(load_run_config("no_such_config.cfg"), input_error);
}

TEST_CASE("command exit codes follow the outcome") {
  std::string out;
  CHECK(run({"schinzel", "--n", "2", "--a", "1,-1", "--t-max", "10"}, &out) == 0);
  CHECK(out.find("\"t\": \"4\"") != std::string::npos);
  CHECK(out.find("\"h_value\": \"113\"") != std::string::npos);

  CHECK(run({"bms", "--n", "2", "--p-max", "1"}, &out) == 2);
  CHECK(out.find("\"type\": \"not-found\"") != std::string::npos);

  CHECK(run({"schinzel", "--bogus"}) == 1);
  CHECK(run({"galois", "--coeffs=x,1"}) == 1);
  CHECK(run({"realize", "--group", "C2", "--n", "9"}) == 2);
  CHECK(run({}) == 1);
}

TEST_CASE("payloads are byte-identical across thread counts") {
  std::string one, four;
  CHECK(run({"schinzel", "--n", "2", "--threads", "1", "--t-max", "2000"}, &one) == 0);
  CHECK(run({"schinzel", "--n", "2", "--threads", "4", "--t-max", "2000"}, &four) == 0);
  CHECK(one == four);

  std::string b1, b3;
  CHECK(run({"bms", "--n", "5", "--threads", "1"}, &b1) == 0);
  CHECK(run({"bms", "--n", "5", "--threads", "3"}, &b3) == 0);
  CHECK(b1 == b3);
}

TEST_CASE("cached runs re-verify and tampering is caught") {
  TempFile tmp("minram_test_verify.jsonl");
  CHECK(run({"bms", "--n", "2", "--cache", tmp.path}) == 0);
  CHECK(run({"galois", "--coeffs=28,-15,1", "--cache", tmp.path}) == 0);

  std::string out;
  CHECK(run({"verify", "--cache", tmp.path}, &out) == 0);
  CHECK(out.find("\"mismatches\": 0") != std::string::npos);

  std::string text = slurp(tmp.path);
  const std::string from = "\"r\":\"11\"";
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, from.size(), "\"r\":\"13\"");
  {
    std::ofstream f(tmp.path);
    f << text;
  }
  CHECK(run({"verify", "--cache", tmp.path}, &out) == 3);
  CHECK(out.find("\"mismatches\": 1") != std::string::npos);
  CHECK(run({"verify", "--cache", tmp.path, "--index", "1"}, &out) == 0);
}

TEST_CASE("config defaults feed the parser and argv wins") {
  TempFile cfg("minram_test_cli.cfg");
  {
    std::ofstream f(cfg.path);
    f << "t-max = 10\na = 1,-1\n";
  }
  std::string out;
  CHECK(run({"schinzel", "--n", "2", "--config", cfg.path}, &out) == 0);
  CHECK(out.find("\"t\": \"4\"") != std::string::npos);

  // Command-line values take precedence over the file.
  CHECK(run({"schinzel", "--n", "2", "--config", cfg.path, "--t-max", "2"}, &out) == 2);
}

TEST_CASE("output files mirror stdout") {
  TempFile copy("minram_test_output.json");
  std::string out;
  CHECK(run({"bms", "--n", "2", "--output", copy.path}, &out) == 0);
  CHECK(slurp(copy.path) == out);
}

TEST_CASE("search listing includes the point-stabilizer hit") {
  std::string out;
  CHECK(run({"nq-search", "--group", "C2", "--n-max", "5"}, &out) == 0);
  CHECK(out.find("\"order\": \"12\"") != std::string::npos);
  CHECK(run({"nq-search", "--group", "C2", "--n", "2", "--n-max", "2"}, &out) == 0);
}
