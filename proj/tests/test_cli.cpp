#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path corpus = WONGSEQ_CORPUS_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run wongseq_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = wongseq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("wongseq_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const std::string& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string in(const char* name) { return (corpus / name).string(); }

}  // namespace

TEST_CASE("gallery sk3 then oracle") {
  TempDir t;
  REQUIRE(wongseq_run({"gallery", "sk3", "--field", "gf5", "-o", t.file("sk3.json")}).code == 0);
  auto r = wongseq_run({"oracle", t.file("sk3.json")});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["max_rank"] == 2);
  CHECK(j["disc"] == 0);
  CHECK(j["enumerated_elements"] == 125);
  CHECK(j["is_compression"] == false);
}

TEST_CASE("smr on the diagonal pair") {
  TempDir t;
  auto r = wongseq_run({"smr", in("diag_gf7.json"), "-o", t.file("cert.json")});
  REQUIRE(r.code == 0);
  auto j = json::parse(slurp(t.file("cert.json")));
  CHECK(j["status"] == "max_rank_found");
  CHECK(j["rank"] == 2);
  CHECK(j["c"] == 1);
  CHECK(j["witness_basis"] == json::parse("[[0, 0, 1]]"));
  auto v = wongseq_run({"verify", in("diag_gf7.json"), "--cert", t.file("cert.json")});
  CHECK(v.code == 0);
  CHECK(v.out.ends_with("PASS\n"));
}

TEST_CASE("sdit-tri --mod-p on upper2") {
  auto r = wongseq_run({"sdit-tri", "--mod-p", in("upper2_q.json")});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["status"] == "nonsingular_combination");
  CHECK((j["prime_used"] == 3 || j["prime_used"] == 5));
}

TEST_CASE("exit code 2 on algorithmic failure") {
  CHECK(wongseq_run({"smr", in("sk3_gf5.json")}).code == 2);
  CHECK(wongseq_run({"sdit-tri", in("sk3_gf5.json")}).code == 2);
  auto r = wongseq_run({"sdit-tri", "--mod-p", in("singular_q.json"), "--prime-budget", "2"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.out)["status"] == "inconclusive");
  CHECK(wongseq_run({"oracle", in("sk3_gf5.json"), "--budget", "10"}).code == 2);
}

TEST_CASE("exit code 1 on malformed input") {
  TempDir t;
  write(t.file("bad.json"), "{ not json");
  CHECK(wongseq_run({"smr", t.file("bad.json")}).code == 1);
  write(t.file("range.json"), R"({"field":{"kind":"prime","p":5},"n":1,"n_cols":1,"basis":[[[7]]]})");
  CHECK(wongseq_run({"smr", t.file("range.json")}).code == 1);
  write(t.file("nonprime.json"), R"({"field":{"kind":"prime","p":6},"n":1,"n_cols":1,"basis":[[[1]]]})");
  CHECK(wongseq_run({"smr", t.file("nonprime.json")}).code == 1);
  write(t.file("reducible.json"),
        R"({"field":{"kind":"extension","p":2,"k":2,"modulus":[1,0,1]},"n":1,"n_cols":1,"basis":[[[[1,0]]]]})");
  CHECK(wongseq_run({"smr", t.file("reducible.json")}).code == 1);
  write(t.file("shape.json"), R"({"field":{"kind":"prime","p":5},"n":2,"n_cols":2,"basis":[[[1,0]]]})");
  CHECK(wongseq_run({"smr", t.file("shape.json")}).code == 1);
  write(t.file("rat.json"), R"({"field":{"kind":"rational"},"n":1,"n_cols":1,"basis":[[["1/0"]]]})");
  CHECK(wongseq_run({"smr", t.file("rat.json")}).code == 1);
  CHECK(wongseq_run({"smr", t.file("missing.json")}).code == 1);
  CHECK(wongseq_run({"oracle", in("sk3_q.json")}).code == 1);
  CHECK(wongseq_run({"sdit-tri", "--mod-p", in("sk3_gf5.json")}).code == 1);
  CHECK(wongseq_run({"tri-test", in("sk3_gf5.json"), "--pivot", "9"}).code == 1);
  CHECK(wongseq_run({"nonsense"}).code == 1);
  CHECK(wongseq_run({"gallery", "sk3", "--field", "gf4"}).code == 1);
}

TEST_CASE("tri-test") {
  auto r = wongseq_run({"tri-test", in("upper2_gf7.json"), "--pivot", "0"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["triangularizable"] == true);
  r = wongseq_run({"tri-test", in("full2_gf7.json"), "--pivot", "0"});
  CHECK(r.code == 1);  // E11 is singular
  TempDir t;
  REQUIRE(wongseq_run({"gallery", "full", "--n", "2", "--field", "gf7", "-o", t.file("m2.json")}).code == 0);
  auto j = json::parse(slurp(t.file("m2.json")));
  j["basis"].push_back(json::parse("[[1,0],[0,1]]"));
  write(t.file("m2.json"), j.dump());
  r = wongseq_run({"tri-test", t.file("m2.json"), "--pivot", "4"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["triangularizable"] == false);
}

TEST_CASE("wong and po") {
  auto r = wongseq_run({"wong", in("diag_gf7.json"), "--anchor", "0", "--kind", "second"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["terms"][0]["basis"].empty());

  r = wongseq_run({"po", in("shift_gf7.json"), "--u", in("shift_u.json"), "--uprime", in("shift_uprime.json")});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["status"] == "found");
  CHECK(j["ell"] == 2);
  CHECK(j["coefficients"] == json::parse("[1, 1]"));
}

TEST_CASE("tampered certificates fail verification") {
  TempDir t;
  REQUIRE(wongseq_run({"smr", in("diag_gf7.json"), "-o", t.file("c.json")}).code == 0);
  auto j = json::parse(slurp(t.file("c.json")));
  j["rank"] = 3;
  j["c"] = 0;
  write(t.file("bad.json"), j.dump());
  auto v = wongseq_run({"verify", in("diag_gf7.json"), "--cert", t.file("bad.json")});
  CHECK(v.code == 2);
  CHECK(v.out.ends_with("FAIL\n"));

  j = json::parse(slurp(t.file("c.json")));
  j["witness_basis"] = json::parse("[[1, 0, 0]]");
  write(t.file("bad.json"), j.dump());
  CHECK(wongseq_run({"verify", in("diag_gf7.json"), "--cert", t.file("bad.json")}).code == 2);

  CHECK(wongseq_run({"verify", in("sk3_gf5.json"), "--cert", t.file("c.json")}).code == 2);
}

TEST_CASE("round trip and determinism over the corpus") {
  TempDir t;
  int runs = 0;
  for (const auto& entry : fs::directory_iterator(corpus)) {
    const auto name = entry.path().filename().string();
    if (name.rfind("shift_u", 0) == 0) continue;
    const auto path = entry.path().string();
    std::vector<std::vector<std::string>> commands{{"smr", path}, {"sdit-tri", path}, {"oracle", path},
                                                   {"wong", path, "--anchor", "0"},
                                                   {"sdit-tri", "--mod-p", path, "--prime-budget", "6"}};
    for (auto cmd : commands) {
      auto first = wongseq_run(cmd);
      if (first.code == 1) continue;
      auto second = wongseq_run(cmd);
      CHECK(first.out == second.out);
      write(t.file("cert.json"), first.out);
      auto v = wongseq_run({"verify", path, "--cert", t.file("cert.json")});
      INFO(name << " " << cmd[0]);
      CHECK(v.code == 0);
      ++runs;
    }
  }
  CHECK(runs > 40);
}
