#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pcconj/cli.hpp"

using namespace pcconj;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("nf") {
  const auto r = run({"nf", "--strands", "3", "1 2 1"});
  CHECK(r.code == cli::kTrue);
  CHECK(r.out == "D^1\n");
  const auto sq = run({"nf", "--strands", "3", "1 1"});
  CHECK(sq.out == "D^0 . [2,1,3] | [2,1,3]\n");
  const auto neg = run({"--json", "nf", "--strands", "3", "-1 -1"});
  const auto j = json::parse(neg.out);
  CHECK(j["inf"] == -2);
  CHECK(j["factors"].size() == 2);
  CHECK(run({"nf", "--strands", "3", "1 x"}).code == cli::kError);
  CHECK(run({"nf", "--strands", "3", "4"}).code == cli::kError);
}

TEST_CASE("conj") {
  const auto r = run({"conj", "--strands", "3", "1", "2"});
  CHECK(r.code == cli::kTrue);
  CHECK(r.out.rfind("TRUE", 0) == 0);
  const auto f = run({"conj", "--strands", "3", "1", "-1"});
  CHECK(f.code == cli::kFalse);
  CHECK(f.out.rfind("FALSE", 0) == 0);
  const auto j = json::parse(run({"conj", "--json", "--strands", "3", "1", "2"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["conjugate"] == true);
  CHECK(j["checks"]["word_problem"] == true);
  CHECK(j["checks"]["image_in_Kprime"] == true);
}

TEST_CASE("centralizer") {
  const auto r = run({"centralizer", "--strands", "3", "1"});
  CHECK(r.code == cli::kTrue);
  CHECK_FALSE(r.out.empty());
  const auto j = json::parse(run({"--json", "centralizer", "--strands", "3", "1 1"}).out);
  for (const auto& g : j["generators"]) {
    const BraidWord w(3, g.get<std::vector<int>>());
    CHECK(equals(conjugate_word(BraidWord(3, {1, 1}), w), BraidWord(3, {1, 1})));
  }
  const auto sub = json::parse(
      run({"--json", "centralizer", "--group", "Bn-X", "--x", "3", "--strands", "3",
           "1 2 1 1 2 1"})
          .out);
  for (const auto& g : sub["generators"]) {
    CHECK(mu(BraidWord(3, g.get<std::vector<int>>())).image(3) == 3);
  }
  const auto inf = run({"centralizer", "--group", "affineA", "--strands", "4", "--artin", "1"});
  CHECK(inf.code == cli::kError);
  CHECK(inf.err.find("infinite index") != std::string::npos);
}

TEST_CASE("subconj") {
  const auto f = run({"subconj", "--group", "Bn-X", "--x", "3", "--strands", "3", "1 1", "2 2"});
  CHECK(f.code == cli::kFalse);
  CHECK(f.out.find("lift") != std::string::npos);
  const auto t = run({"subconj", "--group", "Bn-X", "--x", "3", "--strands", "3", "1 2 2",
                      "2 2 1"});
  CHECK(t.code == cli::kTrue);
  CHECK(run({"subconj", "--group", "Bn-X", "--x", "3", "--strands", "3", "2", "2"}).code ==
        cli::kError);
  CHECK(run({"subconj", "--group", "nope", "--strands", "3", "1", "1"}).code == cli::kError);
  CHECK(run({"subconj", "--group", "typeB", "--strands", "3", "--artin", "1 2", "2 1"}).code ==
        cli::kTrue);
  CHECK(run({"subconj", "--group", "affineC", "--strands", "4", "1 1 3", "3 1 1"}).code ==
        cli::kTrue);
  CHECK(run({"subconj", "--group", "colored", "--strands", "3", "1 1", "2 2"}).code ==
        cli::kFalse);
}

TEST_CASE("refusals exit with code 2") {
  for (const auto& x : {"1,2,3", "1,2,3,4", "1,2,3,4,5"}) {
    const auto r = run({"subconj", "--group", "IBn", "--x", x, "--strands", "9", "1", "1"});
    CHECK(r.code == cli::kError);
    CHECK(r.err.find("unsupported") != std::string::npos);
  }
  const auto m5 =
      run({"subconj", "--group", "IBn", "--x", "1,2,3,4,5", "--strands", "9", "1", "1"});
  CHECK(m5.err.find("no PC triple") != std::string::npos);
  CHECK(run({"subconj", "--group", "IBn", "--x", "2,3", "--strands", "4", "1", "1"}).code ==
        cli::kError);
  CHECK(run({}).code == cli::kError);
  CHECK(run({"frobnicate"}).code == cli::kError);
}

TEST_CASE("verify round trip") {
  const std::vector<std::vector<std::string>> cases{
      {"--json", "conj", "--strands", "4", "1 2 3 -1", "2 3 1 -2"},
      {"--json", "subconj", "--group", "Bn-X", "--x", "3", "--strands", "3", "1 1", "2 2"},
      {"--json", "subconj", "--group", "Bn-X", "--x", "3", "--strands", "3", "1 2 2",
       "2 2 1"},
      {"--json", "subconj", "--group", "IBn", "--x", "1,2", "--strands", "4", "3 2 2 -3",
       "-3 2 2 3"},
      {"--json", "subconj", "--group", "affineA", "--strands", "4", "--artin", "1 2", "2 3"},
      {"--json", "subconj", "--group", "affineA", "--strands", "4", "--artin", "1 2 -3",
       "2 1 -3"},
  };
  int index = 0;
  for (const auto& args : cases) {
    const auto r = run(args);
    REQUIRE(r.code != cli::kError);
    const auto j = json::parse(r.out);
    CHECK((r.code == cli::kTrue) == j["conjugate"].get<bool>());
    if (j["conjugate"].get<bool>()) {
      CHECK(j["checks"]["word_problem"] == true);
      CHECK(j["checks"]["image_in_Kprime"] == true);
    }
    const auto path = write_temp("pcconj_cert_" + std::to_string(index++) + ".json", r.out);
    const auto v = run({"verify", path.string()});
    CHECK(v.code == cli::kTrue);
    CHECK(v.out == "valid\n");
    std::filesystem::remove(path);
  }
}

TEST_CASE("verify rejects tampered certificates") {
  const auto r = run({"--json", "conj", "--strands", "3", "1", "2"});
  auto j = json::parse(r.out);
  j["conjugator"] = std::vector<int>{1};
  auto path = write_temp("pcconj_bad1.json", j.dump());
  auto v = run({"verify", path.string()});
  CHECK(v.code == cli::kFalse);
  CHECK(v.out.find("invalid") != std::string::npos);

  j["conjugate"] = false;
  j["conjugator"] = nullptr;
  path = write_temp("pcconj_bad2.json", j.dump());
  CHECK(run({"verify", path.string()}).code == cli::kFalse);

  path = write_temp("pcconj_bad3.json", "{not json");
  CHECK(run({"verify", path.string()}).code == cli::kError);
  CHECK(run({"verify", "/nonexistent/cert.json"}).code == cli::kError);
  std::filesystem::remove(path);
}
