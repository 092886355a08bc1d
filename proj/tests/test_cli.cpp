#include "sepinv/cli.hpp"
#include "sepinv/invariants.hpp"
#include "sepinv/verifier.hpp"

#include "test_support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <random>
#include <sstream>

using namespace sepinv;
using sepinv::testing::pt;

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Scratch directory removed on scope exit.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("sepinv_cli_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("indexset") {
  const Outcome s3 = run({"indexset", "--n", "3", "--set", "S"});
  CHECK(s3.code == cli::kExitClean);
  CHECK(contains(s3.out, "S(3): size 8"));
  CHECK(contains(s3.out, "(1,0) (2,0) (3,0) (0,1) (0,2) (0,3) (1,1) (2,1)\n"));

  const Outcome m1 = run({"indexset", "--n", "1", "--set", "M", "--format", "json"});
  CHECK(m1.code == cli::kExitClean);
  CHECK(m1.out == "[[1,0],[0,1]]\n");

  const Outcome s100 = run({"indexset", "--n", "100", "--format", "json"});
  CHECK(nlohmann::json::parse(s100.out).size() == 582);
}

TEST_CASE("sizes") {
  const Outcome text = run({"sizes", "--max-n", "100"});
  CHECK(text.code == cli::kExitClean);
  const auto rows = nlohmann::json::parse(run({"sizes", "--max-n", "100", "--format", "json"}).out);
  REQUIRE(rows.size() == 100);
  CHECK(rows[0] == nlohmann::json{{"n", 1}, {"M", 2}, {"S", 2}, {"D", 1}});
  CHECK(rows[3] == nlohmann::json{{"n", 4}, {"M", 14}, {"S", 12}, {"D", 8}});
  CHECK(rows[99] == nlohmann::json{{"n", 100}, {"M", 5150}, {"S", 582}, {"D", 482}});
  CHECK(contains(text.out, "5150"));
}

TEST_CASE("fingerprint") {
  TempDir dir;
  cli::write_point_file(dir.file("p.json"), pt({1, 2, 3}, {1, 0, 2}));
  const Outcome s3 = run({"fingerprint", "--point", dir.file("p.json")});
  CHECK(s3.code == cli::kExitClean);
  CHECK(contains(s3.out, "(2,1) → 19\n"));

  cli::write_point_file(dir.file("zero.json"), pt({0, 0, 0}, {0, 0, 0}));
  const Outcome zero = run({"fingerprint", "--point", dir.file("zero.json"), "--set", "M", "--format", "json"});
  for (const auto& v : nlohmann::json::parse(zero.out)["values"]) CHECK(v == "0");

  cli::write_point_file(dir.file("s2.json"), pt({1, 2}, {3, 4}));
  const auto s2 = nlohmann::json::parse(run({"fingerprint", "--point", dir.file("s2.json"), "--format", "json"}).out);
  CHECK(s2["values"] == nlohmann::json{"3", "5", "7", "25", "11"});
  CHECK(s2["indices"] == nlohmann::json::parse("[[1,0],[2,0],[0,1],[0,2],[1,1]]"));

  CHECK(run({"fingerprint", "--point", dir.file("p.json"), "--n", "4"}).code == cli::kExitError);
  CHECK(run({"fingerprint", "--point", dir.file("missing.json")}).code == cli::kExitError);
}

TEST_CASE("check-separation") {
  CHECK(run({"check-separation", "--n", "4", "--grid", "0,1,2", "--set", "S"}).code == cli::kExitClean);

  const Outcome dropped = run({"check-separation", "--n", "4", "--grid", "0,1,2", "--drop", "1,2", "--show", "1"});
  CHECK(dropped.code == cli::kExitWitness);
  CHECK(contains(dropped.out, "collision\n"));

  const auto bits = nlohmann::json::parse(
      run({"check-separation", "--n", "2", "--grid", "0,1", "--format", "json"}).out);
  CHECK(bits["orbit_count"] == 10);
  CHECK(bits["collision_count"] == 0);

  // (1,2) is not in S(3).
  CHECK(run({"check-separation", "--n", "3", "--grid", "0,1", "--drop", "1,2"}).code == cli::kExitError);
}

TEST_CASE("match") {
  TempDir dir;
  const PointPair p = pt({1, 2, 2, 5}, {0, 3, -1, 3});
  const PointPair shuffled = apply_permutation(Permutation::from_one_based({3, 1, 4, 2}), p);
  cli::write_point_file(dir.file("p.json"), p);
  cli::write_point_file(dir.file("q.json"), shuffled);
  const Outcome perm = run({"match", dir.file("p.json"), dir.file("q.json"), "--format", "json"});
  REQUIRE(perm.code == cli::kExitClean);
  std::vector<std::size_t> one_based = nlohmann::json::parse(perm.out)["sigma"];
  CHECK(apply_permutation(Permutation::from_one_based(one_based), shuffled) == p);

  CHECK(run({"match", dir.file("p.json"), dir.file("p.json")}).out == "permutation [1 2 3 4]\n");

  cli::write_point_file(dir.file("a.json"), pt({1, 2, 3}, {1, 3, 0}));
  cli::write_point_file(dir.file("b.json"), pt({1, 2, 3}, {3, 0, 1}));
  const Outcome w = run({"match", dir.file("a.json"), dir.file("b.json")});
  CHECK(w.code == cli::kExitWitness);
  CHECK(w.out == "witness (1,1): " + eval_invariant(BiIndex(1, 1), pt({1, 2, 3}, {1, 3, 0})).to_string() +
                     " vs " + eval_invariant(BiIndex(1, 1), pt({1, 2, 3}, {3, 0, 1})).to_string() + "\n");

  CHECK(run({"match", dir.file("p.json"), dir.file("a.json")}).code == cli::kExitError);
}

TEST_CASE("fixture validation command") {
  const Outcome all = run({"paper-witnesses"});
  CHECK(all.code == cli::kExitClean);
  CHECK(contains(all.out, "6/6 fixtures valid"));

  const Outcome tampered = run({"paper-witnesses", "--tamper", "2"});
  CHECK(tampered.code == cli::kExitError);
  CHECK(contains(tampered.out, "FAILED"));
  CHECK(contains(tampered.out, "5/6 fixtures valid"));

  const auto doc = nlohmann::json::parse(run({"paper-witnesses", "--format", "json"}).out);
  CHECK(doc["valid"] == 6);
  CHECK(doc["fixtures"][0]["values"] == nlohmann::json{"19", "17"});

  CHECK(run({"paper-witnesses", "--tamper", "7"}).code == cli::kExitError);
}

TEST_CASE("witness searches") {
  TempDir dir;
  const std::string prefix = dir.file("w");

  const Outcome found = run({"find-witness", "--n", "3", "--drop", "2,1", "--grid", "0,1,2,3", "--out-prefix", prefix});
  CHECK(found.code == cli::kExitWitness);
  CHECK(contains(found.out, "witness: S(3)\\(2,1) is not separating"));
  const WitnessPair saved{cli::read_point_file(prefix + ".p.json"), cli::read_point_file(prefix + ".q.json"),
                          BiIndex(2, 1)};
  CHECK(validate_witness(saved, 3));

  const auto l1 = nlohmann::json::parse(run({"lemma1", "--n", "2", "--axis", "y", "--j", "2", "--format", "json"}).out);
  CHECK(l1["found"] == true);
  CHECK(l1["removed"] == nlohmann::json{0, 2});
  const WitnessPair y{cli::parse_point_json(l1["p"].dump()), cli::parse_point_json(l1["q"].dump()), BiIndex(0, 2)};
  CHECK(validate_witness(y, 2));

  const auto l2 = nlohmann::json::parse(run({"lemma2", "--n", "4", "--format", "json"}).out);
  CHECK(l2["b"] == nlohmann::json{"0", "2"});
  CHECK(l2["c"] == nlohmann::json{"1", "1"});
  CHECK(l2["values"] == nlohmann::json{"8", "10"});

  const Outcome none = run({"lemma1", "--n", "2", "--j", "1", "--grid", "0,1,2,3"});
  CHECK(none.code == cli::kExitClean);
  CHECK(contains(none.out, "inconclusive"));
  const Outcome tiny = run({"find-witness", "--n", "3", "--drop", "2,1", "--grid", "0,1,2,3", "--budget", "2"});
  CHECK(tiny.code == cli::kExitClean);
  CHECK(contains(tiny.out, "inconclusive"));

  CHECK(run({"lemma2", "--n", "3"}).code == cli::kExitError);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == cli::kExitError);
  CHECK(run({"indexset", "--n", "0"}).code == cli::kExitError);
  CHECK(run({"indexset", "--n", "3", "--set", "Q"}).code == cli::kExitError);
  CHECK(run({"frobnicate"}).code == cli::kExitError);
  CHECK(run({"check-separation", "--n", "2", "--grid", "0,x"}).code == cli::kExitError);
  CHECK(run({"find-witness", "--n", "3", "--drop", "2"}).code == cli::kExitError);
}

TEST_CASE("--help exits cleanly") {
  const Outcome help = run({"--help"});
  CHECK(help.code == cli::kExitClean);
  CHECK(contains(help.out, "check-separation"));
}

TEST_CASE("JSON output is deterministic") {
  const std::vector<std::vector<std::string>> commands = {
      {"check-separation", "--n", "3", "--grid", "-1,0,1", "--drop", "2,1", "--format", "json"},
      {"lemma2", "--n", "6", "--grid", "0,1,2,3,4,5,6", "--format", "json"},
      {"paper-witnesses", "--format", "json"},
  };
  for (const auto& args : commands) CHECK(run(args).out == run(args).out);
}

TEST_CASE("point files") {
  CHECK(cli::parse_point_json(R"({"n":2,"x":["1/2","-3"],"y":["0","4/6"]})") ==
        PointPair({Rational(1, 2), Rational(-3)}, {Rational(0), Rational(2, 3)}));
  CHECK(cli::point_to_json(pt({1, 2, 3}, {1, 0, 2})) == R"({"n":3,"x":["1","2","3"],"y":["1","0","2"]})");

  CHECK_THROWS_AS(cli::parse_point_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_point_json(R"({"n":2,"x":["1"],"y":["1","2"]})"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_point_json(R"({"n":1,"x":[1],"y":["1"]})"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_point_json(R"({"n":0,"x":[],"y":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_point_json(R"({"n":1,"x":["1/0"],"y":["1"]})"), std::invalid_argument);

  TempDir dir;
  std::mt19937_64 rng(77);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> xs;
    std::vector<Rational> ys;
    const std::size_t n = 1 + t % 6;
    for (std::size_t i = 0; i < n; ++i) {
      xs.push_back(testing::random_rational(rng, 1000, 97));
      ys.push_back(testing::random_rational(rng, 1000, 97));
    }
    const PointPair p(xs, ys);
    cli::write_point_file(dir.file("rt.json"), p);
    CHECK(cli::read_point_file(dir.file("rt.json")) == p);
  }
}

TEST_CASE("parse_grid and parse_index") {
  CHECK(cli::parse_grid("2,-1,1/2,2").values() ==
        std::vector<Rational>{Rational(-1), Rational(1, 2), Rational(2)});
  CHECK(cli::parse_index("3,1") == BiIndex(3, 1));
  CHECK_THROWS(cli::parse_grid(""));
  CHECK_THROWS(cli::parse_index("0,0"));
  CHECK_THROWS(cli::parse_index("1;2"));
}
