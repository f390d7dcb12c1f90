#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rackoh/cli/cli.hpp"
#include "rackoh/io/rack_io.hpp"

using rackoh::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rackoh::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("rackoh_cli_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("verify", "[cli]") {
  auto d3 = run({"verify", "--rack", "dihedral:3"});
  CHECK(d3.code == 0);
  CHECK(d3.out.find("quandle      true") != std::string::npos);

  auto c4 = run({"verify", "--rack", "cyclic:4", "--json"});
  CHECK(c4.code == 0);
  CHECK(Json::parse(c4.out)["quandle"] == false);
  CHECK(Json::parse(c4.out)["valid"] == true);

  const std::string bad = temp_file("bad.json", R"({"size": 2, "table": [[0, 0], [1, 1]]})");
  auto b = run({"verify", "--rack", "file:" + bad});
  CHECK(b.code == 1);
  CHECK(b.out.find("left_translation_bijective witness (0,0,1)") != std::string::npos);

  CHECK(run({"verify", "--rack", "file:/nonexistent/rack.json"}).code == 2);
  CHECK(run({"verify", "--rack", "file:" + temp_file("junk.json", "{not json")}).code == 2);
  CHECK(run({"verify", "--rack", "file:" + temp_file("ragged.json", R"({"table": [[0], [0, 1]]})")}).code == 2);
}

TEST_CASE("cohomology command", "[cli]") {
  auto q = run({"cohomology", "--rack", "dihedral:3", "--ring", "Q", "--max-degree", "3", "--json"});
  REQUIRE(q.code == 0);
  const Json doc = Json::parse(q.out);
  std::vector<std::size_t> betti;
  for (const auto& d : doc["degrees"]) betti.push_back(d["betti"]);
  CHECK(betti == std::vector<std::size_t>{1, 1, 1, 1});
  bool found = false;
  for (const auto& c : doc["checks"]) found = found || (c["name"] == "betti_equals_m_pow_n" && c["pass"] == true);
  CHECK(found);

  auto z = run({"cohomology", "--rack", "dihedral:3", "--ring", "Z", "--max-degree", "2"});
  CHECK(z.code == 0);
  CHECK(z.out.find("PASS  torsion_primes_divide_N") != std::string::npos);

  auto tw = run({"cohomology", "--rack", "trivial:2", "--twisted", "t=2,k=1", "--max-degree", "3", "--json"});
  CHECK(tw.code == 0);
  for (const auto& d : Json::parse(tw.out)["degrees"]) CHECK(d["betti"] == 0);

  auto op = run({"cohomology", "--rack", "dihedral:3", "--operator", "[[1,0],[0,2]]", "--json"});
  CHECK(op.code == 0);
  for (const auto& d : Json::parse(op.out)["degrees"]) CHECK(d["betti"] == 1);

  auto inv = run({"cohomology", "--rack", "dihedral:3", "--invariant", "--max-degree", "2"});
  CHECK(inv.code == 0);
  CHECK(inv.out.find("PASS  xi_isomorphism") != std::string::npos);

  const std::string module = temp_file("module.json", R"({"ring": "Q", "dim": 2, "action": {"type": "jordan", "t": 1}})");
  auto mod = run({"cohomology", "--rack", "cyclic:3", "--module", module, "--json"});
  CHECK(mod.code == 0);
  for (const auto& d : Json::parse(mod.out)["degrees"]) CHECK(d["betti"] == 1);
}

TEST_CASE("exit codes for bad input and budgets", "[cli]") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"cohomology", "--rack", "nope:3"}).code == 2);
  CHECK(run({"cohomology", "--rack", "dihedral:3", "--ring", "F4"}).code == 2);
  CHECK(run({"cohomology", "--rack", "dihedral:3", "--twisted", "t=0,k=1"}).code == 2);
  CHECK(run({"cohomology", "--rack", "dihedral:3", "--twisted", "t=x"}).code == 2);
  CHECK(run({"h2", "--rack", "dihedral:3", "--coeff", "F3"}).code == 2);

  auto big = run({"cohomology", "--rack", "trivial:12", "--max-degree", "3", "--budget-mb", "1"});
  CHECK(big.code == 3);
  CHECK(big.err.find("resource limit") != std::string::npos);
  CHECK(run({"h2", "--rack", "dihedral:3", "--nonabelian", "S4", "--search-budget", "100"}).code == 3);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("h2 and group commands", "[cli]") {
  auto z3 = run({"h2", "--rack", "dihedral:3", "--coeff", "Z3", "--json"});
  CHECK(z3.code == 0);
  CHECK(Json::parse(z3.out)["match"] == true);

  auto s3 = run({"h2", "--rack", "trivial:1", "--nonabelian", "S3", "--json"});
  CHECK(s3.code == 0);
  CHECK(Json::parse(s3.out)["nonabelian"]["class_count"] == 3);

  auto q = run({"h2", "--rack", "trivial:2", "--coeff", "Q", "--json"});
  CHECK(q.code == 0);
  CHECK(Json::parse(q.out)["direct"]["free_rank"] == 4);
  CHECK(Json::parse(q.out)["via_group"]["free_rank"] == 4);

  auto g = run({"group", "--rack", "conj:S3", "--ring", "Z", "--json"});
  CHECK(g.code == 0);
  CHECK(Json::parse(g.out)["h1_group"]["free_rank"] == 3);
}

TEST_CASE("output is deterministic and round-trips", "[cli]") {
  const std::vector<std::string> args{"cohomology", "--rack", "conj:S3", "--ring", "Z", "--max-degree", "3", "--json"};
  const auto first = run(args);
  CHECK(first.code == 0);
  CHECK(run(args).out == first.out);

  const std::string report = temp_file("report.json", first.out);
  const auto again = run({"normalize", report});
  CHECK(again.code == 0);
  CHECK(again.out == first.out);

  const auto rack = run({"rack", "--rack", "dihedral:4"});
  const std::string rack_file = temp_file("rack.json", rack.out);
  CHECK(run({"normalize", rack_file}).out == rack.out);
  CHECK(run({"rack", "--rack", "file:" + rack_file}).out == rack.out);

  CHECK(run({"normalize", temp_file("junk2.json", R"({"rack": 1})")}).code == 2);
}

TEST_CASE("corpus runner", "[cli]") {
  const auto one = run({"corpus", "--jobs", "1", "--json", "--max-degree", "2"});
  const auto many = run({"corpus", "--jobs", "4", "--json", "--max-degree", "2"});
  CHECK(one.code == 0);
  CHECK(one.out == many.out);
  const Json doc = Json::parse(one.out);
  CHECK(doc["failures"].empty());
  for (const auto& s : doc["summary"]) {
    CAPTURE(s.dump());
    CHECK(s["passed"] == s["total"]);
  }
}
