// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <string>

#include "testutil.hpp"

using nlohmann::json;
using testutil::ProcResult;
using testutil::TempDir;

namespace {

const std::string kBin = ISORADIX_BIN;  // injected by the build

ProcResult run_tool(const std::string& args) { return testutil::run(kBin + " " + args + " 2>/dev/null"); }

// stdout and stderr merged, for asserting on error text
ProcResult run_merged(const std::string& args) { return testutil::run(kBin + " " + args + " 2>&1"); }

json run_json(const std::string& args) {
  const auto r = run_tool(args);
  REQUIRE(r.exit_code == 0);
  return json::parse(r.out);
}

std::size_t count_apc_files(const std::filesystem::path& dir) {
  std::size_t n = 0;
  for (const auto& de : std::filesystem::directory_iterator(dir))
    if (de.path().extension() == ".apc") ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("count reports order, trace, and class at one prime") {
  const json j = run_json("count --curve cm_i --p 7");
  CHECK(j["tool"] == "isoradix");
  CHECK(j["version"] == "1.0.0");
  CHECK(j["invocation"] == "count --curve cm_i --p 7 --seed 0 --format json");
  CHECK(j["label"] == "cm_i");
  CHECK(j["p"] == 7);
  CHECK(j["N"] == 8);
  CHECK(j["a"] == 0);
  CHECK(j["class"] == "supersingular");

  const json k = run_json("count --curve c11a --p 7");
  CHECK(k["N"] == 10);  // a_7 = -2
  CHECK(k["a"] == -2);
  CHECK(k["class"] == "ordinary");
}

TEST_CASE("csv and json outputs agree on the numbers") {
  const json j = run_json("count --curve gen_a --p 101");
  const auto r = run_tool("--format csv count --curve gen_a --p 101");
  REQUIRE(r.exit_code == 0);
  // two comment lines, a header, one data row
  CHECK(r.out.rfind("# tool: isoradix 1.0.0\n", 0) == 0);
  CHECK(r.out.find("# invocation: count --curve gen_a --p 101 --seed 0 --format csv\n") != std::string::npos);
  const std::string want_row = "101," + std::to_string(j["N"].get<std::uint64_t>()) + "," +
                               std::to_string(j["a"].get<std::int64_t>()) + "," + j["class"].get<std::string>();
  CHECK(r.out.find("p,N,a,class\n" + want_row + "\n") != std::string::npos);
}

TEST_CASE("user mistakes exit 1 with a message, help exits 0") {
  CHECK(run_tool("--help").exit_code == 0);
  CHECK(run_tool("count --help").exit_code == 0);

  auto r = run_merged("count --curve nosuch --p 7");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("unknown curve label") != std::string::npos);

  r = run_merged("count --curve c11a --p 11");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("bad reduction") != std::string::npos);

  CHECK(run_merged("count --curve cm_i --p 4").exit_code == 1);     // not prime
  CHECK(run_merged("").exit_code == 1);                             // subcommand required
  CHECK(run_merged("count --curve cm_i").exit_code == 1);           // --p required
  CHECK(run_merged("--format xml count --curve cm_i --p 7").exit_code == 1);
  CHECK(run_merged("--threads 0 count --curve cm_i --p 7").exit_code == 1);
  CHECK(run_merged("galois --model weird --ell 2").exit_code == 1);
}

TEST_CASE("galois reports the exact model constants") {
  const json j = run_json("galois --model gl2 --ell 2");
  CHECK(j["model"] == "gl2");
  CHECK(j["ell"] == 2);
  CHECK(j["order"] == 6);
  CHECK(j["eigen_one"] == "2/3");
  CHECK(!j.contains("coupled_mismatch"));

  const json c = run_json("galois --model gl2 --ell 2 --coupled");
  CHECK(c["coupled_mismatch"] == "4/9");
  CHECK(c["invocation"] == "galois --model gl2 --ell 2 --coupled --seed 0 --format json");

  CHECK(run_json("galois --model nonsplit --ell 5")["eigen_one"] == "1/24");
  CHECK(run_json("galois --model split --ell 5")["eigen_one"] == "7/16");

  const auto csv = run_tool("--format csv galois --model gl2 --ell 2");
  CHECK(csv.out.find("model,ell,order,eigen_one_num,eigen_one_den\ngl2,2,6,2,3\n") != std::string::npos);
}

TEST_CASE("compare pins the first witness for a non-isogenous pair") {
  const json j = run_json("compare --curve1 cm_i --curve2 cm_j --bound 50 --ells 2,3,5");
  CHECK(j["primes_tested"] == 13);
  CHECK(j["mismatches"].size() == 11);
  CHECK(j["mismatches"][0] == json({{"p", 5}, {"ell", 3}, {"v1", 0}, {"v2", 1}}));
  CHECK(j["verdict"]["status"] == "distinguished");
  CHECK(j["verdict"]["p"] == 5);
  CHECK(j["verdict"]["ell"] == 3);
}

TEST_CASE("compare stays consistent on an isogenous pair") {
  const json j = run_json("compare --curve1 cm_i --curve2 cm_i_iso --bound 200 --ells 2,3");
  CHECK(j["mismatches"].empty());
  CHECK(j["verdict"]["status"] == "consistent_with_isogeny");
  const std::string note = j["verdict"]["note"];
  CHECK(note.find("200") != std::string::npos);
}

TEST_CASE("density emits a full grid with exact fractions") {
  const json j = run_json("density --curve1 cm_i --curve2 cm_j --ell 2 --bound 200");
  CHECK(j["total"] == 44);
  CHECK(j["m_cap"] == 8);
  REQUIRE(j["counts"].size() == 10);
  REQUIRE(j["counts"][0].size() == 10);
  CHECK(j["counts"][2][1] == 7);
  CHECK(j["densities"][2][1] == "7/44");
  CHECK(j["counts"][0][0] == 0);  // good odd p never has odd order here

  const auto r = run_merged("density --curve1 cm_i --curve2 cm_j --ell 2 --bound 4");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("EmptySample") != std::string::npos);
}

TEST_CASE("reports are byte-identical across repeats and thread counts") {
  const std::string args = "compare --curve1 cm_i --curve2 cm_j --bound 200 --ells 2,3,5,7";
  const auto once = run_tool(args);
  const auto again = run_tool(args);
  const auto threaded = run_tool("--threads 4 " + args);
  REQUIRE(once.exit_code == 0);
  CHECK(once.out == again.out);
  CHECK(once.out == threaded.out);  // --threads never reaches the report
}

TEST_CASE("cache directory fills on first use and changes nothing") {
  TempDir tmp("clicache");
  const std::string args = "compare --curve1 cm_i --curve2 cm_j --bound 300 --ells 2,3";
  const auto plain = run_tool(args);
  const auto cold = run_tool("--cache-dir " + tmp.path().string() + " " + args);
  CHECK(count_apc_files(tmp.path()) == 2);
  const auto warm = run_tool("--cache-dir " + tmp.path().string() + " " + args);
  REQUIRE(plain.exit_code == 0);
  CHECK(plain.out == cold.out);
  CHECK(plain.out == warm.out);
}

TEST_CASE("cache directory can come from the environment") {
  TempDir tmp("clienv");
  const auto r = testutil::run("ISORADIX_CACHE_DIR=" + tmp.path().string() + " " + kBin +
                               " count --curve cm_i --p 10007 2>/dev/null");
  CHECK(r.exit_code == 0);
  // count touches no sweep, so nothing is cached; a sweep fills it
  CHECK(count_apc_files(tmp.path()) == 0);
  const auto s = testutil::run("ISORADIX_CACHE_DIR=" + tmp.path().string() + " " + kBin +
                               " compare --curve1 cm_i --curve2 cm_j --bound 100 --ells 2 2>/dev/null");
  CHECK(s.exit_code == 0);
  CHECK(count_apc_files(tmp.path()) == 2);
}

TEST_CASE("curve files feed fingerprint and shadow builtin labels") {
  TempDir tmp("clicurves");
  const auto file = tmp.path() / "curves.jsonl";
  testutil::write_file(file,
                       "{\"label\": \"w1\", \"a\": 1, \"b\": 0}\n"
                       "{\"label\": \"flat\", \"a\": 0, \"b\": 0}\n");

  auto r = run_merged("fingerprint --bound 50 --ells 2,3");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("requires --curves") != std::string::npos);

  const json j = run_json("--curves " + file.string() + " fingerprint --bound 50 --ells 3,2");
  CHECK(j["invocation"] ==
        "fingerprint --bound 50 --ells 2,3 --curves " + file.string() + " --seed 0 --format json");
  CHECK(j["bound"] == 50);
  REQUIRE(j["fingerprints"].size() == 1);  // the singular line is rejected, not fatal
  const json& fp = j["fingerprints"][0];
  CHECK(fp["label"] == "w1");
  CHECK(fp["degree"] == 1);
  CHECK(fp["ells"] == json({2, 3}));
  REQUIRE(fp["primes"].size() == 13);
  CHECK(fp["primes"][0] == 5);
  CHECK(fp["vals"][0] == json({2, 0}));  // N(5) = 4 for y^2 = x^3 + x
  REQUIRE(j["rejected"].size() == 1);
  CHECK(j["rejected"][0]["label"] == "flat");
  const std::string reason = j["rejected"][0]["reason"];
  CHECK(reason.find("singular") != std::string::npos);

  const auto csv = run_tool("--curves " + file.string() + " --format csv fingerprint --bound 50 --ells 2,3");
  CHECK(csv.out.find("label,curve_key,degree,p,v_2,v_3\n") != std::string::npos);
  CHECK(csv.out.find("w1,") != std::string::npos);

  // a file label overrides the builtin of the same name
  const auto shadow = tmp.path() / "shadow.jsonl";
  testutil::write_file(shadow, "{\"label\": \"cm_i\", \"a\": 0, \"b\": 1}\n");
  const json s = run_json("--curves " + shadow.string() + " count --curve cm_i --p 7");
  CHECK(s["N"] == 12);  // y^2 = x^3 + 1 over F_7, not the builtin
}

}  // TEST_SUITE
