#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "bigproj/claims.hpp"
#include "doctest.h"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const char* exe = std::getenv("BIGPROJ_CLI");
  REQUIRE(exe != nullptr);
  std::string cmd = std::string(exe) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

using namespace bigproj;

TEST_SUITE("cli") {
  TEST_CASE("kl polynomial in A3") {
    auto r = cli("kl --system A3 --x s2 --w s2s1s3s2 --format json");
    CHECK(r.code == 0);
    auto j = json_of(r);
    CHECK(j["schema_version"] == 1);
    CHECK(j["polynomial"] == "1+q");
    auto e = cli("kl --system A2 --x e --w s1s2s1 --format json");
    CHECK(json_of(e)["polynomial"] == "1");
  }

  TEST_CASE("uq block dimensions") {
    auto r = cli("uq --ell 3 --format json");
    CHECK(r.code == 0);
    auto j = json_of(r);
    REQUIRE(j["blocks"].size() == 2);
    CHECK(j["blocks"][0]["dim"] == 18);
    CHECK(j["blocks"][1]["dim"] == 9);
    CHECK(j["total"] == 27);
    CHECK(cli("uq --ell 4").code == 2);
  }

  TEST_CASE("verify the sl2 claims") {
    auto r = cli("verify --system A1 --depth 6 --format json");
    CHECK(r.code == 0);
    auto j = json_of(r);
    CHECK(j["summary"]["fail"] == 0);
    int pass = 0;
    for (const auto& rep : j["reports"]) {
      CHECK(rep["status"] != "fail");
      if (rep["status"] == "pass") ++pass;
    }
    CHECK(pass == 9);
  }

  TEST_CASE("claim filter and report fields") {
    auto r = cli("verify --only kernel-ideal --format json");
    CHECK(r.code == 0);
    auto j = json_of(r);
    REQUIRE(j["reports"].size() == 1);
    const auto& rep = j["reports"][0];
    CHECK(rep["claim_id"] == "kernel-ideal");
    CHECK(rep["status"] == "pass");
    CHECK(rep["table"]["rows"].size() == 2);
    CHECK_FALSE(rep.contains("seconds"));
    auto skipped = json_of(cli("verify --system A2 --only root-of-unity --format json"));
    CHECK(skipped["reports"][0]["status"] == "skipped");
    CHECK(skipped["reports"][0]["reason"].get<std::string>().size() > 0);
  }

  TEST_CASE("rationals are serialized as p/q") {
    auto j = json_of(cli("whittaker borel-weil --lambda -4 --eta 3 --depth 4 --format json"));
    CHECK(j["witness_coefficient"] == "27/1");
    CHECK(j["eta"][0] == "3/1");
    CHECK(j["passed"] == true);
    auto h = json_of(cli("whittaker toda-dim --lambda -1 --eta 2 --eta-right 1/2 --format json"));
    CHECK(h["eta_right"] == "1/2");
    CHECK(h["dim"] == 1);
  }

  TEST_CASE("reruns are byte identical") {
    for (const char* args : {"verify --system A1 --only block-character,endomorphisms",
                             "bigcell --system A2 --tables --format json", "matrixel kernel --lambda -3",
                             "char --system A2 --lambda -2,-2 --kind projective --depth 3"}) {
      auto a = cli(args), b = cli(args);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
      CHECK_FALSE(a.out.empty());
    }
  }

  TEST_CASE("exit codes") {
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("kl --system A3").code == 2);
    CHECK(cli("verify --only no-such-claim").code == 2);
    CHECK(cli("verify --format xml").code == 2);
    CHECK(cli("kl --system A3 --w s7").code == 2);
    CHECK(cli("matrixel endo --system A2").code == 2);
    // eta = 0 is singular: the witness vanishes and the claim fails.
    CHECK(cli("verify --system A1 --only whittaker-borel-weil --eta 0").code == 1);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("claim helpers") {
    CHECK(poly_string({1, 1}) == "1+q");
    CHECK(poly_string({1, 2, 1}) == "1+2q+q^2");
    CHECK(poly_string({0, -1, 0}) == "-q");
    CHECK(poly_string({}) == "0");
    CHECK(parse_weyl_word("s2s1s3s2", 3) == std::vector<int>{1, 0, 2, 1});
    CHECK(parse_weyl_word("e", 2).empty());
    CHECK_THROWS(parse_weyl_word("s4", 3));
    CHECK_THROWS(parse_weyl_word("t1", 3));
    CHECK_THROWS(run_claims({}, {"no-such-claim"}));
  }

  TEST_CASE("a wrong KL reference makes the combinatorics claim fail") {
    ClaimOptions o;
    o.systems = {"A3"};
    o.kl_reference = [](const WeylGroup&, int, int) { return IntPoly{1}; };
    auto r = run_claim("combinatorics", o);
    CHECK(r.status == ClaimStatus::Fail);
    o.kl_reference = nullptr;
    CHECK(run_claim("combinatorics", o).status == ClaimStatus::Pass);
    o.systems = {"B2"};
    CHECK(run_claim("combinatorics", o).status == ClaimStatus::Skipped);
  }
}
