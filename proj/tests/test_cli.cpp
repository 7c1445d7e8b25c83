#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "chromhess/cancellation.hpp"
#include "chromhess/gkm.hpp"
#include "chromhess/json_io.hpp"
#include "test_support.hpp"

using namespace chromhess;
using namespace chromhess::testing;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_test_output.tmp";
  const std::string command =
      std::string(CHROMHESS_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(command.c_str());
  std::ifstream in(out_path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::remove(out_path.c_str());
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return RunResult{code, buffer.str()};
}

}  // namespace

TEST_CASE("rational-function serialization") {
  const QRational x = (QRational::one() + QRational::q()) / frac(2);
  const Json j = to_json(x);
  CHECK(j["num"] == Json::array({"1/2", "1/2"}));
  CHECK(j["den"] == Json::array({"1/1"}));
  CHECK(qrational_from_json(j) == x);

  const Json zero = to_json(QRational());
  CHECK(zero["num"] == Json::array({"0/1"}));
  CHECK(zero["den"] == Json::array({"1/1"}));
  CHECK(qrational_from_json(zero).is_zero());

  // Interior zero coefficients are kept, ascending powers of q.
  const Json sparse = to_json(QRational::one() - qp(2));
  CHECK(sparse["num"] == Json::array({"1/1", "0/1", "-1/1"}));
}

TEST_CASE("symmetric-function schema") {
  SymElementP x;
  x.add_term({2, 1}, QRational::q());
  x.add_term({1, 1, 1}, frac(1, 6));
  const Json j = to_json(x);
  CHECK(j["basis"] == "p");
  REQUIRE(j["terms"].size() == 2);
  // Terms sorted by index (lexicographic on the part lists).
  CHECK(j["terms"][0]["index"] == Json::array({1, 1, 1}));
  CHECK(j["terms"][1]["index"] == Json::array({2, 1}));

  const Json meta = frobenius_json(x, HessenbergFunction::parse("2,2"), "R");
  CHECK(meta["h"] == Json::array({2, 2}));
  CHECK(meta["ring"] == "R");
  CHECK(meta["basis"] == "p");
}

TEST_CASE("cancellation report schema") {
  const Json j = to_json(verify_cancellation(gh("2,2")));
  CHECK(j["graph"] == "2,2");
  CHECK(j["terms"] == 6);
  CHECK(j["paired"] == 6);
  CHECK(j["fixed_points"] == 0);
  CHECK(j["pass"] == true);
  CHECK(qrational_from_json(j["sum"]).is_zero());
}

TEST_CASE("csfq command") {
  CHECK(run_cli("csfq --h 2,2").output == "(1 + q)*M[1,1]\n");

  const RunResult json_run = run_cli("csfq --h 2,2 --format json");
  CHECK(json_run.exit_code == 0);
  const Json j = Json::parse(json_run.output);
  CHECK(j["basis"] == "M");
  REQUIRE(j["terms"].size() == 1);
  CHECK(j["terms"][0]["index"] == Json::array({1, 1}));
  CHECK(qrational_from_json(j["terms"][0]["coeff"]) ==
        QRational::one() + QRational::q());

  CHECK(run_cli("csfq --h 1,2").output == "(2)*M[1,1] + (1)*M[2]\n");
  // Power-sum form of the same element.
  CHECK(run_cli("csfq --h 1,2 --basis p").output == "(1)*p[1,1]\n");

  CHECK(run_cli("csfq --h 2,1").exit_code == 2);
  CHECK(run_cli("csfq --h nonsense").exit_code == 2);
}

TEST_CASE("frob command") {
  const RunResult right = run_cli("frob --h 2,2 --ring R --format json");
  CHECK(right.exit_code == 0);
  const Json j = Json::parse(right.output);
  CHECK(j["ring"] == "R");
  CHECK(j["h"] == Json::array({2, 2}));
  SymElementP expected;
  expected.add_term({1, 1}, (QRational::one() + QRational::q()) / frac(2));
  expected.add_term({2}, (QRational::one() - QRational::q()) / frac(2));
  CHECK(Json::parse(right.output) == frobenius_json(
            expected, HessenbergFunction::parse("2,2"), "R"));

  const RunResult left = run_cli("frob --h 2,2 --ring L");
  CHECK(left.output == "(1/2 + 1/2*q)*p[1,1] + (1/2 + 1/2*q)*p[2]\n");

  // Monomial-basis rendering applies the expansion.
  const RunResult as_m = run_cli("frob --h 2,2 --ring L --basis M");
  CHECK(as_m.exit_code == 0);
  CHECK(as_m.output == "(1 + q)*M[1,1] + (1 + q)*M[2]\n");

  CHECK(run_cli("frob --h 2,2,2").exit_code == 2);  // not a Hessenberg function
}

TEST_CASE("verify command") {
  const RunResult ok = run_cli("verify --n 2 --format json");
  CHECK(ok.exit_code == 0);
  std::istringstream lines(ok.output);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    CHECK(j["pass"] == true);
    CHECK(j["checks"].size() == 4);
    ++count;
  }
  CHECK(count == 4);  // sizes 0, 1 and two functions of size 2

  CHECK(run_cli("verify --n 99").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);
}

TEST_CASE("involution command") {
  const RunResult base = run_cli("involution --h 1 --format json");
  CHECK(base.exit_code == 0);
  const Json j = Json::parse(base.output);
  CHECK(j["base_case"] == true);
  CHECK(qrational_from_json(j["sum"]) == QRational::one() - QRational::q());

  const RunResult campaign = run_cli("involution --n 3 --format json");
  CHECK(campaign.exit_code == 0);
  std::istringstream lines(campaign.output);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(Json::parse(line)["pass"] == true);
    ++count;
  }
  CHECK(count == 4);  // G1 and the three connected graphs of sizes 2, 3

  CHECK(run_cli("involution").exit_code == 2);
  // Missing closing edge: a usage error, not a crash.
  CHECK(run_cli("involution --h 1,2").exit_code == 2);
}

TEST_CASE("output is byte-deterministic across parallelism levels") {
  const RunResult serial = run_cli("verify --n 3 --jobs 1 --format json");
  const RunResult parallel = run_cli("verify --n 3 --jobs 4 --format json");
  CHECK(serial.exit_code == 0);
  CHECK(parallel.exit_code == 0);
  CHECK(serial.output == parallel.output);

  const RunResult text1 = run_cli("involution --n 4 --jobs 2");
  const RunResult text2 = run_cli("involution --n 4 --jobs 1");
  CHECK(text1.output == text2.output);
}

TEST_CASE("--out writes the same bytes to a file") {
  const std::string path = "cli_out_file.tmp";
  const RunResult direct = run_cli("csfq --h 2,3,3 --format json");
  const RunResult redirected = run_cli("csfq --h 2,3,3 --format json --out " + path);
  CHECK(redirected.exit_code == 0);
  CHECK(redirected.output.empty());
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::remove(path.c_str());
  CHECK(buffer.str() == direct.output);
}
