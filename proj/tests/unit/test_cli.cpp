#include <doctest.h>

#include <cstdlib>
#include <string>

#include "innerform/cli/commands.hpp"

using namespace innerform::cli;

namespace {

int exit_status(const std::string& args) {
  const std::string cmd = std::string(INNERFORM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("cmd_transfer") {
  auto rep = cmd_transfer({"p", 1, "", 1, 2}, {});
  CHECK(rep.status == "pass");
  CHECK(rep.payload["image"]["terms"][0]["coeff"] == "v + v^-1");
  rep = cmd_transfer({"e", 2, "", 1, 2}, {});
  CHECK(rep.payload["image"]["terms"][0]["exponent"] == json::array({2}));
  CHECK(rep.payload["image"]["terms"][0]["coeff"] == "1");
  rep = cmd_transfer({"p", 1, "", 1, 1}, {});
  CHECK(rep.payload["image"]["text"] == rep.payload["input"]["text"]);
  rep = cmd_transfer({"schur", 0, "2,1", 2, 2}, {});
  CHECK(rep.status == "pass");
  rep = cmd_transfer({"schur", 0, "2,,1", 2, 2}, {});
  CHECK(rep.status == "error");
  CHECK(rep.exit_code() == 2);
  const json j = rep.to_json();
  CHECK(j["schema"] == "1");
  CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("cmd_verify suites") {
  CHECK(cmd_verify({"comb-prop", 6, 4, 6}, {}).status == "pass");
  CHECK(cmd_verify({"transfer-consistency", 6, 4}, {}).status == "pass");
  VerifyArgs v{"weyl-vanishing"};
  v.dmax = 4;
  CHECK(cmd_verify(v, {}).status == "pass");
  v = {"ep-shadow"};
  v.n = 3;
  v.q = 2;
  CHECK(cmd_verify(v, {}).status == "pass");
  v = {"finite-gl"};
  v.d = 2;
  v.q = 3;
  CHECK(cmd_verify(v, {}).status == "pass");
  CHECK(cmd_verify({"nope"}, {}).status == "error");
  Limits tight;
  tight.group_budget = 100;
  v.d = 3;
  v.q = 3;
  const auto rep = cmd_verify(v, tight);
  CHECK(rep.status == "error");
  CHECK(rep.payload["budget"] == 100);
}

TEST_CASE("cmd_finite_gl") {
  FiniteGlArgs a{2, 2, "dl", "", "2"};
  auto rep = cmd_finite_gl(a, {});
  CHECK(rep.status == "pass");
  CHECK(rep.payload["classes"].size() == 3);
  // R_(2) = triv - St: 1 - q at the identity
  const auto& classes = rep.payload["classes"];
  const auto& values = rep.payload["functions"]["R_2"];
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k]["size"] == 1) CHECK(values[k] == "-1");
  }
  a.what = "comb-prop";
  CHECK(cmd_finite_gl(a, {}).status == "pass");
  a.what = "ind";
  a.composition = "1,1";
  CHECK(cmd_finite_gl(a, {}).payload["functions"].contains("Ind_P1,1"));
  a.what = "bogus";
  CHECK(cmd_finite_gl(a, {}).status == "error");
}

TEST_CASE("cmd_ep") {
  EpArgs a{"build", 3};
  auto rep = cmd_ep(a, {});
  CHECK(rep.payload["combo"]["text"] == "e_(3) - e_(2,1) + 1/3*e_(1,1,1)");
  a = {"fj"};
  a.d = 2;
  a.r = 2;
  a.type = "1,1";
  a.shadow_q = 2;
  rep = cmd_ep(a, {});
  CHECK(rep.status == "pass");
  CHECK(rep.payload["shadow"]["ok"] == true);
  a = {"shadow"};
  a.n = 3;
  a.shadow_q = 3;
  CHECK(cmd_ep(a, {}).status == "pass");
  a = {"build"};
  CHECK(cmd_ep(a, {}).status == "error");
}

TEST_CASE("exit codes") {
  CHECK(exit_status("transfer --basis e --k 2 --r 1 --d 2") == 0);
  CHECK(exit_status("transfer --basis e --k 9 --r 1 --d 2") == 2);
  CHECK(exit_status("verify --suite comb-prop --dmax 4") == 0);
  CHECK(exit_status("--group-budget 10 finite-gl --d 2 --q 3 --what classes") == 2);
  CHECK(exit_status("frobnicate") == 2);
  CHECK(exit_status("--table ep build --n 4") == 0);
}
