#pragma once

#include <cstdint>
#include <string>

#include "innerform/finitegl/group.hpp"
#include "innerform/serialize.hpp"
#include "innerform/weylcomb.hpp"

namespace innerform::cli {

using io::json;

struct RunReport {
  std::string command;
  json params = json::object();
  std::string status = "pass";  // pass | fail | error
  json payload;
  long long elapsed_ms = 0;

  json to_json() const;
  /// 0 pass, 1 fail, 2 error.
  int exit_code() const;
};

struct Limits {
  int workers = 1;
  std::uint64_t group_budget = finitegl::kDefaultBudget;
  int max_degree = weyl::kDefaultMaxDegree;
};

struct TransferArgs {
  std::string basis;  // e | p | schur | monomial
  int k = 0;
  std::string partition;
  int r = 1;
  int d = 1;
};

struct VerifyArgs {
  std::string suite;  // transfer-consistency | comb-prop | weyl-vanishing | finite-gl | ep-shadow | all
  int nmax = 6;
  int degmax = 4;
  int dmax = 6;
  int d = 2;
  int q = 2;
  int n = 3;
};

struct FiniteGlArgs {
  int d = 2;
  int q = 2;
  std::string what;  // classes | ind | dl | comb-prop
  std::string composition;
  std::string rho;
};

struct EpArgs {
  std::string action;  // build | fj | shadow
  int n = 0;
  int d = 0;
  int r = 0;
  std::string type;
  int shadow_q = 0;
  bool one_basis = false;
};

RunReport cmd_transfer(const TransferArgs& a, const Limits& lim);
RunReport cmd_verify(const VerifyArgs& a, const Limits& lim);
RunReport cmd_finite_gl(const FiniteGlArgs& a, const Limits& lim);
RunReport cmd_ep(const EpArgs& a, const Limits& lim);

/// Human-readable rendering of a report.
std::string render_table(const RunReport& r);

}  // namespace innerform::cli
