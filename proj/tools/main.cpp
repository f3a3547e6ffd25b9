#include <CLI11.hpp>
#include <iostream>

#include "innerform/cli/commands.hpp"

using namespace innerform::cli;

int main(int argc, char** argv) {
  CLI::App app{"innerform: transfer maps, EP functions and finite GL_d identity checks"};
  app.require_subcommand(1);
  Limits lim;
  bool table = false;
  app.add_flag("--table", table, "human-readable output instead of JSON");
  app.add_option("--workers", lim.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--group-budget", lim.group_budget, "largest group order enumerated");
  app.add_option("--max-degree", lim.max_degree, "largest d for which S_d is enumerated");

  TransferArgs ta;
  auto* transfer = app.add_subcommand("transfer", "image of a basis element under the transfer map");
  transfer->add_option("--basis", ta.basis, "e | p | schur | monomial")->required()->check(CLI::IsMember({"e", "p", "schur", "monomial"}));
  transfer->add_option("--k", ta.k, "degree for e and p");
  transfer->add_option("--partition", ta.partition, "partition for schur and monomial, e.g. 2,1");
  transfer->add_option("--r", ta.r)->required();
  transfer->add_option("--d", ta.d)->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run an identity suite");
  verify->add_option("--suite", va.suite)->required()->check(
      CLI::IsMember({"transfer-consistency", "comb-prop", "weyl-vanishing", "finite-gl", "ep-shadow", "all"}));
  verify->add_option("--nmax", va.nmax);
  verify->add_option("--degmax", va.degmax);
  verify->add_option("--dmax", va.dmax);
  verify->add_option("--d", va.d);
  verify->add_option("--q", va.q);
  verify->add_option("--n", va.n);

  FiniteGlArgs fa;
  auto* finite = app.add_subcommand("finite-gl", "class functions on GL_d(F_q)");
  finite->add_option("--d", fa.d)->required();
  finite->add_option("--q", fa.q)->required();
  finite->add_option("--what", fa.what)->required()->check(CLI::IsMember({"classes", "ind", "dl", "comb-prop"}));
  finite->add_option("--c", fa.composition, "composition for --what ind");
  finite->add_option("--rho", fa.rho, "partition for --what dl");

  EpArgs ea;
  auto* epc = app.add_subcommand("ep", "EP-type parahoric combinations");
  epc->add_option("action", ea.action, "build | fj | shadow")->required()->check(CLI::IsMember({"build", "fj", "shadow"}));
  epc->add_option("--n", ea.n);
  epc->add_option("--d", ea.d);
  epc->add_option("--r", ea.r);
  epc->add_option("--type", ea.type, "partition of r");
  epc->add_option("--shadow-q", ea.shadow_q);
  epc->add_flag("--one-basis", ea.one_basis, "report coefficients against indicator functions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  RunReport rep;
  if (*transfer) rep = cmd_transfer(ta, lim);
  else if (*verify) rep = cmd_verify(va, lim);
  else if (*finite) rep = cmd_finite_gl(fa, lim);
  else rep = cmd_ep(ea, lim);

  if (table) std::cout << render_table(rep);
  else std::cout << rep.to_json().dump(2) << "\n";
  return rep.exit_code();
}
