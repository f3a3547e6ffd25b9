#include "innerform/cli/commands.hpp"

#include <chrono>
#include <sstream>

#include "innerform/algebra/qcombinatorics.hpp"
#include "innerform/epfun.hpp"
#include "innerform/errors.hpp"
#include "innerform/transfer.hpp"

namespace innerform::cli {

json RunReport::to_json() const {
  return {{"schema", "1"}, {"command", command}, {"params", params}, {"status", status},
          {"payload", payload}, {"elapsed_ms", elapsed_ms}};
}

int RunReport::exit_code() const {
  if (status == "pass") return 0;
  if (status == "fail") return 1;
  return 2;
}

namespace {

template <class Fn>
RunReport run(const std::string& command, json params, Fn&& body) {
  RunReport rep;
  rep.command = command;
  rep.params = std::move(params);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(rep);
  } catch (const BudgetExceeded& e) {
    rep.status = "error";
    rep.payload = {{"error", e.what()}, {"required", e.required}, {"budget", e.budget}};
  } catch (const std::exception& e) {
    rep.status = "error";
    rep.payload = {{"error", e.what()}};
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// Accumulates per-case verdicts.
struct Cases {
  json items = json::array();
  bool ok = true;
  void add(const std::string& name, bool pass) {
    items.push_back({{"case", name}, {"ok", pass}});
    ok = ok && pass;
  }
};

void suite_transfer(Cases& cs, int nmax, int degmax) {
  for (int n = 1; n <= nmax; ++n) {
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      const transfer::TransferParams p(n / d, d);
      const std::string tag = "r=" + std::to_string(p.r) + ",d=" + std::to_string(d);
      for (int k = 1; k <= std::min(n, degmax); ++k) {
        cs.add(tag + " e_" + std::to_string(k), transfer::transfer_sym(p, elementary(n, k)) == transfer::image_e(p, k));
      }
      for (int k = 1; k <= degmax; ++k) {
        cs.add(tag + " p_" + std::to_string(k), transfer::transfer_sym(p, powersum(n, k)) == transfer::image_p(p, k));
      }
      for (int w = 1; w <= degmax; ++w) {
        for (const auto& mu : partitions_of(w)) {
          if (mu.length() > n) continue;
          cs.add(tag + " s_" + mu.to_string(), transfer::transfer_sym(p, schur(n, mu)) == transfer::image_schur(p, mu));
        }
      }
    }
  }
}

void suite_comb_prop(Cases& cs, int dmax, const Limits& lim) {
  for (int d = 1; d <= dmax; ++d) {
    const auto fg = weyl::f_g_all(d);
    for (const auto& [rho, v] : fg.values) {
      cs.add("f_g d=" + std::to_string(d) + " rho=" + rho.to_string(), v == (rho.length() == 1 ? 1 : 0));
    }
    if (d > lim.max_degree) continue;
    const auto f = weyl::one_adic_ep(d, lim.max_degree);
    for (const auto& rho : partitions_of(d)) {
      std::vector<int> line;
      int start = 1;
      for (int part : rho.parts()) {
        for (int i = 1; i < part; ++i) line.push_back(start + i);
        line.push_back(start);
        start += part;
      }
      const auto g = weyl::Perm::from_one_line(line);
      const Rational o = weyl::orbital_sum(f, g);
      cs.add("O_g d=" + std::to_string(d) + " rho=" + rho.to_string(),
             o * d == fg.values.at(rho) * static_cast<long>(weyl::centralizer_order(g)));
    }
  }
}

void suite_weyl(Cases& cs, int dmax, const Limits& lim) {
  for (int d = 2; d <= dmax; ++d) {
    for (const auto& m : weyl::SubsetI::all(d)) {
      bool support = true;
      for (const auto& i : weyl::SubsetI::all(d)) {
        for (const auto& w : weyl::min_double_coset_reps(m, i, lim.max_degree)) {
          support = support && weyl::restriction_support(m, i, w).support_matches;
        }
      }
      const std::string tag = "d=" + std::to_string(d) + " M=" + m.to_string();
      cs.add(tag + " restriction_support", support);
      if (!m.is_full()) cs.add(tag + " vanishing", weyl::proper_levi_vanishing(d, m, lim.max_degree).all_zero);
    }
  }
}

void suite_finite_gl(Cases& cs, int d, int q, const Limits& lim) {
  const finitegl::GLGroup g(d, q, lim.group_budget, lim.workers);
  const std::string tag = "GL_" + std::to_string(d) + "(F_" + std::to_string(q) + ")";
  cs.add(tag + " comb_prop", finitegl::comb_prop_check(g).ok);
  for (const auto& c : compositions_of(d)) {
    cs.add(tag + " P" + c.to_string() + " ind_conjugate", finitegl::ind_conjugate_identity_check(g, c).ok);
  }
}

void suite_ep_shadow(Cases& cs, int nmax, int q, const Limits& lim) {
  for (int n = 1; n <= nmax; ++n) {
    const finitegl::GLGroup g(n, q, lim.group_budget, lim.workers);
    for (const auto& t : ep::d_parahoric_types(n)) {
      cs.add("n=" + std::to_string(n) + " d=" + std::to_string(t.d) + " type=" + t.blocks.to_string() + " q=" + std::to_string(q),
             ep::ep_shadow_check(t, g).ok);
    }
  }
}

void finish(RunReport& rep, const Cases& cs) {
  rep.status = cs.ok ? "pass" : "fail";
  rep.payload = {{"cases", cs.items}, {"all_pass", cs.ok}};
}

}  // namespace

RunReport cmd_transfer(const TransferArgs& a, const Limits&) {
  json params = {{"basis", a.basis}, {"r", a.r}, {"d", a.d}};
  if (a.k) params["k"] = a.k;
  if (!a.partition.empty()) params["partition"] = a.partition;
  return run("transfer", params, [&](RunReport& rep) {
    const transfer::TransferParams p(a.r, a.d);
    const int n = p.n();
    SymPoly input(n), image(p.r);
    if (a.basis == "e") {
      input = elementary(n, a.k);
      image = transfer::image_e(p, a.k);
    } else if (a.basis == "p") {
      input = powersum(n, a.k);
      image = transfer::image_p(p, a.k);
    } else if (a.basis == "schur") {
      const Partition mu = Partition::parse(a.partition);
      input = schur(n, mu);
      image = transfer::image_schur(p, mu);
    } else if (a.basis == "monomial") {
      const Partition mu = Partition::parse(a.partition);
      if (mu.length() > n) throw PreconditionError("partition has more than n parts");
      input = monomial_sym(n, DominantVector::padded(mu, n));
      image = transfer::transfer_sym(p, input);
    } else {
      throw PreconditionError("unknown basis: " + a.basis);
    }
    const SymPoly direct = transfer::transfer_sym(p, input);
    rep.payload = {{"input", io::to_json(input)}, {"image", io::to_json(image)}, {"closed_form_matches", direct == image}};
    rep.status = direct == image ? "pass" : "fail";
  });
}

RunReport cmd_verify(const VerifyArgs& a, const Limits& lim) {
  json params = {{"suite", a.suite}};
  if (a.suite == "transfer-consistency") params.update({{"nmax", a.nmax}, {"degmax", a.degmax}});
  if (a.suite == "comb-prop" || a.suite == "weyl-vanishing") params["dmax"] = a.dmax;
  if (a.suite == "finite-gl") params.update({{"d", a.d}, {"q", a.q}});
  if (a.suite == "ep-shadow") params.update({{"n", a.n}, {"q", a.q}});
  return run("verify", params, [&](RunReport& rep) {
    Cases cs;
    if (a.suite == "transfer-consistency") {
      suite_transfer(cs, a.nmax, a.degmax);
    } else if (a.suite == "comb-prop") {
      suite_comb_prop(cs, a.dmax, lim);
    } else if (a.suite == "weyl-vanishing") {
      suite_weyl(cs, a.dmax, lim);
    } else if (a.suite == "finite-gl") {
      suite_finite_gl(cs, a.d, a.q, lim);
    } else if (a.suite == "ep-shadow") {
      suite_ep_shadow(cs, a.n, a.q, lim);
    } else if (a.suite == "all") {
      suite_transfer(cs, 6, 4);
      suite_comb_prop(cs, 6, lim);
      suite_weyl(cs, 5, lim);
      for (auto [d, q] : {std::pair{2, 2}, {2, 3}, {3, 2}}) suite_finite_gl(cs, d, q, lim);
      suite_ep_shadow(cs, 3, 2, lim);
    } else {
      throw PreconditionError("unknown suite: " + a.suite);
    }
    finish(rep, cs);
  });
}

RunReport cmd_finite_gl(const FiniteGlArgs& a, const Limits& lim) {
  json params = {{"d", a.d}, {"q", a.q}, {"what", a.what}};
  if (!a.composition.empty()) params["c"] = a.composition;
  if (!a.rho.empty()) params["rho"] = a.rho;
  return run("finite-gl", params, [&](RunReport& rep) {
    const finitegl::GLGroup g(a.d, a.q, lim.group_budget, lim.workers);
    json out = io::group_json(g);
    json functions = json::object();
    if (a.what == "classes") {
      // nothing beyond the class list
    } else if (a.what == "ind") {
      const Composition c = a.composition.empty() ? Composition(std::vector<int>(a.d, 1)) : Composition::parse(a.composition);
      functions["Ind_P" + c.to_string()] = io::to_json(finitegl::parabolic_trivial_ind(g, c));
    } else if (a.what == "dl") {
      if (a.rho.empty()) {
        for (const auto& [rho, r] : finitegl::dl_characters(g)) functions["R_" + rho.to_string()] = io::to_json(r);
      } else {
        const Partition rho = Partition::parse(a.rho);
        functions["R_" + rho.to_string()] = io::to_json(finitegl::dl_character(g, rho));
      }
    } else if (a.what == "comb-prop") {
      const auto r = finitegl::comb_prop_check(g);
      functions["lhs"] = io::to_json(r.lhs);
      functions["rhs"] = io::to_json(r.rhs);
      out["ok"] = r.ok;
      if (!r.ok) rep.status = "fail";
    } else {
      throw PreconditionError("unknown --what: " + a.what);
    }
    out["functions"] = functions;
    rep.payload = out;
  });
}

RunReport cmd_ep(const EpArgs& a, const Limits& lim) {
  json params = {{"action", a.action}};
  if (a.n) params["n"] = a.n;
  if (a.d) params["d"] = a.d;
  if (a.r) params["r"] = a.r;
  if (!a.type.empty()) params["type"] = a.type;
  if (a.shadow_q) params["shadow_q"] = a.shadow_q;
  if (a.one_basis) params["one_basis"] = true;
  return run("ep", params, [&](RunReport& rep) {
    auto basis = [&](const ep::ParahoricCombo& x) { return a.one_basis ? ep::to_one_basis(x) : x; };
    if (a.action == "build") {
      // --n alone: f^EP; --d with --r: the product formula
      if (a.d && a.r) {
        rep.payload = {{"combo", io::to_json(basis(ep::product_ep(a.d, a.r)))}, {"levi_scalar", ep::levi_scalar(Composition(std::vector<int>(a.r, a.d)))}};
      } else if (a.n) {
        rep.payload = {{"combo", io::to_json(basis(ep::ep_function(a.n)))}};
      } else {
        throw PreconditionError("ep build needs --n, or --d and --r");
      }
    } else if (a.action == "fj") {
      if (!a.d) throw PreconditionError("ep fj needs --d");
      const Partition blocks = a.type.empty() ? Partition(std::vector<int>(a.r ? a.r : 1, 1)) : Partition::parse(a.type);
      if (a.r && blocks.weight() != a.r) throw PreconditionError("--type must be a partition of --r");
      const ep::DParahoricType t(a.d, blocks);
      const auto fj = ep::f_J(t);
      rep.payload = {{"combo", io::to_json(basis(fj))}};
      if (a.shadow_q) {
        const finitegl::GLGroup g(t.n(), a.shadow_q, lim.group_budget, lim.workers);
        const auto r = ep::ep_shadow_check(t, g);
        rep.payload["group"] = io::group_json(g);
        rep.payload["shadow"] = io::to_json(r);
        if (!r.ok) rep.status = "fail";
      }
    } else if (a.action == "shadow") {
      if (!a.n || !a.shadow_q) throw PreconditionError("ep shadow needs --n and --shadow-q");
      const finitegl::GLGroup g(a.n, a.shadow_q, lim.group_budget, lim.workers);
      const auto lhs = ep::shadow(ep::ep_function(a.n) * QScalar(a.n), g);
      const auto rhs = finitegl::dl_character(g, Partition({a.n}));
      rep.payload = {{"group", io::group_json(g)}, {"shadow", io::to_json(lhs)}, {"dl_character", io::to_json(rhs)}, {"ok", lhs == rhs}};
      if (!(lhs == rhs)) rep.status = "fail";
    } else {
      throw PreconditionError("unknown ep action: " + a.action);
    }
  });
}

namespace {

void flatten(const json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << "  " << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_table(const RunReport& r) {
  std::ostringstream os;
  os << r.command << "  status=" << r.status << "  elapsed_ms=" << r.elapsed_ms << "\n";
  flatten(r.params, "params", os);
  flatten(r.payload, "", os);
  return os.str();
}

}  // namespace innerform::cli
