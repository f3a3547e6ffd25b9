// One line per acceptance criterion; nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "innerform/algebra/qcombinatorics.hpp"
#include "innerform/epfun.hpp"
#include "innerform/finitegl/group.hpp"
#include "innerform/transfer.hpp"
#include "innerform/weylcomb.hpp"

using namespace innerform;

namespace {

int workers() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0 = none
  std::function<bool(std::string&)> check;
};

bool transfer_oracle(std::string& note) {
  int cases = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int d = 1; d <= n; ++d) {
      if (n % d) continue;
      const transfer::TransferParams p(n / d, d);
      for (int k = 1; k <= std::min(n, 5); ++k, ++cases) {
        if (!(transfer::transfer_sym(p, elementary(n, k)) == transfer::image_e(p, k))) return false;
      }
      for (int k = 1; k <= 5; ++k, ++cases) {
        if (!(transfer::transfer_sym(p, powersum(n, k)) == transfer::image_p(p, k))) return false;
      }
      for (int w = 1; w <= 5; ++w) {
        for (const auto& mu : partitions_of(w)) {
          if (mu.length() > n) continue;
          ++cases;
          if (!(transfer::transfer_sym(p, schur(n, mu)) == transfer::image_schur(p, mu))) return false;
        }
      }
    }
  }
  note = std::to_string(cases) + " identities";
  return true;
}

bool q1_degeneration(std::string& note) {
  int cases = 0;
  for (int r = 1; r <= 3; ++r) {
    for (int d = 1; d <= 6; ++d) {
      for (int k = 1; k <= 6; ++k, ++cases) {
        if (!(specialize_q(transfer::image_p({r, d}, k), 1) == powersum(r, k) * QScalar(d))) return false;
      }
    }
  }
  note = std::to_string(cases) + " (r,d,k)";
  return true;
}

bool comb_prop_indicator(std::string& note) {
  int cases = 0;
  for (int d = 1; d <= 7; ++d) {
    for (const auto& rho : partitions_of(d)) {
      ++cases;
      if (weyl::f_g(d, rho) != (rho.length() == 1 ? 1 : 0)) return false;
    }
  }
  note = std::to_string(cases) + " cycle types";
  return true;
}

bool weyl_vanishing(std::string& note) {
  int sums = 0, supports = 0;
  for (int d = 2; d <= 6; ++d) {
    for (const auto& m : weyl::SubsetI::all(d)) {
      for (const auto& i : weyl::SubsetI::all(d)) {
        for (const auto& w : weyl::min_double_coset_reps(m, i)) {
          ++supports;
          if (!weyl::restriction_support(m, i, w).support_matches) return false;
        }
      }
      if (m.is_full()) continue;
      const auto rep = weyl::proper_levi_vanishing(d, m);
      sums += static_cast<int>(rep.entries.size());
      if (!rep.all_zero) return false;
    }
  }
  note = std::to_string(sums) + " inner sums, " + std::to_string(supports) + " supports";
  return true;
}

bool finite_dl(std::string& note) {
  for (auto [d, q] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
    if (!finitegl::comb_prop_check(finitegl::GLGroup(d, q, finitegl::kDefaultBudget, workers())).ok) return false;
  }
  note = "5 groups";
  return true;
}

bool induction_identity(std::string& note) {
  int rows = 0;
  for (int d = 1; d <= 3; ++d) {
    for (int q : {2, 3}) {
      const finitegl::GLGroup g(d, q, finitegl::kDefaultBudget, workers());
      for (const auto& c : compositions_of(d)) {
        const auto rep = finitegl::ind_conjugate_identity_check(g, c);
        rows += static_cast<int>(rep.rows.size());
        if (!rep.ok) return false;
      }
    }
  }
  note = std::to_string(rows) + " (c, C) pairs";
  return true;
}

bool ep_shadow(std::string& note) {
  int cases = 0;
  for (int q : {2, 3}) {
    for (int n = 1; n <= 4; ++n) {
      const finitegl::GLGroup g(n, q, finitegl::kDefaultBudget, workers());
      for (const auto& t : ep::d_parahoric_types(n)) {
        ++cases;
        if (!ep::ep_shadow_check(t, g).ok) return false;
      }
      // r = 1: shadow(d f^EP) = R_(d)
      if (!(ep::shadow(ep::ep_function(n) * QScalar(n), g) == finitegl::dl_character(g, Partition({n})))) return false;
    }
  }
  // d = 1, Iwahori type: the Iwahori term alone
  for (int r = 1; r <= 4; ++r) {
    const Partition iw(std::vector<int>(r, 1));
    if (!(ep::f_J({1, iw}) == ep::ParahoricCombo::single(iw))) return false;
  }
  note = std::to_string(cases) + " types over q=2,3";
  return true;
}

bool extreme_coefficients(std::string& note) {
  for (int d = 1; d <= 5; ++d) {
    for (int r = 1; r <= 5; ++r) {
      const auto x = ep::product_ep(d, r);
      long dr = 1;
      for (int i = 0; i < r; ++i) dr *= d;
      if (!(x.coeff(Partition(std::vector<int>(d * r, 1))) == QScalar((r * (d - 1)) % 2 ? -1 : 1))) return false;
      if (!(x.coeff(Partition(std::vector<int>(r, d))) == QScalar(Rational(dr)))) return false;
    }
  }
  note = "25 (d,r)";
  return true;
}

bool surjectivity(std::string& note) {
  for (int d = 1; d <= 6; ++d) {
    for (int k = 1; k <= 6; ++k) {
      if (qint_balanced(d, k).is_zero()) return false;
    }
  }
  for (int r = 1; r <= 4; ++r) {
    for (int d = 1; d <= 3; ++d) {
      if (!transfer::surjectivity_witness({r, d}, 3).ok) return false;
    }
  }
  note = "36 q-integers, 12 reports";
  return true;
}

bool index_formula(std::string& note) {
  int cases = 0;
  for (std::uint64_t q : {2u, 3u, 5u}) {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& c : compositions_of(n)) {
        ++cases;
        const Rational lhs = specialize_q(parahoric_index(c), static_cast<unsigned long>(q));
        const Rational rhs(static_cast<unsigned long>(gl_order(n, q) / parabolic_order(c, q)));
        if (lhs != rhs) return false;
      }
    }
  }
  note = std::to_string(cases) + " compositions";
  return true;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "transfer oracle equivalence", 60, transfer_oracle},
      {2, "q=1 degeneration", 0, q1_degeneration},
      {3, "d-cycle indicator", 120, comb_prop_indicator},
      {4, "weyl vanishing", 0, weyl_vanishing},
      {5, "finite DL identity", 600, finite_dl},
      {6, "induction identity", 0, induction_identity},
      {7, "EP shadow", 0, ep_shadow},
      {8, "extreme coefficients", 0, extreme_coefficients},
      {9, "surjectivity witness", 0, surjectivity},
      {10, "index formula", 0, index_formula},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string note;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.check(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_s > 0 && secs > c.limit_s) {
      ok = false;
      note += " (over " + std::to_string(static_cast<int>(c.limit_s)) + " s)";
    }
    failed += !ok;
    std::printf("%s  %2d  %-28s %8.2fs  %s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, note.c_str());
  }
  std::printf("%d/10 criteria pass\n", 10 - failed);
  return failed ? 1 : 0;
}
