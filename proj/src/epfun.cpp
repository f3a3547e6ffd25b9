#include "innerform/epfun.hpp"

#include <algorithm>
#include <functional>

#include "innerform/algebra/qcombinatorics.hpp"
#include "innerform/errors.hpp"
#include "innerform/weylcomb.hpp"

namespace innerform::ep {

std::string to_string(Basis b) { return b == Basis::E ? "e" : "one"; }

ParahoricCombo::ParahoricCombo(int n, Basis basis) : n_(n), basis_(basis) {
  if (n < 1) throw PreconditionError("ParahoricCombo: need n >= 1");
}

ParahoricCombo ParahoricCombo::single(const Partition& type, const QScalar& c, Basis basis) {
  ParahoricCombo x(type.weight(), basis);
  x.add_term(type, c);
  return x;
}

QScalar ParahoricCombo::coeff(const Partition& type) const {
  auto it = terms_.find(type);
  return it == terms_.end() ? QScalar(0) : it->second;
}

void ParahoricCombo::add_term(const Partition& type, const QScalar& c) {
  if (type.weight() != n_) throw PreconditionError("ParahoricCombo: type is not a partition of n");
  auto& slot = terms_[type];
  slot += c;
  if (slot.is_zero()) terms_.erase(type);
}

ParahoricCombo& ParahoricCombo::operator+=(const ParahoricCombo& o) {
  if (n_ != o.n_ || basis_ != o.basis_) throw PreconditionError("ParahoricCombo: adding incompatible combos");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

ParahoricCombo operator*(ParahoricCombo a, const QScalar& c) {
  if (c.is_zero()) {
    a.terms_.clear();
    return a;
  }
  for (auto& [t, x] : a.terms_) x *= c;
  return a;
}

ParahoricCombo operator*(const ParahoricCombo& a, const ParahoricCombo& b) {
  if (a.basis_ != Basis::E || b.basis_ != Basis::E) throw PreconditionError("convolution needs e-basis combos");
  ParahoricCombo out(a.n_ + b.n_);
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) {
      std::vector<int> parts = ta.parts();
      parts.insert(parts.end(), tb.parts().begin(), tb.parts().end());
      out.add_term(Partition::from_unsorted(std::move(parts)), ca * cb);
    }
  }
  return out;
}

std::string ParahoricCombo::to_string() const {
  if (terms_.empty()) return "0";
  const std::string sym = basis_ == Basis::E ? "e_(" : "1_(";
  std::string s;
  for (const auto& [t, c] : terms_) {
    std::string body = c.to_string();
    const bool negative = body.front() == '-';
    if (negative) body = (c * QScalar(-1)).to_string();
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    const bool compound = body.find(' ') != std::string::npos;
    if (body != "1") s += (compound ? "(" + body + ")" : body) + "*";
    s += sym + t.to_string() + ")";
  }
  return s;
}

DParahoricType::DParahoricType(int d_, Partition blocks_) : d(d_), blocks(std::move(blocks_)) {
  if (d < 1) throw PreconditionError("DParahoricType: need d >= 1");
  if (blocks.length() == 0) throw PreconditionError("DParahoricType: need r >= 1");
}

std::map<Composition, Rational> ep_function_compositions(int n) {
  if (n < 1) throw PreconditionError("ep_function: need n >= 1");
  std::map<Composition, Rational> out;
  for (const auto& s : weyl::SubsetI::all(n)) out[s.blocks()] += weyl::ep_coefficient(s);
  return out;
}

ParahoricCombo collapse(int n, const std::map<Composition, Rational>& terms) {
  ParahoricCombo x(n);
  for (const auto& [c, v] : terms) x.add_term(c.sorted(), QScalar(v));
  return x;
}

ParahoricCombo ep_function(int n) {
  if (n < 1) throw PreconditionError("ep_function: need n >= 1");
  ParahoricCombo x(n);
  for (const auto& mu : partitions_of(n)) {
    // compositions rearranging mu: len! / prod m_k!
    long long count = factorial(mu.length());
    for (int k = 1; k <= mu[0]; ++k) count /= factorial(mu.multiplicity(k));
    const int len = mu.length();  // |I| = n - len
    const Rational c = Rational((len - 1) % 2 == 0 ? 1 : -1) * static_cast<long>(count) / Rational(len);
    x.add_term(mu, QScalar(c));
  }
  return x;
}

ParahoricCombo product_ep(int d, int r) {
  if (d < 1 || r < 1) throw PreconditionError("product_ep: need d, r >= 1");
  const ParahoricCombo factor = ep_function(d) * QScalar(d);
  ParahoricCombo x = factor;
  for (int i = 1; i < r; ++i) x = x * factor;
  return x;
}

ParahoricCombo f_J(const DParahoricType& t) {
  const int d = t.d;
  // (d*m) * ep_function(d*m), one per cycle length m
  std::map<int, ParahoricCombo> cycle_factor;
  auto factor = [&](int m) -> const ParahoricCombo& {
    auto it = cycle_factor.find(m);
    if (it == cycle_factor.end()) it = cycle_factor.emplace(m, ep_function(d * m) * QScalar(d * m)).first;
    return it->second;
  };
  ParahoricCombo total(t.n());
  // Sum over tuples (rho_1, ..., rho_k), rho_i ⊢ r_i, weight prod 1/z_{rho_i}.
  std::function<void(int, ParahoricCombo, Rational)> rec = [&](int i, ParahoricCombo acc, Rational w) {
    if (i == t.blocks.length()) {
      total += acc * QScalar(w);
      return;
    }
    for (const auto& rho : partitions_of(t.blocks[i])) {
      ParahoricCombo next = acc;
      bool first = i == 0;
      for (int m : rho.parts()) {
        next = first ? factor(m) : next * factor(m);
        first = false;
      }
      rec(i + 1, next, w / Rational(static_cast<long>(rho.z())));
    }
  };
  rec(0, ParahoricCombo(1), Rational(1));
  return total;
}

long long levi_scalar(const Composition& c) {
  long long s = 1;
  for (int p : c.parts()) s *= p;
  return s;
}

ParahoricCombo to_one_basis(const ParahoricCombo& x) {
  if (x.basis() != Basis::E) throw PreconditionError("to_one_basis: input must be in the e-basis");
  ParahoricCombo y(x.n(), Basis::One);
  for (const auto& [t, c] : x.terms()) y.add_term(t, c * parahoric_index(Composition(t.parts())));
  return y;
}

ParahoricCombo to_e_basis(const ParahoricCombo& x) {
  if (x.basis() != Basis::One) throw PreconditionError("to_e_basis: input must be in the one-basis");
  ParahoricCombo y(x.n(), Basis::E);
  for (const auto& [t, c] : x.terms()) y.add_term(t, c / parahoric_index(Composition(t.parts())));
  return y;
}

finitegl::ClassFunction shadow(const ParahoricCombo& x, const finitegl::GLGroup& g) {
  if (x.n() != g.d()) throw PreconditionError("shadow: combo and group have different n");
  const ParahoricCombo e = x.basis() == Basis::E ? x : to_e_basis(x);
  auto out = finitegl::ClassFunction::constant(g, 0);
  for (const auto& [t, c] : e.terms()) {
    out += finitegl::parabolic_trivial_ind(g, Composition(t.parts())) * specialize_q(c, g.q());
  }
  return out;
}

finitegl::ClassFunction weyl_averaged_dl(const DParahoricType& t, const finitegl::GLGroup& g) {
  if (t.n() != g.d()) throw PreconditionError("weyl_averaged_dl: type and group have different n");
  const auto r = finitegl::dl_characters(g);
  auto out = finitegl::ClassFunction::constant(g, 0);
  std::function<void(int, std::vector<int>, Rational)> rec = [&](int i, std::vector<int> parts, Rational w) {
    if (i == t.blocks.length()) {
      out += r.at(Partition::from_unsorted(parts)) * w;
      return;
    }
    for (const auto& rho : partitions_of(t.blocks[i])) {
      std::vector<int> next = parts;
      for (int m : rho.parts()) next.push_back(t.d * m);
      rec(i + 1, next, w / Rational(static_cast<long>(rho.z())));
    }
  };
  rec(0, {}, Rational(1));
  return out;
}

ShadowReport ep_shadow_check(const DParahoricType& t, const finitegl::GLGroup& g) {
  auto lhs = shadow(f_J(t), g);
  auto rhs = weyl_averaged_dl(t, g);
  const bool ok = lhs == rhs;
  return {t, g.q(), std::move(lhs), std::move(rhs), ok};
}

std::vector<DParahoricType> d_parahoric_types(int n) {
  std::vector<DParahoricType> out;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    for (const auto& b : partitions_of(n / d)) out.emplace_back(d, b);
  }
  return out;
}

}  // namespace innerform::ep
