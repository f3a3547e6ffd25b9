#include "innerform/algebra/sympoly.hpp"

#include <algorithm>
#include <mutex>

#include "innerform/errors.hpp"

namespace innerform {

DominantVector::DominantVector(ExponentVector entries) : e_(std::move(entries)) {
  if (!std::is_sorted(e_.begin(), e_.end(), std::greater<>())) {
    throw PreconditionError("exponent vector is not weakly decreasing");
  }
}

DominantVector DominantVector::sorted(ExponentVector entries) {
  std::sort(entries.begin(), entries.end(), std::greater<>());
  return DominantVector(std::move(entries));
}

DominantVector DominantVector::padded(const Partition& p, int n) {
  if (p.length() > n) throw PreconditionError("partition " + p.to_string() + " has more than n parts");
  ExponentVector e(n, 0);
  std::copy(p.parts().begin(), p.parts().end(), e.begin());
  return DominantVector(std::move(e));
}

int DominantVector::degree() const {
  int s = 0;
  for (int x : e_) s += x;
  return s;
}

std::string DominantVector::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + "]";
}

std::shared_ptr<const std::vector<ExponentVector>> orbit(const DominantVector& w) {
  static std::mutex mutex;
  static std::map<DominantVector, std::shared_ptr<const std::vector<ExponentVector>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(w); it != cache.end()) return it->second;
  }
  auto perms = std::make_shared<std::vector<ExponentVector>>();
  ExponentVector e = w.entries();
  std::sort(e.begin(), e.end());
  do {
    perms->push_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  std::lock_guard lock(mutex);
  return cache.emplace(w, std::move(perms)).first->second;
}

SymPoly::SymPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw PreconditionError("SymPoly: nvars must be positive");
}

SymPoly SymPoly::from_full_expansion(int nvars, const std::map<ExponentVector, QScalar>& monomials) {
  SymPoly f(nvars);
  std::map<DominantVector, std::size_t> seen;
  for (const auto& [a, c] : monomials) {
    if (static_cast<int>(a.size()) != nvars) throw PreconditionError("exponent vector length differs from nvars");
    if (c.is_zero()) continue;
    DominantVector key = DominantVector::sorted(a);
    auto [it, inserted] = f.terms_.try_emplace(key, c);
    if (!inserted && !(it->second == c)) {
      throw InvariantViolation("expansion is not symmetric at " + key.to_string());
    }
    ++seen[key];
  }
  for (const auto& [key, count] : seen) {
    if (count != orbit(key)->size()) throw InvariantViolation("incomplete orbit at " + key.to_string());
  }
  return f;
}

QScalar SymPoly::coeff(const DominantVector& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? QScalar{} : it->second;
}

void SymPoly::add_term(const DominantVector& w, const QScalar& c) {
  if (w.size() != nvars_) throw PreconditionError("SymPoly: key length differs from nvars");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::map<ExponentVector, QScalar> SymPoly::full_expansion() const {
  std::map<ExponentVector, QScalar> out;
  for (const auto& [w, c] : terms_) {
    for (const auto& a : *orbit(w)) out.emplace(a, c);
  }
  return out;
}

void SymPoly::require_same_nvars(const SymPoly& o) const {
  if (nvars_ != o.nvars_) throw PreconditionError("SymPoly: mismatched number of variables");
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  require_same_nvars(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  require_same_nvars(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  a.require_same_nvars(b);
  SymPoly out(a.nvars_);
  const auto fb = b.full_expansion();
  ExponentVector sum(a.nvars_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& ea : *orbit(wa)) {
      for (const auto& [eb, cb] : fb) {
        for (int i = 0; i < a.nvars_; ++i) sum[i] = ea[i] + eb[i];
        if (std::is_sorted(sum.begin(), sum.end(), std::greater<>())) out.add_term(DominantVector(sum), ca * cb);
      }
    }
  }
  return out;
}

SymPoly SymPoly::map_coefficients(const std::function<QScalar(const QScalar&)>& fn) const {
  SymPoly out(nvars_);
  for (const auto& [w, c] : terms_) out.add_term(w, fn(c));
  return out;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*m" + w.to_string();
  }
  return s;
}

SymPoly monomial_sym(int n, const DominantVector& w) {
  SymPoly f(n);
  f.add_term(w, QScalar(1));
  return f;
}

SymPoly elementary(int n, int k) {
  if (k < 0 || k > n) throw PreconditionError("elementary: need 0 <= k <= n");
  ExponentVector e(n, 0);
  std::fill(e.begin(), e.begin() + k, 1);
  return monomial_sym(n, DominantVector(std::move(e)));
}

SymPoly powersum(int n, int k) {
  if (k < 1) throw PreconditionError("powersum: need k >= 1");
  ExponentVector e(n, 0);
  e[0] = k;
  return monomial_sym(n, DominantVector(std::move(e)));
}

SymPoly complete(int n, int k) {
  if (k < 0) throw PreconditionError("complete: need k >= 0");
  SymPoly f(n);
  for (const auto& p : partitions_of(k)) {
    if (p.length() <= n) f.add_term(DominantVector::padded(p, n), QScalar(1));
  }
  return f;
}

void for_each_ssyt(const Partition& shape, int n, const std::function<void(const ExponentVector&)>& fn) {
  const auto& rows = shape.parts();
  // Cells in row-major order; tableau[r][c] holds the entry.
  std::vector<std::vector<int>> tab(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) tab[r].assign(rows[r], 0);
  ExponentVector content(n, 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t r, int c) {
    if (r == rows.size()) {
      fn(content);
      return;
    }
    if (c == rows[r]) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
    for (int x = lo; x <= n; ++x) {
      tab[r][c] = x;
      ++content[x - 1];
      fill(r, c + 1);
      --content[x - 1];
    }
  };
  if (shape.length() <= n) fill(0, 0);
}

SymPoly schur(int n, const Partition& mu) {
  std::map<ExponentVector, QScalar> monomials;
  for_each_ssyt(mu, n, [&](const ExponentVector& content) { monomials[content] += QScalar(1); });
  return SymPoly::from_full_expansion(n, monomials);
}

QScalar evaluate(const SymPoly& f, std::span<const QScalar> point) {
  if (static_cast<int>(point.size()) != f.nvars()) throw PreconditionError("evaluate: point length differs from nvars");
  QScalar total;
  for (const auto& [w, c] : f.terms()) {
    for (const auto& a : *orbit(w)) {
      QScalar term = c;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) term *= point[i].pow(a[i]);
      }
      total += term;
    }
  }
  return total;
}

SymPoly specialize_q(const SymPoly& f, const Rational& c) {
  return f.map_coefficients([&](const QScalar& x) { return QScalar(specialize_q(x, c)); });
}

}  // namespace innerform
