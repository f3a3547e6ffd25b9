#include "innerform/algebra/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace innerform {

LaurentPoly::LaurentPoly(Rational c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(int exponent, Rational c) {
  return LaurentPoly(exponent, std::vector<Rational>{std::move(c)});
}

void LaurentPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

bool LaurentPoly::is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational LaurentPoly::coeff(int exponent) const {
  const int i = exponent - low_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

bool LaurentPoly::even_only() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0 && ((low_ + static_cast<int>(i)) % 2 != 0)) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += by;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  std::vector<Rational> out(hi - lo + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[low_ - lo + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[o.low_ - lo + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) return *this = LaurentPoly{};
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0 && low_ < 0) throw std::domain_error("LaurentPoly::evaluate: negative power at v = 0");
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  if (low_ > 0) {
    for (int i = 0; i < low_; ++i) acc *= x;
  } else {
    for (int i = 0; i < -low_; ++i) acc /= x;
  }
  return acc;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("LaurentPoly::divmod: division by zero polynomial");
  if ((!a.is_zero() && a.low_ < 0) || b.low_ < 0) {
    throw std::invalid_argument("LaurentPoly::divmod: operands must be ordinary polynomials");
  }
  // Dense ascending coefficient vectors indexed from v^0.
  auto dense = [](const LaurentPoly& p) {
    std::vector<Rational> d(p.is_zero() ? 0 : p.high() + 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) d[p.low_ + i] = p.coeffs_[i];
    return d;
  };
  std::vector<Rational> rem = dense(a);
  const std::vector<Rational> den = dense(b);
  const int db = static_cast<int>(den.size()) - 1;
  const int da = static_cast<int>(rem.size()) - 1;
  if (da < db) return {LaurentPoly{}, a};
  std::vector<Rational> quo(da - db + 1);
  for (int k = da - db; k >= 0; --k) {
    Rational c = rem[k + db] / den[db];
    quo[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] -= c * den[j];
  }
  return {LaurentPoly(0, std::move(quo)), LaurentPoly(0, std::move(rem))};
}

LaurentPoly LaurentPoly::gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
    if (!b.is_zero()) b *= Rational(1) / b.leading();
  }
  if (!a.is_zero()) a *= Rational(1) / a.leading();
  return a;
}

namespace {

std::string power_of_v(int e) {
  if (e == 0) return "";
  if (e == 1) return "v";
  return "v^" + std::to_string(e);
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = high(); e >= low_; --e) {
    Rational c = coeff(e);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string pv = power_of_v(e);
    if (pv.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += pv;
    } else {
      out += c.get_str() + "*" + pv;
    }
  }
  return out;
}

}  // namespace innerform
