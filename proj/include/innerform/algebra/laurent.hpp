#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace innerform {

using Rational = mpq_class;

/// Laurent polynomial in one variable v over Q.
///
/// Stored as v^low * (c_0 + c_1 v + ... + c_k v^k) with c_0 != 0 and c_k != 0.
/// The zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Rational c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT
  LaurentPoly(int low, std::vector<Rational> coeffs);

  static LaurentPoly monomial(int exponent, Rational c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }

  /// Lowest and highest exponent; undefined for the zero polynomial.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  Rational coeff(int exponent) const;
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& trailing() const { return coeffs_.front(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// True when every exponent with nonzero coefficient is even.
  bool even_only() const;

  LaurentPoly shifted(int by) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Value at v = x (x must be nonzero if negative exponents occur).
  Rational evaluate(const Rational& x) const;

  /// Polynomial division with remainder; both operands must have low() >= 0.
  static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
  /// Monic gcd of two ordinary polynomials (low() >= 0); gcd(0,0) = 0.
  static LaurentPoly gcd(LaurentPoly a, LaurentPoly b);

  /// Human form in descending powers, e.g. "v^3 - 2 + v^-1".
  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

}  // namespace innerform
