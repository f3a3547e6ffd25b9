#pragma once

#include <string>

#include "innerform/algebra/laurent.hpp"

namespace innerform {

/// Element of Q(v) with v^2 = q.
///
/// Canonical form num/den: den is a monic ordinary polynomial with nonzero
/// constant term, gcd(num, den) = 1, and all powers of v live in num. Two
/// QScalars are equal iff their representations are identical.
class QScalar {
 public:
  QScalar() = default;
  QScalar(int c) : num_(c) {}                   // NOLINT(google-explicit-constructor)
  QScalar(const Rational& c) : num_(c) {}       // NOLINT(google-explicit-constructor)
  QScalar(LaurentPoly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  QScalar(LaurentPoly num, LaurentPoly den);

  static QScalar v(int exponent = 1) { return QScalar(LaurentPoly::monomial(exponent)); }
  /// q^k = v^(2k).
  static QScalar q(int exponent = 1) { return v(2 * exponent); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_rational_constant() const { return den_.is_one() && num_.is_constant(); }
  /// Constant value; requires is_rational_constant().
  Rational constant() const;

  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  QScalar& operator/=(const QScalar& o);

  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
  QScalar operator-() const;

  friend bool operator==(const QScalar& a, const QScalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  QScalar inverse() const;
  QScalar pow(int e) const;

  /// Substitute v = x.
  Rational evaluate_v(const Rational& x) const;

  /// Canonical text: "v^3 - 2 + v^-1", or "(num) / (den)" for proper fractions.
  std::string to_string() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

/// Value at q = c with v = +sqrt(c).
///
/// Throws PoleError if the denominator vanishes there, PreconditionError if x
/// involves odd powers of v and c is not the square of a rational.
Rational specialize_q(const QScalar& x, const Rational& c);

}  // namespace innerform
