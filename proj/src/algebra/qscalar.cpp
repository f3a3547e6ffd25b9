#include "innerform/algebra/qscalar.hpp"

#include "innerform/errors.hpp"

namespace innerform {

QScalar::QScalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void QScalar::normalize() {
  if (den_.is_zero()) throw DivisionByZeroError("QScalar: zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Move the v-power of the denominator into the numerator.
  const int shift = den_.low();
  if (shift != 0) {
    num_ = num_.shifted(-shift);
    den_ = den_.shifted(-shift);
  }
  if (!den_.is_constant()) {
    const int nlow = num_.low();
    LaurentPoly num0 = num_.shifted(-nlow);
    LaurentPoly g = LaurentPoly::gcd(num0, den_);
    if (!g.is_constant()) {
      num_ = LaurentPoly::divmod(num0, g).first.shifted(nlow);
      den_ = LaurentPoly::divmod(den_, g).first;
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational QScalar::constant() const {
  if (!is_rational_constant()) throw PreconditionError("QScalar::constant: value depends on v: " + to_string());
  return num_.is_zero() ? Rational(0) : num_.coeff(0);
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (is_laurent() && o.is_laurent()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar QScalar::operator-() const {
  QScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

QScalar& QScalar::operator*=(const QScalar& o) {
  if (is_laurent() && o.is_laurent()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw DivisionByZeroError("QScalar: division by zero");
  return QScalar(den_, num_);
}

QScalar& QScalar::operator/=(const QScalar& o) { return *this *= o.inverse(); }

QScalar QScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QScalar result(1);
  QScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Rational QScalar::evaluate_v(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (d == 0) throw PoleError("QScalar: pole at v = " + x.get_str());
  return num_.evaluate(x) / d;
}

std::string QScalar::to_string() const {
  if (is_laurent()) return num_.to_string();
  auto wrap = [](const LaurentPoly& p) {
    std::string s = p.to_string();
    return p.coeffs().size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + " / " + wrap(den_);
}

namespace {

LaurentPoly halve_exponents(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly out;
  for (int e = p.low(); e <= p.high(); ++e) {
    const Rational c = p.coeff(e);
    if (c != 0) out += LaurentPoly::monomial(e / 2, c);
  }
  return out;
}

bool rational_sqrt(const Rational& c, Rational& root) {
  if (c < 0) return false;
  mpz_class n = c.get_num();
  mpz_class d = c.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace

Rational specialize_q(const QScalar& x, const Rational& c) {
  if (x.num().even_only() && x.den().even_only()) {
    const LaurentPoly num = halve_exponents(x.num());
    const LaurentPoly den = halve_exponents(x.den());
    if (c == 0 && (num.low() < 0 || den.low() < 0)) throw PoleError("specialize_q: pole at q = 0");
    const Rational dv = den.evaluate(c);
    if (dv == 0) throw PoleError("specialize_q: pole at q = " + c.get_str());
    return num.evaluate(c) / dv;
  }
  Rational root;
  if (!rational_sqrt(c, root)) {
    throw PreconditionError("specialize_q: " + x.to_string() + " has odd powers of v and q = " + c.get_str() +
                            " is not a rational square");
  }
  if (root == 0 && x.num().low() < 0) throw PoleError("specialize_q: pole at q = 0");
  return x.evaluate_v(root);
}

}  // namespace innerform
