#include "innerform/algebra/qcombinatorics.hpp"

#include "innerform/errors.hpp"

namespace innerform {

QScalar qint_balanced(int d, int k) {
  if (d < 1 || k < 1) throw PreconditionError("qint_balanced: need d, k >= 1");
  LaurentPoly sum;
  for (int j = 0; j < d; ++j) sum += LaurentPoly::monomial(k * (d - 1 - 2 * j));
  return QScalar(sum);
}

QScalar qbinom(int d, int a) {
  if (a < 0 || a > d) throw PreconditionError("qbinom: need 0 <= a <= d");
  // prod_{i=1}^{a} (q^{d-a+i} - 1) / (q^i - 1); exact division at every step.
  QScalar result(1);
  for (int i = 1; i <= a; ++i) {
    result *= QScalar::q(d - a + i) - QScalar(1);
    result /= QScalar::q(i) - QScalar(1);
  }
  if (!result.is_laurent()) throw InvariantViolation("qbinom: non-polynomial result");
  return result;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > UINT64_MAX) throw PreconditionError("group order exceeds 64 bits");
  return static_cast<std::uint64_t>(p);
}

std::uint64_t ipow(std::uint64_t q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, q);
  return r;
}

}  // namespace

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) return false;
  }
  return true;
}

std::uint64_t gl_order(int n, std::uint64_t q) {
  if (n < 1) throw PreconditionError("gl_order: n >= 1");
  if (!is_prime(q)) throw PreconditionError("gl_order: q must be prime");
  const std::uint64_t qn = ipow(q, n);
  std::uint64_t order = 1;
  for (int i = 0; i < n; ++i) order = checked_mul(order, qn - ipow(q, i));
  return order;
}

std::uint64_t parabolic_order(const Composition& c, std::uint64_t q) {
  std::uint64_t order = 1;
  int before = 0;
  int upper = 0;
  for (int part : c.parts()) {
    order = checked_mul(order, gl_order(part, q));
    upper += before * part;
    before += part;
  }
  return checked_mul(order, ipow(q, upper));
}

QScalar parahoric_index(const Composition& c) {
  QScalar index(1);
  int placed = 0;
  for (int part : c.parts()) {
    placed += part;
    index *= qbinom(placed, part);
  }
  return index;
}

}  // namespace innerform
