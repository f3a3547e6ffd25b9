#include <doctest.h>

#include <random>
#include <set>

#include "innerform/algebra/qcombinatorics.hpp"
#include "innerform/algebra/sympoly.hpp"
#include "innerform/errors.hpp"

using namespace innerform;

namespace {

QScalar lp(int low, std::vector<int> cs) {
  std::vector<Rational> r(cs.begin(), cs.end());
  return QScalar(LaurentPoly(low, std::move(r)));
}

// q-polynomial 1 + q + 2q^2 + q^3 + q^4, written in v = q^{1/2}.
QScalar qpoly(std::vector<int> cs) {
  QScalar s;
  for (std::size_t i = 0; i < cs.size(); ++i) s += QScalar(cs[i]) * QScalar::q(static_cast<int>(i));
  return s;
}

// Number of k-dimensional subspaces of F_p^n counted as distinct spans.
int count_subspaces(int n, int k, int p) {
  int total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  std::set<std::set<int>> spans;
  auto add = [&](int a, int b) {
    int r = 0, m = 1;
    for (int i = 0; i < n; ++i) {
      r += ((a / m % p + b / m % p) % p) * m;
      m *= p;
    }
    return r;
  };
  auto scale = [&](int a, int c) {
    int r = 0, m = 1;
    for (int i = 0; i < n; ++i) {
      r += (a / m % p * c % p) * m;
      m *= p;
    }
    return r;
  };
  REQUIRE(k == 2);
  for (int a = 1; a < total; ++a) {
    for (int b = 1; b < total; ++b) {
      std::set<int> span;
      for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y) span.insert(add(scale(a, x), scale(b, y)));
      if (static_cast<int>(span.size()) == p * p) spans.insert(span);
    }
  }
  return static_cast<int>(spans.size());
}

SymPoly random_sympoly(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> exp(-1, 2), coef(-3, 3), count(1, 3);
  SymPoly f(n);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    ExponentVector e(n);
    for (auto& x : e) x = exp(rng);
    QScalar c = QScalar(coef(rng)) * QScalar::v(exp(rng));
    f.add_term(DominantVector::sorted(e), c);
  }
  return f;
}

}  // namespace

TEST_CASE("QScalar canonical form makes equality structural") {
  QScalar a = (QScalar::q(1) - 1) / (QScalar::v(1) - 1);  // = v + 1
  CHECK(a == lp(0, {1, 1}));
  CHECK(a.is_laurent());
  QScalar b = QScalar(1) / (QScalar::q(1) + 1);
  CHECK_FALSE(b.is_laurent());
  CHECK(b * (QScalar::q(1) + 1) == QScalar(1));
  // v-powers in the denominator move to the numerator.
  QScalar c = QScalar(1) / (QScalar::v(3) + QScalar::v(5));
  CHECK(c.den() == LaurentPoly(0, {1, 0, 1}));
  CHECK(c.num() == LaurentPoly::monomial(-3));
  CHECK_THROWS_AS(QScalar(1) / QScalar(0), DivisionByZeroError);
}

TEST_CASE("QScalar rendering") {
  CHECK((QScalar::v(3) - 2 + QScalar::v(-1)).to_string() == "v^3 - 2 + v^-1");
  CHECK((QScalar::v(1) + QScalar::v(-1)).to_string() == "v + v^-1");
  CHECK(QScalar(0).to_string() == "0");
  CHECK((QScalar(Rational(1, 2)) * QScalar::v(2) - QScalar::v(1)).to_string() == "1/2*v^2 - v");
  CHECK((QScalar(1) / (QScalar::q(1) + 1)).to_string() == "1 / (v^2 + 1)");
}

TEST_CASE("specialize_q distinguishes poles from odd powers") {
  CHECK(specialize_q(qpoly({1, 1}), 2) == 3);
  CHECK(specialize_q(QScalar::v(1) + QScalar::v(-1), 1) == 2);
  CHECK(specialize_q(QScalar::v(1), 4) == 2);
  CHECK_THROWS_AS(specialize_q(QScalar::v(1), 2), PreconditionError);
  CHECK_THROWS_AS(specialize_q(QScalar(1) / (QScalar::q(1) - 1), 1), PoleError);
}

TEST_CASE("qint_balanced") {
  CHECK(qint_balanced(1, 3) == QScalar(1));
  CHECK(qint_balanced(2, 1) == QScalar::v(1) + QScalar::v(-1));
  for (int d = 1; d <= 6; ++d) {
    for (int k = 1; k <= 6; ++k) {
      const QScalar x = qint_balanced(d, k);
      CHECK(x.is_laurent());
      CHECK(x * (QScalar::v(k) - QScalar::v(-k)) == QScalar::v(d * k) - QScalar::v(-d * k));
      CHECK(specialize_q(x, 1) == d);
    }
  }
}

TEST_CASE("qbinom") {
  CHECK(qbinom(5, 0) == QScalar(1));
  CHECK(qbinom(2, 1) == qpoly({1, 1}));
  CHECK(qbinom(4, 2) == qpoly({1, 1, 2, 1, 1}));
  CHECK_THROWS_AS(qbinom(2, 3), PreconditionError);
  CHECK_THROWS_AS(qbinom(2, -1), PreconditionError);
  // Subspace-count oracle.
  for (int p : {2, 3}) CHECK(specialize_q(qbinom(4, 2), p) == count_subspaces(4, 2, p));
  for (int d = 0; d <= 7; ++d) {
    for (int a = 0; a <= d; ++a) {
      CHECK(qbinom(d, a) == qbinom(d, d - a));
      CHECK(specialize_q(qbinom(d, a), 1) == Rational(static_cast<long>(factorial(d) / (factorial(a) * factorial(d - a)))));
    }
  }
}

TEST_CASE("group orders and parahoric index") {
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(1, 5) == 4);
  CHECK(parabolic_order(Composition({1, 1}), 2) == 2);
  CHECK(parahoric_index(Composition({3})) == QScalar(1));
  CHECK(parahoric_index(Composition({1, 1})) == qpoly({1, 1}));
  CHECK(parahoric_index(Composition({2, 1})) == qpoly({1, 1, 1}));
  CHECK_THROWS_AS(gl_order(2, 4), PreconditionError);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& c : compositions_of(n)) {
      for (int q : {2, 3, 5}) {
        CHECK(specialize_q(parahoric_index(c), q) == Rational(static_cast<unsigned long>(gl_order(n, q) / parabolic_order(c, q))));
        CHECK(gl_order(n, q) % parabolic_order(c, q) == 0);
      }
    }
  }
}

TEST_CASE("partitions and compositions") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(4).front() == Partition({4}));
  CHECK(compositions_of(4).size() == 8);
  CHECK(Partition({3, 1, 1}).conjugate() == Partition({3, 1, 1}));
  CHECK(Partition({2, 1, 1}).z() == 4);
  CHECK(Partition::parse("2,1").to_string() == "2,1");
  CHECK_THROWS_AS(Partition({1, 2}), PreconditionError);
  CHECK_THROWS_AS(Composition({2, 0}), PreconditionError);
  CHECK_THROWS_AS(Partition::parse("2,x"), PreconditionError);
}

TEST_CASE("standard bases") {
  CHECK(schur(3, Partition({1})) == elementary(3, 1));
  CHECK(elementary(3, 1) == powersum(3, 1));
  CHECK(schur(2, Partition({1, 1})) == monomial_sym(2, DominantVector({1, 1})));
  const SymPoly s21 = schur(3, Partition({2, 1}));
  CHECK(s21.coeff(DominantVector({1, 1, 1})) == QScalar(2));
  CHECK(s21.coeff(DominantVector({2, 1, 0})) == QScalar(1));
  CHECK(s21.terms().size() == 2);
  CHECK(schur(2, Partition({1, 1, 1})).is_zero());
}

TEST_CASE("Pieri: one-row Schur equals complete homogeneous sum over multisets") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= 4; ++k) {
      // Multisets of size k from {1..n}, as weakly increasing sequences.
      std::map<ExponentVector, QScalar> mono;
      std::vector<int> seq(k, 0);
      std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == k) {
          ExponentVector e(n, 0);
          for (int x : seq) ++e[x];
          mono[e] += QScalar(1);
          return;
        }
        for (int x = lo; x < n; ++x) {
          seq[pos] = x;
          rec(pos + 1, x);
        }
      };
      rec(0, 0);
      CHECK(schur(n, Partition({k})) == SymPoly::from_full_expansion(n, mono));
      CHECK(schur(n, Partition({k})) == complete(n, k));
    }
  }
}

TEST_CASE("Jacobi-Trudi cross-check for two- and three-row shapes") {
  const int n = 4;
  auto h = [&](int k) { return k < 0 ? SymPoly(n) : complete(n, k); };
  for (int w = 1; w <= 5; ++w) {
    for (const auto& mu : partitions_of(w)) {
      if (mu.length() == 2) {
        SymPoly jt = h(mu[0]) * h(mu[1]) - h(mu[0] + 1) * h(mu[1] - 1);
        CHECK(jt == schur(n, mu));
      }
      if (mu.length() == 3) {
        auto H = [&](int i, int j) { return h(mu[i] - i + j); };
        SymPoly jt = H(0, 0) * (H(1, 1) * H(2, 2) - H(1, 2) * H(2, 1)) -
                     H(0, 1) * (H(1, 0) * H(2, 2) - H(1, 2) * H(2, 0)) +
                     H(0, 2) * (H(1, 0) * H(2, 1) - H(1, 1) * H(2, 0));
        CHECK(jt == schur(n, mu));
      }
    }
  }
}

TEST_CASE("SymPoly ring operations") {
  const SymPoly p1 = powersum(2, 1);
  CHECK(p1 * p1 == monomial_sym(2, DominantVector({2, 0})) + QScalar(2) * monomial_sym(2, DominantVector({1, 1})));
  CHECK((p1 * p1 - powersum(2, 2)) * QScalar(Rational(1, 2)) == elementary(2, 2));

  const std::vector<QScalar> pt{QScalar::v(1) + 1, QScalar(3)};
  CHECK(evaluate(elementary(2, 2), pt) == (QScalar::v(1) + 1) * QScalar(3));
  CHECK_THROWS_AS(powersum(2, 1) + powersum(3, 1), PreconditionError);
}

TEST_CASE("SymPoly multiplication is commutative, associative, and evaluate is a homomorphism") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    SymPoly f = random_sympoly(rng, n), g = random_sympoly(rng, n), h = random_sympoly(rng, n);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    std::vector<QScalar> pt;
    for (int i = 0; i < n; ++i) pt.push_back(QScalar(i + 2) + QScalar::v(i + 1));
    CHECK(evaluate(f * g, pt) == evaluate(f, pt) * evaluate(g, pt));
    CHECK(evaluate(f + g, pt) == evaluate(f, pt) + evaluate(g, pt));
  }
}

TEST_CASE("from_full_expansion rejects non-symmetric input") {
  std::map<ExponentVector, QScalar> m{{{1, 0}, QScalar(1)}};
  CHECK_THROWS_AS(SymPoly::from_full_expansion(2, m), InvariantViolation);
  m[{0, 1}] = QScalar(2);
  CHECK_THROWS_AS(SymPoly::from_full_expansion(2, m), InvariantViolation);
}
