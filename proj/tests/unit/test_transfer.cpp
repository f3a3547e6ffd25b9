#include <doctest.h>

#include <random>

#include "innerform/algebra/qcombinatorics.hpp"
#include "innerform/errors.hpp"
#include "innerform/transfer.hpp"
#include "support/substitution_oracle.hpp"

using namespace innerform;
using namespace innerform::transfer;

namespace {

SymPoly t_power(int r, std::vector<int> e) { return monomial_sym(r, DominantVector::sorted(std::move(e))); }

SymPoly random_laurent_sympoly(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> exp(-1, 2), coef(-2, 2), count(1, 3);
  SymPoly f(n);
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    ExponentVector e(n);
    for (auto& x : e) x = exp(rng);
    f.add_term(DominantVector::sorted(e), QScalar(coef(rng)) * QScalar::v(exp(rng)));
  }
  return f;
}

const QScalar vv = QScalar::v(1) + QScalar::v(-1);

}  // namespace

TEST_CASE("transfer_monomial examples") {
  auto m = transfer_monomial({1, 2}, {1, 0});
  CHECK(m.coeff == QScalar::v(1));
  CHECK(m.b == std::vector<int>{1});
  m = transfer_monomial({1, 2}, {1, 1});
  CHECK(m.coeff == QScalar(1));
  CHECK(m.b == std::vector<int>{2});
  m = transfer_monomial({2, 2}, {1, 0, 0, 1});
  CHECK(m.coeff == QScalar(1));
  CHECK(m.b == std::vector<int>{1, 1});
  CHECK_THROWS_AS(transfer_monomial({2, 2}, {1, 0}), PreconditionError);
}

TEST_CASE("shift vector blocks") {
  CHECK(shift_vector({2, 3}) == std::vector<int>{2, 0, -2, 2, 0, -2});
  CHECK(shift_vector({3, 1}) == std::vector<int>{0, 0, 0});
}

TEST_CASE("transfer_sym examples") {
  CHECK(transfer_sym({1, 2}, powersum(2, 1)) == t_power(1, {1}) * vv);
  CHECK(transfer_sym({1, 2}, elementary(2, 2)) == t_power(1, {2}));
  const SymPoly expected = t_power(2, {2, 0}) + t_power(2, {1, 1}) * (QScalar::q(1) + 2 + QScalar::q(-1));
  CHECK(transfer_sym({2, 2}, elementary(4, 2)) == expected);
  CHECK_THROWS_AS(transfer_sym({2, 2}, elementary(3, 2)), PreconditionError);
}

TEST_CASE("transfer_sym agrees with literal substitution") {
  for (int r = 1; r <= 3; ++r) {
    for (int d = 1; r * d <= 6; ++d) {
      const int n = r * d;
      for (int k = 1; k <= std::min(n, 4); ++k) {
        CHECK(oracle::equals(oracle::substitute(elementary(n, k), r, d), transfer_sym({r, d}, elementary(n, k))));
        CHECK(oracle::equals(oracle::substitute(powersum(n, k), r, d), transfer_sym({r, d}, powersum(n, k))));
      }
    }
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 1 + trial % 2, d = 1 + (trial / 2) % 3;
    const SymPoly f = random_laurent_sympoly(rng, r * d);
    CHECK(oracle::equals(oracle::substitute(f, r, d), transfer_sym({r, d}, f)));
  }
}

TEST_CASE("image_e matches e_k of the substituted variables") {
  for (int r = 1; r <= 3; ++r) {
    for (int d = 1; r * d <= 6; ++d) {
      for (int k = 1; k <= r * d; ++k) {
        CHECK(oracle::equals(oracle::elementary_substituted(r, d, k), image_e({r, d}, k)));
      }
    }
  }
}

TEST_CASE("image_e examples") {
  CHECK(image_e({1, 2}, 1) == t_power(1, {1}) * vv);
  CHECK(image_e({1, 2}, 2) == t_power(1, {2}));
  for (int r = 1; r <= 3; ++r) {
    for (int d = 1; d <= 3; ++d) {
      CHECK(image_e({r, d}, r * d) == t_power(r, std::vector<int>(r, d)));
    }
  }
  CHECK_THROWS_AS(image_e({1, 2}, 3), PreconditionError);
}

TEST_CASE("image_p examples") {
  for (int k = 1; k <= 4; ++k) CHECK(image_p({2, 1}, k) == powersum(2, k));
  CHECK(image_p({1, 2}, 1) == image_e({1, 2}, 1));
  for (int d = 1; d <= 4; ++d) {
    for (int k = 1; k <= 4; ++k) CHECK(specialize_q(image_p({2, d}, k), 1) == powersum(2, k) * QScalar(d));
  }
}

TEST_CASE("image_schur matches Jacobi-Trudi in the substituted variables") {
  for (int r = 1; r <= 2; ++r) {
    for (int d = 1; d <= 3; ++d) {
      for (int w = 1; w <= 4; ++w) {
        for (const auto& mu : partitions_of(w)) {
          if (mu.length() > 2 || mu.length() > r * d) continue;
          auto h = [&](int k) { return oracle::complete_substituted(r, d, k); };
          oracle::MPoly jt = mu.length() == 1 ? h(mu[0]) : h(mu[0]) * h(mu[1]) - h(mu[0] + 1) * h(mu[1] - 1);
          CHECK(oracle::equals(jt, image_schur({r, d}, mu)));
        }
      }
    }
  }
}

TEST_CASE("image_schur examples") {
  CHECK(image_schur({2, 2}, Partition({1})) == image_e({2, 2}, 1));
  CHECK(image_schur({1, 2}, Partition({1, 1})) == t_power(1, {2}));
  for (int k = 1; k <= 5; ++k) {
    const SymPoly expected = t_power(1, {k}) * qint_balanced(k + 1, 1);
    CHECK(image_schur({1, 2}, Partition({k})) == expected);
    CHECK(transfer_sym({1, 2}, schur(2, Partition({k}))) == expected);
  }
}

TEST_CASE("modulus_exponent equals the shift inner product") {
  CHECK(modulus_exponent({2, 2}, {0, 0, 0, 0}, {0, 0}) == 0);
  CHECK(modulus_exponent({1, 2}, {1, 0}, {1}) == 1);
  CHECK_THROWS_AS(modulus_exponent({1, 2}, {1, 0}, {2}), PreconditionError);
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + trial % 4, d = 1 + (trial / 4) % 2 + (r <= 2 ? trial % 3 : 0);
    if (r * d > 8) continue;
    std::vector<int> a(r * d);
    for (auto& x : a) x = entry(rng);
    std::vector<int> b(r, 0);
    for (int i = 0; i < r * d; ++i) b[i / d] += a[i];
    const auto x = shift_vector({r, d});
    int dot = 0;
    for (int i = 0; i < r * d; ++i) dot += a[i] * x[i];
    CHECK(modulus_exponent({r, d}, a, b) == dot);
  }
}

TEST_CASE("transfer_sym is a ring homomorphism") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 15; ++trial) {
    const TransferParams p(1 + trial % 2, 1 + trial % 3);
    const SymPoly f = random_laurent_sympoly(rng, p.n()), g = random_laurent_sympoly(rng, p.n());
    CHECK(transfer_sym(p, f * g) == transfer_sym(p, f) * transfer_sym(p, g));
    CHECK(transfer_sym(p, f + g) == transfer_sym(p, f) + transfer_sym(p, g));
  }
}

TEST_CASE("Newton identities carry image_p to image_e") {
  for (auto [r, d] : {std::pair{1, 5}, {2, 3}, {3, 2}, {5, 1}, {2, 2}}) {
    const TransferParams p(r, d);
    std::vector<SymPoly> e{SymPoly(r)};
    e[0].add_term(DominantVector(std::vector<int>(r, 0)), QScalar(1));
    for (int k = 1; k <= std::min(5, p.n()); ++k) {
      SymPoly acc(r);
      for (int i = 1; i <= k; ++i) {
        SymPoly term = e[k - i] * image_p(p, i);
        acc += (i % 2 == 1) ? term : term * QScalar(-1);
      }
      e.push_back(acc * QScalar(Rational(1, k)));
      CHECK(e[k] == image_e(p, k));
    }
  }
}

TEST_CASE("degenerations") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) CHECK(transfer_sym({n, 1}, elementary(n, k)) == elementary(n, k));
    CHECK(transfer_sym({n, 1}, schur(n, Partition({2, 1}))) == schur(n, Partition({2, 1})));
  }
  // q = 1: e_k goes to sum_alpha prod binom(d, alpha_i) m_alpha.
  for (auto [r, d] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    for (int k = 1; k <= r * d; ++k) {
      SymPoly expected(r);
      for (const auto& alpha : partitions_of(k)) {
        if (alpha.length() > r || alpha[0] > d) continue;
        long c = 1;
        for (int a : alpha.parts()) c *= factorial(d) / (factorial(a) * factorial(d - a));
        expected.add_term(DominantVector::padded(alpha, r), QScalar(Rational(c)));
      }
      CHECK(specialize_q(image_e({r, d}, k), 1) == expected);
    }
  }
}

TEST_CASE("general_powersum_map") {
  CHECK(general_powersum_map({1, 1, 3, 1}, 2) == QScalar(1));
  CHECK(general_powersum_map({1, 2, 1, 1}, 1) == QScalar(1) + QScalar::q(-1));
  for (int i = 1; i <= 6; ++i) {
    const QScalar c = general_powersum_map({2, 3, 2, 1}, i);
    CHECK_FALSE(c.is_zero());
    CHECK(c.is_laurent());
  }
  CHECK_THROWS_AS(GeneralMapParams(1, 1, 3, 2), PreconditionError);
}

TEST_CASE("surjectivity witness") {
  auto rep = surjectivity_witness({3, 1}, 3);
  CHECK(rep.ok);
  for (const auto& c : rep.leading) CHECK(c == QScalar(1));
  rep = surjectivity_witness({2, 2}, 4);
  CHECK(rep.ok);
  CHECK(rep.leading[0] == vv);
  CHECK(rep.leading[1] == QScalar::q(1) + QScalar::q(-1));
  for (const auto& dr : rep.ranks) CHECK(dr.rank == dr.dimension);
  for (int d = 1; d <= 3; ++d) {
    for (const auto& c : surjectivity_witness({2, d}, 3).leading) CHECK(specialize_q(c, 1) == d);
  }
}
