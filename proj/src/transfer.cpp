#include "innerform/transfer.hpp"

#include <map>

#include "innerform/algebra/linalg.hpp"
#include "innerform/algebra/qcombinatorics.hpp"
#include "innerform/errors.hpp"

namespace innerform::transfer {

TransferParams::TransferParams(int r_, int d_) : r(r_), d(d_) {
  if (r < 1 || d < 1) throw PreconditionError("TransferParams: need r, d >= 1");
}

GeneralMapParams::GeneralMapParams(int k_, int ell_, int m_, int s_) : k(k_), ell(ell_), m(m_), s(s_) {
  if (k < 1 || ell < 1 || m < 1 || s < 1) throw PreconditionError("GeneralMapParams: all parameters must be positive");
  if (m % s != 0) throw PreconditionError("GeneralMapParams: s must divide m");
}

std::vector<int> shift_vector(const TransferParams& p) {
  std::vector<int> x;
  x.reserve(p.n());
  for (int k = 0; k < p.r; ++k) {
    for (int j = 1; j <= p.d; ++j) x.push_back(p.d + 1 - 2 * j);
  }
  return x;
}

namespace {

void require_length(const TransferParams& p, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != p.n()) throw PreconditionError("exponent vector length must equal n = r*d");
}

std::vector<int> block_sums(const TransferParams& p, const std::vector<int>& a) {
  std::vector<int> b(p.r, 0);
  for (int i = 0; i < p.n(); ++i) b[i / p.d] += a[i];
  return b;
}

int dot_shift(const TransferParams& p, const std::vector<int>& a) {
  int e = 0;
  for (int i = 0; i < p.n(); ++i) e += a[i] * (p.d - 1 - 2 * (i % p.d));
  return e;
}

}  // namespace

MonomialImage transfer_monomial(const TransferParams& p, const std::vector<int>& a) {
  require_length(p, a);
  return {QScalar::v(dot_shift(p, a)), block_sums(p, a)};
}

SymPoly transfer_sym(const TransferParams& p, const SymPoly& f) {
  if (f.nvars() != p.n()) throw PreconditionError("transfer_sym: input must have n = r*d variables");
  std::map<ExponentVector, QScalar> acc;
  for (const auto& [w, c] : f.terms()) {
    // Shifts collected per target exponent as one Laurent polynomial.
    std::map<ExponentVector, LaurentPoly> per_key;
    for (const auto& a : *orbit(w)) per_key[block_sums(p, a)] += LaurentPoly::monomial(dot_shift(p, a));
    for (auto& [b, poly] : per_key) acc[b] += QScalar(std::move(poly)) * c;
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
  return SymPoly::from_full_expansion(p.r, acc);
}

SymPoly image_e(const TransferParams& p, int k) {
  if (k < 1 || k > p.n()) throw PreconditionError("image_e: need 1 <= k <= n");
  SymPoly out(p.r);
  for (const auto& alpha : partitions_of(k)) {
    if (alpha.length() > p.r || alpha[0] > p.d) continue;
    // alpha padded with zeros to exactly k entries.
    QScalar coeff(1);
    int exponent = 0;  // v-units
    for (int i = 0; i < k; ++i) {
      const int ai = i < alpha.length() ? alpha[i] : 0;
      coeff *= qbinom(p.d, ai);
      exponent += ai * ai - p.d;
    }
    out.add_term(DominantVector::padded(alpha, p.r), coeff * QScalar::v(exponent));
  }
  return out;
}

SymPoly image_p(const TransferParams& p, int k) { return powersum(p.r, k) * qint_balanced(p.d, k); }

SymPoly image_schur(const TransferParams& p, const Partition& mu) {
  if (mu.length() > p.n()) throw PreconditionError("image_schur: partition has more than n parts");
  std::map<ExponentVector, LaurentPoly> acc;
  for_each_ssyt(mu, p.n(), [&](const ExponentVector& content) {
    acc[block_sums(p, content)] += LaurentPoly::monomial(dot_shift(p, content));
  });
  std::map<ExponentVector, QScalar> mono;
  for (auto& [b, poly] : acc) {
    if (!poly.is_zero()) mono.emplace(b, QScalar(std::move(poly)));
  }
  return SymPoly::from_full_expansion(p.r, mono);
}

int modulus_exponent(const TransferParams& p, const std::vector<int>& a, const std::vector<int>& b) {
  require_length(p, a);
  if (b != block_sums(p, a)) throw PreconditionError("modulus_exponent: b must be the block sum of a");
  int e = 0;
  for (int i = 1; i <= p.n(); ++i) e += (p.n() + 1 - 2 * i) * a[i - 1];
  for (int i = 1; i <= p.r; ++i) e -= (p.r + 1 - 2 * i) * p.d * b[i - 1];
  return e;
}

QScalar general_powersum_map(const GeneralMapParams& g, int i) {
  if (i < 1) throw PreconditionError("general_powersum_map: need i >= 1");
  const int unit = i * g.m / g.s;
  const QScalar num = QScalar(1) - QScalar::q(-unit * g.k * g.ell);
  const QScalar den = QScalar(1) - QScalar::q(-unit);
  return num / den;
}

SurjectivityReport surjectivity_witness(const TransferParams& p, int maxdeg) {
  if (maxdeg < 1) throw PreconditionError("surjectivity_witness: need maxdeg >= 1");
  SurjectivityReport rep{p, maxdeg, {}, {}, true};
  std::vector<SymPoly> images;
  for (int k = 1; k <= maxdeg; ++k) {
    rep.leading.push_back(qint_balanced(p.d, k));
    if (rep.leading.back().is_zero()) rep.ok = false;
    images.push_back(image_p(p, k));
  }
  for (int m = 1; m <= maxdeg; ++m) {
    std::vector<DominantVector> basis;
    for (const auto& mu : partitions_of(m)) {
      if (mu.length() <= p.r) basis.push_back(DominantVector::padded(mu, p.r));
    }
    std::vector<std::vector<QScalar>> rows;
    for (const auto& lambda : partitions_of(m)) {
      SymPoly prod = images[lambda[0] - 1];
      for (int i = 1; i < lambda.length(); ++i) prod = prod * images[lambda[i] - 1];
      std::vector<QScalar> row;
      for (const auto& w : basis) row.push_back(prod.coeff(w));
      rows.push_back(std::move(row));
    }
    const int rk = rank(rows);
    rep.ranks.push_back({m, static_cast<int>(basis.size()), rk});
    if (rk != static_cast<int>(basis.size())) rep.ok = false;
  }
  return rep;
}

}  // namespace innerform::transfer
