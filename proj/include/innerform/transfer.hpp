#pragma once

#include <vector>

#include "innerform/algebra/partition.hpp"
#include "innerform/algebra/qscalar.hpp"
#include "innerform/algebra/sympoly.hpp"

namespace innerform::transfer {

/// Source has n = r*d variables z_1..z_n, target has r variables t_1..t_r.
struct TransferParams {
  TransferParams(int r, int d);
  int r;
  int d;
  int n() const { return r * d; }
};

/// Parameters of the power-sum coefficient for a block M = GL_m(D)^k whose
/// supercuspidal support splits into ell pieces, with stabilizer mu_{m/s}^k.
struct GeneralMapParams {
  GeneralMapParams(int k, int ell, int m, int s);
  int k;
  int ell;
  int m;
  int s;
};

/// The block-repeated shift (c,...,c), c = (d-1, d-3, ..., 1-d), in v-units.
std::vector<int> shift_vector(const TransferParams& p);

struct MonomialImage {
  QScalar coeff;
  std::vector<int> b;
};

/// z^a -> v^{a.x} t^b with b_k the k-th block sum of a.
MonomialImage transfer_monomial(const TransferParams& p, const std::vector<int>& a);

/// Linear extension of transfer_monomial over the orbit expansion of f.
SymPoly transfer_sym(const TransferParams& p, const SymPoly& f);

/// Closed form for the image of e_k via q-binomials.
SymPoly image_e(const TransferParams& p, int k);
/// qint_balanced(d, k) * p_k(t).
SymPoly image_p(const TransferParams& p, int k);
/// Image of the Schur function s_mu, summed over SSYT of shape mu in n letters.
SymPoly image_schur(const TransferParams& p, const Partition& mu);

/// sum_i (n+1-2i) a_i - sum_i (r+1-2i) d b_i, the doubled exponent of the
/// modulus-character product. b must be the block sum of a.
int modulus_exponent(const TransferParams& p, const std::vector<int>& a, const std::vector<int>& b);

/// (1 - q^{-i k ell m/s}) / (1 - q^{-i m/s}).
QScalar general_powersum_map(const GeneralMapParams& g, int i);

struct DegreeRank {
  int degree;
  int dimension;  // number of monomial functions m_lambda, |lambda| = degree, <= r parts
  int rank;       // rank of the images of the p_lambda, |lambda| = degree
};

struct SurjectivityReport {
  TransferParams params;
  int maxdeg;
  std::vector<QScalar> leading;  // qint_balanced(d, k), k = 1..maxdeg
  std::vector<DegreeRank> ranks;
  bool ok = false;
};

/// Checks that image_p(1..maxdeg) have nonzero leading coefficients and that
/// products of them span the degree <= maxdeg polynomial invariants in r variables.
SurjectivityReport surjectivity_witness(const TransferParams& p, int maxdeg);

}  // namespace innerform::transfer
