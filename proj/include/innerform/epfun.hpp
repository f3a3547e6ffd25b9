#pragma once

#include <map>
#include <string>

#include "innerform/algebra/partition.hpp"
#include "innerform/algebra/qscalar.hpp"
#include "innerform/finitegl/group.hpp"

namespace innerform::ep {

enum class Basis { E, One };

std::string to_string(Basis b);

/// Linear combination of standard parahoric types of GL_n, keyed by reductive-quotient partition.
class ParahoricCombo {
 public:
  using Terms = std::map<Partition, QScalar, ReverseLex>;

  explicit ParahoricCombo(int n, Basis basis = Basis::E);
  static ParahoricCombo single(const Partition& type, const QScalar& c = QScalar(1), Basis basis = Basis::E);

  int n() const { return n_; }
  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  QScalar coeff(const Partition& type) const;
  void add_term(const Partition& type, const QScalar& c);

  ParahoricCombo& operator+=(const ParahoricCombo& o);
  friend ParahoricCombo operator+(ParahoricCombo a, const ParahoricCombo& b) { return a += b; }
  friend ParahoricCombo operator*(ParahoricCombo a, const QScalar& c);
  /// Convolution of e-basis combos: e_mu * e_nu = e_{mu ∪ nu}.
  friend ParahoricCombo operator*(const ParahoricCombo& a, const ParahoricCombo& b);
  friend bool operator==(const ParahoricCombo& a, const ParahoricCombo& b) = default;

  /// "e_(2) - 1/2*e_(1,1)"
  std::string to_string() const;

 private:
  int n_;
  Basis basis_;
  Terms terms_;
};

/// Parahoric of GL_r(D), D of degree d, with reductive quotient prod GL_{r_i}(F_{q^d}).
struct DParahoricType {
  int d;
  Partition blocks;

  DParahoricType(int d, Partition blocks);
  int r() const { return blocks.weight(); }
  int n() const { return d * r(); }
};

/// Composition-level f^EP: one coefficient per composition of n.
std::map<Composition, Rational> ep_function_compositions(int n);
/// Sum composition coefficients onto sorted partitions.
ParahoricCombo collapse(int n, const std::map<Composition, Rational>& terms);

/// sum_I (-1)^{n-1-|I|}/(n-|I|) e_{J_I}, built from partitions with multiplicity.
ParahoricCombo ep_function(int n);

/// d^r sum_{I_1..I_r} prod_i coeff(I_i) e_{J_I}.
ParahoricCombo product_ep(int d, int r);

/// Weyl-averaged display over W_L = prod S_{r_i}, grouped by cycle type.
ParahoricCombo f_J(const DParahoricType& t);

/// prod n_i.
long long levi_scalar(const Composition& c);

ParahoricCombo to_one_basis(const ParahoricCombo& x);
ParahoricCombo to_e_basis(const ParahoricCombo& x);

/// e_c -> Ind_{P_c}(1), coefficients specialized at q = g.q().
finitegl::ClassFunction shadow(const ParahoricCombo& x, const finitegl::GLGroup& g);

/// (1/|W_L|) sum_{w in W_L} R_{T_w}(1) on GL_n(F_q), with w of parts r_ij giving the S_n type (d r_ij).
finitegl::ClassFunction weyl_averaged_dl(const DParahoricType& t, const finitegl::GLGroup& g);

struct ShadowReport {
  DParahoricType type;
  int q;
  finitegl::ClassFunction shadow;
  finitegl::ClassFunction averaged_dl;
  bool ok;
};

ShadowReport ep_shadow_check(const DParahoricType& t, const finitegl::GLGroup& g);

/// All DParahoricTypes with r*d = n.
std::vector<DParahoricType> d_parahoric_types(int n);

}  // namespace innerform::ep
