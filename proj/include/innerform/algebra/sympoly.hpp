#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "innerform/algebra/partition.hpp"
#include "innerform/algebra/qscalar.hpp"

namespace innerform {

using ExponentVector = std::vector<int>;

/// Weakly decreasing integer vector; negative entries allowed.
class DominantVector {
 public:
  DominantVector() = default;
  explicit DominantVector(ExponentVector entries);
  /// Sorts into weakly decreasing order.
  static DominantVector sorted(ExponentVector entries);
  /// Partition padded with zeros to length n.
  static DominantVector padded(const Partition& p, int n);

  const ExponentVector& entries() const { return e_; }
  int size() const { return static_cast<int>(e_.size()); }
  int degree() const;
  std::string to_string() const;

  friend auto operator<=>(const DominantVector&, const DominantVector&) = default;
  friend bool operator==(const DominantVector&, const DominantVector&) = default;

 private:
  ExponentVector e_;
};

/// All distinct rearrangements of a dominant vector. Memoized and thread-safe.
std::shared_ptr<const std::vector<ExponentVector>> orbit(const DominantVector& w);

/// S_n-invariant Laurent polynomial in n variables, stored on dominant exponents:
/// f = sum_w terms[w] * m_w where m_w is the orbit sum of z^w.
class SymPoly {
 public:
  using Terms = std::map<DominantVector, QScalar, std::greater<>>;

  explicit SymPoly(int nvars);

  /// Builds from a full monomial expansion. Throws InvariantViolation if the
  /// expansion is not S_n-invariant.
  static SymPoly from_full_expansion(int nvars, const std::map<ExponentVector, QScalar>& monomials);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QScalar coeff(const DominantVector& w) const;

  void add_term(const DominantVector& w, const QScalar& c);

  std::map<ExponentVector, QScalar> full_expansion() const;

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const QScalar& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const QScalar& c) { return a *= c; }
  friend SymPoly operator*(const QScalar& c, SymPoly a) { return a *= c; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  SymPoly map_coefficients(const std::function<QScalar(const QScalar&)>& fn) const;

  /// "c1*m[2,0] + c2*m[1,1]".
  std::string to_string() const;

 private:
  void require_same_nvars(const SymPoly& o) const;

  int nvars_;
  Terms terms_;
};

SymPoly monomial_sym(int n, const DominantVector& w);
SymPoly elementary(int n, int k);
SymPoly powersum(int n, int k);
/// Complete homogeneous h_k; h_0 = 1.
SymPoly complete(int n, int k);
/// Schur polynomial by SSYT enumeration; zero if mu has more than n parts.
SymPoly schur(int n, const Partition& mu);

/// Calls fn(content) for every semistandard tableau of the given shape with
/// entries in {1..n}; content[i] counts the entry i+1.
void for_each_ssyt(const Partition& shape, int n, const std::function<void(const ExponentVector&)>& fn);

/// Value at the given point, summing the full orbit expansion.
QScalar evaluate(const SymPoly& f, std::span<const QScalar> point);

/// Coefficient-wise q -> c; coefficients of the result are rational constants.
SymPoly specialize_q(const SymPoly& f, const Rational& c);

}  // namespace innerform
