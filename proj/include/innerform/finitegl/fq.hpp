#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace innerform::finitegl {

inline constexpr int kMaxDim = 6;

/// Prime field F_q.
class Field {
 public:
  explicit Field(int q);
  int q() const { return q_; }
  int add(int a, int b) const { return (a + b) % q_; }
  int sub(int a, int b) const { return (a - b + q_) % q_; }
  int mul(int a, int b) const { return (a * b) % q_; }
  int neg(int a) const { return (q_ - a) % q_; }
  /// Throws DivisionByZeroError on 0.
  int inv(int a) const;

 private:
  int q_;
  std::vector<int> inv_;
};

/// Square matrix over F_q, row-major, d <= kMaxDim.
struct Mat {
  int d = 0;
  std::array<std::uint8_t, kMaxDim * kMaxDim> a{};

  static Mat zero(int d);
  static Mat identity(int d);
  int at(int i, int j) const { return a[i * kMaxDim + j]; }
  void set(int i, int j, int x) { a[i * kMaxDim + j] = static_cast<std::uint8_t>(x); }

  /// Base-q digits, row-major; fits 64 bits at the sizes we enumerate.
  std::uint64_t code(int q) const;
  static Mat decode(int d, int q, std::uint64_t code);

  /// Row-major "[[1,0],[0,1]]".
  std::string to_string() const;

  friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mul(const Field& f, const Mat& x, const Mat& y);
Mat add(const Field& f, const Mat& x, const Mat& y);
Mat scale(const Field& f, const Mat& x, int c);
int det(const Field& f, Mat x);
int rank(const Field& f, Mat x);
/// Throws PreconditionError if singular.
Mat inverse(const Field& f, const Mat& x);
/// y^{-1} x y.
Mat conj(const Field& f, const Mat& x, const Mat& y, const Mat& yinv);

/// Polynomial over F_q, coefficients from constant term upward, no trailing zeros.
using FqPoly = std::vector<int>;

FqPoly poly_mul(const Field& f, const FqPoly& a, const FqPoly& b);
/// Remainder of a by a monic b.
FqPoly poly_mod(const Field& f, const FqPoly& a, const FqPoly& b);
/// Quotient of a by a monic b; throws unless the division is exact.
FqPoly poly_div_exact(const Field& f, const FqPoly& a, const FqPoly& b);
FqPoly poly_pow(const Field& f, const FqPoly& a, int k);
Mat poly_eval(const Field& f, const FqPoly& p, const Mat& x);
/// "x^2 + x + 1".
std::string poly_to_string(const FqPoly& p);

/// det(xI - A), from sums of principal minors.
FqPoly charpoly(const Field& f, const Mat& x);
/// Companion matrix of a monic polynomial.
Mat companion(const Field& f, const FqPoly& p);

/// Monic irreducible polynomials of degree 1..maxdeg other than x, ordered by degree then coefficients.
std::vector<FqPoly> irreducibles(const Field& f, int maxdeg);

}  // namespace innerform::finitegl
