#include "innerform/finitegl/fq.hpp"

#include <algorithm>

#include "innerform/algebra/qcombinatorics.hpp"
#include "innerform/errors.hpp"

namespace innerform::finitegl {

Field::Field(int q) : q_(q), inv_(q, 0) {
  if (q < 2 || q > 251 || !is_prime(static_cast<std::uint64_t>(q))) throw PreconditionError("q must be a prime below 256");
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (a * b % q == 1) inv_[a] = b;
    }
  }
}

int Field::inv(int a) const {
  if (a % q_ == 0) throw DivisionByZeroError("inverse of 0 in F_q");
  return inv_[a % q_];
}

Mat Mat::zero(int d) {
  if (d < 1 || d > kMaxDim) throw PreconditionError("matrix dimension out of range");
  Mat m;
  m.d = d;
  return m;
}

Mat Mat::identity(int d) {
  Mat m = zero(d);
  for (int i = 0; i < d; ++i) m.set(i, i, 1);
  return m;
}

std::uint64_t Mat::code(int q) const {
  std::uint64_t c = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) c = c * static_cast<std::uint64_t>(q) + at(i, j);
  }
  return c;
}

Mat Mat::decode(int d, int q, std::uint64_t code) {
  Mat m = zero(d);
  for (int k = d * d - 1; k >= 0; --k) {
    m.set(k / d, k % d, static_cast<int>(code % static_cast<std::uint64_t>(q)));
    code /= static_cast<std::uint64_t>(q);
  }
  return m;
}

std::string Mat::to_string() const {
  std::string s = "[";
  for (int i = 0; i < d; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < d; ++j) {
      if (j) s += ",";
      s += std::to_string(at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

Mat mul(const Field& f, const Mat& x, const Mat& y) {
  Mat z = Mat::zero(x.d);
  for (int i = 0; i < x.d; ++i) {
    for (int j = 0; j < x.d; ++j) {
      int s = 0;
      for (int k = 0; k < x.d; ++k) s += x.at(i, k) * y.at(k, j);
      z.set(i, j, s % f.q());
    }
  }
  return z;
}

Mat add(const Field& f, const Mat& x, const Mat& y) {
  Mat z = Mat::zero(x.d);
  for (int i = 0; i < x.d; ++i) {
    for (int j = 0; j < x.d; ++j) z.set(i, j, f.add(x.at(i, j), y.at(i, j)));
  }
  return z;
}

Mat scale(const Field& f, const Mat& x, int c) {
  Mat z = Mat::zero(x.d);
  for (int i = 0; i < x.d; ++i) {
    for (int j = 0; j < x.d; ++j) z.set(i, j, f.mul(x.at(i, j), c));
  }
  return z;
}

namespace {

// Row-reduces in place; returns rank, and the determinant through *det if given.
int eliminate(const Field& f, Mat& x, int* det) {
  const int d = x.d;
  int r = 0, sign = 1, prod = 1;
  for (int col = 0; col < d && r < d; ++col) {
    int piv = r;
    while (piv < d && x.at(piv, col) == 0) ++piv;
    if (piv == d) continue;
    if (piv != r) {
      for (int j = 0; j < d; ++j) {
        const int t = x.at(r, j);
        x.set(r, j, x.at(piv, j));
        x.set(piv, j, t);
      }
      sign = -sign;
    }
    const int inv = f.inv(x.at(r, col));
    prod = f.mul(prod, x.at(r, col));
    for (int i = r + 1; i < d; ++i) {
      const int factor = f.mul(x.at(i, col), inv);
      if (factor == 0) continue;
      for (int j = col; j < d; ++j) x.set(i, j, f.sub(x.at(i, j), f.mul(factor, x.at(r, j))));
    }
    ++r;
  }
  if (det) *det = r < d ? 0 : (sign > 0 ? prod : f.neg(prod));
  return r;
}

}  // namespace

int det(const Field& f, Mat x) {
  int dt = 0;
  eliminate(f, x, &dt);
  return dt;
}

int rank(const Field& f, Mat x) { return eliminate(f, x, nullptr); }

Mat inverse(const Field& f, const Mat& x) {
  const int d = x.d;
  Mat a = x, b = Mat::identity(d);
  for (int col = 0; col < d; ++col) {
    int piv = col;
    while (piv < d && a.at(piv, col) == 0) ++piv;
    if (piv == d) throw PreconditionError("matrix is singular");
    for (int j = 0; j < d; ++j) {
      int t = a.at(col, j);
      a.set(col, j, a.at(piv, j));
      a.set(piv, j, t);
      t = b.at(col, j);
      b.set(col, j, b.at(piv, j));
      b.set(piv, j, t);
    }
    const int inv = f.inv(a.at(col, col));
    for (int j = 0; j < d; ++j) {
      a.set(col, j, f.mul(a.at(col, j), inv));
      b.set(col, j, f.mul(b.at(col, j), inv));
    }
    for (int i = 0; i < d; ++i) {
      const int factor = a.at(i, col);
      if (i == col || factor == 0) continue;
      for (int j = 0; j < d; ++j) {
        a.set(i, j, f.sub(a.at(i, j), f.mul(factor, a.at(col, j))));
        b.set(i, j, f.sub(b.at(i, j), f.mul(factor, b.at(col, j))));
      }
    }
  }
  return b;
}

Mat conj(const Field& f, const Mat& x, const Mat& y, const Mat& yinv) { return mul(f, mul(f, yinv, x), y); }

namespace {

void trim(FqPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

FqPoly poly_mul(const Field& f, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  trim(c);
  return c;
}

namespace {

std::pair<FqPoly, FqPoly> divmod(const Field& f, FqPoly a, const FqPoly& b) {
  if (b.empty() || b.back() != 1) throw PreconditionError("polynomial divisor must be monic");
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  FqPoly quot(a.size() - b.size() + 1, 0);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const int c = a[k];
    const std::size_t shift = k - (b.size() - 1);
    quot[shift] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

}  // namespace

FqPoly poly_mod(const Field& f, const FqPoly& a, const FqPoly& b) { return divmod(f, a, b).second; }

FqPoly poly_div_exact(const Field& f, const FqPoly& a, const FqPoly& b) {
  auto [quot, rem] = divmod(f, a, b);
  if (!rem.empty()) throw InvariantViolation("inexact polynomial division");
  return quot;
}

FqPoly poly_pow(const Field& f, const FqPoly& a, int k) {
  FqPoly r{1};
  for (int i = 0; i < k; ++i) r = poly_mul(f, r, a);
  return r;
}

Mat poly_eval(const Field& f, const FqPoly& p, const Mat& x) {
  Mat r = Mat::zero(x.d);
  for (std::size_t k = p.size(); k-- > 0;) r = add(f, mul(f, r, x), scale(f, Mat::identity(x.d), p[k]));
  return r;
}

std::string poly_to_string(const FqPoly& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p[k] == 0) continue;
    if (!s.empty()) s += " + ";
    if (k == 0 || p[k] != 1) s += std::to_string(p[k]);
    if (k > 0) {
      if (p[k] != 1) s += "*";
      s += k == 1 ? "x" : "x^" + std::to_string(k);
    }
  }
  return s;
}

FqPoly charpoly(const Field& f, const Mat& x) {
  const int d = x.d;
  // coefficient of x^{d-k} is (-1)^k times the sum of k x k principal minors
  std::vector<int> e(d + 1, 0);
  e[0] = 1;
  for (unsigned mask = 1; mask < (1u << d); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < d; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    const int k = static_cast<int>(idx.size());
    Mat sub = Mat::zero(k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) sub.set(i, j, x.at(idx[i], idx[j]));
    }
    e[k] = f.add(e[k], det(f, sub));
  }
  FqPoly p(d + 1, 0);
  for (int k = 0; k <= d; ++k) p[d - k] = k % 2 ? f.neg(e[k]) : e[k];
  return p;
}

Mat companion(const Field& f, const FqPoly& p) {
  const int m = static_cast<int>(p.size()) - 1;
  if (m < 1 || p.back() != 1) throw PreconditionError("companion: need a monic polynomial of positive degree");
  Mat c = Mat::zero(m);
  for (int i = 1; i < m; ++i) c.set(i, i - 1, 1);
  for (int i = 0; i < m; ++i) c.set(i, m - 1, f.neg(p[i]));
  return c;
}

std::vector<FqPoly> irreducibles(const Field& f, int maxdeg) {
  std::vector<FqPoly> all_irr;  // includes x, for the sieve
  for (int k = 1; k <= maxdeg; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= static_cast<std::uint64_t>(f.q());
    for (std::uint64_t c = 0; c < count; ++c) {
      FqPoly p(k + 1, 0);
      std::uint64_t t = c;
      for (int i = 0; i < k; ++i) {
        p[i] = static_cast<int>(t % static_cast<std::uint64_t>(f.q()));
        t /= static_cast<std::uint64_t>(f.q());
      }
      p[k] = 1;
      bool irreducible = true;
      for (const auto& g : all_irr) {
        if (2 * (g.size() - 1) > static_cast<std::size_t>(k)) break;
        if (poly_mod(f, p, g).empty()) {
          irreducible = false;
          break;
        }
      }
      if (irreducible) all_irr.push_back(p);
    }
  }
  std::vector<FqPoly> out;
  for (auto& p : all_irr) {
    if (!(p.size() == 2 && p[0] == 0)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace innerform::finitegl
