#include "innerform/finitegl/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "innerform/algebra/qcombinatorics.hpp"
#include "innerform/errors.hpp"
#include "innerform/weylcomb.hpp"
#include "util/parallel.hpp"

namespace innerform::finitegl {

namespace {

using u128 = unsigned __int128;

std::uint64_t checked(u128 x) {
  if (x >> 64) throw PreconditionError("64-bit overflow in group order arithmetic");
  return static_cast<std::uint64_t>(x);
}

std::uint64_t ipow(std::uint64_t b, int e) {
  u128 r = 1;
  for (int i = 0; i < e; ++i) r = checked(r * b);
  return static_cast<std::uint64_t>(r);
}

// |centralizer| of the unipotent-type block lambda over F_Q:
// Q^{sum lambda'_i^2 - sum_i m_i(m_i+1)/2} prod_i prod_{j<=m_i} (Q^j - 1).
std::uint64_t centralizer_factor(const Partition& lambda, std::uint64_t big_q) {
  const Partition conj = lambda.conjugate();
  int e = 0;
  for (int p : conj.parts()) e += p * p;
  u128 r = 1;
  for (int k = 1; k <= lambda[0]; ++k) {
    const int m = lambda.multiplicity(k);
    e -= m * (m + 1) / 2;
    for (int j = 1; j <= m; ++j) r = checked(r * (ipow(big_q, j) - 1));
  }
  return checked(r * ipow(big_q, e));
}

int degree(const FqPoly& p) { return static_cast<int>(p.size()) - 1; }

Mat block_diagonal(int d, const std::vector<Mat>& blocks) {
  Mat m = Mat::zero(d);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.d; ++i) {
      for (int j = 0; j < b.d; ++j) m.set(off + i, off + j, b.at(i, j));
    }
    off += b.d;
  }
  return m;
}

}  // namespace

GLGroup::GLGroup(int d, int q, std::uint64_t budget, int workers)
    : d_(d), field_(q), order_(0), budget_(budget), workers_(workers) {
  if (d < 1 || d > kMaxDim) throw PreconditionError("GLGroup: d out of range");
  order_ = gl_order(d, static_cast<std::uint64_t>(q));
  if (order_ > budget_) throw BudgetExceeded("GL_" + std::to_string(d) + "(F_" + std::to_string(q) + ")", order_, budget_);
  irr_ = irreducibles(field_, d);

  // One class per assignment f -> lambda_f with sum deg(f)|lambda_f| = d.
  ClassType current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int rem) {
    if (rem == 0) {
      std::vector<Mat> blocks;
      FqPoly cp{1};
      u128 cent = 1;
      for (const auto& [k, lambda] : current) {
        const FqPoly& f = irr_[k];
        for (int part : lambda.parts()) blocks.push_back(companion(field_, poly_pow(field_, f, part)));
        cp = poly_mul(field_, cp, poly_pow(field_, f, lambda.weight()));
        cent = checked(cent * centralizer_factor(lambda, ipow(static_cast<std::uint64_t>(q), degree(f))));
      }
      const auto c = static_cast<std::uint64_t>(cent);
      if (order_ % c != 0) throw InvariantViolation("centralizer order does not divide |G|");
      classes_.push_back({block_diagonal(d_, blocks), order_ / c, cp, current});
      return;
    }
    if (idx == irr_.size()) return;
    rec(idx + 1, rem);
    const int deg = degree(irr_[idx]);
    for (int s = 1; s * deg <= rem; ++s) {
      for (const auto& lambda : partitions_of(s)) {
        current.emplace_back(static_cast<int>(idx), lambda);
        rec(idx + 1, rem - s * deg);
        current.pop_back();
      }
    }
  };
  rec(0, d_);

  std::uint64_t total = 0;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    total += classes_[i].size;
    if (class_type(classes_[i].rep) != classes_[i].type) throw InvariantViolation("canonical form has the wrong invariants");
    index_.emplace(classes_[i].type, static_cast<int>(i));
  }
  if (total != order_) throw InvariantViolation("class sizes do not sum to |G|");
}

ClassType GLGroup::class_type(const Mat& x) const {
  if (x.d != d_) throw PreconditionError("class_type: wrong matrix size");
  FqPoly cp = charpoly(field_, x);
  ClassType t;
  for (std::size_t k = 0; k < irr_.size() && cp.size() > 1; ++k) {
    int e = 0;
    while (cp.size() > 1 && poly_mod(field_, cp, irr_[k]).empty()) {
      cp = poly_div_exact(field_, cp, irr_[k]);
      ++e;
    }
    if (e == 0) continue;
    const int deg = degree(irr_[k]);
    const Mat m = poly_eval(field_, irr_[k], x);
    std::vector<int> at_least;  // number of parts >= j
    Mat power = Mat::identity(d_);
    int prev = d_;
    for (int j = 1; j <= e; ++j) {
      power = mul(field_, power, m);
      const int r = rank(field_, power);
      if ((prev - r) % deg != 0) throw InvariantViolation("kernel dimension not a multiple of the degree");
      if (prev == r) break;
      at_least.push_back((prev - r) / deg);
      prev = r;
    }
    const Partition lambda = Partition(at_least).conjugate();
    if (lambda.weight() != e) throw InvariantViolation("rank profile inconsistent with multiplicity");
    t.emplace_back(static_cast<int>(k), lambda);
  }
  if (cp.size() > 1) throw PreconditionError("class_type: matrix is not invertible");
  return t;
}

int GLGroup::class_of(const Mat& x) const {
  auto it = index_.find(class_type(x));
  if (it == index_.end()) throw InvariantViolation("class_of: no class with these invariants");
  return it->second;
}

std::vector<Mat> GLGroup::elements() const {
  std::vector<Mat> out;
  out.reserve(order_);
  Mat m = Mat::zero(d_);
  const std::uint64_t nrows = ipow(static_cast<std::uint64_t>(q()), d_);
  std::function<void(int)> rec = [&](int row) {
    if (row == d_) {
      out.push_back(m);
      return;
    }
    for (std::uint64_t c = 0; c < nrows; ++c) {
      std::uint64_t t = c;
      for (int j = d_ - 1; j >= 0; --j) {
        m.set(row, j, static_cast<int>(t % static_cast<std::uint64_t>(q())));
        t /= static_cast<std::uint64_t>(q());
      }
      // rank of the first row+1 rows
      Mat partial = Mat::zero(d_);
      for (int i = 0; i <= row; ++i) {
        for (int j = 0; j < d_; ++j) partial.set(i, j, m.at(i, j));
      }
      if (rank(field_, partial) == row + 1) rec(row + 1);
    }
    for (int j = 0; j < d_; ++j) m.set(row, j, 0);
  };
  rec(0);
  if (out.size() != order_) throw InvariantViolation("element enumeration miscounted");
  return out;
}

ClassFunction ClassFunction::constant(const GLGroup& g, const Rational& c) {
  return {&g, std::vector<Rational>(g.classes().size(), c)};
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  if (values.size() != o.values.size()) throw PreconditionError("class functions on different groups");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  Rational s = 0;
  const auto& cls = a.group->classes();
  for (std::size_t i = 0; i < cls.size(); ++i) s += a.values[i] * b.values[i] * Rational(static_cast<unsigned long>(cls[i].size));
  return s / Rational(static_cast<unsigned long>(a.group->order()));
}

bool in_parabolic(const Composition& c, const Mat& x) {
  if (c.total() != x.d) throw PreconditionError("in_parabolic: composition does not match size");
  int start = 0;
  for (int b = 0; b < c.length(); ++b) {
    // rows below this block's column range must vanish
    for (int j = start; j < start + c[b]; ++j) {
      for (int i = start + c[b]; i < x.d; ++i) {
        if (x.at(i, j)) return false;
      }
    }
    start += c[b];
  }
  return true;
}

namespace {

using Vec = std::vector<int>;

// Reduced row echelon form of the given rows; returns the nonzero rows.
std::vector<Vec> rref(const Field& f, std::vector<Vec> rows) {
  const int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  int r = 0;
  for (int col = 0; col < n && r < static_cast<int>(rows.size()); ++col) {
    int piv = r;
    while (piv < static_cast<int>(rows.size()) && rows[piv][col] == 0) ++piv;
    if (piv == static_cast<int>(rows.size())) continue;
    std::swap(rows[r], rows[piv]);
    const int inv = f.inv(rows[r][col]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const int factor = rows[i][col];
      for (int j = 0; j < n; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

// All m-dimensional subspaces of F_q^L, each as an RREF basis.
void for_each_rref(const Field& f, int len, int m, const std::function<void(const std::vector<Vec>&)>& fn) {
  std::vector<int> pivots;
  std::function<void(int)> choose = [&](int start) {
    if (static_cast<int>(pivots.size()) == m) {
      std::vector<std::pair<int, int>> free;  // (row, col)
      for (int i = 0; i < m; ++i) {
        for (int j = pivots[i] + 1; j < len; ++j) {
          if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free.emplace_back(i, j);
        }
      }
      std::vector<Vec> rows(m, Vec(len, 0));
      for (int i = 0; i < m; ++i) rows[i][pivots[i]] = 1;
      std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == free.size()) {
          fn(rows);
          return;
        }
        for (int a = 0; a < f.q(); ++a) {
          rows[free[k].first][free[k].second] = a;
          fill(k + 1);
        }
        rows[free[k].first][free[k].second] = 0;
      };
      fill(0);
      return;
    }
    for (int p = start; p < len; ++p) {
      pivots.push_back(p);
      choose(p + 1);
      pivots.pop_back();
    }
  };
  choose(0);
}

}  // namespace

std::vector<Mat> flag_transversal(const GLGroup& g, const Composition& c) {
  const int d = g.d();
  if (c.total() != d) throw PreconditionError("flag_transversal: composition must sum to d");
  const Field& f = g.field();
  std::vector<Mat> out;
  std::vector<Vec> basis;
  std::vector<bool> pivot(d, false);
  std::function<void(int)> rec = [&](int b) {
    if (b == c.length()) {
      Mat s = Mat::zero(d);
      for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) s.set(i, j, basis[j][i]);
      }
      out.push_back(s);
      return;
    }
    std::vector<int> free_pos;
    for (int i = 0; i < d; ++i) {
      if (!pivot[i]) free_pos.push_back(i);
    }
    for_each_rref(f, static_cast<int>(free_pos.size()), c[b], [&](const std::vector<Vec>& rows) {
      std::vector<int> added;
      for (const auto& row : rows) {
        Vec v(d, 0);
        int lead = -1;
        for (std::size_t k = 0; k < free_pos.size(); ++k) {
          v[free_pos[k]] = row[k];
          if (lead < 0 && row[k]) lead = free_pos[k];
        }
        basis.push_back(std::move(v));
        pivot[lead] = true;
        added.push_back(lead);
      }
      rec(b + 1);
      for (int p : added) pivot[p] = false;
      basis.resize(basis.size() - rows.size());
    });
  };
  rec(0);
  const std::uint64_t expected = g.order() / parabolic_order(c, static_cast<std::uint64_t>(g.q()));
  if (out.size() != expected) throw InvariantViolation("flag count differs from [G:P]");
  return out;
}

std::vector<std::uint64_t> flag_key(const GLGroup& g, const Composition& c, const Mat& s) {
  std::vector<std::uint64_t> key;
  int dim = 0;
  for (int b = 0; b + 1 < c.length(); ++b) {
    dim += c[b];
    std::vector<Vec> cols;
    for (int j = 0; j < dim; ++j) {
      Vec v(g.d());
      for (int i = 0; i < g.d(); ++i) v[i] = s.at(i, j);
      cols.push_back(std::move(v));
    }
    std::uint64_t code = 0;
    for (const auto& row : rref(g.field(), cols)) {
      for (int x : row) code = code * static_cast<std::uint64_t>(g.q()) + static_cast<std::uint64_t>(x);
    }
    key.push_back(code);
  }
  return key;
}

Subgroup parabolic_subgroup(const GLGroup& g, const Composition& c) {
  return {"P" + c.to_string(), [c](const Mat& x) { return in_parabolic(c, x); },
          parabolic_order(c, static_cast<std::uint64_t>(g.q())), flag_transversal(g, c)};
}

Subgroup whole_group(const GLGroup& g) {
  return {"G", [](const Mat&) { return true; }, g.order(), {Mat::identity(g.d())}};
}

Subgroup trivial_subgroup(const GLGroup& g) {
  const int d = g.d();
  return {"1", [d](const Mat& x) { return x == Mat::identity(d); }, 1, g.elements()};
}

ClassFunction induce_class_function(const GLGroup& g, const Subgroup& h, const SubgroupFunction& f) {
  const Field& fld = g.field();
  std::vector<Mat> inv(h.transversal.size());
  util::parallel_for(h.transversal.size(), g.workers(), [&](std::size_t i) { inv[i] = inverse(fld, h.transversal[i]); });
  ClassFunction out = ClassFunction::constant(g, 0);
  util::parallel_for(g.classes().size(), g.workers(), [&](std::size_t k) {
    const Mat& x = g.classes()[k].rep;
    Rational s = 0;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      const Mat y = conj(fld, x, h.transversal[i], inv[i]);
      if (h.contains(y)) s += f(y);
    }
    out.values[k] = s;
  });
  return out;
}

ClassFunction induce_by_averaging(const GLGroup& g, const Subgroup& h, const SubgroupFunction& f) {
  const Field& fld = g.field();
  const auto elems = g.elements();
  std::vector<Mat> inv(elems.size());
  util::parallel_for(elems.size(), g.workers(), [&](std::size_t i) { inv[i] = inverse(fld, elems[i]); });
  ClassFunction out = ClassFunction::constant(g, 0);
  util::parallel_for(g.classes().size(), g.workers(), [&](std::size_t k) {
    const Mat& x = g.classes()[k].rep;
    Rational s = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const Mat y = conj(fld, x, elems[i], inv[i]);
      if (h.contains(y)) s += f(y);
    }
    out.values[k] = s / Rational(static_cast<unsigned long>(h.order));
  });
  return out;
}

ClassFunction parabolic_trivial_ind(const GLGroup& g, const Composition& c) {
  return induce_class_function(g, parabolic_subgroup(g, c), [](const Mat&) { return Rational(1); });
}

std::map<Partition, ClassFunction, ReverseLex> dl_characters(const GLGroup& g) {
  const int d = g.d();
  const auto parts = partitions_of(d);  // (d) first
  const std::size_t n = parts.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const weyl::SubsetI s = weyl::SubsetI::from_composition(Composition(parts[i].parts()));
    const Rational order(static_cast<long>(weyl::young_subgroup(s).order()));
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(weyl::class_count_in_young(s, parts[j]))) / order;
  }
  // Cycle types in W_mu refine mu, so row mu only involves rho at or after mu.
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] == 0) throw InvariantViolation("dl_character: zero diagonal entry");
    for (std::size_t j = 0; j < i; ++j) {
      if (a[i][j] != 0) throw InvariantViolation("dl_character: system is not triangular");
    }
  }
  std::vector<ClassFunction> r(n, ClassFunction::constant(g, 0));
  for (std::size_t i = n; i-- > 0;) {
    ClassFunction rhs = parabolic_trivial_ind(g, Composition(parts[i].parts()));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[i][j] != 0) rhs += r[j] * Rational(-a[i][j]);
    }
    r[i] = rhs * Rational(1 / a[i][i]);
  }
  std::map<Partition, ClassFunction, ReverseLex> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace(parts[i], std::move(r[i]));
  return out;
}

ClassFunction dl_character(const GLGroup& g, const Partition& rho) {
  if (rho.weight() != g.d()) throw PreconditionError("dl_character: rho must be a partition of d");
  return dl_characters(g).at(rho);
}

CombPropReport comb_prop_check(const GLGroup& g) {
  const int d = g.d();
  ClassFunction lhs = dl_character(g, Partition({d}));
  ClassFunction rhs = ClassFunction::constant(g, 0);
  std::map<Composition, ClassFunction> cache;
  for (const auto& s : weyl::SubsetI::all(d)) {
    const Composition c = s.blocks();
    auto it = cache.find(c);
    if (it == cache.end()) it = cache.emplace(c, parabolic_trivial_ind(g, c)).first;
    rhs += it->second * weyl::ep_coefficient(s);
  }
  rhs = rhs * Rational(d);
  const bool ok = lhs == rhs;
  return {d, g.q(), std::move(lhs), std::move(rhs), ok};
}

ParabolicClasses parabolic_classes(const GLGroup& g, const Composition& c) {
  const Field& f = g.field();
  std::vector<Mat> elems;
  for (const auto& x : g.elements()) {
    if (in_parabolic(c, x)) elems.push_back(x);
  }
  const std::uint64_t order = parabolic_order(c, static_cast<std::uint64_t>(g.q()));
  if (elems.size() != order) throw InvariantViolation("parabolic enumeration miscounted");
  std::vector<Mat> inv;
  for (const auto& x : elems) inv.push_back(inverse(f, x));
  ParabolicClasses out{c, order, {}, {}, {}};
  for (const auto& p : elems) {
    if (out.class_of.count(p.code(g.q()))) continue;
    const int k = static_cast<int>(out.reps.size());
    std::uint64_t size = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (out.class_of.emplace(conj(f, p, elems[i], inv[i]).code(g.q()), k).second) ++size;
    }
    out.reps.push_back(p);
    out.sizes.push_back(size);
  }
  return out;
}

IndConjugateReport ind_conjugate_identity_check(const GLGroup& g, const Composition& c, int p_class) {
  const Field& f = g.field();
  const int q = g.q();
  const ParabolicClasses pc = parabolic_classes(g, c);
  const int npc = static_cast<int>(pc.reps.size());
  if (p_class >= npc) throw PreconditionError("ind_conjugate_identity_check: no such parabolic class");

  const auto flags = flag_transversal(g, c);
  const auto elems = g.elements();
  std::vector<Mat> elem_inv(elems.size());
  util::parallel_for(elems.size(), g.workers(), [&](std::size_t i) { elem_inv[i] = inverse(f, elems[i]); });

  // A second transversal: the last element of G (in code order) in each coset.
  std::map<std::vector<std::uint64_t>, std::size_t> last;
  for (std::size_t i = 0; i < elems.size(); ++i) last[flag_key(g, c, elems[i])] = i;
  if (last.size() != flags.size()) throw InvariantViolation("coset count mismatch between transversals");

  const std::size_t ncls = g.classes().size();
  // counts[x][C]
  std::vector<std::vector<long long>> a(ncls, std::vector<long long>(npc, 0)), b = a, other = a;
  std::vector<Mat> flag_inv;
  for (const auto& s : flags) flag_inv.push_back(inverse(f, s));
  auto bump = [&](std::vector<long long>& row, const Mat& y) {
    if (!in_parabolic(c, y)) return;
    ++row[pc.class_of.at(y.code(q))];
  };
  util::parallel_for(ncls, g.workers(), [&](std::size_t k) {
    const Mat& x = g.classes()[k].rep;
    for (std::size_t i = 0; i < flags.size(); ++i) bump(a[k], conj(f, x, flags[i], flag_inv[i]));
    // t x t^{-1} = conj by t^{-1}
    for (std::size_t i = 0; i < elems.size(); ++i) bump(b[k], conj(f, x, elem_inv[i], elems[i]));
    for (const auto& [key, i] : last) bump(other[k], conj(f, x, elems[i], elem_inv[i]));
  });

  IndConjugateReport rep{g.d(), q, c, {}, true};
  const Rational porder(static_cast<unsigned long>(pc.order));
  for (int k = 0; k < npc; ++k) {
    if (p_class >= 0 && k != p_class) continue;
    IndConjugateRow row{k, pc.sizes[k], {}, {}, {}, true};
    for (std::size_t x = 0; x < ncls; ++x) {
      row.flag_sum.emplace_back(static_cast<long>(a[x][k]));
      row.averaged.push_back(Rational(static_cast<long>(b[x][k])) / porder);
      row.other_sum.emplace_back(static_cast<long>(other[x][k]));
      if (row.flag_sum.back() != row.averaged.back() || row.flag_sum.back() != row.other_sum.back()) row.ok = false;
    }
    rep.ok = rep.ok && row.ok;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace innerform::finitegl
