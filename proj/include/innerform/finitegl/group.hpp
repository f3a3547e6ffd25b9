#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "innerform/algebra/partition.hpp"
#include "innerform/algebra/qscalar.hpp"
#include "innerform/finitegl/fq.hpp"

namespace innerform::finitegl {

inline constexpr std::uint64_t kDefaultBudget = 25'000'000;

/// Rational canonical form data: partition attached to each irreducible (by index).
using ClassType = std::vector<std::pair<int, Partition>>;

struct ConjugacyClass {
  Mat rep;
  std::uint64_t size;
  FqPoly char_poly;
  ClassType type;
};

/// GL_d(F_q). Classes are built from canonical forms on construction;
/// elements are only enumerated on request.
class GLGroup {
 public:
  /// Throws BudgetExceeded when |G| > budget.
  GLGroup(int d, int q, std::uint64_t budget = kDefaultBudget, int workers = 1);

  int d() const { return d_; }
  int q() const { return field_.q(); }
  const Field& field() const { return field_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t budget() const { return budget_; }
  int workers() const { return workers_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const std::vector<FqPoly>& irreducible_polys() const { return irr_; }

  ClassType class_type(const Mat& x) const;
  /// Index of the class containing x; x must be invertible of size d.
  int class_of(const Mat& x) const;
  int identity_class() const { return class_of(Mat::identity(d_)); }

  /// All elements, in code order. Respects the budget.
  std::vector<Mat> elements() const;

 private:
  int d_;
  Field field_;
  std::uint64_t order_;
  std::uint64_t budget_;
  int workers_;
  std::vector<FqPoly> irr_;
  std::vector<ConjugacyClass> classes_;
  std::map<ClassType, int> index_;
};

/// One value per conjugacy class.
struct ClassFunction {
  const GLGroup* group;
  std::vector<Rational> values;

  static ClassFunction constant(const GLGroup& g, const Rational& c);
  ClassFunction& operator+=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& c) {
    for (auto& x : a.values) x *= c;
    return a;
  }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.values == b.values; }
};

/// (1/|G|) sum size * a * b (both rational, so no conjugation).
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

/// A subgroup given by membership, order and a left transversal S (G = ⊔ s h).
struct Subgroup {
  std::string name;
  std::function<bool(const Mat&)> contains;
  std::uint64_t order;
  std::vector<Mat> transversal;
};

/// Block upper-triangular P_c.
bool in_parabolic(const Composition& c, const Mat& x);
/// Subspace flags of type c, one adapted basis (as columns) per flag.
std::vector<Mat> flag_transversal(const GLGroup& g, const Composition& c);
/// Canonical key of the flag spanned by leading column blocks of s.
std::vector<std::uint64_t> flag_key(const GLGroup& g, const Composition& c, const Mat& s);

Subgroup parabolic_subgroup(const GLGroup& g, const Composition& c);
Subgroup whole_group(const GLGroup& g);
/// Trivial subgroup; the transversal is the whole group.
Subgroup trivial_subgroup(const GLGroup& g);

using SubgroupFunction = std::function<Rational(const Mat&)>;

/// x ↦ sum_{s in S} f(s^{-1} x s), f extended by zero off h.
ClassFunction induce_class_function(const GLGroup& g, const Subgroup& h, const SubgroupFunction& f);
/// x ↦ (1/|h|) sum_{t in G} f(t^{-1} x t), by enumerating G.
ClassFunction induce_by_averaging(const GLGroup& g, const Subgroup& h, const SubgroupFunction& f);

ClassFunction parabolic_trivial_ind(const GLGroup& g, const Composition& c);

/// R_rho defined by inverting Ind_{P_mu}(1) = sum_rho (|W_mu ∩ class rho| / |W_mu|) R_rho.
ClassFunction dl_character(const GLGroup& g, const Partition& rho);
/// All R_rho at once, keyed by rho.
std::map<Partition, ClassFunction, ReverseLex> dl_characters(const GLGroup& g);

struct CombPropReport {
  int d;
  int q;
  ClassFunction lhs;  // R_(d)
  ClassFunction rhs;  // d * sum_I coeff(I) Ind_{P_I}(1)
  bool ok;
};

CombPropReport comb_prop_check(const GLGroup& g);

/// Conjugacy classes of P_c under P_c-conjugation.
struct ParabolicClasses {
  Composition c;
  std::uint64_t order;
  std::vector<Mat> reps;
  std::vector<std::uint64_t> sizes;
  std::unordered_map<std::uint64_t, int> class_of;  // element code -> class
};

ParabolicClasses parabolic_classes(const GLGroup& g, const Composition& c);

struct IndConjugateRow {
  int p_class;
  std::uint64_t p_class_size;
  std::vector<Rational> flag_sum;    // sum over the flag transversal
  std::vector<Rational> averaged;    // (1/|P|) #{t in G : t x t^{-1} in C}
  std::vector<Rational> other_sum;   // sum over a second transversal
  bool ok;
};

struct IndConjugateReport {
  int d;
  int q;
  Composition c;
  std::vector<IndConjugateRow> rows;
  bool ok;
};

/// Every P_c-class C when p_class < 0, else only that one.
IndConjugateReport ind_conjugate_identity_check(const GLGroup& g, const Composition& c, int p_class = -1);

}  // namespace innerform::finitegl
