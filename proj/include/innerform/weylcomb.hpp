#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "innerform/algebra/partition.hpp"
#include "innerform/algebra/qscalar.hpp"

namespace innerform::weyl {

/// Default largest d for which S_d is enumerated.
inline constexpr int kDefaultMaxDegree = 8;

/// Permutation of {1..d}, stored 0-based; composition is right to left.
class Perm {
 public:
  Perm() = default;
  static Perm identity(int d);
  /// One-line notation with values 1..d.
  static Perm from_one_line(const std::vector<int>& images);
  /// Simple transposition s_i = (i, i+1), 1 <= i < d.
  static Perm simple(int d, int i);
  static Perm unrank(int d, std::size_t index);

  int size() const { return static_cast<int>(img_.size()); }
  /// Image of 0-based point x.
  int operator()(int x) const { return img_[x]; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  Perm conjugate_by(const Perm& v) const { return v.inverse() * *this * v; }

  /// Coxeter length = number of inversions.
  int length() const;
  Partition cycle_type() const;
  /// Lexicographic rank in [0, d!).
  std::size_t rank() const;

  std::string to_string() const;

  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

/// All of S_d in lexicographic order, so all_perms(d)[i].rank() == i.
/// Throws BudgetExceeded above max_d.
std::vector<Perm> all_perms(int d, int max_d = kDefaultMaxDegree);

/// Subset of the simple reflections {1..d-1} of S_d.
class SubsetI {
 public:
  SubsetI(int d, std::uint32_t mask);
  SubsetI(int d, const std::vector<int>& elements);
  static SubsetI full(int d) { return SubsetI(d, (1u << (d - 1)) - 1); }
  static SubsetI empty(int d) { return SubsetI(d, 0u); }
  /// Subset whose complement is the set of partial sums of c (without the total).
  static SubsetI from_composition(const Composition& c);
  static std::vector<SubsetI> all(int d);

  int d() const { return d_; }
  std::uint32_t mask() const { return mask_; }
  bool contains(int i) const { return i >= 1 && i < d_ && (mask_ >> (i - 1)) & 1u; }
  int size() const;
  bool is_full() const { return mask_ == full(d_).mask_; }
  std::vector<int> elements() const;
  /// Block composition (d_1, ..., d_s) of the standard parabolic.
  Composition blocks() const;
  bool subset_of(const SubsetI& o) const { return (mask_ & ~o.mask_) == 0; }

  std::string to_string() const;

  friend auto operator<=>(const SubsetI&, const SubsetI&) = default;
  friend bool operator==(const SubsetI&, const SubsetI&) = default;

 private:
  int d_;
  std::uint32_t mask_;
};

/// W_I = prod S_{d_i} acting on consecutive blocks.
class YoungSubgroup {
 public:
  explicit YoungSubgroup(const SubsetI& subset);

  const SubsetI& subset() const { return subset_; }
  const Composition& blocks() const { return blocks_; }
  long long order() const { return order_; }
  bool contains(const Perm& p) const;
  std::vector<Perm> elements() const;

 private:
  SubsetI subset_;
  Composition blocks_;
  std::vector<int> block_of_;
  long long order_;
};

YoungSubgroup young_subgroup(const SubsetI& subset);

/// |{v in W_I : v has cycle type rho}|.
long long class_count_in_young(const SubsetI& subset, const Partition& rho);

/// (-1)^{d-1-|I|} / (d - |I|).
Rational ep_coefficient(const SubsetI& subset);

/// d * sum_I ep_coefficient(I) * class_count_in_young(I, rho) / |W_I|.
Rational f_g(int d, const Partition& rho);

/// Rational-valued function on cycle types of S_d.
struct SdClassFunction {
  int d;
  std::map<Partition, Rational, ReverseLex> values;
};

SdClassFunction f_g_all(int d);

/// Arbitrary rational function on S_d, indexed by Perm::rank().
struct PermFunction {
  int d;
  std::vector<Rational> values;
  const Rational& operator()(const Perm& p) const { return values[p.rank()]; }
};

/// sum_I ep_coefficient(I) / |W_I| * 1_{W_I}.
PermFunction one_adic_ep(int d, int max_d = kDefaultMaxDegree);

/// O_g(f) = sum_{v in S_d} f(v^{-1} g v).
Rational orbital_sum(const PermFunction& f, const Perm& g);
Rational orbital_sum(const SdClassFunction& f, const Perm& g);

/// |C_{S_d}(g)| = z_{cycle type}.
long long centralizer_order(const Perm& g);

/// The length-minimal element of every double coset W_M w W_I.
std::vector<Perm> min_double_coset_reps(const SubsetI& m, const SubsetI& i, int max_d = kDefaultMaxDegree);

/// J = {j in M : s_j = w s_i w^{-1} for some i in I}.
SubsetI twisted_intersection(const SubsetI& m, const SubsetI& i, const Perm& w);

struct RestrictionSupport {
  SubsetI j;
  /// Whether {g in W_M : w^{-1} g w in W_I} == W_J, checked by enumeration.
  bool support_matches;
};

/// Throws PreconditionError if w is not minimal in W_M w W_I.
RestrictionSupport restriction_support(const SubsetI& m, const SubsetI& i, const Perm& w);

/// Elements of W_M that are minimal in their left coset w_M W_J.
std::vector<Perm> minimal_left_coset_reps(const SubsetI& m, const SubsetI& j);

struct VanishingEntry {
  SubsetI j;
  Perm w_m;
  Rational value;
};

struct VanishingReport {
  int d;
  SubsetI m;
  std::vector<VanishingEntry> entries;
  bool all_zero = true;
};

/// For every J in M and w_M in W_M ∩ D_{∅,J}, the sum of ep_coefficient(I)
/// over pairs (I, w in D_{M,I}) with J = M ∩ w(I). M must be proper.
VanishingReport proper_levi_vanishing(int d, const SubsetI& m, int max_d = kDefaultMaxDegree);

}  // namespace innerform::weyl
