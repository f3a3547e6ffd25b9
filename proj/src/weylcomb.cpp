#include "innerform/weylcomb.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "innerform/errors.hpp"

namespace innerform::weyl {

namespace {

void check_degree(int d, int max_d) {
  if (d < 1) throw PreconditionError("S_d needs d >= 1");
  if (d > max_d) {
    throw BudgetExceeded("enumeration of S_" + std::to_string(d), static_cast<std::uint64_t>(factorial(d)),
                         static_cast<std::uint64_t>(factorial(max_d)));
  }
}

}  // namespace

Perm Perm::identity(int d) {
  Perm p;
  p.img_.resize(d);
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Perm Perm::from_one_line(const std::vector<int>& images) {
  Perm p;
  std::vector<bool> seen(images.size(), false);
  for (int x : images) {
    if (x < 1 || x > static_cast<int>(images.size()) || seen[x - 1]) {
      throw PreconditionError("not a permutation in one-line notation");
    }
    seen[x - 1] = true;
    p.img_.push_back(x - 1);
  }
  return p;
}

Perm Perm::simple(int d, int i) {
  if (i < 1 || i >= d) throw PreconditionError("simple reflection index out of range");
  Perm p = identity(d);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Perm Perm::unrank(int d, std::size_t index) {
  std::vector<int> pool(d);
  std::iota(pool.begin(), pool.end(), 0);
  Perm p;
  for (int k = d; k >= 1; --k) {
    const auto f = static_cast<std::size_t>(factorial(k - 1));
    const std::size_t pos = index / f;
    index %= f;
    p.img_.push_back(pool[pos]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pos));
  }
  return p;
}

Perm Perm::operator*(const Perm& o) const {
  if (size() != o.size()) throw PreconditionError("composing permutations of different degree");
  Perm p;
  p.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) p.img_[x] = img_[o.img_[x]];
  return p;
}

Perm Perm::inverse() const {
  Perm p;
  p.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) p.img_[img_[x]] = static_cast<int>(x);
  return p;
}

int Perm::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    for (std::size_t j = i + 1; j < img_.size(); ++j) inv += img_[i] > img_[j];
  }
  return inv;
}

Partition Perm::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = img_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

std::size_t Perm::rank() const {
  std::size_t r = 0;
  const int d = size();
  for (int i = 0; i < d; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < d; ++j) smaller += img_[j] < img_[i];
    r += static_cast<std::size_t>(smaller) * static_cast<std::size_t>(factorial(d - 1 - i));
  }
  return r;
}

std::string Perm::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(img_[i] + 1);
  }
  return s + "]";
}

std::vector<Perm> all_perms(int d, int max_d) {
  check_degree(d, max_d);
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(factorial(d)));
  std::vector<int> line(d);
  std::iota(line.begin(), line.end(), 1);
  do {
    out.push_back(Perm::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

SubsetI::SubsetI(int d, std::uint32_t mask) : d_(d), mask_(mask) {
  if (d < 1 || d > 31) throw PreconditionError("SubsetI: d out of range");
  if (mask >> (d - 1)) throw PreconditionError("SubsetI: element outside {1..d-1}");
}

SubsetI::SubsetI(int d, const std::vector<int>& elements) : SubsetI(d, 0u) {
  for (int i : elements) {
    if (i < 1 || i >= d) throw PreconditionError("SubsetI: element outside {1..d-1}");
    mask_ |= 1u << (i - 1);
  }
}

SubsetI SubsetI::from_composition(const Composition& c) {
  const int d = c.total();
  std::uint32_t mask = (1u << (d - 1)) - 1;
  int partial = 0;
  for (int i = 0; i + 1 < c.length(); ++i) {
    partial += c[i];
    mask &= ~(1u << (partial - 1));
  }
  return SubsetI(d, mask);
}

std::vector<SubsetI> SubsetI::all(int d) {
  std::vector<SubsetI> out;
  for (std::uint32_t m = 0; m < (1u << (d - 1)); ++m) out.emplace_back(d, m);
  return out;
}

int SubsetI::size() const { return std::popcount(mask_); }

std::vector<int> SubsetI::elements() const {
  std::vector<int> out;
  for (int i = 1; i < d_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

Composition SubsetI::blocks() const {
  // Complement of I = {d_1, d_1 + d_2, ...}.
  std::vector<int> parts;
  int start = 0;
  for (int i = 1; i < d_; ++i) {
    if (!contains(i)) {
      parts.push_back(i - start);
      start = i;
    }
  }
  parts.push_back(d_ - start);
  return Composition(std::move(parts));
}

std::string SubsetI::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : elements()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

YoungSubgroup::YoungSubgroup(const SubsetI& subset) : subset_(subset), blocks_(subset.blocks()), order_(1) {
  for (int b = 0; b < blocks_.length(); ++b) {
    order_ *= factorial(blocks_[b]);
    for (int k = 0; k < blocks_[b]; ++k) block_of_.push_back(b);
  }
}

bool YoungSubgroup::contains(const Perm& p) const {
  if (p.size() != subset_.d()) return false;
  for (int x = 0; x < p.size(); ++x) {
    if (block_of_[p(x)] != block_of_[x]) return false;
  }
  return true;
}

std::vector<Perm> YoungSubgroup::elements() const {
  std::vector<Perm> out;
  std::vector<int> line(subset_.d());
  std::iota(line.begin(), line.end(), 1);
  std::vector<int> starts;
  int s = 0;
  for (int b : blocks_.parts()) {
    starts.push_back(s);
    s += b;
  }
  std::function<void(int)> rec = [&](int b) {
    if (b == blocks_.length()) {
      out.push_back(Perm::from_one_line(line));
      return;
    }
    auto first = line.begin() + starts[b];
    auto last = first + blocks_[b];
    std::sort(first, last);
    do {
      rec(b + 1);
    } while (std::next_permutation(first, last));
  };
  rec(0);
  return out;
}

YoungSubgroup young_subgroup(const SubsetI& subset) { return YoungSubgroup(subset); }

long long class_count_in_young(const SubsetI& subset, const Partition& rho) {
  if (rho.weight() != subset.d()) throw PreconditionError("class_count_in_young: rho must be a partition of d");
  long long count = 0;
  for (const auto& v : young_subgroup(subset).elements()) count += v.cycle_type() == rho;
  return count;
}

Rational ep_coefficient(const SubsetI& subset) {
  const int d = subset.d();
  const int k = subset.size();
  const int sign = ((d - 1 - k) % 2 == 0) ? 1 : -1;
  return Rational(sign, d - k);
}

namespace {

// Histogram of cycle types over W_I.
std::map<Partition, long long> cycle_type_histogram(const SubsetI& subset) {
  std::map<Partition, long long> h;
  for (const auto& v : young_subgroup(subset).elements()) ++h[v.cycle_type()];
  return h;
}

}  // namespace

Rational f_g(int d, const Partition& rho) {
  if (rho.weight() != d) throw PreconditionError("f_g: rho must be a partition of d");
  Rational total = 0;
  for (const auto& subset : SubsetI::all(d)) {
    const long long count = class_count_in_young(subset, rho);
    if (count == 0) continue;
    total += ep_coefficient(subset) * static_cast<long>(count) / Rational(static_cast<long>(young_subgroup(subset).order()));
  }
  return total * d;
}

SdClassFunction f_g_all(int d) {
  SdClassFunction out{d, {}};
  for (const auto& rho : partitions_of(d)) out.values[rho] = 0;
  for (const auto& subset : SubsetI::all(d)) {
    const Rational scale = ep_coefficient(subset) / Rational(static_cast<long>(young_subgroup(subset).order()));
    for (const auto& [rho, count] : cycle_type_histogram(subset)) out.values[rho] += scale * static_cast<long>(count);
  }
  for (auto& [rho, value] : out.values) value *= d;
  return out;
}

PermFunction one_adic_ep(int d, int max_d) {
  check_degree(d, max_d);
  PermFunction f{d, std::vector<Rational>(static_cast<std::size_t>(factorial(d)), Rational(0))};
  for (const auto& subset : SubsetI::all(d)) {
    const YoungSubgroup w(subset);
    const Rational value = ep_coefficient(subset) / Rational(static_cast<long>(w.order()));
    for (const auto& v : w.elements()) f.values[v.rank()] += value;
  }
  return f;
}

Rational orbital_sum(const PermFunction& f, const Perm& g) {
  if (g.size() != f.d) throw PreconditionError("orbital_sum: degree mismatch");
  Rational total = 0;
  for (const auto& v : all_perms(f.d, f.d)) total += f(g.conjugate_by(v));
  return total;
}

Rational orbital_sum(const SdClassFunction& f, const Perm& g) {
  if (g.size() != f.d) throw PreconditionError("orbital_sum: degree mismatch");
  return f.values.at(g.cycle_type()) * Rational(static_cast<long>(factorial(f.d)));
}

long long centralizer_order(const Perm& g) { return g.cycle_type().z(); }

namespace {

// The double coset W_M w W_I, by closure under left s_i (i in M) and right s_j (j in I).
std::vector<Perm> double_coset(const SubsetI& m, const SubsetI& i, const Perm& w) {
  const int d = w.size();
  std::vector<Perm> left, right;
  for (int k : m.elements()) left.push_back(Perm::simple(d, k));
  for (int k : i.elements()) right.push_back(Perm::simple(d, k));
  std::vector<Perm> out{w};
  std::map<Perm, bool> seen{{w, true}};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const Perm cur = out[head];
    auto visit = [&](Perm x) {
      if (seen.emplace(x, true).second) out.push_back(std::move(x));
    };
    for (const auto& s : left) visit(s * cur);
    for (const auto& s : right) visit(cur * s);
  }
  return out;
}

}  // namespace

std::vector<Perm> min_double_coset_reps(const SubsetI& m, const SubsetI& i, int max_d) {
  if (m.d() != i.d()) throw PreconditionError("min_double_coset_reps: subsets of different S_d");
  const int d = m.d();
  const auto perms = all_perms(d, max_d);
  std::vector<bool> assigned(perms.size(), false);
  std::vector<Perm> reps;
  for (const auto& w : perms) {
    if (assigned[w.rank()]) continue;
    const auto coset = double_coset(m, i, w);
    const Perm* best = nullptr;
    int best_len = 1 << 30;
    int ties = 0;
    for (const auto& x : coset) {
      assigned[x.rank()] = true;
      const int len = x.length();
      if (len < best_len) {
        best_len = len;
        best = &x;
        ties = 1;
      } else if (len == best_len) {
        ++ties;
      }
    }
    if (ties != 1) throw InvariantViolation("double coset has no unique minimal element");
    reps.push_back(*best);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

SubsetI twisted_intersection(const SubsetI& m, const SubsetI& i, const Perm& w) {
  std::vector<int> j;
  for (int a : i.elements()) {
    int lo = w(a - 1), hi = w(a);
    if (lo > hi) std::swap(lo, hi);
    // w s_a w^{-1} is the transposition (lo+1, hi+1) in 1-based terms.
    if (hi == lo + 1 && m.contains(lo + 1)) j.push_back(lo + 1);
  }
  return SubsetI(m.d(), j);
}

RestrictionSupport restriction_support(const SubsetI& m, const SubsetI& i, const Perm& w) {
  if (m.d() != i.d() || w.size() != m.d()) throw PreconditionError("restriction_support: degree mismatch");
  const int len = w.length();
  for (const auto& x : double_coset(m, i, w)) {
    if (x.length() < len) throw PreconditionError("restriction_support: w is not minimal in W_M w W_I");
  }
  const SubsetI j = twisted_intersection(m, i, w);
  const YoungSubgroup wi(i), wj(j);
  bool matches = true;
  const Perm winv = w.inverse();
  for (const auto& g : young_subgroup(m).elements()) {
    if (wi.contains(winv * g * w) != wj.contains(g)) {
      matches = false;
      break;
    }
  }
  return {j, matches};
}

std::vector<Perm> minimal_left_coset_reps(const SubsetI& m, const SubsetI& j) {
  std::vector<Perm> out;
  for (const auto& x : young_subgroup(m).elements()) {
    bool minimal = true;
    for (int a : j.elements()) {
      if (x(a - 1) > x(a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

VanishingReport proper_levi_vanishing(int d, const SubsetI& m, int max_d) {
  check_degree(d, max_d);
  if (m.d() != d) throw PreconditionError("proper_levi_vanishing: M must be a subset for S_d");
  if (m.is_full()) throw PreconditionError("proper_levi_vanishing: M must be a proper subset");
  // Inner sums indexed by J; the summand does not involve w_M.
  std::map<SubsetI, Rational> sums;
  for (const auto& i : SubsetI::all(d)) {
    const Rational c = ep_coefficient(i);
    for (const auto& w : min_double_coset_reps(m, i, max_d)) sums[twisted_intersection(m, i, w)] += c;
  }
  VanishingReport report{d, m, {}, true};
  for (const auto& j : SubsetI::all(d)) {
    if (!j.subset_of(m)) continue;
    const Rational value = sums.count(j) ? sums[j] : Rational(0);
    for (const auto& wm : minimal_left_coset_reps(m, j)) {
      report.entries.push_back({j, wm, value});
      if (value != 0) report.all_zero = false;
    }
  }
  return report;
}

}  // namespace innerform::weyl
