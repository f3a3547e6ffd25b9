#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace innerform {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Throws PreconditionError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  /// Sorts and drops zeros.
  static Partition from_unsorted(std::vector<int> parts);
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[i]; }

  Partition conjugate() const;
  /// Multiplicity of part size k.
  int multiplicity(int k) const;
  /// z_lambda = prod_k k^{m_k} m_k!, the centralizer order in S_n.
  long long z() const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Ordered sequence of positive integers.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int total() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[i]; }

  Partition sorted() const { return Partition::from_unsorted(parts_); }
  std::string to_string() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);
/// All 2^{n-1} compositions of n.
std::vector<Composition> compositions_of(int n);

/// Orders partitions with the lexicographically larger one first.
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

long long factorial(int n);

}  // namespace innerform
