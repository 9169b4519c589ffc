#pragma once

// Exact combinatorial primitives: integer partitions, Stirling numbers,
// set-partition counts and symmetric-group character values.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace klb {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Parts are sorted into decreasing order; zero or negative parts throw.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// The partition (1^n).
  static Partition ones(int n);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }  // n = sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Multiplicity m_r of the part size r.
  int multiplicity(int r) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Graded reverse-lexicographic: smaller n first, then lex-larger parts first.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in graded reverse-lexicographic order,
/// e.g. 3 -> (3), (2,1), (1,1,1).
std::vector<Partition> partitions(int n);

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Number of set partitions of [n] into k nonempty blocks.
BigInt stirling2(int n, int k);
/// Number of permutations of [n] with exactly k cycles.
BigInt stirling1_unsigned(int n, int k);
BigInt bell(int n);

/// m!! for odd m >= -1, with (-1)!! = 1. Throws std::invalid_argument for even m.
BigInt double_factorial_odd(int m);

/// Number of set partitions of [n] whose multiset of block sizes is lambda.
BigInt set_partition_count_by_type(const Partition& lambda);

/// z_mu = prod_r r^{m_r} m_r!, the centralizer order of a permutation of type mu.
BigInt centralizer_order(const Partition& mu);
/// n!/z_mu.
BigInt class_size(const Partition& mu);

/// Irreducible character value chi^lambda(mu) by the Murnaghan-Nakayama rule.
/// Throws std::invalid_argument when |lambda| != |mu|.
BigInt mn_character(const Partition& lambda, const Partition& mu);

/// Cycle type of a permutation given in one-line notation on {0,...,n-1}.
Partition cycle_type(std::span<const int> perm);

}  // namespace klb
