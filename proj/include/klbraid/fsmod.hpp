#pragma once

// Surjections of finite sets and the contravariant action of surjections on
// H_1 of configuration spaces. Sets are [n] = {1, ..., n}.

#include "klbraid/polyseries.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace klb {

/// Surjection [n] -> [m]; values[x-1] = f(x).
class Surjection {
 public:
  /// Throws std::invalid_argument unless every value lies in [m] and every element of [m] is hit.
  Surjection(std::vector<int> values, int m);
  static Surjection identity(int n);

  int source() const { return static_cast<int>(values_.size()); }
  int target() const { return m_; }
  int operator()(int x) const { return values_[static_cast<std::size_t>(x - 1)]; }
  const std::vector<int>& values() const { return values_; }
  std::vector<int> fiber(int k) const;
  std::string to_string() const;

  friend bool operator==(const Surjection&, const Surjection&) = default;

 private:
  std::vector<int> values_;
  int m_ = 0;
};

/// f o g. Throws std::invalid_argument when g's target is not f's source.
Surjection compose(const Surjection& f, const Surjection& g);
/// All surjections [n] -> [m] in lexicographic order of their value lists.
std::vector<Surjection> enumerate_surjections(int n, int m);

/// |Hom_FS([n],[m])| = m! S(n,m), checked against the bound m^n.
BigInt hom_fs_count(int n, int m);

/// Vector of H_1(Conf_n) in the basis e_ij, i < j.
struct H1Vector {
  int n = 0;
  std::map<std::pair<int, int>, BigRat> coords;

  static H1Vector basis(int n, int i, int j);
  void add(int i, int j, const BigRat& c);
  BigRat at(int i, int j) const;
  std::string to_string() const;
  friend bool operator==(const H1Vector&, const H1Vector&) = default;
};

H1Vector operator+(const H1Vector& a, const H1Vector& b);

/// f^*(e_kl) = sum over i in f^-1(k), j in f^-1(l) of e_ij, extended linearly.
H1Vector h1_pullback(const Surjection& f, const H1Vector& v);

struct GenerationReport {
  int n = 0;
  int rank = 0;
  int expected = 0;  // C(n,2)
  bool generated = false;
  std::vector<Surjection> witnesses;  // surjections [n]->[2] that raised the rank
  std::vector<H1Vector> images;       // their pullbacks of e_12
};

/// Whether pullbacks of e_12 along all surjections [n] -> [2] span H_1(Conf_n).
GenerationReport h1_generation_check(int n);

struct GrowthReport {
  std::vector<BigRat> ratios;  // dims(n)/d^n over the window
  std::string verdict;         // "monotone decreasing over window", "stabilizing toward c" or "inconclusive"
  std::optional<BigRat> limit_estimate;
};

/// Finite-window behaviour of dims(n)/d^n. Throws std::invalid_argument with fewer than 6 terms.
GrowthReport growth_diagnostic(const SeqTable& dims, int d);

}  // namespace klb
