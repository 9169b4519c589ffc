#pragma once

// S_n-equivariant KL polynomials of braid matroids. Class functions are converted
// to symmetric functions in the power-sum basis, where plethysm is a substitution.
//
// Two independent routes are provided: a plethystic recursion (the default) and,
// for small n, explicit induction from set-partition stabilizers using traces on an
// Orlik-Solomon basis.

#include "klbraid/combinat.hpp"
#include "klbraid/poly.hpp"

#include <map>
#include <vector>

namespace klb {

/// Class function on S_n, stored on every partition of n.
class ClassFn {
 public:
  ClassFn() = default;
  explicit ClassFn(int n);  // zero function

  static ClassFn trivial(int n);
  static ClassFn sign(int n);
  static ClassFn regular(int n);
  static ClassFn irreducible(const Partition& lambda);

  int n() const { return n_; }
  const BigRat& at(const Partition& mu) const;
  void set(const Partition& mu, BigRat v);
  const std::map<Partition, BigRat>& values() const { return values_; }
  /// Value at the identity class.
  BigRat dimension() const { return at(Partition::ones(n_)); }
  bool is_zero() const;

  ClassFn& operator+=(const ClassFn& o);
  ClassFn& operator-=(const ClassFn& o);
  ClassFn& operator*=(const BigRat& s);
  friend ClassFn operator+(ClassFn a, const ClassFn& b) { return a += b; }
  friend ClassFn operator-(ClassFn a, const ClassFn& b) { return a -= b; }
  friend ClassFn operator*(ClassFn a, const BigRat& s) { return a *= s; }
  friend bool operator==(const ClassFn&, const ClassFn&) = default;

 private:
  int n_ = 0;
  std::map<Partition, BigRat> values_;
};

/// (1/n!) sum_g f(g) conj(h(g)); characters here are real.
BigRat inner_product(const ClassFn& f, const ClassFn& h);

/// Polynomial in t whose coefficients are class functions of one S_n.
struct GradedClassFn {
  int n = 0;
  std::vector<ClassFn> coeffs;  // coeffs[i] multiplies t^i

  /// Coefficient of t^i (zero past the end).
  ClassFn coefficient(int i) const;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  /// The polynomial obtained by evaluating every coefficient at mu.
  Poly at_class(const Partition& mu) const;
  /// Evaluation at the identity class.
  Poly dimension_poly() const { return at_class(Partition::ones(n)); }
  /// Evaluation at the numerical value t = x.
  ClassFn eval(const BigRat& x) const;
  void trim();
  friend bool operator==(const GradedClassFn&, const GradedClassFn&) = default;
};

/// Symmetric function sum_mu c_mu(t) p_mu; the empty partition is the constant term.
class SymFn {
 public:
  SymFn() = default;
  static SymFn constant(const Poly& c);
  static SymFn power_sum(const Partition& mu, const Poly& c = Poly::constant(1));
  /// Complete homogeneous h_n and elementary e_n.
  static SymFn h(int n);
  static SymFn e(int n);

  const std::map<Partition, Poly>& terms() const { return terms_; }
  Poly coeff(const Partition& mu) const;
  void add_term(const Partition& mu, const Poly& c);
  bool is_zero() const { return terms_.empty(); }
  /// Degree-n part.
  SymFn homogeneous(int n) const;
  /// Terms of degree <= cap.
  SymFn truncated(int cap) const;
  bool has_constant_term() const;

  SymFn& operator+=(const SymFn& o);
  SymFn& operator-=(const SymFn& o);
  SymFn& operator*=(const BigRat& s);
  friend SymFn operator+(SymFn a, const SymFn& b) { return a += b; }
  friend SymFn operator-(SymFn a, const SymFn& b) { return a -= b; }
  friend SymFn operator*(SymFn a, const BigRat& s) { return a *= s; }
  friend bool operator==(const SymFn&, const SymFn&) = default;

  /// Product keeping only terms of degree <= cap.
  static SymFn multiply(const SymFn& a, const SymFn& b, int cap);
  /// p_k[g]: p_j -> p_{jk} and t -> t^k; rational scalars are fixed.
  static SymFn power_plethysm(int k, const SymFn& g, int cap);

  std::string to_string() const;

 private:
  std::map<Partition, Poly> terms_;
};

SymFn ch(const ClassFn& f);
SymFn ch(const GradedClassFn& f);
/// Inverse of ch on degree-n input with constant coefficients. Throws std::invalid_argument
/// if s has terms of another degree or a non-constant coefficient.
ClassFn ch_inv(const SymFn& s, int n);
GradedClassFn ch_inv_graded(const SymFn& s, int n);

/// f[g], truncated to degree <= cap. Throws std::invalid_argument if g has a constant term.
SymFn plethysm(const SymFn& f, const SymFn& g, int cap);

constexpr int kOsCharacterMaxN = 8;
constexpr int kEqklMaxN = 9;
constexpr int kEqklBruteForceMaxN = 6;

/// Character of S_n on H^i(Conf_n), computed from the distinct-maxima basis of the Arnold
/// ring by straightening. Throws std::invalid_argument for n > 8.
ClassFn os_character(int n, int i);

/// sum_i (-1)^i [H^i(Conf_n)] t^{n-1-i} from os_character (n <= 8).
GradedClassFn eq_char_poly(int n);
/// ch(eq_char_poly(n)) without an OS basis: summing the characteristic polynomials of all
/// contractions gives t^{n-1} h_n, i.e. sum_k C_k[h_1 + h_2 + ...] = t^{n-1} h_n in degree n.
SymFn eq_char_poly_sym(int n);

/// Equivariant KL polynomial of M_n by the plethystic recursion (n <= 9).
GradedClassFn eqkl_braid(int n);
/// Same, by inducing from explicit stabilizer subgroups of S_n (n <= 6).
GradedClassFn eqkl_braid_bruteforce(int n);

/// Multiplicities <f, chi^lambda> for every lambda with nonzero multiplicity.
std::map<Partition, BigRat> specht_decompose(const ClassFn& f);

/// True iff every Specht module in the t^i coefficient of eqkl_braid(n) has at most 2i rows.
bool row_bound_check(int i, int n);

}  // namespace klb
