#pragma once

// Rational generating functions with poles at 1/j: series expansion, pole-constrained
// fitting, partial fractions, exponential forms and asymptotic constants.

#include "klbraid/poly.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace klb {

/// num/den in lowest terms, normalized so that den(0) = 1 whenever den(0) != 0
/// (otherwise den is monic).
class RatFn {
 public:
  RatFn() : num_({}, 'u'), den_(Poly::constant(1, 'u')) {}
  RatFn(Poly num, Poly den);
  explicit RatFn(Poly num) : RatFn(std::move(num), Poly::constant(1, 'u')) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend bool operator==(const RatFn& a, const RatFn& b) = default;

  std::string to_string() const;

 private:
  Poly num_, den_;
};

/// Exact values a_start, a_{start+1}, ...
struct SeqTable {
  int start = 0;
  std::vector<BigRat> values;

  int end() const { return start + static_cast<int>(values.size()); }  // one past the last index
  /// Value at index n; indices before `start` read as zero.
  BigRat at(int n) const;
};

class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maclaurin coefficients of r through u^n. Throws std::domain_error on a pole at 0.
SeqTable series(const RatFn& r, int n);

struct FitOptions {
  int mult_cap = 8;
  int numerator_slack = 10;  // numerator degree budget = denominator degree + slack
  int holdout = 5;           // terms that must be reproduced beyond the numerator budget
};

/// Smallest-denominator rational function prod_{j in poles} (1-ju)^{m_j} that reproduces
/// every supplied term (indices before seq.start count as zero). nullopt when no candidate
/// within the caps fits; InsufficientDataError when the data run out before one is found.
std::optional<RatFn> fit_rational(const SeqTable& seq, const std::set<int>& poles, const FitOptions& opts = {});

struct PartialFractionTerm {
  int pole;  // j, the pole sits at u = 1/j
  int mult;  // m
  BigRat coeff;
  friend bool operator==(const PartialFractionTerm&, const PartialFractionTerm&) = default;
};

struct PartialFractions {
  Poly poly_part{{}, 'u'};
  std::vector<PartialFractionTerm> terms;  // sorted by (pole, mult)

  BigRat coefficient(int pole, int mult) const;
  RatFn recombine() const;
};

/// Denominator factored as prod (1 - j u)^{m_j}; empty for a constant denominator.
/// Throws std::domain_error when the denominator has a factor outside that family.
std::vector<std::pair<int, int>> factor_linear_poles(const Poly& den);

PartialFractions partial_fractions(const RatFn& r);

/// Coefficient of 1/(1-du): the limit of a_n/d^n. Throws std::domain_error when the pole at
/// 1/d is not simple or a pole lies beyond 1/d (the limit does not exist).
BigRat r_extract(const RatFn& r, int d);

/// Polynomials p_0..p_d with sum_n a_n u^n/n! = sum_j p_j(u) e^{ju}.
std::vector<Poly> egf_form(const RatFn& r);

/// [u^n] sum_j p_j(u) e^{ju}, times n!.
BigRat egf_coefficient(const std::vector<Poly>& forms, int n);

}  // namespace klb
