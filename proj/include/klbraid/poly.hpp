#pragma once

// Exact univariate polynomials over Z or Q.

#include "klbraid/combinat.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klb {

template <class T>
class BasicPoly {
 public:
  BasicPoly() = default;
  explicit BasicPoly(std::vector<T> coeffs, char var = 't') : c_(std::move(coeffs)), var_(var) { trim(); }
  BasicPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static BasicPoly constant(T v, char var = 't') { return BasicPoly(std::vector<T>{std::move(v)}, var); }
  static BasicPoly monomial(T v, std::size_t deg, char var = 't') {
    std::vector<T> c(deg + 1, T(0));
    c[deg] = std::move(v);
    return BasicPoly(std::move(c), var);
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  char var() const { return var_; }
  void set_var(char v) { var_ = v; }
  const std::vector<T>& coeffs() const { return c_; }

  /// Coefficient of var^k (zero beyond the degree).
  T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  T lead() const { return c_.empty() ? T(0) : c_.back(); }

  void set(std::size_t k, T v) {
    if (k >= c_.size()) c_.resize(k + 1, T(0));
    c_[k] = std::move(v);
    trim();
  }
  void add_to(std::size_t k, const T& v) {
    if (k >= c_.size()) c_.resize(k + 1, T(0));
    c_[k] += v;
    trim();
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  BasicPoly& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }
  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator-(BasicPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend BasicPoly operator*(BasicPoly a, const T& s) { return a *= s; }
  friend BasicPoly operator*(const T& s, BasicPoly a) { return a *= s; }
  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.is_zero() || b.is_zero()) return BasicPoly({}, a.var_);
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return BasicPoly(std::move(r), a.var_);
  }
  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) { return a.c_ == b.c_; }

  /// Product truncated to degrees < n.
  BasicPoly mul_trunc(const BasicPoly& o, std::size_t n) const {
    std::vector<T> r(std::min(n, c_.size() + o.c_.size()), T(0));
    for (std::size_t i = 0; i < c_.size() && i < r.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size() && i + j < r.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return BasicPoly(std::move(r), var_);
  }

  T eval(const T& x) const {
    T r(0);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }

  /// var -> var^k.
  BasicPoly inflate(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<T> r((c_.size() - 1) * k + 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return BasicPoly(std::move(r), var_);
  }

  /// var^d * p(1/var) for d >= degree.
  BasicPoly reverse(std::size_t d) const {
    if (is_zero()) return *this;
    if (static_cast<int>(d) < degree()) throw std::invalid_argument("reverse: degree exceeds target");
    std::vector<T> r(d + 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[d - i] = c_[i];
    return BasicPoly(std::move(r), var_);
  }

  /// Multiply by var^k.
  BasicPoly shift(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<T> r(k, T(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return BasicPoly(std::move(r), var_);
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      std::string coef = c_[i].get_str();
      const bool neg = coef[0] == '-';
      if (neg) coef.erase(0, 1);
      if (s.empty()) s = neg ? "-" : "";
      else s += neg ? " - " : " + ";
      if (i == 0) {
        s += coef;
      } else {
        if (coef != "1") s += coef + "*";
        s += var_;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
  char var_ = 't';
};

using ZPoly = BasicPoly<BigInt>;
using Poly = BasicPoly<BigRat>;

/// Integer polynomial viewed over Q.
Poly to_rational(const ZPoly& p);
/// Throws std::domain_error if some coefficient is not an integer.
ZPoly to_integer(const Poly& p);

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(Poly a, Poly b);

/// (1 - j*var)^m.
Poly linear_power(int j, int m, char var = 'u');

}  // namespace klb
