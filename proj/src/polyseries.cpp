#include "klbraid/polyseries.hpp"

#include <algorithm>
#include <map>

namespace klb {

Poly to_rational(const ZPoly& p) {
  std::vector<BigRat> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return Poly(std::move(c), p.var());
}

ZPoly to_integer(const Poly& p) {
  std::vector<BigInt> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) {
    if (x.get_den() != 1) throw std::domain_error("to_integer: non-integral coefficient " + x.get_str());
    c.push_back(x.get_num());
  }
  return ZPoly(std::move(c), p.var());
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  Poly q({}, a.var());
  Poly r = a;
  const int db = b.degree();
  const BigRat lead = b.lead();
  while (!r.is_zero() && r.degree() >= db) {
    const auto shift = static_cast<std::size_t>(r.degree() - db);
    BigRat f = r.lead() / lead;
    q.add_to(shift, f);
    r -= (b * f).shift(shift);
  }
  return {q, r};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= BigRat(1) / a.lead();
  return a;
}

Poly linear_power(int j, int m, char var) {
  Poly base(std::vector<BigRat>{1, -j}, var);
  Poly r = Poly::constant(1, var);
  for (int i = 0; i < m; ++i) r *= base;
  return r;
}

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFn: zero denominator");
  num_.set_var('u');
  den_.set_var('u');
  if (num_.is_zero()) {
    den_ = Poly::constant(1, 'u');
    return;
  }
  Poly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const BigRat scale = den_[0] != 0 ? den_[0] : den_.lead();
  num_ *= BigRat(1) / scale;
  den_ *= BigRat(1) / scale;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFn operator-(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFn operator*(const RatFn& a, const RatFn& b) { return RatFn(a.num_ * b.num_, a.den_ * b.den_); }

std::string RatFn::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

BigRat SeqTable::at(int n) const {
  if (n < start) return 0;
  const auto i = static_cast<std::size_t>(n - start);
  if (i >= values.size()) throw std::out_of_range("SeqTable::at: index past the end");
  return values[i];
}

SeqTable series(const RatFn& r, int n) {
  const Poly& den = r.den();
  if (den[0] == 0) throw std::domain_error("series: pole at u = 0");
  SeqTable out;
  out.values.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    BigRat v = r.num()[static_cast<std::size_t>(k)];
    for (int i = 1; i <= k && i <= den.degree(); ++i)
      v -= den[static_cast<std::size_t>(i)] * out.values[static_cast<std::size_t>(k - i)];
    out.values[static_cast<std::size_t>(k)] = v / den[0];
  }
  return out;
}

namespace {

// Multiplicity vectors with the given total, each entry <= cap, in lexicographic order.
void compositions(int slots, int total, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == slots) {
    if (total == 0) out.push_back(cur);
    return;
  }
  const int remaining_slots = slots - static_cast<int>(cur.size()) - 1;
  for (int m = 0; m <= std::min(cap, total); ++m) {
    if (total - m > remaining_slots * cap) continue;
    cur.push_back(m);
    compositions(slots, total - m, cap, cur, out);
    cur.pop_back();
  }
}

// p((1 - v)/j) as a polynomial in v.
Poly substitute_pole(const Poly& p, int j) {
  const Poly x(std::vector<BigRat>{BigRat(1, j), BigRat(-1, j)}, 'v');
  Poly r({}, 'v');
  for (std::size_t i = p.coeffs().size(); i-- > 0;) r = r * x + Poly::constant(p[i], 'v');
  return r;
}

}  // namespace

std::optional<RatFn> fit_rational(const SeqTable& seq, const std::set<int>& poles, const FitOptions& opts) {
  for (int j : poles) {
    if (j <= 0) throw std::invalid_argument("fit_rational: poles must be positive integers");
  }
  const int len = seq.end();
  std::vector<BigRat> a(static_cast<std::size_t>(std::max(len, 0)));
  for (int n = 0; n < len; ++n) a[static_cast<std::size_t>(n)] = seq.at(n);
  const Poly data(a, 'u');
  const std::vector<int> pole_list(poles.begin(), poles.end());
  const int slots = static_cast<int>(pole_list.size());

  for (int total = 0; total <= slots * opts.mult_cap; ++total) {
    const int budget = total + opts.numerator_slack;
    if (len < budget + 1 + opts.holdout)
      throw InsufficientDataError("fit_rational: " + std::to_string(len) + " terms cannot validate a denominator of degree " +
                                  std::to_string(total));
    std::vector<std::vector<int>> candidates;
    std::vector<int> cur;
    compositions(slots, total, opts.mult_cap, cur, candidates);
    for (const auto& mults : candidates) {
      Poly den = Poly::constant(1, 'u');
      for (int s = 0; s < slots; ++s) den *= linear_power(pole_list[static_cast<std::size_t>(s)], mults[static_cast<std::size_t>(s)]);
      const Poly prod = den.mul_trunc(data, static_cast<std::size_t>(len));
      bool ok = true;
      for (int k = budget + 1; k < len && ok; ++k) ok = prod[static_cast<std::size_t>(k)] == 0;
      if (!ok) continue;
      std::vector<BigRat> num(prod.coeffs().begin(),
                              prod.coeffs().begin() + std::min<std::ptrdiff_t>(budget + 1, static_cast<std::ptrdiff_t>(prod.coeffs().size())));
      return RatFn(Poly(std::move(num), 'u'), den);
    }
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> factor_linear_poles(const Poly& den_in) {
  if (den_in.is_zero() || den_in[0] == 0) throw std::domain_error("factor_linear_poles: denominator vanishes at 0");
  Poly den = den_in * (BigRat(1) / den_in[0]);
  std::vector<std::pair<int, int>> out;
  if (den.degree() <= 0) return out;
  const BigRat lead = den.lead();
  if (lead.get_den() != 1) throw std::domain_error("factor_linear_poles: factor outside the (1 - ju) family");
  const BigInt bound = abs(lead.get_num());
  if (!bound.fits_slong_p()) throw std::domain_error("factor_linear_poles: leading coefficient too large");
  const long maxj = bound.get_si();
  for (long j = 1; j <= maxj && den.degree() > 0; ++j) {
    if (bound % j != 0) continue;
    int m = 0;
    const Poly factor = linear_power(static_cast<int>(j), 1);
    while (den.degree() > 0 && den.eval(BigRat(1, j)) == 0) {
      den = divmod(den, factor).first;
      ++m;
    }
    if (m) out.emplace_back(static_cast<int>(j), m);
  }
  if (den.degree() > 0) throw std::domain_error("factor_linear_poles: irreducible factor outside the (1 - ju) family");
  return out;
}

BigRat PartialFractions::coefficient(int pole, int mult) const {
  for (const auto& t : terms) {
    if (t.pole == pole && t.mult == mult) return t.coeff;
  }
  return 0;
}

RatFn PartialFractions::recombine() const {
  RatFn r(poly_part);
  for (const auto& t : terms) r = r + RatFn(Poly::constant(t.coeff, 'u'), linear_power(t.pole, t.mult));
  return r;
}

PartialFractions partial_fractions(const RatFn& r) {
  PartialFractions out;
  const auto factors = factor_linear_poles(r.den());
  auto [q, rem] = divmod(r.num(), r.den());
  out.poly_part = q;
  for (const auto& [j, m] : factors) {
    Poly rest = Poly::constant(1, 'u');
    for (const auto& [j2, m2] : factors) {
      if (j2 != j) rest *= linear_power(j2, m2);
    }
    // rem/den = N(v) / (v^m R(v)) with v = 1 - j u.
    const Poly n_v = substitute_pole(rem, j);
    const Poly r_v = substitute_pole(rest, j);
    const SeqTable local = series(RatFn(n_v, r_v), m - 1);
    for (int k = 1; k <= m; ++k) {
      BigRat c = local.at(m - k);
      if (c != 0) out.terms.push_back({j, k, c});
    }
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [](const auto& a, const auto& b) { return std::pair(a.pole, a.mult) < std::pair(b.pole, b.mult); });
  return out;
}

BigRat r_extract(const RatFn& r, int d) {
  if (d <= 0) throw std::invalid_argument("r_extract: d must be positive");
  for (const auto& [j, m] : factor_linear_poles(r.den())) {
    if (j > d) throw std::domain_error("r_extract: pole at 1/" + std::to_string(j) + " dominates; limit does not exist");
    if (j == d && m >= 2) throw std::domain_error("r_extract: pole of order " + std::to_string(m) + " at 1/" + std::to_string(d) + "; limit does not exist");
  }
  return partial_fractions(r).coefficient(d, 1);
}

std::vector<Poly> egf_form(const RatFn& r) {
  const PartialFractions pf = partial_fractions(r);
  int d = 0;
  for (const auto& t : pf.terms) d = std::max(d, t.pole);
  std::vector<Poly> out(static_cast<std::size_t>(d) + 1, Poly({}, 'u'));

  // Polynomial part contributes finitely many terms: a_n u^n / n! with e^{0u} = 1.
  for (int n = 0; n <= pf.poly_part.degree(); ++n)
    out[0].add_to(static_cast<std::size_t>(n), pf.poly_part[static_cast<std::size_t>(n)] / BigRat(factorial(n)));

  for (int j = 1; j <= d; ++j) {
    // q_j(n) = sum_k c_{j,k} binom(n+k-1, k-1), as a polynomial in n.
    Poly q({}, 'n');
    for (const auto& t : pf.terms) {
      if (t.pole != j) continue;
      Poly b = Poly::constant(BigRat(1) / BigRat(factorial(t.mult - 1)), 'n');
      for (int s = 1; s < t.mult; ++s) b *= Poly(std::vector<BigRat>{BigRat(s), BigRat(1)}, 'n');
      q += b * t.coeff;
    }
    // Monomials n^m -> falling factorials via S(m,i); n^(i falling) j^n <-> (ju)^i e^{ju}.
    Poly p({}, 'u');
    BigRat jpow = 1;
    for (int i = 0; i <= q.degree(); ++i) {
      BigRat b = 0;
      for (int m = i; m <= q.degree(); ++m) b += q[static_cast<std::size_t>(m)] * BigRat(stirling2(m, i));
      p.add_to(static_cast<std::size_t>(i), b * jpow);
      jpow *= j;
    }
    out[static_cast<std::size_t>(j)] = p;
  }
  return out;
}

BigRat egf_coefficient(const std::vector<Poly>& forms, int n) {
  BigRat total = 0;
  for (std::size_t j = 0; j < forms.size(); ++j) {
    const Poly& p = forms[j];
    for (int i = 0; i <= p.degree() && i <= n; ++i) {
      BigInt jp;
      mpz_ui_pow_ui(jp.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n - i));
      total += p[static_cast<std::size_t>(i)] * BigRat(factorial(n) / factorial(n - i) * jp);
    }
  }
  return total;
}

}  // namespace klb
