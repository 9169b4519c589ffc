#include "klbraid/polyseries.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace klb;

namespace {

Poly upoly(std::vector<BigRat> c) { return Poly(std::move(c), 'u'); }

SeqTable seq_of(const std::vector<BigInt>& v, int start) {
  SeqTable s{start, {}};
  for (const auto& x : v) s.values.emplace_back(x);
  return s;
}

SeqTable h1_sequence(int hi) {
  SeqTable s{1, {}};
  for (int n = 1; n <= hi; ++n) {
    BigInt p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    s.values.emplace_back(p2 - 1 - binomial(n, 2));
  }
  return s;
}

const RatFn kH1(upoly({0, 0, 0, 0, 1}), linear_power(1, 3) * linear_power(2, 1));

}  // namespace

TEST_CASE("RatFn is normalized to lowest terms") {
  const RatFn a(upoly({1, -1}), upoly({1, -2, 1}));  // (1-u)/(1-u)^2
  CHECK(a == RatFn(upoly({1}), upoly({1, -1})));
  CHECK(RatFn(upoly({2}), upoly({2, -4})) == RatFn(upoly({1}), upoly({1, -2})));
  CHECK_THROWS_AS(RatFn(upoly({1}), upoly({})), std::domain_error);
}

TEST_CASE("series agrees with long division") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5), pole(1, 4), mult(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<BigRat> num;
    for (int k = 0; k < 6; ++k) num.emplace_back(coef(rng));
    Poly den = Poly::constant(1, 'u');
    for (int f = 0; f < 3; ++f) den *= linear_power(pole(rng), mult(rng));
    const RatFn r(upoly(num), den);
    const auto s = series(r, 30);
    const auto o = oracle::long_division(upoly(num).coeffs().empty() ? std::vector<BigRat>{0} : num, den.coeffs(), 30);
    for (int n = 0; n <= 30; ++n) CHECK(s.at(n) == o[static_cast<std::size_t>(n)]);
  }
  CHECK_THROWS_AS(series(RatFn(upoly({1}), upoly({0, 1})), 3), std::domain_error);
}

TEST_CASE("H1 closed form: series values") {
  const auto s = series(kH1, 7);
  CHECK(s.at(4) == 1);
  CHECK(s.at(5) == 5);
  CHECK(s.at(6) == 16);
  CHECK(s.at(7) == 42);
}

TEST_CASE("fit_rational recovers H1 and reports short data") {
  const auto fit = fit_rational(h1_sequence(20), {1, 2});
  REQUIRE(fit);
  CHECK(*fit == kH1);
  CHECK_THROWS_AS(fit_rational(h1_sequence(8), {1, 2}), InsufficientDataError);
  CHECK_THROWS_AS(fit_rational(h1_sequence(20), {0, 1}), std::invalid_argument);
}

TEST_CASE("fit_rational returns nullopt when the poles cannot explain the data") {
  // 3^n needs a pole at 1/3
  SeqTable s{0, {}};
  BigInt x = 1;
  for (int n = 0; n < 120; ++n, x *= 3) s.values.emplace_back(x);
  FitOptions opts;
  opts.mult_cap = 2;
  CHECK_FALSE(fit_rational(s, {1, 2}, opts).has_value());
  const auto good = fit_rational(s, {3}, opts);
  REQUIRE(good);
  CHECK(*good == RatFn(upoly({1}), linear_power(3, 1)));
}

TEST_CASE("series -> fit round trip on random rational functions") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4), mult(0, 2);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<BigRat> num;
    for (int k = 0; k < 4; ++k) num.emplace_back(coef(rng));
    if (upoly(num).is_zero()) continue;
    Poly den = linear_power(1, mult(rng)) * linear_power(2, mult(rng)) * linear_power(3, mult(rng));
    const RatFn r(upoly(num), den);
    const auto fit = fit_rational(series(r, 40), {1, 2, 3});
    REQUIRE(fit);
    CHECK(*fit == r);
  }
}

TEST_CASE("partial fractions recombine to the input") {
  const auto pf = partial_fractions(kH1);
  CHECK(pf.recombine() == kH1);
  CHECK(pf.coefficient(2, 1) == BigRat(1, 2));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-6, 6), mult(0, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<BigRat> num;
    for (int k = 0; k < 9; ++k) num.emplace_back(coef(rng));
    const RatFn r(upoly(num), linear_power(1, mult(rng)) * linear_power(2, mult(rng)) * linear_power(4, mult(rng)));
    CHECK(partial_fractions(r).recombine() == r);
  }
}

TEST_CASE("factor_linear_poles") {
  const auto f = factor_linear_poles(linear_power(1, 3) * linear_power(2, 1));
  CHECK(f == std::vector<std::pair<int, int>>{{1, 3}, {2, 1}});
  CHECK(factor_linear_poles(upoly({1})).empty());
  CHECK_THROWS_AS(factor_linear_poles(upoly({1, 0, 1})), std::domain_error);
}

TEST_CASE("r_extract") {
  CHECK(r_extract(kH1, 2) == BigRat(1, 2));
  CHECK(r_extract(RatFn(upoly({1}), linear_power(1, 1)), 1) == 1);
  // a double pole at 1/2 has no finite limit
  CHECK_THROWS_AS(r_extract(RatFn(upoly({1}), linear_power(2, 2)), 2), std::domain_error);
  // a pole beyond 1/d
  CHECK_THROWS_AS(r_extract(RatFn(upoly({1}), linear_power(3, 1)), 2), std::domain_error);
}

TEST_CASE("egf_form of H1") {
  const auto forms = egf_form(kH1);
  REQUIRE(forms.size() == 3);
  CHECK(forms[0] == upoly({BigRat(1, 2)}));
  CHECK(forms[1] == upoly({-1, 0, BigRat(-1, 2)}));
  CHECK(forms[2] == upoly({BigRat(1, 2)}));
}

TEST_CASE("egf_form reproduces the series") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-5, 5), mult(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BigRat> num;
    for (int k = 0; k < 7; ++k) num.emplace_back(coef(rng));
    const RatFn r(upoly(num), linear_power(1, mult(rng)) * linear_power(2, mult(rng)) * linear_power(3, mult(rng)));
    const auto forms = egf_form(r);
    const auto s = series(r, 25);
    for (int n = 0; n <= 25; ++n) CHECK(egf_coefficient(forms, n) == s.at(n));
  }
}

TEST_CASE("SeqTable indexing") {
  const SeqTable s = seq_of({5, 6}, 3);
  CHECK(s.at(0) == 0);
  CHECK(s.at(4) == 6);
  CHECK(s.end() == 5);
  CHECK_THROWS_AS(s.at(5), std::out_of_range);
}
