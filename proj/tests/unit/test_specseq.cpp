#include "klbraid/specseq.hpp"
#include "klbraid/kl.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <functional>

using namespace klb;

namespace {

// Sum over ordered set partitions of [n] into p+1 blocks of the degree-j part of
// prod_b H_*(Conf_{|b|}), by explicit enumeration of block-size compositions.
BigInt comp_dim_oracle(int p, int j, int n) {
  BigInt total = 0;
  std::vector<int> sizes;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(sizes.size()) == p + 1) {
      if (left != 0) return;
      // multinomial n! / prod sizes!, times the degree-j coefficient of the product of
      // Poincare polynomials sum_k c(b, b-k) t^k
      std::vector<BigInt> poly{1};
      BigInt multinomial = factorial(n);
      for (int b : sizes) {
        multinomial /= factorial(b);
        std::vector<BigInt> next(poly.size() + static_cast<std::size_t>(b), 0);
        for (std::size_t x = 0; x < poly.size(); ++x)
          for (int k = 0; k < b; ++k) next[x + static_cast<std::size_t>(k)] += poly[x] * stirling1_unsigned(b, b - k);
        poly = next;
      }
      if (j < static_cast<int>(poly.size())) total += multinomial * poly[static_cast<std::size_t>(j)];
      return;
    }
    for (int b = 1; b <= left; ++b) {
      sizes.push_back(b);
      rec(left - b);
      sizes.pop_back();
    }
  };
  rec(n);
  return total;
}

}  // namespace

TEST_CASE("comp_dim examples") {
  CHECK(comp_dim(1, 1, 3) == 6);
  CHECK(comp_dim(0, 0, 1) == 1);
  CHECK(comp_dim(0, 2, 3) == stirling1_unsigned(3, 1));
  CHECK(comp_dim(3, 0, 3) == 0);
}

TEST_CASE("comp_dim matches enumeration over ordered block sizes") {
  for (int n = 1; n <= 8; ++n)
    for (int p = 0; p < n; ++p)
      for (int j = 0; j < n; ++j) CHECK(comp_dim(p, j, n) == comp_dim_oracle(p, j, n));
}

TEST_CASE("comp_dim is divisible by (p+1)!") {
  for (int n = 1; n <= 14; ++n)
    for (int p = 0; p < n; ++p)
      for (int j = 0; j < n; ++j) CHECK(comp_dim(p, j, n) % factorial(p + 1) == 0);
}

TEST_CASE("b_dim examples") {
  CHECK(b_dim(1, 1, 1, 4) == 7);
  CHECK(b_dim(1, 0, 1, 4) == comp_dim(0, 1, 4));
  CHECK(b_dim(1, 3, 0, 6) == 0);  // d_coeff(1, 4) = 1 but j = -1
}

TEST_CASE("b_dim vanishes on the forced-zero cells") {
  for (int i = 1; i <= 3; ++i)
    for (int n = i + 1; n <= 10; ++n)
      for (int p = 0; p <= 2 * i + 1; ++p)
        for (int q = 0; q <= i + 1; ++q) {
          if (p + q > 2 * i) CHECK(b_dim(i, p, q, n) == 0);
          if (q > i) CHECK(b_dim(i, p, q, n) == 0);
          // q = i forces d_coeff(0, p+1) = 1, q < i needs 2(i-q) < p
          if (q < i && 2 * (i - q) >= p) CHECK(b_dim(i, p, q, n) == 0);
        }
}

TEST_CASE("Euler identity on the braid grid") {
  for (int i = 1; i <= 3; ++i)
    for (int n = i + 1; n <= 12; ++n) {
      const auto r = euler_identity(i, n);
      CHECK(r.equal);
      CHECK(r.rhs == d_coeff(i, n));
      for (const auto& c : r.cells) CHECK(c.dim != 0);
    }
  CHECK_THROWS_AS(euler_identity(0, 4), std::invalid_argument);
}

TEST_CASE("relative identity for the empty graph agrees with the braid version") {
  for (int i = 1; i <= 3; ++i)
    for (int n = 1; n <= 9; ++n) {
      const auto braid = euler_identity(i, n);
      const auto rel = euler_identity_graph(Graph(), i, n);
      CHECK(rel.equal);
      CHECK(rel.lhs == braid.lhs);
      CHECK(rel.cells == braid.cells);
    }
}

TEST_CASE("relative identity on small cone graphs") {
  const std::vector<Graph> bases{Graph(1), Graph(2, {{0, 1}}), Graph::path(3), Graph::cycle(4), Graph(3)};
  for (const auto& g : bases)
    for (int i = 1; i <= 2; ++i)
      for (int n = 0; g.num_vertices() + n <= 8; ++n) {
        if (!cone_extend(g, n).is_connected()) continue;
        CHECK(euler_identity_graph(g, i, n).equal);
      }
  CHECK_THROWS_AS(euler_identity_graph(Graph(3), 1, 8), std::invalid_argument);
  CHECK_THROWS_AS(euler_identity_graph(Graph(3), 1, 0), std::invalid_argument);
}

TEST_CASE("ratio diagnostic at i = 3 approaches 15/720") {
  const auto rows = ratio_diagnostic(3, 30, 30);
  REQUIRE(rows.size() == 1);
  const BigRat target(15, 720);
  CHECK(abs(BigRat(rows[0].b_ratio - target)) <= BigRat(1, 100));
  CHECK(abs(BigRat(rows[0].d_ratio - target)) <= BigRat(1, 100));
}
