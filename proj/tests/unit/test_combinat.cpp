#include "klbraid/combinat.hpp"
#include "klbraid/poly.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

using namespace klb;

TEST_CASE("partitions are listed in graded reverse-lex order") {
  const auto p3 = partitions(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Partition{3});
  CHECK(p3[1] == Partition{2, 1});
  CHECK(p3[2] == Partition{1, 1, 1});
  CHECK(partitions(1) == std::vector<Partition>{Partition{1}});
  CHECK(partitions(9).size() == 30);
  CHECK(partitions(0).size() == 1);
}

TEST_CASE("partition counts match a recursive oracle") {
  for (int n = 0; n <= 20; ++n) {
    const auto ps = partitions(n);
    CHECK(static_cast<long>(ps.size()) == oracle::partition_count(n, n));
    CHECK(std::is_sorted(ps.begin(), ps.end()));
    CHECK(std::adjacent_find(ps.begin(), ps.end()) == ps.end());
  }
}

TEST_CASE("Partition normalizes and validates parts") {
  CHECK(Partition({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition{2, 2, 1}.multiplicity(2) == 2);
}

TEST_CASE("Stirling numbers of the second kind") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(6, 3) == 90);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(3, 5) == 0);
  for (int n = 1; n <= 10; ++n) CHECK(stirling2(n, 1) == 1);
  for (int n = 0; n <= 9; ++n) {
    const auto by_blocks = oracle::set_partitions_by_blocks(n);
    for (int k = 0; k <= n; ++k) CHECK(stirling2(n, k) == by_blocks[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("unsigned Stirling numbers of the first kind") {
  CHECK(stirling1_unsigned(6, 4) == 85);
  CHECK(stirling1_unsigned(4, 2) == 11);
  for (int n = 0; n <= 10; ++n) CHECK(stirling1_unsigned(n, n) == 1);
  for (int n = 1; n <= 8; ++n) {
    const auto by_cycles = oracle::permutations_by_cycles(n);
    for (int k = 0; k <= n; ++k) CHECK(stirling1_unsigned(n, k) == by_cycles[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("c(6,4) is the u^6 coefficient of (2u^3+u^4)/(1-u)^5") {
  // (1-u)^-5 = sum C(k+4,4) u^k
  const BigInt expected = 2 * binomial(3 + 4, 4) + binomial(2 + 4, 4);
  CHECK(stirling1_unsigned(6, 4) == expected);
  for (int n = 3; n <= 20; ++n) CHECK(stirling1_unsigned(n, n - 2) == 2 * binomial(n - 3 + 4, 4) + binomial(n - 4 + 4, 4));
}

TEST_CASE("Stirling numbers connect powers, falling and rising factorials") {
  for (int n = 0; n <= 12; ++n) {
    ZPoly lhs;
    ZPoly falling = ZPoly::constant(1);
    for (int k = 0; k <= n; ++k) {
      lhs += falling * stirling2(n, k);
      falling *= ZPoly{BigInt(-k), BigInt(1)};
    }
    CHECK(lhs == ZPoly::monomial(1, static_cast<std::size_t>(n)));

    ZPoly rising = ZPoly::constant(1), sum;
    for (int j = 0; j < n; ++j) rising *= ZPoly{BigInt(j), BigInt(1)};
    for (int k = 0; k <= n; ++k) sum.add_to(static_cast<std::size_t>(k), stirling1_unsigned(n, k));
    CHECK(sum == rising);
  }
}

TEST_CASE("set partitions counted by type") {
  CHECK(set_partition_count_by_type(Partition{2, 1, 1}) == 6);
  CHECK(set_partition_count_by_type(Partition::ones(6)) == 1);
  CHECK(set_partition_count_by_type(Partition{2, 2}) == 3);
  for (int n = 1; n <= 8; ++n) {
    const auto by_type = oracle::set_partitions_by_type(n);
    for (const auto& lambda : partitions(n)) CHECK(set_partition_count_by_type(lambda) == by_type.at(lambda));
  }
  for (int n = 1; n <= 12; ++n) {
    BigInt total = 0;
    for (const auto& lambda : partitions(n)) total += set_partition_count_by_type(lambda);
    CHECK(total == bell(n));
  }
}

TEST_CASE("bell and double factorials") {
  CHECK(bell(4) == 15);
  CHECK(bell(0) == 1);
  CHECK(double_factorial_odd(5) == 15);
  CHECK(double_factorial_odd(-1) == 1);
  CHECK(double_factorial_odd(1) == 1);
  CHECK_THROWS_AS(double_factorial_odd(4), std::invalid_argument);
}

TEST_CASE("class sizes") {
  CHECK(class_size(Partition{2, 1}) == 3);
  CHECK(class_size(Partition{3}) == 2);
  CHECK(class_size(Partition::ones(7)) == 1);
  for (int n = 1; n <= 7; ++n) {
    const auto counts = oracle::permutations_by_type(n);
    for (const auto& mu : partitions(n)) CHECK(class_size(mu) == counts.at(mu));
  }
  for (int n = 1; n <= 12; ++n) {
    BigInt total = 0;
    for (const auto& mu : partitions(n)) total += class_size(mu);
    CHECK(total == factorial(n));
  }
}

TEST_CASE("Murnaghan-Nakayama characters") {
  CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  for (int n = 1; n <= 7; ++n)
    for (const auto& mu : partitions(n)) {
      CHECK(mn_character(Partition{n}, mu) == 1);
      const int sign = (n - mu.length()) % 2 == 0 ? 1 : -1;
      CHECK(mn_character(Partition::ones(n), mu) == sign);
    }
  for (int n = 1; n <= 9; ++n)
    for (const auto& lambda : partitions(n)) CHECK(mn_character(lambda, Partition::ones(n)) == oracle::hook_length_dimension(lambda));
  CHECK_THROWS_AS(mn_character(Partition{2}, Partition{1, 1, 1}), std::invalid_argument);
}

TEST_CASE("column orthogonality of the character table") {
  for (int n = 1; n <= 8; ++n) {
    const auto ps = partitions(n);
    for (const auto& mu : ps)
      for (const auto& nu : ps) {
        BigInt s = 0;
        for (const auto& lambda : ps) s += mn_character(lambda, mu) * mn_character(lambda, nu);
        CHECK(s == (mu == nu ? centralizer_order(mu) : BigInt(0)));
      }
  }
}

TEST_CASE("cycle type of a permutation") {
  const std::vector<int> perm{1, 2, 0, 4, 3, 5};
  CHECK(cycle_type(perm) == Partition{3, 2, 1});
}
