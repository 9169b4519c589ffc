#include "klbraid/kl.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <filesystem>
#include <random>
#include <thread>

using namespace klb;

namespace {

oracle::SimpleGraph to_simple(const Graph& g) {
  oracle::SimpleGraph s{g.num_vertices(), {}};
  for (const auto& [u, v] : g.edges()) s.add(u, v);
  return s;
}

Graph random_connected(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  while (true) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (g.is_connected()) return g;
  }
}

ZPoly z(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return ZPoly(v);
}

}  // namespace

TEST_CASE("braid KL polynomials") {
  CHECK(kl_braid(1) == z({1}));
  CHECK(kl_braid(2) == z({1}));
  CHECK(kl_braid(3) == z({1}));
  CHECK(kl_braid(4) == z({1, 1}));
  CHECK(kl_braid(5) == z({1, 5}));
  CHECK(kl_braid(6) == z({1, 16, 15}));
  CHECK(kl_braid(7) == z({1, 42, 175}));
  CHECK(kl_braid(8) == z({1, 99, 1225, 735}));
  CHECK_THROWS_AS(kl_braid(0), std::invalid_argument);
}

TEST_CASE("braid fast path agrees with the naive recursion over all flats") {
  for (int n = 1; n <= 6; ++n) CHECK(kl_braid(n) == oracle::kl_naive(to_simple(Graph::complete(n))));
}

TEST_CASE("graphic KL polynomials agree with the naive recursion") {
  std::mt19937 rng(41);
  std::vector<Graph> graphs{Graph::path(5), Graph::cycle(5), Graph::cycle(6), Graph::star(6), cone_extend(Graph::path(3), 2)};
  for (int t = 0; t < 12; ++t) graphs.push_back(random_connected(rng, 4 + t % 3, 0.5));
  for (const auto& g : graphs) CHECK(kl_graphic(g) == oracle::kl_naive(to_simple(g)));
}

TEST_CASE("kl_graphic on complete graphs equals kl_braid") {
  KLTable fresh;
  for (int n = 1; n <= 8; ++n) CHECK(kl_graphic(Graph::complete(n), fresh) == kl_braid(n));
}

TEST_CASE("trees and forests of cycles") {
  // a tree is a Boolean matroid: P = 1
  CHECK(kl_graphic(Graph::path(7)) == z({1}));
  CHECK(kl_graphic(Graph::star(8)) == z({1}));
  CHECK_THROWS_AS(kl_graphic(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("functional equation residual vanishes and degree bound holds") {
  std::mt19937 rng(43);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_connected(rng, 5 + t % 3, 0.55);
    const ZPoly p = kl_graphic(g);
    CHECK(kl_residual(g, p).is_zero());
    CHECK(2 * p.degree() < std::max(g.rank(), 1));
    CHECK(p[0] == 1);
    ZPoly wrong = p;
    wrong.add_to(0, 1);
    CHECK_FALSE(kl_residual(g, wrong).is_zero());
  }
  for (int n = 2; n <= 9; ++n) CHECK(kl_residual(Graph::complete(n), kl_braid(n)).is_zero());
}

TEST_CASE("d_coeff closed forms") {
  for (int n = 1; n <= 25; ++n) {
    BigInt p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
    CHECK(d_coeff(1, n) == p2 - 1 - binomial(n, 2));
    CHECK(d_coeff(2, n) == stirling1_unsigned(n, n - 2) - stirling2(n, n - 1) * stirling2(n - 1, 2) + stirling2(n, 3) + stirling2(n, 4));
    CHECK(d_coeff(0, n) == 1);
  }
  CHECK(d_coeff(5, 6) == 0);
}

TEST_CASE("c1 shortcut equals the linear KL coefficient") {
  std::mt19937 rng(47);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_connected(rng, 3 + t % 6, 0.5);
    CHECK(c1_count(g) == kl_graphic(g)[1]);
  }
  for (int n = 2; n <= 9; ++n) CHECK(c1_count(Graph::complete(n)) == d_coeff(1, n));
}

TEST_CASE("d_coeff_graph routing") {
  CHECK(d_coeff_graph(Graph(), 1, 6) == 16);
  CHECK(d_coeff_graph(Graph(1), 1, 5) == 16);
  CHECK(d_coeff_graph(Graph(1), 0, 5) == 1);
  CHECK(d_coeff_graph(Graph::path(3), 2, 3) == kl_graphic(cone_extend(Graph::path(3), 3))[2]);
  const Graph e(2, {{0, 1}});
  for (int n = 1; n <= 6; ++n) CHECK(d_coeff_graph(e, 1, n) == kl_graphic(cone_extend(e, n))[1]);
  // degree bound: coefficient vanishes once 2i >= rank
  CHECK(d_coeff_graph(Graph(1), 2, 3) == 0);
}

TEST_CASE("top coefficient conjecture check") {
  for (int i = 1; i <= 5; ++i) {
    const auto r = conjecture_top_check(i);
    CHECK(r.computed == d_coeff(i - 1, 2 * i));
    CHECK(r.equal);
  }
  CHECK(conjecture_top_check(4).predicted == 735);
  CHECK(conjecture_top_check(3).computed == 15);
  CHECK_THROWS_AS(conjecture_top_check(0), std::invalid_argument);
}

TEST_CASE("KLTable persists to disk and round-trips") {
  const auto dir = std::filesystem::temp_directory_path() / "klb_test_kltable";
  std::filesystem::remove_all(dir);
  KLTable a;
  kl_braid(8, a);
  kl_graphic(Graph::cycle(6), a);
  a.save(dir);
  KLTable b;
  b.load(dir);
  CHECK(b.size() == a.size());
  CHECK(b.find(KLTable::braid_key(8)) == std::optional<ZPoly>(z({1, 99, 1225, 735})));
  CHECK(kl_graphic(Graph::cycle(6), b) == kl_graphic(Graph::cycle(6)));
  std::filesystem::remove_all(dir);

  KLTable empty;
  empty.load(dir);  // missing file is not an error
  CHECK(empty.size() == 0);
}

TEST_CASE("concurrent queries produce identical results") {
  KLTable shared;
  std::vector<ZPoly> out(8);
  std::vector<std::thread> threads;
  for (int k = 0; k < 8; ++k) threads.emplace_back([&, k] { out[static_cast<std::size_t>(k)] = kl_braid(10 + k % 3, shared); });
  for (auto& t : threads) t.join();
  for (int k = 0; k < 8; ++k) CHECK(out[static_cast<std::size_t>(k)] == kl_braid(10 + k % 3));
}
