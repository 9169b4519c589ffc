#pragma once

// Kazhdan-Lusztig polynomials of graphic matroids, with a fast path for braid
// matroids (complete graphs) that sums over partition types instead of flats.
//
// Every polynomial is the unique solution of
//   t^{rk M} P_M(1/t) = sum_F chi_{M_F}(t) P_{M^F}(t),   deg P_M < rk M / 2,
// where F runs over flats (connected set partitions), M_F is the direct sum of the
// block graphs and M^F is the quotient graph.

#include "klbraid/graph.hpp"

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace klb {

/// Process-wide memo of computed KL polynomials keyed by canonical descriptor:
/// a graph's canonical key, or "braid:n" for complete graphs.
class KLTable {
 public:
  std::optional<ZPoly> find(const std::string& key) const;
  /// Inserts unless present; returns the stored value.
  ZPoly insert(const std::string& key, const ZPoly& p);
  std::size_t size() const;

  /// Loads records from <dir>/kltable.jsonl if present.
  void load(const std::filesystem::path& dir);
  /// Writes every record, sorted by key, to <dir>/kltable.jsonl.
  void save(const std::filesystem::path& dir) const;

  static std::string braid_key(int n) { return "braid:" + std::to_string(n); }

 private:
  mutable std::mutex mu_;
  std::map<std::string, ZPoly> entries_;
};

KLTable& default_kl_table();

/// KL polynomial of a connected graph with at most 12 vertices (complete graphs of any size
/// are routed to kl_braid). Throws std::invalid_argument for disconnected input.
ZPoly kl_graphic(const Graph& gamma, KLTable& table = default_kl_table());

/// KL polynomial of the braid matroid M_n (the matroid of K_n).
ZPoly kl_braid(int n, KLTable& table = default_kl_table());

/// t^{rk} P(1/t) - sum_F chi_{M_F}(t) P_{M^F}(t) with P supplied for the top term and the
/// remaining terms recomputed from scratch; zero iff P solves the functional equation.
ZPoly kl_residual(const Graph& gamma, const ZPoly& p, KLTable& table = default_kl_table());

/// Coefficient of t^i in kl_braid(n): dim D_i(n).
BigInt d_coeff(int i, int n);
/// Coefficient of t^i in the KL polynomial of cone_extend(gamma, n).
BigInt d_coeff_graph(const Graph& gamma, int i, int n);

/// (#connected two-block partitions) - (#edges): the linear KL coefficient of a connected graph.
BigInt c1_count(const Graph& gamma);

/// reduced characteristic polynomial of M_m: (t-1)(t-2)...(t-m+1).
ZPoly braid_char_poly(int m);

struct ConjectureReport {
  int i = 0;
  BigInt computed;   // coefficient of t^{i-1} in kl_braid(2i)
  BigInt predicted;  // (2i-3)!! (2i-1)^{i-2}
  bool equal = false;
};

/// Compares the top coefficient of P_{M_{2i}} with the labeled triangular cactus count.
ConjectureReport conjecture_top_check(int i);

}  // namespace klb
