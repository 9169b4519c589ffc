#pragma once

// Independent brute-force reference implementations used by the unit tests. Nothing here
// calls into the library except for value types (BigInt, Partition, ZPoly).

#include "klbraid/combinat.hpp"
#include "klbraid/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using klb::BigInt;
using klb::BigRat;
using klb::Partition;
using klb::ZPoly;

inline long partition_count(int n, int max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (int p = std::min(n, max_part); p >= 1; --p) total += partition_count(n - p, p);
  return total;
}

/// Calls visit(rgs) for every restricted growth string of length n (block labels 0..k-1).
inline void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& visit) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int blocks) {
    if (pos == n) {
      visit(a, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[static_cast<std::size_t>(pos)] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
}

inline std::vector<BigInt> set_partitions_by_blocks(int n) {
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1, 0);
  for_each_set_partition(n, [&](const std::vector<int>&, int k) { out[static_cast<std::size_t>(k)] += 1; });
  return out;
}

inline std::map<Partition, BigInt> set_partitions_by_type(int n) {
  std::map<Partition, BigInt> out;
  for_each_set_partition(n, [&](const std::vector<int>& a, int k) {
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int b : a) ++sizes[static_cast<std::size_t>(b)];
    out[Partition(sizes)] += 1;
  });
  return out;
}

inline std::vector<std::vector<int>> cycles_of(const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
      seen[x] = true;
      c.push_back(static_cast<int>(x));
    }
    out.push_back(c);
  }
  return out;
}

inline std::vector<BigInt> permutations_by_cycles(int n) {
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do out[cycles_of(p).size()] += 1;
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::map<Partition, BigInt> permutations_by_type(int n) {
  std::map<Partition, BigInt> out;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<int> lens;
    for (const auto& c : cycles_of(p)) lens.push_back(static_cast<int>(c.size()));
    out[Partition(lens)] += 1;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline BigInt hook_length_dimension(const Partition& lambda) {
  BigInt hooks = 1;
  const auto& parts = lambda.parts();
  for (std::size_t r = 0; r < parts.size(); ++r)
    for (int c = 0; c < parts[r]; ++c) {
      int below = 0;
      for (std::size_t rr = r + 1; rr < parts.size() && parts[rr] > c; ++rr) ++below;
      hooks *= parts[r] - c - 1 + below + 1;
    }
  BigInt nf = 1;
  for (int k = 2; k <= lambda.size(); ++k) nf *= k;
  return nf / hooks;
}

// ---- graphs -------------------------------------------------------------------------

/// Plain edge-list multigraph-free graph on vertices 0..n-1.
struct SimpleGraph {
  int n = 0;
  std::set<std::pair<int, int>> edges;  // u < v

  void add(int u, int v) {
    if (u == v) return;
    edges.insert({std::min(u, v), std::max(u, v)});
  }
};

inline bool connected_on(const SimpleGraph& g, const std::vector<int>& verts) {
  if (verts.size() <= 1) return true;
  std::set<int> in(verts.begin(), verts.end()), seen{verts[0]};
  std::vector<int> stack{verts[0]};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const auto& [u, v] : g.edges) {
      const int y = u == x ? v : v == x ? u : -1;
      if (y >= 0 && in.count(y) && !seen.count(y)) {
        seen.insert(y);
        stack.push_back(y);
      }
    }
  }
  return seen.size() == verts.size();
}

inline int components(const SimpleGraph& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
  int c = g.n;
  for (const auto& [u, v] : g.edges) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --c;
    }
  }
  return c;
}

/// Chromatic polynomial by deletion-contraction.
inline ZPoly chromatic(const SimpleGraph& g) {
  if (g.edges.empty()) return ZPoly::monomial(1, static_cast<std::size_t>(g.n));
  const auto [u, v] = *g.edges.begin();
  SimpleGraph del = g;
  del.edges.erase({u, v});
  SimpleGraph con{g.n - 1, {}};
  auto relabel = [&](int x) { return x == v ? u - (u > v) : x - (x > v); };
  for (const auto& [a, b] : g.edges)
    if (!(a == u && b == v)) con.add(relabel(a), relabel(b));
  return chromatic(del) - chromatic(con);
}

/// Chromatic polynomial divided by t^{#components}.
inline ZPoly reduced_char_poly(const SimpleGraph& g) {
  const ZPoly chi = chromatic(g);
  const int c = components(g);
  std::vector<BigInt> coeffs(chi.coeffs().begin() + c, chi.coeffs().end());
  return ZPoly(coeffs);
}

/// All set partitions of the vertices whose blocks induce connected subgraphs (the flats).
inline std::vector<std::vector<std::vector<int>>> flats(const SimpleGraph& g) {
  std::vector<std::vector<std::vector<int>>> out;
  for_each_set_partition(g.n, [&](const std::vector<int>& a, int k) {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
    for (int x = 0; x < g.n; ++x) blocks[static_cast<std::size_t>(a[static_cast<std::size_t>(x)])].push_back(x);
    for (const auto& b : blocks)
      if (!connected_on(g, b)) return;
    out.push_back(blocks);
  });
  return out;
}

inline SimpleGraph induced(const SimpleGraph& g, const std::vector<int>& verts) {
  SimpleGraph h{static_cast<int>(verts.size()), {}};
  for (const auto& [u, v] : g.edges) {
    const auto iu = std::find(verts.begin(), verts.end(), u), iv = std::find(verts.begin(), verts.end(), v);
    if (iu != verts.end() && iv != verts.end()) h.add(static_cast<int>(iu - verts.begin()), static_cast<int>(iv - verts.begin()));
  }
  return h;
}

inline SimpleGraph quotient(const SimpleGraph& g, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> label(static_cast<std::size_t>(g.n));
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int x : blocks[b]) label[static_cast<std::size_t>(x)] = static_cast<int>(b);
  SimpleGraph h{static_cast<int>(blocks.size()), {}};
  for (const auto& [u, v] : g.edges) h.add(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
  return h;
}

/// KL polynomial of a connected graph straight from the defining recursion over every flat,
/// with no memoization and no grouping by isomorphism type.
inline ZPoly kl_naive(const SimpleGraph& g) {
  const int rank = g.n - 1;
  if (rank <= 0) return ZPoly::constant(1);
  // R = sum over flats F other than the finest of chi(M_F) P(M^F)
  ZPoly rhs;
  for (const auto& blocks : flats(g)) {
    if (static_cast<int>(blocks.size()) == g.n) continue;
    ZPoly chi = ZPoly::constant(1);
    for (const auto& b : blocks) chi *= reduced_char_poly(induced(g, b));
    rhs += chi * kl_naive(quotient(g, blocks));
  }
  // t^r P(1/t) - P(t) = rhs with deg P < r/2
  ZPoly p;
  for (int k = 0; 2 * k < rank; ++k) p.set(static_cast<std::size_t>(k), -rhs[static_cast<std::size_t>(k)]);
  return p;
}

// ---- series -------------------------------------------------------------------------

/// First n+1 Maclaurin coefficients of num/den by schoolbook long division.
inline std::vector<BigRat> long_division(const std::vector<BigRat>& num, const std::vector<BigRat>& den, int n) {
  std::vector<BigRat> rem(static_cast<std::size_t>(n) + 1, 0), out;
  for (std::size_t k = 0; k < num.size() && k <= static_cast<std::size_t>(n); ++k) rem[k] = num[k];
  for (int k = 0; k <= n; ++k) {
    const BigRat q = rem[static_cast<std::size_t>(k)] / den[0];
    out.push_back(q);
    for (std::size_t j = 0; j < den.size() && static_cast<std::size_t>(k) + j <= static_cast<std::size_t>(n); ++j)
      rem[static_cast<std::size_t>(k) + j] -= q * den[j];
  }
  return out;
}

}  // namespace oracle
