#include "klbraid/specseq.hpp"

#include "klbraid/kl.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace klb {

namespace {

// Polynomial in u whose coefficients are polynomials in t, truncated at u^cap.
using Bivariate = std::vector<Poly>;

Bivariate multiply(const Bivariate& a, const Bivariate& b, int cap) {
  Bivariate out(static_cast<std::size_t>(cap) + 1);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x].is_zero()) continue;
    for (std::size_t y = 0; y < b.size() && x + y <= static_cast<std::size_t>(cap); ++y)
      if (!b[y].is_zero()) out[x + y] += a[x] * b[y];
  }
  return out;
}

// B(u, t) = sum_{b >= 1} u^b / b! * sum_j c(b, b-j) t^j
Bivariate block_series(int cap) {
  Bivariate out(static_cast<std::size_t>(cap) + 1);
  for (int b = 1; b <= cap; ++b) {
    Poly poincare;
    for (int j = 0; j < b; ++j) poincare.set(static_cast<std::size_t>(j), BigRat(stirling1_unsigned(b, b - j)));
    out[static_cast<std::size_t>(b)] = poincare * (BigRat(1) / BigRat(factorial(b)));
  }
  return out;
}

std::mutex power_mu;
std::map<std::pair<int, int>, Bivariate> power_cache;  // (cap, k) -> B^k

const Bivariate& block_power(int k, int cap) {
  std::lock_guard lock(power_mu);
  auto key = [cap](int e) { return std::pair{cap, e}; };
  if (!power_cache.count(key(1))) power_cache.emplace(key(1), block_series(cap));
  int e = 1;
  while (e < k && power_cache.count(key(e + 1))) ++e;
  for (; e < k; ++e) power_cache.emplace(key(e + 1), multiply(power_cache.at(key(e)), power_cache.at(key(1)), cap));
  return power_cache.at(key(k));
}

Poly poincare_poly(const Graph& g) {
  Poly p;
  const int r = g.rank();
  for (int j = 0; j <= r; ++j) p.set(static_cast<std::size_t>(j), BigRat(conf_betti(g, j)));
  return p;
}

}  // namespace

BigInt comp_dim(int p, int j, int n) {
  if (p < 0 || j < 0 || n < 1) return 0;
  if (p + 1 > n) return 0;
  const Bivariate& bp = block_power(p + 1, n);
  const BigRat value = bp[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] * BigRat(factorial(n));
  if (value.get_den() != 1) throw std::logic_error("comp_dim: non-integral count");
  return value.get_num();
}

BigInt b_dim(int i, int p, int q, int n) {
  if (p < 0 || q < 0 || i - q < 0 || 2 * i - p - q < 0) return 0;
  const BigInt d = d_coeff(i - q, p + 1);
  if (d == 0) return 0;
  const BigInt comp = comp_dim(p, 2 * i - p - q, n);
  const BigInt orbit = factorial(p + 1);
  if (comp % orbit != 0) throw std::logic_error("b_dim: comp_dim is not divisible by (p+1)!");
  return comp / orbit * d;
}

std::vector<E1Cell> e1_page(int i, int n) {
  std::vector<E1Cell> cells;
  for (int p = 0; p + 1 <= n && p <= 2 * i; ++p)
    for (int q = 0; q <= i && p + q <= 2 * i; ++q) {
      BigInt dim = b_dim(i, p, q, n);
      if (dim != 0) cells.push_back({i, p, q, std::move(dim)});
    }
  return cells;
}

EulerReport euler_identity(int i, int n) {
  if (i < 1 || n < 1) throw std::invalid_argument("euler_identity: i and n must be positive");
  EulerReport r;
  r.cells = e1_page(i, n);
  for (const auto& c : r.cells) r.lhs += (c.p + c.q) % 2 == 0 ? c.dim : BigInt(-c.dim);
  r.rhs = d_coeff(i, n);
  r.equal = r.lhs == r.rhs;
  return r;
}

EulerReport euler_identity_graph(const Graph& gamma, int i, int n) {
  if (i < 1 || n < 0) throw std::invalid_argument("euler_identity_graph: need i >= 1 and n >= 0");
  if (gamma.num_vertices() + n > kRelativeMaxVertices)
    throw std::invalid_argument("euler_identity_graph: |V| + n exceeds " + std::to_string(kRelativeMaxVertices));
  const Graph g = cone_extend(gamma, n);
  if (!g.is_connected()) throw std::invalid_argument("euler_identity_graph: cone graph is disconnected");

  std::map<std::pair<int, int>, BigInt> dims;
  for (const auto& pi : connected_partitions(g)) {
    const int p = pi.num_blocks() - 1;
    Poly prod = Poly::constant(1);
    for (const auto& block : localize(g, pi)) prod *= poincare_poly(block);
    const ZPoly kl = kl_graphic(contract(g, pi));
    for (int q = 0; q <= i; ++q) {
      const int j = 2 * i - p - q;
      if (j < 0) continue;
      const BigInt term = BigInt(prod[static_cast<std::size_t>(j)].get_num()) * kl[static_cast<std::size_t>(i - q)];
      if (term != 0) dims[{p, q}] += term;
    }
  }
  EulerReport r;
  for (const auto& [pq, dim] : dims) {
    if (dim == 0) continue;
    r.cells.push_back({i, pq.first, pq.second, dim});
    r.lhs += (pq.first + pq.second) % 2 == 0 ? dim : BigInt(-dim);
  }
  r.rhs = kl_graphic(g)[static_cast<std::size_t>(i)];
  r.equal = r.lhs == r.rhs;
  return r;
}

std::vector<RatioRow> ratio_diagnostic(int i, int n_lo, int n_hi) {
  if (i < 1) throw std::invalid_argument("ratio_diagnostic: i must be positive");
  std::vector<RatioRow> rows;
  for (int n = std::max(n_lo, 1); n <= n_hi; ++n) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(2 * i), static_cast<unsigned long>(n));
    RatioRow row;
    row.n = n;
    row.b_ratio = BigRat(b_dim(i, 2 * i - 1, 1, n), scale);
    row.b_ratio.canonicalize();
    row.d_ratio = BigRat(d_coeff(i, n), scale);
    row.d_ratio.canonicalize();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace klb
