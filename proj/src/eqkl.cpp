#include "klbraid/eqkl.hpp"

#include "klbraid/graph.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klb {

// ---- ClassFn -------------------------------------------------------------------------

ClassFn::ClassFn(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("ClassFn: negative n");
  for (const auto& mu : partitions(n)) values_.emplace(mu, BigRat(0));
}

ClassFn ClassFn::trivial(int n) {
  ClassFn f(n);
  for (auto& [mu, v] : f.values_) v = 1;
  return f;
}

ClassFn ClassFn::sign(int n) {
  ClassFn f(n);
  for (auto& [mu, v] : f.values_) v = (n - mu.length()) % 2 == 0 ? 1 : -1;
  return f;
}

ClassFn ClassFn::regular(int n) {
  ClassFn f(n);
  f.set(Partition::ones(n), BigRat(factorial(n)));
  return f;
}

ClassFn ClassFn::irreducible(const Partition& lambda) {
  ClassFn f(lambda.size());
  for (auto& [mu, v] : f.values_) v = BigRat(mn_character(lambda, mu));
  return f;
}

const BigRat& ClassFn::at(const Partition& mu) const {
  auto it = values_.find(mu);
  if (it == values_.end()) throw std::invalid_argument("ClassFn: " + mu.to_string() + " is not a partition of " + std::to_string(n_));
  return it->second;
}

void ClassFn::set(const Partition& mu, BigRat v) {
  auto it = values_.find(mu);
  if (it == values_.end()) throw std::invalid_argument("ClassFn: " + mu.to_string() + " is not a partition of " + std::to_string(n_));
  it->second = std::move(v);
}

bool ClassFn::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& kv) { return kv.second == 0; });
}

ClassFn& ClassFn::operator+=(const ClassFn& o) {
  if (o.n_ != n_) throw std::invalid_argument("ClassFn: adding functions on different groups");
  for (auto& [mu, v] : values_) v += o.at(mu);
  return *this;
}

ClassFn& ClassFn::operator-=(const ClassFn& o) {
  if (o.n_ != n_) throw std::invalid_argument("ClassFn: subtracting functions on different groups");
  for (auto& [mu, v] : values_) v -= o.at(mu);
  return *this;
}

ClassFn& ClassFn::operator*=(const BigRat& s) {
  for (auto& [mu, v] : values_) v *= s;
  return *this;
}

BigRat inner_product(const ClassFn& f, const ClassFn& h) {
  if (f.n() != h.n()) throw std::invalid_argument("inner_product: functions on different groups");
  BigRat total = 0;
  for (const auto& [mu, v] : f.values()) total += v * h.at(mu) / BigRat(centralizer_order(mu));
  return total;
}

// ---- GradedClassFn -------------------------------------------------------------------

ClassFn GradedClassFn::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs.size())) return ClassFn(n);
  return coeffs[static_cast<std::size_t>(i)];
}

Poly GradedClassFn::at_class(const Partition& mu) const {
  std::vector<BigRat> c;
  for (const auto& f : coeffs) c.push_back(f.at(mu));
  return Poly(std::move(c));
}

ClassFn GradedClassFn::eval(const BigRat& x) const {
  ClassFn out(n);
  BigRat power = 1;
  for (const auto& f : coeffs) {
    out += f * power;
    power *= x;
  }
  return out;
}

void GradedClassFn::trim() {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

// ---- SymFn ---------------------------------------------------------------------------

namespace {

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(parts));
}

Partition scale(const Partition& a, int k) {
  std::vector<int> parts = a.parts();
  for (int& p : parts) p *= k;
  return Partition(std::move(parts));
}

}  // namespace

SymFn SymFn::constant(const Poly& c) { return power_sum(Partition(), c); }

SymFn SymFn::power_sum(const Partition& mu, const Poly& c) {
  SymFn s;
  s.add_term(mu, c);
  return s;
}

SymFn SymFn::h(int n) {
  SymFn s;
  for (const auto& mu : partitions(n)) s.add_term(mu, Poly::constant(BigRat(1) / BigRat(centralizer_order(mu))));
  return s;
}

SymFn SymFn::e(int n) {
  SymFn s;
  for (const auto& mu : partitions(n)) {
    const int sgn = (n - mu.length()) % 2 == 0 ? 1 : -1;
    s.add_term(mu, Poly::constant(BigRat(sgn) / BigRat(centralizer_order(mu))));
  }
  return s;
}

Poly SymFn::coeff(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Poly() : it->second;
}

void SymFn::add_term(const Partition& mu, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mu, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymFn SymFn::homogeneous(int n) const {
  SymFn out;
  for (const auto& [mu, c] : terms_)
    if (mu.size() == n) out.terms_.emplace(mu, c);
  return out;
}

SymFn SymFn::truncated(int cap) const {
  SymFn out;
  for (const auto& [mu, c] : terms_)
    if (mu.size() <= cap) out.terms_.emplace(mu, c);
  return out;
}

bool SymFn::has_constant_term() const { return terms_.count(Partition()) > 0; }

SymFn& SymFn::operator+=(const SymFn& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

SymFn& SymFn::operator-=(const SymFn& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
  return *this;
}

SymFn& SymFn::operator*=(const BigRat& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, c] : terms_) c *= s;
  return *this;
}

SymFn SymFn::multiply(const SymFn& a, const SymFn& b, int cap) {
  SymFn out;
  for (const auto& [mu, c] : a.terms_)
    for (const auto& [nu, d] : b.terms_)
      if (mu.size() + nu.size() <= cap) out.add_term(merge(mu, nu), c * d);
  return out;
}

SymFn SymFn::power_plethysm(int k, const SymFn& g, int cap) {
  SymFn out;
  for (const auto& [mu, c] : g.terms_)
    if (k * mu.size() <= cap) out.add_term(scale(mu, k), c.inflate(static_cast<std::size_t>(k)));
  return out;
}

std::string SymFn::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*p" << mu.to_string();
  }
  return os.str();
}

SymFn ch(const ClassFn& f) {
  SymFn s;
  for (const auto& [mu, v] : f.values()) s.add_term(mu, Poly::constant(v / BigRat(centralizer_order(mu))));
  return s;
}

SymFn ch(const GradedClassFn& f) {
  SymFn s;
  for (const auto& mu : partitions(f.n)) s.add_term(mu, f.at_class(mu) * (BigRat(1) / BigRat(centralizer_order(mu))));
  return s;
}

GradedClassFn ch_inv_graded(const SymFn& s, int n) {
  GradedClassFn out{n, {}};
  for (const auto& [mu, c] : s.terms()) {
    if (mu.size() != n) throw std::invalid_argument("ch_inv: term p" + mu.to_string() + " is not of degree " + std::to_string(n));
    const BigRat z(centralizer_order(mu));
    for (int i = 0; i <= c.degree(); ++i) {
      while (static_cast<int>(out.coeffs.size()) <= i) out.coeffs.emplace_back(n);
      out.coeffs[static_cast<std::size_t>(i)].set(mu, c[static_cast<std::size_t>(i)] * z);
    }
  }
  out.trim();
  return out;
}

ClassFn ch_inv(const SymFn& s, int n) {
  for (const auto& [mu, c] : s.terms())
    if (c.degree() > 0) throw std::invalid_argument("ch_inv: coefficient of p" + mu.to_string() + " depends on t");
  return ch_inv_graded(s, n).coefficient(0);
}

SymFn plethysm(const SymFn& f, const SymFn& g, int cap) {
  if (g.has_constant_term()) throw std::invalid_argument("plethysm: inner function has a constant term");
  int max_part = 0;
  for (const auto& [lambda, c] : f.terms())
    if (!lambda.empty()) max_part = std::max(max_part, lambda[0]);
  std::vector<SymFn> powers(static_cast<std::size_t>(max_part) + 1);
  for (int k = 1; k <= max_part; ++k) powers[static_cast<std::size_t>(k)] = SymFn::power_plethysm(k, g, cap);

  SymFn out;
  for (const auto& [lambda, c] : f.terms()) {
    SymFn prod = SymFn::constant(c);
    for (int part : lambda.parts()) {
      prod = SymFn::multiply(prod, powers[static_cast<std::size_t>(part)], cap);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

// ---- Orlik-Solomon traces ------------------------------------------------------------

namespace {

using Edge = std::pair<int, int>;  // first < second
using Monomial = std::vector<Edge>;
using OSElement = std::map<Monomial, long>;

// Rewrites products of generators into the distinct-maxima basis using
// x_ab x_cb = x_ac x_cb - x_ac x_ab (a < c < b). Only valid when every
// generator lies in a clique, which holds for the disjoint-clique graphs used here.
class Straightener {
 public:
  /// Coefficient of the basis monomial target in the product of the given generators.
  long coefficient(Monomial m, const Monomial& target) {
    const int sign = sort_with_sign(m);
    if (sign == 0) return 0;
    const OSElement& e = expand(m);
    auto it = e.find(target);
    return it == e.end() ? 0 : sign * it->second;
  }

 private:
  static int sort_with_sign(Monomial& m) {
    int sign = 1;
    for (auto& [a, b] : m)
      if (a > b) std::swap(a, b);
    auto key = [](const Edge& e) { return std::pair(e.second, e.first); };
    for (std::size_t i = 1; i < m.size(); ++i)
      for (std::size_t j = i; j > 0 && key(m[j]) < key(m[j - 1]); --j) {
        std::swap(m[j], m[j - 1]);
        sign = -sign;
      }
    for (std::size_t k = 0; k + 1 < m.size(); ++k)
      if (m[k] == m[k + 1]) return 0;
    return sign;
  }

  void add(Monomial m, long c, OSElement& out) {
    const int sign = sort_with_sign(m);
    if (sign == 0) return;
    for (const auto& [mono, v] : expand(m)) {
      auto& slot = out[mono];
      slot += sign * c * v;
      if (slot == 0) out.erase(mono);
    }
  }

  // m sorted, no repeated generator
  const OSElement& expand(const Monomial& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    OSElement res;
    std::size_t k = 0;
    while (k + 1 < m.size() && m[k].second != m[k + 1].second) ++k;
    if (k + 1 >= m.size()) {
      res.emplace(m, 1);
    } else {
      const int a = m[k].first, c = m[k + 1].first, b = m[k].second;
      Monomial m1 = m, m2 = m;
      m1[k] = {a, c};
      m1[k + 1] = {c, b};
      m2[k] = {a, c};
      m2[k + 1] = {a, b};
      add(std::move(m1), 1, res);
      add(std::move(m2), -1, res);
    }
    return memo_.emplace(m, std::move(res)).first->second;
  }

  std::map<Monomial, OSElement> memo_;
};

// Distinct-maxima monomials of the OS algebra of g, grouped by degree.
std::vector<std::vector<Monomial>> os_basis(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<Monomial>> by_degree(static_cast<std::size_t>(n));
  Monomial cur;
  auto rec = [&](auto&& self, int b) -> void {
    if (b == n) {
      by_degree[cur.size()].push_back(cur);
      return;
    }
    self(self, b + 1);
    for (int a = 0; a < b; ++a) {
      if (!g.adjacent(a, b)) continue;
      cur.emplace_back(a, b);
      self(self, b + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return by_degree;
}

// tr(perm | OS^i(g)) for every i.
std::vector<long> os_traces(const std::vector<std::vector<Monomial>>& basis, const std::vector<int>& perm,
                                 Straightener& st) {
  std::vector<long> traces(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const auto& m : basis[i]) {
      Monomial image;
      image.reserve(m.size());
      for (const auto& [a, b] : m) image.emplace_back(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
      traces[i] += st.coefficient(std::move(image), m);
    }
  }
  return traces;
}

std::vector<int> permutation_of_type(const Partition& mu) {
  std::vector<int> perm(static_cast<std::size_t>(mu.size()));
  int start = 0;
  for (int len : mu.parts()) {
    for (int j = 0; j < len; ++j) perm[static_cast<std::size_t>(start + j)] = start + (j + 1) % len;
    start += len;
  }
  return perm;
}

std::mutex os_mu;
std::map<int, std::vector<ClassFn>> os_cache;  // n -> characters by degree

const std::vector<ClassFn>& os_characters(int n) {
  if (n < 1 || n > kOsCharacterMaxN)
    throw std::invalid_argument("os_character: n must lie in [1, " + std::to_string(kOsCharacterMaxN) + "]");
  std::lock_guard lock(os_mu);
  if (auto it = os_cache.find(n); it != os_cache.end()) return it->second;
  const auto basis = os_basis(Graph::complete(n));
  std::vector<ClassFn> chars(static_cast<std::size_t>(n), ClassFn(n));
  Straightener st;
  for (const auto& mu : partitions(n)) {
    const auto traces = os_traces(basis, permutation_of_type(mu), st);
    for (int i = 0; i < n; ++i) chars[static_cast<std::size_t>(i)].set(mu, BigRat(traces[static_cast<std::size_t>(i)]));
  }
  for (int i = 0; i < n; ++i)
    if (chars[static_cast<std::size_t>(i)].dimension() != BigRat(stirling1_unsigned(n, n - i)))
      throw std::logic_error("os_character: basis dimension disagrees with the Stirling number");
  return os_cache.emplace(n, std::move(chars)).first->second;
}

// Solves t^r q(1/t) - q(t) = rhs with deg q < r/2, r > 0.
Poly solve_palindromic(const Poly& rhs, int rank) {
  Poly q;
  for (int k = 0; 2 * k < rank; ++k) q.set(static_cast<std::size_t>(k), -rhs[static_cast<std::size_t>(k)]);
  if (q.reverse(static_cast<std::size_t>(rank)) - q != rhs)
    throw std::logic_error("equivariant KL: functional equation has no solution below half the rank");
  return q;
}

GradedClassFn trivial_graded(int n) { return GradedClassFn{n, {ClassFn::trivial(n)}}; }

}  // namespace

ClassFn os_character(int n, int i) {
  const auto& chars = os_characters(n);
  if (i < 0 || i >= n) return ClassFn(n);
  return chars[static_cast<std::size_t>(i)];
}

GradedClassFn eq_char_poly(int n) {
  const auto& chars = os_characters(n);
  GradedClassFn out{n, std::vector<ClassFn>(static_cast<std::size_t>(n), ClassFn(n))};
  for (int i = 0; i < n; ++i) {
    ClassFn c = chars[static_cast<std::size_t>(i)];
    if (i % 2) c *= BigRat(-1);
    out.coeffs[static_cast<std::size_t>(n - 1 - i)] = c;
  }
  out.trim();
  return out;
}

namespace {

std::mutex sym_mu;
std::vector<SymFn> char_sym_cache;   // index r: ch(eq_char_poly(r)); index 0 unused
std::vector<SymFn> eqkl_sym_cache;   // index k: ch(eqkl_braid(k)); index 0 unused

SymFn char_sym_locked(int n) {
  if (char_sym_cache.empty()) char_sym_cache.emplace_back();
  while (static_cast<int>(char_sym_cache.size()) <= n) {
    const int m = static_cast<int>(char_sym_cache.size());
    SymFn all_h;
    for (int r = 1; r <= m; ++r) all_h += SymFn::h(r);
    const SymFn hm = SymFn::h(m);
    SymFn cm;
    for (const auto& [mu, c] : hm.terms()) cm.add_term(mu, c.shift(static_cast<std::size_t>(m - 1)));
    for (int k = 1; k < m; ++k) cm -= plethysm(char_sym_cache[static_cast<std::size_t>(k)], all_h, m).homogeneous(m);
    char_sym_cache.push_back(std::move(cm));
  }
  return char_sym_cache[static_cast<std::size_t>(n)];
}

SymFn eqkl_sym_locked(int n) {
  if (eqkl_sym_cache.empty()) eqkl_sym_cache.emplace_back();
  while (static_cast<int>(eqkl_sym_cache.size()) <= n) {
    const int m = static_cast<int>(eqkl_sym_cache.size());
    if (m <= 3) {
      eqkl_sym_cache.push_back(SymFn::h(m));
      continue;
    }
    SymFn c_series;
    for (int r = 1; r <= m; ++r) c_series += char_sym_locked(r);
    SymFn rhs;
    for (int k = 1; k < m; ++k) rhs += plethysm(eqkl_sym_cache[static_cast<std::size_t>(k)], c_series, m).homogeneous(m);
    SymFn q;
    for (const auto& mu : partitions(m)) q.add_term(mu, solve_palindromic(rhs.coeff(mu), m - 1));
    eqkl_sym_cache.push_back(std::move(q));
  }
  return eqkl_sym_cache[static_cast<std::size_t>(n)];
}

}  // namespace

SymFn eq_char_poly_sym(int n) {
  if (n < 1) throw std::invalid_argument("eq_char_poly_sym: n must be positive");
  std::lock_guard lock(sym_mu);
  return char_sym_locked(n);
}

GradedClassFn eqkl_braid(int n) {
  if (n < 1 || n > kEqklMaxN) throw std::invalid_argument("eqkl_braid: n must lie in [1, " + std::to_string(kEqklMaxN) + "]");
  SymFn q;
  {
    std::lock_guard lock(sym_mu);
    q = eqkl_sym_locked(n);
  }
  return ch_inv_graded(q, n);
}

GradedClassFn eqkl_braid_bruteforce(int n) {
  if (n < 1 || n > kEqklBruteForceMaxN)
    throw std::invalid_argument("eqkl_braid_bruteforce: n must lie in [1, " + std::to_string(kEqklBruteForceMaxN) + "]");
  if (n <= 3) return trivial_graded(n);

  std::vector<std::vector<int>> group;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do group.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::map<Partition, Poly> rhs;
  for (const auto& lambda : partitions(n)) {
    const int k = lambda.length();
    if (k == n) continue;  // the finest flat carries the unknown
    const GradedClassFn pk = eqkl_braid_bruteforce(k);

    // Representative flat: consecutive blocks of sizes lambda.
    std::vector<int> block_of(static_cast<std::size_t>(n)), first(static_cast<std::size_t>(k));
    Graph gf(n);
    for (int j = 0, start = 0; j < k; start += lambda[static_cast<std::size_t>(j)], ++j) {
      first[static_cast<std::size_t>(j)] = start;
      for (int v = start; v < start + lambda[static_cast<std::size_t>(j)]; ++v) {
        block_of[static_cast<std::size_t>(v)] = j;
        for (int w = start; w < v; ++w) gf.add_edge(w, v);
      }
    }
    const auto basis = os_basis(gf);
    Straightener st;

    std::map<Partition, Poly> acc;
    long stabilizer_order = 0;
    for (const auto& h : group) {
      bool stabilizes = true;
      for (int v = 0; v < n && stabilizes; ++v)
        stabilizes = block_of[static_cast<std::size_t>(h[static_cast<std::size_t>(v)])] ==
                     block_of[static_cast<std::size_t>(h[static_cast<std::size_t>(first[static_cast<std::size_t>(block_of[static_cast<std::size_t>(v)])])])];
      if (!stabilizes) continue;
      ++stabilizer_order;
      std::vector<int> block_perm(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j)
        block_perm[static_cast<std::size_t>(j)] = block_of[static_cast<std::size_t>(h[static_cast<std::size_t>(first[static_cast<std::size_t>(j)])])];
      const auto traces = os_traces(basis, h, st);
      Poly chi;
      for (std::size_t i = 0; i < traces.size(); ++i)
        if (traces[i] != 0) chi.add_to(static_cast<std::size_t>(n - k) - i, BigRat(i % 2 ? -traces[i] : traces[i]));
      const Poly term = chi * pk.at_class(cycle_type(block_perm));
      auto [it, inserted] = acc.emplace(cycle_type(h), term);
      if (!inserted) it->second += term;
    }
    for (const auto& [mu, v] : acc)
      rhs[mu] += v * (BigRat(centralizer_order(mu)) / BigRat(stabilizer_order));
  }

  GradedClassFn out{n, {}};
  for (const auto& mu : partitions(n)) {
    const Poly q = solve_palindromic(rhs[mu], n - 1);
    for (int i = 0; i <= q.degree(); ++i) {
      while (static_cast<int>(out.coeffs.size()) <= i) out.coeffs.emplace_back(n);
      out.coeffs[static_cast<std::size_t>(i)].set(mu, q[static_cast<std::size_t>(i)]);
    }
  }
  out.trim();
  return out;
}

std::map<Partition, BigRat> specht_decompose(const ClassFn& f) {
  std::map<Partition, BigRat> out;
  for (const auto& lambda : partitions(f.n())) {
    const BigRat m = inner_product(f, ClassFn::irreducible(lambda));
    if (m != 0) out.emplace(lambda, m);
  }
  return out;
}

bool row_bound_check(int i, int n) {
  if (i < 1) throw std::invalid_argument("row_bound_check: i must be positive");
  const GradedClassFn p = eqkl_braid(n);
  for (const auto& [lambda, m] : specht_decompose(p.coefficient(i)))
    if (lambda.length() > 2 * i) return false;
  return true;
}

}  // namespace klb
