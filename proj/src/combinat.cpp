#include "klbraid/combinat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace klb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

int Partition::multiplicity(int r) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), r));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // Reverse lexicographic within a degree: (3) before (2,1) before (1,1,1).
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                a.parts_.end());
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

// Lower-triangular table of big integers grown on demand; rows are appended
// under the lock so concurrent readers see identical values.
class TriangleTable {
 public:
  using Row = std::function<void(std::vector<std::vector<BigInt>>&, int)>;
  explicit TriangleTable(Row extend) : extend_(std::move(extend)) {}

  BigInt get(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::lock_guard lock(mu_);
    while (static_cast<int>(rows_.size()) <= n) extend_(rows_, static_cast<int>(rows_.size()));
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<BigInt>> rows_;
  Row extend_;
};

TriangleTable& stirling2_table() {
  static TriangleTable table([](std::vector<std::vector<BigInt>>& rows, int n) {
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
    if (n == 0) {
      row[0] = 1;
    } else {
      const auto& prev = rows[static_cast<std::size_t>(n) - 1];
      for (int k = 1; k <= n; ++k) {
        BigInt v = 0;
        if (k <= n - 1) v = k * prev[static_cast<std::size_t>(k)];
        v += prev[static_cast<std::size_t>(k) - 1];
        row[static_cast<std::size_t>(k)] = v;
      }
    }
    rows.push_back(std::move(row));
  });
  return table;
}

TriangleTable& stirling1_table() {
  static TriangleTable table([](std::vector<std::vector<BigInt>>& rows, int n) {
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
    if (n == 0) {
      row[0] = 1;
    } else {
      const auto& prev = rows[static_cast<std::size_t>(n) - 1];
      for (int k = 1; k <= n; ++k) {
        BigInt v = 0;
        if (k <= n - 1) v = (n - 1) * prev[static_cast<std::size_t>(k)];
        v += prev[static_cast<std::size_t>(k) - 1];
        row[static_cast<std::size_t>(k)] = v;
      }
    }
    rows.push_back(std::move(row));
  });
  return table;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt stirling2(int n, int k) { return stirling2_table().get(n, k); }

BigInt stirling1_unsigned(int n, int k) { return stirling1_table().get(n, k); }

BigInt bell(int n) {
  BigInt s = 0;
  for (int k = 0; k <= n; ++k) s += stirling2(n, k);
  return s;
}

BigInt double_factorial_odd(int m) {
  if (m < -1 || m % 2 == 0) throw std::invalid_argument("double_factorial_odd: argument must be odd and >= -1");
  BigInt r = 1;
  for (int j = m; j > 1; j -= 2) r *= j;
  return r;
}

BigInt set_partition_count_by_type(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("set_partition_count_by_type: empty partition");
  BigInt den = 1;
  for (int p : lambda.parts()) den *= factorial(p);
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    den *= factorial(static_cast<int>(j - i));
    i = j;
  }
  return factorial(lambda.size()) / den;
}

BigInt centralizer_order(const Partition& mu) {
  BigInt z = 1;
  const auto& parts = mu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const int m = static_cast<int>(j - i);
    BigInt rm;
    mpz_ui_pow_ui(rm.get_mpz_t(), static_cast<unsigned long>(parts[i]), static_cast<unsigned long>(m));
    z *= rm * factorial(m);
    i = j;
  }
  return z;
}

BigInt class_size(const Partition& mu) { return factorial(mu.size()) / centralizer_order(mu); }

namespace {

// Beta-set (first column hook lengths) of a partition padded to `len` beads.
std::vector<int> beta_set(const Partition& lambda) {
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int j = 0; j < len; ++j) beta[static_cast<std::size_t>(j)] = lambda[static_cast<std::size_t>(j)] + (len - 1 - j);
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int j = 0; j < len; ++j) {
    const int p = beta[static_cast<std::size_t>(j)] - (len - 1 - j);
    if (p > 0) parts.push_back(p);
  }
  return Partition(std::move(parts));
}

struct MnCache {
  std::mutex mu;
  std::map<std::pair<Partition, Partition>, BigInt> values;
};

MnCache& mn_cache() {
  static MnCache cache;
  return cache;
}

BigInt mn_rec(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return 1;
  auto key = std::make_pair(lambda, mu);
  {
    auto& cache = mn_cache();
    std::lock_guard lock(cache.mu);
    if (auto it = cache.values.find(key); it != cache.values.end()) return it->second;
  }
  const int k = mu[0];
  Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
  std::vector<int> beta = beta_set(lambda);
  BigInt total = 0;
  for (std::size_t b = 0; b < beta.size(); ++b) {
    const int from = beta[b];
    const int to = from - k;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    // Border-strip height = number of beads strictly between the two positions.
    int between = 0;
    for (int x : beta) {
      if (x > to && x < from) ++between;
    }
    std::vector<int> moved = beta;
    moved[b] = to;
    BigInt v = mn_rec(from_beta_set(std::move(moved)), rest);
    if (between % 2) total -= v;
    else total += v;
  }
  auto& cache = mn_cache();
  std::lock_guard lock(cache.mu);
  cache.values.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("mn_character: size mismatch");
  return mn_rec(lambda, mu);
}

Partition cycle_type(std::span<const int> perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> parts;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

}  // namespace klb
