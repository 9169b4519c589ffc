#include "klbraid/fsmod.hpp"

#include "klbraid/combinat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klb {

Surjection::Surjection(std::vector<int> values, int m) : values_(std::move(values)), m_(m) {
  if (m < 1 || static_cast<int>(values_.size()) < m) throw std::invalid_argument("Surjection: need 1 <= m <= n");
  std::vector<bool> hit(static_cast<std::size_t>(m) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > m) throw std::invalid_argument("Surjection: value " + std::to_string(v) + " outside [" + std::to_string(m) + "]");
    hit[static_cast<std::size_t>(v)] = true;
  }
  if (std::count(hit.begin() + 1, hit.end(), true) != m) throw std::invalid_argument("Surjection: map is not onto");
}

Surjection Surjection::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) v[static_cast<std::size_t>(x - 1)] = x;
  return Surjection(std::move(v), n);
}

std::vector<int> Surjection::fiber(int k) const {
  std::vector<int> out;
  for (int x = 1; x <= source(); ++x)
    if ((*this)(x) == k) out.push_back(x);
  return out;
}

std::string Surjection::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t x = 0; x < values_.size(); ++x) os << (x ? "," : "") << values_[x];
  os << "]->[" << m_ << "]";
  return os.str();
}

Surjection compose(const Surjection& f, const Surjection& g) {
  if (g.target() != f.source()) throw std::invalid_argument("compose: target of g must equal source of f");
  std::vector<int> v;
  for (int x = 1; x <= g.source(); ++x) v.push_back(f(g(x)));
  return Surjection(std::move(v), f.target());
}

std::vector<Surjection> enumerate_surjections(int n, int m) {
  std::vector<Surjection> out;
  if (m < 1 || m > n) return out;
  std::vector<int> v(static_cast<std::size_t>(n), 1);
  std::vector<int> count(static_cast<std::size_t>(m) + 1, 0);
  count[1] = n;
  int covered = 1;
  while (true) {
    if (covered == m) out.emplace_back(v, m);
    // odometer increment on the last coordinate
    int pos = n - 1;
    while (pos >= 0 && v[static_cast<std::size_t>(pos)] == m) {
      if (--count[static_cast<std::size_t>(m)] == 0) --covered;
      if (count[1]++ == 0) ++covered;
      v[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    int& cell = v[static_cast<std::size_t>(pos)];
    if (--count[static_cast<std::size_t>(cell)] == 0) --covered;
    ++cell;
    if (count[static_cast<std::size_t>(cell)]++ == 0) ++covered;
  }
  return out;
}

BigInt hom_fs_count(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("hom_fs_count: negative size");
  const BigInt count = factorial(m) * stirling2(n, m);
  BigInt bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
  if (count > bound) throw std::logic_error("hom_fs_count: surjection count exceeds m^n");
  return count;
}

H1Vector H1Vector::basis(int n, int i, int j) {
  H1Vector v{n, {}};
  v.add(i, j, 1);
  return v;
}

void H1Vector::add(int i, int j, const BigRat& c) {
  if (i == j || i < 1 || j < 1 || i > n || j > n) throw std::invalid_argument("H1Vector: invalid pair");
  if (i > j) std::swap(i, j);
  auto [it, inserted] = coords.emplace(std::pair{i, j}, c);
  if (!inserted) it->second += c;
  if (it->second == 0) coords.erase(it);
}

BigRat H1Vector::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = coords.find({i, j});
  return it == coords.end() ? BigRat(0) : it->second;
}

std::string H1Vector::to_string() const {
  if (coords.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ij, c] : coords) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const BigRat a = abs(c);
    if (a != 1) os << a << "*";
    os << "e" << ij.first << ij.second;
  }
  return os.str();
}

H1Vector operator+(const H1Vector& a, const H1Vector& b) {
  if (a.n != b.n) throw std::invalid_argument("H1Vector: adding vectors on different sets");
  H1Vector out = a;
  for (const auto& [ij, c] : b.coords) out.add(ij.first, ij.second, c);
  return out;
}

H1Vector h1_pullback(const Surjection& f, const H1Vector& v) {
  if (v.n != f.target()) throw std::invalid_argument("h1_pullback: vector lives on the wrong set");
  H1Vector out{f.source(), {}};
  for (const auto& [kl, c] : v.coords)
    for (int i : f.fiber(kl.first))
      for (int j : f.fiber(kl.second)) out.add(i, j, c);
  return out;
}

GenerationReport h1_generation_check(int n) {
  if (n < 2) throw std::invalid_argument("h1_generation_check: n must be at least 2");
  GenerationReport r;
  r.n = n;
  r.expected = n * (n - 1) / 2;

  // Row-echelon basis, each row keyed by its pivot pair.
  std::map<std::pair<int, int>, H1Vector> echelon;
  const H1Vector e12 = H1Vector::basis(2, 1, 2);
  for (const auto& f : enumerate_surjections(n, 2)) {
    const H1Vector image = h1_pullback(f, e12);
    H1Vector w = image;
    while (!w.coords.empty()) {
      const auto [pivot, lead] = *w.coords.begin();
      auto it = echelon.find(pivot);
      if (it == echelon.end()) break;
      const BigRat factor = lead / it->second.coords.begin()->second;
      for (const auto& [ij, c] : it->second.coords) w.add(ij.first, ij.second, -factor * c);
    }
    if (w.coords.empty()) continue;
    const auto pivot = w.coords.begin()->first;
    echelon.emplace(pivot, std::move(w));
    r.witnesses.push_back(f);
    r.images.push_back(image);
    if (static_cast<int>(echelon.size()) == r.expected) break;
  }
  r.rank = static_cast<int>(echelon.size());
  r.generated = r.rank == r.expected;
  return r;
}

GrowthReport growth_diagnostic(const SeqTable& dims, int d) {
  if (dims.values.size() < 6) throw std::invalid_argument("growth_diagnostic: at least 6 terms are required");
  if (d < 1) throw std::invalid_argument("growth_diagnostic: d must be positive");
  GrowthReport r;
  for (int n = dims.start; n < dims.end(); ++n) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(std::max(n, 0)));
    r.ratios.push_back(dims.at(n) / BigRat(scale));
  }
  const std::size_t len = r.ratios.size();

  bool decreasing = true;
  for (std::size_t k = 1; k < len; ++k) decreasing = decreasing && r.ratios[k] < r.ratios[k - 1];
  if (decreasing) {
    r.verdict = "monotone decreasing over window";
    return r;
  }

  // Stabilizing: |differences| never grow over the second half of the window and end smaller.
  std::vector<BigRat> diffs;
  for (std::size_t k = 1; k < len; ++k) diffs.push_back(r.ratios[k] - r.ratios[k - 1]);
  const std::size_t from = diffs.size() / 2;
  bool shrinking = true;
  for (std::size_t k = from + 1; k < diffs.size(); ++k) shrinking = shrinking && abs(diffs[k]) <= abs(diffs[k - 1]);
  const bool all_zero = std::all_of(diffs.begin() + static_cast<std::ptrdiff_t>(from), diffs.end(), [](const BigRat& x) { return x == 0; });
  shrinking = shrinking && (all_zero || abs(diffs.back()) < abs(diffs[from]));
  if (!shrinking) {
    r.verdict = "inconclusive";
    return r;
  }
  // Aitken extrapolation from the last three ratios.
  const BigRat& a = r.ratios[len - 3];
  const BigRat& b = r.ratios[len - 2];
  const BigRat& c = r.ratios[len - 1];
  const BigRat second = c - 2 * b + a;
  r.limit_estimate = second == 0 ? c : BigRat(c - (c - b) * (c - b) / second);
  r.verdict = "stabilizing toward " + r.limit_estimate->get_str();
  return r;
}

}  // namespace klb
