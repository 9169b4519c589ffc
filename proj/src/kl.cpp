#include "klbraid/kl.hpp"

#include "json.hpp"

#include <fstream>
#include <stdexcept>

namespace klb {

namespace {

std::string to_hex(const std::string& bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::string from_hex(const std::string& hex) {
  if (hex.size() % 2) throw std::invalid_argument("kl cache: odd-length key");
  std::string out;
  for (std::size_t i = 0; i < hex.size(); i += 2) out.push_back(static_cast<char>(std::stoi(hex.substr(i, 2), nullptr, 16)));
  return out;
}

// Reads off the unknown low coefficients from rhs = t^r P(1/t) - P(t), then checks the rest.
ZPoly solve_palindromic_defect(const ZPoly& rhs, int rank) {
  ZPoly p;
  for (int k = 0; 2 * k < rank; ++k) p.set(static_cast<std::size_t>(k), -rhs[static_cast<std::size_t>(k)]);
  if (rank == 0) p = ZPoly::constant(1);
  const ZPoly check = p.reverse(static_cast<std::size_t>(rank)) - p;
  if (check != rhs) throw std::logic_error("KL recursion: functional equation has no solution below half the rank");
  return p;
}

}  // namespace

std::optional<ZPoly> KLTable::find(const std::string& key) const {
  std::lock_guard lock(mu_);
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  return std::nullopt;
}

ZPoly KLTable::insert(const std::string& key, const ZPoly& p) {
  std::lock_guard lock(mu_);
  return entries_.emplace(key, p).first->second;
}

std::size_t KLTable::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

void KLTable::load(const std::filesystem::path& dir) {
  std::ifstream in(dir / "kltable.jsonl");
  if (!in) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    std::vector<BigInt> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    const auto key = j.at("key").get<std::string>();
    insert(key.rfind("braid:", 0) == 0 ? key : from_hex(key), ZPoly(std::move(coeffs)));
  }
}

void KLTable::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  const auto tmp = dir / "kltable.jsonl.tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("kl cache: cannot write " + tmp.string());
    std::lock_guard lock(mu_);
    for (const auto& [key, p] : entries_) {
      nlohmann::json j;
      j["key"] = key.rfind("braid:", 0) == 0 ? key : to_hex(key);
      j["coeffs"] = nlohmann::json::array();
      for (const auto& c : p.coeffs()) j["coeffs"].push_back(c.get_str());
      out << j.dump() << '\n';
    }
  }
  std::filesystem::rename(tmp, dir / "kltable.jsonl");
}

KLTable& default_kl_table() {
  static KLTable table;
  return table;
}

ZPoly braid_char_poly(int m) {
  ZPoly p = ZPoly::constant(1);
  for (int k = 1; k < m; ++k) p *= ZPoly{BigInt(-k), BigInt(1)};
  return p;
}

namespace {

// Accumulates sum over partitions lambda of n with l(lambda) = k of
// count(lambda) * prod_j chi_{lambda_j}(t) into by_length[k], sharing prefix products.
void accumulate_types(int remaining, int max_part, std::vector<int>& parts, const ZPoly& prefix,
                      std::vector<ZPoly>& by_length, const std::vector<ZPoly>& chi) {
  if (remaining == 0) {
    by_length[parts.size()] += prefix * set_partition_count_by_type(Partition(parts));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    parts.push_back(p);
    accumulate_types(remaining - p, p, parts, p == 1 ? prefix : prefix * chi[static_cast<std::size_t>(p)], by_length, chi);
    parts.pop_back();
  }
}

// sum over non-finest flats of M_n of chi_{M_F} P_{M^F}, grouped by partition type.
ZPoly braid_rhs(int n, KLTable& table, bool include_finest, const ZPoly* top) {
  std::vector<ZPoly> chi(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) chi[static_cast<std::size_t>(m)] = braid_char_poly(m);
  std::vector<ZPoly> by_length(static_cast<std::size_t>(n) + 1);
  std::vector<int> parts;
  accumulate_types(n, n, parts, ZPoly::constant(1), by_length, chi);
  ZPoly rhs;
  for (int k = 1; k < n; ++k) rhs += by_length[static_cast<std::size_t>(k)] * kl_braid(k, table);
  if (include_finest) rhs += by_length[static_cast<std::size_t>(n)] * *top;
  return rhs;
}

ZPoly kl_connected(const Graph& g, KLTable& table);

ZPoly graph_rhs(const Graph& g, KLTable& table, const ZPoly* top) {
  ZPoly rhs;
  const int n = g.num_vertices();
  for (const auto& pi : connected_partitions(g)) {
    if (pi.num_blocks() == n) {
      if (top) rhs += *top;
      continue;
    }
    ZPoly chi = ZPoly::constant(1);
    for (const auto& block : localize(g, pi)) {
      if (block.num_vertices() > 1) chi *= char_poly(block);
    }
    rhs += chi * kl_connected(contract(g, pi), table);
  }
  return rhs;
}

ZPoly kl_connected(const Graph& g, KLTable& table) {
  const int n = g.num_vertices();
  if (g.is_complete()) return kl_braid(std::max(n, 1), table);
  const CanonicalKey key = canonical_key(g);
  if (key.canonical) {
    if (auto hit = table.find(key.bytes)) return *hit;
  }
  const ZPoly rhs = graph_rhs(g, table, nullptr);
  const ZPoly p = solve_palindromic_defect(rhs, n - 1);
  return key.canonical ? table.insert(key.bytes, p) : p;
}

}  // namespace

ZPoly kl_braid(int n, KLTable& table) {
  if (n < 1) throw std::invalid_argument("kl_braid: n must be positive");
  const std::string key = KLTable::braid_key(n);
  if (auto hit = table.find(key)) return *hit;
  if (n <= 2) return table.insert(key, ZPoly::constant(1));
  const ZPoly rhs = braid_rhs(n, table, false, nullptr);
  return table.insert(key, solve_palindromic_defect(rhs, n - 1));
}

ZPoly kl_graphic(const Graph& gamma, KLTable& table) {
  if (!gamma.is_connected()) throw std::invalid_argument("kl_graphic: graph is disconnected; factor over its components");
  if (gamma.num_vertices() == 0) return ZPoly::constant(1);
  if (!gamma.is_complete() && gamma.num_vertices() > kCanonicalKeyMaxVertices)
    throw std::invalid_argument("kl_graphic: more than 12 vertices on the general path");
  return kl_connected(gamma, table);
}

ZPoly kl_residual(const Graph& gamma, const ZPoly& p, KLTable& table) {
  if (!gamma.is_connected()) throw std::invalid_argument("kl_residual: graph is disconnected");
  const int n = gamma.num_vertices();
  const ZPoly lhs = p.reverse(static_cast<std::size_t>(std::max(n - 1, 0)));
  if (gamma.is_complete() && n > 8) return lhs - braid_rhs(n, table, true, &p);
  return lhs - graph_rhs(gamma, table, &p);
}

BigInt d_coeff(int i, int n) {
  if (i < 0) return 0;
  return kl_braid(n)[static_cast<std::size_t>(i)];
}

BigInt c1_count(const Graph& gamma) {
  if (!gamma.is_connected()) throw std::invalid_argument("c1_count: graph is disconnected");
  return count_connected_bipartitions(gamma) - gamma.num_edges();
}

BigInt d_coeff_graph(const Graph& gamma, int i, int n) {
  if (i < 0) return 0;
  const Graph g = cone_extend(gamma, n);
  if (g.num_vertices() == 0) return i == 0 ? 1 : 0;
  if (g.is_complete()) return d_coeff(i, g.num_vertices());
  if (i == 0) return 1;
  if (!g.is_connected()) {
    ZPoly p = ZPoly::constant(1);
    for (VertexMask comp : g.components()) p *= kl_graphic(g.induced(comp));
    return p[static_cast<std::size_t>(i)];
  }
  if (2 * i >= g.num_vertices() - 1) return 0;
  if (i == 1) return c1_count(g);
  return kl_graphic(g)[static_cast<std::size_t>(i)];
}

ConjectureReport conjecture_top_check(int i) {
  if (i < 1) throw std::invalid_argument("conjecture_top_check: i must be positive");
  ConjectureReport r;
  r.i = i;
  r.computed = d_coeff(i - 1, 2 * i);
  BigInt power = 1;
  for (int k = 0; k < i - 2; ++k) power *= 2 * i - 1;  // (2i-1)^{i-2}; the i = 1 case has base 1
  r.predicted = double_factorial_odd(2 * i - 3) * power;
  r.equal = r.computed == r.predicted;
  return r;
}

}  // namespace klb
