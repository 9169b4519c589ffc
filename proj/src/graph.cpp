#include "klbraid/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klb {

namespace {

VertexMask bit(int v) { return VertexMask{1} << v; }

int lowest(VertexMask m) { return std::countr_zero(m); }

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("Graph: vertex count out of range");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::star(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

int Graph::num_edges() const {
  int e = 0;
  for (auto m : adj_) e += std::popcount(m);
  return e / 2;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("Graph: edge endpoint out of range");
  if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<VertexMask> Graph::components(VertexMask within) const {
  std::vector<VertexMask> out;
  VertexMask left = within;
  while (left) {
    VertexMask reach = bit(lowest(left));
    VertexMask frontier = reach;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= adj_[static_cast<std::size_t>(lowest(f))];
      next &= within & ~reach;
      reach |= next;
      frontier = next;
    }
    out.push_back(reach);
    left &= ~reach;
  }
  return out;
}

bool Graph::is_connected(VertexMask within) const {
  if (!within) return true;
  VertexMask reach = bit(lowest(within));
  VertexMask frontier = reach;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= adj_[static_cast<std::size_t>(lowest(f))];
    next &= within & ~reach;
    reach |= next;
    frontier = next;
  }
  return reach == within;
}

Graph Graph::induced(VertexMask vertices) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  int k = 0;
  for (VertexMask m = vertices; m; m &= m - 1) index[static_cast<std::size_t>(lowest(m))] = k++;
  Graph g(k);
  for (VertexMask m = vertices; m; m &= m - 1) {
    const int u = lowest(m);
    for (VertexMask nb = adj_[static_cast<std::size_t>(u)] & vertices; nb; nb &= nb - 1) {
      const int v = lowest(nb);
      if (u < v) g.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    }
  }
  return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  Graph g(n_);
  for (auto [u, v] : edges()) g.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return g;
}

Graph parse_graph(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("graph JSON: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) throw std::invalid_argument("graph JSON: missing integer \"n\"");
    Graph g(j["n"].get<int>());
    if (j.contains("edges")) {
      for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph JSON: edges must be [u, v] pairs");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
      }
    }
    return g;
  }
  // Plain text: optional "n K" header, then "u v" per line; '#' starts a comment.
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    if (auto c = line.find('#'); c != std::string::npos) line.resize(c);
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a)) continue;
    if (!(ls >> b)) throw std::invalid_argument("graph text: expected two fields per line");
    if (a == "n") {
      n = std::stoi(b);
      continue;
    }
    edges.emplace_back(std::stoi(a), std::stoi(b));
  }
  if (n < 0) {
    n = 0;
    for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
  }
  return Graph(n, edges);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::vector<std::vector<int>> SetPartition::block_lists() const {
  std::vector<std::vector<int>> out;
  for (auto b : blocks) {
    std::vector<int> vs;
    for (VertexMask m = b; m; m &= m - 1) vs.push_back(lowest(m));
    out.push_back(std::move(vs));
  }
  return out;
}

Graph cone_extend(const Graph& gamma, int n) {
  const int base = gamma.num_vertices();
  Graph g(base + n);
  for (auto [u, v] : gamma.edges()) g.add_edge(u, v);
  for (int e = base; e < base + n; ++e)
    for (int w = 0; w < e; ++w) g.add_edge(w, e);
  return g;
}

namespace {

void connected_partitions_rec(const Graph& g, VertexMask remaining, std::optional<int> target, std::vector<VertexMask>& cur,
                              std::vector<SetPartition>& out) {
  if (!remaining) {
    if (!target || static_cast<int>(cur.size()) == *target) out.push_back(SetPartition{cur});
    return;
  }
  if (target) {
    const int used = static_cast<int>(cur.size());
    if (used + 1 > *target || used + std::popcount(remaining) < *target) return;
  }
  const VertexMask v = remaining & (~remaining + 1);
  const VertexMask rest = remaining & ~v;
  // Submasks of `rest` in increasing order.
  VertexMask sub = 0;
  while (true) {
    const VertexMask block = v | sub;
    if (g.is_connected(block)) {
      cur.push_back(block);
      connected_partitions_rec(g, remaining & ~block, target, cur, out);
      cur.pop_back();
    }
    if (sub == rest) break;
    sub = (sub - rest) & rest;
  }
}

}  // namespace

std::vector<SetPartition> connected_partitions(const Graph& gamma, std::optional<int> num_blocks) {
  std::vector<SetPartition> out;
  std::vector<VertexMask> cur;
  if (gamma.num_vertices() == 0) {
    if (!num_blocks || *num_blocks == 0) out.push_back(SetPartition{});
    return out;
  }
  connected_partitions_rec(gamma, gamma.all_vertices(), num_blocks, cur, out);
  return out;
}

BigInt count_connected_bipartitions(const Graph& gamma) {
  const int n = gamma.num_vertices();
  if (n > 32) throw std::invalid_argument("count_connected_bipartitions: more than 32 vertices");
  if (n < 2) return 0;
  const VertexMask all = gamma.all_vertices();
  const VertexMask rest = all & ~VertexMask{1};
  std::uint64_t count = 0;
  // Blocks S contain vertex 0; S ranges over {0} | sub with sub a proper submask of rest.
  for (VertexMask sub = 0; sub < rest; sub = (sub - rest) & rest) {
    const VertexMask s = sub | 1;
    if (gamma.is_connected(s) && gamma.is_connected(all & ~s)) ++count;
  }
  return BigInt(static_cast<unsigned long>(count));
}

namespace {

constexpr int kChromaticMaxVertices = 20;

// Chromatic polynomial of a graph with at most kChromaticMaxVertices vertices via
// partitions into independent sets: P(t) = sum_k a_k t(t-1)...(t-k+1).
ZPoly chromatic(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kChromaticMaxVertices) throw std::invalid_argument("char_poly: graph too large for the subset recursion");
  const std::size_t full = std::size_t{1} << n;
  std::vector<char> independent(full, 1);
  for (std::size_t s = 1; s < full; ++s) {
    const auto m = static_cast<VertexMask>(s);
    const int v = lowest(m);
    const VertexMask rest = m & (m - 1);
    independent[s] = independent[static_cast<std::size_t>(rest)] && !(g.neighbors(v) & rest);
  }
  std::vector<std::vector<std::int64_t>> f(full);
  f[0] = {1};
  for (std::size_t s = 1; s < full; ++s) {
    const auto m = static_cast<VertexMask>(s);
    const VertexMask v = m & (~m + 1);
    const VertexMask rest = m & ~v;
    std::vector<std::int64_t> acc(static_cast<std::size_t>(std::popcount(m)) + 1, 0);
    VertexMask sub = rest;
    while (true) {
      const VertexMask indep = v | sub;
      if (independent[static_cast<std::size_t>(indep)]) {
        const auto& prev = f[static_cast<std::size_t>(m & ~indep)];
        for (std::size_t k = 0; k < prev.size(); ++k) acc[k + 1] += prev[k];
      }
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
    f[s] = std::move(acc);
  }
  ZPoly result;
  ZPoly falling = ZPoly::constant(1);
  const auto& a = f[full - 1];
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k]) result += falling * BigInt(static_cast<long>(a[k]));
    falling *= ZPoly{BigInt(-static_cast<long>(k)), BigInt(1)};
  }
  return result;
}

struct CharPolyCache {
  std::mutex mu;
  std::map<std::string, ZPoly> values;
};

CharPolyCache& char_poly_cache() {
  static CharPolyCache cache;
  return cache;
}

ZPoly connected_char_poly(const Graph& g) {
  const int n = g.num_vertices();
  if (g.is_complete()) {
    ZPoly p = ZPoly::constant(1);
    for (int k = 1; k < n; ++k) p *= ZPoly{BigInt(-k), BigInt(1)};
    return p;
  }
  const CanonicalKey key = canonical_key(g);
  if (key.canonical) {
    auto& cache = char_poly_cache();
    std::lock_guard lock(cache.mu);
    if (auto it = cache.values.find(key.bytes); it != cache.values.end()) return it->second;
  }
  ZPoly chrom = chromatic(g);
  // Divide by t: the constant term of a chromatic polynomial with n >= 1 vanishes.
  ZPoly reduced(std::vector<BigInt>(chrom.coeffs().begin() + 1, chrom.coeffs().end()));
  if (key.canonical) {
    auto& cache = char_poly_cache();
    std::lock_guard lock(cache.mu);
    cache.values.emplace(key.bytes, reduced);
  }
  return reduced;
}

}  // namespace

ZPoly char_poly(const Graph& gamma) {
  ZPoly p = ZPoly::constant(1);
  for (VertexMask comp : gamma.components()) p *= connected_char_poly(gamma.induced(comp));
  return p;
}

std::vector<Graph> localize(const Graph& gamma, const SetPartition& pi) {
  std::vector<Graph> out;
  for (auto b : pi.blocks) {
    if (!gamma.is_connected(b)) throw std::invalid_argument("localize: block does not induce a connected subgraph");
    out.push_back(gamma.induced(b));
  }
  return out;
}

Graph contract(const Graph& gamma, const SetPartition& pi) {
  const int n = gamma.num_vertices();
  std::vector<int> block_of(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < pi.blocks.size(); ++b) {
    if (!gamma.is_connected(pi.blocks[b])) throw std::invalid_argument("contract: block does not induce a connected subgraph");
    for (VertexMask m = pi.blocks[b]; m; m &= m - 1) block_of[static_cast<std::size_t>(lowest(m))] = static_cast<int>(b);
  }
  for (int v : block_of) {
    if (v < 0) throw std::invalid_argument("contract: partition does not cover the vertex set");
  }
  Graph q(pi.num_blocks());
  for (auto [u, v] : gamma.edges()) {
    const int bu = block_of[static_cast<std::size_t>(u)];
    const int bv = block_of[static_cast<std::size_t>(v)];
    if (bu != bv) q.add_edge(bu, bv);
  }
  return q;
}

namespace {

// Stable colour refinement; colours are ranks of canonical signatures.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  int num_colours = n ? 1 : 0;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      for (VertexMask m = g.neighbors(v); m; m &= m - 1) s.push_back(colour[static_cast<std::size_t>(lowest(m))]);
      std::sort(s.begin(), s.end());
      s.insert(s.begin(), colour[static_cast<std::size_t>(v)]);
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      colour[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) - distinct.begin());
    if (static_cast<int>(distinct.size()) == num_colours) break;
    num_colours = static_cast<int>(distinct.size());
  }
  return colour;
}

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::vector<int> colour) : g_(g), n_(g.num_vertices()), colour_(std::move(colour)) {
    std::vector<int> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return colour_[static_cast<std::size_t>(a)] < colour_[static_cast<std::size_t>(b)]; });
    for (int v : order) slot_colour_.push_back(colour_[static_cast<std::size_t>(v)]);
  }

  std::vector<char> run() {
    chosen_.clear();
    code_.clear();
    search(0);
    return best_;
  }

 private:
  bool twins(int u, int v) const { return (g_.neighbors(u) & ~bit(v)) == (g_.neighbors(v) & ~bit(u)); }

  void search(int pos) {
    if (pos == n_) {
      if (best_.empty() || code_ > best_) best_ = code_;
      return;
    }
    const int want = slot_colour_[static_cast<std::size_t>(pos)];
    std::vector<int> tried;
    for (int v = 0; v < n_; ++v) {
      if (colour_[static_cast<std::size_t>(v)] != want || (used_ >> v) & 1U) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(u, v); })) continue;
      tried.push_back(v);

      const std::size_t row_start = code_.size();
      for (int j = 0; j < pos; ++j) code_.push_back(g_.adjacent(v, chosen_[static_cast<std::size_t>(j)]) ? 1 : 0);
      // The best code may have changed since the parent compared, so compare the whole prefix.
      const bool prune = !best_.empty() && std::lexicographical_compare(code_.begin(), code_.end(), best_.begin(),
                                                                        best_.begin() + static_cast<std::ptrdiff_t>(code_.size()));
      if (!prune) {
        chosen_.push_back(v);
        used_ |= bit(v);
        search(pos + 1);
        used_ &= ~bit(v);
        chosen_.pop_back();
      }
      code_.resize(row_start);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> slot_colour_;
  std::vector<int> chosen_;
  VertexMask used_ = 0;
  std::vector<char> code_;
  std::vector<char> best_;
};

std::string pack_code(int n, const std::vector<char>& bits) {
  std::string out(1, static_cast<char>(n));
  char byte = 0;
  int filled = 0;
  for (char b : bits) {
    byte = static_cast<char>((byte << 1) | b);
    if (++filled == 8) {
      out.push_back(byte);
      byte = 0;
      filled = 0;
    }
  }
  if (filled) out.push_back(static_cast<char>(byte << (8 - filled)));
  return out;
}

}  // namespace

CanonicalKey canonical_key(const Graph& gamma) {
  const int n = gamma.num_vertices();
  if (n > kCanonicalKeyMaxVertices) {
    std::vector<char> bits;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) bits.push_back(gamma.adjacent(i, j) ? 1 : 0);
    return {pack_code(n, bits), false};
  }
  CanonicalSearch search(gamma, refine_colours(gamma));
  return {pack_code(n, search.run()), true};
}

BigInt conf_betti(const Graph& gamma, int i) {
  if (i < 0) return 0;
  const ZPoly chi = char_poly(gamma);
  const int r = chi.degree();
  if (i > r) return 0;
  return abs(chi[static_cast<std::size_t>(r - i)]);
}

}  // namespace klb
