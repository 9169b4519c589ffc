#pragma once

// Simple graphs, cone extensions, graphic-matroid flats (connected set partitions),
// characteristic polynomials and canonical labelings.

#include "klbraid/poly.hpp"

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace klb {

using VertexMask = std::uint64_t;

/// Simple undirected graph on vertices 0..n-1 (n <= 64).
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph star(int n);  // vertex 0 joined to 1..n-1

  int num_vertices() const { return n_; }
  int num_edges() const;
  /// Throws std::invalid_argument on loops or out-of-range endpoints; duplicate edges are ignored.
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexMask all_vertices() const { return n_ == 64 ? ~VertexMask{0} : ((VertexMask{1} << n_) - 1); }
  std::vector<std::pair<int, int>> edges() const;

  bool is_complete() const { return num_edges() == n_ * (n_ - 1) / 2; }
  /// Connected components as vertex masks, ordered by minimum vertex.
  std::vector<VertexMask> components(VertexMask within) const;
  std::vector<VertexMask> components() const { return components(all_vertices()); }
  bool is_connected(VertexMask within) const;
  bool is_connected() const { return n_ <= 1 || is_connected(all_vertices()); }
  /// Rank of the graphic matroid: n - #components.
  int rank() const { return n_ - static_cast<int>(components().size()); }

  /// Subgraph induced on the given vertices, relabeled in increasing order.
  Graph induced(VertexMask vertices) const;
  Graph relabeled(const std::vector<int>& perm) const;  // vertex v becomes perm[v]

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexMask> adj_;
};

/// Reads {"n": k, "edges": [[u,v],...]} JSON, or plain "u v" lines (first line may be "n k").
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);

/// Set partition of the vertex set; blocks sorted by their minimum element.
struct SetPartition {
  std::vector<VertexMask> blocks;

  int num_blocks() const { return static_cast<int>(blocks.size()); }
  std::vector<std::vector<int>> block_lists() const;
  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

/// Gamma with n new vertices adjacent to every other vertex, including each other.
Graph cone_extend(const Graph& gamma, int n);

/// Vertex partitions whose blocks induce connected subgraphs, optionally restricted
/// to a fixed number of blocks.
std::vector<SetPartition> connected_partitions(const Graph& gamma, std::optional<int> num_blocks = std::nullopt);
/// Number of connected two-block partitions (subset scan, no materialization).
BigInt count_connected_bipartitions(const Graph& gamma);

/// Reduced characteristic polynomial: chromatic polynomial / t^{#components}.
ZPoly char_poly(const Graph& gamma);

/// Induced subgraphs on the blocks. Throws std::invalid_argument if a block is disconnected.
std::vector<Graph> localize(const Graph& gamma, const SetPartition& pi);
/// Simple quotient graph on the blocks. Throws std::invalid_argument if a block is disconnected.
Graph contract(const Graph& gamma, const SetPartition& pi);

struct CanonicalKey {
  std::string bytes;
  bool canonical = true;  // false past the brute-force bound (identity labeling)
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

constexpr int kCanonicalKeyMaxVertices = 12;

/// Isomorphism-invariant encoding: lexicographically maximal adjacency code over all
/// labelings consistent with colour refinement.
CanonicalKey canonical_key(const Graph& gamma);

/// dim H^i(Conf(gamma)): the unsigned coefficient of t^{rank-i} of char_poly.
BigInt conf_betti(const Graph& gamma, int i);

}  // namespace klb
