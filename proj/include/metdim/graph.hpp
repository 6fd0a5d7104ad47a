#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "metdim/error.hpp"

namespace metdim {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kMaxOrder = 4096;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept twice: as packed bit rows for O(1) membership and as
/// sorted neighbor lists for traversal.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
  }

  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  /// Packed adjacency row of v, `words()` 64-bit words long.
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {rows_.data() + v * words_, words_};
  }
  std::size_t words() const noexcept { return words_; }

  /// For orders up to 64: the neighborhood of v as a single bit mask.
  std::uint64_t mask(Vertex v) const noexcept { return rows_[v * words_]; }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// True when build_graph collapsed at least one repeated edge.
  bool had_duplicates() const noexcept { return had_duplicates_; }

  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  bool had_duplicates_ = false;
  std::vector<std::uint64_t> rows_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> nbrs_;
};

/// Builds a simple graph. Repeated edges are collapsed and flagged; self-loops
/// and out-of-range endpoints raise InvalidEdge; n < 2 raises TooSmall.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Induced subgraph on `keep` (in the given order); vertex i of the result is
/// keep[i]. The result may have order < 2 only if keep does.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

Graph remove_vertex(const Graph& g, Vertex v);
Graph remove_edge(const Graph& g, Vertex u, Vertex v);

bool is_connected(const Graph& g);

/// Connectivity of the subgraph induced by `members` (empty counts as not
/// connected).
bool is_connected_subset(const Graph& g, std::span<const Vertex> members);

/// Single-source BFS hop distances; unreachable vertices get kUnreachable.
inline constexpr std::uint16_t kUnreachable = 0xFFFF;
std::vector<std::uint16_t> bfs_distances(const Graph& g, Vertex source);

/// All-pairs hop distances of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  std::size_t order() const noexcept { return n_; }

  std::uint16_t operator()(Vertex u, Vertex v) const noexcept { return d_[u * n_ + v]; }

  /// Distances from u to every vertex.
  std::span<const std::uint16_t> row(Vertex u) const noexcept { return {d_.data() + u * n_, n_}; }

  std::uint16_t eccentricity(Vertex v) const noexcept { return ecc_[v]; }
  std::uint16_t radius() const noexcept { return rad_; }
  std::uint16_t diameter() const noexcept { return diam_; }

  friend DistanceMatrix all_pairs_distances(const Graph& g);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint16_t> d_;
  std::vector<std::uint16_t> ecc_;
  std::uint16_t rad_ = 0;
  std::uint16_t diam_ = 0;
};

/// Exact BFS distances from every vertex. Raises NotConnected.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Articulation points in ascending order. Raises NotConnected.
std::vector<Vertex> cut_vertices(const Graph& g);

/// Maximal classes of pairwise twins, where u and w are twins iff
/// N(u) - {w} == N(w) - {u}. Classes are sorted internally and ordered by
/// their smallest member; singletons are included.
struct TwinPartition {
  std::vector<std::vector<Vertex>> classes;

  /// Sum of (|C| - 1): every resolving set has at least this many vertices.
  std::size_t lower_bound() const noexcept;
};

TwinPartition twin_partition(const Graph& g);

}  // namespace metdim
