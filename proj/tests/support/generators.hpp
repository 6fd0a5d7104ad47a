#pragma once

// Graph sources for property and acceptance tests, independent of the
// library's family generators.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "metdim/graph.hpp"

namespace gen {

using metdim::Edge;
using metdim::Graph;
using metdim::Vertex;

/// Adjacency as one bit per unordered pair, row-major over i < j.
using Code = std::uint64_t;

inline std::size_t pair_bit(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Smallest code over vertex orders that sort by degree; equal codes mean
/// isomorphic graphs.
inline Code canonical(std::size_t n, const std::vector<std::vector<bool>>& adj) {
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) deg[i] += adj[i][j];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return deg[a] < deg[b] || (deg[a] == deg[b] && a < b); });
  // Permute only within runs of equal degree.
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && deg[order[j]] == deg[order[i]]) ++j;
    runs.emplace_back(i, j);
    i = j;
  }
  Code best = ~Code{0};
  auto perm = order;
  auto encode = [&] {
    Code c = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (adj[perm[i]][perm[j]]) c |= Code{1} << pair_bit(n, i, j);
    best = std::min(best, c);
  };
  auto rec = [&](auto&& self, std::size_t r) -> void {
    if (r == runs.size()) {
      encode();
      return;
    }
    auto [lo, hi] = runs[r];
    std::sort(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi));
    do {
      self(self, r + 1);
    } while (std::next_permutation(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi)));
  };
  rec(rec, 0);
  return best;
}

inline Graph decode(std::size_t n, Code c) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((c >> pair_bit(n, i, j)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return metdim::build_graph(n, edges);
}

/// Every connected graph on n vertices (2 <= n <= 8), one per isomorphism
/// class. Each arises by adding a vertex to a connected graph on n - 1
/// vertices, since some vertex is never a cut vertex.
inline std::vector<Graph> connected_graphs(std::size_t n) {
  std::set<Code> level{0};  // K1
  for (std::size_t m = 2; m <= n; ++m) {
    std::set<Code> next;
    for (Code c : level) {
      std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
      for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t j = i + 1; j + 1 < m; ++j)
          if ((c >> pair_bit(m - 1, i, j)) & 1) adj[i][j] = adj[j][i] = true;
      for (std::uint32_t nb = 1; nb < (1U << (m - 1)); ++nb) {
        for (std::size_t i = 0; i + 1 < m; ++i) adj[i][m - 1] = adj[m - 1][i] = (nb >> i) & 1;
        next.insert(canonical(m, adj));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (Code c : level) out.push_back(decode(n, c));
  return out;
}

/// A connected unicyclic graph on at most max_n vertices. With `sun` set,
/// every cycle vertex carries at most one pendant path.
inline Graph random_unicyclic(std::size_t max_n, bool sun, std::mt19937_64& rng) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  const std::size_t c = pick(3, std::min<std::size_t>(10, max_n));
  const std::size_t n = pick(c, max_n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < c; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % c));
  std::size_t next = c;
  if (sun) {
    std::vector<std::size_t> legs(c, 0);
    for (std::size_t extra = n - c; extra > 0; --extra) ++legs[pick(0, c - 1)];
    for (std::size_t i = 0; i < c; ++i) {
      Vertex prev = static_cast<Vertex>(i);
      for (std::size_t j = 0; j < legs[i]; ++j) {
        edges.emplace_back(prev, static_cast<Vertex>(next));
        prev = static_cast<Vertex>(next++);
      }
    }
  } else {
    for (; next < n; ++next) edges.emplace_back(static_cast<Vertex>(pick(0, next - 1)), static_cast<Vertex>(next));
  }
  return metdim::build_graph(next, edges);
}

/// Uniform random labeled tree from a Pruefer sequence.
inline Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n == 2) return metdim::build_graph(2, {{0, 1}});
  std::uniform_int_distribution<std::size_t> d(0, n - 1);
  std::vector<std::size_t> seq(n - 2), deg(n, 1);
  for (auto& x : seq) ++deg[x = d(rng)];
  std::vector<Edge> edges;
  for (std::size_t x : seq) {
    std::size_t leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(x));
    --deg[leaf];
    --deg[x];
  }
  std::vector<Vertex> last;
  for (std::size_t v = 0; v < n; ++v)
    if (deg[v] == 1) last.push_back(static_cast<Vertex>(v));
  edges.emplace_back(last[0], last[1]);
  return metdim::build_graph(n, edges);
}

}  // namespace gen
