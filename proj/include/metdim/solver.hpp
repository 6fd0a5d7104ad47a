#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "metdim/graph.hpp"

namespace metdim {

/// Limits for the exponential searches. Exceeding a cap raises TooLarge; no
/// search ever falls back to an approximation.
struct SolverOptions {
  std::size_t cap = 24;              ///< dim / cdim / cdim-at / profile
  std::size_t enumeration_cap = 16;  ///< enumerate_min_resolving_sets
  std::size_t minor_cap = 20;        ///< has_minor / is_planar_desk
  unsigned workers = 1;              ///< threads for seed-parallel search
};

/// Hard ceiling of the bit-mask search engine, independent of any cap.
inline constexpr std::size_t kSolverMaxOrder = 64;

/// A vertex set together with the full code table that proves or refutes
/// that it resolves the graph.
struct ResolvingCertificate {
  std::vector<Vertex> set;                        ///< in the order given
  std::vector<std::vector<std::uint16_t>> codes;  ///< codes[v][i] = d(v, set[i])
  bool resolving = false;
  /// Lexicographically smallest pair (x < y) with equal codes.
  std::optional<std::pair<Vertex, Vertex>> witness_pair;
};

ResolvingCertificate check_resolving(const Graph& g, const DistanceMatrix& dm,
                                     std::span<const Vertex> set);

/// A minimum value and the lexicographically smallest set attaining it.
struct SearchResult {
  std::size_t value = 0;
  std::vector<Vertex> witness;
};

/// Least k >= 1 with k + d^k >= n; a lower bound on the metric dimension of
/// any connected graph with order n and diameter d.
std::size_t diameter_floor(std::size_t n, std::size_t d);

SearchResult dim_exact(const Graph& g, const SolverOptions& opts = {});

SearchResult cdim_exact(const Graph& g, const SolverOptions& opts = {});

/// Minimum connected resolving set containing `anchor`. An empty anchor gives
/// cdim(G); a singleton {v} gives the connected metric dimension at v.
SearchResult cdim_at_set(const Graph& g, std::span<const Vertex> anchor,
                         const SolverOptions& opts = {});

struct VertexProfile {
  std::vector<std::size_t> per_vertex;
  std::size_t rrad = 0;
  std::size_t rdiam = 0;
  std::vector<Vertex> rc;  ///< vertices attaining rrad
  std::vector<Vertex> rp;  ///< vertices attaining rdiam
};

VertexProfile vertex_profile(const Graph& g, const SolverOptions& opts = {});

/// Every minimum resolving set, each sorted, the list sorted lexicographically.
std::vector<std::vector<Vertex>> enumerate_min_resolving_sets(const Graph& g,
                                                              const SolverOptions& opts = {});

}  // namespace metdim
