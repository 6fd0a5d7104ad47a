#pragma once

#include <vector>

#include "metdim/graph.hpp"
#include "metdim/solver.hpp"

namespace metdim {

enum class MinorTarget { K5, K33 };

/// Branch sets are disjoint, each induces a connected subgraph, and the
/// required pairs are joined by an edge. For K33 the first three sets form one
/// side.
struct MinorResult {
  bool present = false;
  std::vector<std::vector<Vertex>> branch_sets;
};

/// Exhaustive contraction search for desk-scale graphs (order at most
/// opts.minor_cap). With `planarity_pruning`, quotients that pass a planarity
/// test are abandoned and planar inputs are answered without search or cap.
MinorResult has_minor(const Graph& g, MinorTarget target, const SolverOptions& opts = {},
                      bool planarity_pruning = true);

/// Checks a branch-set model independently of how it was found.
bool is_minor_model(const Graph& g, MinorTarget target, const std::vector<std::vector<Vertex>>& branch_sets);

/// No K5 and no K33 minor. Graphs with m > 3n - 6 are rejected up front.
bool is_planar_desk(const Graph& g, const SolverOptions& opts = {});

}  // namespace metdim
