#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metdim/families.hpp"
#include "metdim/graph.hpp"

namespace metdim {

enum class TreeZone { PathEnd, PathInterior, Gamma, D, T1MinusGamma, T2MinusGamma };

std::string_view to_string(TreeZone zone);

/// Major vertices have degree >= 3. A terminal vertex of a major vertex v is a
/// leaf whose nearest major vertex is v; ter(v) counts them, and v is exterior
/// when ter(v) >= 1.
struct TreeSkeleton {
  std::vector<Vertex> exterior_major;  ///< ascending
  std::vector<std::size_t> ter;        ///< parallel to exterior_major
  /// legs[i][j] lists the path from exterior_major[i] to its j-th terminal
  /// vertex, the major vertex excluded, starting next to it.
  std::vector<std::vector<std::vector<Vertex>>> legs;
  std::size_t sigma = 0;  ///< number of leaves
  std::size_t ex = 0;     ///< number of exterior major vertices
  std::vector<Vertex> m1, m2;
  /// Degree-two vertices off every leg, and major vertices with ter = 0.
  std::vector<Vertex> d;
  std::vector<TreeZone> zone;
  /// Distance to the nearest major vertex; 0 for a path.
  std::vector<std::size_t> major_distance;

  bool is_path() const noexcept { return exterior_major.empty(); }
};

/// Throws NotATree.
TreeSkeleton tree_skeleton(const Graph& t);

enum class FamilyKind { Path, Complete, Petersen, Wheel, Tree, Grid, Bouquet, Multipartite };

std::string_view to_string(FamilyKind kind);

/// First structural match in the order path, complete, Petersen, wheel, tree,
/// grid, bouquet, complete multipartite.
std::optional<FamilyKind> recognize(const Graph& g);

struct FormulaResult {
  std::size_t value = 0;
  std::string case_label;
  std::string theorem_id;  ///< "<family>.<dim|cdim|cdim-at>"
};

/// Inputs given as a FamilySpec are generated and evaluated under the
/// spec's family without re-recognition, except that paths and complete
/// graphs always use their own formulas. Vertex arguments index the
/// generated graph. Unrecognized inputs raise Unsupported.
FormulaResult dim_formula(const Graph& g);
FormulaResult dim_formula(const FamilySpec& spec);
FormulaResult cdim_formula(const Graph& g);
FormulaResult cdim_formula(const FamilySpec& spec);
FormulaResult cdim_at_vertex_formula(const Graph& g, Vertex v);
FormulaResult cdim_at_vertex_formula(const FamilySpec& spec, Vertex v);

/// f(n, d) <= dim <= n - d for order n and diameter d.
struct DimBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
};
DimBounds dim_bounds(const Graph& g);

/// Structural prediction of the extreme values 1 and n - 1.
struct ExtremeClassification {
  bool cdim_is_n_minus_1 = false;
  std::optional<bool> at_is_one;        ///< set when a vertex is given
  std::optional<bool> at_is_n_minus_1;  ///< set when a vertex is given
  std::string reason;
};

ExtremeClassification classify_extremes(const Graph& g, std::optional<Vertex> v = {});

/// Membership in the layered family built on an adjacent resolving pair
/// (u, w). roles[v] is "u", "w", or x/y/z with the level appended.
struct FrMembership {
  bool member = false;
  std::size_t r = 0;
  std::optional<Edge> pair;
  std::vector<std::string> roles;
  FrFlags flags;
  std::string refutation;
};

/// Decided twice, by searching for an adjacent resolving pair and by checking
/// the rules on each pair's role labeling; a disagreement throws
/// std::logic_error.
FrMembership fr_membership(const Graph& g);

/// Role labeling of g relative to the edge (u, w), checked against every
/// rule. Returns the first broken rule, or nothing when g is in the family.
std::optional<std::string> fr_refutation(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex w,
                                         FrMembership* out = nullptr);

struct UnicyclicClass {
  bool cdim_equals_dim = false;
  std::string case_label;  ///< "U1", "U2", or the failing condition
  std::size_t cycle_length = 0;
  std::size_t degree_two_run = 0;  ///< longest cyclic run of degree-two cycle vertices
};

/// Throws NotUnicyclic.
UnicyclicClass unicyclic_cdim_eq_dim(const Graph& g);

inline constexpr std::size_t kTreeSetCap = 1'000'000;

/// Every minimum resolving set of a tree that is not a path, each sorted, the
/// list sorted. Throws NotATree, IsAPath, or TooMany above the cap.
std::vector<std::vector<Vertex>> tree_min_resolving_sets(const Graph& t, std::size_t cap = kTreeSetCap);

}  // namespace metdim
