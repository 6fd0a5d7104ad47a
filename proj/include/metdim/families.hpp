#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "metdim/graph.hpp"

namespace metdim {

/// One level of a graph built on the resolving edge uw. x, y and z are the
/// vertices whose distances to (u, w) are (a, a+1), (a, a) and (a+1, a).
struct FrLevel {
  bool x = false, y = false, z = false;
  /// y_a's edges to the previous level (levels >= 2 only).
  bool y_to_x = false, y_to_y = false, y_to_z = false;
  /// Optional edges inside the level.
  bool xy = false, xz = false, yz = false;
};

struct FrFlags {
  std::vector<FrLevel> levels;  ///< levels[0] is level 1; empty means P_2
};

/// Throws RuleViolation naming the first broken rule (R1..R9).
void validate(const FrFlags& flags);

namespace family {
struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct Complete { std::size_t n; };
struct Star { std::size_t n; };  ///< K_{1,n}
struct Multipartite { std::vector<std::size_t> parts; };
struct Wheel { std::size_t n; };  ///< rim length n, n + 1 vertices
struct Petersen {};
struct Grid { std::size_t s, t; };
struct Bouquet { std::vector<std::size_t> cycles; };
struct Paddle { std::size_t a, b; };  ///< K_a with a b-vertex tail
struct Fork { std::size_t r, n; };    ///< r-path ending in n - r leaves
struct Sun { std::size_t m; std::vector<std::size_t> legs; };
struct Fr { FrFlags flags; std::optional<std::uint64_t> seed; };
struct Kite { std::size_t k; };  ///< K_{k+2} with one edge subdivided
struct SubdividedK33 {};
struct ThetaTails {};
struct FanTail { std::size_t n; };
struct VDelPair { std::size_t k; };
struct EDelStar { std::size_t k, a; };
struct RandomTree { std::size_t n; std::uint64_t seed; };
struct RandomConnected { std::size_t n; double p; std::uint64_t seed; };
}  // namespace family

using FamilySpec =
    std::variant<family::Path, family::Cycle, family::Complete, family::Star, family::Multipartite,
                 family::Wheel, family::Petersen, family::Grid, family::Bouquet, family::Paddle,
                 family::Fork, family::Sun, family::Fr, family::Kite, family::SubdividedK33,
                 family::ThetaTails, family::FanTail, family::VDelPair, family::EDelStar,
                 family::RandomTree, family::RandomConnected>;

/// A graph with a name for every vertex.
struct Generated {
  Graph graph;
  std::vector<std::string> labels;

  /// Index of a label; throws InvalidVertex if absent.
  Vertex at(std::string_view label) const;
};

/// Text form, e.g. `wheel:9`, `grid:7x4`, `sun:8:1,0,3,1,0,2,0,0`.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Throws InvalidSpec (or RuleViolation for explicit F_r flags) on
/// out-of-domain parameters.
Generated generate(const FamilySpec& spec);

/// The vertex-deletion pair: `whole` is G and `part` is G - v, with v last.
struct DeletionPair {
  Generated whole;
  Generated part;
};
DeletionPair vdel_pair(std::size_t k);
/// The edge-deletion pair: `part` is G - e for the chord e = l1 s3.
DeletionPair edel_pair(std::size_t k, std::size_t a);

/// Random flags repaired to satisfy every rule, with exactly r non-empty levels.
FrFlags fr_sample_flags(std::size_t r, std::uint64_t seed);
Generated fr_sample(std::size_t r, std::uint64_t seed);

/// Erdos-Renyi G(n, p) conditioned on connectivity by rejection; throws
/// GenerationFailed after 10^4 rejected samples.
Graph random_connected(std::size_t n, double p, std::uint64_t seed);

/// Uniform labeled tree from a random Pruefer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);

}  // namespace metdim
