#include "metdim/minor.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "search_kernel.hpp"

namespace metdim {

using detail::Mask;
using detail::bit;

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

struct Target {
  std::size_t order;
  std::size_t edges;
};

Target shape(MinorTarget t) { return t == MinorTarget::K5 ? Target{5, 10} : Target{6, 9}; }

// A quotient of the input: alive vertices are branch-set representatives
// (the smallest original vertex of their set).
struct Quotient {
  Mask alive = 0;
  std::array<Mask, 64> adj{};
  std::array<Mask, 64> branch{};

  std::size_t order() const { return static_cast<std::size_t>(std::popcount(alive)); }

  std::size_t size() const {
    std::size_t twice = 0;
    for (Mask a = alive; a; a &= a - 1) twice += static_cast<std::size_t>(std::popcount(adj[std::countr_zero(a)]));
    return twice / 2;
  }

  int degree(Vertex v) const { return std::popcount(adj[v]); }

  void remove(Vertex v) {
    alive &= ~bit(v);
    for (Mask a = adj[v]; a; a &= a - 1) adj[std::countr_zero(a)] &= ~bit(v);
    adj[v] = 0;
  }

  void contract(Vertex a, Vertex b) {
    Vertex keep = std::min(a, b), gone = std::max(a, b);
    Mask merged = (adj[keep] | adj[gone]) & ~(bit(keep) | bit(gone));
    branch[keep] |= branch[gone];
    remove(gone);
    adj[keep] = merged;
    for (Mask m = merged; m; m &= m - 1) adj[std::countr_zero(m)] |= bit(keep);
  }

  // Degree <= 1 vertices never matter for a target of minimum degree 3, and a
  // degree-2 vertex can always be absorbed into a neighbor's branch set.
  void reduce() {
    for (bool changed = true; changed;) {
      changed = false;
      for (Mask a = alive; a; a &= a - 1) {
        Vertex v = static_cast<Vertex>(std::countr_zero(a));
        if (!(alive & bit(v))) continue;
        int d = degree(v);
        if (d <= 1) {
          remove(v);
          changed = true;
        } else if (d == 2) {
          contract(v, static_cast<Vertex>(std::countr_zero(adj[v])));
          changed = true;
        }
      }
    }
  }

  std::vector<Mask> key() const {
    std::vector<Mask> k;
    for (Mask a = alive; a; a &= a - 1) k.push_back(branch[std::countr_zero(a)]);
    return k;
  }

  bool planar() const {
    std::array<int, 64> index{};
    int n = 0;
    for (Mask a = alive; a; a &= a - 1) index[std::countr_zero(a)] = n++;
    BoostGraph bg(static_cast<std::size_t>(n));
    for (Mask a = alive; a; a &= a - 1) {
      int u = std::countr_zero(a);
      for (Mask m = adj[u] & ~((Mask{2} << u) - 1); m; m &= m - 1) {
        boost::add_edge(static_cast<std::size_t>(index[u]), static_cast<std::size_t>(index[std::countr_zero(m)]), bg);
      }
    }
    return boost::boyer_myrvold_planarity_test(bg);
  }
};

struct KeyHash {
  std::size_t operator()(const std::vector<Mask>& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Mask m : k) h = (h ^ std::hash<Mask>{}(m)) * 0x100000001b3ULL;
    return h;
  }
};

class Search {
 public:
  Search(MinorTarget target, bool prune) : target_(target), shape_(shape(target)), prune_(prune) {}

  std::optional<std::vector<Mask>> run(Quotient q) {
    q.reduce();
    if (q.order() < shape_.order || q.size() < shape_.edges) return std::nullopt;
    if (!seen_.insert(q.key()).second) return std::nullopt;
    if (q.order() == shape_.order) return spanning_match(q);
    if (prune_ && q.planar()) return std::nullopt;
    for (Mask a = q.alive; a; a &= a - 1) {
      Vertex u = static_cast<Vertex>(std::countr_zero(a));
      for (Mask m = q.adj[u] & ~((Mask{2} << u) - 1); m; m &= m - 1) {
        Quotient child = q;
        child.contract(u, static_cast<Vertex>(std::countr_zero(m)));
        if (auto hit = run(child)) return hit;
      }
    }
    return std::nullopt;
  }

 private:
  std::optional<std::vector<Mask>> spanning_match(const Quotient& q) const {
    std::vector<Vertex> reps = detail::to_vertices(q.alive);
    if (target_ == MinorTarget::K5) {
      for (Vertex r : reps) {
        if (q.degree(r) != 4) return std::nullopt;
      }
      return q.key();
    }
    // Sides {0, a, b} and the rest; every cross pair must be adjacent.
    for (std::size_t a = 1; a < 6; ++a) {
      for (std::size_t b = a + 1; b < 6; ++b) {
        Mask left = bit(reps[0]) | bit(reps[a]) | bit(reps[b]);
        Mask right = q.alive & ~left;
        bool ok = true;
        for (Mask l = left; l && ok; l &= l - 1) ok = (q.adj[std::countr_zero(l)] & right) == right;
        if (!ok) continue;
        std::vector<Mask> out;
        for (Mask l = left; l; l &= l - 1) out.push_back(q.branch[std::countr_zero(l)]);
        for (Mask r = right; r; r &= r - 1) out.push_back(q.branch[std::countr_zero(r)]);
        return out;
      }
    }
    return std::nullopt;
  }

  MinorTarget target_;
  Target shape_;
  bool prune_;
  std::unordered_set<std::vector<Mask>, KeyHash> seen_;
};

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.order());
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return bg;
}

// Vertex sets of the blocks with at least `min_order` vertices.
std::vector<std::vector<Vertex>> blocks(const Graph& g, std::size_t min_order) {
  BoostGraph bg = to_boost(g);
  std::map<BoostGraph::edge_descriptor, std::size_t> comp;
  auto count = boost::biconnected_components(bg, boost::make_assoc_property_map(comp));
  std::vector<std::vector<char>> member(count, std::vector<char>(g.order(), 0));
  for (auto [e, c] : comp) {
    member[c][boost::source(e, bg)] = 1;
    member[c][boost::target(e, bg)] = 1;
  }
  std::vector<std::vector<Vertex>> out;
  for (const auto& m : member) {
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (m[v]) vs.push_back(v);
    }
    if (vs.size() >= min_order) out.push_back(std::move(vs));
  }
  return out;
}

bool planar(const Graph& g) {
  BoostGraph bg = to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace

bool is_minor_model(const Graph& g, MinorTarget target, const std::vector<std::vector<Vertex>>& sets) {
  const Target t = shape(target);
  if (sets.size() != t.order) return false;
  std::vector<char> used(g.order(), 0);
  for (const auto& s : sets) {
    if (s.empty()) return false;
    for (Vertex v : s) {
      if (v >= g.order() || used[v]) return false;
      used[v] = 1;
    }
    if (!is_connected_subset(g, s)) return false;
  }
  auto touching = [&](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    for (Vertex x : a)
      for (Vertex y : b)
        if (g.has_edge(x, y)) return true;
    return false;
  };
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      bool needed = target == MinorTarget::K5 || ((i < 3) != (j < 3));
      if (needed && !touching(sets[i], sets[j])) return false;
    }
  }
  return true;
}

MinorResult has_minor(const Graph& g, MinorTarget target, const SolverOptions& opts, bool planarity_pruning) {
  if (planarity_pruning && planar(g)) return {};
  const std::size_t n = g.order();
  if (n > opts.minor_cap) {
    throw Error(ErrorCode::TooLarge, "minor search: order " + std::to_string(n) + " exceeds cap " +
                                         std::to_string(opts.minor_cap) + "; raise the cap to override");
  }
  if (n > kSolverMaxOrder) {
    throw Error(ErrorCode::TooLarge, "minor search: order " + std::to_string(n) +
                                         " exceeds the search engine limit of " + std::to_string(kSolverMaxOrder));
  }
  // Both targets are 2-connected, so a model lives inside a single block.
  for (const auto& block : blocks(g, shape(target).order)) {
    Quotient q;
    for (Vertex v : block) {
      q.alive |= bit(v);
      q.branch[v] = bit(v);
    }
    for (Vertex v : block) q.adj[v] = g.mask(v) & q.alive;
    Search search(target, planarity_pruning);
    if (auto hit = search.run(q)) {
      MinorResult r;
      r.present = true;
      for (Mask m : *hit) r.branch_sets.push_back(detail::to_vertices(m));
      if (!is_minor_model(g, target, r.branch_sets)) {
        throw Error(ErrorCode::Unsupported, "minor search produced an invalid model");
      }
      return r;
    }
  }
  return {};
}

bool is_planar_desk(const Graph& g, const SolverOptions& opts) {
  if (g.order() >= 3 && g.size() > 3 * g.order() - 6) return false;
  return !has_minor(g, MinorTarget::K5, opts).present && !has_minor(g, MinorTarget::K33, opts).present;
}

}  // namespace metdim
