#include "metdim/closed_forms.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <stdexcept>

#include "metdim/solver.hpp"

namespace metdim {

namespace {

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> deg(g.order());
  for (Vertex v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  return deg;
}

bool is_tree(const Graph& g) { return g.size() + 1 == g.order() && is_connected(g); }

bool is_path_graph(const Graph& g) {
  if (!is_tree(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

bool is_complete_graph(const Graph& g) { return g.size() * 2 == g.order() * (g.order() - 1); }

bool is_star_graph(const Graph& g) {
  if (g.order() < 4 || g.size() + 1 != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) + 1 == g.order()) return true;
  }
  return false;
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

// Structure recovered for one family; only the fields of `kind` are set.
struct Shape {
  FamilyKind kind = FamilyKind::Path;
  std::size_t n = 0;
  // wheel
  Vertex hub = 0;
  std::size_t rim = 0;
  // grid: s >= t, `along` is the coordinate on the side of length s
  std::size_t s = 0, t = 0;
  std::vector<std::size_t> along;
  // bouquet: cycle_of[v] for v != center
  Vertex center = 0;
  std::vector<std::size_t> cycle_of;
  std::vector<std::size_t> cycle_len;
  std::vector<std::uint16_t> center_dist;
  // multipartite
  std::vector<std::size_t> part_of;
  std::vector<std::size_t> part_size;
  // tree
  TreeSkeleton skeleton;
};

std::optional<Shape> as_path(const Graph& g) {
  if (!is_path_graph(g)) return std::nullopt;
  Shape s;
  s.kind = FamilyKind::Path;
  s.n = g.order();
  return s;
}

std::optional<Shape> as_complete(const Graph& g) {
  if (!is_complete_graph(g)) return std::nullopt;
  Shape s;
  s.kind = FamilyKind::Complete;
  s.n = g.order();
  return s;
}

// The only cubic graph on ten vertices without 3- and 4-cycles.
std::optional<Shape> as_petersen(const Graph& g) {
  if (g.order() != 10 || g.size() != 15) return std::nullopt;
  for (Vertex v = 0; v < 10; ++v) {
    if (g.degree(v) != 3) return std::nullopt;
  }
  for (Vertex u = 0; u < 10; ++u) {
    for (Vertex v = u + 1; v < 10; ++v) {
      std::size_t common = static_cast<std::size_t>(__builtin_popcountll(g.mask(u) & g.mask(v)));
      if (common > (g.has_edge(u, v) ? 0U : 1U)) return std::nullopt;
    }
  }
  Shape s;
  s.kind = FamilyKind::Petersen;
  s.n = 10;
  return s;
}

std::optional<Shape> as_wheel(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 5 || g.size() != 2 * (n - 1)) return std::nullopt;
  for (Vertex h = 0; h < n; ++h) {
    if (g.degree(h) + 1 != n) continue;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (v != h) rest.push_back(v);
    }
    if (!is_cycle_graph(induced_subgraph(g, rest))) continue;
    Shape s;
    s.kind = FamilyKind::Wheel;
    s.n = n;
    s.hub = h;
    s.rim = n - 1;
    return s;
  }
  return std::nullopt;
}

std::optional<Shape> as_tree(const Graph& g) {
  if (!is_tree(g)) return std::nullopt;
  Shape s;
  s.kind = FamilyKind::Tree;
  s.n = g.order();
  s.skeleton = tree_skeleton(g);
  return s;
}

// Coordinates from two corners: a(v) = (d(c0,v) - d(c1,v) + p) / 2 along the
// c0-c1 side of length p, then every edge must be a unit step.
std::optional<Shape> as_grid(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> corners;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2 || g.degree(v) > 4) return std::nullopt;
    if (g.degree(v) == 2) corners.push_back(v);
  }
  if (corners.size() != 4) return std::nullopt;
  auto d0 = bfs_distances(g, corners[0]);
  std::array<std::size_t, 3> cd{};
  for (int i = 0; i < 3; ++i) cd[i] = d0[corners[i + 1]];
  std::size_t far = static_cast<std::size_t>(std::max_element(cd.begin(), cd.end()) - cd.begin());
  std::size_t side = far == 0 ? 1 : 0;
  std::size_t other = 3 - far - side;
  const std::size_t p = cd[side], q = cd[other];
  if (p == 0 || q == 0 || p + q != cd[far] || (p + 1) * (q + 1) != n) return std::nullopt;
  if (g.size() != p * (q + 1) + q * (p + 1)) return std::nullopt;
  auto d1 = bfs_distances(g, corners[side + 1]);
  std::vector<std::size_t> a(n), b(n);
  std::vector<char> seen(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t sum = static_cast<std::size_t>(d0[v]) + p;
    if (d1[v] > sum || (sum - d1[v]) % 2) return std::nullopt;
    a[v] = (sum - d1[v]) / 2;
    if (a[v] > p || a[v] > d0[v]) return std::nullopt;
    b[v] = d0[v] - a[v];
    if (b[v] > q) return std::nullopt;
    std::size_t cell = a[v] * (q + 1) + b[v];
    if (seen[cell]) return std::nullopt;
    seen[cell] = 1;
  }
  for (auto [u, v] : g.edges()) {
    std::size_t da = a[u] > a[v] ? a[u] - a[v] : a[v] - a[u];
    std::size_t db = b[u] > b[v] ? b[u] - b[v] : b[v] - b[u];
    if (da + db != 1) return std::nullopt;
  }
  Shape s;
  s.kind = FamilyKind::Grid;
  s.n = n;
  s.s = std::max(p, q) + 1;
  s.t = std::min(p, q) + 1;
  s.along = p >= q ? a : b;
  return s;
}

std::optional<Shape> as_bouquet(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  auto cuts = cut_vertices(g);
  if (cuts.size() != 1) return std::nullopt;
  const Vertex w = cuts[0];
  const std::size_t n = g.order();
  Shape s;
  s.kind = FamilyKind::Bouquet;
  s.n = n;
  s.center = w;
  s.cycle_of.assign(n, 0);
  std::vector<char> done(n, 0);
  done[w] = 1;
  for (Vertex start = 0; start < n; ++start) {
    if (done[start]) continue;
    std::vector<Vertex> comp{start};
    done[start] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex x : g.neighbors(comp[i])) {
        if (!done[x]) {
          done[x] = 1;
          comp.push_back(x);
        }
      }
    }
    if (comp.size() < 2) return std::nullopt;
    std::size_t inner_edges = 0;
    for (Vertex v : comp) {
      std::size_t inner = g.degree(v) - (g.has_edge(v, w) ? 1 : 0);
      if (inner > 2) return std::nullopt;
      if (g.has_edge(v, w) != (inner == 1)) return std::nullopt;
      inner_edges += inner;
      s.cycle_of[v] = s.cycle_len.size();
    }
    if (inner_edges != 2 * (comp.size() - 1)) return std::nullopt;
    s.cycle_len.push_back(comp.size() + 1);
  }
  if (s.cycle_len.size() < 2) return std::nullopt;
  auto dist = bfs_distances(g, w);
  s.center_dist = dist;
  return s;
}

// Complete multipartite iff non-adjacency is an equivalence relation.
std::optional<Shape> as_multipartite(const Graph& g) {
  const std::size_t n = g.order();
  Shape s;
  s.kind = FamilyKind::Multipartite;
  s.n = n;
  s.part_of.assign(n, n);
  for (Vertex v = 0; v < n; ++v) {
    if (s.part_of[v] != n) continue;
    std::size_t id = s.part_size.size();
    s.part_size.push_back(0);
    for (Vertex x = v; x < n; ++x) {
      if (x == v || !g.has_edge(v, x)) {
        if (s.part_of[x] != n) return std::nullopt;
        s.part_of[x] = id;
        ++s.part_size[id];
      }
    }
  }
  if (s.part_size.size() < 2) return std::nullopt;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v) == (s.part_of[u] == s.part_of[v])) return std::nullopt;
    }
  }
  return s;
}

std::optional<Shape> shape_of(const Graph& g, FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Path: return as_path(g);
    case FamilyKind::Complete: return as_complete(g);
    case FamilyKind::Petersen: return as_petersen(g);
    case FamilyKind::Wheel: return as_wheel(g);
    case FamilyKind::Tree: return as_tree(g);
    case FamilyKind::Grid: return as_grid(g);
    case FamilyKind::Bouquet: return as_bouquet(g);
    case FamilyKind::Multipartite: return as_multipartite(g);
  }
  return std::nullopt;
}

constexpr std::array kOrder{FamilyKind::Path,  FamilyKind::Complete, FamilyKind::Petersen, FamilyKind::Wheel,
                            FamilyKind::Tree,  FamilyKind::Grid,     FamilyKind::Bouquet,  FamilyKind::Multipartite};

Shape recognize_shape(const Graph& g) {
  if (is_connected(g)) {
    for (FamilyKind k : kOrder) {
      if (auto s = shape_of(g, k)) return *s;
    }
  }
  throw Error(ErrorCode::Unsupported, "graph matches no family with a closed form");
}

std::optional<FamilyKind> kind_of(const FamilySpec& spec) {
  return std::visit(
      [](const auto& f) -> std::optional<FamilyKind> {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Path>) return FamilyKind::Path;
        if constexpr (std::is_same_v<T, family::Complete>) return FamilyKind::Complete;
        if constexpr (std::is_same_v<T, family::Petersen>) return FamilyKind::Petersen;
        if constexpr (std::is_same_v<T, family::Wheel>) return FamilyKind::Wheel;
        if constexpr (std::is_same_v<T, family::Star> || std::is_same_v<T, family::RandomTree> ||
                      std::is_same_v<T, family::Fork>)
          return FamilyKind::Tree;
        if constexpr (std::is_same_v<T, family::Grid>) return FamilyKind::Grid;
        if constexpr (std::is_same_v<T, family::Bouquet>) return FamilyKind::Bouquet;
        if constexpr (std::is_same_v<T, family::Multipartite>) return FamilyKind::Multipartite;
        return std::nullopt;
      },
      spec);
}

struct Input {
  Graph graph;
  Shape shape;
};

Input from_spec(const FamilySpec& spec) {
  Graph g = generate(spec).graph;
  auto kind = kind_of(spec);
  if (!kind) return {g, recognize_shape(g)};
  if (is_path_graph(g)) kind = FamilyKind::Path;
  else if (is_complete_graph(g)) kind = FamilyKind::Complete;
  auto s = shape_of(g, *kind);
  if (!s) throw Error(ErrorCode::Unsupported, "generated graph lost its " + std::string(to_string(*kind)) + " shape");
  return {std::move(g), std::move(*s)};
}

FormulaResult result(std::size_t value, std::string label, FamilyKind kind, const char* quantity) {
  return {value, std::move(label), std::string(to_string(kind)) + "." + quantity};
}

std::size_t wheel_dim(std::size_t rim) { return rim == 3 || rim == 6 ? 3 : (2 * rim + 2) / 5; }

std::size_t singletons(const Shape& s) {
  return static_cast<std::size_t>(std::count(s.part_size.begin(), s.part_size.end(), 1));
}

FormulaResult dim_of(const Shape& s) {
  const auto k = s.kind;
  switch (k) {
    case FamilyKind::Path: return result(1, "path", k, "dim");
    case FamilyKind::Complete: return result(s.n - 1, "n-1", k, "dim");
    case FamilyKind::Petersen: return result(3, "petersen", k, "dim");
    case FamilyKind::Wheel:
      return result(wheel_dim(s.rim), s.rim == 3 || s.rim == 6 ? "n in {3,6}" : "floor((2n+2)/5)", k, "dim");
    case FamilyKind::Tree: return result(s.skeleton.sigma - s.skeleton.ex, "sigma-ex", k, "dim");
    case FamilyKind::Grid: return result(2, "grid", k, "dim");
    case FamilyKind::Bouquet: {
      const std::size_t m = s.cycle_len.size();
      std::size_t x = static_cast<std::size_t>(
          std::count_if(s.cycle_len.begin(), s.cycle_len.end(), [](std::size_t c) { return c % 2 == 0; }));
      return x == 0 ? result(m, "x=0", k, "dim") : result(m + x - 1, "x>=1", k, "dim");
    }
    case FamilyKind::Multipartite: {
      const std::size_t kk = s.part_size.size(), sg = singletons(s);
      return sg == 0 ? result(s.n - kk, "s=0", k, "dim") : result(s.n + sg - kk - 1, "s>=1", k, "dim");
    }
  }
  throw Error(ErrorCode::Unsupported, "no dim formula");
}

FormulaResult cdim_of(const Shape& s) {
  const auto k = s.kind;
  switch (k) {
    case FamilyKind::Path: return result(1, "path", k, "cdim");
    case FamilyKind::Complete: return result(s.n - 1, "n-1", k, "cdim");
    case FamilyKind::Petersen: return result(4, "petersen", k, "cdim");
    case FamilyKind::Wheel:
      if (s.rim == 3) return result(3, "n=3", k, "cdim");
      if (s.rim <= 5) return result(2, "n in {4,5}", k, "cdim");
      return result((2 * s.rim + 2) / 5 + 1, "n>=6", k, "cdim");
    case FamilyKind::Tree:
      if (s.skeleton.is_path()) return result(1, "path", k, "cdim");
      return result(s.skeleton.d.size() + s.skeleton.sigma, "|D|+sigma", k, "cdim");
    case FamilyKind::Grid: return result(s.t, "t", k, "cdim");
    case FamilyKind::Bouquet: {
      const std::size_t m = s.cycle_len.size();
      std::size_t b = static_cast<std::size_t>(std::count(s.cycle_len.begin(), s.cycle_len.end(), 3));
      return b == m ? result(m + 1, "b=m", k, "cdim") : result(2 * m - b, "b<m", k, "cdim");
    }
    case FamilyKind::Multipartite: {
      const std::size_t kk = s.part_size.size(), sg = singletons(s);
      if (sg == 1 && kk == 2) return result(s.n - 1, "s=1,k=2", k, "cdim");
      if (sg == 0) return result(s.n - kk, "s=0", k, "cdim");
      return result(s.n + sg - kk - 1, "otherwise", k, "cdim");
    }
  }
  throw Error(ErrorCode::Unsupported, "no cdim formula");
}

FormulaResult cdim_at_of(const Graph& g, const Shape& s, Vertex v) {
  if (v >= g.order()) throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
  const auto k = s.kind;
  const std::size_t c = cdim_of(s).value;
  switch (k) {
    case FamilyKind::Path:
      return g.degree(v) <= 1 ? result(1, "end vertex", k, "cdim-at") : result(2, "interior", k, "cdim-at");
    case FamilyKind::Complete: return result(c, "n-1", k, "cdim-at");
    case FamilyKind::Petersen: return result(c, "transitive", k, "cdim-at");
    case FamilyKind::Wheel:
      if (s.rim == 4 || s.rim == 5) {
        return v == s.hub ? result(3, "n in {4,5}, hub", k, "cdim-at") : result(2, "n in {4,5}, rim", k, "cdim-at");
      }
      return result(c, s.rim == 3 ? "n=3" : "n>=6", k, "cdim-at");
    case FamilyKind::Tree: {
      const TreeSkeleton& t = s.skeleton;
      const std::size_t dist = t.major_distance[v];
      switch (t.zone[v]) {
        case TreeZone::PathEnd: return result(1, "path end", k, "cdim-at");
        case TreeZone::PathInterior: return result(2, "path interior", k, "cdim-at");
        case TreeZone::Gamma: return result(c, "Gamma", k, "cdim-at");
        case TreeZone::D: return result(c, "Gamma (D)", k, "cdim-at");
        case TreeZone::T1MinusGamma: return result(c + dist, "T1-Gamma", k, "cdim-at");
        case TreeZone::T2MinusGamma: return result(c + dist - 1, "T2-Gamma", k, "cdim-at");
      }
      break;
    }
    case FamilyKind::Grid: {
      if (s.s == s.t) {
        return g.degree(v) <= 3 ? result(s.t, "s=t, deg<=3", k, "cdim-at")
                                : result(s.t + 1, "s=t, deg=4", k, "cdim-at");
      }
      bool in_l = s.along[v] == 0 || s.along[v] + 1 == s.s;
      return in_l ? result(s.t, "s>t, v in L", k, "cdim-at") : result(s.t + 1, "s>t, v not in L", k, "cdim-at");
    }
    case FamilyKind::Bouquet: {
      if (v == s.center || g.has_edge(v, s.center)) return result(c, "N[w]", k, "cdim-at");
      const std::size_t m = s.cycle_len.size();
      const std::size_t b = static_cast<std::size_t>(std::count(s.cycle_len.begin(), s.cycle_len.end(), 3));
      const std::size_t d = s.center_dist[v];
      const bool antipodal = d == s.cycle_len[s.cycle_of[v]] / 2;
      if (b + 1 == m) return result(c + d - 1, "Gamma_i, b=m-1", k, "cdim-at");
      if (!antipodal) return result(c + d - 1, "Gamma_i-D_i, b<=m-2", k, "cdim-at");
      return result(c + d - 2, "Gamma_i&D_i, b<=m-2", k, "cdim-at");
    }
    case FamilyKind::Multipartite: {
      const std::size_t kk = s.part_size.size();
      if (singletons(s) == 1 && kk >= 3 && s.part_size[s.part_of[v]] == 1) {
        return result(c + 1, "s=1, k>=3, v in V1", k, "cdim-at");
      }
      return result(c, "otherwise", k, "cdim-at");
    }
  }
  throw Error(ErrorCode::Unsupported, "no per-vertex formula");
}

}  // namespace

std::string_view to_string(TreeZone zone) {
  switch (zone) {
    case TreeZone::PathEnd: return "path-end";
    case TreeZone::PathInterior: return "path-interior";
    case TreeZone::Gamma: return "Gamma";
    case TreeZone::D: return "D";
    case TreeZone::T1MinusGamma: return "T1-Gamma";
    case TreeZone::T2MinusGamma: return "T2-Gamma";
  }
  return "?";
}

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Path: return "path";
    case FamilyKind::Complete: return "complete";
    case FamilyKind::Petersen: return "petersen";
    case FamilyKind::Wheel: return "wheel";
    case FamilyKind::Tree: return "tree";
    case FamilyKind::Grid: return "grid";
    case FamilyKind::Bouquet: return "bouquet";
    case FamilyKind::Multipartite: return "multipartite";
  }
  return "?";
}

TreeSkeleton tree_skeleton(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorCode::NotATree, "graph is not a tree");
  const std::size_t n = t.order();
  const auto deg = degrees(t);
  TreeSkeleton sk;
  sk.zone.assign(n, TreeZone::PathInterior);
  sk.major_distance.assign(n, 0);
  std::vector<Vertex> majors;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] >= 3) majors.push_back(v);
    if (deg[v] == 1) ++sk.sigma;
  }
  if (majors.empty()) {
    for (Vertex v = 0; v < n; ++v) sk.zone[v] = deg[v] <= 1 ? TreeZone::PathEnd : TreeZone::PathInterior;
    return sk;
  }

  std::map<Vertex, std::vector<std::vector<Vertex>>> legs;
  std::vector<char> on_leg(n, 0);
  std::vector<std::size_t> leg_pos(n, 0);
  std::vector<Vertex> leg_major(n, 0);
  for (Vertex leaf = 0; leaf < n; ++leaf) {
    if (deg[leaf] != 1) continue;
    std::vector<Vertex> leg{leaf};
    Vertex prev = leaf, cur = t.neighbors(leaf)[0];
    while (deg[cur] == 2) {
      leg.push_back(cur);
      Vertex next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
      prev = cur;
      cur = next;
    }
    std::reverse(leg.begin(), leg.end());
    for (std::size_t i = 0; i < leg.size(); ++i) {
      on_leg[leg[i]] = 1;
      leg_pos[leg[i]] = i + 1;
      leg_major[leg[i]] = cur;
    }
    legs[cur].push_back(std::move(leg));
  }
  for (auto& [v, ls] : legs) {
    std::sort(ls.begin(), ls.end());
    sk.exterior_major.push_back(v);
    sk.ter.push_back(ls.size());
    (ls.size() == 1 ? sk.m1 : sk.m2).push_back(v);
    sk.legs.push_back(ls);
  }
  sk.ex = sk.exterior_major.size();

  std::deque<Vertex> queue;
  std::vector<char> seen(n, 0);
  for (Vertex v : majors) {
    seen[v] = 1;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex x : t.neighbors(v)) {
      if (!seen[x]) {
        seen[x] = 1;
        sk.major_distance[x] = sk.major_distance[v] + 1;
        queue.push_back(x);
      }
    }
  }

  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] >= 3) {
      bool exterior = legs.count(v) > 0;
      sk.zone[v] = exterior ? TreeZone::Gamma : TreeZone::D;
      if (!exterior) sk.d.push_back(v);
    } else if (!on_leg[v]) {
      sk.zone[v] = TreeZone::D;
      sk.d.push_back(v);
    } else if (legs[leg_major[v]].size() == 1) {
      sk.zone[v] = TreeZone::T1MinusGamma;
    } else {
      sk.zone[v] = leg_pos[v] == 1 ? TreeZone::Gamma : TreeZone::T2MinusGamma;
    }
  }
  return sk;
}

std::optional<FamilyKind> recognize(const Graph& g) {
  if (!is_connected(g)) return std::nullopt;
  for (FamilyKind k : kOrder) {
    if (shape_of(g, k)) return k;
  }
  return std::nullopt;
}

FormulaResult dim_formula(const Graph& g) { return dim_of(recognize_shape(g)); }
FormulaResult dim_formula(const FamilySpec& spec) { return dim_of(from_spec(spec).shape); }
FormulaResult cdim_formula(const Graph& g) { return cdim_of(recognize_shape(g)); }
FormulaResult cdim_formula(const FamilySpec& spec) { return cdim_of(from_spec(spec).shape); }

FormulaResult cdim_at_vertex_formula(const Graph& g, Vertex v) { return cdim_at_of(g, recognize_shape(g), v); }

FormulaResult cdim_at_vertex_formula(const FamilySpec& spec, Vertex v) {
  Input in = from_spec(spec);
  return cdim_at_of(in.graph, in.shape, v);
}

DimBounds dim_bounds(const Graph& g) {
  DistanceMatrix dm = all_pairs_distances(g);
  return {diameter_floor(g.order(), dm.diameter()), g.order() - dm.diameter()};
}

ExtremeClassification classify_extremes(const Graph& g, std::optional<Vertex> v) {
  const std::size_t n = g.order();
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "graph is not connected");
  ExtremeClassification c;
  const bool complete = is_complete_graph(g);
  const bool star = is_star_graph(g);
  c.cdim_is_n_minus_1 = complete || star;
  c.reason = complete ? "complete" : star ? "star" : "none";
  if (!v) return c;
  if (*v >= n) throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(*v) + " out of range");

  const bool path = is_path_graph(g);
  c.at_is_one = path && g.degree(*v) <= 1;
  if (*c.at_is_one) c.reason = complete ? "complete path end" : "path end";
  if (c.cdim_is_n_minus_1) {
    c.at_is_n_minus_1 = true;
    return c;
  }
  if (path && n == 3 && g.degree(*v) == 2) {
    c.at_is_n_minus_1 = true;
    c.reason = "P3 middle";
    return c;
  }
  // v = u1 of a fork or paddle: one vertex per BFS layer up to the last, and
  // the last layer (at least two vertices) is independent or a clique.
  c.at_is_n_minus_1 = false;
  auto dist = bfs_distances(g, *v);
  std::size_t ecc = *std::max_element(dist.begin(), dist.end());
  if (n < 4 || ecc < 2) return c;
  std::vector<std::size_t> layer(ecc + 1, 0);
  std::vector<Vertex> last;
  for (Vertex x = 0; x < n; ++x) {
    ++layer[dist[x]];
    if (dist[x] == ecc) last.push_back(x);
  }
  for (std::size_t i = 0; i < ecc; ++i) {
    if (layer[i] != 1) return c;
  }
  if (last.size() < 2) return c;
  std::size_t inner = 0;
  for (std::size_t i = 0; i < last.size(); ++i) {
    for (std::size_t j = i + 1; j < last.size(); ++j) inner += g.has_edge(last[i], last[j]) ? 1 : 0;
  }
  if (inner == 0 || inner * 2 == last.size() * (last.size() - 1)) {
    c.at_is_n_minus_1 = true;
    c.reason = inner == 0 ? "fork tail end" : "paddle tail end";
  }
  return c;
}

std::optional<std::string> fr_refutation(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex w,
                                         FrMembership* out) {
  const std::size_t n = g.order();
  if (!g.has_edge(u, w)) return "uw is not an edge";
  enum Role { X = 0, Y = 1, Z = 2 };
  constexpr std::array<char, 3> kName{'x', 'y', 'z'};
  constexpr Vertex kNone = ~Vertex{0};
  std::vector<std::array<Vertex, 3>> slot(1, {kNone, kNone, kNone});
  std::vector<int> role(n, -1);
  std::vector<std::size_t> level(n, 0);
  auto name = [&](Vertex v) {
    if (v == u) return std::string("u");
    if (v == w) return std::string("w");
    return kName[role[v]] + std::to_string(level[v]);
  };

  for (Vertex v = 0; v < n; ++v) {
    if (v == u || v == w) continue;
    const std::size_t du = dm(u, v), dw = dm(w, v);
    if (du == dw) {
      role[v] = Y;
      level[v] = du;
    } else if (du + 1 == dw) {
      role[v] = X;
      level[v] = du;
    } else if (dw + 1 == du) {
      role[v] = Z;
      level[v] = dw;
    } else {
      return "R1: vertex " + std::to_string(v) + " fits no role";
    }
    if (slot.size() <= level[v]) slot.resize(level[v] + 1, {kNone, kNone, kNone});
    Vertex& cell = slot[level[v]][role[v]];
    if (cell != kNone) return "R1: two vertices take role " + name(v);
    cell = v;
  }
  const std::size_t r = slot.size() - 1;
  auto at = [&](std::size_t a, int k) { return a >= 1 && a <= r ? slot[a][k] : kNone; };
  auto linked = [&](Vertex a, Vertex b) { return a != kNone && b != kNone && g.has_edge(a, b); };

  if (at(1, X) != kNone && !linked(at(1, X), u)) return std::string("R2: x1 not adjacent to u");
  if (at(1, Z) != kNone && !linked(at(1, Z), w)) return std::string("R3: z1 not adjacent to w");
  if (at(1, Y) != kNone && !(linked(at(1, Y), u) && linked(at(1, Y), w))) {
    return std::string("R4: y1 not adjacent to both u and w");
  }
  for (std::size_t a = 2; a <= r; ++a) {
    if (at(a, X) != kNone && !linked(at(a, X), at(a - 1, X))) return "R5: x" + std::to_string(a) + " detached";
    if (at(a, Z) != kNone && !linked(at(a, Z), at(a - 1, Z))) return "R6: z" + std::to_string(a) + " detached";
    Vertex y = at(a, Y);
    if (y != kNone && !((linked(y, at(a - 1, X)) && linked(y, at(a - 1, Z))) || linked(y, at(a - 1, Y)))) {
      return "R7: y" + std::to_string(a) + " lacks its previous-level edges";
    }
  }

  FrFlags flags;
  flags.levels.resize(r);
  for (std::size_t a = 1; a <= r; ++a) {
    flags.levels[a - 1].x = at(a, X) != kNone;
    flags.levels[a - 1].y = at(a, Y) != kNone;
    flags.levels[a - 1].z = at(a, Z) != kNone;
  }
  for (auto [p, q] : g.edges()) {
    if ((p == u && q == w) || (p == w && q == u)) continue;
    if (p == u || p == w || q == u || q == w) {
      Vertex hub = (p == u || p == w) ? p : q;
      Vertex o = hub == p ? q : p;
      if (o == u || o == w) continue;
      bool ok = level[o] == 1 && (role[o] == Y || (hub == u && role[o] == X) || (hub == w && role[o] == Z));
      if (!ok) return "R9: extra edge " + name(hub) + name(o);
      continue;
    }
    if (level[p] > level[q]) std::swap(p, q);
    const std::size_t a = level[p];
    if (a == level[q]) {
      FrLevel& l = flags.levels[a - 1];
      int lo = std::min(role[p], role[q]), hi = std::max(role[p], role[q]);
      (lo == X ? (hi == Y ? l.xy : l.xz) : l.yz) = true;
      continue;
    }
    if (a + 1 != level[q]) return "R9: extra edge " + name(p) + name(q);
    FrLevel& l = flags.levels[a];
    if (role[q] == Y) {
      (role[p] == X ? l.y_to_x : role[p] == Y ? l.y_to_y : l.y_to_z) = true;
    } else if (role[q] != role[p]) {
      return "R9: extra edge " + name(p) + name(q);
    }
  }

  // The flags must rebuild exactly this graph.
  try {
    validate(flags);
  } catch (const Error& e) {
    throw std::logic_error(std::string("role labeling passed but flags fail: ") + e.what());
  }
  Generated rebuilt = generate(family::Fr{flags, std::nullopt});
  if (rebuilt.graph.size() != g.size() || rebuilt.graph.order() != n) {
    throw std::logic_error("role labeling passed but the rebuilt graph differs");
  }
  for (auto [p, q] : g.edges()) {
    if (!rebuilt.graph.has_edge(rebuilt.at(name(p)), rebuilt.at(name(q)))) {
      throw std::logic_error("role labeling passed but the rebuilt graph differs");
    }
  }
  if (out) {
    out->r = r;
    out->pair = Edge{u, w};
    out->roles.resize(n);
    for (Vertex v = 0; v < n; ++v) out->roles[v] = name(v);
    out->flags = std::move(flags);
  }
  return std::nullopt;
}

FrMembership fr_membership(const Graph& g) {
  DistanceMatrix dm = all_pairs_distances(g);
  FrMembership m;
  std::string first_refutation;
  for (auto [u, w] : g.edges()) {
    const std::array<Vertex, 2> pair{u, w};
    bool resolves = check_resolving(g, dm, pair).resolving;
    FrMembership candidate;
    auto refutation = fr_refutation(g, dm, u, w, &candidate);
    if (resolves != !refutation) {
      throw std::logic_error("adjacent-pair search and rule check disagree on (" + std::to_string(u) + "," +
                             std::to_string(w) + ")");
    }
    if (!refutation && !m.member) {
      m = std::move(candidate);
      m.member = true;
    }
    if (refutation && first_refutation.empty()) {
      first_refutation = "(" + std::to_string(u) + "," + std::to_string(w) + ") " + *refutation;
    }
  }
  if (!m.member) m.refutation = "no adjacent pair works; first: " + first_refutation;
  return m;
}

UnicyclicClass unicyclic_cdim_eq_dim(const Graph& g) {
  const std::size_t n = g.order();
  if (g.size() != n || !is_connected(g)) throw Error(ErrorCode::NotUnicyclic, "graph is not unicyclic");
  auto deg = degrees(g);
  auto core_deg = deg;
  std::vector<char> core(n, 1);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (core_deg[v] == 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    Vertex v = leaves.back();
    leaves.pop_back();
    core[v] = 0;
    for (Vertex x : g.neighbors(v)) {
      if (core[x] && --core_deg[x] == 1) leaves.push_back(x);
    }
  }
  std::vector<Vertex> cycle;
  Vertex start = static_cast<Vertex>(std::find(core.begin(), core.end(), 1) - core.begin());
  Vertex prev = start, cur = start;
  do {
    cycle.push_back(cur);
    Vertex next = cur;
    for (Vertex x : g.neighbors(cur)) {
      if (core[x] && x != prev && (cycle.size() == 1 || x != cycle[cycle.size() - 2])) {
        next = x;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != start);

  UnicyclicClass u;
  u.cycle_length = cycle.size();
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] > (core[v] ? 3U : 2U)) {
      u.case_label = "not a generalized sun";
      return u;
    }
  }
  const std::size_t c = cycle.size();
  std::size_t run = 0, best = 0;
  for (std::size_t i = 0; i < 2 * c; ++i) {
    run = deg[cycle[i % c]] == 2 ? run + 1 : 0;
    best = std::max(best, std::min(run, c));
  }
  u.degree_two_run = best;
  const std::size_t k = c / 2;
  if (best + 2 < 2 * k) {
    u.case_label = "degree-two run " + std::to_string(best) + " < " + std::to_string(2 * k - 2);
    return u;
  }
  u.cdim_equals_dim = true;
  u.case_label = c % 2 ? "U1" : "U2";
  return u;
}

std::vector<std::vector<Vertex>> tree_min_resolving_sets(const Graph& t, std::size_t cap) {
  TreeSkeleton sk = tree_skeleton(t);
  if (sk.is_path()) throw Error(ErrorCode::IsAPath, "a path has no exterior major vertex");

  // Per major vertex: every choice of omitted leg and one vertex on each other leg.
  std::vector<std::vector<std::vector<Vertex>>> options;
  std::size_t total = 1;
  for (const auto& legs : sk.legs) {
    std::vector<std::vector<Vertex>> local;
    for (std::size_t skip = 0; skip < legs.size(); ++skip) {
      std::vector<std::vector<Vertex>> partial{{}};
      for (std::size_t j = 0; j < legs.size(); ++j) {
        if (j == skip) continue;
        if (partial.size() * legs[j].size() > cap) throw Error(ErrorCode::TooMany, "more than the set cap");
        std::vector<std::vector<Vertex>> next;
        for (const auto& p : partial) {
          for (Vertex x : legs[j]) {
            next.push_back(p);
            next.back().push_back(x);
          }
        }
        partial = std::move(next);
      }
      local.insert(local.end(), partial.begin(), partial.end());
      if (local.size() > cap) throw Error(ErrorCode::TooMany, "more than the set cap");
    }
    if (total > cap / local.size()) {
      throw Error(ErrorCode::TooMany, "more than " + std::to_string(cap) + " minimum resolving sets");
    }
    total *= local.size();
    options.push_back(std::move(local));
  }

  std::vector<std::vector<Vertex>> sets{{}};
  for (const auto& local : options) {
    std::vector<std::vector<Vertex>> next;
    next.reserve(sets.size() * local.size());
    for (const auto& s : sets) {
      for (const auto& add : local) {
        next.push_back(s);
        next.back().insert(next.back().end(), add.begin(), add.end());
      }
    }
    sets = std::move(next);
  }
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace metdim
