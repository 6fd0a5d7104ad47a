#include "metdim/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace metdim {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvalidAnchor: return "InvalidAnchor";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::RuleViolation: return "RuleViolation";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotUnicyclic: return "NotUnicyclic";
    case ErrorCode::IsAPath: return "IsAPath";
    case ErrorCode::TooMany: return "TooMany";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
  }
  return "Unknown";
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  if (n < 2) throw Error(ErrorCode::TooSmall, "graph needs at least two vertices, got " + std::to_string(n));
  if (n > kMaxOrder) {
    throw Error(ErrorCode::TooLarge, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
  Graph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.rows_.assign(n * g.words_, 0);

  std::vector<std::vector<Vertex>> lists(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::InvalidEdge,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw Error(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(u));
    if (g.has_edge(u, v)) {
      g.had_duplicates_ = true;
      continue;
    }
    g.rows_[u * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    g.rows_[v * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    lists[u].push_back(v);
    lists[v].push_back(u);
    ++g.m_;
  }

  g.offsets_.resize(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(lists[v].begin(), lists[v].end());
    g.offsets_[v + 1] = g.offsets_[v] + lists[v].size();
  }
  g.nbrs_.reserve(2 * g.m_);
  for (auto& l : lists) g.nbrs_.insert(g.nbrs_.end(), l.begin(), l.end());
  return g;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> index(g.order(), kUnreachable);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] != kUnreachable && index[v] != kUnreachable) edges.emplace_back(index[u], index[v]);
  }
  return build_graph(keep.size(), edges);
}

Graph remove_vertex(const Graph& g, Vertex v) {
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced_subgraph(g, keep);
}

Graph remove_edge(const Graph& g, Vertex u, Vertex v) {
  std::vector<Edge> edges;
  for (auto e : g.edges()) {
    if (e != Edge{std::min(u, v), std::max(u, v)}) edges.push_back(e);
  }
  return build_graph(g.order(), edges);
}

std::vector<std::uint16_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::uint16_t> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = static_cast<std::uint16_t>(dist[u] + 1);
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](auto x) { return x == kUnreachable; });
}

bool is_connected_subset(const Graph& g, std::span<const Vertex> members) {
  if (members.empty()) return false;
  std::vector<char> in(g.order(), 0), seen(g.order(), 0);
  for (Vertex v : members) in[v] = 1;
  std::vector<Vertex> stack{members.front()};
  seen[members.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  std::size_t distinct = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
  return reached == distinct;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix dm;
  dm.n_ = n;
  dm.d_.resize(n * n);
  dm.ecc_.resize(n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    std::uint16_t ecc = 0;
    for (auto d : row) {
      if (d == kUnreachable) throw Error(ErrorCode::NotConnected, "graph is not connected");
      ecc = std::max(ecc, d);
    }
    std::copy(row.begin(), row.end(), dm.d_.begin() + static_cast<std::ptrdiff_t>(s * n));
    dm.ecc_[s] = ecc;
  }
  dm.rad_ = *std::min_element(dm.ecc_.begin(), dm.ecc_.end());
  dm.diam_ = *std::max_element(dm.ecc_.begin(), dm.ecc_.end());
  return dm;
}

std::vector<Vertex> cut_vertices(const Graph& g) {
  const std::size_t n = g.order();
  if (!is_connected(g)) throw Error(ErrorCode::NotConnected, "graph is not connected");

  // Iterative Hopcroft-Tarjan low-link.
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::vector<std::size_t> next_edge(n, 0);
  std::vector<Vertex> parent(n, kUnreachable);
  std::vector<char> is_cut(n, 0);
  std::uint32_t timer = 0;
  std::size_t root_children = 0;

  std::vector<Vertex> stack{0};
  disc[0] = low[0] = ++timer;
  while (!stack.empty()) {
    Vertex u = stack.back();
    auto nb = g.neighbors(u);
    if (next_edge[u] < nb.size()) {
      Vertex w = nb[next_edge[u]++];
      if (disc[w] == 0) {
        parent[w] = u;
        disc[w] = low[w] = ++timer;
        if (u == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    if (Vertex p = parent[u]; p != kUnreachable) {
      low[p] = std::min(low[p], low[u]);
      if (p != 0 && low[u] >= disc[p]) is_cut[p] = 1;
    }
  }
  if (root_children > 1) is_cut[0] = 1;

  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

std::size_t TwinPartition::lower_bound() const noexcept {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.size() - 1;
  return total;
}

namespace {

bool are_twins(const Graph& g, Vertex u, Vertex w) {
  auto ru = g.row(u);
  auto rw = g.row(w);
  for (std::size_t i = 0; i < g.words(); ++i) {
    std::uint64_t a = ru[i], b = rw[i];
    if ((u >> 6) == i) b &= ~(std::uint64_t{1} << (u & 63));
    if ((w >> 6) == i) a &= ~(std::uint64_t{1} << (w & 63));
    if (a != b) return false;
  }
  return true;
}

}  // namespace

TwinPartition twin_partition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> root(n);
  std::iota(root.begin(), root.end(), 0);
  // Twinness is an equivalence relation, so attaching each vertex to its
  // first twin yields the classes directly.
  for (Vertex w = 0; w < n; ++w) {
    for (Vertex u = 0; u < w; ++u) {
      if (root[u] == u && g.degree(u) == g.degree(w) && are_twins(g, u, w)) {
        root[w] = u;
        break;
      }
    }
  }
  TwinPartition tp;
  std::vector<std::size_t> slot(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (root[v] == v) {
      slot[v] = tp.classes.size();
      tp.classes.push_back({v});
    } else {
      tp.classes[slot[root[v]]].push_back(v);
    }
  }
  return tp;
}

}  // namespace metdim
