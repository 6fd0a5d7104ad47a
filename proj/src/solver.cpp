#include "metdim/solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "search_kernel.hpp"

namespace metdim {

using detail::Mask;

namespace {

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw Error(ErrorCode::TooLarge, std::string(what) + ": order " + std::to_string(n) +
                                         " exceeds cap " + std::to_string(cap) +
                                         "; raise the cap to override");
  }
  if (n > kSolverMaxOrder) {
    throw Error(ErrorCode::TooLarge, std::string(what) + ": order " + std::to_string(n) +
                                         " exceeds the search engine limit of " +
                                         std::to_string(kSolverMaxOrder));
  }
}

// Everything a search needs about one connected graph, computed once.
struct Context {
  const Graph& g;
  DistanceMatrix dm;
  TwinPartition twins;
  detail::Resolver resolver;
  std::vector<Mask> adj;
  std::size_t floor;

  explicit Context(const Graph& graph)
      : g(graph),
        dm(all_pairs_distances(graph)),
        twins(twin_partition(graph)),
        resolver(graph, dm, twins),
        adj(graph.order()) {
    for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.mask(v);
    floor = std::max<std::size_t>({1, twins.lower_bound(), diameter_floor(g.order(), dm.diameter())});
  }

  std::size_t n() const { return g.order(); }
};

// Fixed-size subsets in lexicographic order, pruned by the twin constraint.
template <class Visit>
class SubsetWalk {
 public:
  SubsetWalk(const Context& ctx, std::size_t k, Visit& visit)
      : ctx_(ctx), k_(k), visit_(visit), scratch_(ctx.resolver.make_scratch()),
        class_of_(ctx.n(), -1) {
    int c = 0;
    for (const auto& cls : ctx.twins.classes) {
      if (cls.size() >= 2) {
        for (Vertex v : cls) class_of_[v] = c;
        ++c;
      }
    }
    skipped_.assign(static_cast<std::size_t>(c), 0);
  }

  /// Subsets whose smallest element is `first`.
  bool run(Vertex first) {
    std::fill(skipped_.begin(), skipped_.end(), 0);
    for (Vertex v = 0; v < first; ++v) {
      if (!skip(v)) return true;
    }
    return walk(first + 1, detail::bit(first), 1);
  }

 private:
  bool skip(Vertex v) {
    int c = class_of_[v];
    if (c < 0) return true;
    if (skipped_[static_cast<std::size_t>(c)] > 0) return false;
    ++skipped_[static_cast<std::size_t>(c)];
    return true;
  }

  bool walk(Vertex i, Mask set, std::size_t size) {
    if (size == k_) return ctx_.resolver.resolves(set, scratch_) ? visit_(set) : true;
    if (ctx_.n() - i < k_ - size) return true;
    if (!walk(i + 1, set | detail::bit(i), size + 1)) return false;
    int c = class_of_[i];
    if (c >= 0) {
      auto& cnt = skipped_[static_cast<std::size_t>(c)];
      if (cnt > 0) return true;
      ++cnt;
      bool go = walk(i + 1, set, size);
      --cnt;
      return go;
    }
    return walk(i + 1, set, size);
  }

  const Context& ctx_;
  std::size_t k_;
  Visit& visit_;
  detail::Resolver::Scratch scratch_;
  std::vector<int> class_of_;
  std::vector<int> skipped_;
};

std::optional<Mask> first_resolving_subset(const Context& ctx, std::size_t k, Vertex first) {
  std::optional<Mask> found;
  auto visit = [&](Mask s) {
    found = s;
    return false;
  };
  SubsetWalk walk(ctx, k, visit);
  walk.run(first);
  return found;
}

// Lexicographically smallest connected resolving set of size k containing
// `anchor` whose minimum is `seed`.
std::optional<Mask> best_connected(const Context& ctx, std::size_t k, Vertex seed, Mask anchor) {
  auto scratch = ctx.resolver.make_scratch();
  std::optional<Mask> best;
  auto visit = [&](Mask s) {
    if ((s & anchor) == anchor && (!best || detail::lex_less(s, *best)) &&
        ctx.resolver.resolves(s, scratch)) {
      best = s;
    }
    return true;
  };
  detail::ConnectedSets<decltype(visit)> sets(ctx.adj, k, detail::above(seed, ctx.n()), anchor, visit);
  sets.run(seed);
  return best;
}

SearchResult connected_search(const Context& ctx, Mask anchor, unsigned workers) {
  const std::size_t n = ctx.n();
  std::size_t lo = std::max<std::size_t>(ctx.floor, static_cast<std::size_t>(std::popcount(anchor)));
  std::size_t seeds = anchor ? static_cast<std::size_t>(std::countr_zero(anchor)) + 1 : n;
  for (std::size_t k = lo; k <= n; ++k) {
    auto hit = detail::first_hit<Mask>(seeds, workers, [&](std::size_t i) {
      return best_connected(ctx, k, static_cast<Vertex>(i), anchor);
    });
    if (hit) return {k, detail::to_vertices(hit->second)};
  }
  // V itself always qualifies, so the loop returns before this point.
  throw Error(ErrorCode::Unsupported, "no connected resolving set found");
}

}  // namespace

std::size_t diameter_floor(std::size_t n, std::size_t d) {
  for (std::size_t k = 1;; ++k) {
    // k + d^k >= n, with the power saturating once it reaches n.
    std::size_t power = 1;
    for (std::size_t i = 0; i < k && power < n; ++i) power *= d;
    if (k + std::min(power, n) >= n) return k;
  }
}

ResolvingCertificate check_resolving(const Graph& g, const DistanceMatrix& dm,
                                     std::span<const Vertex> set) {
  if (set.empty()) throw Error(ErrorCode::EmptySet, "resolving-set candidate is empty");
  const std::size_t n = g.order();
  for (Vertex v : set) {
    if (v >= n) throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
  }
  ResolvingCertificate cert;
  cert.set.assign(set.begin(), set.end());
  cert.codes.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    cert.codes[v].reserve(set.size());
    for (Vertex s : set) cert.codes[v].push_back(dm(v, s));
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return cert.codes[a] < cert.codes[b]; });
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (cert.codes[order[i]] != cert.codes[order[i + 1]]) continue;
    // Within a run of equal codes the stable sort keeps index order, so the
    // first two entries form that run's smallest pair.
    std::pair<Vertex, Vertex> pair{order[i], order[i + 1]};
    if (!cert.witness_pair || pair < *cert.witness_pair) cert.witness_pair = pair;
    while (i + 1 < n && cert.codes[order[i]] == cert.codes[order[i + 1]]) ++i;
  }
  cert.resolving = !cert.witness_pair.has_value();
  return cert;
}

SearchResult dim_exact(const Graph& g, const SolverOptions& opts) {
  check_cap(g.order(), opts.cap, "dim");
  Context ctx(g);
  if (g.order() == 2) return {1, {0}};
  for (std::size_t k = ctx.floor; k <= ctx.n(); ++k) {
    auto hit = detail::first_hit<Mask>(ctx.n(), opts.workers, [&](std::size_t i) {
      return first_resolving_subset(ctx, k, static_cast<Vertex>(i));
    });
    if (hit) return {k, detail::to_vertices(hit->second)};
  }
  throw Error(ErrorCode::Unsupported, "no resolving set found");
}

SearchResult cdim_exact(const Graph& g, const SolverOptions& opts) {
  return cdim_at_set(g, {}, opts);
}

SearchResult cdim_at_set(const Graph& g, std::span<const Vertex> anchor, const SolverOptions& opts) {
  for (Vertex v : anchor) {
    if (v >= g.order()) {
      throw Error(ErrorCode::InvalidAnchor, "anchor vertex " + std::to_string(v) + " out of range");
    }
  }
  check_cap(g.order(), opts.cap, "cdim");
  Context ctx(g);
  Mask a = detail::to_mask(anchor);
  if (g.order() == 2) {
    // Either vertex alone resolves K_2.
    if (std::popcount(a) == 2) return {2, {0, 1}};
    return {1, {a ? static_cast<Vertex>(std::countr_zero(a)) : Vertex{0}}};
  }
  return connected_search(ctx, a, opts.workers);
}

VertexProfile vertex_profile(const Graph& g, const SolverOptions& opts) {
  check_cap(g.order(), opts.cap, "profile");
  const std::size_t n = g.order();
  VertexProfile p;
  p.per_vertex.assign(n, 0);
  if (n == 2) {
    p.per_vertex = {1, 1};
  } else {
    Context ctx(g);
    Mask uncovered = detail::above(0, n) | 1;
    std::size_t k = connected_search(ctx, 0, opts.workers).value;
    // Each pass marks every vertex lying in some connected resolving k-set;
    // supersets of resolving sets resolve, so later passes only grow coverage.
    for (; uncovered && k <= n; ++k) {
      auto covered = detail::run_all<Mask>(n, opts.workers, [&](std::size_t i) {
        auto scratch = ctx.resolver.make_scratch();
        Mask hit = 0;
        auto visit = [&](Mask s) {
          if ((s & uncovered & ~hit) && ctx.resolver.resolves(s, scratch)) hit |= s;
          return true;
        };
        detail::ConnectedSets<decltype(visit)> sets(ctx.adj, k, detail::above(static_cast<Vertex>(i), n),
                                                    0, visit);
        sets.run(static_cast<Vertex>(i));
        return hit;
      });
      Mask fresh = std::accumulate(covered.begin(), covered.end(), Mask{0}, std::bit_or<>()) & uncovered;
      for (Vertex v : detail::to_vertices(fresh)) p.per_vertex[v] = k;
      uncovered &= ~fresh;
    }
  }
  p.rrad = *std::min_element(p.per_vertex.begin(), p.per_vertex.end());
  p.rdiam = *std::max_element(p.per_vertex.begin(), p.per_vertex.end());
  for (Vertex v = 0; v < n; ++v) {
    if (p.per_vertex[v] == p.rrad) p.rc.push_back(v);
    if (p.per_vertex[v] == p.rdiam) p.rp.push_back(v);
  }
  return p;
}

std::vector<std::vector<Vertex>> enumerate_min_resolving_sets(const Graph& g, const SolverOptions& opts) {
  check_cap(g.order(), opts.enumeration_cap, "enumerate");
  SolverOptions inner = opts;
  inner.cap = std::max(opts.cap, opts.enumeration_cap);
  const std::size_t k = dim_exact(g, inner).value;
  Context ctx(g);
  auto per_first = detail::run_all<std::vector<Mask>>(ctx.n(), opts.workers, [&](std::size_t i) {
    std::vector<Mask> found;
    auto visit = [&](Mask s) {
      found.push_back(s);
      return true;
    };
    SubsetWalk walk(ctx, k, visit);
    walk.run(static_cast<Vertex>(i));
    return found;
  });
  std::vector<std::vector<Vertex>> out;
  for (const auto& list : per_first) {
    for (Mask s : list) out.push_back(detail::to_vertices(s));
  }
  return out;
}

}  // namespace metdim
