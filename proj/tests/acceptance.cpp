#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "metdim/closed_forms.hpp"
#include "metdim/families.hpp"
#include "metdim/minor.hpp"
#include "metdim/solver.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace metdim;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

std::vector<Graph> touched;

Graph keep(const Graph& g) {
  touched.push_back(g);
  return g;
}

Generated keep(Generated g) {
  touched.push_back(g.graph);
  return g;
}

Generated family(const std::string& text) { return keep(generate(parse_family(text))); }

std::vector<Vertex> one(Vertex v) { return {v}; }

std::string str(std::size_t v) { return std::to_string(v); }

// 1
void petersen(Verdict& out) {
  Generated p = family("petersen");
  auto d = dim_exact(p.graph);
  auto c = cdim_exact(p.graph);
  auto prof = vertex_profile(p.graph);
  out.expect(d.value == 3, "dim " + str(d.value));
  out.expect(c.value == 4, "cdim " + str(c.value));
  out.expect(prof.per_vertex == std::vector<std::size_t>(10, 4), "profile not all 4");
  auto sets = enumerate_min_resolving_sets(p.graph);
  std::size_t edgeless = 0;
  for (const auto& s : sets) edgeless += induced_subgraph(p.graph, s).size() == 0;
  out.expect(!sets.empty() && edgeless == sets.size(), "a minimum resolving set has an edge");
  out.note << "dim " << d.value << ", cdim " << c.value << ", " << sets.size() << " minimum sets, all edgeless";
}

// 2
void wheels(Verdict& out) {
  for (std::size_t n = 3; n <= 12; ++n) {
    Generated w = family("wheel:" + str(n));
    std::size_t want_dim = (n == 3 || n == 6) ? 3 : (2 * n + 2) / 5;
    std::size_t want_cdim = n == 3 ? 3 : n <= 5 ? 2 : (2 * n + 2) / 5 + 1;
    auto d = dim_exact(w.graph).value;
    auto c = cdim_exact(w.graph).value;
    out.expect(d == want_dim, "wheel " + str(n) + " dim " + str(d));
    out.expect(c == want_cdim, "wheel " + str(n) + " cdim " + str(c));
    if (n == 4 || n == 5) {
      auto prof = vertex_profile(w.graph);
      out.expect(prof.per_vertex[w.at("w")] == 3, "wheel " + str(n) + " hub");
      for (std::size_t i = 1; i <= n; ++i) out.expect(prof.per_vertex[w.at("u" + str(i))] == 2, "wheel rim");
    }
  }
  out.note << "rims 3..12";
}

// Leaves, exterior major vertices, and the leg vertices between them.
struct TreeCounts {
  std::size_t sigma = 0, ex = 0, d = 0;
  bool path = false;
};

TreeCounts count_tree(const Graph& t) {
  TreeCounts c;
  std::set<Vertex> exterior;
  std::vector<bool> on_leg(t.order(), false);
  for (Vertex leaf = 0; leaf < t.order(); ++leaf) {
    if (t.degree(leaf) != 1) continue;
    ++c.sigma;
    on_leg[leaf] = true;
    Vertex prev = leaf, cur = t.neighbors(leaf)[0];
    while (t.degree(cur) == 2) {
      on_leg[cur] = true;
      Vertex next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
      prev = cur;
      cur = next;
    }
    if (t.degree(cur) >= 3) exterior.insert(cur);
    else c.path = true;
  }
  c.ex = exterior.size();
  for (Vertex v = 0; v < t.order(); ++v) c.d += t.degree(v) >= 2 && !on_leg[v] && !exterior.count(v);
  return c;
}

// 3
void trees(Verdict& out) {
  std::mt19937_64 rng(2024);
  std::size_t vertices = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial) % 12;
    Graph t = keep(gen::random_tree(n, rng));
    auto c = count_tree(t);
    auto d = dim_exact(t).value;
    auto cd = cdim_exact(t).value;
    out.expect(d == (c.path ? 1 : c.sigma - c.ex), "tree dim");
    out.expect(cd == (c.path ? 1 : c.d + c.sigma), "tree cdim");
    out.expect(cd == cdim_formula(t).value, "tree cdim formula");
    for (Vertex v = 0; v < n; ++v) {
      auto at = cdim_at_set(t, one(v)).value;
      out.expect(at == cdim_at_vertex_formula(t, v).value, "tree per-vertex formula at trial " + str(trial));
    }
    vertices += n;
    if (!c.path) out.expect(tree_min_resolving_sets(t) == oracle::all_min_resolving(t), "tree set enumeration");
  }
  out.note << "200 trees, " << vertices << " vertices checked";
}

// 4
void grids(Verdict& out) {
  SolverOptions opts;
  opts.cap = opts.enumeration_cap = 25;
  for (std::size_t s = 2; s <= 5; ++s) {
    for (std::size_t t = 2; t <= s; ++t) {
      Generated g = family("grid:" + str(s) + "x" + str(t));
      const std::string tag = "grid " + str(s) + "x" + str(t);
      out.expect(dim_exact(g.graph, opts).value == 2, tag + " dim");
      auto corner = [&](std::size_t i, std::size_t j) { return g.at("u" + str(i) + "w" + str(j)); };
      std::vector<std::vector<Vertex>> sides{{corner(1, 1), corner(1, t)},
                                             {corner(s, 1), corner(s, t)},
                                             {corner(1, 1), corner(s, 1)},
                                             {corner(1, t), corner(s, t)}};
      for (auto& p : sides) std::sort(p.begin(), p.end());
      std::sort(sides.begin(), sides.end());
      out.expect(enumerate_min_resolving_sets(g.graph, opts) == sides, tag + " minimum sets");
      out.expect(cdim_exact(g.graph, opts).value == t, tag + " cdim");
      auto prof = vertex_profile(g.graph, opts);
      for (std::size_t i = 1; i <= s; ++i) {
        for (std::size_t j = 1; j <= t; ++j) {
          Vertex v = corner(i, j);
          bool low = s == t ? g.graph.degree(v) <= 3 : (i == 1 || i == s);
          out.expect(prof.per_vertex[v] == (low ? t : t + 1), tag + " per-vertex");
        }
      }
    }
  }
  out.note << "10 grids";
}

// 5
void bouquets(Verdict& out) {
  std::size_t count = 0;
  const std::size_t lengths[] = {3, 4, 5, 6};
  std::vector<std::vector<std::size_t>> shapes;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      shapes.push_back({lengths[i], lengths[j]});
      for (std::size_t k = j; k < 4; ++k) shapes.push_back({lengths[i], lengths[j], lengths[k]});
    }
  for (const auto& cycles : shapes) {
    std::string text = "bouquet:";
    for (std::size_t i = 0; i < cycles.size(); ++i) text += (i ? "," : "") + str(cycles[i]);
    Generated g = family(text);
    const std::size_t m = cycles.size();
    const auto x = static_cast<std::size_t>(std::count_if(cycles.begin(), cycles.end(), [](auto c) { return c % 2 == 0; }));
    const auto b = static_cast<std::size_t>(std::count(cycles.begin(), cycles.end(), 3));
    out.expect(dim_exact(g.graph).value == (x == 0 ? m : m + x - 1), text + " dim");
    out.expect(cdim_exact(g.graph).value == (b == m ? m + 1 : 2 * m - b), text + " cdim");
    auto prof = vertex_profile(g.graph);
    FamilySpec spec = parse_family(text);
    for (Vertex v = 0; v < g.graph.order(); ++v) {
      out.expect(prof.per_vertex[v] == cdim_at_vertex_formula(spec, v).value, text + " per-vertex at " + g.labels[v]);
    }
    ++count;
  }
  out.note << count << " bouquets";
}

void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    if (cur.size() >= 2) out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

// 6
void multipartite(Verdict& out) {
  std::vector<std::vector<std::size_t>> all;
  for (std::size_t n = 2; n <= 10; ++n) {
    std::vector<std::size_t> cur;
    partitions(n, n, cur, all);
  }
  std::size_t with_cdim = 0;
  for (auto parts : all) {
    std::sort(parts.begin(), parts.end());
    std::string text = "multipartite:";
    std::size_t n = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      text += (i ? "," : "") + str(parts[i]);
      n += parts[i];
    }
    Generated g = family(text);
    const std::size_t k = parts.size();
    const auto s = static_cast<std::size_t>(std::count(parts.begin(), parts.end(), 1));
    const std::size_t want_dim = s == 0 ? n - k : n + s - k - 1;
    out.expect(dim_exact(g.graph).value == want_dim, text + " dim");
    if (n < 4) continue;
    ++with_cdim;
    const std::size_t want_cdim = s == 1 && k == 2 ? n - 1 : want_dim;
    out.expect(cdim_exact(g.graph).value == want_cdim, text + " cdim");
    auto prof = vertex_profile(g.graph);
    for (Vertex v = 0; v < n; ++v) {
      bool singleton = g.labels[v] == "p1_1" && parts[0] == 1;
      std::size_t want = want_cdim + (s == 1 && k >= 3 && singleton ? 1 : 0);
      out.expect(prof.per_vertex[v] == want, text + " per-vertex at " + g.labels[v]);
    }
  }
  out.note << all.size() << " partitions for dim, " << with_cdim << " with n >= 4 for cdim and per-vertex";
}

// 7
void paddles(Verdict& out) {
  for (std::size_t a = 3; a <= 6; ++a) {
    for (std::size_t b = 1; b <= 4; ++b) {
      Generated g = family("paddle:" + str(a) + "," + str(b));
      const std::string tag = "paddle " + str(a) + "," + str(b);
      out.expect(cdim_at_set(g.graph, one(g.at("u0"))).value == a - 1, tag + " at u0");
      for (std::size_t j = 1; j <= b; ++j) {
        out.expect(cdim_at_set(g.graph, one(g.at("w" + str(j)))).value == a + j - 1, tag + " at w" + str(j));
      }
      auto prof = vertex_profile(g.graph);
      std::set<std::size_t> values(prof.per_vertex.begin(), prof.per_vertex.end());
      std::set<std::size_t> sweep;
      for (std::size_t v = dim_exact(g.graph).value; v <= a + b - 1; ++v) sweep.insert(v);
      out.expect(values == sweep, tag + " sweep");
    }
  }
  out.note << "16 paddles";
}

// 8
void radii(Verdict& out) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rng() % 9;
    double p = 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    Graph g = keep(oracle::random_connected(n, p, rng));
    auto prof = vertex_profile(g);
    std::size_t diam = all_pairs_distances(g).diameter();
    out.expect(prof.rrad <= prof.rdiam && prof.rdiam <= prof.rrad + diam, "random graph " + str(trial));
  }
  Generated fan = family("fantail:8");
  auto prof = vertex_profile(fan.graph);
  std::size_t diam = all_pairs_distances(fan.graph).diameter();
  out.expect(prof.rrad == 2 && diam == 4 && prof.rdiam == 6, "fantail radii");
  out.expect(prof.per_vertex[fan.at("w4")] == 6, "fantail at w4");
  out.note << "100 random graphs; fantail rrad " << prof.rrad << ", diam " << diam << ", rdiam " << prof.rdiam;
}

bool is_complete(const Graph& g) { return g.size() * 2 == g.order() * (g.order() - 1); }

bool is_star(const Graph& g) {
  if (g.size() + 1 != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 == g.order()) return true;
  return false;
}

bool is_path(const Graph& g) {
  if (g.size() + 1 != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

// 9
void extremes(Verdict& out) {
  std::size_t graphs = 0;
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Graph& g : gen::connected_graphs(n)) {
      keep(g);
      ++graphs;
      auto prof = vertex_profile(g);
      const bool top = prof.rrad == n - 1;
      out.expect(top == (is_complete(g) || (n >= 4 && is_star(g))), "cdim = n-1 characterization at n=" + str(n));
      out.expect(classify_extremes(g, std::nullopt).cdim_is_n_minus_1 == top, "classifier cdim at n=" + str(n));
      for (Vertex v = 0; v < n; ++v) {
        auto c = classify_extremes(g, v);
        out.expect(c.at_is_n_minus_1 == (prof.per_vertex[v] == n - 1), "classifier at n-1, n=" + str(n));
        out.expect(c.at_is_one == (prof.per_vertex[v] == 1), "classifier at 1, n=" + str(n));
        out.expect((prof.per_vertex[v] == 1) == (is_path(g) && g.degree(v) <= 1), "value 1 only at path ends");
      }
    }
  }
  out.note << graphs << " connected graphs up to isomorphism, n <= 7";
}

// 10
void layered_and_planar(Verdict& out) {
  for (int i = 0; i < 50; ++i) {
    const std::size_t r = 1 + static_cast<std::size_t>(i) % 5;
    Generated g = keep(fr_sample(r, 500 + static_cast<std::uint64_t>(i)));
    out.expect(cdim_exact(g.graph).value <= 2, "fr sample cdim");
    out.expect(fr_membership(g.graph).member, "fr sample membership");
    out.expect(is_planar_desk(g.graph), "fr sample planar");
  }
  for (std::size_t k = 3; k <= 6; ++k) {
    Generated g = family("kite:" + str(k));
    out.expect(cdim_exact(g.graph).value == k, "kite " + str(k) + " cdim");
    auto m = has_minor(g.graph, MinorTarget::K5);
    out.expect(m.present && is_minor_model(g.graph, MinorTarget::K5, m.branch_sets), "kite " + str(k) + " K5 minor");
  }
  Generated k33 = family("k33sub");
  auto dm = all_pairs_distances(k33.graph);
  std::vector<Vertex> pair{k33.at("u2"), k33.at("u3")};
  out.expect(dim_exact(k33.graph).value == 2, "subdivided K33 dim");
  out.expect(check_resolving(k33.graph, dm, pair).resolving, "u2 u3 resolve");
  out.expect(dm(pair[0], pair[1]) == 2, "u2 u3 at distance 2");
  auto m = has_minor(k33.graph, MinorTarget::K33);
  out.expect(m.present && is_minor_model(k33.graph, MinorTarget::K33, m.branch_sets), "K33 minor");
  out.note << "50 layered samples, kites 3..6, subdivided K33";
}

// 11
void deletions(Verdict& out) {
  for (std::size_t k : {6, 7}) {
    auto p = vdel_pair(k);
    keep(p.whole.graph);
    keep(p.part.graph);
    auto whole = cdim_exact(p.whole.graph).value, part = cdim_exact(p.part.graph).value;
    out.expect(part == k + 2, "vdel " + str(k) + " cdim(G-v) " + str(part));
    out.expect(whole <= 7, "vdel " + str(k) + " cdim(G) " + str(whole));
    out.note << "vdel " << k << ": " << whole << " vs " << part << "; ";
  }
  for (auto [k, a] : {std::pair<std::size_t, std::size_t>{3, 4}, {3, 5}, {4, 4}}) {
    auto p = edel_pair(k, a);
    keep(p.whole.graph);
    keep(p.part.graph);
    auto whole = cdim_exact(p.whole.graph).value, part = cdim_exact(p.part.graph).value;
    out.expect(whole == part + a - 3, "edel " + str(k) + "," + str(a));
    out.note << "edel " << k << "," << a << ": " << whole << " vs " << part << "; ";
  }
}

std::size_t cycle_length(const Graph& g) {
  std::vector<std::size_t> deg(g.order());
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < g.order(); ++v)
    if ((deg[v] = g.degree(v)) == 1) leaves.push_back(v);
  std::size_t removed = 0;
  while (!leaves.empty()) {
    Vertex v = leaves.back();
    leaves.pop_back();
    ++removed;
    for (Vertex w : g.neighbors(v))
      if (--deg[w] == 1) leaves.push_back(w);
  }
  return g.order() - removed;
}

// 12
void unicyclic(Verdict& out) {
  std::mt19937_64 rng(12);
  std::size_t equal = 0, suns = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const bool sun = trial % 2 == 0;
    Graph g = keep(gen::random_unicyclic(13, sun, rng));
    auto d = dim_exact(g).value, c = cdim_exact(g).value;
    out.expect(unicyclic_cdim_eq_dim(g).cdim_equals_dim == (d == c), "classification at trial " + str(trial));
    equal += d == c;
    if (sun) {
      ++suns;
      const std::size_t m = cycle_length(g);
      out.expect(m % 2 ? d == 2 : d <= 3, "sun dim at trial " + str(trial));
    }
  }
  out.note << suns << " suns, " << 100 - suns << " others, " << equal << " with cdim = dim";
}

// 13
void invariants(Verdict& out) {
  SolverOptions one_worker, two_workers;
  one_worker.cap = two_workers.cap = 25;
  two_workers.workers = 2;
  for (const Graph& g : touched) {
    const std::size_t n = g.order();
    auto dm = all_pairs_distances(g);
    auto d = dim_exact(g, one_worker);
    auto c = cdim_exact(g, one_worker);
    auto prof = vertex_profile(g, one_worker);
    out.expect(check_resolving(g, dm, d.witness).resolving && d.witness.size() == d.value, "dim witness");
    out.expect(check_resolving(g, dm, c.witness).resolving && is_connected_subset(g, c.witness) &&
                   c.witness.size() == c.value,
               "cdim witness");
    out.expect(d.value <= c.value, "dim <= cdim");
    out.expect(d.value >= twin_partition(g).lower_bound(), "twin bound");
    out.expect(diameter_floor(n, dm.diameter()) <= d.value && d.value <= n - dm.diameter(), "diameter bounds");
    out.expect(prof.rrad == c.value, "rrad = cdim");
    for (Vertex v = 0; v < n; ++v) {
      out.expect(c.value <= prof.per_vertex[v] && prof.per_vertex[v] <= std::max<std::size_t>(1, n - 1), "sandwich");
      for (Vertex w : g.neighbors(v)) {
        std::size_t x = prof.per_vertex[v], y = prof.per_vertex[w];
        out.expect((x > y ? x - y : y - x) <= 1, "edge-Lipschitz");
      }
    }
    auto d2 = dim_exact(g, two_workers);
    auto c2 = cdim_exact(g, two_workers);
    out.expect(d2.witness == d.witness && c2.witness == c.witness, "parallel determinism");
    out.expect(vertex_profile(g, two_workers).per_vertex == prof.per_vertex, "parallel profile");
  }
  out.note << touched.size() << " graphs";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void(Verdict&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "petersen", 1, petersen},
      {2, "wheels", 5, wheels},
      {3, "trees", 60, trees},
      {4, "grids", 30, grids},
      {5, "bouquets", 60, bouquets},
      {6, "complete multipartite", 30, multipartite},
      {7, "paddle realization", 30, paddles},
      {8, "rrad and rdiam", 60, radii},
      {9, "extremes closure", 90, extremes},
      {10, "layered family and planarity", 60, layered_and_planar},
      {11, "deletion gaps", 30, deletions},
      {12, "unicyclic classification", 60, unicyclic},
      {13, "cross-cutting invariants", 120, invariants},
  };
  int failed = 0;
  double total = 0;
  for (const auto& c : criteria) {
    Verdict v;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.ok = false;
      v.note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += secs;
    bool ok = v.ok && secs < c.limit_s;
    if (v.ok && !ok) v.note << "; over time limit";
    failed += !ok;
    std::printf("criterion %2d %s  %-30s %7.2f s (limit %3.0f s)  %s\n", c.id, ok ? "PASS" : "FAIL", c.name, secs,
                c.limit_s, v.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("total %.2f s (limit 300 s)\n", total);
  return failed == 0 && total < 300 ? 0 : 1;
}
