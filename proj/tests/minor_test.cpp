#include <doctest.h>

#include <random>

#include "metdim/minor.hpp"
#include "support/oracles.hpp"

using namespace metdim;

namespace {

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return build_graph(n, e);
}

Graph grid(std::size_t s, std::size_t t) {
  std::vector<Edge> e;
  auto id = [t](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * t + j); };
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      if (i + 1 < s) e.emplace_back(id(i, j), id(i + 1, j));
      if (j + 1 < t) e.emplace_back(id(i, j), id(i, j + 1));
    }
  return build_graph(s * t, e);
}

// Brute force over every labeling of vertices with a branch index or "unused".
bool brute_minor(const Graph& g, MinorTarget target) {
  const std::size_t h = target == MinorTarget::K5 ? 5 : 6;
  const std::size_t n = g.order();
  std::vector<std::size_t> label(n, 0);
  for (;;) {
    std::vector<std::vector<Vertex>> sets(h);
    for (Vertex v = 0; v < n; ++v) {
      if (label[v]) sets[label[v] - 1].push_back(v);
    }
    if (is_minor_model(g, target, sets)) return true;
    std::size_t i = 0;
    while (i < n && ++label[i] > h) label[i++] = 0;
    if (i == n) return false;
  }
}

}  // namespace

TEST_CASE("named minors") {
  Graph k5 = complete(5);
  auto r = has_minor(k5, MinorTarget::K5);
  CHECK(r.present);
  CHECK(is_minor_model(k5, MinorTarget::K5, r.branch_sets));
  CHECK_FALSE(is_planar_desk(k5));

  // K5 with edge 0-4 subdivided by vertex 5.
  Graph kite = build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {0, 5}, {5, 4}});
  auto kr = has_minor(kite, MinorTarget::K5);
  CHECK(kr.present);
  CHECK(is_minor_model(kite, MinorTarget::K5, kr.branch_sets));

  Graph k33 = build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(has_minor(k33, MinorTarget::K33).present);
  CHECK_FALSE(has_minor(k33, MinorTarget::K5).present);
  CHECK_FALSE(is_planar_desk(k33));

  Graph petersen = build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 8}, {8, 6}, {6, 9}, {9, 7}, {7, 5},
                                    {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
  CHECK(has_minor(petersen, MinorTarget::K5).present);
  CHECK(has_minor(petersen, MinorTarget::K33).present);
  CHECK(has_minor(petersen, MinorTarget::K5, {}, false).present);
}

TEST_CASE("planar graphs have neither minor") {
  Graph tree = build_graph(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  CHECK_FALSE(has_minor(tree, MinorTarget::K5).present);
  CHECK_FALSE(has_minor(tree, MinorTarget::K33, {}, false).present);
  CHECK(is_planar_desk(tree));
  CHECK(is_planar_desk(grid(7, 4)));
  CHECK(is_planar_desk(complete(4)));
  CHECK(is_planar_desk(complete(2)));
}

TEST_CASE("caps") {
  SolverOptions opts;
  opts.minor_cap = 5;
  Graph k6 = complete(6);
  CHECK_THROWS_AS(has_minor(k6, MinorTarget::K5, opts), Error);
  CHECK_FALSE(has_minor(grid(3, 3), MinorTarget::K5, opts).present);
}

TEST_CASE("property: pruned, unpruned and brute-force searches agree") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 5 + rng() % 3;
    Graph g = oracle::random_connected(n, 0.55 + 0.4 * static_cast<double>(rng() % 10) / 10.0, rng);
    for (MinorTarget t : {MinorTarget::K5, MinorTarget::K33}) {
      auto pruned = has_minor(g, t);
      auto full = has_minor(g, t, {}, false);
      CHECK(pruned.present == full.present);
      CHECK(full.present == brute_minor(g, t));
      if (full.present) CHECK(is_minor_model(g, t, full.branch_sets));
    }
  }
}

TEST_CASE("property: unpruned minor search matches planarity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 5 + rng() % 7;
    Graph g = oracle::random_connected(n, 0.25 + 0.3 * static_cast<double>(rng() % 10) / 10.0, rng);
    bool minor_free = !has_minor(g, MinorTarget::K5, {}, false).present &&
                      !has_minor(g, MinorTarget::K33, {}, false).present;
    CHECK(minor_free == is_planar_desk(g));
    bool euler_ok = g.size() <= 3 * n - 6;
    if (!euler_ok) CHECK_FALSE(minor_free);
  }
}
