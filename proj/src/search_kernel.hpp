#pragma once

// Bit-mask machinery shared by the exact searches. Orders are at most 64, so
// a vertex set is one machine word.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "metdim/graph.hpp"

namespace metdim::detail {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline std::vector<Vertex> to_vertices(Mask m) {
  std::vector<Vertex> out;
  while (m) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

inline Mask to_mask(std::span<const Vertex> vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

/// a precedes b in lexicographic order of their sorted element lists.
/// Only meaningful for sets of equal size.
inline bool lex_less(Mask a, Mask b) {
  Mask diff = a ^ b;
  return diff != 0 && (a & (diff & -diff)) != 0;
}

/// Read-only distance data plus the twin constraints used to reject
/// candidates before refining codes.
class Resolver {
 public:
  Resolver(const Graph& g, const DistanceMatrix& dm, const TwinPartition& twins)
      : n_(g.order()), width_(dm.diameter() + 1u), dist_(g.order() * g.order()) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) dist_[u * n_ + v] = static_cast<std::uint8_t>(dm(u, v));
    }
    for (const auto& c : twins.classes) {
      if (c.size() >= 2) twin_masks_.push_back(to_mask(c));
    }
  }

  std::size_t order() const noexcept { return n_; }

  /// Per-thread buffers for resolves().
  struct Scratch {
    std::vector<std::uint32_t> ids, next;
    std::vector<std::uint32_t> stamp, slot;
    std::uint32_t epoch = 0;
  };

  Scratch make_scratch() const {
    Scratch s;
    s.ids.resize(n_);
    s.next.resize(n_);
    s.stamp.assign(n_ * width_, 0);
    s.slot.resize(n_ * width_);
    return s;
  }

  /// Every twin class has at most one vertex outside `set`.
  bool twin_feasible(Mask set) const noexcept {
    for (Mask c : twin_masks_) {
      Mask out = c & ~set;
      if (out & (out - 1)) return false;
    }
    return true;
  }

  /// Partition refinement by distance to each member; resolving iff the
  /// final partition is discrete.
  bool resolves(Mask set, Scratch& s) const {
    if (!twin_feasible(set)) return false;
    std::fill(s.ids.begin(), s.ids.end(), 0);
    std::uint32_t classes = 1;
    for (Mask rest = set; rest; rest &= rest - 1) {
      const std::uint8_t* row = dist_.data() + static_cast<std::size_t>(std::countr_zero(rest)) * n_;
      if (++s.epoch == 0) {
        std::fill(s.stamp.begin(), s.stamp.end(), 0);
        s.epoch = 1;
      }
      classes = 0;
      for (std::size_t v = 0; v < n_; ++v) {
        std::size_t key = s.ids[v] * width_ + row[v];
        if (s.stamp[key] != s.epoch) {
          s.stamp[key] = s.epoch;
          s.slot[key] = classes++;
        }
        s.next[v] = s.slot[key];
      }
      s.ids.swap(s.next);
      if (classes == n_) return true;
    }
    return classes == n_;
  }

 private:
  std::size_t n_;
  std::size_t width_;
  std::vector<std::uint8_t> dist_;
  std::vector<Mask> twin_masks_;
};

/// Enumerates every connected vertex set of exactly `k` vertices that
/// contains `seed` and otherwise uses only vertices in `allowed`, each exactly
/// once (extension-set growth with exclusive neighborhoods). `visit(mask)`
/// returns false to abort. `required` vertices must end up in the set; branches
/// that can no longer absorb them are cut.
template <class Visit>
class ConnectedSets {
 public:
  ConnectedSets(std::span<const Mask> adj, std::size_t k, Mask allowed, Mask required, Visit& visit)
      : adj_(adj), k_(k), allowed_(allowed), required_(required), visit_(visit) {}

  bool run(Vertex seed) {
    Mask s = bit(seed);
    return grow(s, s | adj_[seed], adj_[seed] & allowed_, 1);
  }

 private:
  bool grow(Mask set, Mask closed_nbhd, Mask ext, std::size_t size) {
    if (static_cast<std::size_t>(std::popcount(required_ & ~set)) > k_ - size) return true;
    if (size == k_) return visit_(set);
    while (ext) {
      Vertex w = static_cast<Vertex>(std::countr_zero(ext));
      ext &= ext - 1;
      Mask ext2 = ext | (adj_[w] & allowed_ & ~closed_nbhd);
      if (!grow(set | bit(w), closed_nbhd | adj_[w], ext2, size + 1)) return false;
    }
    return true;
  }

  std::span<const Mask> adj_;
  std::size_t k_;
  Mask allowed_;
  Mask required_;
  Visit& visit_;
};

/// Vertices strictly greater than v.
inline Mask above(Vertex v, std::size_t n) {
  Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  return v >= 63 ? 0 : all & ~((Mask{2} << v) - 1);
}

/// Runs task(0..count-1) on `workers` threads and returns the hit of the
/// smallest index that produced one. Tasks above the best index seen so far
/// may be skipped; reading that bound stale only costs work, never changes the
/// answer.
template <class Result, class Task>
std::optional<std::pair<std::size_t, Result>> first_hit(std::size_t count, unsigned workers,
                                                        Task&& task) {
  std::vector<std::optional<Result>> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};

  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || i > best.load(std::memory_order_relaxed)) return;
      results[i] = task(i);
      if (results[i]) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (results[i]) return std::make_pair(i, *results[i]);
  }
  return std::nullopt;
}

/// Runs every task and returns the results in index order.
template <class Result, class Task>
std::vector<Result> run_all(std::size_t count, unsigned workers, Task&& task) {
  std::vector<Result> results(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) results[i] = task(i);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  return results;
}

}  // namespace metdim::detail
