#include "metdim/families.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

namespace metdim {

namespace {

// Portable draws on top of the standard engine; the distribution adaptors in
// <random> are not specified bit-for-bit across library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
    for (;;) {
      std::uint64_t x = eng_();
      if (x < limit) return x % n;
    }
  }
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  bool coin() { return (eng_() >> 63) != 0; }

 private:
  std::mt19937_64 eng_;
};

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidSpec, msg); }

void require(bool ok, const char* what) {
  if (!ok) invalid(what);
}

class Builder {
 public:
  Vertex add(std::string label) {
    labels_.push_back(std::move(label));
    return static_cast<Vertex>(labels_.size() - 1);
  }
  void edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
  Generated finish() { return {build_graph(labels_.size(), edges_), std::move(labels_)}; }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

std::string num(const char* prefix, std::size_t i) { return prefix + std::to_string(i); }

std::vector<Vertex> add_path(Builder& b, const char* prefix, std::size_t first, std::size_t count) {
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < count; ++i) {
    vs.push_back(b.add(num(prefix, first + i)));
    if (i) b.edge(vs[i - 1], vs[i]);
  }
  return vs;
}

Generated path(std::size_t n) {
  require(n >= 2, "path:n needs n >= 2");
  Builder b;
  add_path(b, "u", 1, n);
  return b.finish();
}

Generated cycle(std::size_t n) {
  require(n >= 3, "cycle:n needs n >= 3");
  Builder b;
  auto vs = add_path(b, "u", 1, n);
  b.edge(vs.back(), vs.front());
  return b.finish();
}

Generated complete(std::size_t n) {
  require(n >= 2, "complete:n needs n >= 2");
  Builder b;
  for (std::size_t i = 1; i <= n; ++i) b.add(num("u", i));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.edge(u, v);
  return b.finish();
}

Generated star(std::size_t n) {
  require(n >= 1, "star:n needs n >= 1");
  Builder b;
  Vertex c = b.add("c");
  for (std::size_t i = 1; i <= n; ++i) b.edge(c, b.add(num("l", i)));
  return b.finish();
}

Generated multipartite(const std::vector<std::size_t>& parts) {
  require(parts.size() >= 2, "multipartite needs at least two parts");
  require(std::all_of(parts.begin(), parts.end(), [](auto a) { return a >= 1; }), "multipartite parts must be non-empty");
  Builder b;
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 1; j <= parts[i]; ++j) {
      b.add("p" + std::to_string(i + 1) + "_" + std::to_string(j));
      part_of.push_back(i);
    }
  }
  for (Vertex u = 0; u < part_of.size(); ++u)
    for (Vertex v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) b.edge(u, v);
  return b.finish();
}

Generated wheel(std::size_t n) {
  require(n >= 3, "wheel:n needs n >= 3");
  Builder b;
  Vertex hub = b.add("w");
  auto rim = add_path(b, "u", 1, n);
  b.edge(rim.back(), rim.front());
  for (Vertex r : rim) b.edge(hub, r);
  return b.finish();
}

Generated petersen() {
  Builder b;
  std::vector<Vertex> u, w;
  for (std::size_t i = 1; i <= 5; ++i) u.push_back(b.add(num("u", i)));
  for (std::size_t i = 1; i <= 5; ++i) w.push_back(b.add(num("w", i)));
  for (std::size_t i = 0; i < 5; ++i) {
    b.edge(u[i], u[(i + 1) % 5]);
    b.edge(u[i], w[i]);
  }
  // Inner pentagram w1 w4 w2 w5 w3 w1.
  const std::size_t star[] = {0, 3, 1, 4, 2};
  for (std::size_t i = 0; i < 5; ++i) b.edge(w[star[i]], w[star[(i + 1) % 5]]);
  return b.finish();
}

Generated grid(std::size_t s, std::size_t t) {
  require(s >= 2 && t >= 2, "grid:SxT needs S, T >= 2");
  Builder b;
  for (std::size_t i = 1; i <= s; ++i)
    for (std::size_t j = 1; j <= t; ++j) b.add("u" + std::to_string(i) + "w" + std::to_string(j));
  auto id = [t](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * t + j); };
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < t; ++j) {
      if (i + 1 < s) b.edge(id(i, j), id(i + 1, j));
      if (j + 1 < t) b.edge(id(i, j), id(i, j + 1));
    }
  return b.finish();
}

Generated bouquet(const std::vector<std::size_t>& cycles) {
  require(cycles.size() >= 2, "bouquet needs at least two cycles");
  require(std::all_of(cycles.begin(), cycles.end(), [](auto c) { return c >= 3; }), "bouquet cycle lengths must be >= 3");
  Builder b;
  Vertex w = b.add("w");
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    std::string prefix = "c" + std::to_string(i + 1) + "_";
    auto p = add_path(b, prefix.c_str(), 1, cycles[i] - 1);
    b.edge(w, p.front());
    b.edge(w, p.back());
  }
  return b.finish();
}

Generated paddle(std::size_t a, std::size_t tail) {
  require(a >= 3 && tail >= 1, "paddle:a,b needs a >= 3 and b >= 1");
  Builder b;
  std::vector<Vertex> k;
  for (std::size_t i = 0; i < a; ++i) k.push_back(b.add(num("u", i)));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = i + 1; j < a; ++j) b.edge(k[i], k[j]);
  auto p = add_path(b, "w", 1, tail);
  b.edge(k[0], p.front());
  return b.finish();
}

Generated fork(std::size_t r, std::size_t n) {
  require(r >= 2 && r + 2 <= n, "fork:r,n needs 2 <= r <= n-2");
  Builder b;
  auto p = add_path(b, "u", 1, r);
  for (std::size_t i = 1; i <= n - r; ++i) b.edge(p.back(), b.add(num("x", i)));
  return b.finish();
}

Generated sun(std::size_t m, const std::vector<std::size_t>& legs) {
  require(m >= 3, "sun:m needs m >= 3");
  if (legs.size() != m) invalid("sun:m:legs needs exactly m leg lengths");
  Builder b;
  auto c = add_path(b, "u", 1, m);
  b.edge(c.back(), c.front());
  for (std::size_t i = 0; i < m; ++i) {
    if (!legs[i]) continue;
    std::string prefix = "s" + std::to_string(i + 1) + "_";
    auto leg = add_path(b, prefix.c_str(), 1, legs[i]);
    b.edge(c[i], leg.front());
  }
  return b.finish();
}

Generated fr_graph(const FrFlags& flags) {
  validate(flags);
  Builder b;
  Vertex u = b.add("u"), w = b.add("w");
  b.edge(u, w);
  std::optional<Vertex> px, py, pz;
  for (std::size_t a = 1; a <= flags.levels.size(); ++a) {
    const FrLevel& l = flags.levels[a - 1];
    std::optional<Vertex> x, y, z;
    if (l.x) x = b.add(num("x", a));
    if (l.y) y = b.add(num("y", a));
    if (l.z) z = b.add(num("z", a));
    if (a == 1) {
      if (x) b.edge(*x, u);
      if (z) b.edge(*z, w);
      if (y) {
        b.edge(*y, u);
        b.edge(*y, w);
      }
    } else {
      if (x) b.edge(*x, *px);
      if (z) b.edge(*z, *pz);
      if (y) {
        if (l.y_to_x) b.edge(*y, *px);
        if (l.y_to_y) b.edge(*y, *py);
        if (l.y_to_z) b.edge(*y, *pz);
      }
    }
    if (l.xy) b.edge(*x, *y);
    if (l.xz) b.edge(*x, *z);
    if (l.yz) b.edge(*y, *z);
    px = x;
    py = y;
    pz = z;
  }
  return b.finish();
}

Generated kite(std::size_t k) {
  require(k >= 1, "kite:k needs k >= 1");
  Builder b;
  std::vector<Vertex> u;
  for (std::size_t i = 1; i <= k + 2; ++i) u.push_back(b.add(num("u", i)));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (!(i == 0 && j + 1 == u.size())) b.edge(u[i], u[j]);
  Vertex s = b.add("s");
  b.edge(u.front(), s);
  b.edge(s, u.back());
  return b.finish();
}

Generated subdivided_k33() {
  Builder b;
  Vertex u1 = b.add("u1"), u2 = b.add("u2"), u3 = b.add("u3");
  Vertex w1 = b.add("w1"), w2 = b.add("w2"), w3 = b.add("w3");
  Vertex a1 = b.add("a1"), a2 = b.add("a2"), b1 = b.add("b1"), b2 = b.add("b2");
  for (auto [x, y] : {Edge{u1, w1}, Edge{u1, w2}, Edge{u1, w3}, Edge{u2, w1}, Edge{u2, w3}, Edge{u2, a1},
                      Edge{a1, a2}, Edge{a2, w2}, Edge{u3, w3}, Edge{u3, b2}, Edge{b2, w2}, Edge{u3, b1},
                      Edge{b1, w1}})
    b.edge(x, y);
  return b.finish();
}

Generated theta_tails() {
  Builder b;
  Vertex a = b.add("a"), bb = b.add("b"), c = b.add("c"), d = b.add("d");
  b.edge(a, bb);
  b.edge(c, d);
  for (const char* prefix : {"p", "q"}) {
    auto p = add_path(b, prefix, 1, 4);
    b.edge(bb, p.front());
    b.edge(p.back(), c);
  }
  return b.finish();
}

Generated fan_tail(std::size_t n) {
  require(n >= 5, "fantail:n needs n >= 5");
  Builder b;
  auto u = add_path(b, "u", 1, 4);
  auto w = add_path(b, "w", 1, n - 4);
  for (Vertex x : u) b.edge(w.front(), x);
  return b.finish();
}

// G - v for the vertex-deletion construction: the path u0..u_{k+1} with
// leaves l1 at u1 and lk at uk.
Builder vdel_tree(std::size_t k) {
  require(k >= 6, "vdel:k needs k >= 6");
  Builder b;
  auto u = add_path(b, "u", 0, k + 2);
  b.edge(u[1], b.add("l1"));
  b.edge(u[k], b.add(num("l", k)));
  return b;
}

Generated vdel_whole(std::size_t k) {
  Builder b = vdel_tree(k);
  Vertex l1 = static_cast<Vertex>(k + 2), lk = static_cast<Vertex>(k + 3);
  Vertex v = b.add("v");
  b.edge(v, l1);
  b.edge(v, lk);
  return b.finish();
}

// The spider with one long leg l1 = s0 .. s_{a-1}, w and k - 1 unit legs,
// optionally with the chord l1 s3.
Generated edel_graph(std::size_t k, std::size_t a, bool chord) {
  require(k >= 3 && a >= 4, "edel:k,a needs k >= 3 and a >= 4");
  Builder b;
  std::vector<Vertex> s{b.add("l1")};
  for (std::size_t i = 1; i < a; ++i) {
    s.push_back(b.add(num("s", i)));
    b.edge(s[i - 1], s[i]);
  }
  Vertex w = b.add("w");
  b.edge(s.back(), w);
  for (std::size_t i = 2; i <= k; ++i) b.edge(w, b.add(num("l", i)));
  if (chord) b.edge(s[0], s[3]);
  return b.finish();
}

Generated plain(Graph g, const char* prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= g.order(); ++i) labels.push_back(num(prefix, i));
  return {std::move(g), std::move(labels)};
}

// ---- text form ----

std::size_t parse_count(std::string_view s, std::string_view text) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    invalid("bad number '" + std::string(s) + "' in family spec '" + std::string(text) + "'");
  }
  return v;
}

std::uint64_t parse_u64(std::string_view s, std::string_view text) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    invalid("bad seed '" + std::string(s) + "' in family spec '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

std::vector<std::size_t> parse_list(std::string_view s, std::string_view text) {
  std::vector<std::size_t> out;
  for (auto tok : split(s, ',')) out.push_back(parse_count(tok, text));
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

}  // namespace

void validate(const FrFlags& flags) {
  auto violation = [](const char* rule, std::size_t a, const char* what) {
    throw Error(ErrorCode::RuleViolation, std::string(rule) + " at level " + std::to_string(a) + ": " + what);
  };
  for (std::size_t a = 1; a <= flags.levels.size(); ++a) {
    const FrLevel& l = flags.levels[a - 1];
    if ((l.xy && !(l.x && l.y)) || (l.xz && !(l.x && l.z)) || (l.yz && !(l.y && l.z))) {
      violation("R8", a, "intra-level edge on a missing vertex");
    }
    bool y_edges = l.y_to_x || l.y_to_y || l.y_to_z;
    if (a == 1) {
      if (y_edges) violation("R9", a, "level-1 y has no edges to a previous level");
      continue;
    }
    const FrLevel& p = flags.levels[a - 2];
    if (l.x && !p.x) violation("R5", a, "x needs x at the previous level");
    if (l.z && !p.z) violation("R6", a, "z needs z at the previous level");
    if (!l.y) {
      if (y_edges) violation("R9", a, "edge on a missing y");
      continue;
    }
    if ((l.y_to_x && !p.x) || (l.y_to_y && !p.y) || (l.y_to_z && !p.z)) {
      violation("R9", a, "y edge to a missing vertex of the previous level");
    }
    if (!((l.y_to_x && l.y_to_z) || l.y_to_y)) {
      violation("R7", a, "y needs both x and z edges or the y edge to the previous level");
    }
  }
}

Vertex Generated::at(std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<Vertex>(i);
  }
  throw Error(ErrorCode::InvalidVertex, "no vertex labeled '" + std::string(label) + "'");
}

FamilySpec parse_family(std::string_view text) {
  auto parts = split(text, ':');
  std::string_view tag = parts[0];
  auto arity = [&](std::size_t n) {
    if (parts.size() != n + 1) {
      invalid("family '" + std::string(tag) + "' expects " + std::to_string(n) + " argument(s): '" +
              std::string(text) + "'");
    }
  };
  auto pair = [&](std::string_view s, char sep) {
    auto v = split(s, sep);
    if (v.size() != 2) invalid("expected two values in '" + std::string(text) + "'");
    return std::pair{parse_count(v[0], text), parse_count(v[1], text)};
  };
  using namespace family;
  if (tag == "path") return arity(1), Path{parse_count(parts[1], text)};
  if (tag == "cycle") return arity(1), Cycle{parse_count(parts[1], text)};
  if (tag == "complete") return arity(1), Complete{parse_count(parts[1], text)};
  if (tag == "star") return arity(1), Star{parse_count(parts[1], text)};
  if (tag == "multipartite") return arity(1), Multipartite{parse_list(parts[1], text)};
  if (tag == "wheel") return arity(1), Wheel{parse_count(parts[1], text)};
  if (tag == "petersen") return arity(0), Petersen{};
  if (tag == "grid") {
    arity(1);
    auto [s, t] = pair(parts[1], 'x');
    return Grid{s, t};
  }
  if (tag == "bouquet") return arity(1), Bouquet{parse_list(parts[1], text)};
  if (tag == "paddle") {
    arity(1);
    auto [a, b] = pair(parts[1], ',');
    return Paddle{a, b};
  }
  if (tag == "fork") {
    arity(1);
    auto [r, n] = pair(parts[1], ',');
    return Fork{r, n};
  }
  if (tag == "sun") return arity(2), Sun{parse_count(parts[1], text), parse_list(parts[2], text)};
  if (tag == "fr") {
    arity(2);
    std::size_t r = parse_count(parts[1], text);
    std::uint64_t seed = parse_u64(parts[2], text);
    return Fr{fr_sample_flags(r, seed), seed};
  }
  if (tag == "kite") return arity(1), Kite{parse_count(parts[1], text)};
  if (tag == "k33sub") return arity(0), SubdividedK33{};
  if (tag == "thetatails") return arity(0), ThetaTails{};
  if (tag == "fantail") return arity(1), FanTail{parse_count(parts[1], text)};
  if (tag == "vdel") return arity(1), VDelPair{parse_count(parts[1], text)};
  if (tag == "edel") {
    arity(1);
    auto [k, a] = pair(parts[1], ',');
    return EDelStar{k, a};
  }
  if (tag == "randtree") return arity(2), RandomTree{parse_count(parts[1], text), parse_u64(parts[2], text)};
  if (tag == "rand") {
    arity(3);
    double p = 0;
    auto s = parts[2];
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
    if (ec != std::errc() || ptr != s.data() + s.size()) invalid("bad probability in '" + std::string(text) + "'");
    return RandomConnected{parse_count(parts[1], text), p, parse_u64(parts[3], text)};
  }
  invalid("unknown family '" + std::string(tag) + "'");
}

std::string to_string(const FamilySpec& spec) {
  using namespace family;
  auto n = [](const char* tag, std::size_t v) { return std::string(tag) + ":" + std::to_string(v); };
  return std::visit(
      Overload{
          [&](const Path& f) { return n("path", f.n); },
          [&](const Cycle& f) { return n("cycle", f.n); },
          [&](const Complete& f) { return n("complete", f.n); },
          [&](const Star& f) { return n("star", f.n); },
          [&](const Multipartite& f) { return "multipartite:" + join(f.parts); },
          [&](const Wheel& f) { return n("wheel", f.n); },
          [&](const Petersen&) { return std::string("petersen"); },
          [&](const Grid& f) { return "grid:" + std::to_string(f.s) + "x" + std::to_string(f.t); },
          [&](const Bouquet& f) { return "bouquet:" + join(f.cycles); },
          [&](const Paddle& f) { return "paddle:" + std::to_string(f.a) + "," + std::to_string(f.b); },
          [&](const Fork& f) { return "fork:" + std::to_string(f.r) + "," + std::to_string(f.n); },
          [&](const Sun& f) { return "sun:" + std::to_string(f.m) + ":" + join(f.legs); },
          [&](const Fr& f) {
            return "fr:" + std::to_string(f.flags.levels.size()) + ":" +
                   (f.seed ? std::to_string(*f.seed) : std::string("explicit"));
          },
          [&](const Kite& f) { return n("kite", f.k); },
          [&](const SubdividedK33&) { return std::string("k33sub"); },
          [&](const ThetaTails&) { return std::string("thetatails"); },
          [&](const FanTail& f) { return n("fantail", f.n); },
          [&](const VDelPair& f) { return n("vdel", f.k); },
          [&](const EDelStar& f) { return "edel:" + std::to_string(f.k) + "," + std::to_string(f.a); },
          [&](const RandomTree& f) { return "randtree:" + std::to_string(f.n) + ":" + std::to_string(f.seed); },
          [&](const RandomConnected& f) {
            std::ostringstream p;
            p << f.p;
            return "rand:" + std::to_string(f.n) + ":" + p.str() + ":" + std::to_string(f.seed);
          },
      },
      spec);
}

Generated generate(const FamilySpec& spec) {
  using namespace family;
  return std::visit(Overload{
                        [](const Path& f) { return path(f.n); },
                        [](const Cycle& f) { return cycle(f.n); },
                        [](const Complete& f) { return complete(f.n); },
                        [](const Star& f) { return star(f.n); },
                        [](const Multipartite& f) { return multipartite(f.parts); },
                        [](const Wheel& f) { return wheel(f.n); },
                        [](const Petersen&) { return petersen(); },
                        [](const Grid& f) { return grid(f.s, f.t); },
                        [](const Bouquet& f) { return bouquet(f.cycles); },
                        [](const Paddle& f) { return paddle(f.a, f.b); },
                        [](const Fork& f) { return fork(f.r, f.n); },
                        [](const Sun& f) { return sun(f.m, f.legs); },
                        [](const Fr& f) { return fr_graph(f.flags); },
                        [](const Kite& f) { return kite(f.k); },
                        [](const SubdividedK33&) { return subdivided_k33(); },
                        [](const ThetaTails&) { return theta_tails(); },
                        [](const FanTail& f) { return fan_tail(f.n); },
                        [](const VDelPair& f) { return vdel_whole(f.k); },
                        [](const EDelStar& f) { return edel_graph(f.k, f.a, true); },
                        [](const RandomTree& f) { return plain(random_tree(f.n, f.seed), "v"); },
                        [](const RandomConnected& f) { return plain(random_connected(f.n, f.p, f.seed), "v"); },
                    },
                    spec);
}

DeletionPair vdel_pair(std::size_t k) { return {vdel_whole(k), vdel_tree(k).finish()}; }

DeletionPair edel_pair(std::size_t k, std::size_t a) { return {edel_graph(k, a, true), edel_graph(k, a, false)}; }

FrFlags fr_sample_flags(std::size_t r, std::uint64_t seed) {
  Rng rng(seed);
  FrFlags flags;
  for (std::size_t a = 1; a <= r; ++a) {
    FrLevel l;
    const FrLevel* p = a > 1 ? &flags.levels[a - 2] : nullptr;
    bool can_x = !p || p->x;
    bool can_z = !p || p->z;
    bool can_y = !p || p->y || (p->x && p->z);
    l.x = can_x && rng.coin();
    l.y = can_y && rng.coin();
    l.z = can_z && rng.coin();
    if (!l.x && !l.y && !l.z) {
      // Every non-empty previous level admits at least one successor.
      std::vector<bool*> options;
      if (can_x) options.push_back(&l.x);
      if (can_y) options.push_back(&l.y);
      if (can_z) options.push_back(&l.z);
      *options[rng.below(options.size())] = true;
    }
    if (p && l.y) {
      bool pair_ok = p->x && p->z;
      bool both = pair_ok && rng.coin();
      l.y_to_x = both || (p->x && rng.coin());
      l.y_to_z = both || (p->z && rng.coin());
      l.y_to_y = p->y && rng.coin();
      if (!((l.y_to_x && l.y_to_z) || l.y_to_y)) {
        if (p->y) {
          l.y_to_y = true;
        } else {
          l.y_to_x = l.y_to_z = true;
        }
      }
    }
    l.xy = l.x && l.y && rng.coin();
    l.xz = l.x && l.z && rng.coin();
    l.yz = l.y && l.z && rng.coin();
    flags.levels.push_back(l);
  }
  return flags;
}

Generated fr_sample(std::size_t r, std::uint64_t seed) { return fr_graph(fr_sample_flags(r, seed)); }

Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  require(n >= 2, "rand:n needs n >= 2");
  require(p > 0.0 && p <= 1.0, "rand:p needs 0 < p <= 1");
  Rng rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.unit() < p) edges.emplace_back(u, v);
    Graph g = build_graph(n, edges);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::GenerationFailed,
              "no connected sample of G(" + std::to_string(n) + ", p) after 10000 attempts");
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  require(n >= 2, "randtree:n needs n >= 2");
  Rng rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    --degree[leaf];
    --degree[c];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  edges.emplace_back(last[0], last[1]);
  return build_graph(n, edges);
}

}  // namespace metdim
