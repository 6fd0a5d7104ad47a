#include "graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace metdim::cli {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<Line> tokenize(std::istream& in, char comment) {
  std::vector<Line> lines;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    std::istringstream ss(text);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (line.tokens.empty() || line.tokens[0][0] == comment) continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::optional<std::size_t> as_count(const std::string& s) {
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return v;
}

LabeledGraph finish(std::size_t n, std::vector<std::string> labels, const std::vector<Edge>& edges) {
  LabeledGraph out{build_graph(n, edges), std::move(labels), {}};
  if (out.graph.had_duplicates()) out.warnings.push_back("repeated edges collapsed");
  return out;
}

LabeledGraph parse_edgelist(std::istream& in) {
  auto lines = tokenize(in, '#');
  std::size_t first = 0;
  std::optional<std::size_t> header_n;
  if (!lines.empty() && lines[0].tokens.size() == 2) {
    auto n = as_count(lines[0].tokens[0]), m = as_count(lines[0].tokens[1]);
    if (n && m && *m == lines.size() - 1) {
      header_n = n;
      first = 1;
    }
  }
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto id = [&](const std::string& label) {
    auto [it, fresh] = index.emplace(label, static_cast<Vertex>(labels.size()));
    if (fresh) labels.push_back(label);
    return it->second;
  };
  for (std::size_t i = first; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens.size() != 2) parse_error(l.number, "expected two labels, got " + std::to_string(l.tokens.size()));
    if (l.tokens[0] == l.tokens[1]) parse_error(l.number, "self-loop at '" + l.tokens[0] + "'");
    Vertex u = id(l.tokens[0]);
    Vertex v = id(l.tokens[1]);
    edges.emplace_back(u, v);
  }
  if (header_n && *header_n != labels.size()) {
    throw Error(ErrorCode::HeaderMismatch, "header declares " + std::to_string(*header_n) + " vertices, edges use " +
                                               std::to_string(labels.size()));
  }
  const std::size_t n = labels.size();
  return finish(n, std::move(labels), edges);
}

LabeledGraph parse_dimacs(std::istream& in) {
  auto lines = tokenize(in, 'c');
  std::optional<std::size_t> n, m;
  std::vector<Edge> edges;
  for (const Line& l : lines) {
    const std::string& kind = l.tokens[0];
    if (kind == "p") {
      if (n) parse_error(l.number, "second problem line");
      if (l.tokens.size() != 4) parse_error(l.number, "expected 'p edge n m'");
      n = as_count(l.tokens[2]);
      m = as_count(l.tokens[3]);
      if (!n || !m) parse_error(l.number, "bad counts in problem line");
    } else if (kind == "e") {
      if (!n) parse_error(l.number, "edge before the problem line");
      if (l.tokens.size() != 3) parse_error(l.number, "expected 'e u v'");
      auto u = as_count(l.tokens[1]), v = as_count(l.tokens[2]);
      if (!u || !v || *u < 1 || *v < 1 || *u > *n || *v > *n) parse_error(l.number, "vertex out of range 1.." + std::to_string(*n));
      if (*u == *v) parse_error(l.number, "self-loop at " + l.tokens[1]);
      edges.emplace_back(static_cast<Vertex>(*u - 1), static_cast<Vertex>(*v - 1));
    } else {
      parse_error(l.number, "unknown line type '" + kind + "'");
    }
  }
  if (!n) throw Error(ErrorCode::ParseError, "missing problem line");
  if (edges.size() != *m) {
    throw Error(ErrorCode::HeaderMismatch,
                "problem line declares " + std::to_string(*m) + " edges, found " + std::to_string(edges.size()));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= *n; ++i) labels.push_back(std::to_string(i));
  return finish(*n, std::move(labels), edges);
}

}  // namespace

LabeledGraph parse_graph(std::istream& in, Format format) {
  return format == Format::Dimacs ? parse_dimacs(in) : parse_edgelist(in);
}

LabeledGraph parse_graph_file(const std::string& path, Format format) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return parse_graph(in, format);
}

void write_edgelist(std::ostream& out, const Graph& g, const std::vector<std::string>& labels) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << labels[u] << ' ' << labels[v] << '\n';
}

}  // namespace metdim::cli
