#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "metdim/graph.hpp"

namespace metdim::cli {

enum class Format { EdgeList, Dimacs };

struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
  std::vector<std::string> warnings;
};

/// Edge list: one `u v` pair of label tokens per line, labels numbered in
/// first-seen order, `#` lines skipped. A leading line of two integers `n m`
/// is a header when m equals the number of edge lines; n must then equal the
/// number of labels.
///
/// DIMACS: `c` comment lines, one `p edge n m` line, then `e u v` lines with
/// 1-based vertices.
///
/// Raises ParseError (with the line number) or HeaderMismatch.
LabeledGraph parse_graph(std::istream& in, Format format);
LabeledGraph parse_graph_file(const std::string& path, Format format);

/// Edge list with an `n m` header; parse_graph reads it back unchanged.
void write_edgelist(std::ostream& out, const Graph& g, const std::vector<std::string>& labels);

}  // namespace metdim::cli
