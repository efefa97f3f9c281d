#ifndef CYCLEKIT_IO_HPP
#define CYCLEKIT_IO_HPP

#include <iosfwd>
#include <string>

#include "cyclekit/graph.hpp"

namespace cyclekit {

enum class GraphFormat { EdgeList, Json };

/// Parses a graph from `in`.
///
/// Edge-list format: whitespace-separated `u v w` lines, `#` starts a comment,
/// `node <label>` declares an isolated vertex. Labels may be arbitrary strings
/// and are densely renumbered 0..n-1 in order of first appearance; the original
/// labels are preserved in the graph.
///
/// JSON format: `{ "nodes": [label, ...], "edges": [[u, v, w], ...] }` with
/// u, v as indices into "nodes".
WeightedGraph load_graph(std::istream& in, GraphFormat format);

/// Writer counterpart; load_graph(save_graph(g)) reproduces g exactly,
/// weights included bit-for-bit.
void save_graph(std::ostream& out, const WeightedGraph& graph, GraphFormat format);

WeightedGraph load_graph_file(const std::string& path, GraphFormat format);
void save_graph_file(const std::string& path, const WeightedGraph& graph, GraphFormat format);

/// Picks the format from the file extension (".json" -> Json, else EdgeList).
GraphFormat format_for_path(const std::string& path);

/// Shortest decimal form of x that parses back to the same double.
std::string format_double(double x);

}  // namespace cyclekit

#endif
