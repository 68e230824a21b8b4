#ifndef ORIENT_GRAPH_IO_HPP
#define ORIENT_GRAPH_IO_HPP

#include <string>

#include "orient/graph.hpp"
#include "orient/partition.hpp"

namespace orient {

/// {"n": <int>, "edges": [[u,v], ...]} with 0-based vertices. The loader
/// rejects loops and 2-cycles with a diagnostic naming the offending pair.
OrientedGraph graph_from_json(const std::string& text);
OrientedGraph load_graph(const std::string& path);
std::string graph_to_json(const OrientedGraph& g);
void save_graph(const OrientedGraph& g, const std::string& path);

/// digraph with one "u -> v;" line per edge.
std::string graph_to_dot(const OrientedGraph& g);

/// {"W": [...], "X": [...], "Y": [...], "Z": [...]}.
QuadPartition partition_from_json(int n, const std::string& text);
QuadPartition load_partition(int n, const std::string& path);
std::string partition_to_json(const QuadPartition& p);
void save_partition(const QuadPartition& p, const std::string& path);

}  // namespace orient

#endif
