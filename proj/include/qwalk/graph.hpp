#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

using Vertex = std::size_t;

/// Undirected edge stored with `first < second`.
using Edge = std::pair<Vertex, Vertex>;

/// Ordered pair (tail, head) of a directed edge.
struct DirectedEdge {
  Vertex from = 0;
  Vertex to = 0;

  auto operator<=>(const DirectedEdge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  enum class Kind { TooFewVertices, EndpointOutOfRange, LoopEdge, IsolatedVertex, BadFamilySize, BadInput };

  GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Simple undirected graph on vertices 0..n-1 with no isolated vertices.
/// Immutable once built; use build_graph() or standard_family() to create one.
class Graph {
 public:
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Sorted, deduplicated undirected edges (u < v).
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t degree(Vertex v) const { return degrees_.at(v); }
  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }

  bool has_vertex(Vertex v) const noexcept { return v < n_; }

  friend Graph build_graph(std::size_t n, const std::vector<Edge>& edges);

 private:
  Graph() = default;

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
};

/// Validates and normalizes an edge list. Duplicate edges (in either
/// orientation) collapse to one; loops, out-of-range endpoints and isolated
/// vertices are rejected with distinct GraphError kinds.
Graph build_graph(std::size_t n, const std::vector<Edge>& edges);

enum class GraphFamily { Path, Cycle, Star, CompleteBipartite };

/// path(n), cycle(n), star(n) use `first`; complete_bipartite uses (first, second)
/// with V1 = {0..first-1} and V2 = {first..first+second-1}.
struct FamilySize {
  std::size_t first = 0;
  std::size_t second = 0;
};

Graph standard_family(GraphFamily kind, FamilySize size);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t m, std::size_t n);

/// Parses the text graph format: first non-comment line `n`, then one `u v`
/// pair per line. `#` starts a comment that runs to end of line.
Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::filesystem::path& path);

/// Index range [begin, end) into the directed-edge basis.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool contains(std::size_t k) const noexcept { return k >= begin && k < end; }
};

/// The lexicographically ordered directed-edge basis of a graph.
///
/// Basis index k labels the k-th directed edge when all 2m orientations are
/// sorted by (from, to). Outgoing edges of each vertex therefore form one
/// contiguous block, and blocks appear in ascending vertex order.
class DirectedEdgeSpace {
 public:
  explicit DirectedEdgeSpace(const Graph& g);

  std::size_t dimension() const noexcept { return edges_.size(); }
  std::size_t vertex_count() const noexcept { return outgoing_.size(); }

  const std::vector<DirectedEdge>& edges() const noexcept { return edges_; }
  const DirectedEdge& edge(std::size_t k) const { return edges_.at(k); }

  /// Throws std::out_of_range if the directed edge is not in the graph.
  std::size_t index_of(DirectedEdge e) const;
  std::size_t index_of(Vertex from, Vertex to) const { return index_of(DirectedEdge{from, to}); }

  /// Index of the opposite orientation of edge k.
  std::size_t reverse_of(std::size_t k) const { return reverse_.at(k); }

  IndexRange outgoing(Vertex v) const { return outgoing_.at(v); }
  const std::vector<std::size_t>& incoming(Vertex v) const { return incoming_.at(v); }

 private:
  std::vector<DirectedEdge> edges_;
  std::map<DirectedEdge, std::size_t> index_;
  std::vector<std::size_t> reverse_;
  std::vector<IndexRange> outgoing_;
  std::vector<std::vector<std::size_t>> incoming_;
};

inline DirectedEdgeSpace edge_space(const Graph& g) { return DirectedEdgeSpace(g); }

}  // namespace qwalk
