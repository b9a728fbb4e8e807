#include "qwalk/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace qwalk {

Graph build_graph(std::size_t n, const std::vector<Edge>& edges) {
  if (n < 2) {
    throw GraphError(GraphError::Kind::TooFewVertices,
                     "graph needs at least 2 vertices, got " + std::to_string(n));
  }

  std::set<Edge> unique;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError(GraphError::Kind::EndpointOutOfRange,
                       "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw GraphError(GraphError::Kind::LoopEdge, "loop edge at vertex " + std::to_string(u));
    }
    unique.insert(u < v ? Edge{u, v} : Edge{v, u});
  }

  Graph g;
  g.n_ = n;
  g.edges_.assign(unique.begin(), unique.end());
  g.degrees_.assign(n, 0);
  for (auto [u, v] : g.edges_) {
    ++g.degrees_[u];
    ++g.degrees_[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degrees_[v] == 0) {
      throw GraphError(GraphError::Kind::IsolatedVertex, "vertex " + std::to_string(v) + " is isolated");
    }
  }
  return g;
}

namespace {

void require_size(bool ok, const std::string& what) {
  if (!ok) throw GraphError(GraphError::Kind::BadFamilySize, what);
}

}  // namespace

Graph path_graph(std::size_t n) {
  require_size(n >= 2, "path graph needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  require_size(n >= 3, "cycle graph needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return build_graph(n, edges);
}

Graph star_graph(std::size_t n) {
  require_size(n >= 2, "star graph needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(0, i);
  return build_graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t m, std::size_t n) {
  require_size(m >= 1 && n >= 1, "complete bipartite graph needs both parts non-empty");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = m; j < m + n; ++j) edges.emplace_back(i, j);
  }
  return build_graph(m + n, edges);
}

Graph standard_family(GraphFamily kind, FamilySize size) {
  switch (kind) {
    case GraphFamily::Path: return path_graph(size.first);
    case GraphFamily::Cycle: return cycle_graph(size.first);
    case GraphFamily::Star: return star_graph(size.first);
    case GraphFamily::CompleteBipartite: return complete_bipartite_graph(size.first, size.second);
  }
  throw GraphError(GraphError::Kind::BadInput, "unknown graph family");
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_n = false;
  std::size_t n = 0;
  std::vector<Edge> edges;

  auto fail = [&](const std::string& msg) {
    throw GraphError(GraphError::Kind::BadInput, "line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long long> values;
    long long value = 0;
    while (fields >> value) values.push_back(value);
    if (!fields.eof()) fail("expected integers");
    if (values.empty()) continue;
    if (std::any_of(values.begin(), values.end(), [](long long x) { return x < 0; })) {
      fail("negative value");
    }

    if (!have_n) {
      if (values.size() != 1) fail("first line must hold the vertex count");
      n = static_cast<std::size_t>(values[0]);
      have_n = true;
    } else {
      if (values.size() != 2) fail("edge lines hold exactly two vertices");
      edges.emplace_back(static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1]));
    }
  }
  if (!have_n) throw GraphError(GraphError::Kind::BadInput, "graph file has no vertex count");
  return build_graph(n, edges);
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphError(GraphError::Kind::BadInput, "cannot open graph file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

DirectedEdgeSpace::DirectedEdgeSpace(const Graph& g) {
  const std::size_t n = g.vertex_count();
  edges_.reserve(2 * g.edge_count());
  for (auto [u, v] : g.edges()) {
    edges_.push_back({u, v});
    edges_.push_back({v, u});
  }
  std::sort(edges_.begin(), edges_.end());

  for (std::size_t k = 0; k < edges_.size(); ++k) index_.emplace(edges_[k], k);

  reverse_.resize(edges_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    reverse_[k] = index_.at({edges_[k].to, edges_[k].from});
  }

  outgoing_.assign(n, IndexRange{});
  incoming_.assign(n, {});
  std::size_t start = 0;
  for (Vertex v = 0; v < n; ++v) {
    outgoing_[v] = {start, start + g.degree(v)};
    start += g.degree(v);
  }
  for (std::size_t k = 0; k < edges_.size(); ++k) incoming_[edges_[k].to].push_back(k);
}

std::size_t DirectedEdgeSpace::index_of(DirectedEdge e) const {
  auto it = index_.find(e);
  if (it == index_.end()) {
    throw std::out_of_range("directed edge (" + std::to_string(e.from) + ", " + std::to_string(e.to) +
                            ") is not in the graph");
  }
  return it->second;
}

}  // namespace qwalk
