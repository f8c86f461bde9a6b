#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spw {

using VertexId = int;
using EdgeId = int;

struct Edge {
  VertexId u;  // u < v
  VertexId v;
};

/// One entry of a vertex's adjacency list.
struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

enum class GraphErrorKind { duplicate_edge, loop, malformed_line, unknown_edge_id, bad_vertex };

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what, int line = 0)
      : std::runtime_error(what), kind_(kind), line_(line) {}
  GraphErrorKind kind() const { return kind_; }
  /// 1-based line number for parse errors, 0 otherwise.
  int line() const { return line_; }

 private:
  GraphErrorKind kind_;
  int line_;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edge ids are assigned in insertion order and never reused. Deleting edges
/// tombstones their ids, so ids recorded before a deletion stay meaningful in
/// every graph derived from the original.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  static Graph from_edges(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges);

  /// Appends an edge; throws on loops, duplicates and out-of-range endpoints.
  EdgeId add_edge(VertexId a, VertexId b);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  /// Upper bound on edge ids, tombstones included.
  int edge_id_bound() const { return static_cast<int>(edges_.size()); }
  int edge_count() const { return live_edges_; }

  bool is_live(EdgeId e) const { return e >= 0 && e < edge_id_bound() && live_[e]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  VertexId other_end(EdgeId e, VertexId x) const { return edges_[e].u == x ? edges_[e].v : edges_[e].u; }

  int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
  /// Live incidences of v sorted by neighbor id.
  std::span<const Incidence> incident(VertexId v) const { return adjacency_[v]; }
  std::vector<VertexId> neighbors(VertexId v) const;

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

  /// Live edge ids in increasing order.
  std::vector<EdgeId> edge_ids() const;

  /// Copy with the given edges tombstoned; throws UnknownEdgeId for dead or
  /// out-of-range ids.
  Graph delete_edges(std::span<const EdgeId> ids) const;

  /// Connected components (vertex lists, each sorted), ordered by least vertex.
  std::vector<std::vector<VertexId>> components() const;

 private:
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> live_;
  int live_edges_ = 0;
};

/// Parses the line-oriented edge-list format: `# ...` comments, an optional
/// `v <n>` line fixing the vertex count, and `e <u> <v>` edges.
Graph parse_graph(std::string_view text);
/// Writes the edge-list format, always starting with the `v <n>` line.
std::string format_graph(const Graph& g);

enum class GammaKind { none, gamma4, gamma3a, gamma3b };

struct VertexClass {
  int degree = 0;
  bool is_alpha = false;
  bool is_beta12 = false;
  bool is_beta123 = false;
  bool is_beta_prime = false;
  GammaKind gamma_kind = GammaKind::none;

  bool is_gamma() const { return gamma_kind != GammaKind::none; }
};

/// Degree-class predicates of a vertex. `is_beta12` is the strict form used
/// for total weightings (exactly one 2-neighbor, no 1-neighbor); `is_beta123`
/// only asks for a 2-neighbor.
VertexClass classify(const Graph& g, VertexId v);

int count_neighbors_of_degree(const Graph& g, VertexId v, int d);
bool is_alpha(const Graph& g, VertexId v);
bool is_beta12(const Graph& g, VertexId v);
bool is_beta123(const Graph& g, VertexId v);
bool is_beta_prime(const Graph& g, VertexId v);
GammaKind gamma_kind(const Graph& g, VertexId v);

std::string_view to_string(GammaKind k);

}  // namespace spw
