#pragma once

#include "spw/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spw {

/// Edge3: edge weights in {1,2,3}. Total2: edge and vertex weights in {1,2}.
enum class Mode { edge3, total2 };

std::string_view to_string(Mode m);
/// Accepts "123" / "12" (CLI spelling) as well as "edge3" / "total2".
Mode parse_mode(std::string_view text);
inline int max_edge_weight(Mode m) { return m == Mode::edge3 ? 3 : 2; }

enum class WeightingErrorKind { out_of_range, partial_at_vertex, not_an_edge, incomplete, malformed };

class WeightingError : public std::runtime_error {
 public:
  WeightingError(WeightingErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  WeightingErrorKind kind() const { return kind_; }

 private:
  WeightingErrorKind kind_;
};

/// A possibly partial weight assignment indexed by edge id and vertex id.
/// Weights are range-checked when assigned.
class Weighting {
 public:
  Weighting() = default;
  Weighting(Mode mode, int vertex_count, int edge_id_bound);
  static Weighting empty_for(const Graph& g, Mode mode) { return {mode, g.vertex_count(), g.edge_id_bound()}; }

  Mode mode() const { return mode_; }

  void set_edge(EdgeId e, int w);
  void clear_edge(EdgeId e) { edges_.at(e) = 0; }
  /// 0 when unassigned.
  int edge(EdgeId e) const { return edges_[e]; }
  bool has_edge(EdgeId e) const { return edges_[e] != 0; }

  void set_vertex(VertexId v, int w);
  void clear_vertex(VertexId v) { vertices_.at(v) = 0; }
  /// 0 when unassigned; always 0 in Edge3 mode.
  int vertex(VertexId v) const { return vertices_.empty() ? 0 : vertices_[v]; }
  bool has_vertex(VertexId v) const { return vertex(v) != 0; }

  /// Every live edge (and in Total2 every vertex) of g is assigned.
  bool complete_on(const Graph& g) const;

  friend bool operator==(const Weighting&, const Weighting&) = default;

 private:
  Mode mode_ = Mode::edge3;
  std::vector<std::int8_t> edges_;
  std::vector<std::int8_t> vertices_;
};

struct Violation {
  EdgeId edge;
  int phi_u;
  int phi_v;
};

/// Total weight seen by v: incident edge weights, plus w(v) in Total2.
int phi(const Graph& g, const Weighting& w, VertexId v);
/// phi(x) - w(xy).
int rho(const Graph& g, const Weighting& w, VertexId x, VertexId y);
/// Edges uv with phi(u) == phi(v), in edge-id order. Requires w complete on g.
std::vector<Violation> violations(const Graph& g, const Weighting& w);
inline bool is_proper(const Graph& g, const Weighting& w) { return violations(g, w).empty(); }

/// Text format: `edge <u> <v> <w>` and (Total2) `vertex <v> <w>` lines.
Weighting parse_weighting(std::string_view text, const Graph& g, Mode mode);
std::string format_weighting(const Graph& g, const Weighting& w);

}  // namespace spw
