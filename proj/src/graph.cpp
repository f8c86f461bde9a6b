#include "spw/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace spw {

Graph::Graph(int vertex_count) : adjacency_(vertex_count) {
  if (vertex_count < 0) throw GraphError(GraphErrorKind::bad_vertex, "negative vertex count");
}

Graph Graph::from_edges(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges) {
  Graph g(vertex_count);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

EdgeId Graph::add_edge(VertexId a, VertexId b) {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
    throw GraphError(GraphErrorKind::bad_vertex,
                     "edge " + std::to_string(a) + "-" + std::to_string(b) + " has an endpoint out of range");
  if (a == b) throw GraphError(GraphErrorKind::loop, "loop at vertex " + std::to_string(a));
  if (adjacent(a, b))
    throw GraphError(GraphErrorKind::duplicate_edge,
                     "duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
  const EdgeId id = edge_id_bound();
  edges_.push_back({std::min(a, b), std::max(a, b)});
  live_.push_back(1);
  ++live_edges_;
  auto insert = [&](VertexId x, VertexId y) {
    auto& list = adjacency_[x];
    auto pos = std::lower_bound(list.begin(), list.end(), y,
                                [](const Incidence& i, VertexId n) { return i.neighbor < n; });
    list.insert(pos, Incidence{y, id});
  };
  insert(a, b);
  insert(b, a);
  return id;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(adjacency_[v].size());
  for (const auto& i : adjacency_[v]) out.push_back(i.neighbor);
  return out;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a < 0 || a >= vertex_count()) return std::nullopt;
  const auto& list = adjacency_[a];
  auto pos = std::lower_bound(list.begin(), list.end(), b,
                              [](const Incidence& i, VertexId n) { return i.neighbor < n; });
  if (pos != list.end() && pos->neighbor == b) return pos->edge;
  return std::nullopt;
}

std::vector<EdgeId> Graph::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(live_edges_);
  for (EdgeId e = 0; e < edge_id_bound(); ++e)
    if (live_[e]) out.push_back(e);
  return out;
}

Graph Graph::delete_edges(std::span<const EdgeId> ids) const {
  Graph out = *this;
  for (EdgeId e : ids) {
    if (!out.is_live(e)) throw GraphError(GraphErrorKind::unknown_edge_id, "unknown edge id " + std::to_string(e));
    out.live_[e] = 0;
    --out.live_edges_;
    for (VertexId x : {edges_[e].u, edges_[e].v}) {
      auto& list = out.adjacency_[x];
      std::erase_if(list, [e](const Incidence& i) { return i.edge == e; });
    }
  }
  return out;
}

std::vector<std::vector<VertexId>> Graph::components() const {
  std::vector<int> seen(vertex_count(), 0);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const auto& inc : adjacency_[comp[i]])
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          comp.push_back(inc.neighbor);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

bool parse_id(std::string_view tok, int& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size() && out >= 0;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && !(line[j] == ' ' || line[j] == '\t' || line[j] == '\r')) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  struct PendingEdge {
    int a, b, line;
  };
  std::vector<PendingEdge> pending;
  int max_id = -1;
  int declared = -1;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    auto malformed = [&] {
      return GraphError(GraphErrorKind::malformed_line,
                        "line " + std::to_string(line_no) + ": malformed: " + std::string(line), line_no);
    };
    if (toks[0] == "v" && toks.size() == 2) {
      int n = 0;
      if (declared >= 0 || !parse_id(toks[1], n)) throw malformed();
      declared = n;
    } else if (toks[0] == "e" && toks.size() == 3) {
      int a = 0, b = 0;
      if (!parse_id(toks[1], a) || !parse_id(toks[2], b)) throw malformed();
      max_id = std::max({max_id, a, b});
      pending.push_back({a, b, line_no});
    } else {
      throw malformed();
    }
    if (end == text.size()) break;
  }
  if (declared >= 0)
    for (const auto& p : pending)
      if (std::max(p.a, p.b) >= declared)
        throw GraphError(GraphErrorKind::bad_vertex,
                         "line " + std::to_string(p.line) + ": vertex " + std::to_string(std::max(p.a, p.b)) +
                             " outside the declared " + std::to_string(declared),
                         p.line);
  Graph g(declared >= 0 ? declared : max_id + 1);
  for (const auto& p : pending) {
    if (p.a == p.b)
      throw GraphError(GraphErrorKind::loop, "line " + std::to_string(p.line) + ": loop at vertex " + std::to_string(p.a),
                       p.line);
    if (g.adjacent(p.a, p.b))
      throw GraphError(GraphErrorKind::duplicate_edge,
                       "line " + std::to_string(p.line) + ": duplicate edge " + std::to_string(p.a) + " " +
                           std::to_string(p.b),
                       p.line);
    g.add_edge(p.a, p.b);
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "v " << g.vertex_count() << '\n';
  for (EdgeId e : g.edge_ids()) out << "e " << g.edge(e).u << ' ' << g.edge(e).v << '\n';
  return out.str();
}

int count_neighbors_of_degree(const Graph& g, VertexId v, int d) {
  int n = 0;
  for (const auto& i : g.incident(v))
    if (g.degree(i.neighbor) == d) ++n;
  return n;
}

bool is_alpha(const Graph& g, VertexId v) { return g.degree(v) == 2 && count_neighbors_of_degree(g, v, 2) > 0; }

bool is_beta12(const Graph& g, VertexId v) {
  return g.degree(v) == 3 && count_neighbors_of_degree(g, v, 2) == 1 && count_neighbors_of_degree(g, v, 1) == 0;
}

bool is_beta123(const Graph& g, VertexId v) { return g.degree(v) == 3 && count_neighbors_of_degree(g, v, 2) > 0; }

bool is_beta_prime(const Graph& g, VertexId v) {
  const int d = g.degree(v);
  if (d < 4 || d % 2 != 0) return false;
  return count_neighbors_of_degree(g, v, 1) == d / 2 - 1 && count_neighbors_of_degree(g, v, 2) == 0;
}

GammaKind gamma_kind(const Graph& g, VertexId v) {
  const int d = g.degree(v);
  if (d == 4) return count_neighbors_of_degree(g, v, 1) > 0 ? GammaKind::gamma4 : GammaKind::none;
  if (d != 3) return GammaKind::none;
  // gamma3a wins when both apply.
  for (const auto& i : g.incident(v))
    if (is_alpha(g, i.neighbor)) return GammaKind::gamma3a;
  if (count_neighbors_of_degree(g, v, 2) >= 2) return GammaKind::gamma3b;
  return GammaKind::none;
}

VertexClass classify(const Graph& g, VertexId v) {
  VertexClass c;
  c.degree = g.degree(v);
  c.is_alpha = is_alpha(g, v);
  c.is_beta12 = is_beta12(g, v);
  c.is_beta123 = is_beta123(g, v);
  c.is_beta_prime = is_beta_prime(g, v);
  c.gamma_kind = gamma_kind(g, v);
  return c;
}

std::string_view to_string(GammaKind k) {
  switch (k) {
    case GammaKind::none: return "none";
    case GammaKind::gamma4: return "gamma4";
    case GammaKind::gamma3a: return "gamma3a";
    case GammaKind::gamma3b: return "gamma3b";
  }
  return "?";
}

}  // namespace spw
