#include "spw/weighting.hpp"

#include <charconv>
#include <sstream>

namespace spw {

std::string_view to_string(Mode m) { return m == Mode::edge3 ? "123" : "12"; }

Mode parse_mode(std::string_view text) {
  if (text == "123" || text == "edge3") return Mode::edge3;
  if (text == "12" || text == "total2") return Mode::total2;
  throw std::invalid_argument("unknown mode: " + std::string(text));
}

Weighting::Weighting(Mode mode, int vertex_count, int edge_id_bound)
    : mode_(mode), edges_(edge_id_bound, 0), vertices_(mode == Mode::total2 ? vertex_count : 0, 0) {}

void Weighting::set_edge(EdgeId e, int w) {
  if (w < 1 || w > max_edge_weight(mode_))
    throw WeightingError(WeightingErrorKind::out_of_range,
                         "edge weight " + std::to_string(w) + " out of range for mode " + std::string(to_string(mode_)));
  edges_.at(e) = static_cast<std::int8_t>(w);
}

void Weighting::set_vertex(VertexId v, int w) {
  if (mode_ != Mode::total2)
    throw WeightingError(WeightingErrorKind::out_of_range, "vertex weights exist only in mode 12");
  if (w < 1 || w > 2) throw WeightingError(WeightingErrorKind::out_of_range, "vertex weight " + std::to_string(w) + " out of range");
  vertices_.at(v) = static_cast<std::int8_t>(w);
}

bool Weighting::complete_on(const Graph& g) const {
  if (static_cast<int>(edges_.size()) < g.edge_id_bound()) return false;
  for (EdgeId e : g.edge_ids())
    if (!has_edge(e)) return false;
  if (mode_ == Mode::total2) {
    if (static_cast<int>(vertices_.size()) < g.vertex_count()) return false;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (!has_vertex(v)) return false;
  }
  return true;
}

int phi(const Graph& g, const Weighting& w, VertexId v) {
  auto partial = [&] {
    return WeightingError(WeightingErrorKind::partial_at_vertex, "unassigned item at vertex " + std::to_string(v));
  };
  int sum = 0;
  if (w.mode() == Mode::total2) {
    if (!w.has_vertex(v)) throw partial();
    sum += w.vertex(v);
  }
  for (const auto& i : g.incident(v)) {
    if (!w.has_edge(i.edge)) throw partial();
    sum += w.edge(i.edge);
  }
  return sum;
}

int rho(const Graph& g, const Weighting& w, VertexId x, VertexId y) {
  auto e = g.find_edge(x, y);
  if (!e)
    throw WeightingError(WeightingErrorKind::not_an_edge, std::to_string(x) + "-" + std::to_string(y) + " is not an edge");
  return phi(g, w, x) - w.edge(*e);
}

std::vector<Violation> violations(const Graph& g, const Weighting& w) {
  if (!w.complete_on(g)) throw WeightingError(WeightingErrorKind::incomplete, "weighting is incomplete");
  std::vector<int> colors(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) colors[v] = phi(g, w, v);
  std::vector<Violation> out;
  for (EdgeId e : g.edge_ids()) {
    const auto [u, v] = g.edge(e);
    if (colors[u] == colors[v]) out.push_back({e, colors[u], colors[v]});
  }
  return out;
}

namespace {

int to_int(std::string_view tok, int line) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw WeightingError(WeightingErrorKind::malformed, "line " + std::to_string(line) + ": bad integer");
  return out;
}

}  // namespace

Weighting parse_weighting(std::string_view text, const Graph& g, Mode mode) {
  Weighting w = Weighting::empty_for(g, mode);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty() || toks[0][0] == '#') continue;
    auto malformed = [&] {
      return WeightingError(WeightingErrorKind::malformed, "line " + std::to_string(line_no) + ": malformed: " + line);
    };
    if (toks[0] == "edge" && toks.size() == 4) {
      const int a = to_int(toks[1], line_no), b = to_int(toks[2], line_no), x = to_int(toks[3], line_no);
      auto e = g.find_edge(a, b);
      if (!e) throw WeightingError(WeightingErrorKind::not_an_edge, "line " + std::to_string(line_no) + ": not an edge");
      w.set_edge(*e, x);
    } else if (toks[0] == "vertex" && toks.size() == 3) {
      const int v = to_int(toks[1], line_no), x = to_int(toks[2], line_no);
      if (v < 0 || v >= g.vertex_count()) throw malformed();
      w.set_vertex(v, x);
    } else {
      throw malformed();
    }
  }
  return w;
}

std::string format_weighting(const Graph& g, const Weighting& w) {
  std::ostringstream out;
  if (w.mode() == Mode::total2)
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (w.has_vertex(v)) out << "vertex " << v << ' ' << w.vertex(v) << '\n';
  for (EdgeId e : g.edge_ids())
    if (w.has_edge(e)) out << "edge " << g.edge(e).u << ' ' << g.edge(e).v << ' ' << w.edge(e) << '\n';
  return out.str();
}

}  // namespace spw
