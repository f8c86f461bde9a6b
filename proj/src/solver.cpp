#include "spw/solver.hpp"

#include "spw/mad.hpp"
#include "spw/reducer.hpp"

#include <future>
#include <sstream>

namespace spw {

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::solved: return "Solved";
    case SolveStatus::not_applicable: return "NotApplicable";
    case SolveStatus::input_rejected: return "InputRejected";
  }
  return "?";
}

Rational level_bound(int level) {
  if (level == 52) return {5, 2};
  if (level == 83) return {8, 3};
  throw std::invalid_argument("level must be 52 or 83");
}

Catalog reducible_catalog(Mode mode, int level) {
  level_bound(level);
  if (level == 52) return mode == Mode::edge3 ? Catalog::w3_52 : Catalog::w2_52;
  return mode == Mode::edge3 ? Catalog::w3_83 : Catalog::w2_83;
}

StructuralCatalog structural_catalog(Mode mode, int level) {
  level_bound(level);
  if (level == 52) return StructuralCatalog::s52;
  return mode == Mode::edge3 ? StructuralCatalog::s83_123 : StructuralCatalog::s83_12;
}

bool has_isolated_edge(const Graph& g) {
  for (EdgeId e : g.edge_ids())
    if (g.degree(g.edge(e).u) == 1 && g.degree(g.edge(e).v) == 1) return true;
  return false;
}

namespace {

std::optional<ConfigurationInstance> next_instance(const Graph& g, Mode mode, int level) {
  if (mode == Mode::total2)
    for (EdgeId e : g.edge_ids())
      if (g.degree(g.edge(e).u) == 1 && g.degree(g.edge(e).v) == 1)
        return detect_at(g, {reducible_catalog(mode, level), "A"}, g.edge(e).u);
  if (auto t = detect_first(g, Catalog::degen_tri)) return t;
  if (mode == Mode::edge3 && level == 83)
    if (auto q = detect_first(g, Catalog::degen_4cyc)) return q;
  auto s = detect_first(g, structural_catalog(mode, level));
  if (!s) return std::nullopt;
  return structural_to_reducible(*s, g, reducible_catalog(mode, level));
}

}  // namespace

SolveOutcome solve(const Graph& g, Mode mode, int level, const SolveOptions& opts) {
  SolveOutcome out;
  const Rational bound = level_bound(level);
  if (mode == Mode::edge3 && has_isolated_edge(g)) {
    out.status = SolveStatus::input_rejected;
    out.reason = "graph has an isolated edge; no proper 3-weighting exists";
    return out;
  }
  if (!opts.force && g.vertex_count() > 0 && !mad_less_than(g, bound)) {
    out.status = SolveStatus::not_applicable;
    out.reason = "Mad is " + to_string(mad_exact(g).value) + ", not below " + to_string(bound);
    return out;
  }

  std::vector<Graph> graphs{g};
  std::vector<ConfigurationInstance> stack;
  while (graphs.back().edge_count() > 0) {
    const Graph& cur = graphs.back();
    auto inst = next_instance(cur, mode, level);
    if (!inst) {
      out.status = SolveStatus::not_applicable;
      out.reason = "no configuration found in a graph with " + std::to_string(cur.edge_count()) + " edges";
      return out;
    }
    out.trace.push_back({inst->kind, inst->roles, cur.edge_count()});
    graphs.push_back(cur.delete_edges(inst->deleted_edges()));
    stack.push_back(std::move(*inst));
  }

  Weighting w = Weighting::empty_for(g, mode);
  if (mode == Mode::total2)
    for (VertexId v = 0; v < g.vertex_count(); ++v) w.set_vertex(v, 1);
  for (std::size_t i = stack.size(); i-- > 0;) w = extend(graphs[i], stack[i], w, mode);

  if (!w.complete_on(g) || !is_proper(g, w))
    throw InternalInconsistency("solver produced a weighting that does not verify");
  out.status = SolveStatus::solved;
  out.weighting = std::move(w);
  return out;
}

SolveOutcome solve_components(const Graph& g, Mode mode, int level, const SolveOptions& opts) {
  struct Part {
    std::vector<VertexId> comp;
    std::vector<EdgeId> back;  // local edge id -> edge id in g
    std::future<SolveOutcome> result;
  };
  std::vector<Part> parts;
  SolveOutcome out;
  out.weighting = Weighting::empty_for(g, mode);
  out.status = SolveStatus::solved;
  std::vector<int> local(g.vertex_count(), -1);
  for (auto& comp : g.components()) {
    if (comp.size() == 1) {
      if (mode == Mode::total2) out.weighting.set_vertex(comp[0], 1);
      continue;
    }
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    Graph sub(static_cast<int>(comp.size()));
    std::vector<EdgeId> back;
    for (VertexId x : comp)
      for (const auto& inc : g.incident(x))
        if (x < inc.neighbor) {
          sub.add_edge(local[x], local[inc.neighbor]);
          back.push_back(inc.edge);
        }
    auto fut = std::async(std::launch::async, [sub = std::move(sub), mode, level, opts] {
      return solve(sub, mode, level, opts);
    });
    parts.push_back({std::move(comp), std::move(back), std::move(fut)});
  }

  for (auto& p : parts) {
    SolveOutcome part = p.result.get();
    for (auto& step : part.trace)
      for (auto& role : step.roles) role.second = p.comp[role.second];
    out.trace.insert(out.trace.end(), part.trace.begin(), part.trace.end());
    if (part.status != SolveStatus::solved) {
      out.status = part.status;
      out.reason = part.reason;
      out.weighting = Weighting::empty_for(g, mode);
      break;
    }
    for (std::size_t e = 0; e < p.back.size(); ++e)
      out.weighting.set_edge(p.back[e], part.weighting.edge(static_cast<EdgeId>(e)));
    if (mode == Mode::total2)
      for (std::size_t i = 0; i < p.comp.size(); ++i)
        out.weighting.set_vertex(p.comp[i], part.weighting.vertex(static_cast<VertexId>(i)));
  }
  // Futures left unread after a failure still join in their destructors.
  return out;
}

std::string format_trace(const std::vector<TraceStep>& trace) {
  std::ostringstream out;
  for (const auto& s : trace) {
    out << to_string(s.kind) << " |E|=" << s.edges_before;
    for (const auto& [n, v] : s.roles) out << ' ' << n << '=' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace spw
