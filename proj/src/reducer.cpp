#include "spw/reducer.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spw {

namespace {

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<VertexId> touched_vertices(const Graph& g, const MutableSet& ms) {
  std::vector<VertexId> out = ms.vertices;
  for (EdgeId e : ms.edges) {
    out.push_back(g.edge(e).u);
    out.push_back(g.edge(e).v);
  }
  sort_unique(out);
  return out;
}

// Satisfaction of edge ab reads phi(a) - phi(b) = k + sum(sign * value).
struct Constraint {
  int constant = 0;
  std::vector<std::pair<int, int>> terms;  // (variable index, sign)
};

class Search {
 public:
  Search(const Graph& g, Weighting& w, const MutableSet& ms, std::uint64_t budget)
      : g_(g), w_(w), budget_(budget) {
    for (EdgeId e : ms.edges) {
      var_index_edge_[e] = static_cast<int>(vars_.size());
      vars_.push_back({true, e, max_edge_weight(w.mode())});
    }
    for (VertexId v : ms.vertices) {
      var_index_vertex_[v] = static_cast<int>(vars_.size());
      vars_.push_back({false, v, 2});
    }
    for (EdgeId e : ms.edges) w_.clear_edge(e);
    for (VertexId v : ms.vertices) w_.clear_vertex(v);

    std::vector<EdgeId> cons = affected_edges(g, ms);
    var_cons_.resize(vars_.size());
    for (EdgeId e : cons) {
      Constraint c;
      const VertexId a = g.edge(e).u, b = g.edge(e).v;
      add_side(c, a, e, +1);
      add_side(c, b, e, -1);
      const int ci = static_cast<int>(cons_.size());
      for (auto [vi, s] : c.terms) var_cons_[vi].push_back(ci);
      cons_.push_back(std::move(c));
    }
    value_.assign(vars_.size(), 0);
    partial_.resize(cons_.size());
    open_.resize(cons_.size());
    for (std::size_t i = 0; i < cons_.size(); ++i) {
      partial_[i] = cons_[i].constant;
      open_[i] = static_cast<int>(cons_[i].terms.size());
    }
  }

  bool run(SearchStats* stats) {
    bool ok = true;
    for (std::size_t i = 0; i < cons_.size() && ok; ++i)
      if (open_[i] == 0 && partial_[i] == 0) ok = false;
    ok = ok && dfs(0);
    if (stats) {
      stats->nodes = nodes_;
      stats->budget_hit = nodes_ > budget_;
    }
    if (ok) {
      for (std::size_t i = 0; i < vars_.size(); ++i) write(i, value_[i]);
    }
    return ok;
  }

 private:
  struct Var {
    bool is_edge;
    int id;
    int domain;
  };

  void add_side(Constraint& c, VertexId x, EdgeId skip, int sign) {
    for (const auto& inc : g_.incident(x)) {
      if (inc.edge == skip) continue;
      auto it = var_index_edge_.find(inc.edge);
      if (it != var_index_edge_.end())
        c.terms.emplace_back(it->second, sign);
      else
        c.constant += sign * w_.edge(inc.edge);
    }
    if (w_.mode() == Mode::total2) {
      auto it = var_index_vertex_.find(x);
      if (it != var_index_vertex_.end())
        c.terms.emplace_back(it->second, sign);
      else
        c.constant += sign * w_.vertex(x);
    }
  }

  void write(std::size_t i, int val) {
    if (vars_[i].is_edge) {
      if (val) w_.set_edge(vars_[i].id, val);
      else w_.clear_edge(vars_[i].id);
    } else {
      if (val) w_.set_vertex(vars_[i].id, val);
      else w_.clear_vertex(vars_[i].id);
    }
  }

  int sign_in(int ci, int vi) const {
    for (auto [v, s] : cons_[ci].terms)
      if (v == vi) return s;
    return 0;
  }

  // Bitmask of allowed values (bit k = value k) for an unassigned variable.
  unsigned allowed(int vi) const {
    unsigned mask = 0;
    for (int k = 1; k <= vars_[vi].domain; ++k) mask |= 1u << k;
    for (int ci : var_cons_[vi]) {
      if (open_[ci] != 1) continue;
      const int s = sign_in(ci, vi);
      const int bad = -partial_[ci] * s;
      if (bad >= 1 && bad <= vars_[vi].domain) mask &= ~(1u << bad);
    }
    return mask;
  }

  bool assign(int vi, int val) {
    value_[vi] = val;
    bool ok = true;
    for (int ci : var_cons_[vi]) {
      partial_[ci] += sign_in(ci, vi) * val;
      --open_[ci];
      if (open_[ci] == 0 && partial_[ci] == 0) ok = false;
    }
    return ok;
  }

  void unassign(int vi) {
    const int val = value_[vi];
    for (int ci : var_cons_[vi]) {
      partial_[ci] -= sign_in(ci, vi) * val;
      ++open_[ci];
    }
    value_[vi] = 0;
  }

  bool dfs(std::size_t depth) {
    if (depth == vars_.size()) return true;
    if (++nodes_ > budget_) return false;
    int best = -1;
    unsigned best_mask = 0;
    int best_count = 99, best_degree = -1;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (value_[i]) continue;
      const unsigned m = allowed(static_cast<int>(i));
      const int cnt = __builtin_popcount(m);
      if (cnt == 0) return false;
      const int degree = static_cast<int>(var_cons_[i].size());
      if (cnt < best_count || (cnt == best_count && degree > best_degree)) {
        best = static_cast<int>(i);
        best_mask = m;
        best_count = cnt;
        best_degree = degree;
      }
    }
    for (int k = 1; k <= vars_[best].domain; ++k) {
      if (!(best_mask & (1u << k))) continue;
      if (assign(best, k) && dfs(depth + 1)) return true;
      unassign(best);
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  const Graph& g_;
  Weighting& w_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Var> vars_;
  std::map<EdgeId, int> var_index_edge_;
  std::map<VertexId, int> var_index_vertex_;
  std::vector<Constraint> cons_;
  std::vector<std::vector<int>> var_cons_;
  std::vector<int> value_;
  std::vector<int> partial_;
  std::vector<int> open_;
};

}  // namespace

MutableSet mutable_set(const ConfigurationInstance& inst, const Graph& g, Mode mode) {
  MutableSet ms;
  ms.edges = inst.deleted_edges();
  ms.edges.insert(ms.edges.end(), inst.extra_mutable_edges.begin(), inst.extra_mutable_edges.end());
  sort_unique(ms.edges);
  if (mode == Mode::total2) {
    for (EdgeId e : inst.deleted_edges()) {
      ms.vertices.push_back(g.edge(e).u);
      ms.vertices.push_back(g.edge(e).v);
    }
    ms.vertices.insert(ms.vertices.end(), inst.extra_mutable_vertices.begin(), inst.extra_mutable_vertices.end());
    sort_unique(ms.vertices);
  }
  return ms;
}

std::vector<EdgeId> affected_edges(const Graph& g, const MutableSet& ms) {
  std::vector<EdgeId> out;
  for (VertexId x : touched_vertices(g, ms))
    for (const auto& inc : g.incident(x)) out.push_back(inc.edge);
  sort_unique(out);
  return out;
}

MutableSet expand_one_shell(const Graph& g, const MutableSet& ms, Mode mode) {
  MutableSet out;
  out.edges = affected_edges(g, ms);
  if (mode == Mode::total2) {
    for (EdgeId e : out.edges) {
      out.vertices.push_back(g.edge(e).u);
      out.vertices.push_back(g.edge(e).v);
    }
    out.vertices.insert(out.vertices.end(), ms.vertices.begin(), ms.vertices.end());
    sort_unique(out.vertices);
  }
  return out;
}

bool search_extension(const Graph& g, Weighting& w, const MutableSet& ms, std::uint64_t node_budget,
                      SearchStats* stats) {
  Search s(g, w, ms, node_budget);
  return s.run(stats);
}

Weighting extend(const Graph& g, const ConfigurationInstance& inst, const Weighting& w_prime, Mode mode) {
  if (w_prime.mode() != mode) throw std::invalid_argument("weighting mode does not match extension mode");
  Weighting w = w_prime;
  const MutableSet ms = mutable_set(inst, g, mode);
  if (search_extension(g, w, ms)) return w;
  if (inst.kind.catalog == Catalog::custom)
    throw ExtensionImpossible("no extension of the derived weighting over the mutable set of " +
                              to_string(inst.kind));
  w = w_prime;
  if (search_extension(g, w, expand_one_shell(g, ms, mode))) return w;
  throw InternalInconsistency(to_string(inst.kind) + " at vertex " + std::to_string(inst.center()) +
                              " did not extend");
}

}  // namespace spw
