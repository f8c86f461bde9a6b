#include "spw/mad.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

namespace spw {

namespace {

/// Dinic max-flow on a small dense-ish network.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes, -1), level_(nodes), iter_(nodes) {}

  void add_arc(int from, int to, std::int64_t cap, std::int64_t reverse_cap = 0) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], reverse_cap});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t max_flow(int s, int t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      for (std::size_t i = 0; i < head_.size(); ++i) iter_[i] = head_[i];
      while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) total += f;
    }
    return total;
  }

  /// Nodes reachable from s in the residual network (call after max_flow).
  std::vector<char> source_side(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int a = head_[x]; a != -1; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int a = head_[x]; a != -1; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[x] + 1;
          q.push(arcs_[a].to);
        }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int x, int t, std::int64_t limit) {
    if (x == t) return limit;
    for (int& a = iter_[x]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap > 0 && level_[arc.to] == level_[x] + 1) {
        std::int64_t f = dfs(arc.to, t, std::min(limit, arc.cap));
        if (f > 0) {
          arc.cap -= f;
          arcs_[a ^ 1].cap += f;
          return f;
        }
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

/// Vertex set maximizing den*|E(S)| - num*|S| (the minimal maximizer).
std::vector<VertexId> densest_improvement(const Graph& g, std::int64_t num, std::int64_t den) {
  const int n = g.vertex_count();
  const std::int64_t m = g.edge_count();
  const int s = n, t = n + 1;
  FlowNetwork net(n + 2);
  for (VertexId v = 0; v < n; ++v) {
    net.add_arc(s, v, den * m);
    net.add_arc(v, t, den * m + 2 * num - den * g.degree(v));
  }
  for (EdgeId e : g.edge_ids()) net.add_arc(g.edge(e).u, g.edge(e).v, den, den);
  net.max_flow(s, t);
  auto side = net.source_side(s);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v)
    if (side[v]) out.push_back(v);
  return out;
}

std::int64_t induced_edges(const Graph& g, const std::vector<VertexId>& set) {
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : set) in[v] = 1;
  std::int64_t count = 0;
  for (VertexId v : set)
    for (const auto& i : g.incident(v))
      if (in[i.neighbor] && i.neighbor > v) ++count;
  return count;
}

}  // namespace

Rational average_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw EmptyGraphError();
  return Rational(2 * static_cast<std::int64_t>(g.edge_count()), g.vertex_count());
}

MadResult mad_exact(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {Rational(0), {}};
  if (g.edge_count() == 0) return {Rational(0), {0}};

  // Density |E(S)|/|S| only increases; each round either finds a strictly
  // denser set or certifies the current one optimal.
  std::vector<VertexId> witness(n);
  for (VertexId v = 0; v < n; ++v) witness[v] = v;
  Rational density(g.edge_count(), n);
  for (;;) {
    auto better = densest_improvement(g, density.numerator(), density.denominator());
    if (better.empty()) break;
    const Rational d(induced_edges(g, better), static_cast<std::int64_t>(better.size()));
    if (d <= density) break;
    density = d;
    witness = std::move(better);
  }
  return {density * 2, witness};
}

bool mad_less_than(const Graph& g, const Rational& bound) { return mad_exact(g).value < bound; }

MadResult mad_brute_force(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("mad_brute_force refuses graphs with more than 20 vertices");
  if (n == 0) return {Rational(0), {}};
  std::vector<std::uint32_t> nbr_mask(n, 0);
  for (EdgeId e : g.edge_ids()) {
    nbr_mask[g.edge(e).u] |= 1u << g.edge(e).v;
    nbr_mask[g.edge(e).v] |= 1u << g.edge(e).u;
  }
  std::int64_t best_e = 0, best_v = 1;
  std::uint32_t best_mask = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::int64_t twice_edges = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) twice_edges += __builtin_popcount(nbr_mask[v] & mask);
    const std::int64_t size = __builtin_popcount(mask);
    if (twice_edges / 2 * best_v > best_e * size) {
      best_e = twice_edges / 2;
      best_v = size;
      best_mask = mask;
    }
  }
  MadResult out{Rational(2 * best_e, best_v), {}};
  for (int v = 0; v < n; ++v)
    if (best_mask >> v & 1u) out.witness.push_back(v);
  return out;
}

}  // namespace spw
