#include "spw/gen.hpp"

#include "spw/mad.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace spw::gen {

namespace {

GenError invalid(const std::string& what) { return GenError(GenErrorKind::invalid_params, what); }

Graph from_list(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

}  // namespace

Graph cycle(int n) {
  if (n < 3) throw invalid("cycle needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  if (n < 1) throw invalid("path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  if (n < 1) throw invalid("complete graph needs n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph star(int leaves) {
  if (leaves < 1) throw invalid("star needs at least one leaf");
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph tree(int n, std::uint64_t seed) {
  if (n < 1) throw invalid("tree needs n >= 1");
  if (n <= 2) return path(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> prufer(n - 2), degree(n, 1);
  for (int& x : prufer) {
    x = pick(rng);
    ++degree[x];
  }
  Graph g(n);
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  for (int x : prufer) {
    const int leaf = leaves.top();
    leaves.pop();
    g.add_edge(leaf, x);
    if (--degree[x] == 1) leaves.push(x);
  }
  const int a = leaves.top();
  leaves.pop();
  g.add_edge(a, leaves.top());
  return g;
}

Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n) throw invalid("GP(n,k) needs n >= 3 and 1 <= k < n/2");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(i, n + i);
    g.add_edge(n + i, n + (i + k) % n);
  }
  return g;
}

Graph petersen() { return generalized_petersen(5, 2); }

Graph random_mad(int n, const Rational& bound, std::uint64_t seed) {
  if (n < 1) throw invalid("random_mad needs n >= 1");
  if (bound <= Rational(0)) throw invalid("random_mad needs a positive bound");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  const Rational cap = bound * n / 2;
  const int max_m = static_cast<int>(cap.numerator() / cap.denominator());
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> present;
  // Most graphs grow from a spanning tree; the rest start edgeless and may
  // stay disconnected.
  if (n >= 2 && bound > Rational(2) && std::bernoulli_distribution(0.8)(rng)) {
    const Graph t = tree(n, rng());
    for (EdgeId e : t.edge_ids()) {
      edges.emplace_back(t.edge(e).u, t.edge(e).v);
      present.insert(edges.back());
    }
  }
  const int low = std::max(static_cast<int>(edges.size()), n / 2);
  const int target = std::uniform_int_distribution<int>(low, std::max(low, max_m))(rng);
  std::vector<int> hubs;
  for (int i = 0; i <= n / 12; ++i) hubs.push_back(pick(rng));
  auto propose = [&]() -> std::pair<int, int> {
    const int a = std::bernoulli_distribution(0.2)(rng) ? hubs[pick(rng) % hubs.size()] : pick(rng);
    const int b = pick(rng);
    return {std::min(a, b), std::max(a, b)};
  };
  int tries = 0;
  while (static_cast<int>(edges.size()) < target && tries < 20 * (target + 1)) {
    std::vector<std::pair<int, int>> batch;
    for (int i = 0; i < 8 && static_cast<int>(edges.size() + batch.size()) < target; ++i) {
      ++tries;
      auto e = propose();
      if (e.first == e.second || present.count(e)) continue;
      if (std::find(batch.begin(), batch.end(), e) != batch.end()) continue;
      batch.push_back(e);
    }
    if (batch.empty()) continue;
    auto trial = edges;
    trial.insert(trial.end(), batch.begin(), batch.end());
    if (mad_less_than(from_list(n, trial), bound)) {
      edges = std::move(trial);
      for (auto e : batch) present.insert(e);
      continue;
    }
    for (auto e : batch) {
      edges.push_back(e);
      if (mad_less_than(from_list(n, edges), bound))
        present.insert(e);
      else
        edges.pop_back();
    }
  }
  return from_list(n, edges);
}

Graph random_sparse(int n, const Rational& bound, std::uint64_t seed) {
  if (n < 3) throw invalid("random_sparse needs n >= 3");
  if (bound <= Rational(2)) throw invalid("random_sparse needs a bound above 2");
  std::mt19937_64 rng(seed);
  Graph base = tree(n, rng());
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> present;
  for (EdgeId e : base.edge_ids()) {
    edges.emplace_back(base.edge(e).u, base.edge(e).v);
    present.insert(edges.back());
  }
  // Largest m with 2m/n < bound.
  const Rational cap = bound * n / 2;
  int max_m = static_cast<int>(cap.numerator() / cap.denominator());
  if (Rational(max_m) == cap) --max_m;
  const int target = std::uniform_int_distribution<int>(n - 1, std::max(n - 1, max_m))(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> hubs;
  for (int i = 0; i <= n / 10; ++i) hubs.push_back(pick(rng));
  int tries = 0;
  while (static_cast<int>(edges.size()) < target && tries++ < 50 * n) {
    const int a = std::bernoulli_distribution(0.3)(rng) ? hubs[pick(rng) % hubs.size()] : pick(rng);
    const int b = pick(rng);
    std::pair<int, int> e{std::min(a, b), std::max(a, b)};
    if (a == b || present.count(e)) continue;
    present.insert(e);
    edges.push_back(e);
  }
  return from_list(n, edges);
}

Graph random_leafless(int n, const Rational& bound, std::uint64_t seed) {
  if (n < 3) throw invalid("random_leafless needs n >= 3");
  if (bound <= Rational(2)) throw invalid("random_leafless needs a bound above 2");
  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> present;
  auto try_add = [&](int a, int b) {
    std::pair<int, int> e{std::min(a, b), std::max(a, b)};
    if (a == b || present.count(e)) return false;
    present.insert(e);
    edges.push_back(e);
    return true;
  };
  for (int i = 0; i < n; ++i) try_add(order[i], order[(i + 1) % n]);
  const Rational cap = bound * n / 2;
  int max_m = static_cast<int>(cap.numerator() / cap.denominator());
  if (Rational(max_m) == cap) --max_m;
  const int target = std::uniform_int_distribution<int>(n, std::max(n, max_m))(rng);
  std::uniform_int_distribution<int> pick(0, n - 1);
  const int hub = pick(rng);
  int tries = 0;
  while (static_cast<int>(edges.size()) < target && tries++ < 50 * n)
    try_add(std::bernoulli_distribution(0.2)(rng) ? hub : pick(rng), pick(rng));
  return from_list(n, edges);
}

Graph cubic_plus_pendants(const Graph& base) {
  for (VertexId v = 0; v < base.vertex_count(); ++v)
    if (base.degree(v) != 3) throw GenError(GenErrorKind::not_cubic, "vertex " + std::to_string(v) + " has degree " + std::to_string(base.degree(v)));
  const int n = base.vertex_count();
  Graph g(2 * n);
  for (EdgeId e : base.edge_ids()) g.add_edge(base.edge(e).u, base.edge(e).v);
  for (int v = 0; v < n; ++v) g.add_edge(v, n + v);
  return g;
}

int girth(const Graph& g) {
  int best = 0;
  const int n = g.vertex_count();
  std::vector<int> dist(n), parent(n);
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop();
      for (const auto& i : g.incident(x)) {
        const VertexId y = i.neighbor;
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          const int len = dist[x] + dist[y] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

std::vector<Graph> cubic_girth5_corpus(int max_n, int random_count, std::uint64_t seed) {
  std::vector<Graph> out;
  for (int n = 5; 2 * n <= max_n; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      Graph g = generalized_petersen(n, k);
      if (girth(g) >= 5) out.push_back(std::move(g));
    }
  std::mt19937_64 rng(seed);
  int made = 0, attempts = 0;
  while (made < random_count && attempts < 2000 * (random_count + 1)) {
    ++attempts;
    int n = std::uniform_int_distribution<int>(5, std::max(5, max_n / 2))(rng) * 2;
    if (n > max_n) n = max_n - max_n % 2;
    if (n < 10) continue;
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
      for (int j = 0; j < 3; ++j) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    Graph g(n);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      const int a = stubs[i], b = stubs[i + 1];
      if (a == b || g.adjacent(a, b)) ok = false;
      else g.add_edge(a, b);
    }
    if (!ok || girth(g) < 5) continue;
    out.push_back(std::move(g));
    ++made;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Connected graphs up to isomorphism by vertex augmentation.

namespace {

struct Small {
  int n;
  std::vector<unsigned> adj;  // bit j of adj[i]
};

std::uint64_t code_of(const Small& s, const std::vector<int>& perm) {
  std::uint64_t code = 0;
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j) code = (code << 1) | ((s.adj[perm[i]] >> perm[j]) & 1u);
  return code;
}

std::uint64_t canonical(const Small& s) {
  std::vector<int> deg(s.n);
  for (int i = 0; i < s.n; ++i) deg[i] = __builtin_popcount(s.adj[i]);
  std::vector<int> order(s.n);
  for (int i = 0; i < s.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] != deg[b] ? deg[a] > deg[b] : a < b; });
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < s.n;) {
    int j = i;
    while (j < s.n && deg[order[j]] == deg[order[i]]) ++j;
    blocks.emplace_back(i, j);
    std::sort(order.begin() + i, order.begin() + j);
    i = j;
  }
  std::uint64_t best = 0;
  bool have = false;
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      const std::uint64_t c = code_of(s, order);
      if (!have || c > best) best = c, have = true;
      return;
    }
    auto first = order.begin() + blocks[b].first, last = order.begin() + blocks[b].second;
    std::sort(first, last);
    do rec(b + 1);
    while (std::next_permutation(first, last));
  };
  rec(0);
  return best;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 8) throw invalid("connected_graphs supports 1 <= n <= 8");
  std::vector<Small> level{{1, {0u}}};
  for (int k = 2; k <= n; ++k) {
    std::vector<Small> next;
    std::set<std::uint64_t> seen;
    for (const Small& s : level)
      for (unsigned mask = 1; mask < (1u << (k - 1)); ++mask) {
        Small t{k, s.adj};
        t.adj.push_back(mask);
        for (int i = 0; i < k - 1; ++i)
          if (mask >> i & 1u) t.adj[i] |= 1u << (k - 1);
        if (seen.insert(canonical(t)).second) next.push_back(std::move(t));
      }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const Small& s : level) {
    Graph g(s.n);
    for (int i = 0; i < s.n; ++i)
      for (int j = i + 1; j < s.n; ++j)
        if (s.adj[i] >> j & 1u) g.add_edge(i, j);
    out.push_back(std::move(g));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Non-reducible total-weighting gadgets.

namespace {

// Attaches a stub vertex x to `at` with w(x at) = 1 and pendant leaves so
// that rho(x, at) = w(x) + sum of the pendant edge weights.
struct StubBuilder {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> edge_weight;
  std::map<int, int> vertex_weight;
  int next;

  explicit StubBuilder(int first_free) : next(first_free) {}

  int edge(int a, int b, int w) {
    edges.emplace_back(a, b);
    edge_weight.push_back(w);
    return static_cast<int>(edges.size()) - 1;
  }
  void stub(int at, int own_weight, const std::vector<int>& pendant_weights) {
    const int x = next++;
    edge(at, x, 1);
    vertex_weight[x] = own_weight;
    for (int pw : pendant_weights) {
      const int leaf = next++;
      edge(x, leaf, pw);
      vertex_weight[leaf] = 1;
    }
  }
};

}  // namespace

Gadget nonred_gadget(GadgetSide side, bool perturbed) {
  Gadget out;
  out.instance.kind = {Catalog::custom, side == GadgetSide::left ? "nonred_left" : "nonred_right"};
  std::vector<int> core_local;
  StubBuilder b(0);
  if (side == GadgetSide::left) {
    // u=0, v=1, v'=2, u'=3; v carries rho 5 and 6, v' carries 6 and 5.
    b.next = 4;
    core_local.push_back(b.edge(0, 1, 0));
    core_local.push_back(b.edge(1, 2, 0));
    core_local.push_back(b.edge(2, 3, 0));
    b.stub(1, 1, {2, 2});
    if (perturbed) b.stub(1, 1, {2, 2, 2});
    else b.stub(1, 2, {2, 2});
    b.stub(2, 2, {2, 2});
    b.stub(2, 1, {2, 2});
    out.instance.roles = {{"v", 1}, {"v'", 2}, {"u", 0}, {"u'", 3}};
  } else {
    // v=0, z=1, y=2, x=3; x has rho 3 toward y, v carries rho 5 and 4.
    b.next = 4;
    core_local.push_back(b.edge(0, 1, 0));
    core_local.push_back(b.edge(1, 2, 0));
    b.edge(2, 3, 1);
    b.vertex_weight[3] = 1;
    const int leaf = b.next++;
    b.edge(3, leaf, perturbed ? 1 : 2);
    b.vertex_weight[leaf] = 1;
    b.stub(0, 1, {2, 2});
    b.stub(0, 1, {1, 2});
    out.instance.roles = {{"v", 0}, {"z", 1}, {"y", 2}, {"x", 3}};
  }
  out.graph = from_list(b.next, b.edges);
  out.base = Weighting::empty_for(out.graph, Mode::total2);
  for (std::size_t e = 0; e < b.edges.size(); ++e)
    if (b.edge_weight[e]) out.base.set_edge(static_cast<int>(e), b.edge_weight[e]);
  for (auto [v, w] : b.vertex_weight) out.base.set_vertex(v, w);
  out.instance.core.assign(core_local.begin(), core_local.end());
  return out;
}

// ---------------------------------------------------------------------------
// Configuration hosts.

namespace {

// Template syntax: "name:degree ... ; a-b c-d ...". A vertex whose drawn
// degree is below its target gets the difference as edges to fresh anchor
// vertices of a cubic girth-5 graph.
const std::map<std::string, std::vector<std::string>>& templates() {
  static const std::map<std::string, std::vector<std::string>> t = [] {
    std::map<std::string, std::vector<std::string>> m;
    const std::vector<std::string> w3a{"v:2 u:1; v-u", "v:3 u:1; v-u", "v:3 u:1 w:2; v-u v-w", "v:2 u:1 x:1; v-u v-x"};
    const std::vector<std::string> w3b{"v:3 a:2 b:2 c:2; v-a v-b v-c", "v:4 a:2 b:2 c:2 d:2; v-a v-b v-c v-d",
                                       "v:2 a:2 b:2; v-a v-b"};
    const std::vector<std::string> w3c{"v:3 z:2 y:2 w:2; v-z z-y v-w", "v:3 z:2 y:2 w:2 t:2; v-z z-y v-w w-t",
                                       "v:3 z:2 y:2 w:2 x:5; v-z z-y v-w v-x"};
    const std::vector<std::string> w3d{"v:4 u:1 z:2; v-u v-z", "v:4 u:1 z:1; v-u v-z", "v:4 u:1 z:2 y:3; v-u v-z z-y"};
    const std::vector<std::string> w3e{"v:5 a:1 b:1; v-a v-b", "v:6 a:2 b:2 c:2; v-a v-b v-c", "v:5 a:1 b:2; v-a v-b",
                                       "v:6 a:1 y:2 z:2; v-a v-y v-z y-z"};
    for (const char* cat : {"W3_52", "W3_83"}) {
      const std::string c = cat;
      m[c + ".A"] = w3a;
      m[c + ".B"] = w3b;
      m[c + ".C"] = w3c;
      m[c + ".D"] = w3d;
      m[c + ".E"] = w3e;
    }
    const std::vector<std::string> w2a{"v:1 u:1; v-u", "v:2 u:1; v-u", "v:3 u:1; v-u"};
    const std::vector<std::string> w2b{"v:4 z:2 w:2; v-z v-w", "v:4 z:1 w:2; v-z v-w", "v:2 z:2 w:2; v-z v-w",
                                       "v:4 z:1 w:1; v-z v-w"};
    const std::vector<std::string> w2c{"v:5 a:2 b:2; v-a v-b", "v:6 a:1 b:1 c:1; v-a v-b v-c",
                                       "v:7 a:2 b:2 c:2; v-a v-b v-c"};
    for (const char* cat : {"W2_52", "W2_83"}) {
      const std::string c = cat;
      m[c + ".A"] = w2a;
      m[c + ".B"] = w2b;
      m[c + ".C"] = w2c;
    }
    m["W2_83.D"] = {"v:3 v2:3 z:2 z2:2; v-v2 v-z v2-z2", "v:3 v2:3 z:2 z2:2 y:2; v-v2 v-z v2-z2 z-y",
                    "v:3 v2:3 z:2 z2:2 y:3; v-v2 v-z v2-z2 z-y"};
    m["W2_83.E"] = {"v:3 z:2 v2:4 u:1; v-z v-v2 v2-u", "v:3 z:2 v2:6 u:1 u2:1; v-z v-v2 v2-u v2-u2",
                    "v:3 z:2 y:2 v2:4 u:1; v-z z-y v-v2 v2-u"};
    m["W2_83.F"] = {"v:4 u:1 z:4 y:1 w:4 x:1; v-u v-z v-w z-y w-x",
                    "v:4 u:1 z:4 y:1 w:4 x:1; v-u v-z v-w z-y w-x z-w",
                    "v:4 u:1 z:4 y:1 w:4 x:1 t:3; v-u v-z v-w z-y w-x z-t w-t"};
    m["W2_83.G"] = {"v:3 a:3 b:3 c:3 ya:2 yb:2 yc:2; v-a v-b v-c a-ya b-yb c-yc",
                    "v:3 a:4 b:4 c:3 ua:1 ub:1 yc:2; v-a v-b v-c a-b a-ua b-ub c-yc",
                    "v:3 a:3 b:3 c:3 y:2 yc:2; v-a v-b v-c a-y b-y c-yc",
                    "v:3 a:4 b:3 c:3 ua:1 yb:2 yc:2; v-a v-b v-c a-ua b-yb c-yc"};
    // Gamma gadgets: g4 = 4-vertex with a leaf, g3b = 3-vertex with two
    // 2-neighbors, g3a = 3-vertex with an alpha-neighbor.
    m["W3_83.F"] = {"v:4 u:1 w:4 x:1; v-w v-u w-x", "v:3 a:2 b:2 w:3 c:2 d:2; v-w v-a v-b w-c w-d",
                    "v:3 z:2 y:2 w:4 x:1; v-z z-y v-w w-x"};
    m["W3_83.G"] = {"v:3 a:4 al:1 b:4 bl:1; v-a v-b a-al b-bl",
                    "v:3 a:3 a1:2 a2:2 b:4 bl:1; v-a v-b a-a1 a-a2 b-bl",
                    "v:3 a:3 z:2 y:2 b:3 b1:2 b2:2; v-a v-b a-z z-y b-b1 b-b2"};
    m["W3_83.H"] = {
        "v:6 l:1 a:4 al:1 b:4 bl:1 c:4 cl:1 d:4 dl:1; v-l v-a v-b v-c v-d a-al b-bl c-cl d-dl",
        "v:6 a:4 al:1 b:4 bl:1 c:4 cl:1 d:4 dl:1 e:4 el:1; v-a v-b v-c v-d v-e a-al b-bl c-cl d-dl e-el",
        "v:7 l:1 a:3 a1:2 a2:2 b:3 b1:2 b2:2 c:3 c1:2 c2:2 d:3 d1:2 d2:2; v-l v-a v-b v-c v-d a-a1 a-a2 b-b1 b-b2 "
        "c-c1 c-c2 d-d1 d-d2"};
    m["W3_83.I"] = {"v:5 l:1 a:4 al:1 b:4 bl:1 c:4 cl:1; v-l v-a v-b v-c a-al b-bl c-cl",
                    "v:5 l:1 a:3 a1:2 a2:2 b:3 b1:2 b2:2 c:3 c1:2 c2:2; v-l v-a v-b v-c a-a1 a-a2 b-b1 b-b2 c-c1 c-c2",
                    "v:5 l:1 a:4 al:1 b:3 b1:2 b2:2 c:3 cz:2 cy:2; v-l v-a v-b v-c a-al b-b1 b-b2 c-cz cz-cy"};
    m["W3_83.J1"] = {"v:4 z:2 y:2 w:2 t:2; v-z z-y v-w w-t", "v:4 z:2 y:2 w:2 t:2 s:2; v-z z-y v-w w-t v-s",
                     "v:4 z:2 y:2 w:2 t:2 g:4 gl:1; v-z z-y v-w w-t v-g g-gl"};
    m["W3_83.J2"] = {"v:4 z:2 y:2 u:2 x:4 xl:1; v-z z-y v-u v-x x-xl",
                     "v:4 z:2 y:2 u:2 x:3 x1:2 x2:2; v-z z-y v-u v-x x-x1 x-x2",
                     "v:4 z:2 y:2 u:2 x:3 q:2 r:2; v-z z-y v-u v-x x-q q-r"};
    m["W3_83.J3"] = {"v:4 z:2 a:4 al:1 b:4 bl:1 c:4 cl:1; v-z v-a v-b v-c a-al b-bl c-cl",
                     "v:4 z:2 a:3 a1:2 a2:2 b:3 b1:2 b2:2 c:3 c1:2 c2:2; v-z v-a v-b v-c a-a1 a-a2 b-b1 b-b2 c-c1 c-c2",
                     "v:4 z:2 a:4 al:1 b:3 b1:2 b2:2 c:3 cz:2 cy:2; v-z v-a v-b v-c a-al b-b1 b-b2 c-cz cz-cy"};
    m["W3_83.K"] = {"v:4 u:1 a:3 ya:2 b:3 yb:2 c:3 yc:2; v-u v-a v-b v-c a-ya b-yb c-yc",
                    "v:3 z:2 w:2 a:3 ya:2; v-z v-w v-a a-ya",
                    "v:3 u:2 u2:2 a:3 ya:2 b:3 yb:2; v-u u-u2 v-a v-b a-ya b-yb"};
    m["DEGEN_TRI.T1"] = {"v:2 z:2 w:2; v-z v-w z-w", "v:3 z:2 w:2; v-z v-w z-w", "v:4 z:2 w:2; v-z v-w z-w"};
    m["DEGEN_TRI.T2"] = {"z:2 v:3 w:3; z-v z-w v-w", "z:2 v:4 u:1 w:5 x:1; z-v z-w v-w v-u w-x",
                         "z:2 v:4 t:2 w:3; z-v z-w v-w v-t"};
    m["DEGEN_4CYC.Q1"] = {"z:3 y:2 y2:2 w:3; z-w z-y y-y2 w-y2",
                          "z:3 y:2 y2:2 w:3 x:3; z-w z-y y-y2 w-y2 z-x w-x",
                          "z:3 y:2 y2:2 w:3 t:2; z-w z-y y-y2 w-y2 z-t"};
    m["DEGEN_4CYC.Q2a"] = {"v:4 u:1 z:3 w:3 y:2; v-u v-z v-w z-y w-y", "v:5 u:1 z:3 w:3 y:2; v-u v-z v-w z-y w-y",
                           "v:4 u:1 z:3 w:3 y:2 x:3; v-u v-z v-w z-y w-y z-x w-x"};
    m["DEGEN_4CYC.Q2b"] = {"v:4 u:1 z:3 w:3 y:2 y2:2; v-u v-z v-w z-y y-y2 y2-w",
                           "v:5 u:1 z:3 w:3 y:2 y2:2; v-u v-z v-w z-y y-y2 y2-w",
                           "v:4 u:1 z:3 w:3 y:2 y2:2 x:3; v-u v-z v-w z-y y-y2 y2-w z-x w-x"};
    return m;
  }();
  return t;
}

Graph build_template(const std::string& text) {
  const auto semi = text.find(';');
  std::istringstream vs(text.substr(0, semi)), es(text.substr(semi + 1));
  std::map<std::string, int> id;
  std::vector<int> target;
  std::string tok;
  while (vs >> tok) {
    const auto colon = tok.find(':');
    id[tok.substr(0, colon)] = static_cast<int>(target.size());
    target.push_back(std::stoi(tok.substr(colon + 1)));
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<int> drawn(target.size(), 0);
  while (es >> tok) {
    const auto dash = tok.find('-');
    const int a = id.at(tok.substr(0, dash)), b = id.at(tok.substr(dash + 1));
    edges.emplace_back(a, b);
    ++drawn[a];
    ++drawn[b];
  }
  int ports = 0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (drawn[i] > target[i]) throw std::logic_error("template vertex over its degree: " + text);
    ports += target[i] - drawn[i];
  }
  const int k = static_cast<int>(target.size());
  if (ports == 0) return from_list(k, edges);
  int m = 5;
  while (2 * m < ports || girth(generalized_petersen(m, 2)) < 5) ++m;
  const Graph anchors = generalized_petersen(m, 2);
  const int n = k + anchors.vertex_count();
  for (EdgeId e : anchors.edge_ids()) edges.emplace_back(k + anchors.edge(e).u, k + anchors.edge(e).v);
  int next_anchor = k;
  for (int i = 0; i < k; ++i)
    for (int j = drawn[i]; j < target[i]; ++j) edges.emplace_back(i, next_anchor++);
  return from_list(n, edges);
}

}  // namespace

int host_variants(const ConfigKind& kind) {
  auto it = templates().find(to_string(kind));
  return it == templates().end() ? 0 : static_cast<int>(it->second.size());
}

Graph config_host(const ConfigKind& kind, int variant) {
  auto it = templates().find(to_string(kind));
  if (it == templates().end()) throw invalid("no host template for " + to_string(kind));
  if (variant < 0 || variant >= static_cast<int>(it->second.size()))
    throw invalid("host variant out of range for " + to_string(kind));
  return build_template(it->second[variant]);
}

Catalog host_catalog(const ConfigKind& kind, Mode mode) {
  if (kind.catalog == Catalog::degen_tri) return mode == Mode::edge3 ? Catalog::w3_52 : Catalog::w2_52;
  if (kind.catalog == Catalog::degen_4cyc) return Catalog::w3_83;
  return kind.catalog;
}

std::vector<Mode> replay_modes(const ConfigKind& kind) {
  switch (kind.catalog) {
    case Catalog::w2_52:
    case Catalog::w2_83: return {Mode::total2};
    case Catalog::degen_tri: return {Mode::edge3, Mode::total2};
    default: return {Mode::edge3};
  }
}

}  // namespace spw::gen
