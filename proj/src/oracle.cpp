#include "spw/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace spw {

namespace {

// An item is an edge weight or (Total2) a vertex weight.
struct Item {
  bool is_edge;
  int id;
};

class Engine {
 public:
  // Items are assigned in the given order; every edge of g is checked as
  // soon as all items it depends on are assigned.
  Engine(const Graph& g, Weighting base, std::vector<Item> order, const OracleBudget& budget)
      : g_(g), w_(std::move(base)), order_(std::move(order)), budget_(budget) {
    const int n = g.vertex_count();
    std::vector<int> pos_edge(g.edge_id_bound(), -1), pos_vertex(n, -1);
    for (int i = 0; i < static_cast<int>(order_.size()); ++i) {
      if (order_[i].is_edge) pos_edge[order_[i].id] = i;
      else pos_vertex[order_[i].id] = i;
    }
    check_at_.resize(order_.size() + 1);
    auto last_of = [&](VertexId x, int acc) {
      for (const auto& inc : g.incident(x)) acc = std::max(acc, pos_edge[inc.edge]);
      return std::max(acc, pos_vertex[x]);
    };
    for (EdgeId e : g.edge_ids()) {
      const int last = last_of(g.edge(e).v, last_of(g.edge(e).u, -1));
      check_at_[last + 1].push_back(e);
    }
    domain_.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const int top = order_[i].is_edge ? max_edge_weight(w_.mode()) : 2;
      for (int k = 1; k <= top; ++k) domain_[i].push_back(k);
    }
  }

  void shuffle_domains(std::mt19937_64& rng) {
    for (auto& d : domain_) std::shuffle(d.begin(), d.end(), rng);
  }

  /// Visits every proper completion; the visitor returns false to stop.
  void run(const std::function<bool(const Weighting&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    for (const auto& it : order_) clear(it);
    if (checks_pass(0)) dfs(0);
  }

  std::uint64_t assignments() const { return assignments_; }

 private:
  void clear(const Item& it) {
    if (it.is_edge) w_.clear_edge(it.id);
    else w_.clear_vertex(it.id);
  }
  void set(const Item& it, int k) {
    if (it.is_edge) w_.set_edge(it.id, k);
    else w_.set_vertex(it.id, k);
  }

  bool checks_pass(std::size_t level) const {
    for (EdgeId e : check_at_[level])
      if (phi(g_, w_, g_.edge(e).u) == phi(g_, w_, g_.edge(e).v)) return false;
    return true;
  }

  void dfs(std::size_t i) {
    if (i == order_.size()) {
      if (!(*visit_)(w_)) stopped_ = true;
      return;
    }
    for (int k : domain_[i]) {
      if (++assignments_ > budget_.max_assignments) throw BudgetExceeded("oracle assignment budget exhausted");
      set(order_[i], k);
      if (checks_pass(i + 1)) dfs(i + 1);
      if (stopped_) return;
    }
    clear(order_[i]);
  }

  const Graph& g_;
  Weighting w_;
  std::vector<Item> order_;
  OracleBudget budget_;
  std::vector<std::vector<EdgeId>> check_at_;
  std::vector<std::vector<int>> domain_;
  const std::function<bool(const Weighting&)>* visit_ = nullptr;
  bool stopped_ = false;
  std::uint64_t assignments_ = 0;
};

// Edges by smaller endpoint degree, descending; each vertex weight right
// after its last incident edge.
std::vector<Item> full_order(const Graph& g, Mode mode) {
  std::vector<EdgeId> es = g.edge_ids();
  auto key = [&](EdgeId e) { return std::min(g.degree(g.edge(e).u), g.degree(g.edge(e).v)); };
  std::stable_sort(es.begin(), es.end(), [&](EdgeId a, EdgeId b) { return key(a) > key(b); });
  std::vector<Item> out;
  std::vector<int> remaining(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    remaining[v] = g.degree(v);
    if (mode == Mode::total2 && remaining[v] == 0) out.push_back({false, v});
  }
  for (EdgeId e : es) {
    out.push_back({true, e});
    for (VertexId x : {g.edge(e).u, g.edge(e).v})
      if (--remaining[x] == 0 && mode == Mode::total2) out.push_back({false, x});
  }
  return out;
}

}  // namespace

bool exists_proper(const Graph& g, Mode mode, const OracleBudget& budget) {
  Engine eng(g, Weighting::empty_for(g, mode), full_order(g, mode), budget);
  bool found = false;
  eng.run([&](const Weighting&) {
    found = true;
    return false;
  });
  return found;
}

std::uint64_t count_extensions(const Graph& g, const Weighting& base, const MutableSet& ms, Mode mode,
                               const OracleBudget& budget) {
  std::vector<Item> order;
  for (EdgeId e : ms.edges) order.push_back({true, e});
  if (mode == Mode::total2)
    for (VertexId v : ms.vertices) order.push_back({false, v});
  Engine eng(g, base, order, budget);
  std::uint64_t count = 0;
  eng.run([&](const Weighting&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<Weighting> enumerate_proper(const Graph& g, Mode mode, std::size_t limit, const OracleBudget& budget) {
  if (g.edge_count() > budget.max_edges)
    throw BudgetExceeded("graph has " + std::to_string(g.edge_count()) + " edges, enumeration cap is " +
                         std::to_string(budget.max_edges));
  std::vector<Weighting> out;
  if (limit == 0) return out;
  Engine eng(g, Weighting::empty_for(g, mode), full_order(g, mode), budget);
  eng.run([&](const Weighting& w) {
    out.push_back(w);
    return out.size() < limit;
  });
  return out;
}

std::vector<Weighting> sample_proper(const Graph& g, Mode mode, std::size_t limit, std::uint64_t seed,
                                     const OracleBudget& budget) {
  std::vector<Weighting> out;
  std::mt19937_64 rng(seed);
  auto seen = [&](const Weighting& w) { return std::find(out.begin(), out.end(), w) != out.end(); };
  // Each restart takes the first solution under a fresh random value order;
  // stop after a run of restarts that only rediscover known weightings.
  int misses = 0;
  std::uint64_t spent = 0;
  while (out.size() < limit && misses < 20) {
    OracleBudget b = budget;
    b.max_assignments = budget.max_assignments - spent;
    Engine eng(g, Weighting::empty_for(g, mode), full_order(g, mode), b);
    eng.shuffle_domains(rng);
    bool found = false;
    eng.run([&](const Weighting& w) {
      found = true;
      if (seen(w)) {
        ++misses;
      } else {
        out.push_back(w);
        misses = 0;
      }
      return false;
    });
    spent += eng.assignments();
    if (!found) break;
  }
  return out;
}

}  // namespace spw
