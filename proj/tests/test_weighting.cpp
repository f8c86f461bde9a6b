#include "spw/graph.hpp"
#include "spw/weighting.hpp"

#include <doctest.h>

#include <set>

using namespace spw;

namespace {

Weighting edge_weights(const Graph& g, std::initializer_list<int> ws) {
  Weighting w = Weighting::empty_for(g, Mode::edge3);
  auto it = ws.begin();
  for (EdgeId e : g.edge_ids()) w.set_edge(e, *it++);
  return w;
}

}  // namespace

TEST_CASE("phi on a triangle with distinct weights") {
  const Graph c3 = parse_graph("e 0 1\ne 1 2\ne 2 0");
  const Weighting w = edge_weights(c3, {1, 2, 3});
  std::set<int> phis;
  for (VertexId v = 0; v < 3; ++v) phis.insert(phi(c3, w, v));
  CHECK(phis == std::set<int>{3, 4, 5});
  CHECK(violations(c3, w).empty());
}

TEST_CASE("phi in total mode includes the vertex weight") {
  const Graph k2 = parse_graph("e 0 1");
  Weighting w = Weighting::empty_for(k2, Mode::total2);
  w.set_vertex(0, 1);
  w.set_edge(k2.edge_ids()[0], 1);
  w.set_vertex(1, 2);
  CHECK(phi(k2, w, 0) == 2);
  CHECK(phi(k2, w, 1) == 3);
  CHECK(is_proper(k2, w));

  const Graph lone(1);
  Weighting one = Weighting::empty_for(lone, Mode::total2);
  one.set_vertex(0, 1);
  CHECK(phi(lone, one, 0) == 1);
}

TEST_CASE("phi needs every incident item") {
  const Graph p3 = parse_graph("e 0 1\ne 1 2");
  Weighting w = Weighting::empty_for(p3, Mode::edge3);
  w.set_edge(*p3.find_edge(0, 1), 2);
  CHECK_THROWS_AS(phi(p3, w, 1), WeightingError);
  CHECK(phi(p3, w, 0) == 2);
}

TEST_CASE("rho") {
  const Graph p3 = parse_graph("e 0 1\ne 1 2");
  Weighting w = Weighting::empty_for(p3, Mode::edge3);
  w.set_edge(*p3.find_edge(0, 1), 2);
  w.set_edge(*p3.find_edge(1, 2), 3);
  CHECK(rho(p3, w, 1, 0) == 3);
  CHECK_THROWS_AS(rho(p3, w, 0, 2), WeightingError);

  const Graph c3 = parse_graph("e 0 1\ne 1 2\ne 2 0");
  const Weighting t = edge_weights(c3, {1, 2, 3});  // 01=1, 12=2, 20=3
  CHECK(rho(c3, t, 1, 0) == 2);
}

TEST_CASE("satisfied exactly when the two rho values differ") {
  // Every Total2 weighting of the paw graph.
  const Graph g = parse_graph("e 0 1\ne 1 2\ne 2 0\ne 2 3");
  const auto edges = g.edge_ids();
  const int items = static_cast<int>(edges.size()) + g.vertex_count();
  for (int mask = 0; mask < (1 << items); ++mask) {
    Weighting w = Weighting::empty_for(g, Mode::total2);
    int bit = 0;
    for (EdgeId e : edges) w.set_edge(e, 1 + (mask >> bit++ & 1));
    for (VertexId v = 0; v < g.vertex_count(); ++v) w.set_vertex(v, 1 + (mask >> bit++ & 1));
    std::set<EdgeId> bad;
    for (const auto& x : violations(g, w)) bad.insert(x.edge);
    for (EdgeId e : edges) {
      const auto [u, v] = std::pair{g.edge(e).u, g.edge(e).v};
      CHECK((rho(g, w, u, v) != rho(g, w, v, u)) == (bad.count(e) == 0));
      CHECK(phi(g, w, u) == rho(g, w, u, v) + w.edge(e));
    }
  }
}

TEST_CASE("violations") {
  const Graph k2 = parse_graph("e 0 1");
  for (int x = 1; x <= 3; ++x) CHECK(violations(k2, edge_weights(k2, {x})).size() == 1);

  const Graph p3 = parse_graph("e 0 1\ne 1 2");
  CHECK(violations(p3, edge_weights(p3, {1, 1})).empty());

  Weighting partial = Weighting::empty_for(p3, Mode::edge3);
  partial.set_edge(p3.edge_ids()[0], 1);
  CHECK_THROWS_AS(violations(p3, partial), WeightingError);
}

TEST_CASE("weight ranges depend on the mode") {
  const Graph k2 = parse_graph("e 0 1");
  Weighting e3 = Weighting::empty_for(k2, Mode::edge3);
  CHECK_THROWS_AS(e3.set_edge(0, 4), WeightingError);
  CHECK_THROWS_AS(e3.set_vertex(0, 1), WeightingError);
  Weighting t2 = Weighting::empty_for(k2, Mode::total2);
  CHECK_THROWS_AS(t2.set_edge(0, 3), WeightingError);
  CHECK_NOTHROW(t2.set_vertex(0, 2));
}

TEST_CASE("weighting text round-trips") {
  const Graph c3 = parse_graph("e 0 1\ne 1 2\ne 2 0");
  Weighting w = Weighting::empty_for(c3, Mode::total2);
  for (EdgeId e : c3.edge_ids()) w.set_edge(e, 1 + e % 2);
  for (VertexId v = 0; v < 3; ++v) w.set_vertex(v, 2 - v % 2);
  CHECK(parse_weighting(format_weighting(c3, w), c3, Mode::total2) == w);
}
