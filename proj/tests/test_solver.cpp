#include "spw/gen.hpp"
#include "spw/mad.hpp"
#include "spw/oracle.hpp"
#include "spw/solver.hpp"

#include <doctest.h>

using namespace spw;

namespace {

void require_solved(const Graph& g, Mode mode, int level) {
  const SolveOutcome out = solve_components(g, mode, level);
  REQUIRE(out.status == SolveStatus::solved);
  CHECK(out.weighting.complete_on(g));
  CHECK(violations(g, out.weighting).empty());
}

Graph disjoint(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (EdgeId e : a.edge_ids()) g.add_edge(a.edge(e).u, a.edge(e).v);
  for (EdgeId e : b.edge_ids()) g.add_edge(a.vertex_count() + b.edge(e).u, a.vertex_count() + b.edge(e).v);
  return g;
}

}  // namespace

TEST_CASE("K2 in total mode") {
  const SolveOutcome out = solve(gen::path(2), Mode::total2, 83);
  REQUIRE(out.status == SolveStatus::solved);
  CHECK(phi(gen::path(2), out.weighting, 0) != phi(gen::path(2), out.weighting, 1));
}

TEST_CASE("isolated edges are rejected for 3-weightings") {
  CHECK(solve(gen::path(2), Mode::edge3, 83).status == SolveStatus::input_rejected);
  CHECK(solve_components(disjoint(gen::cycle(5), gen::path(2)), Mode::edge3, 83).status ==
        SolveStatus::input_rejected);
}

TEST_CASE("dense graphs are out of reach unless forced") {
  const SolveOutcome out = solve(gen::complete(4), Mode::edge3, 83);
  CHECK(out.status == SolveStatus::not_applicable);
  CHECK_FALSE(out.reason.empty());
  const SolveOutcome forced = solve(gen::complete(4), Mode::edge3, 83, {true});
  CHECK(forced.status == SolveStatus::not_applicable);
  CHECK(forced.reason.find("no configuration") != std::string::npos);
}

TEST_CASE("small fixed graphs") {
  require_solved(gen::cycle(5), Mode::edge3, 52);
  require_solved(gen::cycle(5), Mode::total2, 52);
  require_solved(gen::cycle(3), Mode::edge3, 83);
  require_solved(disjoint(gen::cycle(5), gen::cycle(4)), Mode::edge3, 83);
  require_solved(gen::star(6), Mode::edge3, 52);
  require_solved(Graph(0), Mode::edge3, 83);
}

TEST_CASE("isolated vertices get vertex weight 1") {
  const Graph g(1);
  const SolveOutcome out = solve_components(g, Mode::total2, 83);
  REQUIRE(out.status == SolveStatus::solved);
  CHECK(out.weighting.vertex(0) == 1);
}

TEST_CASE("every step removes edges") {
  // C30 with a pendant at every third vertex.
  Graph g(40);
  for (int v = 0; v < 30; ++v) g.add_edge(v, (v + 1) % 30);
  for (int i = 0; i < 10; ++i) g.add_edge(3 * i, 30 + i);
  for (Mode mode : {Mode::edge3, Mode::total2}) {
    const SolveOutcome out = solve(g, mode, 83);
    REQUIRE(out.status == SolveStatus::solved);
    REQUIRE_FALSE(out.trace.empty());
    CHECK(out.trace.front().edges_before == g.edge_count());
    for (std::size_t i = 1; i < out.trace.size(); ++i)
      CHECK(out.trace[i].edges_before < out.trace[i - 1].edges_before);
  }
}

TEST_CASE("random graphs at both levels and modes") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    for (int level : {52, 83}) {
      const Graph g = gen::random_mad(10 + static_cast<int>(seed % 30), level_bound(level), seed);
      require_solved(g, Mode::total2, level);
      if (!has_isolated_edge(g)) require_solved(g, Mode::edge3, level);
    }
  }
}

TEST_CASE("level 52 solvable graphs are solvable at level 83") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const Graph g = gen::random_mad(25, Rational(5, 2), seed);
    require_solved(g, Mode::total2, 83);
    if (!has_isolated_edge(g)) require_solved(g, Mode::edge3, 83);
  }
}

TEST_CASE("solver output is deterministic") {
  const Graph g = gen::random_mad(50, Rational(8, 3), 3);
  const auto a = solve_components(g, Mode::total2, 83);
  const auto b = solve_components(g, Mode::total2, 83);
  CHECK(a.weighting == b.weighting);
  CHECK(format_trace(a.trace) == format_trace(b.trace));
}

TEST_CASE("solved implies the oracle agrees") {
  for (int n = 3; n <= 6; ++n)
    for (const Graph& g : gen::connected_graphs(n)) {
      if (!mad_less_than(g, Rational(8, 3))) continue;
      CHECK(solve(g, Mode::total2, 83).status == SolveStatus::solved);
      CHECK(exists_proper(g, Mode::total2));
    }
}

TEST_CASE("forced solves on cubic graphs with pendants go through F") {
  for (const Graph& c : gen::cubic_girth5_corpus(24, 4, 3)) {
    const Graph g = gen::cubic_plus_pendants(c);
    for (Mode mode : {Mode::edge3, Mode::total2}) {
      CHECK(solve(g, mode, 83).status == SolveStatus::not_applicable);
      const SolveOutcome out = solve(g, mode, 83, {true});
      REQUIRE(out.status == SolveStatus::solved);
      CHECK(out.trace.front().kind.tag == "F");
      CHECK(is_proper(g, out.weighting));
    }
  }
}
