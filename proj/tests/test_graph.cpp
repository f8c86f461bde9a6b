#include "spw/graph.hpp"

#include <doctest.h>

using namespace spw;

TEST_CASE("parse_graph reads edges and bare vertices") {
  const Graph p3 = parse_graph("e 0 1\ne 1 2");
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_ids().size() == 2);
  CHECK(p3.degree(1) == 2);

  const Graph empty = parse_graph("v 5");
  CHECK(empty.vertex_count() == 5);
  CHECK(empty.edge_ids().empty());
}

TEST_CASE("parse_graph rejects duplicates, loops and junk") {
  auto kind_of = [](const char* text) {
    try {
      parse_graph(text);
    } catch (const GraphError& e) {
      return e.kind();
    }
    FAIL("no error raised");
    return GraphErrorKind::bad_vertex;
  };
  CHECK(kind_of("e 0 1\ne 0 1") == GraphErrorKind::duplicate_edge);
  CHECK(kind_of("e 1 0\ne 0 1") == GraphErrorKind::duplicate_edge);
  CHECK(kind_of("e 2 2") == GraphErrorKind::loop);
  CHECK(kind_of("x 0 1") == GraphErrorKind::malformed_line);
  CHECK(kind_of("v 3\nv 4") == GraphErrorKind::malformed_line);
  CHECK(kind_of("v 3\ne 0 3") == GraphErrorKind::bad_vertex);
}

TEST_CASE("format_graph round-trips") {
  const Graph g = parse_graph("e 0 1\ne 1 2\ne 2 0\nv 4");
  const Graph h = parse_graph(format_graph(g));
  CHECK(h.vertex_count() == g.vertex_count());
  CHECK(h.edge_ids().size() == g.edge_ids().size());
  for (EdgeId e : g.edge_ids()) CHECK(h.adjacent(g.edge(e).u, g.edge(e).v));
}

TEST_CASE("delete_edges leaves the original intact") {
  const Graph c3 = parse_graph("e 0 1\ne 1 2\ne 2 0");
  const EdgeId first = c3.edge_ids().front();
  const std::vector<EdgeId> one{first};
  const Graph p3 = c3.delete_edges(one);
  CHECK(p3.edge_ids().size() == 2);
  CHECK(c3.edge_ids().size() == 3);
  CHECK(p3.vertex_count() == 3);

  const Graph path = parse_graph("e 0 1\ne 1 2");
  const auto all = path.edge_ids();
  const Graph bare = path.delete_edges(all);
  CHECK(bare.edge_ids().empty());
  CHECK(bare.vertex_count() == 3);

  CHECK_THROWS_AS(p3.delete_edges(one), GraphError);
}

TEST_CASE("surviving edges keep their ids after deletion") {
  const Graph c4 = parse_graph("e 0 1\ne 1 2\ne 2 3\ne 3 0");
  const auto e12 = *c4.find_edge(1, 2);
  const std::vector<EdgeId> gone{*c4.find_edge(0, 1)};
  const Graph h = c4.delete_edges(gone);
  CHECK(h.find_edge(1, 2) == e12);
  CHECK_FALSE(h.adjacent(0, 1));
}

TEST_CASE("components") {
  const Graph g = parse_graph("v 7\ne 0 1\ne 2 3\ne 3 4");
  CHECK(g.components().size() == 4);
}

TEST_CASE("vertex classes") {
  SUBCASE("alpha on a path") {
    const Graph p4 = parse_graph("e 0 1\ne 1 2\ne 2 3");
    CHECK(classify(p4, 1).is_alpha);
  }
  SUBCASE("beta prime: K4 with a pendant") {
    const Graph g = parse_graph("e 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\ne 0 4");
    const VertexClass c = classify(g, 0);
    CHECK(c.degree == 4);
    CHECK(c.is_beta_prime);
  }
  SUBCASE("gamma4: centre of K1,4") {
    const Graph s = parse_graph("e 0 1\ne 0 2\ne 0 3\ne 0 4");
    CHECK(gamma_kind(s, 0) == GammaKind::gamma4);
  }
  SUBCASE("3-vertex with a 2-neighbour") {
    const Graph g = parse_graph("e 0 1\ne 0 2\ne 0 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4");
    CHECK(classify(g, 0).is_beta123);
  }
}

TEST_CASE("the stricter beta implies the looser one") {
  // All graphs on the edge subsets of K5 plus one pendant.
  const std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                               {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  for (int mask = 0; mask < (1 << pairs.size()); ++mask) {
    Graph g(6);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    g.add_edge(0, 5);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (is_beta12(g, v)) REQUIRE(is_beta123(g, v));
  }
}
