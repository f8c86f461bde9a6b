#include "spw/gen.hpp"
#include "spw/mad.hpp"
#include "spw/oracle.hpp"
#include "spw/reducer.hpp"

#include <doctest.h>

using namespace spw;

TEST_CASE("basic families") {
  const Graph c5 = gen::cycle(5);
  CHECK(c5.edge_count() == 5);
  for (VertexId v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
  CHECK(gen::petersen().edge_count() == 15);
  CHECK(gen::girth(gen::petersen()) == 5);
  CHECK(gen::girth(gen::tree(12, 3)) == 0);
  CHECK(gen::tree(12, 3).edge_count() == 11);
  CHECK_THROWS_AS(gen::cycle(2), gen::GenError);
}

TEST_CASE("cubic plus pendants") {
  const Graph g = gen::cubic_plus_pendants(gen::complete(4));
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 10);
  CHECK(average_degree(g) == Rational(5, 2));
  try {
    gen::cubic_plus_pendants(gen::cycle(5));
    FAIL("accepted a non-cubic base");
  } catch (const gen::GenError& e) {
    CHECK(e.kind() == gen::GenErrorKind::not_cubic);
  }
}

TEST_CASE("random_mad honours its bound and its seed") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen::random_mad(40, Rational(8, 3), seed);
    CHECK(g.vertex_count() == 40);
    CHECK(mad_less_than(g, Rational(8, 3)));
    CHECK(format_graph(g) == format_graph(gen::random_mad(40, Rational(8, 3), seed)));
  }
}

TEST_CASE("random_sparse and random_leafless stay below the average") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(average_degree(gen::random_sparse(30, Rational(8, 3), seed)) < Rational(8, 3));
    const Graph g = gen::random_leafless(30, Rational(8, 3), seed);
    CHECK(average_degree(g) < Rational(8, 3));
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) >= 2);
  }
}

TEST_CASE("cubic girth-5 corpus") {
  const auto corpus = gen::cubic_girth5_corpus(30, 10, 2);
  CHECK(corpus.size() >= 10);
  for (const Graph& g : corpus) {
    CHECK(g.vertex_count() <= 30);
    CHECK(gen::girth(g) >= 5);
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 3);
  }
}

TEST_CASE("connected graph counts match the known sequence") {
  const int expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(gen::connected_graphs(n).size() == static_cast<std::size_t>(expected[n]));
}

TEST_CASE("gadget counts") {
  for (auto side : {gen::GadgetSide::left, gen::GadgetSide::right}) {
    const gen::Gadget plain = gen::nonred_gadget(side);
    const gen::Gadget moved = gen::nonred_gadget(side, true);
    CHECK(count_extensions(plain.graph, plain.base, mutable_set(plain.instance, plain.graph, Mode::total2),
                           Mode::total2) == 0);
    CHECK(count_extensions(moved.graph, moved.base, mutable_set(moved.instance, moved.graph, Mode::total2),
                           Mode::total2) > 0);
  }
}

TEST_CASE("hosts expose their kind first") {
  for (const ConfigKind& kind : all_reducible_kinds()) {
    CHECK(gen::host_variants(kind) >= 3);
    for (int v = 0; v < gen::host_variants(kind); ++v)
      for (Mode mode : gen::replay_modes(kind)) {
        const auto inst = detect_first(gen::config_host(kind, v), gen::host_catalog(kind, mode));
        REQUIRE(inst);
        CHECK(to_string(inst->kind) == to_string(kind));
      }
  }
}
