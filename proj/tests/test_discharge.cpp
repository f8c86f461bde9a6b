#include "spw/discharge.hpp"
#include "spw/gen.hpp"

#include <doctest.h>

using namespace spw;

namespace {

Rational total(const DischargeReport& r) {
  Rational s = 0;
  for (const auto& c : r.final_charge) s += c;
  return s;
}

}  // namespace

TEST_CASE("claw under the 8/3 rules for 3-weightings") {
  const auto rep = run(gen::star(3), rule_set(RuleSetId::r83_123));
  for (VertexId v = 1; v <= 3; ++v) CHECK(rep.final_charge[v] == Rational(8, 3));
  CHECK(rep.final_charge[0] == Rational(-2));
}

TEST_CASE("pendant on a 4-vertex under the 5/2 rules") {
  const auto rep = run(gen::star(4), rule_set(RuleSetId::r52));
  CHECK(rep.final_charge[1] == Rational(5, 2));
}

TEST_CASE("no rule fires on a cycle") {
  for (RuleSetId id : {RuleSetId::r52, RuleSetId::r83_12, RuleSetId::r83_123}) {
    const auto rep = run(gen::cycle(5), rule_set(id));
    CHECK(rep.transfers.empty());
    CHECK(rep.min_final == Rational(2));
  }
}

TEST_CASE("a 3-vertex splits one half among its 2-neighbours") {
  // 0 has 2-neighbours 1 and 2 and a 3-neighbour 3.
  const Graph g = parse_graph("e 0 1\ne 0 2\ne 0 3\ne 1 4\ne 2 4\ne 3 4\ne 3 5\ne 3 6\ne 5 6");
  const auto rep = run(g, rule_set(RuleSetId::r52));
  CHECK(rep.final_charge[0] == Rational(5, 2));
}

TEST_CASE("charge is conserved") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = gen::random_sparse(20 + static_cast<int>(seed), Rational(8, 3), seed);
    for (RuleSetId id : {RuleSetId::r52, RuleSetId::r83_12, RuleSetId::r83_123})
      CHECK(total(run(g, rule_set(id))) == Rational(2 * g.edge_count()));
  }
}

TEST_CASE("charges depend only on the radius-2 ball") {
  // Attaching far-away structure to a long path leaves the start's charge unchanged.
  Graph a = gen::path(12);
  Graph b(14);
  for (int v = 0; v + 1 < 12; ++v) b.add_edge(v, v + 1);
  b.add_edge(11, 12), b.add_edge(11, 13), b.add_edge(12, 13);
  for (RuleSetId id : {RuleSetId::r52, RuleSetId::r83_12, RuleSetId::r83_123}) {
    const auto ra = run(a, rule_set(id)), rb = run(b, rule_set(id));
    for (VertexId v = 0; v < 7; ++v) CHECK(ra.final_charge[v] == rb.final_charge[v]);
  }
}

TEST_CASE("verdicts") {
  CHECK(check_unavoidability(gen::cycle(5), rule_set(RuleSetId::r83_123), StructuralCatalog::s83_123) ==
        Verdict::config_present);
  CHECK(check_unavoidability(gen::path(2), rule_set(RuleSetId::r52), StructuralCatalog::s52) == Verdict::out_of_scope);
  for (const Graph& g : gen::cubic_girth5_corpus(30, 10, 1)) {
    CHECK(check_unavoidability(g, rule_set(RuleSetId::r52), StructuralCatalog::s52) ==
          Verdict::config_free_and_charged);
    CHECK(run(g, rule_set(RuleSetId::r52)).min_final == Rational(3));
  }
}

TEST_CASE("fully charged means average degree at least the bound") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = gen::random_leafless(12 + static_cast<int>(seed % 20), Rational(3), seed);
    for (RuleSetId id : {RuleSetId::r52, RuleSetId::r83_12, RuleSetId::r83_123}) {
      const RuleSet rs = rule_set(id);
      if (run(g, rs).min_final >= rs.bound) CHECK(Rational(2 * g.edge_count(), g.vertex_count()) >= rs.bound);
    }
  }
}

TEST_CASE("no counterexample on sparse random graphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = seed % 2 ? gen::random_sparse(10 + static_cast<int>(seed % 40), Rational(8, 3), seed)
                             : gen::random_leafless(10 + static_cast<int>(seed % 40), Rational(8, 3), seed);
    for (RuleSetId id : {RuleSetId::r83_12, RuleSetId::r83_123})
      CHECK(check_unavoidability(g, rule_set(id), matching_catalog(id)) != Verdict::counterexample);
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = gen::random_leafless(10 + static_cast<int>(seed % 40), Rational(5, 2), seed);
    CHECK(check_unavoidability(g, rule_set(RuleSetId::r52), StructuralCatalog::s52) != Verdict::counterexample);
  }
}
