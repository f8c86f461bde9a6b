#pragma once

#include "spw/configs.hpp"
#include "spw/graph.hpp"
#include "spw/rational.hpp"

#include <string>
#include <vector>

namespace spw {

enum class RuleSetId { r52, r83_12, r83_123 };

struct RuleSet {
  RuleSetId id;
  Rational bound;
};

RuleSet rule_set(RuleSetId id);
/// Accepts r52, r83-12, r83-123.
RuleSet parse_rule_set(std::string_view text);
std::string_view to_string(RuleSetId id);
/// The structural catalog whose absence the rule set certifies.
StructuralCatalog matching_catalog(RuleSetId id);

struct Transfer {
  VertexId from;
  VertexId to;
  Rational amount;
  int rule;  // 1-based rule number within the set
};

struct DischargeReport {
  std::vector<Rational> initial;
  std::vector<Transfer> transfers;
  std::vector<Rational> final_charge;
  Rational min_final;  // 0 for the empty graph
};

DischargeReport run(const Graph& g, const RuleSet& rules);

enum class Verdict { config_free_and_charged, config_present, counterexample, out_of_scope };
std::string_view to_string(Verdict v);

/// OUT_OF_SCOPE for inputs the rule sets do not cover: graphs with an
/// isolated vertex, and under R52 and R83_123 graphs with a K2 component.
Verdict check_unavoidability(const Graph& g, const RuleSet& rules, StructuralCatalog catalog);

}  // namespace spw
