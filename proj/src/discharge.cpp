#include "spw/discharge.hpp"

#include <algorithm>
#include <stdexcept>

namespace spw {

RuleSet rule_set(RuleSetId id) {
  switch (id) {
    case RuleSetId::r52: return {id, Rational(5, 2)};
    case RuleSetId::r83_12: return {id, Rational(8, 3)};
    case RuleSetId::r83_123: return {id, Rational(8, 3)};
  }
  throw std::invalid_argument("bad rule set");
}

RuleSet parse_rule_set(std::string_view text) {
  if (text == "r52" || text == "R52") return rule_set(RuleSetId::r52);
  if (text == "r83-12" || text == "R83_12") return rule_set(RuleSetId::r83_12);
  if (text == "r83-123" || text == "R83_123") return rule_set(RuleSetId::r83_123);
  throw std::invalid_argument("unknown rule set '" + std::string(text) + "'");
}

std::string_view to_string(RuleSetId id) {
  switch (id) {
    case RuleSetId::r52: return "R52";
    case RuleSetId::r83_12: return "R83_12";
    case RuleSetId::r83_123: return "R83_123";
  }
  return "?";
}

StructuralCatalog matching_catalog(RuleSetId id) {
  switch (id) {
    case RuleSetId::r52: return StructuralCatalog::s52;
    case RuleSetId::r83_12: return StructuralCatalog::s83_12;
    case RuleSetId::r83_123: return StructuralCatalog::s83_123;
  }
  return StructuralCatalog::s52;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::config_free_and_charged: return "CONFIG_FREE_AND_CHARGED";
    case Verdict::config_present: return "CONFIG_PRESENT";
    case Verdict::counterexample: return "COUNTEREXAMPLE";
    case Verdict::out_of_scope: return "OUT_OF_SCOPE";
  }
  return "?";
}

namespace {

void rules_52(const Graph& g, std::vector<Transfer>& out) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d >= 4) {
      for (const auto& i : g.incident(v)) {
        const int dn = g.degree(i.neighbor);
        if (dn == 1) out.push_back({v, i.neighbor, Rational(3, 2), 1});
        if (dn == 2) out.push_back({v, i.neighbor, Rational(1, 2), 1});
      }
    } else if (d == 3) {
      const int twos = count_neighbors_of_degree(g, v, 2);
      if (twos == 0) continue;
      for (const auto& i : g.incident(v))
        if (g.degree(i.neighbor) == 2) out.push_back({v, i.neighbor, Rational(1, 2) / twos, 2});
    }
  }
}

void rules_83_12(const Graph& g, std::vector<Transfer>& out) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d == 1) out.push_back({g.incident(v)[0].neighbor, v, Rational(5, 3), 1});
    if (d == 2) {
      for (const auto& i : g.incident(v))
        if (g.degree(i.neighbor) >= 3) {
          out.push_back({i.neighbor, v, Rational(2, 3), 2});
          break;
        }
    }
    if (d == 3 && count_neighbors_of_degree(g, v, 2) > 0) {
      for (const auto& i : g.incident(v))
        if (g.degree(i.neighbor) != 2) out.push_back({i.neighbor, v, Rational(1, 6), 3});
    }
    if (d == 4 && count_neighbors_of_degree(g, v, 1) > 0) {
      for (const auto& i : g.incident(v))
        if (g.degree(i.neighbor) != 1 && !is_beta_prime(g, i.neighbor))
          out.push_back({i.neighbor, v, Rational(1, 6), 4});
    }
  }
}

void rules_83_123(const Graph& g, std::vector<Transfer>& out) {
  std::vector<VertexClass> cls(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) cls[v] = classify(g, v);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int d = cls[v].degree;
    if (d == 1) out.push_back({g.incident(v)[0].neighbor, v, Rational(5, 3), 1});
    if (cls[v].is_alpha) {
      std::vector<VertexId> big;
      for (const auto& i : g.incident(v))
        if (cls[i.neighbor].degree >= 3) big.push_back(i.neighbor);
      if (big.size() == 1) out.push_back({big[0], v, Rational(2, 3), 2});
    } else if (d == 2) {
      for (const auto& i : g.incident(v)) out.push_back({i.neighbor, v, Rational(1, 3), 3});
    }
    if (cls[v].is_gamma()) {
      for (const auto& i : g.incident(v))
        if (cls[i.neighbor].degree >= 3 && !cls[i.neighbor].is_beta123)
          out.push_back({i.neighbor, v, Rational(1, 3), 4});
    }
  }
}

}  // namespace

DischargeReport run(const Graph& g, const RuleSet& rules) {
  DischargeReport rep;
  const int n = g.vertex_count();
  rep.initial.resize(n);
  for (VertexId v = 0; v < n; ++v) rep.initial[v] = g.degree(v);
  switch (rules.id) {
    case RuleSetId::r52: rules_52(g, rep.transfers); break;
    case RuleSetId::r83_12: rules_83_12(g, rep.transfers); break;
    case RuleSetId::r83_123: rules_83_123(g, rep.transfers); break;
  }
  rep.final_charge = rep.initial;
  for (const auto& t : rep.transfers) {
    rep.final_charge[t.from] -= t.amount;
    rep.final_charge[t.to] += t.amount;
  }
  rep.min_final = n ? *std::min_element(rep.final_charge.begin(), rep.final_charge.end()) : Rational(0);
  return rep;
}

Verdict check_unavoidability(const Graph& g, const RuleSet& rules, StructuralCatalog catalog) {
  if (g.vertex_count() == 0) return Verdict::out_of_scope;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) return Verdict::out_of_scope;
  if (rules.id != RuleSetId::r83_12)
    for (EdgeId e : g.edge_ids())
      if (g.degree(g.edge(e).u) == 1 && g.degree(g.edge(e).v) == 1) return Verdict::out_of_scope;
  if (detect_first(g, catalog)) return Verdict::config_present;
  return run(g, rules).min_final >= rules.bound ? Verdict::config_free_and_charged : Verdict::counterexample;
}

}  // namespace spw
