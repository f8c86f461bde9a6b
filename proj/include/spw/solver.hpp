#pragma once

#include "spw/configs.hpp"
#include "spw/graph.hpp"
#include "spw/rational.hpp"
#include "spw/weighting.hpp"

#include <string>
#include <utility>
#include <vector>

namespace spw {

enum class SolveStatus { solved, not_applicable, input_rejected };

std::string_view to_string(SolveStatus s);

struct TraceStep {
  ConfigKind kind;
  std::vector<std::pair<std::string, VertexId>> roles;
  int edges_before = 0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::not_applicable;
  Weighting weighting;            // meaningful when solved
  std::vector<TraceStep> trace;   // reduction order
  std::string reason;             // when not solved
};

struct SolveOptions {
  bool force = false;  // skip the Mad precondition
};

/// 5/2 for level 52, 8/3 for level 83.
Rational level_bound(int level);

/// Catalog the solver reduces with, and the structural catalog it detects in.
Catalog reducible_catalog(Mode mode, int level);
StructuralCatalog structural_catalog(Mode mode, int level);

/// Reduce-and-extend on the whole graph. Throws InternalInconsistency when a
/// catalog configuration fails to extend or the result does not verify.
SolveOutcome solve(const Graph& g, Mode mode, int level, const SolveOptions& opts = {});

/// solve() per connected component, merged; isolated vertices get weight 1.
SolveOutcome solve_components(const Graph& g, Mode mode, int level, const SolveOptions& opts = {});

/// Does g contain a component that is a single edge?
bool has_isolated_edge(const Graph& g);

std::string format_trace(const std::vector<TraceStep>& trace);

}  // namespace spw
