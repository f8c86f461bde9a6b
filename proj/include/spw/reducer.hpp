#pragma once

#include "spw/configs.hpp"
#include "spw/graph.hpp"
#include "spw/weighting.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace spw {

/// Weights the extension may (re)assign. `vertices` is empty in Edge3 mode.
struct MutableSet {
  std::vector<EdgeId> edges;      // sorted, unique
  std::vector<VertexId> vertices; // sorted, unique
};

/// The configuration does not extend this derived weighting. Expected only
/// for custom (non-catalog) instances.
class ExtensionImpossible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A catalog configuration failed to extend even after widening the search.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Core, extra deletions and the kind's extra edges; in Total2 also the core
/// endpoints and the kind's extra vertices.
MutableSet mutable_set(const ConfigurationInstance& inst, const Graph& g, Mode mode);

/// Edges incident to an endpoint of ms.edges or to a vertex of ms.vertices.
std::vector<EdgeId> affected_edges(const Graph& g, const MutableSet& ms);

/// ms widened by every edge incident to a vertex it touches.
MutableSet expand_one_shell(const Graph& g, const MutableSet& ms, Mode mode);

struct SearchStats {
  std::uint64_t nodes = 0;
  bool budget_hit = false;
};

/// Backtracking search for weights on ms that make every affected edge
/// satisfied, leaving everything else as in `w`. On success `w` holds the
/// result; on failure `w` is left with ms cleared.
bool search_extension(const Graph& g, Weighting& w, const MutableSet& ms, std::uint64_t node_budget = 2'000'000,
                      SearchStats* stats = nullptr);

/// Extends a proper weighting of g minus inst's deleted edges to a proper
/// weighting of g.
Weighting extend(const Graph& g, const ConfigurationInstance& inst, const Weighting& w_prime, Mode mode);

}  // namespace spw
