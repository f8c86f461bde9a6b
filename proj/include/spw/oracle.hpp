#pragma once

#include "spw/graph.hpp"
#include "spw/reducer.hpp"
#include "spw/weighting.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace spw {

struct OracleBudget {
  std::uint64_t max_assignments = 100'000'000;
  /// Cap on graph size for full enumeration (enumerate_proper).
  int max_edges = 16;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Does g have a proper weighting in this mode?
bool exists_proper(const Graph& g, Mode mode, const OracleBudget& budget = {});

/// Number of assignments over ms that make g proper, keeping `base`
/// elsewhere. `base` must be complete outside ms.
std::uint64_t count_extensions(const Graph& g, const Weighting& base, const MutableSet& ms, Mode mode,
                               const OracleBudget& budget = {});

/// Up to `limit` distinct proper complete weightings in lexicographic search
/// order. Refuses graphs with more than budget.max_edges edges.
std::vector<Weighting> enumerate_proper(const Graph& g, Mode mode, std::size_t limit, const OracleBudget& budget = {});

/// Up to `limit` distinct proper weightings found by seeded randomized
/// restarts; no edge cap. Deterministic for a fixed seed.
std::vector<Weighting> sample_proper(const Graph& g, Mode mode, std::size_t limit, std::uint64_t seed,
                                     const OracleBudget& budget = {});

}  // namespace spw
