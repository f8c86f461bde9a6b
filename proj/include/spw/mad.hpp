#pragma once

#include "spw/graph.hpp"
#include "spw/rational.hpp"

#include <stdexcept>
#include <vector>

namespace spw {

struct MadResult {
  Rational value;                  // 2|E(H)|/|V(H)| of the densest H
  std::vector<VertexId> witness;   // V(H), sorted
};

class EmptyGraphError : public std::invalid_argument {
 public:
  EmptyGraphError() : std::invalid_argument("graph has no vertices") {}
};

/// 2|E|/|V| of the whole graph.
Rational average_degree(const Graph& g);

/// Exact maximum average degree via parametric min-cut. Edgeless graphs
/// (and the empty graph) give 0 with a singleton (resp. empty) witness.
MadResult mad_exact(const Graph& g);

bool mad_less_than(const Graph& g, const Rational& bound);

/// Subset enumeration; refuses graphs with more than 20 vertices.
MadResult mad_brute_force(const Graph& g);

}  // namespace spw
