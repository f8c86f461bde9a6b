#pragma once

#include "spw/configs.hpp"
#include "spw/graph.hpp"
#include "spw/rational.hpp"
#include "spw/weighting.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spw::gen {

enum class GenErrorKind { invalid_params, not_cubic };

class GenError : public std::invalid_argument {
 public:
  GenError(GenErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  GenErrorKind kind() const { return kind_; }

 private:
  GenErrorKind kind_;
};

Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph star(int leaves);
/// Uniform random labelled tree (Pruefer sequence).
Graph tree(int n, std::uint64_t seed);
/// GP(n, k): outer n-cycle, spokes, inner steps of k.
Graph generalized_petersen(int n, int k);
Graph petersen();

/// Random graph on n vertices with mad_exact < bound. Edges are proposed in
/// batches and a batch whose addition breaks the bound is retried edge by
/// edge, so every accepted graph is re-verified exactly.
Graph random_mad(int n, const Rational& bound, std::uint64_t seed);

/// Random graph without isolated vertices whose average degree is below
/// bound (its Mad may be larger). Vertex count is at most n.
Graph random_sparse(int n, const Rational& bound, std::uint64_t seed);

/// Hamiltonian-cycle-based graph with minimum degree 2 and average degree
/// below bound.
Graph random_leafless(int n, const Rational& bound, std::uint64_t seed);

/// Pendant edge at every vertex of a 3-regular base.
Graph cubic_plus_pendants(const Graph& base);

/// Length of a shortest cycle; 0 for forests.
int girth(const Graph& g);

/// 3-regular graphs of girth at least 5 (generalized Petersen graphs and
/// seeded random cubic graphs), each on at most max_n vertices.
std::vector<Graph> cubic_girth5_corpus(int max_n, int random_count, std::uint64_t seed);

/// Every connected graph on exactly n vertices, one per isomorphism class
/// (n <= 8).
std::vector<Graph> connected_graphs(int n);

enum class GadgetSide { left, right };

struct Gadget {
  Graph graph;
  /// Total2 weighting fixed everywhere except the instance's mutable set.
  Weighting base;
  /// Custom-catalog instance holding the gadget's core edges.
  ConfigurationInstance instance;
};

/// The two non-reducible total-weighting examples, with stub vertices
/// realizing the prescribed rho values. `perturbed` changes one prescribed
/// value (left: a 6 becomes 7; right: the 3 becomes 2).
Gadget nonred_gadget(GadgetSide side, bool perturbed = false);
inline Graph nonred_graph(GadgetSide side, bool perturbed = false) { return nonred_gadget(side, perturbed).graph; }
inline Weighting gadget_base_weighting(GadgetSide side, bool perturbed = false) {
  return nonred_gadget(side, perturbed).base;
}

/// Number of host templates for a configuration kind.
int host_variants(const ConfigKind& kind);
/// A graph whose highest-priority configuration in the kind's catalog is of
/// this kind: a small template with its open degree padded by edges into a
/// cubic girth-5 anchor graph.
Graph config_host(const ConfigKind& kind, int variant);
/// The catalog host validation and replay use for a kind.
Catalog host_catalog(const ConfigKind& kind, Mode mode);
/// Modes in which a kind is replayed.
std::vector<Mode> replay_modes(const ConfigKind& kind);

}  // namespace spw::gen
