#pragma once

#include "spw/graph.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spw {

/// Configuration catalogs. The first four are the reducible lists; the two
/// DEGEN catalogs hold the degenerate triangle and 4-cycle configurations,
/// which outrank every main-catalog kind.
enum class Catalog { w3_52, w2_52, w2_83, w3_83, degen_tri, degen_4cyc, custom };

/// Unavoidable sets produced by the three discharging arguments. Their kinds
/// carry main-catalog tags: S52 lives in W3_52 (tag "Es" marks its weaker E),
/// S83_12 is W2_83 itself, and S83_123 lives in W3_83 (tags "Hs", "Js").
enum class StructuralCatalog { s52, s83_12, s83_123 };

std::string_view to_string(Catalog c);
std::string_view to_string(StructuralCatalog c);
/// Accepts the CLI spellings 3w52, 2w52, 2w83, 3w83 and the enum names.
Catalog parse_catalog(std::string_view text);

struct ConfigKind {
  Catalog catalog = Catalog::custom;
  std::string tag;

  friend bool operator==(const ConfigKind&, const ConfigKind&) = default;
};

/// "W3_83.J2" style name.
std::string to_string(const ConfigKind& k);
/// Inverse of to_string(ConfigKind).
ConfigKind parse_kind(std::string_view text);

/// Reducible tags of a catalog in priority order (no degenerate tags).
const std::vector<std::string>& catalog_tags(Catalog c);
/// Structural kinds in priority order.
const std::vector<ConfigKind>& structural_kinds(StructuralCatalog c);
/// Every kind that can be replayed: all reducible tags of the four main
/// catalogs plus both degenerate catalogs.
std::vector<ConfigKind> all_reducible_kinds();

struct ConfigurationInstance {
  ConfigKind kind;
  /// Named single-vertex roles (v, z, z', y, u, x, ...), in binding order.
  std::vector<std::pair<std::string, VertexId>> roles;
  /// Named vertex-set roles (U1, U2, Z, ...).
  std::vector<std::pair<std::string, std::vector<VertexId>>> role_sets;
  /// Edges deleted to form the derived graph.
  std::vector<EdgeId> core;
  /// Edges left isolated by deleting the core; also deleted (3-weightings).
  std::vector<EdgeId> extra_deletions;
  /// Derived-graph edges and vertices the extension may reassign.
  std::vector<EdgeId> extra_mutable_edges;
  std::vector<VertexId> extra_mutable_vertices;

  std::optional<VertexId> role(std::string_view name) const;
  VertexId center() const { return roles.front().second; }
  /// core followed by extra_deletions.
  std::vector<EdgeId> deleted_edges() const;
};

class MappingFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Every instance of every reducible kind in the catalog, in priority order
/// (kind, then center vertex). Degenerate kinds are not included unless the
/// catalog is itself degenerate.
std::vector<ConfigurationInstance> detect_all(const Graph& g, Catalog catalog);

/// Highest-priority instance. For main catalogs the degenerate triangle
/// kinds (and for W3_83 the 4-cycle kinds) are consulted first.
std::optional<ConfigurationInstance> detect_first(const Graph& g, Catalog catalog);

std::vector<ConfigurationInstance> detect_all(const Graph& g, StructuralCatalog catalog);
std::optional<ConfigurationInstance> detect_first(const Graph& g, StructuralCatalog catalog);

/// Instance of `kind` centered at v, if one exists there.
std::optional<ConfigurationInstance> detect_at(const Graph& g, const ConfigKind& kind, VertexId v);

/// Maps a structural instance to a reducible instance at the same site in
/// `target` (W3_52 or W2_52 for S52 kinds, W2_83, W3_83).
ConfigurationInstance structural_to_reducible(const ConfigurationInstance& inst, const Graph& g, Catalog target);

/// Re-checks an instance's degree and adjacency claims against g.
bool verify_instance(const Graph& g, const ConfigurationInstance& inst);

/// `KIND role=vid ... SET={a,b} core=[u-v,...]`
std::string format_instance(const Graph& g, const ConfigurationInstance& inst);

}  // namespace spw
