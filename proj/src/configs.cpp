#include "spw/configs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace spw {

namespace {

struct Ctx {
  const Graph& g;
  std::vector<VertexClass> cls;

  explicit Ctx(const Graph& graph) : g(graph), cls(graph.vertex_count()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) cls[v] = classify(g, v);
  }

  int deg(VertexId v) const { return cls[v].degree; }
  EdgeId e(VertexId a, VertexId b) const { return *g.find_edge(a, b); }

  template <class Pred>
  std::vector<VertexId> nbrs_if(VertexId v, Pred pred) const {
    std::vector<VertexId> out;
    for (const auto& i : g.incident(v))
      if (pred(i.neighbor)) out.push_back(i.neighbor);
    return out;
  }
  std::vector<VertexId> nbrs_deg(VertexId v, int d) const {
    return nbrs_if(v, [&](VertexId x) { return deg(x) == d; });
  }
  std::vector<VertexId> nbrs_deg_le(VertexId v, int d) const {
    return nbrs_if(v, [&](VertexId x) { return deg(x) <= d; });
  }
  std::vector<VertexId> gamma_nbrs(VertexId v) const {
    return nbrs_if(v, [&](VertexId x) { return cls[x].is_gamma(); });
  }
  /// The neighbor of a 2-vertex z other than a.
  VertexId other(VertexId z, VertexId a) const {
    for (const auto& i : g.incident(z))
      if (i.neighbor != a) return i.neighbor;
    return a;
  }
};

using Instance = ConfigurationInstance;

struct Builder {
  const Ctx& c;
  Instance inst;

  Builder(const Ctx& ctx, Catalog cat, std::string tag) : c(ctx) { inst.kind = {cat, std::move(tag)}; }
  Builder& role(std::string name, VertexId v) {
    inst.roles.emplace_back(std::move(name), v);
    return *this;
  }
  Builder& set(std::string name, std::vector<VertexId> vs) {
    inst.role_sets.emplace_back(std::move(name), std::move(vs));
    return *this;
  }
  Builder& core(VertexId a, VertexId b) {
    inst.core.push_back(c.e(a, b));
    return *this;
  }
  Builder& star(VertexId v, const std::vector<VertexId>& to) {
    for (VertexId x : to) core(v, x);
    return *this;
  }
  Builder& core_edges(const std::vector<EdgeId>& es) {
    inst.core.insert(inst.core.end(), es.begin(), es.end());
    return *this;
  }
  Builder& extra_edge(VertexId a, VertexId b) {
    inst.extra_mutable_edges.push_back(c.e(a, b));
    return *this;
  }
  Builder& extra_vertex(VertexId v) {
    inst.extra_mutable_vertices.push_back(v);
    return *this;
  }
  Instance done();
};

bool cleans_isolated_edges(Catalog cat) {
  return cat == Catalog::w3_52 || cat == Catalog::w3_83 || cat == Catalog::degen_tri || cat == Catalog::degen_4cyc;
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

Instance Builder::done() {
  const Graph& g = c.g;
  sort_unique(inst.core);
  std::set<EdgeId> deleted(inst.core.begin(), inst.core.end());
  if (cleans_isolated_edges(inst.kind.catalog)) {
    std::map<VertexId, int> lost;
    for (EdgeId e : inst.core) {
      ++lost[g.edge(e).u];
      ++lost[g.edge(e).v];
    }
    auto remaining = [&](VertexId x) {
      auto it = lost.find(x);
      return g.degree(x) - (it == lost.end() ? 0 : it->second);
    };
    for (const auto& [x, n] : lost) {
      (void)n;
      if (remaining(x) != 1) continue;
      for (const auto& i : g.incident(x))
        if (!deleted.count(i.edge) && remaining(i.neighbor) == 1) inst.extra_deletions.push_back(i.edge);
    }
    sort_unique(inst.extra_deletions);
    deleted.insert(inst.extra_deletions.begin(), inst.extra_deletions.end());
  }
  sort_unique(inst.extra_mutable_edges);
  std::erase_if(inst.extra_mutable_edges, [&](EdgeId e) { return deleted.count(e) > 0; });
  sort_unique(inst.extra_mutable_vertices);
  return std::move(inst);
}

using Opt = std::optional<Instance>;

// ---------------------------------------------------------------------------
// Kinds shared by both 3-weighting catalogs.

Opt w3_a(const Ctx& c, Catalog cat, VertexId v) {
  if (c.deg(v) != 2 && c.deg(v) != 3) return std::nullopt;
  auto ones = c.nbrs_deg(v, 1);
  if (ones.empty()) return std::nullopt;
  return Builder(c, cat, "A").role("v", v).role("u", ones[0]).core(v, ones[0]).done();
}

Opt w3_b(const Ctx& c, Catalog cat, VertexId v) {
  const int d = c.deg(v);
  if (d < 1 || d > 4) return std::nullopt;
  auto twos = c.nbrs_deg(v, 2);
  if (static_cast<int>(twos.size()) != d) return std::nullopt;
  return Builder(c, cat, "B").role("v", v).set("Z", twos).star(v, twos).done();
}

Opt w3_c(const Ctx& c, Catalog cat, VertexId v) {
  if (c.deg(v) != 3) return std::nullopt;
  auto twos = c.nbrs_deg(v, 2);
  if (twos.size() < 2) return std::nullopt;
  for (VertexId z : twos) {
    if (!c.cls[z].is_alpha) continue;
    const VertexId y = c.other(z, v);
    const VertexId z2 = twos[0] == z ? twos[1] : twos[0];
    Builder b(c, cat, "C");
    b.role("v", v).role("z", z).role("z'", z2).role("y", y);
    for (VertexId x : c.g.neighbors(v))
      if (x != z && x != z2) b.role("x", x);
    return b.core(v, z).core(v, z2).core(z, y).done();
  }
  return std::nullopt;
}

Opt w3_d(const Ctx& c, Catalog cat, VertexId v) {
  if (c.deg(v) != 4) return std::nullopt;
  auto ones = c.nbrs_deg(v, 1);
  if (ones.empty()) return std::nullopt;
  const VertexId u = ones[0];
  auto low = c.nbrs_if(v, [&](VertexId x) { return x != u && c.deg(x) <= 2; });
  if (low.empty()) return std::nullopt;
  return Builder(c, cat, "D").role("v", v).role("u", u).role("z", low[0]).core(v, u).core(v, low[0]).done();
}

Instance e_like(const Ctx& c, Catalog cat, const std::string& tag, VertexId v) {
  auto u1 = c.nbrs_deg(v, 1);
  auto u2 = c.nbrs_deg(v, 2);
  Builder b(c, cat, tag);
  b.role("v", v).set("U1", u1).set("U2", u2).star(v, u1).star(v, u2);
  for (std::size_t i = 0; i < u2.size(); ++i)
    for (std::size_t j = i + 1; j < u2.size(); ++j)
      if (c.g.adjacent(u2[i], u2[j])) b.core(u2[i], u2[j]);
  return b.done();
}

Opt w3_e(const Ctx& c, Catalog cat, VertexId v) {
  const int d = c.deg(v);
  if (d < 5) return std::nullopt;
  const int p1 = count_neighbors_of_degree(c.g, v, 1), p2 = count_neighbors_of_degree(c.g, v, 2);
  if (3 * p1 + 2 * p2 < d) return std::nullopt;
  return e_like(c, cat, "E", v);
}

Opt w3_es(const Ctx& c, Catalog cat, VertexId v) {
  const int d = c.deg(v);
  if (d < 5) return std::nullopt;
  const int p1 = count_neighbors_of_degree(c.g, v, 1), p2 = count_neighbors_of_degree(c.g, v, 2);
  if (3 * p1 + p2 < 2 * d - 4) return std::nullopt;
  return e_like(c, cat, "Es", v);
}

// ---------------------------------------------------------------------------
// Kinds built on gamma-vertices.

std::vector<EdgeId> f_set(const Ctx& c, VertexId x) {
  switch (c.cls[x].gamma_kind) {
    case GammaKind::gamma4: return {c.e(x, c.nbrs_deg(x, 1)[0])};
    case GammaKind::gamma3b: {
      auto twos = c.nbrs_deg(x, 2);
      return {c.e(x, twos[0]), c.e(x, twos[1])};
    }
    case GammaKind::gamma3a: {
      auto alphas = c.nbrs_if(x, [&](VertexId t) { return c.cls[t].is_alpha; });
      const VertexId z = alphas[0];
      return {c.e(x, z), c.e(z, c.other(z, x))};
    }
    case GammaKind::none: break;
  }
  return {};
}

Opt w3_f(const Ctx& c, VertexId v) {
  if (!c.cls[v].is_gamma()) return std::nullopt;
  auto partners = c.nbrs_if(v, [&](VertexId x) { return x > v && c.cls[x].is_gamma(); });
  if (partners.empty()) return std::nullopt;
  const VertexId v2 = partners[0];
  return Builder(c, Catalog::w3_83, "F")
      .role("v", v)
      .role("v'", v2)
      .core(v, v2)
      .core_edges(f_set(c, v))
      .core_edges(f_set(c, v2))
      .done();
}

Opt w3_g(const Ctx& c, VertexId v) {
  if (c.deg(v) != 3) return std::nullopt;
  auto gs = c.gamma_nbrs(v);
  if (gs.size() < 2) return std::nullopt;
  Builder b(c, Catalog::w3_83, "G");
  b.role("v", v).role("z", gs[0]).role("z'", gs[1]);
  for (VertexId x : c.g.neighbors(v))
    if (x != gs[0] && x != gs[1]) b.role("x", x);
  return b.core(v, gs[0]).core(v, gs[1]).core_edges(f_set(c, gs[0])).core_edges(f_set(c, gs[1])).done();
}

Instance h_like(const Ctx& c, const std::string& tag, VertexId v) {
  auto u1 = c.nbrs_deg(v, 1);
  auto zs = c.gamma_nbrs(v);
  Builder b(c, Catalog::w3_83, tag);
  b.role("v", v).set("U1", u1).set("Z", zs).star(v, u1).star(v, zs);
  for (VertexId z : zs) b.core_edges(f_set(c, z));
  return b.done();
}

Opt w3_h(const Ctx& c, VertexId v) {
  const int d = c.deg(v);
  const int p1 = count_neighbors_of_degree(c.g, v, 1);
  const int q = static_cast<int>(c.gamma_nbrs(v).size());
  if (p1 + 2 * q < d || p1 + q <= 4) return std::nullopt;
  return h_like(c, "H", v);
}

Opt w3_hs(const Ctx& c, VertexId v) {
  const int d = c.deg(v);
  if (d != 6 && d != 7) return std::nullopt;
  if (count_neighbors_of_degree(c.g, v, 1) < 1 || c.gamma_nbrs(v).size() < 4) return std::nullopt;
  return h_like(c, "Hs", v);
}

Opt w3_i(const Ctx& c, VertexId v) {
  if (c.deg(v) != 5) return std::nullopt;
  auto ones = c.nbrs_deg(v, 1);
  auto zs = c.gamma_nbrs(v);
  if (ones.empty() || zs.size() < 3) return std::nullopt;
  Builder b(c, Catalog::w3_83, "I");
  b.role("v", v).role("u", ones[0]).role("z1", zs[0]).role("z2", zs[1]).role("z3", zs[2]).core(v, ones[0]);
  for (int i = 0; i < 3; ++i) b.core(v, zs[i]).core_edges(f_set(c, zs[i]));
  return b.done();
}

std::vector<VertexId> alpha_nbrs(const Ctx& c, VertexId v) {
  return c.nbrs_if(v, [&](VertexId x) { return c.cls[x].is_alpha; });
}

Opt w3_j1(const Ctx& c, VertexId v) {
  if (c.deg(v) != 4) return std::nullopt;
  auto as = alpha_nbrs(c, v);
  if (as.size() < 2) return std::nullopt;
  const VertexId z = as[0], z2 = as[1], y = c.other(z, v), y2 = c.other(z2, v);
  return Builder(c, Catalog::w3_83, "J1")
      .role("v", v)
      .role("z", z)
      .role("z'", z2)
      .role("y", y)
      .role("y'", y2)
      .core(v, z)
      .core(v, z2)
      .core(z, y)
      .core(z2, y2)
      .done();
}

Opt w3_j2(const Ctx& c, VertexId v) {
  if (c.deg(v) != 4) return std::nullopt;
  auto as = alpha_nbrs(c, v);
  auto gs = c.gamma_nbrs(v);
  if (as.empty() || gs.empty()) return std::nullopt;
  const VertexId z = as[0];
  auto others = c.nbrs_if(v, [&](VertexId x) { return x != z && c.deg(x) == 2; });
  if (others.empty()) return std::nullopt;
  const VertexId u = others[0], x = gs[0], y = c.other(z, v);
  return Builder(c, Catalog::w3_83, "J2")
      .role("v", v)
      .role("z", z)
      .role("y", y)
      .role("u", u)
      .role("x", x)
      .core(y, z)
      .core(z, v)
      .core(v, u)
      .core(v, x)
      .core_edges(f_set(c, x))
      .done();
}

Opt w3_j3(const Ctx& c, VertexId v) {
  if (c.deg(v) != 4) return std::nullopt;
  auto twos = c.nbrs_deg(v, 2);
  auto gs = c.gamma_nbrs(v);
  if (twos.empty() || gs.size() < 3) return std::nullopt;
  Builder b(c, Catalog::w3_83, "J3");
  b.role("v", v).role("z", twos[0]).role("x1", gs[0]).role("x2", gs[1]).role("x3", gs[2]);
  b.star(v, c.g.neighbors(v));
  for (int i = 0; i < 3; ++i) b.core_edges(f_set(c, gs[i]));
  return b.done();
}

Opt w3_js(const Ctx& c, VertexId v) {
  if (c.deg(v) != 4) return std::nullopt;
  const int p = count_neighbors_of_degree(c.g, v, 2);
  const int q = static_cast<int>(c.gamma_nbrs(v).size());
  const int r = static_cast<int>(alpha_nbrs(c, v).size());
  if (p + q + r < 5) return std::nullopt;
  return Builder(c, Catalog::w3_83, "Js").role("v", v).star(v, c.g.neighbors(v)).done();
}

Opt w3_k(const Ctx& c, VertexId v) {
  const GammaKind gk = c.cls[v].gamma_kind;
  if (gk == GammaKind::none) return std::nullopt;
  auto big = c.nbrs_if(v, [&](VertexId x) { return c.deg(x) >= 3; });
  for (VertexId s : big)
    if (!c.cls[s].is_beta123) return std::nullopt;
  Builder b(c, Catalog::w3_83, "K");
  b.role("v", v).set("S", big).star(v, c.g.neighbors(v));
  for (VertexId s : big)
    for (VertexId t : c.nbrs_deg(s, 2)) b.core(s, t);
  if (gk == GammaKind::gamma3a) {
    const VertexId u = alpha_nbrs(c, v)[0];
    const VertexId u2 = c.other(u, v);
    b.role("u", u).role("u'", u2).core(u, u2);
  }
  return b.done();
}

// ---------------------------------------------------------------------------
// Total 2-weighting kinds.

Opt w2_a(const Ctx& c, Catalog cat, VertexId v) {
  const int d = c.deg(v);
  if (d < 1 || d > 3) return std::nullopt;
  auto ones = c.nbrs_deg(v, 1);
  if (ones.empty()) return std::nullopt;
  if (d == 1 && ones[0] < v) return std::nullopt;
  return Builder(c, cat, "A").role("v", v).role("u", ones[0]).core(v, ones[0]).done();
}

Opt w2_b(const Ctx& c, Catalog cat, VertexId v) {
  if (c.deg(v) > 4) return std::nullopt;
  auto low = c.nbrs_deg_le(v, 2);
  if (low.size() < 2) return std::nullopt;
  Builder b(c, cat, "B");
  b.role("v", v).role("z", low[0]).role("z'", low[1]).core(v, low[0]).core(v, low[1]);
  for (VertexId z : {low[0], low[1]}) {
    if (c.deg(z) != 2) continue;
    const VertexId y = c.other(z, v);
    b.extra_edge(z, y).extra_vertex(y);
  }
  return b.done();
}

Opt w2_c(const Ctx& c, Catalog cat, VertexId v) {
  const int d = c.deg(v);
  if (d < 5) return std::nullopt;
  auto low = c.nbrs_deg_le(v, 2);
  if (2 * static_cast<int>(low.size()) < d - 1) return std::nullopt;
  low.resize(static_cast<std::size_t>(d / 2));  // ceil((d-1)/2)
  return Builder(c, cat, "C").role("v", v).set("U", low).star(v, low).done();
}

/// Second shell behind a 2-vertex y reached from z: edge y-y' and vertex y'.
void beta2_tail(const Ctx& c, Builder& b, VertexId z, VertexId y) {
  b.extra_edge(z, y).extra_vertex(y);
  if (c.deg(y) == 2) {
    const VertexId t = c.other(y, z);
    b.extra_edge(y, t).extra_vertex(t);
  }
}

VertexId beta12_two(const Ctx& c, VertexId v) { return c.nbrs_deg(v, 2)[0]; }

Opt w2_d(const Ctx& c, VertexId v) {
  if (!c.cls[v].is_beta12) return std::nullopt;
  auto ps = c.nbrs_if(v, [&](VertexId x) { return x > v && c.cls[x].is_beta12; });
  if (ps.empty()) return std::nullopt;
  const VertexId v2 = ps[0], z = beta12_two(c, v), z2 = beta12_two(c, v2);
  const VertexId y = c.other(z, v), y2 = c.other(z2, v2);
  Builder b(c, Catalog::w2_83, "D");
  b.role("v", v).role("v'", v2).role("z", z).role("z'", z2).role("y", y).role("y'", y2);
  b.core(z, v).core(v, v2).core(v2, z2);
  beta2_tail(c, b, z, y);
  beta2_tail(c, b, z2, y2);
  return b.done();
}

Opt w2_e(const Ctx& c, VertexId v) {
  if (!c.cls[v].is_beta12) return std::nullopt;
  auto ps = c.nbrs_if(v, [&](VertexId x) { return c.cls[x].is_beta_prime; });
  if (ps.empty()) return std::nullopt;
  const VertexId v2 = ps[0], z = beta12_two(c, v), y = c.other(z, v);
  Builder b(c, Catalog::w2_83, "E");
  b.role("v", v).role("v'", v2).role("z", z).role("y", y).core(z, v).core(v, v2);
  auto ones = c.nbrs_deg(v2, 1);
  if (c.deg(v2) == 4) {
    b.role("u", ones[0]).core(v2, ones[0]);
  } else {
    b.set("U1", ones).star(v2, ones);
  }
  beta2_tail(c, b, z, y);
  return b.done();
}

bool is_beta_prime4(const Ctx& c, VertexId x) { return c.deg(x) == 4 && c.cls[x].is_beta_prime; }

Opt w2_f(const Ctx& c, VertexId v) {
  if (!is_beta_prime4(c, v)) return std::nullopt;
  auto ps = c.nbrs_if(v, [&](VertexId x) { return is_beta_prime4(c, x); });
  if (ps.size() < 2) return std::nullopt;
  const VertexId z = ps[0], z2 = ps[1];
  const VertexId u = c.nbrs_deg(v, 1)[0], y = c.nbrs_deg(z, 1)[0], y2 = c.nbrs_deg(z2, 1)[0];
  Builder b(c, Catalog::w2_83, "F");
  b.role("v", v).role("z", z).role("z'", z2).role("u", u).role("y", y).role("y'", y2);
  if (c.g.adjacent(z, z2))
    b.core(v, z).core(v, z2).core(z, z2).core(v, u).core(z, y).core(z2, y2);
  else
    b.core(y, z).core(z, v).core(v, u).core(v, z2).core(z2, y2);
  return b.done();
}

Opt w2_g(const Ctx& c, VertexId v) {
  if (c.deg(v) != 3) return std::nullopt;
  auto zs = c.g.neighbors(v);
  for (VertexId z : zs)
    if (!c.cls[z].is_beta12 && !is_beta_prime4(c, z)) return std::nullopt;
  auto partner = [&](VertexId z) { return c.cls[z].is_beta12 ? beta12_two(c, z) : c.nbrs_deg(z, 1)[0]; };
  Builder b(c, Catalog::w2_83, "G");
  b.role("v", v);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (c.g.adjacent(zs[i], zs[j])) {
        const VertexId z = zs[i], z2 = zs[j], x = zs[3 - i - j];
        const VertexId y = partner(z), y2 = partner(z2);
        b.role("z", z).role("z'", z2).role("x", x).role("y", y).role("y'", y2);
        b.core(v, z).core(v, z2).core(z, z2).core(z, y).core(z2, y2);
        b.extra_edge(v, x).extra_vertex(x);
        return b.done();
      }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const VertexId z = zs[i], z2 = zs[j];
      if (!c.cls[z].is_beta12 || !c.cls[z2].is_beta12) continue;
      const VertexId y = beta12_two(c, z);
      if (y != beta12_two(c, z2)) continue;
      b.role("z1", z).role("z2", z2).role("y", y);
      b.core(v, z).core(v, z2).core(z, y).core(z2, y);
      return b.done();
    }
  std::vector<VertexId> order = zs;
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b2) { return c.deg(a) > c.deg(b2); });
  for (int i = 0; i < 3; ++i) {
    const VertexId z = order[i], y = partner(z);
    const std::string k = std::to_string(i + 1);
    b.role("z" + k, z).role("y" + k, y).core(v, z).core(z, y);
    if (c.cls[z].is_beta12) beta2_tail(c, b, z, y);
  }
  return b.done();
}

// ---------------------------------------------------------------------------
// Degenerate configurations.

Opt t1(const Ctx& c, VertexId v) {
  const int d = c.deg(v);
  if (d < 2 || d > 4) return std::nullopt;
  auto twos = c.nbrs_deg(v, 2);
  for (std::size_t i = 0; i < twos.size(); ++i)
    for (std::size_t j = i + 1; j < twos.size(); ++j) {
      const VertexId z = twos[i], z2 = twos[j];
      if (!c.g.adjacent(z, z2)) continue;
      if (d == 2 && v > z) continue;
      return Builder(c, Catalog::degen_tri, "T1")
          .role("v", v)
          .role("z", z)
          .role("z'", z2)
          .core(v, z)
          .core(v, z2)
          .core(z, z2)
          .done();
    }
  return std::nullopt;
}

enum class Side { no, plain, flex };

Side triangle_side(const Ctx& c, VertexId x, VertexId z) {
  const int d = c.deg(x);
  if (d == 3) return Side::plain;
  const bool has1 = count_neighbors_of_degree(c.g, x, 1) > 0;
  if ((d == 4 || d == 5) && has1) return Side::plain;
  if (d == 4 && !has1 && !c.nbrs_if(x, [&](VertexId t) { return t != z && c.deg(t) == 2; }).empty())
    return Side::flex;
  return Side::no;
}

VertexId smallest_degree_nbr(const Ctx& c, VertexId x, VertexId skip) {
  VertexId best = -1;
  for (const auto& i : c.g.incident(x)) {
    if (i.neighbor == skip) continue;
    if (best < 0 || c.deg(i.neighbor) < c.deg(best)) best = i.neighbor;
  }
  return best;
}

Opt t2(const Ctx& c, VertexId z) {
  if (c.deg(z) != 2) return std::nullopt;
  auto ns = c.g.neighbors(z);
  const VertexId v = ns[0], v2 = ns[1];
  if (c.deg(v) < 3 || c.deg(v2) < 3 || !c.g.adjacent(v, v2)) return std::nullopt;
  const Side s1 = triangle_side(c, v, z), s2 = triangle_side(c, v2, z);
  if (s1 == Side::no || s2 == Side::no || (s1 == Side::flex && s2 == Side::flex)) return std::nullopt;
  Builder b(c, Catalog::degen_tri, "T2");
  b.role("z", z).role("v", v).role("v'", v2).core(v, z).core(v2, z).core(v, v2);
  if (c.deg(v) >= 4) {
    const VertexId u = smallest_degree_nbr(c, v, z);
    b.role("u", u).core(v, u);
  }
  if (c.deg(v2) >= 4) {
    const VertexId u = smallest_degree_nbr(c, v2, z);
    b.role("u'", u).core(v2, u);
  }
  if (s1 == Side::flex) b.role("flex_side", v);
  if (s2 == Side::flex) b.role("flex_side", v2);
  return b.done();
}

Opt q1(const Ctx& c, VertexId z) {
  if (!c.cls[z].is_beta123) return std::nullopt;
  for (VertexId z2 : c.nbrs_if(z, [&](VertexId x) { return x > z && c.cls[x].is_beta123; }))
    for (VertexId y : c.nbrs_deg(z, 2))
      for (VertexId y2 : c.nbrs_deg(z2, 2))
        if (y != y2 && c.g.adjacent(y, y2))
          return Builder(c, Catalog::degen_4cyc, "Q1")
              .role("z", z)
              .role("z'", z2)
              .role("y", y)
              .role("y'", y2)
              .core(z, z2)
              .core(z, y)
              .core(y, y2)
              .core(z2, y2)
              .done();
  return std::nullopt;
}

Opt q2(const Ctx& c, VertexId v, bool adjacent_twos) {
  if (c.deg(v) != 4 && c.deg(v) != 5) return std::nullopt;
  auto ones = c.nbrs_deg(v, 1);
  if (ones.empty()) return std::nullopt;
  const VertexId u = ones[0];
  auto bs = c.nbrs_if(v, [&](VertexId x) { return c.cls[x].is_beta123; });
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j) {
      const VertexId z = bs[i], z2 = bs[j];
      if (c.g.adjacent(z, z2)) continue;
      for (VertexId y : c.nbrs_deg(z, 2))
        for (VertexId y2 : c.nbrs_deg(z2, 2)) {
          if (!adjacent_twos && y == y2)
            return Builder(c, Catalog::degen_4cyc, "Q2a")
                .role("v", v)
                .role("u", u)
                .role("z", z)
                .role("z'", z2)
                .role("y", y)
                .core(v, z)
                .core(v, z2)
                .core(z, y)
                .core(z2, y)
                .core(v, u)
                .done();
          if (adjacent_twos && y != y2 && c.g.adjacent(y, y2))
            return Builder(c, Catalog::degen_4cyc, "Q2b")
                .role("v", v)
                .role("u", u)
                .role("z", z)
                .role("z'", z2)
                .role("y", y)
                .role("y'", y2)
                .core(v, z)
                .core(v, z2)
                .core(z, y)
                .core(z2, y2)
                .core(y, y2)
                .core(v, u)
                .done();
        }
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Dispatch.

using Detector = std::function<Opt(const Ctx&, VertexId)>;

Detector detector(const ConfigKind& k) {
  const Catalog cat = k.catalog;
  const std::string& t = k.tag;
  const bool w3 = cat == Catalog::w3_52 || cat == Catalog::w3_83;
  const bool w2 = cat == Catalog::w2_52 || cat == Catalog::w2_83;
  if (w3) {
    if (t == "A") return [cat](const Ctx& c, VertexId v) { return w3_a(c, cat, v); };
    if (t == "B") return [cat](const Ctx& c, VertexId v) { return w3_b(c, cat, v); };
    if (t == "C") return [cat](const Ctx& c, VertexId v) { return w3_c(c, cat, v); };
    if (t == "D") return [cat](const Ctx& c, VertexId v) { return w3_d(c, cat, v); };
    if (t == "E") return [cat](const Ctx& c, VertexId v) { return w3_e(c, cat, v); };
    if (t == "Es" && cat == Catalog::w3_52) return [cat](const Ctx& c, VertexId v) { return w3_es(c, cat, v); };
  }
  if (cat == Catalog::w3_83) {
    if (t == "F") return w3_f;
    if (t == "G") return w3_g;
    if (t == "H") return w3_h;
    if (t == "Hs") return w3_hs;
    if (t == "I") return w3_i;
    if (t == "J1") return w3_j1;
    if (t == "J2") return w3_j2;
    if (t == "J3") return w3_j3;
    if (t == "Js") return w3_js;
    if (t == "K") return w3_k;
  }
  if (w2) {
    if (t == "A") return [cat](const Ctx& c, VertexId v) { return w2_a(c, cat, v); };
    if (t == "B") return [cat](const Ctx& c, VertexId v) { return w2_b(c, cat, v); };
    if (t == "C") return [cat](const Ctx& c, VertexId v) { return w2_c(c, cat, v); };
  }
  if (cat == Catalog::w2_83) {
    if (t == "D") return w2_d;
    if (t == "E") return w2_e;
    if (t == "F") return w2_f;
    if (t == "G") return w2_g;
  }
  if (cat == Catalog::degen_tri) {
    if (t == "T1") return t1;
    if (t == "T2") return t2;
  }
  if (cat == Catalog::degen_4cyc) {
    if (t == "Q1") return q1;
    if (t == "Q2a") return [](const Ctx& c, VertexId v) { return q2(c, v, false); };
    if (t == "Q2b") return [](const Ctx& c, VertexId v) { return q2(c, v, true); };
  }
  throw std::invalid_argument("unknown configuration kind " + to_string(k));
}

std::vector<ConfigKind> kinds_of(Catalog c) {
  std::vector<ConfigKind> out;
  for (const auto& t : catalog_tags(c)) out.push_back({c, t});
  return out;
}

std::vector<ConfigKind> first_order(Catalog c) {
  std::vector<ConfigKind> out;
  if (c != Catalog::degen_tri && c != Catalog::degen_4cyc) {
    out = kinds_of(Catalog::degen_tri);
    if (c == Catalog::w3_83) {
      auto q = kinds_of(Catalog::degen_4cyc);
      out.insert(out.end(), q.begin(), q.end());
    }
  }
  auto main = kinds_of(c);
  out.insert(out.end(), main.begin(), main.end());
  return out;
}

std::vector<Instance> all_of(const Ctx& c, const std::vector<ConfigKind>& kinds) {
  std::vector<Instance> out;
  for (const auto& k : kinds) {
    auto det = detector(k);
    for (VertexId v = 0; v < c.g.vertex_count(); ++v)
      if (auto inst = det(c, v)) out.push_back(std::move(*inst));
  }
  return out;
}

std::optional<Instance> first_of(const Ctx& c, const std::vector<ConfigKind>& kinds) {
  for (const auto& k : kinds) {
    auto det = detector(k);
    for (VertexId v = 0; v < c.g.vertex_count(); ++v)
      if (auto inst = det(c, v)) return inst;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Catalog c) {
  switch (c) {
    case Catalog::w3_52: return "W3_52";
    case Catalog::w2_52: return "W2_52";
    case Catalog::w2_83: return "W2_83";
    case Catalog::w3_83: return "W3_83";
    case Catalog::degen_tri: return "DEGEN_TRI";
    case Catalog::degen_4cyc: return "DEGEN_4CYC";
    case Catalog::custom: return "CUSTOM";
  }
  return "?";
}

std::string_view to_string(StructuralCatalog c) {
  switch (c) {
    case StructuralCatalog::s52: return "S52";
    case StructuralCatalog::s83_12: return "S83_12";
    case StructuralCatalog::s83_123: return "S83_123";
  }
  return "?";
}

Catalog parse_catalog(std::string_view text) {
  for (Catalog c : {Catalog::w3_52, Catalog::w2_52, Catalog::w2_83, Catalog::w3_83, Catalog::degen_tri,
                    Catalog::degen_4cyc, Catalog::custom})
    if (text == to_string(c)) return c;
  if (text == "3w52") return Catalog::w3_52;
  if (text == "2w52") return Catalog::w2_52;
  if (text == "2w83") return Catalog::w2_83;
  if (text == "3w83") return Catalog::w3_83;
  throw std::invalid_argument("unknown catalog '" + std::string(text) + "'");
}

std::string to_string(const ConfigKind& k) { return std::string(to_string(k.catalog)) + "." + k.tag; }

ConfigKind parse_kind(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) throw std::invalid_argument("kind needs CATALOG.TAG: " + std::string(text));
  return {parse_catalog(text.substr(0, dot)), std::string(text.substr(dot + 1))};
}

const std::vector<std::string>& catalog_tags(Catalog c) {
  static const std::vector<std::string> w3_52{"A", "B", "C", "D", "E"};
  static const std::vector<std::string> w2_52{"A", "B", "C"};
  static const std::vector<std::string> w2_83{"A", "B", "C", "D", "E", "F", "G"};
  static const std::vector<std::string> w3_83{"A", "B", "C", "D", "E", "F", "G", "H", "I", "J1", "J2", "J3", "K"};
  static const std::vector<std::string> tri{"T1", "T2"};
  static const std::vector<std::string> cyc{"Q1", "Q2a", "Q2b"};
  static const std::vector<std::string> none;
  switch (c) {
    case Catalog::w3_52: return w3_52;
    case Catalog::w2_52: return w2_52;
    case Catalog::w2_83: return w2_83;
    case Catalog::w3_83: return w3_83;
    case Catalog::degen_tri: return tri;
    case Catalog::degen_4cyc: return cyc;
    case Catalog::custom: break;
  }
  return none;
}

const std::vector<ConfigKind>& structural_kinds(StructuralCatalog c) {
  static const std::vector<ConfigKind> s52 = [] {
    std::vector<ConfigKind> out;
    for (const char* t : {"A", "B", "C", "D", "Es"}) out.push_back({Catalog::w3_52, t});
    return out;
  }();
  static const std::vector<ConfigKind> s83_12 = kinds_of(Catalog::w2_83);
  static const std::vector<ConfigKind> s83_123 = [] {
    std::vector<ConfigKind> out;
    for (const char* t : {"A", "B", "C", "D", "E", "F", "G", "Hs", "I", "Js", "K"}) out.push_back({Catalog::w3_83, t});
    return out;
  }();
  switch (c) {
    case StructuralCatalog::s52: return s52;
    case StructuralCatalog::s83_12: return s83_12;
    case StructuralCatalog::s83_123: return s83_123;
  }
  return s52;
}

std::vector<ConfigKind> all_reducible_kinds() {
  std::vector<ConfigKind> out;
  for (Catalog c : {Catalog::w3_52, Catalog::w2_52, Catalog::w2_83, Catalog::w3_83, Catalog::degen_tri,
                    Catalog::degen_4cyc}) {
    auto ks = kinds_of(c);
    out.insert(out.end(), ks.begin(), ks.end());
  }
  return out;
}

std::optional<VertexId> ConfigurationInstance::role(std::string_view name) const {
  for (const auto& [n, v] : roles)
    if (n == name) return v;
  return std::nullopt;
}

std::vector<EdgeId> ConfigurationInstance::deleted_edges() const {
  std::vector<EdgeId> out = core;
  out.insert(out.end(), extra_deletions.begin(), extra_deletions.end());
  return out;
}

std::vector<ConfigurationInstance> detect_all(const Graph& g, Catalog catalog) {
  return all_of(Ctx(g), kinds_of(catalog));
}

std::optional<ConfigurationInstance> detect_first(const Graph& g, Catalog catalog) {
  return first_of(Ctx(g), first_order(catalog));
}

std::vector<ConfigurationInstance> detect_all(const Graph& g, StructuralCatalog catalog) {
  return all_of(Ctx(g), structural_kinds(catalog));
}

std::optional<ConfigurationInstance> detect_first(const Graph& g, StructuralCatalog catalog) {
  return first_of(Ctx(g), structural_kinds(catalog));
}

std::optional<ConfigurationInstance> detect_at(const Graph& g, const ConfigKind& kind, VertexId v) {
  if (v < 0 || v >= g.vertex_count()) return std::nullopt;
  return detector(kind)(Ctx(g), v);
}

ConfigurationInstance structural_to_reducible(const ConfigurationInstance& inst, const Graph& g, Catalog target) {
  const std::string& t = inst.kind.tag;
  std::vector<std::string> candidates;
  if (inst.kind.catalog == Catalog::w3_52 && target == Catalog::w2_52) {
    if (t == "A") candidates = {"A"};
    else if (t == "B" || t == "C" || t == "D") candidates = {"B"};
    else if (t == "Es") candidates = {"C"};
  } else if (inst.kind.catalog == target) {
    if (t == "Es" || t == "Hs") candidates = {t.substr(0, 1)};
    else if (t == "Js") candidates = {"J1", "J2", "J3", "B"};
    else return inst;
  }
  for (const auto& tag : candidates)
    if (auto out = detect_at(g, {target, tag}, inst.center())) return *out;
  throw MappingFailed("no reducible counterpart in " + std::string(to_string(target)) + " for " +
                      to_string(inst.kind) + " at vertex " + std::to_string(inst.center()));
}

bool verify_instance(const Graph& g, const ConfigurationInstance& inst) {
  for (const auto& [n, v] : inst.roles)
    if (v < 0 || v >= g.vertex_count()) return false;
  for (EdgeId e : inst.deleted_edges())
    if (!g.is_live(e)) return false;
  std::optional<ConfigurationInstance> again;
  try {
    again = detect_at(g, inst.kind, inst.center());
  } catch (const std::invalid_argument&) {
    return false;
  }
  return again && again->roles == inst.roles && again->role_sets == inst.role_sets && again->core == inst.core &&
         again->extra_deletions == inst.extra_deletions;
}

std::string format_instance(const Graph& g, const ConfigurationInstance& inst) {
  std::ostringstream out;
  out << to_string(inst.kind);
  for (const auto& [n, v] : inst.roles) out << ' ' << n << '=' << v;
  for (const auto& [n, vs] : inst.role_sets) {
    out << ' ' << n << "={";
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
    out << '}';
  }
  auto edges = [&](const std::vector<EdgeId>& es) {
    std::string s = "[";
    for (std::size_t i = 0; i < es.size(); ++i)
      s += (i ? "," : "") + std::to_string(g.edge(es[i]).u) + "-" + std::to_string(g.edge(es[i]).v);
    return s + "]";
  };
  out << " core=" << edges(inst.core);
  if (!inst.extra_deletions.empty()) out << " extra=" << edges(inst.extra_deletions);
  return out.str();
}

}  // namespace spw
