#include "spw/configs.hpp"
#include "spw/discharge.hpp"
#include "spw/gen.hpp"
#include "spw/graph.hpp"
#include "spw/mad.hpp"
#include "spw/oracle.hpp"
#include "spw/reducer.hpp"
#include "spw/solver.hpp"
#include "spw/weighting.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr std::uint64_t kDefaultSeed = 20240101;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

spw::Graph load_graph(const std::string& path) { return spw::parse_graph(read_file(path)); }

int cmd_mad(const std::string& file) {
  const spw::Graph g = load_graph(file);
  const auto r = spw::mad_exact(g);
  std::cout << spw::to_string(r.value);
  for (auto v : r.witness) std::cout << ' ' << v;
  std::cout << '\n';
  return 0;
}

int cmd_detect(const std::string& catalog, const std::string& file) {
  const spw::Graph g = load_graph(file);
  const spw::Catalog c = spw::parse_catalog(catalog);
  for (const auto& inst : spw::detect_all(g, c)) std::cout << spw::format_instance(g, inst) << '\n';
  return 0;
}

int cmd_solve(const std::string& mode_text, int level, bool force, bool trace, const std::string& file) {
  const spw::Graph g = load_graph(file);
  const spw::Mode mode = spw::parse_mode(mode_text);
  try {
    const auto out = spw::solve_components(g, mode, level, {force});
    if (trace) std::cerr << spw::format_trace(out.trace);
    if (out.status != spw::SolveStatus::solved) {
      std::cerr << spw::to_string(out.status) << ": " << out.reason << '\n';
      return 1;
    }
    std::cout << spw::format_weighting(g, out.weighting);
    return 0;
  } catch (const spw::InternalInconsistency& e) {
    std::cerr << "InternalInconsistency: " << e.what() << '\n';
    return 3;
  } catch (const spw::MappingFailed& e) {
    std::cerr << "InternalInconsistency: " << e.what() << '\n';
    return 3;
  }
}

int cmd_verify(const std::string& mode_text, const std::string& graph_file, const std::string& weight_file) {
  const spw::Graph g = load_graph(graph_file);
  const spw::Mode mode = spw::parse_mode(mode_text);
  const spw::Weighting w = spw::parse_weighting(read_file(weight_file), g, mode);
  if (!w.complete_on(g)) {
    std::cout << "incomplete weighting\n";
    return 1;
  }
  const auto bad = spw::violations(g, w);
  for (const auto& v : bad)
    std::cout << "violation " << g.edge(v.edge).u << ' ' << g.edge(v.edge).v << " phi=" << v.phi_u << '\n';
  return bad.empty() ? 0 : 1;
}

int cmd_oracle(const std::string& mode_text, bool count, const std::string& file) {
  const spw::Graph g = load_graph(file);
  const spw::Mode mode = spw::parse_mode(mode_text);
  if (count) {
    spw::MutableSet ms;
    ms.edges = g.edge_ids();
    if (mode == spw::Mode::total2)
      for (spw::VertexId v = 0; v < g.vertex_count(); ++v) ms.vertices.push_back(v);
    std::cout << spw::count_extensions(g, spw::Weighting::empty_for(g, mode), ms, mode) << '\n';
    return 0;
  }
  const bool ok = spw::exists_proper(g, mode);
  std::cout << (ok ? "true" : "false") << '\n';
  return ok ? 0 : 1;
}

int cmd_discharge(const std::string& rules_text, bool check, const std::string& file) {
  const spw::Graph g = load_graph(file);
  const spw::RuleSet rules = spw::parse_rule_set(rules_text);
  const auto rep = spw::run(g, rules);
  for (spw::VertexId v = 0; v < g.vertex_count(); ++v)
    std::cout << v << ' ' << spw::to_string(rep.initial[v]) << ' ' << spw::to_string(rep.final_charge[v]) << '\n';
  std::cout << "min " << spw::to_string(rep.min_final) << '\n';
  if (check) {
    const auto verdict = spw::check_unavoidability(g, rules, spw::matching_catalog(rules.id));
    std::cout << spw::to_string(verdict) << '\n';
    if (verdict == spw::Verdict::counterexample) return 3;
  }
  return 0;
}

int cmd_gen(const std::string& kind, int n, const std::string& bound_text, std::uint64_t seed, bool seed_given,
            const std::string& config, const std::string& side) {
  namespace gen = spw::gen;
  const bool random = kind == "tree" || kind.rfind("random_", 0) == 0;
  if (random && !seed_given) std::cerr << "seed " << seed << '\n';
  const spw::Rational bound = spw::parse_rational(bound_text);
  spw::Graph g;
  if (kind == "cycle") g = gen::cycle(n);
  else if (kind == "path") g = gen::path(n);
  else if (kind == "complete") g = gen::complete(n);
  else if (kind == "star") g = gen::star(n);
  else if (kind == "tree") g = gen::tree(n, seed);
  else if (kind == "random_mad") g = gen::random_mad(n, bound, seed);
  else if (kind == "random_sparse") g = gen::random_sparse(n, bound, seed);
  else if (kind == "random_leafless") g = gen::random_leafless(n, bound, seed);
  else if (kind == "petersen") g = gen::petersen();
  else if (kind == "cubic_plus_pendants") g = gen::cubic_plus_pendants(n == 4 ? gen::complete(4) : gen::petersen());
  else if (kind == "nonred_gadget") g = gen::nonred_graph(side == "right" ? gen::GadgetSide::right : gen::GadgetSide::left);
  else if (kind == "config_host") g = gen::config_host(spw::parse_kind(config), n);
  else throw CLI::ValidationError("gen", "unknown generator kind '" + kind + "'");
  std::cout << spw::format_graph(g);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proper edge and total weightings of sparse graphs"};
  app.require_subcommand(1);

  std::string file, file2, mode = "123", catalog, rules = "r52", kind, bound = "8/3", config, side = "left";
  int level = 83, n = 10;
  bool force = false, trace = false, count = false, check = false;
  std::uint64_t seed = kDefaultSeed;

  auto* mad = app.add_subcommand("mad", "exact maximum average degree and a densest subgraph");
  mad->add_option("file", file)->required();

  auto* detect = app.add_subcommand("detect", "list configuration instances");
  detect->add_option("--catalog", catalog)->required()->check(CLI::IsMember({"3w52", "2w52", "2w83", "3w83"}));
  detect->add_option("file", file)->required();

  auto* solve = app.add_subcommand("solve", "construct a proper weighting");
  solve->add_option("--mode", mode)->required()->check(CLI::IsMember({"123", "12"}));
  solve->add_option("--level", level)->check(CLI::IsMember({52, 83}));
  solve->add_flag("--force", force, "skip the Mad precondition");
  solve->add_flag("--trace", trace, "print reductions on stderr");
  solve->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify", "check a weighting");
  verify->add_option("--mode", mode)->required()->check(CLI::IsMember({"123", "12"}));
  verify->add_option("graph", file)->required();
  verify->add_option("weighting", file2)->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force existence or count of proper weightings");
  oracle->add_option("--mode", mode)->required()->check(CLI::IsMember({"123", "12"}));
  oracle->add_flag("--count", count);
  oracle->add_option("file", file)->required();

  auto* discharge = app.add_subcommand("discharge", "run a discharging rule set");
  discharge->add_option("--rules", rules)->required()->check(CLI::IsMember({"r52", "r83-12", "r83-123"}));
  discharge->add_flag("--check-catalog", check);
  discharge->add_option("file", file)->required();

  auto* gen = app.add_subcommand("gen", "generate a graph");
  gen->add_option("kind", kind)->required();
  gen->add_option("--n", n, "size (leaves for star), or host variant for config_host");
  gen->add_option("--bound", bound);
  auto* seed_opt = gen->add_option("--seed", seed);
  gen->add_option("--config", config, "configuration kind for config_host, e.g. W3_83.J2");
  gen->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : 2;
  }

  try {
    if (*mad) return cmd_mad(file);
    if (*detect) return cmd_detect(catalog, file);
    if (*solve) return cmd_solve(mode, level, force, trace, file);
    if (*verify) return cmd_verify(mode, file, file2);
    if (*oracle) return cmd_oracle(mode, count, file);
    if (*discharge) return cmd_discharge(rules, check, file);
    if (*gen) return cmd_gen(kind, n, bound, seed, seed_opt->count() > 0, config, side);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const spw::GraphError& e) {
    std::cerr << "malformed graph: " << e.what() << '\n';
    return 2;
  } catch (const spw::WeightingError& e) {
    std::cerr << "bad weighting: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
