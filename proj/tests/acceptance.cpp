// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Pass a criterion number to run only that one.

#include "spw/configs.hpp"
#include "spw/discharge.hpp"
#include "spw/gen.hpp"
#include "spw/mad.hpp"
#include "spw/oracle.hpp"
#include "spw/reducer.hpp"
#include "spw/solver.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

using namespace spw;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
  int failures = 0;

  void fail(const std::string& what) {
    ok = false;
    if (++failures <= 5) detail += (detail.empty() ? "" : "; ") + what;
  }
};

std::string seed_label(std::uint64_t seed) { return "seed " + std::to_string(seed); }

// Solves g and checks the result, recording any failure in r.
void solve_and_check(const Graph& g, Mode mode, int level, const std::string& label, Result& r) {
  try {
    const SolveOutcome out = solve_components(g, mode, level);
    if (out.status != SolveStatus::solved) {
      r.fail(label + " mode " + std::string(to_string(mode)) + ": " + std::string(to_string(out.status)) + " " +
             out.reason);
      return;
    }
    if (!out.weighting.complete_on(g) || !violations(g, out.weighting).empty())
      r.fail(label + " mode " + std::string(to_string(mode)) + ": output does not verify");
  } catch (const std::exception& e) {
    r.fail(label + " mode " + std::string(to_string(mode)) + ": " + e.what());
  }
}

Result solve_corpus(int level, int count, std::uint64_t base_seed) {
  Result r;
  const Rational bound = level_bound(level);
  int edge3_runs = 0;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = base_seed + i;
    const int n = 5 + static_cast<int>(seed * 7919 % 56);
    const Graph g = gen::random_mad(n, bound, seed);
    if (!mad_less_than(g, bound)) {
      r.fail(seed_label(seed) + ": generator broke the Mad bound");
      continue;
    }
    solve_and_check(g, Mode::total2, level, seed_label(seed), r);
    if (!has_isolated_edge(g)) {
      ++edge3_runs;
      solve_and_check(g, Mode::edge3, level, seed_label(seed), r);
    }
  }
  r.detail = std::to_string(count) + " graphs, " + std::to_string(edge3_runs) + " in mode 123" +
             (r.detail.empty() ? "" : "; " + r.detail);
  return r;
}

Result criterion1() { return solve_corpus(83, 1000, 1'000'000); }
Result criterion2() { return solve_corpus(52, 500, 2'000'000); }

Result criterion3() {
  Result r;
  for (auto side : {gen::GadgetSide::left, gen::GadgetSide::right}) {
    const char* name = side == gen::GadgetSide::left ? "left" : "right";
    for (bool perturbed : {false, true}) {
      const gen::Gadget gd = gen::nonred_gadget(side, perturbed);
      const MutableSet ms = mutable_set(gd.instance, gd.graph, Mode::total2);
      const auto count = count_extensions(gd.graph, gd.base, ms, Mode::total2);
      const bool good = perturbed ? count > 0 : count == 0;
      r.detail += std::string(r.detail.empty() ? "" : ", ") + name + (perturbed ? " perturbed " : " ") +
                  std::to_string(count);
      if (!good) r.ok = false;
      bool threw = false;
      try {
        Weighting w = gd.base;
        extend(gd.graph, gd.instance, w, Mode::total2);
      } catch (const ExtensionImpossible&) {
        threw = true;
      }
      if (threw == perturbed) {
        r.ok = false;
        r.detail += std::string(" (extend ") + (threw ? "refused" : "succeeded") + ")";
      }
    }
  }
  return r;
}

Result criterion4() {
  Result r;
  int present = 0, out_of_scope = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t seed = 4'000'000 + i;
    const int n = 3 + static_cast<int>(seed * 104729 % 58);
    const Graph g = gen::random_sparse(n, Rational(8, 3), seed);
    if (!(average_degree(g) < Rational(8, 3))) {
      r.fail(seed_label(seed) + ": average degree not below 8/3");
      continue;
    }
    for (RuleSetId id : {RuleSetId::r83_12, RuleSetId::r83_123}) {
      const Verdict v = check_unavoidability(g, rule_set(id), matching_catalog(id));
      if (v == Verdict::counterexample) r.fail(seed_label(seed) + " " + std::string(to_string(id)) + ": COUNTEREXAMPLE");
      if (v == Verdict::config_present) ++present;
      if (v == Verdict::out_of_scope) ++out_of_scope;
    }
  }
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t seed = 4'500'000 + i;
    const int n = 3 + static_cast<int>(seed * 104729 % 58);
    const Graph g = gen::random_leafless(n, Rational(8, 3), seed);
    if (!(average_degree(g) < Rational(8, 3))) {
      r.fail(seed_label(seed) + ": average degree not below 8/3");
      continue;
    }
    for (RuleSetId id : {RuleSetId::r83_12, RuleSetId::r83_123}) {
      const Verdict v = check_unavoidability(g, rule_set(id), matching_catalog(id));
      if (v == Verdict::counterexample) r.fail(seed_label(seed) + " " + std::string(to_string(id)) + ": COUNTEREXAMPLE");
      if (v == Verdict::config_present) ++present;
      if (v == Verdict::out_of_scope) ++out_of_scope;
    }
  }
  int charged = 0;
  const auto cubic = gen::cubic_girth5_corpus(40, 40, 4242);
  for (const Graph& g : cubic) {
    const RuleSet rs = rule_set(RuleSetId::r52);
    const Verdict v = check_unavoidability(g, rs, StructuralCatalog::s52);
    if (v == Verdict::counterexample) r.fail("cubic corpus: COUNTEREXAMPLE");
    if (v == Verdict::config_free_and_charged) {
      ++charged;
      if (run(g, rs).min_final < Rational(5, 2)) r.fail("cubic corpus: min_final below 5/2");
    }
  }
  r.detail = std::to_string(present) + "/3000 config present, " + std::to_string(out_of_scope) + " out of scope, " +
             std::to_string(charged) + "/" + std::to_string(cubic.size()) + " cubic graphs config-free and charged" +
             (r.detail.empty() ? "" : "; " + r.detail);
  return r;
}

Result criterion5() {
  Result r;
  {
    const Graph star = gen::star(3);
    const auto rep = run(star, rule_set(RuleSetId::r83_123));
    if (rep.final_charge[1] != Rational(8, 3)) r.fail("R83_123 leaf final " + to_string(rep.final_charge[1]));
  }
  {
    Graph g = gen::star(4);  // pendant vertex on a 4-vertex
    const auto rep = run(g, rule_set(RuleSetId::r52));
    if (rep.final_charge[1] != Rational(5, 2)) r.fail("R52 leaf final " + to_string(rep.final_charge[1]));
  }
  {
    const Graph cp = gen::cubic_plus_pendants(gen::complete(4));
    for (RuleSetId id : {RuleSetId::r83_123, RuleSetId::r83_12}) {
      const auto rep = run(cp, rule_set(id));
      if (rep.final_charge[4] != Rational(8, 3)) r.fail(std::string(to_string(id)) + " pendant final");
    }
    const auto rep = run(cp, rule_set(RuleSetId::r52));
    if (rep.final_charge[4] != Rational(5, 2)) r.fail("R52 pendant on cubic");
  }
  int graphs = 0;
  auto conserve = [&](const Graph& g) {
    ++graphs;
    for (RuleSetId id : {RuleSetId::r52, RuleSetId::r83_12, RuleSetId::r83_123}) {
      const auto rep = run(g, rule_set(id));
      Rational sum = 0;
      for (const auto& c : rep.final_charge) sum += c;
      if (sum != Rational(2 * g.edge_count())) r.fail("conservation broken under " + std::string(to_string(id)));
    }
  };
  for (int i = 0; i < 1000; ++i) conserve(gen::random_mad(5 + (1'000'000 + i) * 7919 % 56, Rational(8, 3), 1'000'000 + i));
  for (int i = 0; i < 500; ++i) conserve(gen::random_mad(5 + (2'000'000 + i) * 7919 % 56, Rational(5, 2), 2'000'000 + i));
  for (int i = 0; i < 1000; ++i) conserve(gen::random_sparse(3 + (4'000'000 + i) * 104729 % 58, Rational(8, 3), 4'000'000 + i));
  for (const Graph& g : gen::cubic_girth5_corpus(40, 40, 4242)) conserve(g);
  r.detail = "anchors exact, conservation on " + std::to_string(graphs) + " graphs" + (r.detail.empty() ? "" : "; " + r.detail);
  return r;
}

Result criterion6() {
  Result r;
  int edge3 = 0, total2 = 0, cross = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : gen::connected_graphs(n)) {
      if (n == 2) {
        if (exists_proper(g, Mode::edge3)) r.fail("K2 reported weightable");
      } else {
        ++edge3;
        if (!exists_proper(g, Mode::edge3)) r.fail("no proper 3-weighting on a " + std::to_string(n) + "-vertex graph");
      }
      if (n <= 6) {
        ++total2;
        if (!exists_proper(g, Mode::total2)) r.fail("no proper total 2-weighting on a " + std::to_string(n) + "-vertex graph");
      }
      if (!mad_less_than(g, Rational(8, 3))) continue;
      for (Mode mode : {Mode::edge3, Mode::total2}) {
        if (mode == Mode::total2 && n > 6) continue;
        const SolveOutcome out = solve(g, mode, 83);
        if (out.status == SolveStatus::solved) {
          ++cross;
          if (!exists_proper(g, mode)) r.fail("solver solved a graph the oracle rejects");
        }
      }
    }
  }
  r.detail = std::to_string(edge3) + " graphs (123), " + std::to_string(total2) + " graphs (12), " +
             std::to_string(cross) + " solver cross-checks" + (r.detail.empty() ? "" : "; " + r.detail);
  return r;
}

Result criterion7() {
  Result r;
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t seed = 7'000'000 + i;
    std::mt19937_64 rng(seed);
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    Graph g(n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (std::bernoulli_distribution(p)(rng)) g.add_edge(a, b);
    const auto exact = mad_exact(g), brute = mad_brute_force(g);
    if (exact.value != brute.value)
      r.fail(seed_label(seed) + ": " + to_string(exact.value) + " vs " + to_string(brute.value));
  }
  const Graph cp = gen::cubic_plus_pendants(gen::complete(4));
  if (average_degree(cp) != Rational(5, 2)) r.fail("cubic plus pendants average degree " + to_string(average_degree(cp)));
  if (mad_exact(cp).value != Rational(3)) r.fail("cubic plus pendants Mad " + to_string(mad_exact(cp).value));
  r.detail = "200 random graphs, K4 plus pendants avg 5/2 Mad 3/1" + (r.detail.empty() ? "" : "; " + r.detail);
  return r;
}

Result criterion8() {
  Result r;
  int hosts = 0, extensions = 0;
  for (const ConfigKind& kind : all_reducible_kinds()) {
    const int variants = gen::host_variants(kind);
    if (variants < 3) r.fail(to_string(kind) + ": only " + std::to_string(variants) + " hosts");
    for (int v = 0; v < variants; ++v) {
      const Graph host = gen::config_host(kind, v);
      for (Mode mode : gen::replay_modes(kind)) {
        const std::string label = to_string(kind) + " host " + std::to_string(v) + " mode " + std::string(to_string(mode));
        const auto inst = detect_first(host, gen::host_catalog(kind, mode));
        if (!inst || !(inst->kind == kind)) {
          r.fail(label + ": detected " + (inst ? to_string(inst->kind) : std::string("nothing")));
          continue;
        }
        ++hosts;
        const Graph derived = host.delete_edges(inst->deleted_edges());
        if (mode == Mode::edge3 && has_isolated_edge(derived)) r.fail(label + ": derived graph has an isolated edge");
        const auto samples = sample_proper(derived, mode, 50, 8'000'000 + hosts);
        if (samples.empty()) r.fail(label + ": no proper weighting of the derived graph");
        for (const Weighting& wp : samples) {
          try {
            const Weighting w = extend(host, *inst, wp, mode);
            ++extensions;
            if (!is_proper(host, w)) r.fail(label + ": extension not proper");
          } catch (const std::exception& e) {
            r.fail(label + ": " + e.what());
          }
        }
      }
    }
  }
  r.detail = std::to_string(hosts) + " host replays, " + std::to_string(extensions) + " extensions" +
             (r.detail.empty() ? "" : "; " + r.detail);
  return r;
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Result()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  const std::vector<Criterion> all{
      {1, "solving at level 83", 60, criterion1},
      {2, "solving at level 52", 30, criterion2},
      {3, "non-reducible gadgets", 1, criterion3},
      {4, "unavoidability fuzz", 60, criterion4},
      {5, "discharge anchors and conservation", 60, criterion5},
      {6, "oracle equivalence on small graphs", 300, criterion6},
      {7, "Mad exactness", 30, criterion7},
      {8, "reducibility replay", 300, criterion8},
  };
  bool all_ok = true;
  for (const auto& c : all) {
    if (only && c.number != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool ok = r.ok && in_time;
    all_ok = all_ok && ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name << "): " << r.detail;
    if (r.failures > 5) line << " (+" << r.failures - 5 << " more failures)";
    line << " [" << secs << " s, limit " << c.limit_seconds << " s" << (in_time ? "" : ", too slow") << "]";
    std::cout << line.str() << std::endl;
  }
  return all_ok ? 0 : 1;
}
