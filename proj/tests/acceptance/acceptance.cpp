// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "../support/oracles.hpp"
#include "detour/catalog.hpp"
#include "detour/colouring.hpp"
#include "detour/construction.hpp"
#include "detour/isomorphism.hpp"
#include "detour/sequence.hpp"

using namespace detour;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;
};

// Collects failed checks with a short description of each.
struct Checker {
  Outcome out;
  int failures = 0;
  void operator()(bool ok, const std::string& what) {
    if (ok) return;
    out.pass = false;
    if (++failures <= 5) out.detail += (out.detail.empty() ? "" : "; ") + what;
  }
};

DetourSequence brute(const SimpleGraph& g) { return DetourSequence(oracle::sorted_sequence(g)); }

SimpleGraph complete(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return build_simple(n, es);
}

SimpleGraph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return build_simple(n, es);
}

Block k1() { return catalog_block("complete", {1}, BlockKind::HCTV); }
Block k2() { return catalog_block("complete", {2}, BlockKind::HCTV); }

Recipe recipe_two(const MultiGraph& base, int clique, const Block& insert) {
  Recipe r;
  r.variant = Variant::Two;
  r.base = base;
  r.clique_orders.assign(base.order(), clique);
  r.edge_blocks.assign(base.size(), insert);
  return r;
}

std::string str(int v) { return std::to_string(v); }

// 1 ---------------------------------------------------------------------------------------
Outcome smallest_cnd() {
  Checker c;
  const std::pair<const char*, MultiGraph> bases[] = {{"A", to_multigraph(complete(4))},
                                                      {"B", named_graph("c2xk2").multigraph.value()}};
  for (const auto& [name, base] : bases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto g = assemble(recipe_two(base, 3, k1()));
    const std::string id = std::string("graph ") + name;
    c(g.order() == 18 && g.size() == 24, id + " order/size " + str(g.order()) + "/" + str(g.size()));
    SearchMode dp;  // certified: order 18 is within the subset-DP limit
    const auto p = detour_profile(g, dp);
    c(p.exact && p.tau == 17, id + " tau " + str(p.tau));
    c(p.sequence == DetourSequence::parse("(17)x18"), id + " sequence " + p.sequence.to_string());
    c(p.deficiency == 1, id + " deficiency");
    c(is_cnd(g, dp).cnd, id + " not CND");
    const auto r = structure_report(g);
    c(r.claw_free, id + " not claw-free");
    c(r.two_connected, id + " not 2-connected");
    c(is_isomorphic(g, std::string(name) == "A" ? graph_a() : graph_b()).isomorphic, id + " differs from catalog");
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c(s < 60.0, id + " took " + std::to_string(s) + " s");
    c.out.notes.push_back(id + ": " + to_graph6(g) + ", " + std::to_string(s) + " s");
  }
  return c.out;
}

// 2 ---------------------------------------------------------------------------------------
Outcome worked_example() {
  Checker c;
  const UnicyclicSpec spec{8, {{2, 4}, {5, 3}, {7, 7}}};
  const auto r = unicyclic_sequence(spec);
  c(r.cycle_orders == std::vector<int>{15, 14, 13, 12, 13, 14, 15, 10}, "cycle orders");
  c(r.sequence == DetourSequence::parse("10,11,(12)x2,(13)x3,(14)x4,(15)x5,(16)x3,(17)x3"),
    "sequence " + r.sequence.to_string());
  const auto g = build_path_unicyclic(spec);
  c(g.order() == 22, "order " + str(g.order()));
  c(r.per_vertex == oracle::per_vertex(g), "per-vertex orders differ from brute force");
  c(r.sequence == brute(g), "sequence differs from brute force");
  return c.out;
}

// 3 ---------------------------------------------------------------------------------------
Outcome closed_forms() {
  Checker c;
  for (int n = 1; n <= 12; ++n) c(path_sequence(n) == brute(path_graph(n)), "path " + str(n));
  int gnm = 0;
  for (int n = 2; n <= 6; ++n)
    for (int m = 2; m <= n; ++m, ++gnm)
      c(two_clique_sequence(n, m) == brute(two_clique_graph(n, m)), "G_{" + str(n) + "," + str(m) + "}");
  int partitions = 0;
  std::function<void(std::vector<int>&, int, int)> rec = [&](std::vector<int>& parts, int left, int cap) {
    if (left == 0) {
      if (parts.size() < 2) return;
      ++partitions;
      const auto g = named_graph("complete_multipartite", parts).graph.value();
      std::string id = "K(";
      for (int p : parts) id += str(p) + ",";
      id.back() = ')';
      c(multipartite_sequence(parts) == brute(g), id);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      parts.push_back(p);
      rec(parts, left - p, p);
      parts.pop_back();
    }
  };
  for (int n = 2; n <= 10; ++n) {
    std::vector<int> parts;
    rec(parts, n, n);
  }
  c.out.notes.push_back("12 paths, " + str(gnm) + " two-clique graphs, " + str(partitions) + " multipartite graphs");
  return c.out;
}

// 4 ---------------------------------------------------------------------------------------
Outcome tree_round_trip() {
  Checker c;
  std::mt19937_64 rng(4004);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 12)(rng);
    DetourSequence d;
    if (m == 1) {
      d = DetourSequence::parse("1");
    } else if (m == 2) {
      d = DetourSequence::parse("2,2");
    } else {
      const int a = (m + 2) / 2;
      std::vector<Run> runs{{a, m % 2 == 1 ? 1 : 2}};
      for (int v = a + 1; v <= m; ++v) runs.push_back({v, std::uniform_int_distribution<int>(2, 5)(rng)});
      d = DetourSequence::from_runs(runs);
    }
    c(is_tree_sequence(d), "generated " + d.to_string() + " rejected");
    const auto t = realize_tree(d);
    c(t.size() + 1 == t.order() && is_connected(t), "not a tree for " + d.to_string());
    c(brute(t) == d, "round trip " + d.to_string());
  }
  return c.out;
}

// 5 ---------------------------------------------------------------------------------------
Outcome unicyclic_fullness() {
  Checker c;
  std::mt19937_64 rng(5005);
  for (int trial = 0; trial < 100; ++trial) {
    const int len = std::uniform_int_distribution<int>(3, 8)(rng);
    std::vector<Edge> es;
    for (int i = 0; i < len; ++i) es.push_back({i, (i + 1) % len});
    int n = len;
    const int trees = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int t = 0; t < trees; ++t) {
      const int at = std::uniform_int_distribution<int>(0, len - 1)(rng);
      const int size = std::uniform_int_distribution<int>(1, 8)(rng);
      const int root = n;
      es.push_back({at, root});
      for (int k = 1; k < size; ++k) es.push_back({root + std::uniform_int_distribution<int>(0, k - 1)(rng), root + k});
      n += size;
    }
    const auto g = build_simple(n, es);
    c(g.size() == g.order() && is_connected(g), "generator produced a non-unicyclic graph");
    const auto d = brute(g);
    c(d.full(), "sequence " + d.to_string() + " not full");
  }
  return c.out;
}

// 6 ---------------------------------------------------------------------------------------
Outcome block_verifications() {
  Checker c;
  const auto net = named_graph("net");
  c(verify_block(*net.graph, {3, 4, 5}, BlockKind::IType).ok(), "net not I-type");
  const auto pg = named_graph("pg_odot");
  c(verify_block(*pg.graph, pg.block->distinguished, BlockKind::IType).ok(), "PG-odot not I-type");
  c(is_admissible(to_multigraph(complete(4))).admissible, "K4 not admissible");
  c(is_admissible(named_graph("c2xk2").multigraph.value()).admissible, "C2xK2 not admissible");
  c(is_admissible(named_graph("prism", {3}).multigraph.value()).admissible, "C3xK2 not admissible");
  c(is_admissible(named_graph("prism", {4}).multigraph.value()).admissible, "C4xK2 not admissible");
  c(is_presentable(to_multigraph(complete(4))).presentable, "K4 not presentable");
  c(is_presentable(to_multigraph(petersen())).presentable, "Petersen not presentable");
  const Block go = g_odot();
  const auto v = verify_block(go.graph, go.distinguished, BlockKind::Inflator);
  c(v.ok() && v.block->drop == 1, "G-odot not an inflator of drop 1");
  const auto h = nhht_from_inflator(go);
  c(h.order() == 9 && h.size() == 12, "NHHT order/size " + str(h.order()) + "/" + str(h.size()));
  c(!oracle::hamiltonian(h), "NHHT graph is hamiltonian");
  bool ht = true;
  for (int x = 0; x < h.order(); ++x) ht &= oracle::tau_from(h, x) == h.order();
  c(ht, "NHHT graph not homogeneously traceable");
  c.out.notes.push_back("G-odot " + to_graph6(go.graph) + " D={" + str(go.distinguished[0]) + "," +
                        str(go.distinguished[1]) + "}, NHHT " + to_graph6(h));
  return c.out;
}

// 7 ---------------------------------------------------------------------------------------
Outcome f_two_g_odot() {
  Checker c;
  const Block go = g_odot();
  const auto rep = construct_f({go, go}, {k1(), k1()}, {SearchMode::certified()});
  c(rep.confirmed, "F(2, G-odot, K1) not confirmed");
  const bool a = is_isomorphic(rep.graph, graph_a()).isomorphic;
  const bool b = is_isomorphic(rep.graph, graph_b()).isomorphic;
  c(a != b, std::string("isomorphic to A: ") + (a ? "yes" : "no") + ", to B: " + (b ? "yes" : "no"));
  c.out.notes.push_back(std::string("F(2, G-odot, K1) is isomorphic to graph ") + (a ? "A" : "B"));
  return c.out;
}

// 8 ---------------------------------------------------------------------------------------
Outcome construction_predictions() {
  Checker c;
  const auto prism = named_graph("prism", {3}).multigraph.value();
  const auto two = construct(recipe_two(prism, 3, k2()));
  c(two.graph.order() == 36 && two.graph.size() == 45,
    "Recipe Two order/size " + str(two.graph.order()) + "/" + str(two.graph.size()));
  c(two.base_trail == 7, "t(C3xK2) = " + str(two.base_trail));
  c(two.predicted.tau == 36 - (9 - 7) * 2, "Recipe Two prediction " + str(two.predicted.tau));
  c(two.verification == Verification::Witnessed && two.witnesses.size() == 36u, "Recipe Two not witnessed per vertex");
  bool from_every = two.witnesses.size() == 36u;
  for (int v = 0; v < 36 && from_every; ++v) {
    const auto& w = two.witnesses[v].vertices;
    from_every = w.front() == v && is_path_in(two.graph, w) && static_cast<int>(w.size()) >= 30;
  }
  c(from_every, "missing a witnessed path of order >= 30");
  // exhaustive certification is opt-in (certify) and fast here thanks to the block bound
  ConstructOptions exhaustive;
  exhaustive.certify = true;
  const auto cert = construct(recipe_two(prism, 3, k2()), exhaustive);
  c(cert.confirmed && cert.profile && cert.profile->tau == 32 && cert.profile->sequence.constant(),
    "exhaustive certification disagrees with the prediction");

  Recipe one;
  one.variant = Variant::One;
  one.base = to_multigraph(complete(4));
  one.vertex_blocks.assign(4, catalog_block("pg_odot", {}, BlockKind::IType));
  const auto o = construct(one);
  c(o.graph.order() == 36, "Recipe One order " + str(o.graph.order()));
  c(o.graph.min_degree() == 3 && o.graph.max_degree() == 3, "Recipe One not cubic");
  c(girth(o.graph) == 5, "Recipe One girth");
  c(o.predicted.tau == 34, "Recipe One prediction " + str(o.predicted.tau));
  bool ok = o.witnesses.size() == 36u;
  for (int v = 0; v < 36 && ok; ++v)
    ok = o.witnesses[v].vertices.front() == v && o.witnesses[v].order() == 34 && is_path_in(o.graph, o.witnesses[v].vertices);
  c(ok && o.confirmed, "Recipe One witnesses");
  c.out.notes.push_back("Recipe Two over C3xK2: t = 7 so |E| - t = 2 and tau = 36 - 2*2 = 32 (certified exactly, "
                        "sequence (32)x36); the criterion text's 36 - 3*2 = 30 takes |E| - t = 3. Every vertex has "
                        "a witnessed path of order 32 >= 30.");
  c.out.detail = c.out.pass ? "predicted tau 32 (criterion text: 30, see note), 34" : c.out.detail;
  return c.out;
}

// 9 ---------------------------------------------------------------------------------------
Outcome colouring_bounds() {
  Checker c;
  long graphs = 0, pairs = 0, sets = 0;
  for (int order = 1; order <= 8; ++order) {
    for (const auto& g : enumerate_graphs(order)) {
      if (!is_connected(g)) continue;
      ++graphs;
      const int tau = oracle::tau(g);
      for (int n = 2; n <= tau; ++n) {
        const auto r = verify_colouring_theorems(g, n);
        ++pairs;
        sets += r.maximal_sets;
        c(r.all_ok(), to_graph6(g) + " n=" + str(n));
        if (n <= tau - 1) c(r.halving_bound.has_value() && r.improved_bound.has_value(), "bounds not evaluated");
        c(r.residual_checked, "residual not checked " + to_graph6(g));
      }
    }
  }
  c.out.notes.push_back(std::to_string(graphs) + " connected graphs, " + std::to_string(pairs) + " (graph, n) pairs, " +
                        std::to_string(sets) + " maximal P_{n+1}-free sets");
  return c.out;
}

// 10 --------------------------------------------------------------------------------------
Outcome small_cnd_search() {
  Checker c;
  CndSearch q;
  q.max_order = 7;
  const auto r = search_small_cnd(q);
  c(r.found.empty(), str(static_cast<int>(r.found.size())) + " CND graphs at order <= 7");
  for (int n = 1; n <= 6; ++n) {
    CndSearch p;
    p.max_order = n;
    const auto pruned = search_small_cnd(p);
    p.prune = false;
    const auto full = search_small_cnd(p);
    c(pruned.found.size() == full.found.size(), "pruning changed the result at order " + str(n));
    c(full.tested == full.labelled_graphs, "unpruned run skipped graphs");
  }
  c.out.notes.push_back(std::to_string(r.labelled_graphs) + " labelled graphs, " + std::to_string(r.tested) +
                        " tested after pruning");
  return c.out;
}

// 11 --------------------------------------------------------------------------------------
Outcome mnt_suite() {
  Checker c;
  const auto as = mnt_degree2_closure(graph_a());
  c(is_mnt(as), "A* not MNT");
  c(is_claw_free(as), "A* not claw-free");
  c(is_isomorphic(as, *named_graph("graph_A_star").graph).isomorphic, "A* differs from catalog");
  const auto bc = mnt_degree2_closure(graph_b());
  const auto bs = mnt_completion(graph_b());
  c(is_mnt(bs), "B* not MNT");
  c(!is_claw_free(bs), "B* claw-free");
  for (int m = 1; m <= 2; ++m) {
    const auto g = claw_free_mnt_family(m);
    c(g.order() == 18 + m, "family order");
    c(is_claw_free(g), "family m=" + str(m) + " not claw-free");
    c(structure_report(g).two_connected, "family m=" + str(m) + " not 2-connected");
    c(is_mnt(g), "family m=" + str(m) + " not MNT");
  }
  c.out.notes.push_back("single-pass closure of B: size " + str(bc.size()) + ", claw-free " +
                        (is_claw_free(bc) ? "yes" : "no") + ", MNT " + (is_mnt(bc) ? "yes" : "no") +
                        "; B* is its unique MNT completion (size " + str(bs.size()) + ")");
  return c.out;
}

// 12 --------------------------------------------------------------------------------------
Outcome invariant_corpus() {
  Checker c;
  std::mt19937_64 rng(12012);
  SearchMode bnb;
  bnb.certified_limit = 0;
  bnb.override_limit = true;
  int cnd_seen = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 16)(rng);
    const double p = std::uniform_real_distribution<double>(0.05, 0.45)(rng);
    const auto g = oracle::random_connected_graph(rng, n, p);
    const std::string id = to_graph6(g);
    const auto prof = detour_profile(g);
    const int tau = prof.tau;
    const auto rep = analyze_sequence(prof.sequence, n, tau);
    c(rep.min_term_bound, id + " min term");
    c(rep.distinct_bound, id + " distinct terms");
    c(rep.gap_bound, id + " gap");
    c(rep.repetition_bound, id + " repetition length");
    const bool is_path = g.size() + 1 == n && g.max_degree() <= 2;
    if (!is_path) c(rep.longest_repetition >= 3, id + " no repetition of length 3");
    c(tau >= 1 + std::min(n - 1, 2 * g.min_degree()), id + " Kapoor bound");
    c(detour_profile(g, bnb).per_vertex == prof.per_vertex, id + " DP and branch-and-bound disagree");
    // edge monotonicity on one random non-edge
    std::vector<Edge> non;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.adjacent(u, v)) non.push_back({u, v});
    if (!non.empty()) {
      const auto e = non[std::uniform_int_distribution<std::size_t>(0, non.size() - 1)(rng)];
      const auto q = detour_profile(add_edge(g, e.first, e.second));
      bool mono = true;
      for (int v = 0; v < n; ++v) mono &= q.per_vertex[v] >= prof.per_vertex[v];
      c(mono, id + " edge monotonicity");
    }
    for (int k = 2; k <= std::min(tau, 6); ++k) {
      const auto col = greedy_detour_colouring(g, k);
      c(is_valid_detour_colouring(g, col), id + " colouring n=" + str(k));
      c(col.colour_count <= improved_colour_bound(tau, k), id + " greedy above bound n=" + str(k));
    }
    const auto cnd = is_cnd(g);
    if (cnd.cnd) {
      ++cnd_seen;
      c(cnd_necessary_conditions(g, cnd.profile).all_pass(), id + " CND graph fails necessary conditions");
    }
  }
  // the random corpus contains no CND graph, so the checklist also runs on constructed ones
  std::vector<SimpleGraph> constructed{graph_a(), graph_b()};
  const Block go = g_odot();
  constructed.push_back(construct_f({go, go}, {catalog_block("complete", {3}, BlockKind::HCTV),
                                               catalog_block("complete", {3}, BlockKind::HCTV)}).graph);
  constructed.push_back(construct_f({go, go, go}, {k1(), k1(), k1()}).graph);
  for (const auto& g : constructed) {
    const auto r = is_cnd(g, SearchMode::exhaustive());
    c(r.cnd, to_graph6(g) + " construction not CND");
    c(cnd_necessary_conditions(g, r.profile).all_pass(), to_graph6(g) + " fails necessary conditions");
  }
  c.out.notes.push_back("500 random connected graphs (" + str(cnd_seen) + " CND) plus " +
                        str(static_cast<int>(constructed.size())) + " constructed CND graphs");
  return c.out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "graphs A and B: order 18, size 24, tau 17, (17)x18, CND, claw-free, 2-connected", 120, smallest_cnd},
      {2, "unicyclic worked example", 30, worked_example},
      {3, "closed-form sequences equal brute force", 300, closed_forms},
      {4, "tree sequence round trip (100)", 120, tree_round_trip},
      {5, "random unicyclic graphs have full sequences (100)", 300, unicyclic_fullness},
      {6, "block verifications", 300, block_verifications},
      {7, "F(2, G-odot, K1) matches exactly one of A, B", 30, f_two_g_odot},
      {8, "construction predictions (C3xK2 Recipe Two, K4 Recipe One)", 600, construction_predictions},
      {9, "colouring bounds on all connected graphs of order <= 8", 900, colouring_bounds},
      {10, "no CND graph of order <= 7; pruning lossless to order 6", 900, small_cnd_search},
      {11, "MNT suite", 600, mnt_suite},
      {12, "invariant suites on a 500-graph corpus", 900, invariant_corpus},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > cr.limit_seconds) {
      o.pass = false;
      o.detail += (o.detail.empty() ? "" : "; ") + std::string("over the time limit");
    }
    failed += !o.pass;
    std::printf("%s criterion %2d  %-80s %8.2f s / %4.0f s%s%s\n", o.pass ? "PASS" : "FAIL", cr.id, cr.name, s,
                cr.limit_seconds, o.detail.empty() ? "" : "  ", o.detail.c_str());
    for (const auto& n : o.notes) std::printf("      %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
