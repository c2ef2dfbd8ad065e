#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/oracles.hpp"
#include "detour/catalog.hpp"
#include "detour/colouring.hpp"
#include "detour/construction.hpp"
#include "detour/isomorphism.hpp"

using namespace detour;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::BadParams;
}

SimpleGraph complete(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return build_simple(n, es);
}

MultiGraph c2xk2() { return named_graph("c2xk2").multigraph.value(); }
MultiGraph k4() { return to_multigraph(complete(4)); }
MultiGraph prism(int n) { return named_graph("prism", {n}).multigraph.value(); }

Block k1() { return require_block(complete(1), {}, BlockKind::HCTV, "complete(1)"); }
Block k2() { return require_block(complete(2), {0, 1}, BlockKind::HCTV, "complete(2)"); }
Block hctv(int n) { return require_block(complete(n), {0, 1}, BlockKind::HCTV, "complete(" + std::to_string(n) + ")"); }
Block net() { return catalog_block("net", {}, BlockKind::IType); }

Recipe recipe_two(const MultiGraph& base, int clique, const Block& insert) {
  Recipe r;
  r.variant = Variant::Two;
  r.base = base;
  r.clique_orders.assign(base.order(), clique);
  r.edge_blocks.assign(base.size(), insert);
  return r;
}

}  // namespace

TEST_CASE("inflation lands former edges on distinguished vertices") {
  Assembly a(k4());
  const Block b = net();
  a.inflate_vertex(0, b);
  CHECK(a.vertex_count() == 3 + 6);
  const auto g = a.finish();
  CHECK(g.order() == 9);
  CHECK(g.size() == 6 + 3 + 3);
  // the three leaves of the net now have degree 2, every other vertex keeps its degree
  int deg2 = 0;
  for (int v = 0; v < g.order(); ++v) deg2 += g.degree(v) == 2;
  CHECK(deg2 == 3);
  CHECK(g.max_degree() == 3);
}

TEST_CASE("clique inflation of a prism vertex keeps it cubic locally") {
  Assembly a(prism(3));
  a.inflate_clique(0, 3);
  const auto g = a.finish();
  CHECK(g.order() == 8);
  CHECK(g.min_degree() == 3);
  CHECK(g.max_degree() == 3);
  CHECK(code_of([&] { Assembly(prism(3)).inflate_clique(0, 2); }) == ErrorCode::BadMatching);
}

TEST_CASE("matching errors") {
  Assembly a(k4());
  CHECK(code_of([&] { a.inflate_vertex(0, net(), {0, 0, 1}); }) == ErrorCode::BadMatching);
  CHECK(code_of([&] { a.inflate_vertex(0, net(), {0, 1}); }) == ErrorCode::BadMatching);
  CHECK(code_of([&] { a.inflate_vertex(0, k2()); }) == ErrorCode::BadBlock);
  CHECK(code_of([&] { a.insert_on_edge(0, net()); }) == ErrorCode::BadBlock);
  Assembly b(k4());
  b.inflate_vertex(0, net(), {2, 0, 1});
  CHECK(b.finish().order() == 9);
}

TEST_CASE("insertions") {
  Assembly a(k4());
  a.insert_on_edge(0, k1());
  auto g = a.finish();
  CHECK(g.order() == 5);
  CHECK(g.size() == 7);
  CHECK(g.degree(4) == 2);
  Assembly b(k4());
  b.insert_on_edge(0, k2());
  g = b.finish();
  CHECK(g.order() == 6);
  CHECK(g.size() == 6 + 2);  // +1 internal, +2 attachments, -1 deleted
  Assembly c(c2xk2());
  for (int v = 0; v < 4; ++v) c.inflate_clique(v, 3);
  for (int e = 0; e < 6; ++e) c.insert_on_edge(e, k1());
  g = c.finish();
  CHECK(g.order() == 18);
  CHECK(g.size() == 24);
  // leftover parallel edges are rejected
  CHECK(code_of([&] { Assembly(c2xk2()).finish(); }) == ErrorCode::BadFormat);
}

TEST_CASE("Recipe Two: the two smallest CND graphs") {
  for (const auto& base : {k4(), c2xk2()}) {
    const auto rep = construct(recipe_two(base, 3, k1()));
    CHECK(rep.predicted.order == 18);
    CHECK(rep.predicted.size == 24);
    CHECK(rep.predicted.tau == 17);
    CHECK(rep.verification == Verification::Certified);
    CHECK(rep.confirmed);
    REQUIRE(rep.profile.has_value());
    CHECK(rep.profile->sequence.to_string() == "(17)x18");
    CHECK(cnd_necessary_conditions(rep.graph, *rep.profile).all_pass());
  }
  CHECK(is_isomorphic(construct(recipe_two(k4(), 3, k1())).graph, graph_a()).isomorphic);
  CHECK(is_isomorphic(construct(recipe_two(c2xk2(), 3, k1())).graph, graph_b()).isomorphic);
}

TEST_CASE("Recipe Two over the 3-prism with K2 insertions") {
  const auto rep = construct(recipe_two(prism(3), 3, k2()));
  CHECK(rep.graph.order() == 36);
  CHECK(rep.graph.size() == 45);
  CHECK(rep.base_trail == 7);
  CHECK(rep.predicted.tau == 36 - (9 - 7) * 2);
  CHECK(rep.verification == Verification::Witnessed);
  CHECK(rep.confirmed);
  REQUIRE(rep.witnesses.size() == 36u);
  for (int v = 0; v < 36; ++v) {
    CHECK(rep.witnesses[v].vertices.front() == v);
    CHECK(rep.witnesses[v].order() == rep.predicted.tau);
    CHECK(is_path_in(rep.graph, rep.witnesses[v].vertices));
  }
}

TEST_CASE("Recipe Three with complete R-type blocks matches Recipe Two") {
  Recipe r;
  r.variant = Variant::Three;
  r.base = k4();
  r.vertex_blocks.assign(4, require_block(complete(3), {0, 1, 2}, BlockKind::RType, "complete(3)"));
  r.edge_blocks.assign(6, k1());
  const auto rep = construct(r);
  CHECK(rep.confirmed);
  CHECK(is_isomorphic(rep.graph, graph_a()).isomorphic);
}

TEST_CASE("Recipe One with nets is certified") {
  Recipe r;
  r.variant = Variant::One;
  r.base = k4();
  r.vertex_blocks.assign(4, net());
  const auto rep = construct(r);
  CHECK(rep.graph.order() == 24);
  CHECK(rep.predicted.tau == 2 - 4 + 24);
  CHECK(rep.verification == Verification::Certified);
  CHECK(rep.confirmed);
  CHECK(cnd_necessary_conditions(rep.graph, *rep.profile).all_pass());
}

TEST_CASE("Recipe One over K4 with Petersen-minus-a-vertex blocks") {
  Recipe r;
  r.variant = Variant::One;
  r.base = k4();
  r.vertex_blocks.assign(4, catalog_block("pg_odot", {}, BlockKind::IType));
  const auto rep = construct(r);
  CHECK(rep.graph.order() == 36);
  CHECK(rep.graph.min_degree() == 3);
  CHECK(rep.graph.max_degree() == 3);
  CHECK(girth(rep.graph) == 5);
  CHECK(rep.predicted.tau == 34);
  CHECK(rep.confirmed);
}

TEST_CASE("Recipe Four over K4 with U-type blocks") {
  Recipe r;
  r.variant = Variant::Four;
  r.base = k4();
  r.vertex_blocks.assign(4, derive_utype(petersen(), 0));
  const auto rep = construct(r);
  CHECK(rep.graph.order() == 36);
  CHECK(rep.predicted.tau == 36 - 4 + 2);
  CHECK(rep.confirmed);
}

TEST_CASE("base and block errors") {
  std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  CHECK(code_of([&] { construct(recipe_two(build_multigraph(4, c4), 3, k1())); }) == ErrorCode::BadBase);
  Recipe one;
  one.variant = Variant::One;
  one.base = build_multigraph(4, c4);
  one.vertex_blocks.assign(4, net());
  CHECK(code_of([&] { construct(one); }) == ErrorCode::BadBase);
  one.base = k4();
  Block unverified = net();
  unverified.evidence = BlockEvidence::Unverified;
  one.vertex_blocks[1] = unverified;
  CHECK(code_of([&] { construct(one); }) == ErrorCode::BadBlock);
  one.vertex_blocks[1] = require_block(complete(3), {0, 1, 2}, BlockKind::RType);
  CHECK(code_of([&] { construct(one); }) == ErrorCode::BadBlock);
  one.vertex_blocks.pop_back();
  CHECK(code_of([&] { construct(one); }) == ErrorCode::BadParams);
  auto mixed = recipe_two(k4(), 3, k1());
  mixed.edge_blocks[2] = k2();
  CHECK(code_of([&] { construct(mixed); }) == ErrorCode::BadBlock);
  CHECK(code_of([&] { construct(recipe_two(k4(), 2, k1())); }) == ErrorCode::BadMatching);
}

TEST_CASE("Recipe F") {
  const Block go = g_odot();
  const auto rep = construct_f({go, go}, {k1(), k1()}, {SearchMode::certified()});
  CHECK(rep.confirmed);
  CHECK(rep.predicted.tau == 17);
  CHECK(is_isomorphic(rep.graph, graph_a()).isomorphic != is_isomorphic(rep.graph, graph_b()).isomorphic);

  // chromatic number c and deficiency d
  for (int c = 3; c <= 4; ++c) {
    const int d = 2;
    const auto f = construct_f(std::vector<Block>(d + 1, go), std::vector<Block>(d + 1, hctv(c)));
    CHECK(f.confirmed);
    CHECK(f.predicted.deficiency == d);
    CHECK(f.predicted.tau == 8 * (d + 1) + c * (d + 1) - d);
    CHECK(chromatic_number(f.graph) == c);
  }

  const Block bo = named_graph("b_odot").block.value();
  CHECK(bo.drop == 2);
  const auto two = construct_f({bo, bo}, {k2(), k2()}, {SearchMode::certified(), true});
  CHECK(two.graph.order() == 26);
  CHECK(two.confirmed);
  CHECK(two.profile->tau == 24);
  CHECK(structure_report(two.graph).bipartite);
  const auto three = construct_f({bo, bo, bo}, {k2(), k2(), k2()});
  CHECK(three.confirmed);
  CHECK(three.predicted.deficiency == 4);
  CHECK_FALSE(structure_report(three.graph).bipartite);
  const auto four = construct_f(std::vector<Block>(4, bo), std::vector<Block>(4, k2()));
  CHECK(four.confirmed);
  CHECK(four.predicted.deficiency == 6);
  CHECK(structure_report(four.graph).bipartite);

  CHECK(code_of([&] { construct_f({go}, {k1()}); }) == ErrorCode::BadParams);
  CHECK(code_of([&] { construct_f({go, go}, {k1()}); }) == ErrorCode::BadParams);
  CHECK(code_of([&] { construct_f({go, bo}, {k2(), k2()}); }) == ErrorCode::DropMismatch);
  CHECK(code_of([&] { construct_f({bo, bo}, {k1(), k1()}); }) == ErrorCode::BadBlock);
}

TEST_CASE("NHHT graph from the smallest inflator") {
  const auto h = nhht_from_inflator(g_odot());
  CHECK(h.order() == 9);
  CHECK(h.size() == 12);
  CHECK_FALSE(oracle::hamiltonian(h));
  for (int v = 0; v < 9; ++v) CHECK(oracle::tau_from(h, v) == 9);
}

TEST_CASE("necessary conditions checklist") {
  const auto a = graph_a();
  const auto p = detour_profile(a);
  const auto list = cnd_necessary_conditions(a, p);
  CHECK(list.all_pass());
  CHECK(list.items.size() >= 7u);
  // a cut vertex fails the first item
  const auto g = two_clique_graph(4, 4);
  const auto q = cnd_necessary_conditions(g, detour_profile(g));
  CHECK(q.items.front().name == "2-connected");
  CHECK(q.items.front().status == CheckStatus::Fail);
  CHECK(q.any_fail());
}

TEST_CASE("every small CND graph from the corpus of constructions passes the checklist") {
  const std::vector<SimpleGraph> graphs{graph_a(), graph_b(),
                                        construct_f({g_odot(), g_odot()}, {hctv(3), hctv(3)}).graph};
  for (const auto& g : graphs) {
    const auto r = is_cnd(g);
    REQUIRE(r.cnd);
    CHECK(cnd_necessary_conditions(g, r.profile).all_pass());
  }
}

TEST_CASE("MNT machinery") {
  const auto c5 = build_simple(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const auto k33 = named_graph("complete_multipartite", {3, 3}).graph.value();
  CHECK(mnt_degree2_closure(k33) == k33);
  CHECK(mnt_degree2_closure(c5).size() == 10);

  const auto as = mnt_degree2_closure(graph_a());
  CHECK(as.size() == 30);
  CHECK(is_mnt(as));
  CHECK(is_claw_free(as));
  CHECK(mnt_completion(graph_a()) == as);

  const auto bc = mnt_degree2_closure(graph_b());
  CHECK(is_claw_free(bc));
  CHECK_FALSE(is_mnt(bc));
  const auto bs = mnt_completion(graph_b());
  CHECK(bs.size() == 32);
  CHECK(is_mnt(bs));
  CHECK_FALSE(is_claw_free(bs));
  CHECK(code_of([&] { mnt_completion(c5); }) == ErrorCode::Refuted);

  for (int m = 1; m <= 2; ++m) {
    const auto g = claw_free_mnt_family(m);
    CHECK(g.order() == 18 + m);
    CHECK(is_claw_free(g));
    CHECK(structure_report(g).two_connected);
    CHECK(is_mnt(g));
    CHECK(is_1_tough(g));
  }
}

TEST_CASE("Recipe Two families meeting the size lower bound") {
  for (const auto& base : {k4(), c2xk2()}) {
    const auto rep = construct(recipe_two(base, 3, k2()));
    CHECK(rep.graph.order() == 24);
    CHECK(rep.graph.size() == 30);  // ceil(5 * 24 / 4)
    CHECK(rep.confirmed);
  }
  for (int n = 3; n <= 5; ++n) {
    const auto with_k2 = construct(recipe_two(prism(n), 3, k2()));
    CHECK(with_k2.graph.order() == 12 * n);
    CHECK(with_k2.graph.size() == 15 * n);
    CHECK(with_k2.predicted.deficiency == 2 * (n - 1));
    const auto with_k1 = construct(recipe_two(prism(n), 3, k1()));
    CHECK(with_k1.predicted.deficiency == n - 1);
    CHECK(with_k1.confirmed);
  }
}
