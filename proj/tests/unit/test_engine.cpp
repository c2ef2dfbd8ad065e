#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/oracles.hpp"
#include "detour/catalog.hpp"
#include "detour/engine.hpp"

using namespace detour;

namespace {

// Branch-and-bound only: a limit of 0 sends every certified call past the DP.
SearchMode bnb() {
  SearchMode m;
  m.certified_limit = 0;
  m.override_limit = true;
  return m;
}

SimpleGraph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return build_simple(n, es);
}

bool tough_oracle(const SimpleGraph& g) {
  const int n = g.order();
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!(s >> v & 1)) rest.push_back(v);
    if (rest.empty()) continue;
    const auto h = induced_subgraph(g, rest);
    int comps = 0;
    std::vector<char> seen(h.order(), 0);
    const auto a = oracle::adjacency(h);
    for (int r = 0; r < h.order(); ++r) {
      if (seen[r]) continue;
      ++comps;
      std::vector<int> st{r};
      seen[r] = 1;
      while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : a[v])
          if (!seen[w]) seen[w] = 1, st.push_back(w);
      }
    }
    if (comps > __builtin_popcount(s)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("per-vertex detour orders match the brute-force oracle") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 11)(rng);
    const auto g = oracle::random_connected_graph(rng, n, std::uniform_real_distribution<double>(0, 0.5)(rng));
    const auto p = detour_profile(g);
    CHECK(p.exact);
    CHECK(p.per_vertex == oracle::per_vertex(g));
    CHECK(p.tau == oracle::tau(g));
    CHECK(p.deficiency == n - p.tau);
    CHECK(p.sequence.terms() == oracle::sorted_sequence(g));
  }
}

TEST_CASE("subset DP and branch-and-bound agree") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 16)(rng);
    const auto g = oracle::random_connected_graph(rng, n, std::uniform_real_distribution<double>(0, 0.35)(rng));
    const auto dp = detour_profile(g);
    const auto bb = detour_profile(g, bnb());
    CHECK(dp.per_vertex == bb.per_vertex);
    CHECK(bb.exact);
  }
}

TEST_CASE("witnesses are valid and lexicographically least") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    const auto g = oracle::random_connected_graph(rng, n, 0.3);
    const auto p = detour_profile(g, {}, true);
    REQUIRE(p.witnesses.size() == static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      CHECK(is_path_in(g, p.witnesses[v].vertices));
      CHECK(p.witnesses[v].vertices.front() == v);
      CHECK(p.witnesses[v].vertices == oracle::lex_least_longest(g, v));
      CHECK(longest_path_from(g, v, bnb()).witness.vertices == oracle::lex_least_longest(g, v));
    }
  }
}

TEST_CASE("tau between two vertices and the maximum over pairs") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    const auto g = oracle::random_connected_graph(rng, n, 0.3);
    int best = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const int t = longest_path_between(g, u, v);
        CHECK(t == oracle::tau_between(g, u, v));
        CHECK(longest_path_between(g, u, v, bnb()) == t);
        best = std::max(best, t);
      }
    CHECK(best == oracle::tau(g));
  }
}

TEST_CASE("find_path_of_order returns paths of at least the target") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const auto g = oracle::random_connected_graph(rng, n, 0.25);
    for (int v = 0; v < n; ++v) {
      const int t = oracle::tau_from(g, v);
      const auto w = find_path_of_order(g, v, t, 0);
      REQUIRE(w.has_value());
      CHECK(is_path_in(g, w->vertices));
      CHECK(w->order() >= t);
      CHECK_FALSE(find_path_of_order(g, v, t + 1, 0).has_value());
    }
  }
}

TEST_CASE("circumference, traceability and hamiltonicity") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const auto g = oracle::random_connected_graph(rng, n, 0.3);
    CHECK(circumference(g) == oracle::circumference(g));
    CHECK(is_traceable(g) == oracle::traceable(g));
    CHECK(is_hamiltonian(g) == oracle::hamiltonian(g));
    const auto p = detour_profile(g);
    const auto t = traceability_suite(g);
    CHECK(t.traceable == (p.deficiency == 0));
    CHECK(t.homogeneously_traceable == (p.sequence.constant() && p.deficiency == 0));
  }
  CHECK(is_hamiltonian(build_simple(2, {{0, 1}})));
  CHECK(circumference(build_simple(2, {{0, 1}})) == 0);
  CHECK(circumference(cycle(9)) == 9);
}

TEST_CASE("disconnected input is flagged, not rejected") {
  const auto g = build_simple(5, {{0, 1}, {1, 2}, {3, 4}});
  const auto p = detour_profile(g);
  CHECK(p.disconnected);
  CHECK(p.per_vertex == std::vector<int>{3, 2, 3, 2, 2});
  CHECK_FALSE(is_cnd(g).cnd);
}

TEST_CASE("certified mode refuses large graphs without the override") {
  SearchMode m;
  m.certified_limit = 8;
  const auto g = cycle(10);
  CHECK_THROWS_AS(detour_profile(g, m), Error);
  m.override_limit = true;
  CHECK(detour_profile(g, m).tau == 10);
  const auto w = detour_profile(g, [] {
    auto s = SearchMode::witnessed();
    s.certified_limit = 8;
    return s;
  }());
  CHECK(w.tau == 10);
}

TEST_CASE("CND and MNT against definitions") {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    const auto g = oracle::random_connected_graph(rng, n, 0.2);
    bool mnt = !oracle::traceable(g);
    for (int u = 0; u < n && mnt; ++u)
      for (int v = u + 1; v < n && mnt; ++v)
        if (!g.adjacent(u, v) && !oracle::traceable(add_edge(g, u, v))) mnt = false;
    CHECK(is_mnt(g) == mnt);
    const auto s = oracle::sorted_sequence(g);
    CHECK(is_cnd(g).cnd == (!oracle::traceable(g) && s.front() == s.back()));
  }
  CHECK(is_cnd(graph_a()).cnd);
}

TEST_CASE("hypohamiltonicity and toughness") {
  const auto p = petersen();
  const auto h = hypohamiltonicity_suite(p);
  CHECK(h.hypohamiltonian);
  CHECK(h.maximal_hypohamiltonian);
  CHECK_FALSE(hypohamiltonicity_suite(cycle(6)).hypohamiltonian);
  CHECK(is_1_tough(p));
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const auto g = oracle::random_connected_graph(rng, n, 0.3);
    CHECK(is_1_tough(g) == tough_oracle(g));
  }
}

TEST_CASE("longest trails against the oracle") {
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    const int m = std::uniform_int_distribution<int>(0, 9)(rng);
    std::vector<Edge> es;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < m; ++i) es.push_back({pick(rng), pick(rng)});
    const auto mg = build_multigraph(n, es);
    const auto t = longest_trail(mg);
    CHECK(t.length == oracle::longest_trail(n, es));
    CHECK(is_trail_in(mg, t.witness));
  }
  const auto c2k2 = build_multigraph(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}});
  CHECK(longest_trail(c2k2).length == 5);
  CHECK(longest_trail(to_multigraph(cycle(3))).length == 3);
  const auto k2 = build_simple(2, {{0, 1}});
  CHECK(longest_trail(to_multigraph(cartesian_product(cycle(3), k2))).length == 7);
}

TEST_CASE("admissible and presentable bases") {
  const auto k2 = build_simple(2, {{0, 1}});
  const auto k4 = to_multigraph(build_simple(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  const auto c2k2 = build_multigraph(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}});
  CHECK(is_admissible(k4).admissible);
  CHECK(is_admissible(c2k2).admissible);
  for (int n = 3; n <= 4; ++n) {
    const auto r = is_admissible(to_multigraph(cartesian_product(cycle(n), k2)));
    CHECK(r.admissible);
    CHECK(r.longest_trail == 2 * n + 1);
    for (const auto& [inc, trail] : r.certificate) {
      CHECK(trail.vertices.front() == inc.vertex);
      CHECK(trail.edges.front() == inc.edge);
    }
  }
  CHECK_FALSE(is_admissible(to_multigraph(cycle(4))).admissible);
  CHECK(is_presentable(k4).presentable);
  CHECK(is_presentable(to_multigraph(petersen())).presentable);
  CHECK_FALSE(is_presentable(to_multigraph(cycle(3))).presentable);
}

TEST_CASE("Kapoor bound and edge monotonicity") {
  std::mt19937_64 rng(1010);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 12)(rng);
    const auto g = oracle::random_connected_graph(rng, n, 0.3);
    const auto p = detour_profile(g);
    int delta = n;
    for (int v = 0; v < n; ++v) delta = std::min(delta, g.degree(v));
    CHECK(p.tau >= 1 + std::min(n - 1, 2 * delta));
    std::vector<Edge> non;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.adjacent(u, v)) non.push_back({u, v});
    if (non.empty()) continue;
    const auto e = non[std::uniform_int_distribution<std::size_t>(0, non.size() - 1)(rng)];
    const auto q = detour_profile(add_edge(g, e.first, e.second));
    for (int v = 0; v < n; ++v) CHECK(q.per_vertex[v] >= p.per_vertex[v]);
  }
}
