#include "detour/colouring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "kernels.hpp"

namespace detour {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

void check_exact_size(const SimpleGraph& g) {
  if (g.order() > kExactColouringLimit)
    throw Error(ErrorCode::TooLarge, "exact colouring limited to 12 vertices");
}

// Subset tables over all induced subgraphs of a small graph.
struct SubsetTables {
  std::vector<int> tau;     // tau of G[S]
  std::vector<char> free;   // tau(G[S]) <= n
};

SubsetTables subset_tables(const SimpleGraph& g, int n) {
  const int order = g.order();
  const std::uint32_t full = (1U << order) - 1;
  const auto ends = order > 0 ? kernel::hamiltonian_ends(g) : kernel::Table(1, 0);
  SubsetTables t;
  t.tau.assign(full + 1, 0);
  t.free.assign(full + 1, 1);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = ends[s] ? std::popcount(s) : 0;
    for (std::uint32_t b = s; b; b &= b - 1) best = std::max(best, t.tau[s & ~(b & (~b + 1))]);
    t.tau[s] = best;
    t.free[s] = best <= n;
  }
  return t;
}

// min number of free sets covering S, with the chosen partition recorded in `pick`.
int min_partition(const SubsetTables& t, std::uint32_t full, std::vector<std::uint32_t>* pick) {
  std::vector<int> cover(full + 1, 0);
  std::vector<std::uint32_t> choice(full + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s ^ low;
    int best = 1 << 20;
    // Submasks f of rest; class = f | low.
    for (std::uint32_t f = rest;; f = (f - 1) & rest) {
      const std::uint32_t cls = f | low;
      if (t.free[cls] && 1 + cover[s ^ cls] < best) {
        best = 1 + cover[s ^ cls];
        choice[s] = cls;
      }
      if (f == 0) break;
    }
    cover[s] = best;
  }
  if (pick) *pick = std::move(choice);
  return cover[full];
}

}  // namespace

std::vector<std::vector<int>> Colouring::classes() const {
  std::vector<std::vector<int>> out(colour_count);
  for (int v = 0; v < static_cast<int>(colour.size()); ++v) out[colour[v]].push_back(v);
  return out;
}

bool is_pnfree_set(const SimpleGraph& g, const VertexSet& w, int n, const SearchMode& mode) {
  w.for_each([&](int v) {
    if (v >= g.order()) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v));
  });
  if (w.size() <= n) return true;
  return detour_profile(induced_subgraph(g, w), mode).tau <= n;
}

bool is_valid_detour_colouring(const SimpleGraph& g, const Colouring& c, const SearchMode& mode) {
  if (static_cast<int>(c.colour.size()) != g.order()) return false;
  for (int x : c.colour)
    if (x < 0 || x >= c.colour_count) return false;
  for (const auto& cls : c.classes())
    if (!is_pnfree_set(g, VertexSet::of(cls), c.n, mode)) return false;
  return true;
}

Colouring greedy_detour_colouring(const SimpleGraph& g, int n, const SearchMode& mode) {
  if (n < 2) throw Error(ErrorCode::BadParams, "greedy detour colouring needs n >= 2");
  if (g.order() == 0) throw Error(ErrorCode::Empty, "empty graph");
  Colouring c;
  c.n = n;
  c.colour.assign(g.order(), -1);
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet m;
    left.for_each([&](int v) {
      VertexSet trial = m;
      trial.insert(v);
      if (is_pnfree_set(g, trial, n, mode)) m = trial;
    });
    m.for_each([&](int v) { c.colour[v] = c.colour_count; });
    ++c.colour_count;
    left -= m;
  }
  return c;
}

int chromatic_number(const SimpleGraph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> colour(n, -1);
  auto colourable = [&](auto&& self, int i, int k, int used) -> bool {
    if (i == n) return true;
    const int v = order[i];
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool clash = false;
      g.neighbours(v).for_each([&](int w) { clash = clash || colour[w] == c; });
      if (clash) continue;
      colour[v] = c;
      if (self(self, i + 1, k, std::max(used, c + 1))) return true;
      colour[v] = -1;
    }
    return false;
  };
  for (int k = 1;; ++k) {
    std::fill(colour.begin(), colour.end(), -1);
    if (colourable(colourable, 0, k, 0)) return k;
  }
}

int exact_detour_chromatic(const SimpleGraph& g, int n) { return exact_detour_colouring(g, n).colour_count; }

Colouring exact_detour_colouring(const SimpleGraph& g, int n) {
  check_exact_size(g);
  if (n < 1) throw Error(ErrorCode::BadParams, "detour colouring needs n >= 1");
  Colouring c;
  c.n = n;
  c.colour.assign(g.order(), -1);
  if (g.order() == 0) return c;
  const auto tables = subset_tables(g, n);
  const std::uint32_t full = (1U << g.order()) - 1;
  std::vector<std::uint32_t> pick;
  c.colour_count = min_partition(tables, full, &pick);
  int colour = 0;
  for (std::uint32_t s = full; s; ++colour) {
    const std::uint32_t cls = pick[s];
    for (std::uint32_t b = cls; b; b &= b - 1) c.colour[std::countr_zero(b)] = colour;
    s ^= cls;
  }
  return c;
}

int improved_colour_bound(int tau, int n) {
  if (n > tau) return 1;
  return ceil_div(tau - n, ceil_div(2 * n + 2, 3)) + 1;
}

int halving_colour_bound(int tau, int n) { return (tau - n - 1) / 2 + 2; }

ColouringTheoremReport verify_colouring_theorems(const SimpleGraph& g, int n) {
  check_exact_size(g);
  if (n < 1) throw Error(ErrorCode::BadParams, "n must be positive");
  ColouringTheoremReport r;
  r.n = n;
  if (g.order() == 0) return r;
  const auto tables = subset_tables(g, n);
  const std::uint32_t full = (1U << g.order()) - 1;
  r.tau = tables.tau[full];
  r.chi = min_partition(tables, full, nullptr);
  if (n >= 2 && n <= r.tau - 1) {
    r.halving_bound = halving_colour_bound(r.tau, n);
    r.halving_ok = r.chi <= *r.halving_bound;
  }
  if (n >= 2) {
    r.improved_bound = improved_colour_bound(r.tau, n);
    r.improved_ok = r.chi <= *r.improved_bound;
  }
  if (n >= 2 && n <= r.tau) {
    r.residual_checked = true;
    r.residual_limit = r.tau - ceil_div(2 * n + 2, 3);
    for (std::uint32_t m = 0; m <= full; ++m) {
      if (!tables.free[m]) continue;
      bool maximal = true;
      for (std::uint32_t out = full & ~m; out && maximal; out &= out - 1)
        if (tables.free[m | (out & (~out + 1))]) maximal = false;
      if (!maximal) continue;
      ++r.maximal_sets;
      const int residual = tables.tau[full & ~m];
      r.worst_residual = std::max(r.worst_residual, residual);
      if (residual > r.residual_limit && r.residual_ok) {
        r.residual_ok = false;
        for (std::uint32_t b = m; b; b &= b - 1) r.residual_counterexample.push_back(std::countr_zero(b));
      }
    }
  }
  return r;
}

}  // namespace detour
