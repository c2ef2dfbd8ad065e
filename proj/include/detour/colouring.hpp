#pragma once

#include <optional>
#include <vector>

#include "detour/engine.hpp"

namespace detour {

// Vertex colouring in which every colour class induces a subgraph of detour order <= n.
struct Colouring {
  std::vector<int> colour;
  int n = 0;
  int colour_count = 0;
  std::vector<std::vector<int>> classes() const;
};

inline constexpr int kExactColouringLimit = 12;

bool is_pnfree_set(const SimpleGraph& g, const VertexSet& w, int n, const SearchMode& mode = {});
bool is_valid_detour_colouring(const SimpleGraph& g, const Colouring& c, const SearchMode& mode = {});

// Peels maximal P_{n+1}-free sets, each grown in ascending vertex order.
Colouring greedy_detour_colouring(const SimpleGraph& g, int n, const SearchMode& mode = {});

// Ordinary chromatic number by backtracking (independent of the detour machinery).
int chromatic_number(const SimpleGraph& g);

// Exact minimum number of P_{n+1}-free classes; requires order <= 12.
int exact_detour_chromatic(const SimpleGraph& g, int n);
Colouring exact_detour_colouring(const SimpleGraph& g, int n);

// ceil((tau - n) / ceil((2n + 2) / 3)) + 1 for 2 <= n <= tau, and 1 for n > tau.
int improved_colour_bound(int tau, int n);
// floor((tau - n - 1) / 2) + 2 for 2 <= n <= tau - 1.
int halving_colour_bound(int tau, int n);

struct ColouringTheoremReport {
  int tau = 0;
  int n = 0;
  int chi = 0;
  std::optional<int> halving_bound;   // when 2 <= n <= tau - 1
  std::optional<int> improved_bound;  // when n >= 2
  bool halving_ok = true;
  bool improved_ok = true;
  bool residual_checked = false;  // 2 <= n <= tau
  int maximal_sets = 0;
  int worst_residual = 0;   // max tau(G - M) over maximal P_{n+1}-free M
  int residual_limit = 0;   // tau - ceil((2n + 2) / 3)
  bool residual_ok = true;
  std::vector<int> residual_counterexample;
  bool all_ok() const { return halving_ok && improved_ok && residual_ok; }
};

ColouringTheoremReport verify_colouring_theorems(const SimpleGraph& g, int n);

}  // namespace detour
