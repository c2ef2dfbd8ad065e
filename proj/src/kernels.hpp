#pragma once

// Internal search kernels shared by the engine, block verification and colouring.

#include <cstdint>
#include <vector>

#include "detour/graph.hpp"

namespace detour::kernel {

// Entry `mask` of a table holds a vertex bitmask; tables are indexed by all 2^n masks.
using Table = std::vector<std::uint32_t>;

std::vector<std::uint32_t> adjacency_words(const SimpleGraph& g);

// ends[mask] = vertices v such that G[mask] has a hamiltonian path ending (equivalently
// starting) at v.
Table hamiltonian_ends(const SimpleGraph& g);

// reach[mask] (mask containing s) = vertices v such that some s-v path covers exactly mask.
Table paths_from(const SimpleGraph& g, int s);

// Lexicographically least hamiltonian path of G[mask] starting at `start`; requires start in ends[mask].
std::vector<int> lex_path_in_mask(const std::vector<std::uint32_t>& adj, const Table& ends, std::uint32_t mask,
                                  int start);

// The s..t path covering mask recorded in a paths_from(s) table; requires t in reach[mask].
std::vector<int> path_from_table(const std::vector<std::uint32_t>& adj, const Table& reach, int s,
                                 std::uint32_t mask, int t);

// Upper bound on the order of a path that starts at x and otherwise uses only `avail`:
// the heaviest chain of blocks in the block-cut tree rooted at x.
int path_bound(const SimpleGraph& g, int x, const VertexSet& avail);

struct SearchOutcome {
  std::vector<int> path;
  bool exhausted = true;  // false when the node budget ran out
};

// Depth-first search over paths from start in lexicographic order. Stops at the first path of
// order >= target; otherwise returns the lexicographically least path of maximum order found.
SearchOutcome longest_path_search(const SimpleGraph& g, int start, int target, std::uint64_t budget);

// Longest start..finish path; stops early once a path of order >= target is seen.
SearchOutcome path_between_search(const SimpleGraph& g, int start, int finish, int target, std::uint64_t budget);

// A hamiltonian cycle (as a vertex sequence starting at 0) or an empty path.
SearchOutcome hamiltonian_cycle_search(const SimpleGraph& g, std::uint64_t budget);

}  // namespace detour::kernel
