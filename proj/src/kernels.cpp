#include "kernels.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace detour::kernel {

namespace {

struct BudgetHit {};
struct TargetHit {};

class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t budget) : budget_(budget) {}
  void tick() {
    if (budget_ != 0 && ++used_ > budget_) throw BudgetHit{};
  }

 private:
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
};

}  // namespace

std::vector<std::uint32_t> adjacency_words(const SimpleGraph& g) {
  std::vector<std::uint32_t> adj(g.order());
  for (int v = 0; v < g.order(); ++v) adj[v] = static_cast<std::uint32_t>(g.mask(v));
  return adj;
}

Table hamiltonian_ends(const SimpleGraph& g) {
  const int n = g.order();
  const auto adj = adjacency_words(g);
  const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1);
  Table ends(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t mask = 1; mask != 0 && mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) {
      ends[mask] = mask;
      continue;
    }
    std::uint32_t out = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (ends[mask ^ (1U << v)] & adj[v]) out |= 1U << v;
    }
    ends[mask] = out;
  }
  return ends;
}

Table paths_from(const SimpleGraph& g, int s) {
  const int n = g.order();
  const auto adj = adjacency_words(g);
  const std::uint32_t full = (1U << n) - 1;
  const std::uint32_t sbit = 1U << s;
  Table reach(static_cast<std::size_t>(full) + 1, 0);
  reach[sbit] = sbit;
  for (std::uint32_t mask = sbit + 1; mask <= full; ++mask) {
    if (!(mask & sbit)) continue;
    std::uint32_t out = 0;
    for (std::uint32_t rest = mask & ~sbit; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (reach[mask ^ (1U << v)] & adj[v]) out |= 1U << v;
    }
    reach[mask] = out;
  }
  return reach;
}

std::vector<int> lex_path_in_mask(const std::vector<std::uint32_t>& adj, const Table& ends, std::uint32_t mask,
                                  int start) {
  std::vector<int> path{start};
  std::uint32_t rest = mask & ~(1U << start);
  int cur = start;
  while (rest) {
    std::uint32_t options = adj[cur] & rest;
    int next = -1;
    for (; options; options &= options - 1) {
      const int w = std::countr_zero(options);
      if (ends[rest] & (1U << w)) {
        next = w;
        break;
      }
    }
    path.push_back(next);
    rest &= ~(1U << next);
    cur = next;
  }
  return path;
}

std::vector<int> path_from_table(const std::vector<std::uint32_t>& adj, const Table& reach, int s,
                                 std::uint32_t mask, int t) {
  std::vector<int> rev{t};
  int cur = t;
  while (cur != s) {
    const std::uint32_t prev_mask = mask & ~(1U << cur);
    const std::uint32_t options = adj[cur] & reach[prev_mask];
    const int u = std::countr_zero(options);
    rev.push_back(u);
    mask = prev_mask;
    cur = u;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

namespace {
thread_local std::array<int, VertexSet::kCapacity> disc, low, gain, stack;
}  // namespace

int path_bound(const SimpleGraph& g, int x, const VertexSet& avail) {
  VertexSet allowed = avail;
  allowed.insert(x);
  allowed.for_each([&](int v) { disc[v] = 0; });
  int timer = 0, top = 0;
  auto dfs = [&](auto&& self, int u, int parent) -> void {
    disc[u] = low[u] = ++timer;
    gain[u] = 0;
    stack[top++] = u;
    const VertexSet nb = g.neighbours(u) & allowed;
    nb.for_each([&](int w) {
      if (disc[w] == 0) {
        self(self, w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          int size = 1, best_child = 0, y;
          do {
            y = stack[--top];
            ++size;
            best_child = std::max(best_child, gain[y]);
          } while (y != w);
          gain[u] = std::max(gain[u], size - 1 + best_child);
        }
      } else if (w != parent) {
        low[u] = std::min(low[u], disc[w]);
      }
    });
  };
  dfs(dfs, x, -1);
  return 1 + gain[x];
}

SearchOutcome longest_path_search(const SimpleGraph& g, int start, int target, std::uint64_t budget) {
  SearchOutcome out;
  std::vector<int> path{start};
  std::vector<int> best = path;
  VertexSet visited;
  visited.insert(start);
  const VertexSet all = g.vertices();
  NodeCounter counter(budget);
  auto rec = [&](auto&& self, int x) -> void {
    counter.tick();
    if (path.size() > best.size()) {
      best = path;
      if (static_cast<int>(best.size()) >= target) throw TargetHit{};
    }
    const VertexSet avail = all - visited;
    const VertexSet next = g.neighbours(x) & avail;
    if (next.empty()) return;
    if (static_cast<int>(path.size()) - 1 + path_bound(g, x, avail) <= static_cast<int>(best.size())) return;
    next.for_each([&](int w) {
      visited.insert(w);
      path.push_back(w);
      self(self, w);
      path.pop_back();
      visited.erase(w);
    });
  };
  try {
    if (target > 1) rec(rec, start);
  } catch (const TargetHit&) {
  } catch (const BudgetHit&) {
    out.exhausted = false;
  }
  out.path = best;
  return out;
}

SearchOutcome path_between_search(const SimpleGraph& g, int start, int finish, int target, std::uint64_t budget) {
  SearchOutcome out;
  std::vector<int> path{start};
  std::vector<int> best;
  VertexSet visited;
  visited.insert(start);
  const VertexSet all = g.vertices();
  NodeCounter counter(budget);
  auto rec = [&](auto&& self, int x) -> void {
    counter.tick();
    if (x == finish) {
      if (path.size() > best.size()) {
        best = path;
        if (static_cast<int>(best.size()) >= target) throw TargetHit{};
      }
      return;
    }
    const VertexSet avail = all - visited;
    const VertexSet reach = reachable(g, x, avail | VertexSet::of({x}));
    if (!reach.contains(finish)) return;
    if (static_cast<int>(path.size()) - 1 + reach.size() <= static_cast<int>(best.size())) return;
    (g.neighbours(x) & avail).for_each([&](int w) {
      visited.insert(w);
      path.push_back(w);
      self(self, w);
      path.pop_back();
      visited.erase(w);
    });
  };
  try {
    rec(rec, start);
  } catch (const TargetHit&) {
  } catch (const BudgetHit&) {
    out.exhausted = false;
  }
  out.path = best;
  return out;
}

SearchOutcome hamiltonian_cycle_search(const SimpleGraph& g, std::uint64_t budget) {
  SearchOutcome out;
  const int n = g.order();
  if (n < 3) return out;
  std::vector<int> path{0};
  VertexSet visited;
  visited.insert(0);
  const VertexSet all = g.vertices();
  const VertexSet closers = g.neighbours(0);
  NodeCounter counter(budget);
  bool found = false;
  auto feasible = [&](int x, const VertexSet& avail) {
    if (!closers.intersects(avail)) return false;
    VertexSet ends = avail;
    ends.insert(x);
    ends.insert(0);
    bool ok = true;
    avail.for_each([&](int u) {
      if (ok && (g.neighbours(u) & ends).size() < 2) ok = false;
    });
    if (!ok) return false;
    VertexSet region = avail;
    region.insert(x);
    return reachable(g, x, region) == region;
  };
  auto rec = [&](auto&& self, int x) -> void {
    counter.tick();
    const VertexSet avail = all - visited;
    if (avail.empty()) {
      if (g.adjacent(x, 0)) found = true;
      return;
    }
    if (!feasible(x, avail)) return;
    (g.neighbours(x) & avail).for_each([&](int w) {
      if (found) return;
      visited.insert(w);
      path.push_back(w);
      self(self, w);
      if (found) return;
      path.pop_back();
      visited.erase(w);
    });
  };
  try {
    rec(rec, 0);
  } catch (const BudgetHit&) {
    out.exhausted = false;
  }
  if (found) out.path = path;
  return out;
}

}  // namespace detour::kernel
