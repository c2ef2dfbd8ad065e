#include "detour/engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "kernels.hpp"

namespace detour {

namespace {

enum class Strategy { Dp, Search };

struct Plan {
  Strategy strategy = Strategy::Dp;
  std::uint64_t budget = 0;  // 0 = unlimited
};

Plan plan_for(const SimpleGraph& g, const SearchMode& mode) {
  const int limit = std::min(mode.certified_limit, kMaxDpOrder);
  if (g.order() <= limit) return {Strategy::Dp, 0};
  if (mode.mode == Verification::Certified) {
    if (!mode.override_limit)
      throw Error(ErrorCode::BudgetExceeded, "order " + std::to_string(g.order()) + " exceeds certified limit " +
                                                 std::to_string(limit) + " (override required)");
    return {Strategy::Search, 0};
  }
  return {Strategy::Search, mode.node_budget};
}

void check_vertex(const SimpleGraph& g, int v) {
  if (v < 0 || v >= g.order()) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v));
}

[[noreturn]] void budget_exceeded(const char* what) {
  throw Error(ErrorCode::BudgetExceeded, std::string("node budget exhausted during ") + what);
}

std::uint32_t full_mask(int n) { return n == 0 ? 0U : ((1U << n) - 1); }

// Per-vertex maximum path order from a hamiltonian_ends table.
std::vector<int> orders_from_ends(int n, const kernel::Table& ends) {
  std::vector<int> best(n, 0);
  for (std::uint32_t mask = 1; mask <= full_mask(n); ++mask) {
    const int pc = std::popcount(mask);
    for (std::uint32_t e = ends[mask]; e; e &= e - 1) {
      const int v = std::countr_zero(e);
      if (pc > best[v]) best[v] = pc;
    }
  }
  return best;
}

std::vector<PathWitness> witnesses_from_ends(const SimpleGraph& g, const kernel::Table& ends,
                                             const std::vector<int>& best) {
  const int n = g.order();
  const auto adj = kernel::adjacency_words(g);
  std::vector<PathWitness> out(n);
  for (std::uint32_t mask = 1; mask <= full_mask(n); ++mask) {
    const int pc = std::popcount(mask);
    for (std::uint32_t e = ends[mask]; e; e &= e - 1) {
      const int v = std::countr_zero(e);
      if (pc != best[v]) continue;
      auto candidate = kernel::lex_path_in_mask(adj, ends, mask, v);
      if (out[v].vertices.empty() || candidate < out[v].vertices) out[v].vertices = std::move(candidate);
    }
  }
  return out;
}

int component_size(const SimpleGraph& g, int v) { return reachable(g, v, g.vertices()).size(); }

}  // namespace

int default_certified_limit() {
  if (const char* env = std::getenv("DETOUR_CERTIFIED_LIMIT")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value >= 1) return static_cast<int>(std::min<long>(value, kMaxDpOrder));
  }
  return 24;
}

bool is_path_in(const SimpleGraph& g, const std::vector<int>& vertices) {
  VertexSet seen;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !g.adjacent(vertices[i - 1], v)) return false;
  }
  return true;
}

bool is_trail_in(const MultiGraph& m, const TrailWitness& t) {
  if (t.vertices.size() != t.edges.size() + 1) return false;
  std::vector<char> used(m.size(), 0);
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const int id = t.edges[i];
    if (id < 0 || id >= m.size() || used[id]) return false;
    used[id] = 1;
    const auto [a, b] = m.edge(id);
    const int x = t.vertices[i], y = t.vertices[i + 1];
    if (!((a == x && b == y) || (a == y && b == x))) return false;
  }
  return true;
}

LongestPath longest_path_from(const SimpleGraph& g, int v, const SearchMode& mode) {
  check_vertex(g, v);
  const Plan plan = plan_for(g, mode);
  LongestPath out;
  if (plan.strategy == Strategy::Dp) {
    const auto ends = kernel::hamiltonian_ends(g);
    const auto adj = kernel::adjacency_words(g);
    const std::uint32_t vbit = 1U << v;
    for (std::uint32_t mask = 1; mask <= full_mask(g.order()); ++mask)
      if (ends[mask] & vbit) out.order = std::max(out.order, std::popcount(mask));
    for (std::uint32_t mask = 1; mask <= full_mask(g.order()); ++mask) {
      if (!(ends[mask] & vbit) || std::popcount(mask) != out.order) continue;
      auto candidate = kernel::lex_path_in_mask(adj, ends, mask, v);
      if (out.witness.vertices.empty() || candidate < out.witness.vertices) out.witness.vertices = std::move(candidate);
    }
    return out;
  }
  const auto res = kernel::longest_path_search(g, v, component_size(g, v), plan.budget);
  out.witness.vertices = res.path;
  out.order = out.witness.order();
  out.exact = res.exhausted && mode.mode == Verification::Certified;
  return out;
}

int longest_path_between(const SimpleGraph& g, int u, int v, const SearchMode& mode) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw Error(ErrorCode::BadParams, "longest_path_between needs distinct endvertices");
  const Plan plan = plan_for(g, mode);
  if (plan.strategy == Strategy::Dp) {
    const auto reach = kernel::paths_from(g, u);
    int best = 0;
    const std::uint32_t vbit = 1U << v;
    for (std::uint32_t mask = 1; mask <= full_mask(g.order()); ++mask)
      if (reach[mask] & vbit) best = std::max(best, std::popcount(mask));
    return best;
  }
  const auto res = kernel::path_between_search(g, u, v, g.order(), plan.budget);
  if (!res.exhausted && mode.mode == Verification::Certified) budget_exceeded("longest_path_between");
  return static_cast<int>(res.path.size());
}

std::optional<PathWitness> find_path_of_order(const SimpleGraph& g, int v, int target, std::uint64_t budget) {
  check_vertex(g, v);
  const auto res = kernel::longest_path_search(g, v, target, budget);
  if (static_cast<int>(res.path.size()) >= target) return PathWitness{res.path};
  return std::nullopt;
}

DetourProfile detour_profile(const SimpleGraph& g, const SearchMode& mode, bool with_witnesses) {
  const int n = g.order();
  if (n == 0) throw Error(ErrorCode::Empty, "detour profile of the empty graph");
  const Plan plan = plan_for(g, mode);
  DetourProfile p;
  p.disconnected = !is_connected(g);
  if (plan.strategy == Strategy::Dp) {
    const auto ends = kernel::hamiltonian_ends(g);
    p.per_vertex = orders_from_ends(n, ends);
    if (with_witnesses) p.witnesses = witnesses_from_ends(g, ends, p.per_vertex);
  } else {
    p.exact = mode.mode == Verification::Certified;
    for (int v = 0; v < n; ++v) {
      const auto res = kernel::longest_path_search(g, v, component_size(g, v), plan.budget);
      if (!res.exhausted) p.exact = false;
      p.per_vertex.push_back(static_cast<int>(res.path.size()));
      if (with_witnesses) p.witnesses.push_back(PathWitness{res.path});
    }
  }
  p.tau = *std::max_element(p.per_vertex.begin(), p.per_vertex.end());
  p.sequence = DetourSequence::sorted(p.per_vertex);
  p.deficiency = n - p.tau;
  return p;
}

int circumference(const SimpleGraph& g, const SearchMode& mode) {
  const int n = g.order();
  const Plan plan = plan_for(g, mode);
  int best = 0;
  if (plan.strategy == Strategy::Dp) {
    const auto adj = kernel::adjacency_words(g);
    // path[mask]: ends of paths that start at the lowest vertex of mask and cover mask.
    kernel::Table path(static_cast<std::size_t>(full_mask(n)) + 1, 0);
    for (std::uint32_t mask = 1; mask <= full_mask(n); ++mask) {
      const int s = std::countr_zero(mask);
      if (mask == (1U << s)) {
        path[mask] = mask;
        continue;
      }
      std::uint32_t out = 0;
      for (std::uint32_t rest = mask & (mask - 1); rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (path[mask ^ (1U << v)] & adj[v]) out |= 1U << v;
      }
      path[mask] = out;
      const int pc = std::popcount(mask);
      if (pc >= 3 && pc > best && (out & adj[s])) best = pc;
    }
    return best;
  }
  // Search: cycles through their lowest vertex s, using only vertices above s.
  for (int s = 0; s < n; ++s) {
    VertexSet allowed;
    for (int v = s + 1; v < n; ++v) allowed.insert(v);
    SimpleGraph h = induced_subgraph(g, allowed | VertexSet::of({s}));
    // s is vertex 0 of h; a longest cycle through 0 closes a path 0..w with w ~ 0.
    h.neighbours(0).for_each([&](int w) {
      const auto res = kernel::path_between_search(h, 0, w, h.order(), plan.budget);
      if (!res.exhausted) budget_exceeded("circumference");
      if (res.path.size() >= 3) best = std::max(best, static_cast<int>(res.path.size()));
    });
  }
  return best;
}

bool is_traceable(const SimpleGraph& g, const SearchMode& mode) {
  const int n = g.order();
  if (n <= 1) return true;
  const Plan plan = plan_for(g, mode);
  if (plan.strategy == Strategy::Dp) return kernel::hamiltonian_ends(g)[full_mask(n)] != 0;
  if (!is_connected(g)) return false;
  bool complete = true;
  for (int v = 0; v < n; ++v) {
    const auto res = kernel::longest_path_search(g, v, n, plan.budget);
    if (static_cast<int>(res.path.size()) == n) return true;
    complete = complete && res.exhausted;
  }
  if (!complete) budget_exceeded("traceability search");
  return false;
}

bool is_hamiltonian(const SimpleGraph& g, const SearchMode& mode) {
  const int n = g.order();
  if (n <= 2) return n == 1 || g.size() == 1;
  const Plan plan = plan_for(g, mode);
  if (plan.strategy == Strategy::Dp) return (kernel::paths_from(g, 0)[full_mask(n)] & g.mask(0)) != 0;
  const auto res = kernel::hamiltonian_cycle_search(g, plan.budget);
  if (!res.path.empty()) return true;
  if (!res.exhausted) budget_exceeded("hamiltonian cycle search");
  return false;
}

TraceabilityFlags traceability_suite(const SimpleGraph& g, const SearchMode& mode) {
  const int n = g.order();
  TraceabilityFlags f;
  const Plan plan = plan_for(g, mode);
  f.hamiltonian = is_hamiltonian(g, mode);
  if (plan.strategy == Strategy::Dp) {
    const auto ends = kernel::hamiltonian_ends(g);
    f.traceable = n <= 1 || ends[full_mask(n)] != 0;
    f.homogeneously_traceable = n <= 1 || ends[full_mask(n)] == full_mask(n);
    f.hamiltonian_connected = f.homogeneously_traceable;
    for (int u = 0; u < n && f.hamiltonian_connected; ++u) {
      const auto reach = kernel::paths_from(g, u);
      if ((reach[full_mask(n)] | (1U << u)) != full_mask(n)) f.hamiltonian_connected = false;
    }
    return f;
  }
  bool complete = true;
  f.homogeneously_traceable = true;
  for (int v = 0; v < n; ++v) {
    const auto res = kernel::longest_path_search(g, v, n, plan.budget);
    if (static_cast<int>(res.path.size()) == n) {
      f.traceable = true;
    } else {
      f.homogeneously_traceable = false;
      complete = complete && res.exhausted;
    }
  }
  if (!f.traceable && !complete) budget_exceeded("traceability search");
  if (!f.homogeneously_traceable && !complete) budget_exceeded("traceability search");
  f.hamiltonian_connected = f.homogeneously_traceable;
  for (int u = 0; u < n && f.hamiltonian_connected; ++u)
    for (int v = u + 1; v < n && f.hamiltonian_connected; ++v) {
      const auto res = kernel::path_between_search(g, u, v, n, plan.budget);
      if (static_cast<int>(res.path.size()) < n) {
        if (!res.exhausted) budget_exceeded("hamiltonian-connectedness search");
        f.hamiltonian_connected = false;
      }
    }
  return f;
}

CndReport is_cnd(const SimpleGraph& g, const SearchMode& mode) {
  CndReport r;
  r.profile = detour_profile(g, mode);
  r.connected = !r.profile.disconnected;
  r.traceable = r.profile.deficiency == 0;
  r.constant = r.profile.sequence.constant();
  r.cnd = r.connected && !r.traceable && r.constant;
  return r;
}

namespace {

// True when G has a hamiltonian u-v path.
bool hamiltonian_between(const SimpleGraph& g, int u, int v, const Plan& plan) {
  const int n = g.order();
  const auto res = kernel::path_between_search(g, u, v, n, plan.budget);
  if (static_cast<int>(res.path.size()) == n) return true;
  if (!res.exhausted) budget_exceeded("hamiltonian path search");
  return false;
}

}  // namespace

HypoFlags hypohamiltonicity_suite(const SimpleGraph& g, const SearchMode& mode) {
  const int n = g.order();
  if (n < 3) throw Error(ErrorCode::BadParams, "hypohamiltonicity needs at least 3 vertices");
  HypoFlags f;
  if (is_hamiltonian(g, mode)) return f;
  for (int v = 0; v < n; ++v) {
    if (!is_hamiltonian(delete_vertex(g, v), mode)) return f;
  }
  f.hypohamiltonian = true;
  // G is nonhamiltonian, so G+uv is hamiltonian exactly when G has a hamiltonian u-v path.
  const Plan plan = plan_for(g, mode);
  f.maximal_hypohamiltonian = true;
  for (int u = 0; u < n && f.maximal_hypohamiltonian; ++u) {
    if (plan.strategy == Strategy::Dp) {
      const std::uint32_t ends = kernel::paths_from(g, u)[full_mask(n)];
      for (int v = u + 1; v < n; ++v)
        if (!g.adjacent(u, v) && !(ends & (1U << v))) f.maximal_hypohamiltonian = false;
    } else {
      for (int v = u + 1; v < n && f.maximal_hypohamiltonian; ++v)
        if (!g.adjacent(u, v) && !hamiltonian_between(g, u, v, plan)) f.maximal_hypohamiltonian = false;
    }
  }
  return f;
}

bool is_mnt(const SimpleGraph& g, const SearchMode& mode) {
  const int n = g.order();
  if (is_traceable(g, mode)) return false;
  const Plan plan = plan_for(g, mode);
  if (plan.strategy == Strategy::Dp) {
    // G+uv traceable iff V splits into A, V-A with a hamiltonian path of G[A] ending at u
    // and one of G[V-A] starting at v.
    const auto ends = kernel::hamiltonian_ends(g);
    const std::uint32_t full = full_mask(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        const std::uint32_t ub = 1U << u, vb = 1U << v;
        bool ok = false;
        for (std::uint32_t a = 1; a <= full && !ok; ++a) {
          if ((a & ub) && !(a & vb) && (ends[a] & ub) && (ends[full ^ a] & vb)) ok = true;
        }
        if (!ok) return false;
      }
    return true;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v) && !is_traceable(add_edge(g, u, v), mode)) return false;
    }
  return true;
}

bool is_1_tough(const SimpleGraph& g) {
  const int n = g.order();
  if (n > kToughnessLimit) throw Error(ErrorCode::TooLarge, "toughness check limited to 20 vertices");
  if (n == 0) return true;
  if (!is_connected(g)) return false;
  const auto adj = kernel::adjacency_words(g);
  const std::uint32_t full = full_mask(n);
  for (std::uint32_t s = 1; s < full; ++s) {
    const std::uint32_t rest = full & ~s;
    int comps = 0;
    for (std::uint32_t left = rest; left;) {
      std::uint32_t comp = left & (~left + 1), grown = comp;
      do {
        comp = grown;
        for (std::uint32_t b = comp; b; b &= b - 1) grown |= adj[std::countr_zero(b)] & rest;
      } while (grown != comp);
      left &= ~comp;
      ++comps;
    }
    if (comps >= 2 && std::popcount(s) < comps) return false;
  }
  return true;
}

}  // namespace detour
