#include "detour/isomorphism.hpp"

#include <algorithm>
#include <tuple>

namespace detour {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

struct Refinement {
  std::vector<int> colour;
  std::uint64_t hash = 0;
};

Refinement refine(const SimpleGraph& g) {
  const int n = g.order();
  Refinement r;
  r.colour.resize(n);
  for (int v = 0; v < n; ++v) r.colour[v] = g.degree(v);
  r.hash = mix(n, g.size());
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(r.colour[v]);
      std::vector<int> nb;
      g.neighbours(v).for_each([&](int w) { nb.push_back(r.colour[w]); });
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v)
      r.colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    std::vector<int> counts(distinct.size(), 0);
    for (int v = 0; v < n; ++v) ++counts[r.colour[v]];
    for (std::size_t c = 0; c < distinct.size(); ++c) {
      r.hash = mix(r.hash, counts[c]);
      for (int x : distinct[c]) r.hash = mix(r.hash, x);
    }
    if (static_cast<int>(distinct.size()) == classes) break;
    classes = static_cast<int>(distinct.size());
  }
  return r;
}

}  // namespace

std::vector<int> refined_colours(const SimpleGraph& g) { return refine(g).colour; }

std::uint64_t invariant_hash(const SimpleGraph& g) { return refine(g).hash; }

IsoResult is_isomorphic(const SimpleGraph& g, const SimpleGraph& h, int limit) {
  if (g.order() > limit || h.order() > limit)
    throw Error(ErrorCode::TooLarge, "isomorphism test limited to " + std::to_string(limit) + " vertices");
  IsoResult out;
  const int n = g.order();
  if (n != h.order() || g.size() != h.size()) return out;
  Refinement rg = refine(g), rh = refine(h);
  if (rg.hash != rh.hash) return out;
  {
    auto a = rg.colour, b = rh.colour;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return out;
  }

  // Order g's vertices so each new vertex has as many mapped neighbours as possible.
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  std::vector<int> class_size(n + 1, 0);
  for (int v = 0; v < n; ++v) ++class_size[rg.colour[v]];
  for (int step = 0; step < n; ++step) {
    int best = -1;
    std::tuple<int, int, int> best_key{-1, 0, 0};
    for (int v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int linked = 0;
      for (int u : order) linked += g.adjacent(u, v);
      std::tuple<int, int, int> key{linked, -class_size[rg.colour[v]], -v};
      if (key > best_key) {
        best_key = key;
        best = v;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    const int u = order[depth];
    for (int x = 0; x < n; ++x) {
      if (used[x] || rh.colour[x] != rg.colour[u]) continue;
      bool ok = true;
      for (int k = 0; k < depth && ok; ++k) {
        const int w = order[k];
        ok = g.adjacent(u, w) == h.adjacent(x, map[w]);
      }
      if (!ok) continue;
      map[u] = x;
      used[x] = 1;
      if (self(self, depth + 1)) return true;
      used[x] = 0;
      map[u] = -1;
    }
    return false;
  };
  if (!extend(extend, 0)) return out;
  for (auto [a, b] : g.edges()) {
    if (!h.adjacent(map[a], map[b])) return out;
  }
  out.isomorphic = true;
  out.mapping = map;
  return out;
}

bool IsoBucket::insert(const SimpleGraph& g) {
  const std::uint64_t key = invariant_hash(g);
  auto& slot = index_[key];
  for (int i : slot) {
    if (is_isomorphic(g, graphs_[i]).isomorphic) return false;
  }
  slot.push_back(static_cast<int>(graphs_.size()));
  graphs_.push_back(g);
  return true;
}

std::vector<SimpleGraph> enumerate_graphs(int n, const std::function<bool(const SimpleGraph&)>& keep) {
  if (n > 12) throw Error(ErrorCode::TooLarge, "graph enumeration limited to 12 vertices");
  std::vector<SimpleGraph> all;
  SimpleGraph empty(n);
  if (keep && !keep(empty)) return all;
  std::vector<SimpleGraph> level{empty};
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    IsoBucket next;
    for (const auto& g : level) {
      auto edges = g.edges();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v)) continue;
          auto e = edges;
          e.emplace_back(u, v);
          SimpleGraph child = build_simple(n, e);
          if (keep && !keep(child)) continue;
          next.insert(child);
        }
    }
    level = next.graphs();
  }
  return all;
}

}  // namespace detour
