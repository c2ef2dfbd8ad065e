#include "detour/blocks.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "kernels.hpp"

namespace detour {

const char* block_kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::IType: return "itype";
    case BlockKind::RType: return "rtype";
    case BlockKind::UType: return "utype";
    case BlockKind::HCTV: return "hctv";
    case BlockKind::Inflator: return "inflator";
  }
  return "unknown";
}

BlockKind parse_block_kind(const std::string& name) {
  std::string s;
  for (char c : name)
    if (c != '-' && c != '_') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "itype" || s == "i") return BlockKind::IType;
  if (s == "rtype" || s == "r") return BlockKind::RType;
  if (s == "utype" || s == "u") return BlockKind::UType;
  if (s == "hctv") return BlockKind::HCTV;
  if (s == "inflator") return BlockKind::Inflator;
  throw Error(ErrorCode::BadParams, "unknown block kind '" + name + "'");
}

namespace {

std::size_t expected_arity(BlockKind kind, int order) {
  switch (kind) {
    case BlockKind::IType:
    case BlockKind::RType:
    case BlockKind::UType: return 3;
    case BlockKind::HCTV: return order == 1 ? 0 : 2;
    case BlockKind::Inflator: return 2;
  }
  return 0;
}

// Lazily built paths_from tables for a fixed graph.
class PathTables {
 public:
  explicit PathTables(const SimpleGraph& g) : g_(g), adj_(kernel::adjacency_words(g)) {}

  const kernel::Table& from(int s) {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    if (cache_.size() >= 4) {
      // keep memory bounded: drop tables of non-pinned sources
      for (auto i = cache_.begin(); i != cache_.end();) {
        if (std::find(pinned_.begin(), pinned_.end(), i->first) == pinned_.end()) {
          i = cache_.erase(i);
        } else {
          ++i;
        }
      }
    }
    return cache_.emplace(s, kernel::paths_from(g_, s)).first->second;
  }

  void pin(const std::vector<int>& vs) { pinned_ = vs; }

  std::vector<int> path(int s, std::uint32_t mask, int t) { return kernel::path_from_table(adj_, from(s), s, mask, t); }

 private:
  const SimpleGraph& g_;
  std::vector<std::uint32_t> adj_;
  std::map<int, kernel::Table> cache_;
  std::vector<int> pinned_;
};

struct Checker {
  const SimpleGraph& g;
  std::vector<int> d;
  PathTables tables;
  std::uint32_t full;
  std::vector<BlockWitness> witnesses;
  std::optional<Refutation> refutation;

  Checker(const SimpleGraph& graph, std::vector<int> dist)
      : g(graph), d(std::move(dist)), tables(graph), full((1U << graph.order()) - 1) {
    tables.pin(d);
    for (int x : d) tables.from(x);
  }

  static std::uint32_t bit(int v) { return 1U << v; }

  bool fail(const std::string& condition, int vertex) {
    if (!refutation) refutation = Refutation{condition, vertex};
    return false;
  }

  void note(const std::string& condition, int vertex, std::vector<std::vector<int>> paths) {
    witnesses.push_back({condition, vertex, std::move(paths)});
  }

  // Hamiltonian path of G[mask] between s and t.
  bool joined(int s, int t, std::uint32_t mask) { return (tables.from(s)[mask] & bit(t)) != 0; }

  // No spanning path has both ends in D.
  bool no_spanning_d_path(const std::string& condition) {
    for (int x : d)
      for (int y : d)
        if (x < y && joined(x, y, full)) return fail(condition, x);
    return true;
  }

  // For v: a path P from v to some d in D and a path Q joining the other two, disjoint and
  // together spanning G.
  bool two_path_cover(const std::string& condition, int v) {
    const std::vector<int>& D = d;
    if (std::find(D.begin(), D.end(), v) != D.end()) {
      std::vector<int> others;
      for (int x : D)
        if (x != v) others.push_back(x);
      if (joined(others[0], others[1], full ^ bit(v))) {
        note(condition, v, {{v}, tables.path(others[0], full ^ bit(v), others[1])});
        return true;
      }
      return fail(condition, v);
    }
    for (int i = 0; i < 3; ++i) {
      const int end = D[i], q1 = D[(i + 1) % 3], q2 = D[(i + 2) % 3];
      const auto& from_v = tables.from(v);
      const auto& from_q = tables.from(q1);
      const std::uint32_t need = bit(v) | bit(end);
      for (std::uint32_t a = 1; a <= full; ++a) {
        if ((a & need) != need || (a & (bit(q1) | bit(q2)))) continue;
        if ((from_v[a] & bit(end)) && (from_q[full ^ a] & bit(q2))) {
          note(condition, v, {tables.path(v, a, end), tables.path(q1, full ^ a, q2)});
          return true;
        }
      }
    }
    return fail(condition, v);
  }

  bool check_itype() {
    if (!no_spanning_d_path("I-1")) return false;
    for (int v = 0; v < g.order(); ++v)
      if (!two_path_cover("I-2", v)) return false;
    return true;
  }

  bool check_rtype() {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        if (!joined(d[i], d[j], full)) return fail("R-1", d[i]);
        note("R-1", d[i], {tables.path(d[i], full, d[j])});
      }
    for (int v = 0; v < g.order(); ++v)
      if (!two_path_cover("R-2", v)) return false;
    return true;
  }

  bool check_utype() {
    for (int i = 0; i < 3; ++i) {
      const int x = d[i], y = d[(i + 1) % 3], z = d[(i + 2) % 3];
      if (!joined(x, y, full ^ bit(z))) return fail("U-1", z);
      note("U-1", z, {tables.path(x, full ^ bit(z), y)});
    }
    if (!no_spanning_d_path("U-2")) return false;
    for (int x : d) {
      const std::uint32_t ends = tables.from(x)[full];
      if (!ends) return fail("U-3", x);
      note("U-3", x, {tables.path(x, full, std::countr_zero(ends))});
    }
    std::uint32_t dmask = 0;
    for (int x : d) dmask |= bit(x);
    for (int v = 0; v < g.order(); ++v) {
      if (dmask & bit(v)) continue;
      const std::uint32_t ends = tables.from(v)[full] & dmask;
      if (!ends) return fail("U-4", v);
      note("U-4", v, {tables.path(v, full, std::countr_zero(ends))});
    }
    return true;
  }

  bool check_hctv() {
    if (g.order() == 1) return true;
    const std::uint32_t anchors = bit(d[0]) | bit(d[1]);
    for (int v = 0; v < g.order(); ++v) {
      const std::uint32_t ends = tables.from(v)[full] & anchors & ~bit(v);
      if (!ends) return fail("HCTV", v);
      note("HCTV", v, {tables.path(v, full, std::countr_zero(ends))});
    }
    return true;
  }

  bool check_inflator(int* drop) {
    const int k = g.order();
    const int a = d[0], b = d[1];
    if (k < 3) return fail("order", -1);
    int tau_ab = 0;
    std::uint32_t best_mask = 0;
    const auto& from_a = tables.from(a);
    for (std::uint32_t mask = 1; mask <= full; ++mask)
      if ((from_a[mask] & bit(b)) && std::popcount(mask) > tau_ab) {
        tau_ab = std::popcount(mask);
        best_mask = mask;
      }
    *drop = k - tau_ab;
    if (*drop < 1 || *drop > k - 2) return fail("D-1", a);
    note("D-1", a, {tables.path(a, best_mask, b)});
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      const std::uint32_t ends = tables.from(x)[full ^ bit(y)];
      if (!ends) return fail("D-2", x);
      note("D-2", x, {tables.path(x, full ^ bit(y), std::countr_zero(ends))});
    }
    for (int x : {a, b}) {
      const std::uint32_t ends = tables.from(x)[full];
      if (!ends) return fail("D-3", x);
      note("D-3", x, {tables.path(x, full, std::countr_zero(ends))});
    }
    for (int v = 0; v < k; ++v) {
      if (v == a || v == b) continue;
      bool found = false;
      for (auto [end, other] : {std::pair{a, b}, std::pair{b, a}}) {
        const auto& from_v = tables.from(v);
        const auto& from_o = tables.from(other);
        const std::uint32_t need = bit(v) | bit(end);
        for (std::uint32_t p = 1; p <= full && !found; ++p) {
          if ((p & need) != need || (p & bit(other))) continue;
          if (!(from_v[p] & bit(end))) continue;
          const std::uint32_t q_ends = from_o[full ^ p];
          if (!q_ends) continue;
          note("D-4", v, {tables.path(v, p, end), tables.path(other, full ^ p, std::countr_zero(q_ends))});
          found = true;
        }
        if (found) break;
      }
      if (!found) return fail("D-4", v);
    }
    return true;
  }
};

}  // namespace

BlockVerdict verify_block(const SimpleGraph& g, const std::vector<int>& distinguished, BlockKind kind,
                          const SearchMode& mode) {
  const int n = g.order();
  if (n == 0) throw Error(ErrorCode::Empty, "empty block graph");
  if (distinguished.size() != expected_arity(kind, n))
    throw Error(ErrorCode::BadParams, std::string(block_kind_name(kind)) + " block needs " +
                                          std::to_string(expected_arity(kind, n)) + " distinguished vertices");
  for (std::size_t i = 0; i < distinguished.size(); ++i) {
    const int v = distinguished[i];
    if (v < 0 || v >= n) throw Error(ErrorCode::BadVertex, "distinguished vertex " + std::to_string(v));
    for (std::size_t j = 0; j < i; ++j)
      if (distinguished[j] == v) throw Error(ErrorCode::BadParams, "distinguished vertices must be distinct");
  }
  const int limit = std::min(mode.certified_limit, kMaxDpOrder);
  if (n > limit) throw Error(ErrorCode::TooLarge, "block verification needs order <= " + std::to_string(limit));

  Checker c(g, distinguished);
  int drop = 0;
  bool ok = false;
  switch (kind) {
    case BlockKind::IType: ok = c.check_itype(); break;
    case BlockKind::RType: ok = c.check_rtype(); break;
    case BlockKind::UType: ok = c.check_utype(); break;
    case BlockKind::HCTV: ok = c.check_hctv(); break;
    case BlockKind::Inflator: ok = c.check_inflator(&drop); break;
  }
  BlockVerdict verdict;
  verdict.witnesses = std::move(c.witnesses);
  if (!ok) {
    verdict.refutation = c.refutation;
    return verdict;
  }
  Block b;
  b.graph = g;
  b.distinguished = distinguished;
  b.kind = kind;
  b.drop = drop;
  b.evidence = BlockEvidence::Exhaustive;
  verdict.block = std::move(b);
  return verdict;
}

Block require_block(const SimpleGraph& g, const std::vector<int>& distinguished, BlockKind kind,
                    const std::string& name, const SearchMode& mode) {
  auto verdict = verify_block(g, distinguished, kind, mode);
  if (!verdict.ok()) {
    const auto& r = *verdict.refutation;
    throw Error(ErrorCode::Refuted, (name.empty() ? std::string("block") : name) + " fails " + r.condition +
                                        (r.vertex >= 0 ? " at vertex " + std::to_string(r.vertex) : std::string()));
  }
  verdict.block->name = name;
  return *verdict.block;
}

Block derive_utype(const SimpleGraph& h, int w, bool trust_hypohamiltonian, const SearchMode& mode) {
  if (w < 0 || w >= h.order()) throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(w));
  if (h.degree(w) != 3) throw Error(ErrorCode::BadVertex, "derive_utype needs a vertex of degree 3");
  if (!trust_hypohamiltonian) {
    const auto flags = hypohamiltonicity_suite(h, mode);
    if (!flags.maximal_hypohamiltonian)
      throw Error(ErrorCode::NotHypohamiltonian, flags.hypohamiltonian ? "hypohamiltonian but not maximal"
                                                                       : "graph is not hypohamiltonian");
  }
  // Relabel: h - w keeps relative order, so neighbours above w shift down by one.
  std::vector<int> d;
  h.neighbours(w).for_each([&](int x) { d.push_back(x > w ? x - 1 : x); });
  SimpleGraph g = delete_vertex(h, w);
  if (g.order() <= std::min(mode.certified_limit, kMaxDpOrder)) {
    return require_block(g, d, BlockKind::UType, "utype", mode);
  }
  Block b;
  b.graph = std::move(g);
  b.distinguished = d;
  b.kind = BlockKind::UType;
  b.evidence = trust_hypohamiltonian ? BlockEvidence::Declared : BlockEvidence::Hypohamiltonian;
  b.name = "utype";
  return b;
}

}  // namespace detour
