#include "detour/construction.hpp"

#include <algorithm>
#include <set>

#include "kernels.hpp"

namespace detour {

Assembly::Assembly(const MultiGraph& base)
    : alive_(base.order(), true), edges_(base.edges()), edge_alive_(base.size(), true) {}

void Assembly::check_vertex(int v) const {
  if (v < 0 || v >= static_cast<int>(alive_.size()) || !alive_[v])
    throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " is not a live vertex of the assembly");
}

std::vector<Incidence> Assembly::incidences(int v) const {
  check_vertex(v);
  std::vector<Incidence> out;
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    if (!edge_alive_[e]) continue;
    if (edges_[e].first == v) out.push_back({v, e});
    if (edges_[e].second == v) out.push_back({v, e});
  }
  return out;
}

int Assembly::add_vertex() {
  alive_.push_back(true);
  return static_cast<int>(alive_.size()) - 1;
}

int Assembly::add_block_copy(const Block& b) {
  const int offset = static_cast<int>(alive_.size());
  for (int i = 0; i < b.order(); ++i) add_vertex();
  for (auto [u, v] : b.graph.edges()) {
    edges_.push_back({offset + u, offset + v});
    edge_alive_.push_back(true);
  }
  return offset;
}

void Assembly::inflate_vertex(int v, const Block& b, std::vector<int> matching) {
  check_vertex(v);
  if (b.kind == BlockKind::HCTV) throw Error(ErrorCode::BadBlock, "HCTV blocks are inserted, not inflated");
  const auto inc = incidences(v);
  const int k = static_cast<int>(b.distinguished.size());
  if (matching.empty())
    for (int i = 0; i < static_cast<int>(inc.size()); ++i) matching.push_back(i);
  if (static_cast<int>(inc.size()) != k || static_cast<int>(matching.size()) != k)
    throw Error(ErrorCode::BadMatching, "vertex " + std::to_string(v) + " has " + std::to_string(inc.size()) +
                                            " edge-ends but the block has " + std::to_string(k) +
                                            " distinguished vertices");
  std::vector<bool> used(k, false);
  for (int i : matching) {
    if (i < 0 || i >= k || used[i]) throw Error(ErrorCode::BadMatching, "matching is not a bijection");
    used[i] = true;
  }
  const int offset = add_block_copy(b);
  // A loop appears twice in inc; rewrite one end per occurrence.
  std::vector<int> seen(edges_.size(), 0);
  for (std::size_t i = 0; i < inc.size(); ++i) {
    const int e = inc[i].edge;
    const int target = offset + b.distinguished[matching[i]];
    if (edges_[e].first == v && seen[e] == 0) {
      edges_[e].first = target;
    } else {
      edges_[e].second = target;
    }
    ++seen[e];
  }
  alive_[v] = false;
}

void Assembly::inflate_clique(int v, int clique_order) {
  check_vertex(v);
  const auto inc = incidences(v);
  if (clique_order < static_cast<int>(inc.size()) || clique_order < 1)
    throw Error(ErrorCode::BadMatching, "K" + std::to_string(clique_order) + " cannot absorb " +
                                            std::to_string(inc.size()) + " edge-ends");
  Block k;
  std::vector<Edge> es;
  for (int i = 0; i < clique_order; ++i)
    for (int j = i + 1; j < clique_order; ++j) es.push_back({i, j});
  k.graph = build_simple(clique_order, es);
  k.kind = BlockKind::RType;  // only used for its shape here
  for (int i = 0; i < static_cast<int>(inc.size()); ++i) k.distinguished.push_back(i);
  inflate_vertex(v, k);
}

void Assembly::insert_on_edge(int e, const Block& b) {
  if (e < 0 || e >= static_cast<int>(edges_.size()) || !edge_alive_[e])
    throw Error(ErrorCode::BadVertex, "edge " + std::to_string(e) + " is not a live edge of the assembly");
  if (b.kind != BlockKind::HCTV) throw Error(ErrorCode::BadBlock, "only HCTV blocks can be inserted");
  const bool single = b.order() == 1;
  if (!single && b.distinguished.size() != 2) throw Error(ErrorCode::BadBlock, "HCTV block needs two anchors");
  const auto [p, q] = edges_[e];
  edge_alive_[e] = false;
  const int offset = add_block_copy(b);
  const int x = offset + (single ? 0 : b.distinguished[0]);
  const int y = offset + (single ? 0 : b.distinguished[1]);
  edges_.push_back({p, x});
  edges_.push_back({q, y});
  edge_alive_.insert(edge_alive_.end(), 2, true);
}

int Assembly::vertex_count() const { return static_cast<int>(std::count(alive_.begin(), alive_.end(), true)); }

int Assembly::edge_count() const {
  return static_cast<int>(std::count(edge_alive_.begin(), edge_alive_.end(), true));
}

SimpleGraph Assembly::finish() const {
  std::vector<int> id(alive_.size(), -1);
  int n = 0;
  for (std::size_t v = 0; v < alive_.size(); ++v)
    if (alive_[v]) id[v] = n++;
  std::set<Edge> seen;
  std::vector<Edge> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (!edge_alive_[e]) continue;
    int u = id[edges_[e].first], v = id[edges_[e].second];
    if (u == v) throw Error(ErrorCode::BadFormat, "assembly still has a loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw Error(ErrorCode::BadFormat, "assembly still has parallel edges");
    out.push_back({u, v});
  }
  return build_simple(n, out);
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::One: return "one";
    case Variant::Two: return "two";
    case Variant::Three: return "three";
    case Variant::Four: return "four";
    case Variant::F: return "f";
  }
  return "unknown";
}

Variant parse_variant(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "one" || s == "1") return Variant::One;
  if (s == "two" || s == "2") return Variant::Two;
  if (s == "three" || s == "3") return Variant::Three;
  if (s == "four" || s == "4") return Variant::Four;
  if (s == "f") return Variant::F;
  throw Error(ErrorCode::BadParams, "unknown variant '" + name + "'");
}

namespace {

MultiGraph cycle_multigraph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
  return build_multigraph(n, es);
}

void require_kind(const Block& b, BlockKind kind, const char* role) {
  if (!b.verified()) throw Error(ErrorCode::BadBlock, std::string(role) + " block '" + b.name + "' is unverified");
  if (b.kind != kind)
    throw Error(ErrorCode::BadBlock, std::string(role) + " block '" + b.name + "' is " + block_kind_name(b.kind) +
                                         ", expected " + block_kind_name(kind));
}

void require_count(std::size_t got, int want, const char* what) {
  if (static_cast<int>(got) != want)
    throw Error(ErrorCode::BadParams, std::string(what) + ": expected " + std::to_string(want) + ", got " +
                                          std::to_string(got));
}

int common_hctv_order(const std::vector<Block>& hctvs) {
  for (const auto& b : hctvs) require_kind(b, BlockKind::HCTV, "insertion");
  if (hctvs.empty()) return 0;
  const int m = hctvs.front().order();
  for (const auto& b : hctvs)
    if (b.order() != m) throw Error(ErrorCode::BadBlock, "inserted HCTV blocks must share one order");
  return m;
}

void verify(ConstructionReport& rep, const ConstructOptions& opts) {
  const SimpleGraph& g = rep.graph;
  const int limit = std::min(opts.mode.certified_limit, kMaxDpOrder);
  if (g.order() <= limit || opts.certify) {
    SearchMode m = SearchMode::certified();
    m.certified_limit = opts.mode.certified_limit;
    m.override_limit = opts.certify;
    rep.verification = Verification::Certified;
    rep.profile = detour_profile(g, m);
    rep.confirmed = rep.profile->tau == rep.predicted.tau && rep.profile->sequence.constant() &&
                    !rep.profile->disconnected;
    return;
  }
  rep.verification = Verification::Witnessed;
  if (opts.skip_witnesses) return;
  rep.witnesses.assign(g.order(), {});
  for (int v = 0; v < g.order(); ++v) {
    auto w = find_path_of_order(g, v, rep.predicted.tau, opts.mode.node_budget);
    if (w && is_path_in(g, w->vertices)) {
      rep.witnesses[v] = std::move(*w);
    } else {
      rep.missing.push_back(v);
    }
  }
  rep.confirmed = rep.missing.empty();
}

int sum_orders(const std::vector<Block>& bs) {
  int s = 0;
  for (const auto& b : bs) s += b.order();
  return s;
}

int sum_sizes(const std::vector<Block>& bs) {
  int s = 0;
  for (const auto& b : bs) s += b.graph.size();
  return s;
}

void check_recipe(const Recipe& r) {
  const MultiGraph& L = r.base;
  switch (r.variant) {
    case Variant::One:
    case Variant::Three:
    case Variant::Four: {
      require_count(r.vertex_blocks.size(), L.order(), "vertex blocks");
      const BlockKind kind = r.variant == Variant::One     ? BlockKind::IType
                             : r.variant == Variant::Three ? BlockKind::RType
                                                           : BlockKind::UType;
      for (const auto& b : r.vertex_blocks) require_kind(b, kind, "inflation");
      if (r.variant == Variant::Four) {
        if (!is_presentable(L).presentable) throw Error(ErrorCode::BadBase, "base multigraph is not presentable");
      } else {
        if (!L.is_cubic()) throw Error(ErrorCode::BadBase, "base multigraph is not cubic");
        if (!is_admissible(L).admissible) throw Error(ErrorCode::BadBase, "base multigraph is not admissible");
      }
      if (r.variant == Variant::Three) {
        require_count(r.edge_blocks.size(), L.size(), "edge blocks");
        common_hctv_order(r.edge_blocks);
      }
      break;
    }
    case Variant::Two:
      require_count(r.clique_orders.size(), L.order(), "clique orders");
      require_count(r.edge_blocks.size(), L.size(), "edge blocks");
      common_hctv_order(r.edge_blocks);
      if (!is_admissible(L).admissible) throw Error(ErrorCode::BadBase, "base multigraph is not admissible");
      for (int v = 0; v < L.order(); ++v)
        if (r.clique_orders[v] < L.degree(v))
          throw Error(ErrorCode::BadMatching, "clique at vertex " + std::to_string(v) + " is smaller than its degree");
      break;
    case Variant::F: break;
  }
}

}  // namespace

SimpleGraph assemble(const Recipe& r) {
  if (r.variant == Variant::F) {
    Assembly a(cycle_multigraph(static_cast<int>(r.vertex_blocks.size())));
    for (int i = 0; i < static_cast<int>(r.vertex_blocks.size()); ++i) a.inflate_vertex(i, r.vertex_blocks[i]);
    for (int e = 0; e < static_cast<int>(r.edge_blocks.size()); ++e) a.insert_on_edge(e, r.edge_blocks[e]);
    return a.finish();
  }
  Assembly a(r.base);
  for (int v = 0; v < r.base.order(); ++v) {
    if (r.variant == Variant::Two) {
      a.inflate_clique(v, r.clique_orders[v]);
    } else {
      a.inflate_vertex(v, r.vertex_blocks[v]);
    }
  }
  if (r.variant == Variant::Two || r.variant == Variant::Three)
    for (int e = 0; e < r.base.size(); ++e) a.insert_on_edge(e, r.edge_blocks[e]);
  return a.finish();
}

ConstructionReport construct(const Recipe& r, const ConstructOptions& opts) {
  if (r.variant == Variant::F) return construct_f(r.vertex_blocks, r.edge_blocks, opts);
  check_recipe(r);
  const MultiGraph& L = r.base;
  ConstructionReport rep;
  Prediction& p = rep.predicted;
  const int k = L.order();
  switch (r.variant) {
    case Variant::One:
    case Variant::Four:
      p.order = sum_orders(r.vertex_blocks);
      p.size = sum_sizes(r.vertex_blocks) + L.size();
      p.tau = p.order - k + 2;
      break;
    case Variant::Two:
    case Variant::Three: {
      int inner_order = 0, inner_size = 0;
      if (r.variant == Variant::Two) {
        for (int c : r.clique_orders) {
          inner_order += c;
          inner_size += c * (c - 1) / 2;
        }
      } else {
        inner_order = sum_orders(r.vertex_blocks);
        inner_size = sum_sizes(r.vertex_blocks);
      }
      const int m = common_hctv_order(r.edge_blocks);
      p.order = inner_order + sum_orders(r.edge_blocks);
      p.size = inner_size + sum_sizes(r.edge_blocks) + 2 * L.size();
      rep.base_trail = longest_trail(L).length;
      p.tau = p.order - (L.size() - rep.base_trail) * m;
      break;
    }
    case Variant::F: break;
  }
  p.deficiency = p.order - p.tau;
  rep.graph = assemble(r);
  if (rep.graph.order() != p.order || rep.graph.size() != p.size)
    throw Error(ErrorCode::BadFormat, "assembled graph disagrees with the predicted order or size");
  verify(rep, opts);
  return rep;
}

ConstructionReport construct_f(const std::vector<Block>& inflators, const std::vector<Block>& hctvs,
                               const ConstructOptions& opts) {
  const int n = static_cast<int>(inflators.size());
  if (n < 2) throw Error(ErrorCode::BadParams, "construction needs a cycle of length at least 2");
  require_count(hctvs.size(), n, "HCTV blocks");
  for (const auto& b : inflators) require_kind(b, BlockKind::Inflator, "inflation");
  for (const auto& b : hctvs)
    if (!b.verified() || b.kind != BlockKind::HCTV) require_kind(b, BlockKind::HCTV, "insertion");
  const int m = inflators.front().drop;
  int min_k = inflators.front().order();
  for (const auto& b : inflators) {
    if (b.drop != m) throw Error(ErrorCode::DropMismatch, "inflators have different drops");
    min_k = std::min(min_k, b.order());
  }
  if (m + 2 > min_k) throw Error(ErrorCode::BadBlock, "inflator order must be at least drop + 2");
  for (const auto& b : hctvs)
    if (b.order() < m) throw Error(ErrorCode::BadBlock, "HCTV block '" + b.name + "' is smaller than the drop");

  Recipe r;
  r.variant = Variant::F;
  r.cycle_length = n;
  r.vertex_blocks = inflators;
  r.edge_blocks = hctvs;
  ConstructionReport rep;
  Prediction& p = rep.predicted;
  p.order = sum_orders(inflators) + sum_orders(hctvs);
  p.size = sum_sizes(inflators) + sum_sizes(hctvs) + 2 * n;
  p.tau = p.order - (n - 1) * m;
  p.deficiency = (n - 1) * m;
  rep.graph = assemble(r);
  if (rep.graph.order() != p.order || rep.graph.size() != p.size)
    throw Error(ErrorCode::BadFormat, "assembled graph disagrees with the predicted order or size");
  verify(rep, opts);
  return rep;
}

SimpleGraph nhht_from_inflator(const Block& b, const SearchMode& mode) {
  require_kind(b, BlockKind::Inflator, "source");
  const int n = b.order();
  auto es = b.graph.edges();
  es.push_back({b.distinguished[0], n});
  es.push_back({b.distinguished[1], n});
  SimpleGraph h = build_simple(n + 1, es);
  const auto flags = traceability_suite(h, mode);
  if (flags.hamiltonian || !flags.homogeneously_traceable)
    throw Error(ErrorCode::Refuted, "inflator extension is not nonhamiltonian and homogeneously traceable");
  return h;
}

bool Checklist::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.status == CheckStatus::Pass; });
}

bool Checklist::any_fail() const {
  return std::any_of(items.begin(), items.end(), [](const CheckItem& c) { return c.status == CheckStatus::Fail; });
}

namespace {

struct EndSearch {
  const SimpleGraph& g;
  int target;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  VertexSet used;
  bool exhausted = false;

  bool run(int v, int order) {
    if (++nodes > budget && budget != 0) {
      exhausted = true;
      return false;
    }
    if (order == target) return g.degree(v) >= 3;
    if (kernel::path_bound(g, v, g.vertices() - used) + order - 1 < target) return false;
    bool found = false;
    g.neighbours(v).for_each([&](int w) {
      if (found || exhausted || used.contains(w)) return;
      used.insert(w);
      found = run(w, order + 1);
      used.erase(w);
    });
    return found;
  }
};

CheckItem item(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

}  // namespace

Checklist cnd_necessary_conditions(const SimpleGraph& g, const DetourProfile& profile, std::uint64_t budget) {
  Checklist out;
  const int n = g.order();
  const int tau = profile.tau;
  const auto sr = structure_report(g);
  out.items.push_back(item("2-connected", sr.two_connected));

  int worst = 0;
  for (int v = 0; v < n; ++v) {
    int c = 0;
    g.neighbours(v).for_each([&](int w) { c += g.degree(w) == 2; });
    worst = std::max(worst, c);
  }
  out.items.push_back(item("degree-2 neighbours", worst <= 1, "max " + std::to_string(worst)));

  {
    EndSearch s{g, tau, budget, 0, VertexSet{}, false};
    bool found = false;
    for (int v = 0; v < n && !found && !s.exhausted; ++v) {
      if (g.degree(v) < 3) continue;
      s.used = VertexSet{};
      s.used.insert(v);
      found = s.run(v, 1);
    }
    CheckItem c{"detour with ends of degree >= 3", found ? CheckStatus::Pass : CheckStatus::Fail, {}};
    if (!found && s.exhausted) {
      c.status = CheckStatus::Unknown;
      c.detail = "budget exhausted";
    }
    out.items.push_back(c);
  }

  out.items.push_back(item("max degree <= tau - 4", sr.max_degree <= tau - 4,
                           std::to_string(sr.max_degree) + " vs " + std::to_string(tau - 4)));
  int t = 0;
  for (int v = 0; v < n; ++v) t += g.degree(v) == 2;
  out.items.push_back(item("degree-2 vertices at most half", n - t >= t, std::to_string(t) + " of " + std::to_string(n)));
  const int need = (5 * n + 3) / 4;
  out.items.push_back(item("size >= ceil(5n/4)", g.size() >= need, std::to_string(g.size()) + " vs " + std::to_string(need)));
  out.items.push_back(item("tau >= 9 and n >= 10", tau >= 9 && n >= 10));
  if (sr.bipartite) {
    const int cap = (tau - 2 + 1) / 2;
    out.items.push_back(item("bipartite max degree", sr.max_degree <= cap,
                             std::to_string(sr.max_degree) + " vs " + std::to_string(cap)));
  }
  return out;
}

SimpleGraph mnt_degree2_closure(const SimpleGraph& g) {
  SimpleGraph out = g;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) continue;
    const auto nb = g.neighbours(v).to_vector();
    if (!out.adjacent(nb[0], nb[1])) out = add_edge(out, nb[0], nb[1]);
  }
  return out;
}

SimpleGraph mnt_completion(const SimpleGraph& g, const SearchMode& mode) {
  if (is_traceable(g, mode)) throw Error(ErrorCode::Refuted, "graph is traceable");
  const SimpleGraph closed = mnt_degree2_closure(g);
  SimpleGraph out = closed;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!closed.adjacent(u, v) && !is_traceable(add_edge(closed, u, v), mode)) out = add_edge(out, u, v);
  if (!is_mnt(out, mode)) throw Error(ErrorCode::Refuted, "no unique maximal nontraceable completion");
  return out;
}

}  // namespace detour
