#include "detour/graph.hpp"

#include <algorithm>
#include <sstream>

namespace detour {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::RejectedLoop: return "RejectedLoop";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadGraph6: return "BadGraph6";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::BadStart: return "BadStart";
    case ErrorCode::Refuted: return "Refuted";
    case ErrorCode::NotHypohamiltonian: return "NotHypohamiltonian";
    case ErrorCode::BadMatching: return "BadMatching";
    case ErrorCode::BadBlock: return "BadBlock";
    case ErrorCode::BadBase: return "BadBase";
    case ErrorCode::DropMismatch: return "DropMismatch";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::BadSequence: return "BadSequence";
    case ErrorCode::Unrealizable: return "Unrealizable";
    case ErrorCode::NotPathUnicyclic: return "NotPathUnicyclic";
    case ErrorCode::NotInCatalog: return "NotInCatalog";
    case ErrorCode::CorruptCatalog: return "CorruptCatalog";
    case ErrorCode::BadFormat: return "BadFormat";
  }
  return "Unknown";
}

namespace {

void check_order(int n) {
  if (n < 0) throw Error(ErrorCode::BadParams, "negative vertex count");
  if (n > SimpleGraph::kMaxOrder)
    throw Error(ErrorCode::TooLarge, "order " + std::to_string(n) + " exceeds " +
                                         std::to_string(SimpleGraph::kMaxOrder));
}

void check_vertex(int n, int v) {
  if (v < 0 || v >= n)
    throw Error(ErrorCode::BadVertex, "vertex " + std::to_string(v) + " not in 0.." +
                                          std::to_string(n - 1));
}

}  // namespace

SimpleGraph::SimpleGraph(int n) {
  check_order(n);
  n_ = n;
  adj_.assign(n, VertexSet{});
}

int SimpleGraph::min_degree() const {
  int d = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int SimpleGraph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

SimpleGraph build_simple(int n, const std::vector<Edge>& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw Error(ErrorCode::RejectedLoop, "loop at vertex " + std::to_string(u));
    if (!g.adj_[u].contains(v)) {
      g.adj_[u].insert(v);
      g.adj_[v].insert(u);
      ++g.m_;
    }
  }
  return g;
}

SimpleGraph cartesian_product(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() == 0 || h.order() == 0)
    throw Error(ErrorCode::BadParams, "cartesian product of an empty graph");
  const int nh = h.order();
  check_order(g.order() * nh);
  std::vector<Edge> edges;
  for (int i = 0; i < g.order(); ++i) {
    for (auto [a, b] : h.edges()) edges.emplace_back(i * nh + a, i * nh + b);
  }
  for (auto [a, b] : g.edges()) {
    for (int j = 0; j < nh; ++j) edges.emplace_back(a * nh + j, b * nh + j);
  }
  return build_simple(g.order() * nh, edges);
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& vs) {
  std::vector<int> sorted = vs;
  for (int v : sorted) check_vertex(g.order(), v);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) index[sorted[i]] = i;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  }
  return build_simple(static_cast<int>(sorted.size()), edges);
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& vs) {
  return induced_subgraph(g, vs.to_vector());
}

SimpleGraph add_edge(const SimpleGraph& g, int u, int v) {
  auto edges = g.edges();
  edges.emplace_back(u, v);
  return build_simple(g.order(), edges);
}

SimpleGraph delete_vertex(const SimpleGraph& g, int v) {
  check_vertex(g.order(), v);
  VertexSet keep = g.vertices();
  keep.erase(v);
  return induced_subgraph(g, keep);
}

SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h) {
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  for (auto [a, b] : h.edges()) edges.emplace_back(n + a, n + b);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, n + v);
  return build_simple(n + h.order(), edges);
}

VertexSet reachable(const SimpleGraph& g, int start, const VertexSet& allowed) {
  VertexSet seen;
  seen.insert(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int v) { next |= g.neighbours(v); });
    next &= allowed;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const SimpleGraph& g) {
  if (g.order() == 0) return true;
  return reachable(g, 0, g.vertices()).size() == g.order();
}

int count_components(const SimpleGraph& g, const VertexSet& allowed) {
  VertexSet left = allowed;
  int count = 0;
  while (!left.empty()) {
    left -= reachable(g, left.first(), allowed);
    ++count;
  }
  return count;
}

std::optional<int> girth(const SimpleGraph& g) {
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      g.neighbours(u).for_each([&](int w) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

bool is_claw_free(const SimpleGraph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 3) continue;
    auto nb = g.neighbours(v).to_vector();
    const int d = static_cast<int>(nb.size());
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (int k = j + 1; k < d; ++k)
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return false;
      }
  }
  return true;
}

std::vector<int> cut_vertices(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_cut(n, 0);
  int timer = 0;
  auto dfs = [&](auto&& self, int u, int parent) -> void {
    disc[u] = low[u] = timer++;
    int children = 0;
    g.neighbours(u).for_each([&](int w) {
      if (disc[w] < 0) {
        ++children;
        self(self, w, u);
        low[u] = std::min(low[u], low[w]);
        if (parent >= 0 && low[w] >= disc[u]) is_cut[u] = 1;
      } else if (w != parent) {
        low[u] = std::min(low[u], disc[w]);
      }
    });
    if (parent < 0 && children > 1) is_cut[u] = 1;
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(dfs, v, -1);
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

StructureReport structure_report(const SimpleGraph& g) {
  StructureReport r;
  const int n = g.order();
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = reachable(g, left.first(), g.vertices());
    r.components.push_back(comp.to_vector());
    left -= comp;
  }
  r.connected = r.components.size() <= 1;
  r.two_connected = r.connected && n >= 3 && cut_vertices(g).empty();
  r.min_degree = g.min_degree();
  r.max_degree = g.max_degree();
  r.girth = girth(g);
  r.claw_free = is_claw_free(g);

  std::vector<int> colour(n, -1);
  bool ok = true;
  for (int s = 0; s < n && ok; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      int u = queue[head];
      g.neighbours(u).for_each([&](int w) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          ok = false;
        }
      });
    }
  }
  r.bipartite = ok;
  if (ok) r.two_colouring = colour;
  return r;
}

// graph6: N(n) header then the upper triangle column by column, 6 bits per byte.
std::string to_graph6(const SimpleGraph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

SimpleGraph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Error(ErrorCode::BadGraph6, "empty graph6 string");
  for (char c : text) {
    if (c < 63 || c > 126) throw Error(ErrorCode::BadGraph6, "byte out of range in graph6 string");
  }
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw Error(ErrorCode::BadGraph6, "unsupported graph6 header");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - 63);
    pos = 4;
  }
  if (n > SimpleGraph::kMaxOrder) throw Error(ErrorCode::TooLarge, "graph6 order " + std::to_string(n));
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (pairs + 5) / 6;
  if (text.size() - pos != need) throw Error(ErrorCode::BadGraph6, "graph6 length does not match order");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return build_simple(n, edges);
}

int MultiGraph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

std::vector<int> MultiGraph::incident(int v) const {
  std::vector<int> out;
  for (int id = 0; id < size(); ++id)
    if (edges_[id].first == v || edges_[id].second == v) out.push_back(id);
  return out;
}

int MultiGraph::other_end(int id, int v) const {
  const auto& [a, b] = edges_[id];
  return a == v ? b : a;
}

bool MultiGraph::is_cubic() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != 3) return false;
  return true;
}

bool MultiGraph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<int> parent(n_);
  for (int v = 0; v < n_; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int comps = n_;
  for (auto [a, b] : edges_) {
    int ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps == 1;
}

bool MultiGraph::has_loops() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.first == e.second; });
}

bool MultiGraph::has_parallel_edges() const {
  std::vector<Edge> sorted;
  for (auto [a, b] : edges_) sorted.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

MultiGraph build_multigraph(int n, const std::vector<Edge>& edges) {
  check_order(n);
  MultiGraph m;
  m.n_ = n;
  for (auto [u, v] : edges) {
    check_vertex(n, u);
    check_vertex(n, v);
    m.edges_.emplace_back(u, v);
  }
  return m;
}

MultiGraph to_multigraph(const SimpleGraph& g) { return build_multigraph(g.order(), g.edges()); }

SimpleGraph to_simple(const MultiGraph& m) {
  if (m.has_loops()) throw Error(ErrorCode::BadFormat, "multigraph has a loop");
  if (m.has_parallel_edges()) throw Error(ErrorCode::BadFormat, "multigraph has parallel edges");
  return build_simple(m.order(), m.edges());
}

std::string to_multigraph_text(const MultiGraph& m) {
  std::ostringstream out;
  out << "multigraph " << m.order() << ' ' << m.size() << '\n';
  for (auto [a, b] : m.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

MultiGraph parse_multigraph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<long>> rows;
  std::string header;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (header.empty()) {
      if (first != "multigraph") throw Error(ErrorCode::BadFormat, "expected 'multigraph <n> <m>' header");
      long n = -1, m = -1;
      if (!(ls >> n >> m) || n < 0 || m < 0) throw Error(ErrorCode::BadFormat, "bad multigraph header");
      header = first;
      rows.push_back({n, m});
      continue;
    }
    std::istringstream row(line);
    long u = 0, v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) throw Error(ErrorCode::BadFormat, "bad edge line: " + line);
    rows.push_back({u, v});
  }
  if (header.empty()) throw Error(ErrorCode::BadFormat, "missing multigraph header");
  const long n = rows[0][0], m = rows[0][1];
  if (static_cast<long>(rows.size()) - 1 != m)
    throw Error(ErrorCode::BadFormat, "edge count does not match header");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i)
    edges.emplace_back(static_cast<int>(rows[i][0]), static_cast<int>(rows[i][1]));
  if (n > SimpleGraph::kMaxOrder) throw Error(ErrorCode::TooLarge, "multigraph order");
  return build_multigraph(static_cast<int>(n), edges);
}

}  // namespace detour
