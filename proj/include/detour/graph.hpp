#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "detour/error.hpp"
#include "detour/vertex_set.hpp"

namespace detour {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1.
class SimpleGraph {
 public:
  static constexpr int kMaxOrder = VertexSet::kCapacity;

  SimpleGraph() = default;
  explicit SimpleGraph(int n);  // edgeless

  int order() const { return n_; }
  int size() const { return m_; }
  const VertexSet& neighbours(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  int min_degree() const;
  int max_degree() const;
  VertexSet vertices() const { return VertexSet::range(n_); }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  // Neighbourhood as a machine word; valid when order() <= 64.
  std::uint64_t mask(int v) const { return adj_[v].word(0); }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  friend SimpleGraph build_simple(int, const std::vector<Edge>&);
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

SimpleGraph build_simple(int n, const std::vector<Edge>& edges);

SimpleGraph cartesian_product(const SimpleGraph& g, const SimpleGraph& h);
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& vs);
SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& vs);
SimpleGraph add_edge(const SimpleGraph& g, int u, int v);
SimpleGraph delete_vertex(const SimpleGraph& g, int v);
// Disjoint union of g and h plus edges from every vertex of g to every vertex of h.
SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h);

// Vertices reachable from `start` inside `allowed` (start is always included).
VertexSet reachable(const SimpleGraph& g, int start, const VertexSet& allowed);
bool is_connected(const SimpleGraph& g);
int count_components(const SimpleGraph& g, const VertexSet& allowed);

struct StructureReport {
  bool connected = false;
  bool two_connected = false;
  std::vector<std::vector<int>> components;
  int min_degree = 0;
  int max_degree = 0;
  std::optional<int> girth;  // nullopt when acyclic
  bool claw_free = true;
  bool bipartite = false;
  std::vector<int> two_colouring;  // empty unless bipartite
  bool regular() const { return min_degree == max_degree; }
};

StructureReport structure_report(const SimpleGraph& g);
std::optional<int> girth(const SimpleGraph& g);
bool is_claw_free(const SimpleGraph& g);
std::vector<int> cut_vertices(const SimpleGraph& g);

std::string to_graph6(const SimpleGraph& g);
SimpleGraph from_graph6(std::string_view text);

// Undirected multigraph with loops; edge ids are dense and stable.
class MultiGraph {
 public:
  MultiGraph() = default;

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }
  int degree(int v) const;
  // Edge ids incident to v in ascending order; a loop appears once.
  std::vector<int> incident(int v) const;
  int other_end(int id, int v) const;
  bool is_cubic() const;
  bool is_connected() const;
  bool has_loops() const;
  bool has_parallel_edges() const;

 private:
  friend MultiGraph build_multigraph(int, const std::vector<Edge>&);
  int n_ = 0;
  std::vector<Edge> edges_;
};

MultiGraph build_multigraph(int n, const std::vector<Edge>& edges);
MultiGraph to_multigraph(const SimpleGraph& g);
// Throws BadFormat on loops or parallel edges.
SimpleGraph to_simple(const MultiGraph& m);

std::string to_multigraph_text(const MultiGraph& m);
MultiGraph parse_multigraph_text(std::string_view text);

}  // namespace detour
