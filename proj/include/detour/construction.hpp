#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detour/blocks.hpp"
#include "detour/engine.hpp"

namespace detour {

// A multigraph under construction. Vertices are inflated into blocks and edges are
// subdivided by inserted blocks; edge ids of the base survive inflation so insertions
// can still address them.
class Assembly {
 public:
  explicit Assembly(const MultiGraph& base);

  // Edge-ends at v in ascending edge-id order; a loop contributes both of its ends.
  std::vector<Incidence> incidences(int v) const;

  // matching[i] = index into b.distinguished for the i-th incidence of v; empty means
  // the identity. Throws BadMatching on arity mismatch or reuse, BadBlock for HCTV blocks.
  void inflate_vertex(int v, const Block& b, std::vector<int> matching = {});
  // Kn inflation: the i-th incidence lands on clique vertex i.
  void inflate_clique(int v, int clique_order);
  // Throws BadBlock unless b is an HCTV block.
  void insert_on_edge(int e, const Block& b);

  int vertex_count() const;
  int edge_count() const;
  // Live vertices renumbered in creation order. Throws BadFormat on leftover loops or
  // parallel edges.
  SimpleGraph finish() const;

 private:
  int add_vertex();
  int add_block_copy(const Block& b);
  void check_vertex(int v) const;

  std::vector<bool> alive_;
  std::vector<Edge> edges_;
  std::vector<bool> edge_alive_;
};

enum class Variant { One, Two, Three, Four, F };

const char* variant_name(Variant v);
Variant parse_variant(const std::string& name);

struct Recipe {
  Variant variant = Variant::One;
  MultiGraph base;                  // One..Four
  int cycle_length = 0;             // F
  std::vector<Block> vertex_blocks;  // One, Three, Four: per base vertex; F: inflators around the cycle
  std::vector<int> clique_orders;    // Two: per base vertex
  std::vector<Block> edge_blocks;    // Two, Three: per base edge; F: per cycle edge
};

struct ConstructOptions {
  SearchMode mode = SearchMode::witnessed();
  // Exhaustive certification even above the certified limit.
  bool certify = false;
  // Witnessed verification: skip the per-vertex path searches.
  bool skip_witnesses = false;
};

struct Prediction {
  int order = 0;
  int size = 0;
  int tau = 0;
  int deficiency = 0;
};

struct ConstructionReport {
  SimpleGraph graph;
  Prediction predicted;
  Verification verification = Verification::Witnessed;
  std::vector<PathWitness> witnesses;   // Witnessed: one per vertex, order = predicted.tau
  std::optional<DetourProfile> profile;  // Certified
  bool confirmed = false;  // Certified: exact profile is constant at predicted.tau; Witnessed: all witnesses found
  std::vector<int> missing;  // Witnessed: vertices whose search ran out of budget
  int base_trail = 0;        // Two, Three: longest trail of the base
};

ConstructionReport construct(const Recipe& r, const ConstructOptions& opts = {});
ConstructionReport construct_f(const std::vector<Block>& inflators, const std::vector<Block>& hctvs,
                               const ConstructOptions& opts = {});

// The graph of a recipe without prediction or verification.
SimpleGraph assemble(const Recipe& r);

// Inflator plus a new vertex joined to both distinguished vertices; checked NHHT.
SimpleGraph nhht_from_inflator(const Block& b, const SearchMode& mode = {});

enum class CheckStatus { Pass, Fail, Unknown };

struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::Unknown;
  std::string detail;
};

struct Checklist {
  std::vector<CheckItem> items;
  bool all_pass() const;
  bool any_fail() const;
};

// Necessary conditions satisfied by every CND graph; `profile` must be the graph's profile.
Checklist cnd_necessary_conditions(const SimpleGraph& g, const DetourProfile& profile,
                                   std::uint64_t budget = 10'000'000);

// Joins the two neighbours of every degree-2 vertex of the input (single pass).
SimpleGraph mnt_degree2_closure(const SimpleGraph& g);

// The degree-2 closure plus every further edge whose addition alone keeps the graph
// nontraceable. Throws Refuted when g is traceable or the result is not MNT.
SimpleGraph mnt_completion(const SimpleGraph& g, const SearchMode& mode = {});

// A* with a new Km joined to every vertex of its lowest triangle free of degree-2 vertices.
SimpleGraph claw_free_mnt_family(int m);

}  // namespace detour
