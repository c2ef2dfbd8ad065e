#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "detour/graph.hpp"

namespace detour {

inline constexpr int kIsomorphismLimit = 64;

struct IsoResult {
  bool isomorphic = false;
  std::vector<int> mapping;  // mapping[v in g] = vertex of h
};

// Backtracking over colour-refinement classes; the returned mapping is checked edge by edge.
IsoResult is_isomorphic(const SimpleGraph& g, const SimpleGraph& h, int limit = kIsomorphismLimit);

// Colour classes from iterated degree / neighbour-colour refinement, named canonically so
// that isomorphic graphs receive identical colourings up to the isomorphism.
std::vector<int> refined_colours(const SimpleGraph& g);
std::uint64_t invariant_hash(const SimpleGraph& g);

// All graphs on n vertices up to isomorphism that satisfy `keep`, grown one edge at a time.
// `keep` must survive edge deletion (if G passes, so does every spanning subgraph of G),
// otherwise graphs reachable only through rejected parents are missed.
std::vector<SimpleGraph> enumerate_graphs(int n, const std::function<bool(const SimpleGraph&)>& keep = {});

// Isomorphism-free collection keyed by invariant_hash.
class IsoBucket {
 public:
  // Returns true when g was new.
  bool insert(const SimpleGraph& g);
  const std::vector<SimpleGraph>& graphs() const { return graphs_; }

 private:
  std::vector<SimpleGraph> graphs_;
  std::unordered_map<std::uint64_t, std::vector<int>> index_;
};

}  // namespace detour
