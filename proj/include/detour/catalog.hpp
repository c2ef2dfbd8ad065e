#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "detour/blocks.hpp"
#include "detour/construction.hpp"

namespace detour {

struct CatalogInfo {
  std::string name;
  std::string params;  // e.g. "n", "n1,n2,...", "" for none
  std::string summary;
};

std::vector<CatalogInfo> catalog_entries();

struct CatalogItem {
  std::string name;
  std::optional<SimpleGraph> graph;
  std::optional<MultiGraph> multigraph;
  std::optional<Block> block;  // verified block metadata when the entry is a block
};

// Builds an entry and rechecks its declared invariants. Throws NotInCatalog for unknown
// names, BadParams for bad parameters and CorruptCatalog when a recheck fails.
CatalogItem named_graph(const std::string& name, const std::vector<int>& params = {});

// "name" or "name(p1,p2,...)".
std::pair<std::string, std::vector<int>> parse_block_ref(std::string_view ref);

// A verified block of the requested kind built from a catalog entry, using the entry's
// own block when kinds agree and default distinguished vertices otherwise.
Block catalog_block(const std::string& name, const std::vector<int>& params, BlockKind kind);

// Frequently used entries (each also reachable through named_graph).
SimpleGraph graph_a();
SimpleGraph graph_b();
SimpleGraph petersen();
Block g_odot();

struct BlockSearch {
  BlockKind kind = BlockKind::Inflator;
  int min_order = 1;
  int max_order = 8;
  std::optional<int> drop;  // inflators
  bool bipartite = false;
  int girth_min = 0;       // 0 = no constraint
  std::optional<int> size;  // exact edge count
  // Push bipartite / girth constraints into the enumeration; otherwise they filter afterwards.
  bool prune = true;
};

inline constexpr int kBlockSearchLimit = 9;
inline constexpr int kConstrainedBlockSearchLimit = 11;

// Connected graphs in the range carrying a verified block of the kind, one block per
// isomorphism class of the underlying graph (distinguished set lexicographically least),
// sorted by (order, size). Throws TooLarge beyond the enumeration limits.
std::vector<Block> search_block(const BlockSearch& q);

struct CndSearch {
  int max_order = 7;
  bool prune = true;
  bool override_limit = false;
};

inline constexpr int kCndSearchLimit = 7;

struct CndSearchResult {
  std::vector<SimpleGraph> found;  // up to isomorphism
  std::uint64_t labelled_graphs = 0;
  std::uint64_t tested = 0;  // survived pruning
};

// Every labelled graph up to max_order is generated; CND graphs are returned up to isomorphism.
CndSearchResult search_small_cnd(const CndSearch& q);

// Recipe text: `variant`, `base <file-or-catalog-name>` or `cycle <n>`, `inflate <v|*> <block>`,
// `insert <e|*> <block>`. `load_base` resolves the base argument.
Recipe parse_recipe(std::string_view text, const std::function<MultiGraph(const std::string&)>& load_base);

}  // namespace detour
