#pragma once

#include <optional>
#include <string>
#include <vector>

#include "detour/engine.hpp"

namespace detour {

enum class BlockKind { IType, RType, UType, HCTV, Inflator };

const char* block_kind_name(BlockKind kind);
BlockKind parse_block_kind(const std::string& name);

// How a block's defining conditions were established.
enum class BlockEvidence {
  Unverified,
  Exhaustive,    // every condition checked by exact search
  Hypohamiltonian,  // derived from a verified maximal hypohamiltonian graph
  Declared,         // maximal hypohamiltonicity asserted by the caller, not checked
};

struct Block {
  SimpleGraph graph;
  std::vector<int> distinguished;  // D = {a,b,c}; anchors {x,y} (none for K1); inflator {a,b}
  BlockKind kind = BlockKind::HCTV;
  int drop = 0;  // inflators only
  BlockEvidence evidence = BlockEvidence::Unverified;
  std::string name;

  int order() const { return graph.order(); }
  bool verified() const { return evidence != BlockEvidence::Unverified; }
};

struct Refutation {
  std::string condition;  // e.g. "I-1", "D-4", "HCTV"
  int vertex = -1;        // counterexample vertex, -1 when the condition is global
};

struct BlockWitness {
  std::string condition;
  int vertex = -1;
  std::vector<std::vector<int>> paths;
};

struct BlockVerdict {
  std::optional<Block> block;
  std::optional<Refutation> refutation;
  std::vector<BlockWitness> witnesses;
  bool ok() const { return block.has_value(); }
};

// Exhaustive check of the kind's conditions; requires order <= the certified limit.
BlockVerdict verify_block(const SimpleGraph& g, const std::vector<int>& distinguished, BlockKind kind,
                          const SearchMode& mode = {});

// verify_block that throws Refuted (with condition and vertex in the message) on failure.
Block require_block(const SimpleGraph& g, const std::vector<int>& distinguished, BlockKind kind,
                    const std::string& name = {}, const SearchMode& mode = {});

// U-type block H - w with D = N(w). With trust_hypohamiltonian the maximality of H is
// taken as given; otherwise it is checked with `mode` (exhaustive search above the limit
// needs mode.override_limit).
Block derive_utype(const SimpleGraph& h, int w, bool trust_hypohamiltonian = false,
                   const SearchMode& mode = SearchMode::exhaustive());

}  // namespace detour
