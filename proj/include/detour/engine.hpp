#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "detour/graph.hpp"
#include "detour/sequence.hpp"

namespace detour {

enum class Verification { Certified, Witnessed };

// Largest order the subset DP accepts regardless of configuration (2^n words of scratch).
inline constexpr int kMaxDpOrder = 28;

// DETOUR_CERTIFIED_LIMIT if set and valid, else 24; clamped to kMaxDpOrder.
int default_certified_limit();

struct SearchMode {
  Verification mode = Verification::Certified;
  int certified_limit = default_certified_limit();
  // Certified mode above the limit: run exhaustive branch-and-bound instead of failing.
  bool override_limit = false;
  std::uint64_t node_budget = 10'000'000;

  static SearchMode certified() { return {}; }
  static SearchMode witnessed() {
    SearchMode m;
    m.mode = Verification::Witnessed;
    return m;
  }
  static SearchMode exhaustive() {
    SearchMode m;
    m.override_limit = true;
    return m;
  }
};

struct PathWitness {
  std::vector<int> vertices;
  int order() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

bool is_path_in(const SimpleGraph& g, const std::vector<int>& vertices);

struct TrailWitness {
  std::vector<int> vertices;  // length + 1 entries
  std::vector<int> edges;
  int length() const { return static_cast<int>(edges.size()); }
};

bool is_trail_in(const MultiGraph& m, const TrailWitness& t);

struct LongestPath {
  int order = 0;
  PathWitness witness;
  bool exact = true;
};

LongestPath longest_path_from(const SimpleGraph& g, int v, const SearchMode& mode = {});
int longest_path_between(const SimpleGraph& g, int u, int v, const SearchMode& mode = {});

// A path of order >= target starting at v (lexicographically least such prefix), if the
// search finds one within the budget; budget 0 means unlimited.
std::optional<PathWitness> find_path_of_order(const SimpleGraph& g, int v, int target, std::uint64_t budget);

struct DetourProfile {
  int tau = 0;
  DetourSequence sequence;
  int deficiency = 0;
  std::vector<int> per_vertex;
  std::vector<PathWitness> witnesses;  // filled when requested
  bool disconnected = false;
  bool exact = true;
};

DetourProfile detour_profile(const SimpleGraph& g, const SearchMode& mode = {}, bool with_witnesses = false);

int circumference(const SimpleGraph& g, const SearchMode& mode = {});

struct TraceabilityFlags {
  bool traceable = false;
  bool hamiltonian = false;
  bool homogeneously_traceable = false;
  bool hamiltonian_connected = false;
};

bool is_traceable(const SimpleGraph& g, const SearchMode& mode = {});
bool is_hamiltonian(const SimpleGraph& g, const SearchMode& mode = {});
TraceabilityFlags traceability_suite(const SimpleGraph& g, const SearchMode& mode = {});

struct CndReport {
  bool cnd = false;
  bool connected = false;
  bool traceable = false;
  bool constant = false;
  DetourProfile profile;
};

CndReport is_cnd(const SimpleGraph& g, const SearchMode& mode = {});

struct HypoFlags {
  bool hypohamiltonian = false;
  bool maximal_hypohamiltonian = false;
};

HypoFlags hypohamiltonicity_suite(const SimpleGraph& g, const SearchMode& mode = {});

bool is_mnt(const SimpleGraph& g, const SearchMode& mode = {});

inline constexpr int kToughnessLimit = 20;
bool is_1_tough(const SimpleGraph& g);

inline constexpr int kTrailEdgeLimit = 64;

struct LongestTrail {
  int length = 0;
  TrailWitness witness;
  bool spanning = false;
};

// start = (vertex, incident edge id) forces the first step.
LongestTrail longest_trail(const MultiGraph& m, std::optional<std::pair<int, int>> start = std::nullopt);

struct Incidence {
  int vertex = 0;
  int edge = 0;
};

struct AdmissibilityReport {
  bool admissible = false;
  bool a1 = false;
  bool a2 = false;
  int longest_trail = 0;
  std::vector<std::pair<Incidence, TrailWitness>> certificate;
  std::optional<Incidence> failure;
};

AdmissibilityReport is_admissible(const MultiGraph& m);

struct PresentabilityReport {
  bool presentable = false;
  bool s1 = false;
  bool s2 = false;
  bool s3 = false;
  std::optional<Incidence> failure;
};

PresentabilityReport is_presentable(const MultiGraph& m);

}  // namespace detour
