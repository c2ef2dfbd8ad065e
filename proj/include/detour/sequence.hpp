#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "detour/graph.hpp"

namespace detour {

struct Run {
  int value = 0;
  int multiplicity = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

// Nondecreasing list of vertex detour orders.
class DetourSequence {
 public:
  DetourSequence() = default;
  // Throws BadSequence unless terms are nondecreasing and positive.
  explicit DetourSequence(std::vector<int> terms);
  static DetourSequence sorted(std::vector<int> terms);
  static DetourSequence from_runs(const std::vector<Run>& runs);
  // Accepts "3,4,4" and "3,(4)x2" forms (mixed is fine).
  static DetourSequence parse(std::string_view text);

  const std::vector<int>& terms() const { return terms_; }
  std::vector<Run> runs() const;
  int length() const { return static_cast<int>(terms_.size()); }
  bool empty() const { return terms_.empty(); }
  int min() const { return terms_.front(); }
  int max() const { return terms_.back(); }
  int max_gap() const;
  bool full() const { return max_gap() <= 1; }
  bool constant() const { return max_gap() == 0; }
  std::string to_string() const;

  friend bool operator==(const DetourSequence&, const DetourSequence&) = default;

 private:
  std::vector<int> terms_;
};

struct SequenceReport {
  int max_gap = 0;
  bool full = false;
  bool constant = false;
  std::vector<Run> repetitions;  // runs with multiplicity >= 2
  int longest_repetition = 0;
  int distinct_terms = 0;
  bool gap_bound = false;         // max_gap <= floor(tau/2)
  bool distinct_bound = false;    // distinct terms <= ceil(tau/2)
  bool repetition_bound = false;  // some run of length >= ceil(2n/tau)
  bool min_term_bound = false;    // min term >= ceil((tau+1)/2)
  bool all_bounds() const { return gap_bound && distinct_bound && repetition_bound && min_term_bound; }
};

SequenceReport analyze_sequence(const DetourSequence& d, int n_vertices, int tau);

DetourSequence path_sequence(int n);
DetourSequence two_clique_sequence(int n, int m);
// Cliques on {0..n-1} and {0, n..n+m-2} sharing vertex 0.
SimpleGraph two_clique_graph(int n, int m);
DetourSequence multipartite_sequence(std::vector<int> parts);
// (N)_N, or (2n)_n,(2n+1)_m with m > n.
bool is_multipartite_sequence(const DetourSequence& d);

bool is_tree_sequence(const DetourSequence& d);
// Path v1..vm with k_j - 2 leaves hung on v_{a+j-1}.
SimpleGraph realize_tree(const DetourSequence& d);

struct UnicyclicSpec {
  int cycle_len = 0;
  std::map<int, int> attachments;  // cycle index (0-based) -> pendant path order
};

struct UnicyclicResult {
  std::vector<int> cycle_orders;  // k_i for cycle vertices in order
  std::vector<int> per_vertex;    // detour order per vertex of build_path_unicyclic(spec)
  DetourSequence sequence;
};

UnicyclicResult unicyclic_sequence(const UnicyclicSpec& spec);
// Cycle on 0..n-1, then each pendant path (ascending cycle index) listed from the cycle outward.
SimpleGraph build_path_unicyclic(const UnicyclicSpec& spec);

}  // namespace detour
