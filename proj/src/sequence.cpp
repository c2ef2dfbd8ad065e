#include "detour/sequence.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <sstream>

namespace detour {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

DetourSequence::DetourSequence(std::vector<int> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] < 1) throw Error(ErrorCode::BadSequence, "terms must be positive");
    if (i > 0 && terms_[i] < terms_[i - 1]) throw Error(ErrorCode::BadSequence, "terms must be nondecreasing");
  }
}

DetourSequence DetourSequence::sorted(std::vector<int> terms) {
  std::sort(terms.begin(), terms.end());
  return DetourSequence(std::move(terms));
}

DetourSequence DetourSequence::from_runs(const std::vector<Run>& runs) {
  std::vector<int> terms;
  for (const Run& r : runs) {
    if (r.multiplicity < 1) throw Error(ErrorCode::BadSequence, "run multiplicity must be positive");
    terms.insert(terms.end(), r.multiplicity, r.value);
  }
  return DetourSequence(std::move(terms));
}

DetourSequence DetourSequence::parse(std::string_view text) {
  std::vector<int> terms;
  std::string token;
  auto bad = [&]() { return Error(ErrorCode::BadSequence, "cannot parse sequence: " + std::string(text)); };
  auto to_int = [&](const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) throw bad();
    return std::stoi(s);
  };
  std::stringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                token.end());
    if (token.empty()) throw bad();
    if (token.front() == '(') {
      const auto close = token.find(')');
      if (close == std::string::npos || close + 1 >= token.size() || token[close + 1] != 'x') throw bad();
      const int value = to_int(token.substr(1, close - 1));
      const int count = to_int(token.substr(close + 2));
      if (count < 1) throw bad();
      terms.insert(terms.end(), count, value);
    } else {
      terms.push_back(to_int(token));
    }
  }
  if (terms.empty()) throw bad();
  return DetourSequence(std::move(terms));
}

std::vector<Run> DetourSequence::runs() const {
  std::vector<Run> out;
  for (int t : terms_) {
    if (!out.empty() && out.back().value == t) {
      ++out.back().multiplicity;
    } else {
      out.push_back({t, 1});
    }
  }
  return out;
}

int DetourSequence::max_gap() const {
  int gap = 0;
  for (std::size_t i = 1; i < terms_.size(); ++i) gap = std::max(gap, terms_[i] - terms_[i - 1]);
  return gap;
}

std::string DetourSequence::to_string() const {
  std::string out;
  for (const Run& r : runs()) {
    if (!out.empty()) out += ',';
    if (r.multiplicity == 1) {
      out += std::to_string(r.value);
    } else {
      out += '(' + std::to_string(r.value) + ")x" + std::to_string(r.multiplicity);
    }
  }
  return out;
}

SequenceReport analyze_sequence(const DetourSequence& d, int n_vertices, int tau) {
  if (d.empty()) throw Error(ErrorCode::Empty, "empty sequence");
  if (tau != d.max()) throw Error(ErrorCode::BadSequence, "tau must equal the largest term");
  SequenceReport r;
  r.max_gap = d.max_gap();
  r.full = r.max_gap <= 1;
  r.constant = r.max_gap == 0;
  const auto runs = d.runs();
  r.distinct_terms = static_cast<int>(runs.size());
  int longest_run = 0;
  for (const Run& run : runs) {
    longest_run = std::max(longest_run, run.multiplicity);
    if (run.multiplicity >= 2) r.repetitions.push_back(run);
  }
  r.longest_repetition = longest_run >= 2 ? longest_run : 0;
  r.gap_bound = r.max_gap <= tau / 2;
  r.distinct_bound = r.distinct_terms <= ceil_div(tau, 2);
  r.repetition_bound = n_vertices < 2 || longest_run >= ceil_div(2 * n_vertices, tau);
  r.min_term_bound = d.min() >= ceil_div(tau + 1, 2);
  return r;
}

DetourSequence path_sequence(int n) {
  if (n <= 0) throw Error(ErrorCode::Empty, "path of order 0");
  if (n == 1) return DetourSequence({1});
  if (n == 2) return DetourSequence({2, 2});
  const int a = ceil_div(n + 1, 2);
  std::vector<Run> runs{{a, n % 2 == 1 ? 1 : 2}};
  for (int v = a + 1; v <= n; ++v) runs.push_back({v, 2});
  return DetourSequence::from_runs(runs);
}

DetourSequence two_clique_sequence(int n, int m) {
  if (m <= 1 || m > n) throw Error(ErrorCode::BadParams, "two_clique_sequence needs 1 < m <= n");
  return DetourSequence::from_runs({{n, 1}, {n + m - 1, n + m - 2}});
}

SimpleGraph two_clique_graph(int n, int m) {
  if (m <= 1 || m > n) throw Error(ErrorCode::BadParams, "two_clique_graph needs 1 < m <= n");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  std::vector<int> second{0};
  for (int i = 0; i < m - 1; ++i) second.push_back(n + i);
  for (std::size_t i = 0; i < second.size(); ++i)
    for (std::size_t j = i + 1; j < second.size(); ++j) edges.emplace_back(second[i], second[j]);
  return build_simple(n + m - 1, edges);
}

DetourSequence multipartite_sequence(std::vector<int> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
    throw Error(ErrorCode::BadParams, "negative part size");
  if (parts.size() < 2) throw Error(ErrorCode::BadParams, "multipartite graph needs at least two parts");
  const int big_n = std::accumulate(parts.begin(), parts.end(), 0);
  const int np = *std::max_element(parts.begin(), parts.end());
  if (2 * np <= big_n) return DetourSequence::from_runs({{big_n, big_n}});
  const int rest = big_n - np;
  return DetourSequence::from_runs({{2 * rest, rest}, {2 * rest + 1, np}});
}

bool is_multipartite_sequence(const DetourSequence& d) {
  if (d.empty()) return false;
  const auto runs = d.runs();
  if (runs.size() == 1) return runs[0].value == runs[0].multiplicity && runs[0].value >= 2;
  if (runs.size() != 2) return false;
  const int n = runs[0].multiplicity;
  return n >= 1 && runs[0].value == 2 * n && runs[1].value == 2 * n + 1 && runs[1].multiplicity > n;
}

bool is_tree_sequence(const DetourSequence& d) {
  if (d.empty()) return false;
  const auto& t = d.terms();
  if (t == std::vector<int>{1}) return true;
  if (t == std::vector<int>{2, 2}) return true;
  const int m = d.max();
  if (m < 3) return false;
  const int a = ceil_div(m + 1, 2);
  const auto runs = d.runs();
  if (static_cast<int>(runs.size()) != m - a + 1) return false;
  for (int j = 0; j < static_cast<int>(runs.size()); ++j) {
    if (runs[j].value != a + j) return false;
    if (j == 0) {
      if (runs[0].multiplicity != (m % 2 == 1 ? 1 : 2)) return false;
    } else if (runs[j].multiplicity < 2) {
      return false;
    }
  }
  return true;
}

SimpleGraph realize_tree(const DetourSequence& d) {
  if (!is_tree_sequence(d)) throw Error(ErrorCode::Unrealizable, "not a tree detour sequence: " + d.to_string());
  const int m = d.max();
  if (m == 1) return SimpleGraph(1);
  if (m == 2) return build_simple(2, {{0, 1}});
  const int a = ceil_div(m + 1, 2);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  int next = m;
  const auto runs = d.runs();
  for (std::size_t j = 1; j < runs.size(); ++j) {
    // v_{a+j-1} in 1-based path labels is index a+j-2.
    const int host = a + static_cast<int>(j) - 2;
    for (int leaf = 0; leaf < runs[j].multiplicity - 2; ++leaf) edges.emplace_back(host, next++);
  }
  return build_simple(next, edges);
}

namespace {

void check_spec(const UnicyclicSpec& spec) {
  if (spec.cycle_len < 3) throw Error(ErrorCode::BadParams, "cycle length must be at least 3");
  if (spec.attachments.empty()) throw Error(ErrorCode::NotPathUnicyclic, "no pendant paths attached");
  for (auto [i, p] : spec.attachments) {
    if (i < 0 || i >= spec.cycle_len) throw Error(ErrorCode::BadVertex, "attachment index " + std::to_string(i));
    if (p < 1) throw Error(ErrorCode::BadParams, "pendant path order must be positive");
  }
}

}  // namespace

UnicyclicResult unicyclic_sequence(const UnicyclicSpec& spec) {
  check_spec(spec);
  const int n = spec.cycle_len;
  std::vector<int> k(n, n), p(n, 0);
  for (auto [i, len] : spec.attachments) {
    p[i] = len;
    if (len >= k[i]) k[i] = len + 1;
    // Walk the long way round from v_l to v_i, then out along P_i.
    for (int l = 0; l < n; ++l) {
      if (l == i) continue;
      const int fwd = (l - i + n) % n;
      const int dist = std::min(fwd, n - fwd);
      k[l] = std::max(k[l], n + len - dist + 1);
    }
  }
  int big_m = 0;
  for (int j = 0; j < n; ++j)
    if (p[j] + 1 < k[j]) big_m = std::max(big_m, k[j] + p[j]);

  UnicyclicResult out;
  out.cycle_orders = k;
  out.per_vertex = k;
  for (auto [i, len] : spec.attachments) {
    assert(k[i] >= len + 1);
    if (k[i] > len + 1) {
      for (int t = 1; t <= len; ++t) out.per_vertex.push_back(k[i] + t);
      continue;
    }
    // Extreme vertex: orders along v_i, P_i fall to m then climb to M.
    const int m = ceil_div(big_m + 1, 2);
    if (m > k[i]) throw Error(ErrorCode::Unrealizable, "extreme-vertex minimum exceeds the cycle box");
    std::vector<int> along;
    for (int x = k[i]; x >= m; --x) along.push_back(x);
    if (big_m % 2 == 0) along.push_back(m);
    for (int x = m + 1; x <= big_m; ++x) along.push_back(x);
    if (static_cast<int>(along.size()) != len + 1)
      throw Error(ErrorCode::Unrealizable, "extreme-vertex orders do not fit the pendant path");
    out.per_vertex.insert(out.per_vertex.end(), along.begin() + 1, along.end());
  }
  out.sequence = DetourSequence::sorted(out.per_vertex);
  return out;
}

SimpleGraph build_path_unicyclic(const UnicyclicSpec& spec) {
  check_spec(spec);
  const int n = spec.cycle_len;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  int next = n;
  for (auto [i, len] : spec.attachments) {
    int prev = i;
    for (int t = 0; t < len; ++t) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return build_simple(next, edges);
}

}  // namespace detour
