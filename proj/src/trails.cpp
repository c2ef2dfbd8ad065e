#include <algorithm>
#include <cstdint>
#include <functional>

#include "detour/engine.hpp"

namespace detour {

namespace {

struct Step {
  int edge;
  int to;
};

std::vector<std::vector<Step>> incidence_lists(const MultiGraph& m) {
  std::vector<std::vector<Step>> inc(m.order());
  for (int id = 0; id < m.size(); ++id) {
    const auto [a, b] = m.edge(id);
    inc[a].push_back({id, b});
    if (a != b) inc[b].push_back({id, a});
  }
  return inc;
}

void check_trail_size(const MultiGraph& m) {
  if (m.size() > kTrailEdgeLimit) throw Error(ErrorCode::TooLarge, "trail search limited to 64 edges");
}

// Calls `visit` on every trail that begins with the step (v, e); returning true stops the walk.
class TrailWalker {
 public:
  explicit TrailWalker(const MultiGraph& m) : m_(m), inc_(incidence_lists(m)), seen_(m.order(), 0) {}

  bool walk(int v, int e, const std::function<bool(const TrailWitness&, int distinct)>& visit) {
    trail_.vertices.assign(1, v);
    trail_.edges.clear();
    std::fill(seen_.begin(), seen_.end(), 0);
    seen_[v] = 1;
    distinct_ = 1;
    used_ = 0;
    visit_ = &visit;
    return advance(e, m_.other_end(e, v));
  }

 private:
  bool advance(int e, int w) {
    used_ |= std::uint64_t{1} << e;
    trail_.edges.push_back(e);
    trail_.vertices.push_back(w);
    if (seen_[w]++ == 0) ++distinct_;
    bool stop = (*visit_)(trail_, distinct_);
    for (std::size_t i = 0; i < inc_[w].size() && !stop; ++i) {
      const Step s = inc_[w][i];
      if (!(used_ >> s.edge & 1U)) stop = advance(s.edge, s.to);
    }
    if (--seen_[w] == 0) --distinct_;
    trail_.vertices.pop_back();
    trail_.edges.pop_back();
    used_ &= ~(std::uint64_t{1} << e);
    return stop;
  }

  const MultiGraph& m_;
  std::vector<std::vector<Step>> inc_;
  std::vector<int> seen_;
  int distinct_ = 0;
  std::uint64_t used_ = 0;
  TrailWitness trail_;
  const std::function<bool(const TrailWitness&, int)>* visit_ = nullptr;
};

bool incident_to(const MultiGraph& m, int v, int e) {
  if (e < 0 || e >= m.size()) return false;
  return m.edge(e).first == v || m.edge(e).second == v;
}

// A trail of exactly `length` edges beginning (v, e) that visits every vertex.
std::optional<TrailWitness> spanning_trail(const MultiGraph& m, int v, int e, int length) {
  std::optional<TrailWitness> found;
  TrailWalker walker(m);
  walker.walk(v, e, [&](const TrailWitness& t, int distinct) {
    if (t.length() == length && distinct == m.order()) {
      found = t;
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace

LongestTrail longest_trail(const MultiGraph& m, std::optional<std::pair<int, int>> start) {
  check_trail_size(m);
  LongestTrail best;
  int best_distinct = 0;
  auto consider = [&](const TrailWitness& t, int distinct) {
    if (t.length() > best.length || (t.length() == best.length && distinct > best_distinct)) {
      best.length = t.length();
      best.witness = t;
      best_distinct = distinct;
    }
    return t.length() == m.size() && distinct == m.order();
  };
  TrailWalker walker(m);
  if (start) {
    const auto [v, e] = *start;
    if (v < 0 || v >= m.order()) throw Error(ErrorCode::BadVertex, "trail start vertex");
    if (!incident_to(m, v, e)) throw Error(ErrorCode::BadStart, "edge " + std::to_string(e) + " not incident to " +
                                                                     std::to_string(v));
    walker.walk(v, e, consider);
  } else {
    if (m.order() > 0) {
      best.witness.vertices = {0};
      best_distinct = 1;
    }
    bool done = false;
    for (int v = 0; v < m.order() && !done; ++v)
      for (int e : m.incident(v)) {
        if (walker.walk(v, e, consider)) {
          done = true;
          break;
        }
      }
  }
  best.spanning = best_distinct == m.order();
  return best;
}

AdmissibilityReport is_admissible(const MultiGraph& m) {
  check_trail_size(m);
  AdmissibilityReport r;
  r.longest_trail = longest_trail(m).length;
  r.a1 = r.longest_trail < m.size();
  r.a2 = true;
  for (int v = 0; v < m.order() && r.a2; ++v)
    for (int e : m.incident(v)) {
      auto t = spanning_trail(m, v, e, r.longest_trail);
      if (!t) {
        r.a2 = false;
        r.failure = Incidence{v, e};
        break;
      }
      r.certificate.push_back({Incidence{v, e}, *t});
    }
  if (m.order() > 0 && m.size() == 0) r.a2 = false;
  r.admissible = r.a1 && r.a2 && m.is_connected();
  return r;
}

PresentabilityReport is_presentable(const MultiGraph& m) {
  check_trail_size(m);
  PresentabilityReport r;
  r.s1 = m.is_cubic();
  const int t = longest_trail(m).length;
  r.s2 = true;
  for (int v = 0; v < m.order() && r.s2; ++v)
    for (int e : m.incident(v))
      if (!spanning_trail(m, v, e, t)) {
        r.s2 = false;
        r.failure = Incidence{v, e};
        break;
      }
  // S-3: hamiltonian path v, e, ... for every incidence.
  const auto inc = incidence_lists(m);
  r.s3 = true;
  std::vector<char> on(m.order(), 0);
  auto extend = [&](auto&& self, int x, int depth) -> bool {
    if (depth == m.order()) return true;
    for (const Step& s : inc[x]) {
      if (on[s.to]) continue;
      on[s.to] = 1;
      if (self(self, s.to, depth + 1)) {
        on[s.to] = 0;
        return true;
      }
      on[s.to] = 0;
    }
    return false;
  };
  for (int v = 0; v < m.order() && r.s3; ++v)
    for (int e : m.incident(v)) {
      const int w = m.other_end(e, v);
      bool ok = false;
      if (w != v) {
        on[v] = on[w] = 1;
        ok = extend(extend, w, 2);
        on[v] = on[w] = 0;
      }
      if (!ok) {
        r.s3 = false;
        if (!r.failure) r.failure = Incidence{v, e};
        break;
      }
    }
  r.presentable = r.s1 && r.s2 && r.s3 && m.is_connected();
  return r;
}

}  // namespace detour
