#include "ahg/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace ahg {

const char* invariant_name(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::independence: return "alpha";
    case InvariantKind::transversal: return "tau";
    case InvariantKind::covering: return "rho";
    case InvariantKind::matching: return "nu";
    case InvariantKind::weak_chromatic: return "chi";
    case InvariantKind::strong_chromatic: return "chi-strong";
  }
  return "?";
}

namespace {

// Shared node accounting.  Each recursive decision costs one node; once the
// limit is hit every pending recursion unwinds immediately and the caller
// flags the result inconclusive.
struct Ticker {
  std::int64_t limit;
  std::int64_t nodes = 0;
  bool exhausted = false;
  bool tick() {
    if (exhausted) return false;
    if (++nodes > limit) {
      exhausted = true;
      return false;
    }
    return true;
  }
};

std::vector<std::vector<int>> incidence_lists(const SupportHypergraph& h) {
  std::vector<std::vector<int>> inc(h.vertex_count);
  for (std::size_t e = 0; e < h.edges.size(); ++e)
    for (int v : h.edges[e]) inc[v].push_back(static_cast<int>(e));
  return inc;
}

// ---------------------------------------------------------------- alpha --
// Branch and bound over vertices in index order, include-branch first.
// Bound: even taking every remaining vertex cannot beat the incumbent.

struct IndependenceSearch {
  const SupportHypergraph& h;
  std::vector<std::vector<int>> inc;
  std::vector<char> in_set;
  std::vector<int> current, best_set;
  int best = -1;
  Ticker t;

  IndependenceSearch(const SupportHypergraph& hg, SearchBudget b)
      : h(hg), inc(incidence_lists(hg)), in_set(hg.vertex_count, 0), t{b.node_limit} {}

  // Would adding v close some edge whose other two vertices are chosen?
  bool completes_edge(int v) const {
    for (int e : inc[v]) {
      int chosen = 0;
      for (int u : h.edges[e])
        if (u != v && in_set[u]) ++chosen;
      if (chosen == 2) return true;
    }
    return false;
  }

  void rec(int idx) {
    if (!t.tick()) return;
    const int count = static_cast<int>(current.size());
    if (count + (h.vertex_count - idx) <= best) return;
    if (idx == h.vertex_count) {
      best = count;
      best_set = current;
      return;
    }
    if (!completes_edge(idx)) {
      in_set[idx] = 1;
      current.push_back(idx);
      rec(idx + 1);
      current.pop_back();
      in_set[idx] = 0;
    }
    rec(idx + 1);
  }
};

// ------------------------------------------------------------------ tau --
// Branch on the three vertices of the first unhit edge.  Lower bound: a
// greedy packing of pairwise disjoint unhit edges, each of which forces a
// distinct future pick.

struct TransversalSearch {
  const SupportHypergraph& h;
  std::vector<std::vector<int>> inc;
  std::vector<int> hit;  // per edge: how many chosen vertices it contains
  std::vector<int> current, best_set;
  int best;
  Ticker t;

  TransversalSearch(const SupportHypergraph& hg, SearchBudget b)
      : h(hg), inc(incidence_lists(hg)), hit(hg.edges.size(), 0),
        best(hg.vertex_count + 1), t{b.node_limit} {}

  int packing_bound() const {
    std::vector<char> blocked(h.vertex_count, 0);
    int packed = 0;
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      if (hit[e]) continue;
      const auto& t3 = h.edges[e];
      if (blocked[t3[0]] || blocked[t3[1]] || blocked[t3[2]]) continue;
      blocked[t3[0]] = blocked[t3[1]] = blocked[t3[2]] = 1;
      ++packed;
    }
    return packed;
  }

  void rec() {
    if (!t.tick()) return;
    int open = -1;
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      if (!hit[e]) {
        open = static_cast<int>(e);
        break;
      }
    }
    const int count = static_cast<int>(current.size());
    if (open < 0) {
      if (count < best) {
        best = count;
        best_set = current;
      }
      return;
    }
    if (count + packing_bound() >= best) return;
    for (int v : h.edges[open]) {
      current.push_back(v);
      for (int e : inc[v]) ++hit[e];
      rec();
      for (int e : inc[v]) --hit[e];
      current.pop_back();
    }
  }
};

// ------------------------------------------------------------------ rho --
// Minimum edge cover of the vertices.  Branch on the uncovered vertex with
// the fewest incident edges; bound by ceil(uncovered/3); remember the best
// pick count per covered-set (when it fits in 64 bits) to prune revisits.

struct CoverSearch {
  const SupportHypergraph& h;
  std::vector<std::vector<int>> inc;
  std::vector<int> cover_count;  // per vertex: #chosen edges containing it
  int uncovered;
  std::vector<int> current, best_set;
  int best;
  Ticker t;
  bool use_memo;
  std::uint64_t covered_mask = 0;
  std::unordered_map<std::uint64_t, int> memo;
  static constexpr std::size_t kMemoCap = 1u << 22;

  CoverSearch(const SupportHypergraph& hg, SearchBudget b)
      : h(hg), inc(incidence_lists(hg)), cover_count(hg.vertex_count, 0),
        uncovered(hg.vertex_count), best(static_cast<int>(hg.edges.size()) + 1),
        t{b.node_limit}, use_memo(hg.vertex_count <= 64) {}

  void apply(int e, int d) {
    for (int v : h.edges[e]) {
      if (d > 0) {
        if (cover_count[v]++ == 0) {
          --uncovered;
          if (use_memo) covered_mask |= std::uint64_t{1} << v;
        }
      } else {
        if (--cover_count[v] == 0) {
          ++uncovered;
          if (use_memo) covered_mask &= ~(std::uint64_t{1} << v);
        }
      }
    }
  }

  void rec() {
    if (!t.tick()) return;
    const int count = static_cast<int>(current.size());
    if (uncovered == 0) {
      if (count < best) {
        best = count;
        best_set = current;
      }
      return;
    }
    if (count + (uncovered + 2) / 3 >= best) return;
    if (use_memo) {
      auto it = memo.find(covered_mask);
      if (it != memo.end() && it->second <= count) return;
      if (memo.size() < kMemoCap) memo[covered_mask] = count;
      else if (it != memo.end()) it->second = count;
    }
    int pick = -1;
    for (int v = 0; v < h.vertex_count; ++v) {
      if (cover_count[v]) continue;
      if (pick < 0 || inc[v].size() < inc[pick].size()) pick = v;
    }
    for (int e : inc[pick]) {
      current.push_back(e);
      apply(e, +1);
      rec();
      apply(e, -1);
      current.pop_back();
    }
  }
};

// ------------------------------------------------------------------- nu --
// Branch on the lowest-index undecided vertex: either commit one of its
// fully-free edges (ascending) or decide it stays unmatched.

struct MatchingSearch {
  const SupportHypergraph& h;
  std::vector<std::vector<int>> inc;
  std::vector<char> blocked;  // matched by a chosen edge, or decided unmatched
  int free_count;
  std::vector<int> current, best_set;
  int best = -1;
  Ticker t;

  MatchingSearch(const SupportHypergraph& hg, SearchBudget b)
      : h(hg), inc(incidence_lists(hg)), blocked(hg.vertex_count, 0),
        free_count(hg.vertex_count), t{b.node_limit} {}

  void rec(int from) {
    if (!t.tick()) return;
    int v = from;
    while (v < h.vertex_count && blocked[v]) ++v;
    const int count = static_cast<int>(current.size());
    if (v == h.vertex_count) {
      if (count > best) {
        best = count;
        best_set = current;
      }
      return;
    }
    if (count + free_count / 3 <= best) return;
    for (int e : inc[v]) {
      const auto& t3 = h.edges[e];
      if (blocked[t3[0]] || blocked[t3[1]] || blocked[t3[2]]) continue;
      blocked[t3[0]] = blocked[t3[1]] = blocked[t3[2]] = 1;
      free_count -= 3;
      current.push_back(e);
      rec(v + 1);
      current.pop_back();
      free_count += 3;
      blocked[t3[0]] = blocked[t3[1]] = blocked[t3[2]] = 0;
    }
    blocked[v] = 1;
    --free_count;
    rec(v + 1);
    ++free_count;
    blocked[v] = 0;
  }
};

// ------------------------------------------------------------------ chi --
// Weak coloring: no edge monochromatic.  Iterative deepening on the color
// count; vertices colored in index order with the canonical rule that a new
// color may appear only right after all smaller ones.

struct WeakColorSearch {
  const SupportHypergraph& h;
  // For each vertex v, the (a,b) pairs of edges whose maximum vertex is v.
  std::vector<std::vector<std::pair<int, int>>> by_max;
  std::vector<int> color;
  Ticker t;

  WeakColorSearch(const SupportHypergraph& hg, SearchBudget b)
      : h(hg), by_max(hg.vertex_count), color(hg.vertex_count, -1), t{b.node_limit} {
    for (const auto& e : h.edges) by_max[e[2]].push_back({e[0], e[1]});
  }

  bool rec(int v, int k, int used) {
    if (!t.tick()) return false;
    if (v == h.vertex_count) return true;
    const int cap = std::min(k - 1, used);
    for (int c = 0; c <= cap; ++c) {
      bool mono = false;
      for (const auto& [a, bb] : by_max[v]) {
        if (color[a] == c && color[bb] == c) {
          mono = true;
          break;
        }
      }
      if (mono) continue;
      color[v] = c;
      if (rec(v + 1, k, std::max(used, c + 1))) return true;
      color[v] = -1;
      if (t.exhausted) return false;
    }
    return false;
  }
};

// ----------------------------------------------------------- chi-strong --
// Rainbow coloring: every edge gets three distinct colors, i.e. a proper
// coloring of the co-occurrence graph.  Complete co-occurrence short-cuts
// to |V|; otherwise DSATUR-ordered branch and bound with the same
// canonical new-color rule.

struct StrongColorSearch {
  int n;
  std::vector<std::vector<char>> adj;
  std::vector<std::vector<int>> neighbors;
  std::vector<int> color;
  Ticker t;

  StrongColorSearch(const SupportHypergraph& h, SearchBudget b)
      : n(h.vertex_count), adj(h.vertex_count, std::vector<char>(h.vertex_count, 0)),
        neighbors(h.vertex_count), color(h.vertex_count, -1), t{b.node_limit} {
    for (const auto& e : h.edges) {
      adj[e[0]][e[1]] = adj[e[1]][e[0]] = 1;
      adj[e[0]][e[2]] = adj[e[2]][e[0]] = 1;
      adj[e[1]][e[2]] = adj[e[2]][e[1]] = 1;
    }
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (adj[u][v]) neighbors[u].push_back(v);
  }

  bool complete() const {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!adj[u][v]) return false;
    return true;
  }

  // Greedy clique through ascending indices: a lower bound on the demand.
  int clique_bound() const {
    std::vector<int> clique;
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      for (int u : clique)
        if (!adj[u][v]) {
          ok = false;
          break;
        }
      if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
  }

  // Next vertex: most distinctly-colored neighbors, lowest index on ties.
  int select() const {
    int pick = -1, pick_sat = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      std::vector<char> seen(n, 0);
      int sat = 0;
      for (int u : neighbors[v])
        if (color[u] >= 0 && !seen[color[u]]) {
          seen[color[u]] = 1;
          ++sat;
        }
      if (sat > pick_sat) {
        pick_sat = sat;
        pick = v;
      }
    }
    return pick;
  }

  bool rec(int colored, int k, int used) {
    if (!t.tick()) return false;
    if (colored == n) return true;
    const int v = select();
    const int cap = std::min(k - 1, used);
    for (int c = 0; c <= cap; ++c) {
      bool clash = false;
      for (int u : neighbors[v])
        if (color[u] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      color[v] = c;
      if (rec(colored + 1, k, std::max(used, c + 1))) return true;
      color[v] = -1;
      if (t.exhausted) return false;
    }
    return false;
  }
};

InvariantResult make_result(InvariantKind kind, std::int64_t value, const Ticker& t) {
  InvariantResult r;
  r.kind = kind;
  r.value = value;
  r.nodes_explored = t.nodes;
  r.budget_exhausted = t.exhausted;
  return r;
}

}  // namespace

InvariantResult independence_number(const SupportHypergraph& h, SearchBudget budget) {
  IndependenceSearch s(h, budget);
  s.best = 0;  // the empty set is always independent
  s.rec(0);
  InvariantResult r = make_result(InvariantKind::independence, s.best, s.t);
  r.witness_vertices = s.best_set;
  return r;
}

InvariantResult transversal_number(const SupportHypergraph& h, SearchBudget budget) {
  TransversalSearch s(h, budget);
  s.rec();
  InvariantResult r = make_result(InvariantKind::transversal, s.best, s.t);
  r.witness_vertices = s.best_set;
  // Dual route: complements of independent sets are transversals and vice
  // versa, so alpha + tau = |V|.  When both searches prove optimality the
  // identity must hold; a violation means a solver bug, not a finding.
  if (!r.budget_exhausted) {
    const InvariantResult alpha = independence_number(h, budget);
    if (!alpha.budget_exhausted && alpha.value + r.value != h.vertex_count)
      throw std::logic_error("transversal/independence duality violated");
  }
  return r;
}

InvariantResult covering_number(const SupportHypergraph& h, SearchBudget budget) {
  if (h.vertex_count == 0)
    return make_result(InvariantKind::covering, 0, Ticker{budget.node_limit});
  {
    std::vector<char> seen(h.vertex_count, 0);
    for (const auto& e : h.edges)
      for (int v : e) seen[v] = 1;
    for (int v = 0; v < h.vertex_count; ++v)
      if (!seen[v]) throw infeasible_error(v);
  }
  CoverSearch s(h, budget);
  s.rec();
  InvariantResult r = make_result(InvariantKind::covering, s.best, s.t);
  r.witness_edges = s.best_set;
  std::sort(r.witness_edges.begin(), r.witness_edges.end());
  return r;
}

InvariantResult matching_number(const SupportHypergraph& h, SearchBudget budget) {
  MatchingSearch s(h, budget);
  s.rec(0);
  InvariantResult r = make_result(InvariantKind::matching, s.best, s.t);
  r.witness_edges = s.best_set;
  return r;
}

InvariantResult weak_chromatic_number(const SupportHypergraph& h, SearchBudget budget) {
  if (h.edges.empty()) {
    InvariantResult r = make_result(InvariantKind::weak_chromatic,
                                    h.vertex_count > 0 ? 1 : 0, Ticker{budget.node_limit});
    r.witness_coloring.assign(h.vertex_count, 0);
    return r;
  }
  WeakColorSearch s(h, budget);
  int k = 2;  // with at least one edge, two colors are necessary
  for (; k <= h.vertex_count; ++k) {
    std::fill(s.color.begin(), s.color.end(), -1);
    if (s.rec(0, k, 0)) {
      InvariantResult r = make_result(InvariantKind::weak_chromatic, k, s.t);
      r.witness_coloring = s.color;
      return r;
    }
    if (s.t.exhausted) break;
  }
  // Exhausted mid-deepening: every count below k was refuted outright, so k
  // is a sound lower bound but not the invariant.
  InvariantResult r = make_result(InvariantKind::weak_chromatic, k, s.t);
  r.budget_exhausted = true;
  return r;
}

InvariantResult strong_chromatic_number(const SupportHypergraph& h, SearchBudget budget) {
  if (h.edges.empty()) {
    InvariantResult r = make_result(InvariantKind::strong_chromatic,
                                    h.vertex_count > 0 ? 1 : 0, Ticker{budget.node_limit});
    r.witness_coloring.assign(h.vertex_count, 0);
    return r;
  }
  StrongColorSearch s(h, budget);
  if (s.complete()) {
    InvariantResult r = make_result(InvariantKind::strong_chromatic, s.n, s.t);
    r.witness_coloring.resize(s.n);
    std::iota(r.witness_coloring.begin(), r.witness_coloring.end(), 0);
    return r;
  }
  int k = s.clique_bound();  // a clique is a search-free lower bound
  for (; k <= s.n; ++k) {
    std::fill(s.color.begin(), s.color.end(), -1);
    if (s.rec(0, k, 0)) {
      InvariantResult r = make_result(InvariantKind::strong_chromatic, k, s.t);
      r.witness_coloring = s.color;
      return r;
    }
    if (s.t.exhausted) break;
  }
  InvariantResult r = make_result(InvariantKind::strong_chromatic, k, s.t);
  r.budget_exhausted = true;
  return r;
}

bool verify_witness(const SupportHypergraph& h, const InvariantResult& r) {
  auto in_range = [&](int v) { return v >= 0 && v < h.vertex_count; };
  switch (r.kind) {
    case InvariantKind::independence: {
      if (static_cast<std::int64_t>(r.witness_vertices.size()) != r.value) return false;
      std::vector<char> in(h.vertex_count, 0);
      for (int v : r.witness_vertices) {
        if (!in_range(v) || in[v]) return false;
        in[v] = 1;
      }
      for (const auto& e : h.edges)
        if (in[e[0]] && in[e[1]] && in[e[2]]) return false;
      return true;
    }
    case InvariantKind::transversal: {
      if (static_cast<std::int64_t>(r.witness_vertices.size()) != r.value) return false;
      std::vector<char> in(h.vertex_count, 0);
      for (int v : r.witness_vertices) {
        if (!in_range(v) || in[v]) return false;
        in[v] = 1;
      }
      for (const auto& e : h.edges)
        if (!in[e[0]] && !in[e[1]] && !in[e[2]]) return false;
      return true;
    }
    case InvariantKind::covering: {
      if (static_cast<std::int64_t>(r.witness_edges.size()) != r.value) return false;
      std::vector<char> covered(h.vertex_count, 0);
      std::vector<char> used(h.edges.size(), 0);
      for (int e : r.witness_edges) {
        if (e < 0 || e >= static_cast<int>(h.edges.size()) || used[e]) return false;
        used[e] = 1;
        for (int v : h.edges[e]) covered[v] = 1;
      }
      for (int v = 0; v < h.vertex_count; ++v)
        if (!covered[v]) return false;
      return true;
    }
    case InvariantKind::matching: {
      if (static_cast<std::int64_t>(r.witness_edges.size()) != r.value) return false;
      std::vector<char> used_v(h.vertex_count, 0);
      for (int e : r.witness_edges) {
        if (e < 0 || e >= static_cast<int>(h.edges.size())) return false;
        for (int v : h.edges[e]) {
          if (used_v[v]) return false;
          used_v[v] = 1;
        }
      }
      return true;
    }
    case InvariantKind::weak_chromatic:
    case InvariantKind::strong_chromatic: {
      if (static_cast<int>(r.witness_coloring.size()) != h.vertex_count) return false;
      std::vector<char> used(std::max<std::int64_t>(r.value, 1), 0);
      for (int c : r.witness_coloring) {
        if (c < 0 || c >= r.value) return false;
        used[c] = 1;
      }
      for (std::int64_t c = 0; c < r.value; ++c)
        if (!used[c]) return false;  // the claimed count must be attained
      for (const auto& e : h.edges) {
        const int a = r.witness_coloring[e[0]];
        const int b = r.witness_coloring[e[1]];
        const int c = r.witness_coloring[e[2]];
        if (r.kind == InvariantKind::weak_chromatic) {
          if (a == b && b == c) return false;
        } else {
          if (a == b || b == c || a == c) return false;
        }
      }
      return true;
    }
  }
  return false;
}

namespace {

struct PolySearch {
  const SupportHypergraph& h;
  std::vector<char> blocked;
  std::vector<std::int64_t> coeff;
  Ticker t;

  PolySearch(const SupportHypergraph& hg, SearchBudget b)
      : h(hg), blocked(hg.vertex_count, 0), coeff(hg.vertex_count / 3 + 1, 0),
        t{b.node_limit} {}

  void rec(int from, int depth) {
    if (!t.tick()) return;
    ++coeff[depth];
    for (int e = from; e < static_cast<int>(h.edges.size()); ++e) {
      const auto& t3 = h.edges[e];
      if (blocked[t3[0]] || blocked[t3[1]] || blocked[t3[2]]) continue;
      blocked[t3[0]] = blocked[t3[1]] = blocked[t3[2]] = 1;
      rec(e + 1, depth + 1);
      blocked[t3[0]] = blocked[t3[1]] = blocked[t3[2]] = 0;
      if (t.exhausted) return;
    }
  }
};

}  // namespace

MatchingPolynomial matching_polynomial(const SupportHypergraph& h, SearchBudget budget) {
  PolySearch s(h, budget);
  s.rec(0, 0);
  MatchingPolynomial p;
  p.vertex_count = h.vertex_count;
  p.nodes_explored = s.t.nodes;
  p.truncated = s.t.exhausted;
  std::size_t last = 0;
  for (std::size_t k = 0; k < s.coeff.size(); ++k)
    if (s.coeff[k] > 0) last = k;
  p.coefficients.assign(s.coeff.begin(), s.coeff.begin() + last + 1);
  return p;
}

std::string format_matching_polynomial(const MatchingPolynomial& p) {
  std::ostringstream out;
  for (std::size_t k = 0; k < p.coefficients.size(); ++k) {
    if (k) out << " + ";
    out << p.coefficients[k] << "*w1^" << (p.vertex_count - 3 * static_cast<int>(k));
    if (k) out << "*w2^" << k;
  }
  return out.str();
}

}  // namespace ahg
