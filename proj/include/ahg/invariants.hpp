#pragma once

// Exact combinatorial invariants of a 3-uniform hypergraph, each computed by
// branch-and-bound search that returns an optimal witness:
//
//   independence  largest vertex set containing no edge entirely
//   transversal   smallest vertex set meeting every edge
//   covering      fewest edges whose union is every vertex
//   matching      most pairwise disjoint edges
//   weak chromatic    fewest colors with no monochromatic edge
//   strong chromatic  fewest colors making every edge rainbow
//
// Every solver counts decision nodes against a budget.  On exhaustion it
// reports the best bound found so far with budget_exhausted=true; callers
// must treat such a value as inconclusive, never as the invariant.
// Tie-breaks are lowest-index-first throughout, so results (witnesses
// included) are deterministic.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ahg/hypergraph.hpp"

namespace ahg {

struct SearchBudget {
  std::int64_t node_limit = 50'000'000;
};

// Thrown by covering_number when some vertex lies in no edge.
struct infeasible_error : std::runtime_error {
  int isolated_vertex;
  explicit infeasible_error(int v)
      : std::runtime_error("vertex " + std::to_string(v) +
                           " lies in no edge; no edge cover exists"),
        isolated_vertex(v) {}
};

enum class InvariantKind {
  independence,
  transversal,
  covering,
  matching,
  weak_chromatic,
  strong_chromatic,
};

const char* invariant_name(InvariantKind kind);

struct InvariantResult {
  InvariantKind kind{};
  std::int64_t value = 0;
  // Exactly one of these is populated, depending on the invariant:
  std::vector<int> witness_vertices;  // independence / transversal
  std::vector<int> witness_edges;     // covering / matching (indices into edges)
  std::vector<int> witness_coloring;  // colorings: color per vertex
  std::int64_t nodes_explored = 0;
  bool budget_exhausted = false;
};

InvariantResult independence_number(const SupportHypergraph& h, SearchBudget budget = {});
InvariantResult transversal_number(const SupportHypergraph& h, SearchBudget budget = {});
InvariantResult covering_number(const SupportHypergraph& h, SearchBudget budget = {});
InvariantResult matching_number(const SupportHypergraph& h, SearchBudget budget = {});
InvariantResult weak_chromatic_number(const SupportHypergraph& h, SearchBudget budget = {});
InvariantResult strong_chromatic_number(const SupportHypergraph& h, SearchBudget budget = {});

// Polynomial-time re-validation of a witness against the hypergraph and the
// claimed value.  Only meaningful for results with budget_exhausted=false.
bool verify_witness(const SupportHypergraph& h, const InvariantResult& r);

// Matching polynomial sum_k a_k w1^(|V|-3k) w2^k where a_k counts the
// matchings of size k; a_0 = 1 and the last index with a_k > 0 is the
// matching number.  Computed by enumerating disjoint edge subsets in
// canonical order.  On budget exhaustion `truncated` is set and the
// coefficients are unusable.
struct MatchingPolynomial {
  int vertex_count = 0;
  std::vector<std::int64_t> coefficients;
  std::int64_t nodes_explored = 0;
  bool truncated = false;
};
MatchingPolynomial matching_polynomial(const SupportHypergraph& h, SearchBudget budget = {});

// Human-readable rendering, ascending k, e.g. "1*w1^12 + 5*w1^9*w2^1".
std::string format_matching_polynomial(const MatchingPolynomial& p);

}  // namespace ahg
