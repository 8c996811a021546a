#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "ahg/algebra.hpp"
#include "ahg/hypergraph.hpp"
#include "ahg/invariants.hpp"

using namespace ahg;

namespace {

SupportHypergraph md3_support() {
  return build_hypergraph(moufang_extension(dihedral_group(3).group)).support();
}

SupportHypergraph order5_support() {
  return build_hypergraph(builtin_order5_loop()).support();
}

int distinct_colors(const std::vector<int>& coloring) {
  return static_cast<int>(std::set<int>(coloring.begin(), coloring.end()).size());
}

}  // namespace

TEST_CASE("synthetic: the empty-edge hypergraph") {
  // A loop of order 2 has no triples of distinct elements at all.
  const Loop z2 = validate_loop({{0, 1}, {1, 0}}, 0);
  const SupportHypergraph h = build_hypergraph(z2).support();
  REQUIRE(h.vertex_count == 2);
  REQUIRE(h.edges.empty());

  CHECK(independence_number(h).value == 2);
  CHECK(transversal_number(h).value == 0);
  CHECK(matching_number(h).value == 0);
  CHECK(weak_chromatic_number(h).value == 1);
  CHECK(strong_chromatic_number(h).value == 1);
  // No edges cannot cover vertex 0.
  try {
    covering_number(h);
    FAIL("covering_number should have thrown");
  } catch (const infeasible_error& e) {
    CHECK(e.isolated_vertex == 0);
    CHECK(std::string(e.what()).find("vertex 0") != std::string::npos);
  }
}

TEST_CASE("synthetic: one edge on three vertices") {
  const SupportHypergraph h{3, {{0, 1, 2}}};
  CHECK(independence_number(h).value == 2);
  CHECK(transversal_number(h).value == 1);
  CHECK(covering_number(h).value == 1);
  CHECK(matching_number(h).value == 1);
  CHECK(weak_chromatic_number(h).value == 2);
  CHECK(strong_chromatic_number(h).value == 3);
}

TEST_CASE("synthetic: two disjoint edges") {
  const SupportHypergraph h{6, {{0, 1, 2}, {3, 4, 5}}};
  CHECK(independence_number(h).value == 4);
  CHECK(transversal_number(h).value == 2);
  CHECK(covering_number(h).value == 2);
  CHECK(matching_number(h).value == 2);
  CHECK(weak_chromatic_number(h).value == 2);
  // Two disjoint triangles of co-occurrence: still 3 colors.
  CHECK(strong_chromatic_number(h).value == 3);
}

TEST_CASE("synthetic: complete 3-uniform hypergraph on four vertices") {
  const SupportHypergraph h{4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  CHECK(independence_number(h).value == 2);
  CHECK(transversal_number(h).value == 2);
  CHECK(covering_number(h).value == 2);
  CHECK(matching_number(h).value == 1);
  CHECK(weak_chromatic_number(h).value == 2);
  CHECK(strong_chromatic_number(h).value == 4);
}

TEST_CASE("empty vertex set") {
  const SupportHypergraph h{0, {}};
  CHECK(independence_number(h).value == 0);
  CHECK(transversal_number(h).value == 0);
  CHECK(covering_number(h).value == 0);
  CHECK(matching_number(h).value == 0);
  CHECK(weak_chromatic_number(h).value == 0);
  CHECK(strong_chromatic_number(h).value == 0);
}

TEST_CASE("order-5 loop: frozen invariants") {
  const SupportHypergraph h = order5_support();
  CHECK(independence_number(h).value == 2);
  CHECK(transversal_number(h).value == 3);
  CHECK(covering_number(h).value == 2);
  CHECK(matching_number(h).value == 1);
  CHECK(weak_chromatic_number(h).value == 3);
  // Every pair of the 5 vertices shares an edge, so the strong chromatic
  // number is |V| and the solver takes the complete-co-occurrence shortcut.
  const InvariantResult strong = strong_chromatic_number(h);
  CHECK(strong.value == 5);
  CHECK(strong.nodes_explored == 0);
  CHECK(verify_witness(h, strong));
}

TEST_CASE("M(D_3,2): frozen invariants with verified witnesses") {
  const SupportHypergraph h = md3_support();

  const InvariantResult alpha = independence_number(h);
  CHECK(alpha.value == 4);
  CHECK(alpha.witness_vertices == std::vector<int>{1, 3, 6, 10});
  CHECK_FALSE(alpha.budget_exhausted);
  CHECK(verify_witness(h, alpha));

  const InvariantResult tau = transversal_number(h);
  CHECK(tau.value == 8);
  CHECK(tau.witness_vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 9});
  CHECK(verify_witness(h, tau));

  // Complement duality on 12 vertices.
  CHECK(alpha.value + tau.value == h.vertex_count);

  const InvariantResult rho = covering_number(h);
  CHECK(rho.value == 4);
  CHECK(verify_witness(h, rho));
  CHECK(rho.witness_edges.size() == 4);

  const InvariantResult nu = matching_number(h);
  CHECK(nu.value == 4);
  CHECK(verify_witness(h, nu));

  const InvariantResult weak = weak_chromatic_number(h);
  CHECK(weak.value == 4);
  CHECK(verify_witness(h, weak));
  CHECK(distinct_colors(weak.witness_coloring) == 4);

  const InvariantResult strong = strong_chromatic_number(h);
  CHECK(strong.value == 12);
  CHECK(strong.nodes_explored == 0);  // complete co-occurrence shortcut
  CHECK(verify_witness(h, strong));
  CHECK(distinct_colors(strong.witness_coloring) == 12);
}

TEST_CASE("witness re-validation rejects tampering") {
  const SupportHypergraph h = md3_support();

  InvariantResult alpha = independence_number(h);
  REQUIRE(verify_witness(h, alpha));
  alpha.value += 1;  // witness no longer matches the claimed value
  CHECK_FALSE(verify_witness(h, alpha));

  InvariantResult tau = transversal_number(h);
  tau.witness_vertices.pop_back();
  CHECK_FALSE(verify_witness(h, tau));

  InvariantResult weak = weak_chromatic_number(h);
  std::fill(weak.witness_coloring.begin(), weak.witness_coloring.end(), 0);
  CHECK_FALSE(verify_witness(h, weak));

  InvariantResult nu = matching_number(h);
  if (nu.witness_edges.size() >= 2) {
    nu.witness_edges[1] = nu.witness_edges[0];  // repeated edge is no matching
    CHECK_FALSE(verify_witness(h, nu));
  }
}

TEST_CASE("budget exhaustion reports a bound, not an answer") {
  const SupportHypergraph h = md3_support();

  const InvariantResult alpha = independence_number(h, SearchBudget{5});
  CHECK(alpha.budget_exhausted);
  CHECK(alpha.nodes_explored >= 5);
  CHECK(alpha.value <= 4);  // best found so far is a lower bound

  const InvariantResult tau = transversal_number(h, SearchBudget{5});
  CHECK(tau.budget_exhausted);

  const InvariantResult weak = weak_chromatic_number(h, SearchBudget{1});
  CHECK(weak.budget_exhausted);
  CHECK(weak.value >= 2);  // every refuted k stays refuted
  CHECK(weak.value <= 4);

  const MatchingPolynomial poly = matching_polynomial(h, SearchBudget{10});
  CHECK(poly.truncated);
}

TEST_CASE("matching polynomial of M(D_3,2): frozen coefficients") {
  const SupportHypergraph h = md3_support();
  const MatchingPolynomial p = matching_polynomial(h);
  CHECK_FALSE(p.truncated);
  CHECK(p.vertex_count == 12);
  CHECK(p.coefficients == std::vector<std::int64_t>{1, 94, 1320, 2446, 166});
  // a_0 = 1, a_1 = |support|, and the top nonzero index is the matching number.
  CHECK(p.coefficients[1] == static_cast<std::int64_t>(h.edges.size()));
  CHECK(static_cast<std::int64_t>(p.coefficients.size()) - 1 == matching_number(h).value);
  CHECK(format_matching_polynomial(p) ==
        "1*w1^12 + 94*w1^9*w2^1 + 1320*w1^6*w2^2 + 2446*w1^3*w2^3 + 166*w1^0*w2^4");
}

TEST_CASE("matching polynomial rendering") {
  CHECK(format_matching_polynomial({12, {1}, 0, false}) == "1*w1^12");
  CHECK(format_matching_polynomial({12, {1, 5}, 0, false}) == "1*w1^12 + 5*w1^9*w2^1");
}

TEST_CASE("matching polynomial of the order-5 loop") {
  // Five vertices cannot host two disjoint triples, so the polynomial stops
  // at the linear coefficient.
  const MatchingPolynomial p = matching_polynomial(order5_support());
  CHECK(p.coefficients == std::vector<std::int64_t>{1, 10});
}

TEST_CASE("invariant names are the CLI spellings") {
  CHECK(std::string(invariant_name(InvariantKind::independence)) == "alpha");
  CHECK(std::string(invariant_name(InvariantKind::transversal)) == "tau");
  CHECK(std::string(invariant_name(InvariantKind::covering)) == "rho");
  CHECK(std::string(invariant_name(InvariantKind::matching)) == "nu");
  CHECK(std::string(invariant_name(InvariantKind::weak_chromatic)) == "chi");
  CHECK(std::string(invariant_name(InvariantKind::strong_chromatic)) == "chi-strong");
}
