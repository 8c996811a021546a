#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "ahg/hypergraph.hpp"
#include "ahg/invariants.hpp"
#include "oracle.hpp"

using namespace ahg;

namespace {

// Random 3-uniform hypergraphs, small enough for the exhaustive oracles.
// Fixed seed: failures must reproduce.
SupportHypergraph random_hypergraph(std::mt19937& rng) {
  std::uniform_int_distribution<int> vdist(4, 12);
  const int v = vdist(rng);
  std::uniform_int_distribution<int> edist(0, 20);
  const int tries = edist(rng);
  std::uniform_int_distribution<int> pick(0, v - 1);
  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < tries; ++i) {
    int a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || b == c || a == c) continue;  // thins the edge count a bit
    triples.push_back({a, b, c});
  }
  return SupportHypergraph::from_triples(v, std::move(triples));
}

}  // namespace

TEST_CASE("oracles agree with the solvers on the known M(D_3,2) values") {
  // Anchor the oracle itself before trusting it on random inputs: the
  // independence/covering/matching/weak values are small enough to scan.
  const SupportHypergraph tiny{4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  CHECK(oracle::independence(tiny) == 2);
  CHECK(oracle::transversal(tiny) == 2);
  CHECK(oracle::covering(tiny) == 2);
  CHECK(oracle::matching(tiny) == 1);
  CHECK(oracle::weak_chromatic(tiny) == 2);
  CHECK(oracle::strong_chromatic(tiny) == 4);
  CHECK(oracle::covering({3, {}}) == -1);
  CHECK(oracle::matching_counts(tiny) == std::vector<std::int64_t>{1, 4});
}

TEST_CASE("200 random hypergraphs: all six solvers match the exhaustive scans") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const SupportHypergraph h = random_hypergraph(rng);
    CAPTURE(trial);
    CAPTURE(h.vertex_count);
    CAPTURE(h.edges.size());

    const InvariantResult alpha = independence_number(h);
    REQUIRE_FALSE(alpha.budget_exhausted);
    CHECK(alpha.value == oracle::independence(h));
    CHECK(verify_witness(h, alpha));

    const InvariantResult tau = transversal_number(h);
    CHECK(tau.value == oracle::transversal(h));
    CHECK(verify_witness(h, tau));

    const int rho_expected = oracle::covering(h);
    if (rho_expected < 0) {
      CHECK_THROWS_AS(covering_number(h), infeasible_error);
    } else {
      const InvariantResult rho = covering_number(h);
      CHECK(rho.value == rho_expected);
      CHECK(verify_witness(h, rho));
    }

    const InvariantResult nu = matching_number(h);
    CHECK(nu.value == oracle::matching(h));
    CHECK(verify_witness(h, nu));

    const InvariantResult weak = weak_chromatic_number(h);
    CHECK(weak.value == oracle::weak_chromatic(h));
    CHECK(verify_witness(h, weak));

    const InvariantResult strong = strong_chromatic_number(h);
    CHECK(strong.value == oracle::strong_chromatic(h));
    CHECK(verify_witness(h, strong));

    const MatchingPolynomial poly = matching_polynomial(h);
    REQUIRE_FALSE(poly.truncated);
    CHECK(poly.coefficients == oracle::matching_counts(h));
  }
}

TEST_CASE("random hypergraphs exercise both feasible and infeasible covers") {
  // Sanity on the generator itself: over the fixed seed, both branches of
  // the covering check must occur a healthy number of times.
  std::mt19937 rng(20240811);
  int infeasible = 0, feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const SupportHypergraph h = random_hypergraph(rng);
    (oracle::covering(h) < 0 ? infeasible : feasible)++;
  }
  CHECK(infeasible >= 10);
  CHECK(feasible >= 10);
}
