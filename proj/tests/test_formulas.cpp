#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "ahg/formulas.hpp"

using namespace ahg;

namespace {

std::int64_t binom3(std::int64_t m) { return m * (m - 1) * (m - 2) / 6; }

Fraction plus(const Fraction& a, const Fraction& b) {
  return Fraction(a.num * b.den + b.num * a.den, a.den * b.den);
}

}  // namespace

TEST_CASE("fractions normalize and render") {
  CHECK(Fraction(38, 4) == Fraction(19, 2));
  CHECK(Fraction(4, 2) == Fraction(2));
  CHECK(Fraction(6).is_integral());
  CHECK_FALSE(Fraction(19, 2).is_integral());
  CHECK(Fraction(6).str() == "6");
  CHECK(Fraction(19, 2).str() == "19/2");
  CHECK(Fraction(-6, 4).str() == "-3/2");
}

TEST_CASE("closed forms are only stated for n >= 3") {
  CHECK_THROWS_AS(predict_case_counts(2), std::invalid_argument);
  CHECK_THROWS_AS(predict_degrees(1), std::invalid_argument);
  CHECK_THROWS_AS(predict_invariants(0), std::invalid_argument);
  CHECK_THROWS_WITH_AS(predict_total_edges(2), doctest::Contains("n >= 3"),
                       std::invalid_argument);
}

TEST_CASE("case counts, n = 3 (odd): frozen values") {
  const auto c = predict_case_counts(3);
  CHECK(c[0].count == 120);
  for (int i = 1; i <= 6; ++i) CHECK(c[i].count == 72);
  CHECK(c[7].count == 15);
  CHECK(predict_total_edges(3) == 567);
}

TEST_CASE("case counts, n = 4 (even): frozen values") {
  const auto c = predict_case_counts(4);
  CHECK(c[0].count == 336);
  CHECK(c[1].count == 288);
  CHECK(c[2].count == 288);
  CHECK(c[3].count == 288);
  CHECK(c[4].count == 256);
  CHECK(c[5].count == 256);
  CHECK(c[6].count == 256);
  CHECK(c[7].count == 152);
  CHECK(predict_total_edges(4) == 2120);
}

TEST_CASE("case structure: ids, tag patterns, symmetry blocks") {
  for (int n = 3; n <= 12; ++n) {
    const auto c = predict_case_counts(n);
    for (int i = 0; i < 8; ++i) CHECK(c[i].case_id == i + 1);
    CHECK(c[0].tags == std::array<int, 3>{0, 0, 0});
    CHECK(c[1].tags == std::array<int, 3>{0, 0, 1});
    CHECK(c[2].tags == std::array<int, 3>{0, 1, 0});
    CHECK(c[3].tags == std::array<int, 3>{1, 0, 0});
    CHECK(c[4].tags == std::array<int, 3>{0, 1, 1});
    CHECK(c[5].tags == std::array<int, 3>{1, 0, 1});
    CHECK(c[6].tags == std::array<int, 3>{1, 1, 0});
    CHECK(c[7].tags == std::array<int, 3>{1, 1, 1});

    // All-untagged triples associate unconditionally: 6 per 3-subset of D_n.
    CHECK(c[0].count == 6 * binom3(2 * n));
    // One-tag cases agree among themselves, as do two-tag cases.
    CHECK(c[1].count == c[2].count);
    CHECK(c[2].count == c[3].count);
    CHECK(c[4].count == c[5].count);
    CHECK(c[5].count == c[6].count);

    std::int64_t total = 0;
    for (const auto& row : c) total += row.count;
    CHECK(total == predict_total_edges(n));
  }
}

TEST_CASE("degree predictions, n = 3 (odd): frozen, no proof variants") {
  const auto d = predict_degrees(3);
  const std::int64_t expect[6] = {285, 93, 69, 114, 117, 112};
  for (int i = 0; i < 6; ++i) {
    CHECK(d[i].statement == expect[i]);
    CHECK_FALSE(d[i].proof.has_value());
  }
  CHECK(d[0].cls == VertexClass::untagged_center);
  CHECK(d[5].cls == VertexClass::tagged_reflection);
}

TEST_CASE("degree predictions, n = 4 (even): statement and proof diverge") {
  const auto d = predict_degrees(4);
  const std::int64_t statement[6] = {615, 237, 255, 336, 396, 334};
  for (int i = 0; i < 6; ++i) CHECK(d[i].statement == statement[i]);
  // Untagged classes read the same both ways; the tagged expansions differ.
  CHECK_FALSE(d[0].proof.has_value());
  CHECK_FALSE(d[1].proof.has_value());
  CHECK_FALSE(d[2].proof.has_value());
  CHECK(d[3].proof == 340);
  CHECK(d[4].proof == 412);
  CHECK(d[5].proof == 346);
}

TEST_CASE("vertex class labels") {
  CHECK(std::string(vertex_class_label(VertexClass::untagged_center)) == "(g,0) Z");
  CHECK(std::string(vertex_class_label(VertexClass::untagged_rotation)) == "(g,0) R");
  CHECK(std::string(vertex_class_label(VertexClass::untagged_reflection)) == "(g,0) S");
  CHECK(std::string(vertex_class_label(VertexClass::tagged_center)) == "(g,1) Z");
  CHECK(std::string(vertex_class_label(VertexClass::tagged_rotation)) == "(g,1) R");
  CHECK(std::string(vertex_class_label(VertexClass::tagged_reflection)) == "(g,1) S");
}

TEST_CASE("invariant predictions, n = 3 (odd): frozen") {
  const InvariantPrediction p = predict_invariants(3);
  CHECK(p.independence == Fraction(5));
  CHECK_FALSE(p.independence_alternate.has_value());
  CHECK(p.transversal == Fraction(7));
  CHECK(p.covering == Fraction(4));
  CHECK(p.matching == Fraction(4));
  CHECK(p.weak_chromatic == Fraction(8));
  CHECK(p.strong_chromatic == Fraction(12));
}

TEST_CASE("invariant predictions, n = 4 (even): frozen, with the proof's alternate") {
  const InvariantPrediction p = predict_invariants(4);
  CHECK(p.independence == Fraction(6));
  CHECK(p.independence_alternate == Fraction(5));
  CHECK(p.transversal == Fraction(10));
  CHECK(p.covering == Fraction(6));
  CHECK(p.matching == Fraction(5));
  CHECK(p.weak_chromatic == Fraction(6));
  CHECK(p.strong_chromatic == Fraction(16));
}

TEST_CASE("even predictions go fractional exactly where expected") {
  // n = 6: 7n/4 - 1 = 19/2 and the alternate n/4 + 4 = 11/2.
  const InvariantPrediction p = predict_invariants(6);
  CHECK(p.weak_chromatic == Fraction(19, 2));
  CHECK_FALSE(p.weak_chromatic.is_integral());
  CHECK(p.independence_alternate == Fraction(11, 2));
  // Divisible by 4: everything integral again.
  const InvariantPrediction q = predict_invariants(8);
  CHECK(q.weak_chromatic.is_integral());
  CHECK(q.independence_alternate->is_integral());
}

TEST_CASE("predicted independence and transversal always sum to |V| = 4n") {
  for (int n = 3; n <= 20; ++n) {
    const InvariantPrediction p = predict_invariants(n);
    CHECK(plus(p.independence, p.transversal) == Fraction(4 * n));
    CHECK(p.strong_chromatic == Fraction(4 * n));
  }
}

TEST_CASE("parity helpers") {
  CHECK(parity_of(3) == Parity::odd);
  CHECK(parity_of(4) == Parity::even);
  CHECK(std::string(parity_name(Parity::odd)) == "odd");
  CHECK(std::string(parity_name(Parity::even)) == "even");
}
