#pragma once

// Closed-form predictions for the associating hypergraph of M(D_n,2),
// transcribed term by term from their published derivations and deliberately
// left unsimplified so every factor still carries its counting meaning.
// The enumeration engine is the declared ground truth; these values are the
// claims it reconciles against, and a mismatch is a finding, not a failure.
//
// Where a theorem statement and its proof end in different expressions, both
// are carried (statement first, proof as the alternate).  Some closed forms
// (7n/4 - 1, n/4 + 4) leave the integers for particular n, so predictions
// are exact rationals rather than rounded integers.

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

namespace ahg {

enum class Parity { odd, even };
inline Parity parity_of(int n) { return n % 2 == 0 ? Parity::even : Parity::odd; }
inline const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;  // kept positive and reduced

  Fraction() = default;
  Fraction(std::int64_t n) : num(n) {}  // NOLINT: implicit by design
  Fraction(std::int64_t n, std::int64_t d);

  bool is_integral() const { return den == 1; }
  bool operator==(const Fraction&) const = default;
  std::string str() const;  // "6" or "19/2"
};

// Ordered tag patterns (alpha1, alpha2, alpha3), case ids 1..8.
struct CasePrediction {
  int case_id;
  std::array<int, 3> tags;
  std::int64_t count;
};

// The eight per-case directed-edge counts for M(D_n,2), n >= 3.
std::array<CasePrediction, 8> predict_case_counts(int n);
std::int64_t predict_total_edges(int n);

// Vertex classes (g, alpha) by the base-group part: center, non-central
// rotations R, reflections S; untagged alpha=0 first.
enum class VertexClass {
  untagged_center,
  untagged_rotation,
  untagged_reflection,
  tagged_center,
  tagged_rotation,
  tagged_reflection,
};
const char* vertex_class_label(VertexClass c);  // e.g. "(g,0) R"

struct DegreePrediction {
  VertexClass cls;
  std::int64_t statement;
  std::optional<std::int64_t> proof;  // only where the proof expands differently
};
std::array<DegreePrediction, 6> predict_degrees(int n);

struct InvariantPrediction {
  Fraction independence;
  std::optional<Fraction> independence_alternate;  // even n: the proof's closing value
  Fraction transversal;
  Fraction covering;
  Fraction matching;
  Fraction weak_chromatic;
  Fraction strong_chromatic;
};
InvariantPrediction predict_invariants(int n);

}  // namespace ahg
