#pragma once

// Reconciliation layer: build M(D_n,2) by brute force, enumerate, solve, and
// compare every closed-form claim.  Enumeration is the ground truth and a
// MISMATCH row is a successful run — the exit status of the CLI, not this
// layer, decides whether that is fatal.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ahg/formulas.hpp"
#include "ahg/hypergraph.hpp"
#include "ahg/invariants.hpp"

#include "json.hpp"

namespace ahg {

enum class MatchStatus { match, mismatch, inconclusive };
const char* match_status_name(MatchStatus s);  // "MATCH" / "MISMATCH" / "INCONCLUSIVE"

// Case id 1..8 of a directed edge by the (alpha1, alpha2, alpha3) pattern of
// its vertices; the vertex index encodes alpha as index >= |G|.  Throws
// std::invalid_argument unless the hypergraph came from a Chein double.
int classify_triple(const std::array<int, 3>& triple, int loop_order, int base_group_order);

struct CaseBreakdown {
  std::array<std::int64_t, 8> counts{};  // counts[i] belongs to case id i+1
};
CaseBreakdown case_breakdown(const AssociatingHypergraph& h);

struct CaseRow {
  int case_id;
  std::array<int, 3> tags;
  std::int64_t enumerated;
  std::int64_t predicted;
  MatchStatus match;
};

struct DegreeRow {
  VertexClass cls;
  int members;
  bool directed_uniform;
  std::vector<std::int64_t> directed_values;  // distinct sorted; 1 entry when uniform
  bool support_uniform;
  std::vector<std::int64_t> support_values;
  std::int64_t predicted;                      // theorem statement (directed reading)
  std::optional<std::int64_t> predicted_proof; // where the proof expands differently
  MatchStatus match;                           // uniform directed degree vs statement
};

// Enumerated per-class directed/support degrees vs the A..F predictions.
// Uniformity within each class is checked, not assumed.
std::array<DegreeRow, 6> degree_class_check(const AssociatingHypergraph& h,
                                            const GroupPartition& partition);

struct InvariantRow {
  InvariantKind kind;
  std::int64_t computed;  // best-found bound when inconclusive
  Fraction predicted;
  std::optional<Fraction> alternate_predicted;
  MatchStatus match;      // INCONCLUSIVE whenever the budget ran out
  bool budget_exhausted;
  std::int64_t nodes_explored;
};

struct LemmaRow {
  std::string name;  // alpha_plus_tau | all_pairs_distance_1 | moufang_identities
  MatchStatus match;
  std::string detail;
};

struct VerificationReport {
  int n = 0;
  Parity parity = Parity::odd;
  std::int64_t enumerated_total = 0;
  std::int64_t predicted_total = 0;
  MatchStatus total_match = MatchStatus::mismatch;
  std::array<CaseRow, 8> cases{};
  std::array<DegreeRow, 6> degrees{};
  std::array<InvariantRow, 6> invariants{};
  std::array<LemmaRow, 3> lemmas{};

  bool any_mismatch() const;
  bool any_inconclusive() const;
};

// Builds everything for one n and assembles the report.  Budget exhaustion
// marks the affected rows INCONCLUSIVE; it never aborts the report.
VerificationReport run_verification(int n, SearchBudget budget = {});

// Independent reports for each n in [n_min, n_max], ascending.
std::vector<VerificationReport> run_range(int n_min, int n_max, SearchBudget budget = {});

// Deterministic plain-text table.
std::string render_table(const VerificationReport& report);

// Structured form with stable keys: n, parity, totals, cases[], degrees[],
// invariants[], lemmas[].  Exact rationals serialize as numbers when
// integral, as "p/q" strings otherwise.
nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace ahg
