#include "ahg/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ahg {

namespace {

constexpr const char* kCountingNote =
    "case counts and degrees count ordered (directed) triples; "
    "alpha/tau/rho/nu/colorings use unordered support edges";

// (alpha1, alpha2, alpha3) packed as a1*4 + a2*2 + a3 -> case id.
constexpr int kCaseOfPattern[8] = {1, 2, 3, 5, 4, 6, 7, 8};

}  // namespace

const char* match_status_name(MatchStatus s) {
  switch (s) {
    case MatchStatus::match: return "MATCH";
    case MatchStatus::mismatch: return "MISMATCH";
    case MatchStatus::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

int classify_triple(const std::array<int, 3>& triple, int loop_order,
                    int base_group_order) {
  if (base_group_order <= 0 || loop_order != 2 * base_group_order)
    throw std::invalid_argument(
        "triple classification requires a hypergraph built from a Chein double M(G,2)");
  int pattern = 0;
  for (int v : triple) {
    if (v < 0 || v >= loop_order)
      throw std::invalid_argument("triple vertex out of range");
    pattern = pattern * 2 + (v >= base_group_order ? 1 : 0);
  }
  return kCaseOfPattern[pattern];
}

CaseBreakdown case_breakdown(const AssociatingHypergraph& h) {
  CaseBreakdown b;
  for (const auto& e : h.directed_edges)
    ++b.counts[classify_triple(e, h.loop.order, h.loop.base_group_order) - 1];
  return b;
}

std::array<DegreeRow, 6> degree_class_check(const AssociatingHypergraph& h,
                                            const GroupPartition& partition) {
  const int m = h.loop.base_group_order;
  if (m <= 0 || h.loop.order != 2 * m)
    throw std::invalid_argument("degree classes require a Chein-double hypergraph");

  // 0 = center, 1 = R, 2 = S for each base-group element.
  std::vector<int> kind(m, -1);
  for (int g : partition.center) kind[g] = 0;
  for (int g : partition.rotations) kind[g] = 1;
  for (int g : partition.reflections) kind[g] = 2;

  const DegreeData deg = degrees(h);
  const auto predictions = predict_degrees(m / 2);

  std::array<DegreeRow, 6> rows{};
  for (int cls = 0; cls < 6; ++cls) {
    DegreeRow& row = rows[cls];
    row.cls = predictions[cls].cls;
    row.predicted = predictions[cls].statement;
    row.predicted_proof = predictions[cls].proof;

    const int want_alpha = cls / 3;
    const int want_kind = cls % 3;
    std::vector<std::int64_t> directed, support;
    for (int v = 0; v < h.vertex_count; ++v) {
      const auto [g, alpha] = moufang_coords(v, m);
      if (alpha != want_alpha || kind[g] != want_kind) continue;
      directed.push_back(deg.directed_degree[v]);
      support.push_back(deg.support_degree[v]);
    }
    row.members = static_cast<int>(directed.size());

    auto distinct = [](std::vector<std::int64_t> values) {
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      return values;
    };
    row.directed_values = distinct(directed);
    row.support_values = distinct(support);
    row.directed_uniform = row.directed_values.size() == 1;
    row.support_uniform = row.support_values.size() == 1;
    row.match = (row.directed_uniform && row.directed_values[0] == row.predicted)
                    ? MatchStatus::match
                    : MatchStatus::mismatch;
  }
  return rows;
}

bool VerificationReport::any_mismatch() const {
  if (total_match == MatchStatus::mismatch) return true;
  for (const auto& r : cases)
    if (r.match == MatchStatus::mismatch) return true;
  for (const auto& r : degrees)
    if (r.match == MatchStatus::mismatch) return true;
  for (const auto& r : invariants)
    if (r.match == MatchStatus::mismatch) return true;
  for (const auto& r : lemmas)
    if (r.match == MatchStatus::mismatch) return true;
  return false;
}

bool VerificationReport::any_inconclusive() const {
  for (const auto& r : invariants)
    if (r.match == MatchStatus::inconclusive) return true;
  for (const auto& r : lemmas)
    if (r.match == MatchStatus::inconclusive) return true;
  return false;
}

namespace {

MatchStatus eq_status(std::int64_t a, std::int64_t b) {
  return a == b ? MatchStatus::match : MatchStatus::mismatch;
}

InvariantRow make_invariant_row(const SupportHypergraph& support, const InvariantResult& r,
                                Fraction predicted,
                                std::optional<Fraction> alternate = std::nullopt) {
  if (!r.budget_exhausted && !verify_witness(support, r))
    throw std::logic_error(std::string("internal error: ") + invariant_name(r.kind) +
                           " witness failed re-validation");
  InvariantRow row;
  row.kind = r.kind;
  row.computed = r.value;
  row.predicted = predicted;
  row.alternate_predicted = alternate;
  row.budget_exhausted = r.budget_exhausted;
  row.nodes_explored = r.nodes_explored;
  row.match = r.budget_exhausted
                  ? MatchStatus::inconclusive
                  : (Fraction(r.value) == predicted ? MatchStatus::match
                                                    : MatchStatus::mismatch);
  return row;
}

}  // namespace

VerificationReport run_verification(int n, SearchBudget budget) {
  if (n < 3) throw std::invalid_argument("verification requires n >= 3");

  const DihedralData dihedral = dihedral_group(n);
  const Loop loop = moufang_extension(dihedral.group);
  const AssociatingHypergraph h = build_hypergraph(loop);
  const SupportHypergraph support = h.support();

  VerificationReport report;
  report.n = n;
  report.parity = parity_of(n);

  // Case rows: enumeration vs the eight per-case counts.
  const CaseBreakdown breakdown = case_breakdown(h);
  const auto case_predictions = predict_case_counts(n);
  report.enumerated_total = static_cast<std::int64_t>(h.directed_edges.size());
  report.predicted_total = predict_total_edges(n);
  report.total_match = eq_status(report.enumerated_total, report.predicted_total);
  for (int i = 0; i < 8; ++i) {
    report.cases[i] = {case_predictions[i].case_id, case_predictions[i].tags,
                       breakdown.counts[i], case_predictions[i].count,
                       eq_status(breakdown.counts[i], case_predictions[i].count)};
  }

  report.degrees = degree_class_check(h, dihedral.partition);

  // Invariant rows, alpha..chi-strong, each under its own budget.
  const InvariantPrediction predicted = predict_invariants(n);
  const InvariantResult alpha = independence_number(support, budget);
  const InvariantResult tau = transversal_number(support, budget);
  const InvariantResult rho = covering_number(support, budget);
  const InvariantResult nu = matching_number(support, budget);
  const InvariantResult chi = weak_chromatic_number(support, budget);
  const InvariantResult chi_strong = strong_chromatic_number(support, budget);
  report.invariants[0] = make_invariant_row(support, alpha, predicted.independence,
                                            predicted.independence_alternate);
  report.invariants[1] = make_invariant_row(support, tau, predicted.transversal);
  report.invariants[2] = make_invariant_row(support, rho, predicted.covering);
  report.invariants[3] = make_invariant_row(support, nu, predicted.matching);
  report.invariants[4] = make_invariant_row(support, chi, predicted.weak_chromatic);
  report.invariants[5] =
      make_invariant_row(support, chi_strong, predicted.strong_chromatic);

  // Lemma: alpha + tau = |V| whenever both solvers proved optimality.
  {
    LemmaRow& row = report.lemmas[0];
    row.name = "alpha_plus_tau";
    if (alpha.budget_exhausted || tau.budget_exhausted) {
      row.match = MatchStatus::inconclusive;
      row.detail = "a solver ran out of budget";
    } else {
      const std::int64_t sum = alpha.value + tau.value;
      row.match = eq_status(sum, h.vertex_count);
      std::ostringstream d;
      d << alpha.value << " + " << tau.value << " = " << sum << "; |V| = "
        << h.vertex_count;
      row.detail = d.str();
    }
  }

  // Lemma: every vertex pair co-occurs in some support edge (distance 1).
  {
    LemmaRow& row = report.lemmas[1];
    row.name = "all_pairs_distance_1";
    std::vector<std::vector<char>> adj(h.vertex_count,
                                       std::vector<char>(h.vertex_count, 0));
    for (const auto& e : h.support_edges) {
      adj[e[0]][e[1]] = adj[e[1]][e[0]] = 1;
      adj[e[0]][e[2]] = adj[e[2]][e[0]] = 1;
      adj[e[1]][e[2]] = adj[e[2]][e[1]] = 1;
    }
    std::int64_t pairs = 0, adjacent = 0;
    for (int u = 0; u < h.vertex_count; ++u)
      for (int v = u + 1; v < h.vertex_count; ++v) {
        ++pairs;
        if (adj[u][v]) ++adjacent;
      }
    row.match = eq_status(adjacent, pairs);
    std::ostringstream d;
    d << adjacent << "/" << pairs << " pairs at distance 1";
    row.detail = d.str();
  }

  // Lemma: the construction satisfies all three Moufang identities.
  {
    LemmaRow& row = report.lemmas[2];
    row.name = "moufang_identities";
    const MoufangCheck check = check_moufang_identities(loop);
    if (check.holds) {
      row.match = MatchStatus::match;
      row.detail = "all three identities hold over all triples";
    } else {
      row.match = MatchStatus::mismatch;
      std::ostringstream d;
      d << "identity " << check.identity_id << " fails at (" << check.counterexample[0]
        << "," << check.counterexample[1] << "," << check.counterexample[2] << ")";
      row.detail = d.str();
    }
  }

  return report;
}

std::vector<VerificationReport> run_range(int n_min, int n_max, SearchBudget budget) {
  if (n_min < 3 || n_min > n_max)
    throw std::invalid_argument("need 3 <= n_min <= n_max");
  std::vector<VerificationReport> reports;
  reports.reserve(n_max - n_min + 1);
  for (int n = n_min; n <= n_max; ++n) reports.push_back(run_verification(n, budget));
  return reports;
}

namespace {

std::string values_text(const std::vector<std::int64_t>& values) {
  if (values.size() == 1) return std::to_string(values[0]);
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

std::string prediction_text(const Fraction& f, const std::optional<Fraction>& alt) {
  std::string out = f.str();
  if (alt) out += " (proof: " + alt->str() + ")";
  return out;
}

std::string prediction_text(std::int64_t statement, const std::optional<std::int64_t>& alt) {
  std::string out = std::to_string(statement);
  if (alt) out += " (proof: " + std::to_string(*alt) + ")";
  return out;
}

}  // namespace

std::string render_table(const VerificationReport& report) {
  std::ostringstream out;
  out << "associating hypergraph report: n=" << report.n << " ("
      << parity_name(report.parity) << "), |V|=" << 4 * report.n << "\n";
  out << "note: " << kCountingNote << "\n";
  out << "totals: enumerated=" << report.enumerated_total
      << " predicted=" << report.predicted_total << " -> "
      << match_status_name(report.total_match) << "\n\n";

  out << "cases (directed edges by tag pattern):\n";
  for (const auto& r : report.cases) {
    out << "  case " << r.case_id << " (" << r.tags[0] << "," << r.tags[1] << ","
        << r.tags[2] << "): enumerated=" << std::setw(8) << r.enumerated
        << "  predicted=" << std::setw(8) << r.predicted << "  "
        << match_status_name(r.match) << "\n";
  }

  out << "\ndegrees (per vertex class):\n";
  for (const auto& r : report.degrees) {
    out << "  " << std::setw(8) << std::left << vertex_class_label(r.cls)
        << std::right << " members=" << std::setw(2) << r.members << "  directed="
        << values_text(r.directed_values);
    if (!r.directed_uniform) out << " (non-uniform)";
    out << "  support=" << values_text(r.support_values);
    if (!r.support_uniform) out << " (non-uniform)";
    out << "  predicted=" << prediction_text(r.predicted, r.predicted_proof) << "  "
        << match_status_name(r.match) << "\n";
  }

  out << "\ninvariants (computed on support edges; witnesses verified):\n";
  for (const auto& r : report.invariants) {
    out << "  " << std::setw(10) << std::left << invariant_name(r.kind) << std::right
        << " computed=" << std::setw(4) << r.computed
        << "  predicted=" << prediction_text(r.predicted, r.alternate_predicted) << "  "
        << match_status_name(r.match);
    if (r.budget_exhausted) out << " (budget exhausted; computed value is a bound)";
    out << "  nodes=" << r.nodes_explored << "\n";
  }

  out << "\nlemmas:\n";
  for (const auto& r : report.lemmas) {
    out << "  " << std::setw(22) << std::left << r.name << std::right << " "
        << std::setw(12) << std::left << match_status_name(r.match) << std::right << " "
        << r.detail << "\n";
  }
  return out.str();
}

namespace {

nlohmann::json fraction_json(const Fraction& f) {
  if (f.is_integral()) return f.num;
  return f.str();
}

}  // namespace

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["n"] = report.n;
  j["parity"] = parity_name(report.parity);
  j["counting_note"] = kCountingNote;
  j["totals"] = {{"enumerated", report.enumerated_total},
                 {"predicted", report.predicted_total},
                 {"match", match_status_name(report.total_match)}};

  auto& cases = j["cases"] = nlohmann::json::array();
  for (const auto& r : report.cases) {
    cases.push_back({{"case_id", r.case_id},
                     {"tags", r.tags},
                     {"enumerated", r.enumerated},
                     {"predicted", r.predicted},
                     {"match", match_status_name(r.match)}});
  }

  auto& degrees = j["degrees"] = nlohmann::json::array();
  for (const auto& r : report.degrees) {
    nlohmann::json row;
    row["class"] = vertex_class_label(r.cls);
    row["members"] = r.members;
    row["directed_uniform"] = r.directed_uniform;
    row["directed_values"] = r.directed_values;
    row["support_uniform"] = r.support_uniform;
    row["support_values"] = r.support_values;
    row["predicted"] = r.predicted;
    row["predicted_proof"] =
        r.predicted_proof ? nlohmann::json(*r.predicted_proof) : nlohmann::json(nullptr);
    row["match"] = match_status_name(r.match);
    degrees.push_back(std::move(row));
  }

  auto& invariants = j["invariants"] = nlohmann::json::array();
  for (const auto& r : report.invariants) {
    nlohmann::json row;
    row["name"] = invariant_name(r.kind);
    row["computed"] = r.computed;
    row["predicted"] = fraction_json(r.predicted);
    row["alternate_predicted"] = r.alternate_predicted
                                     ? fraction_json(*r.alternate_predicted)
                                     : nlohmann::json(nullptr);
    row["match"] = match_status_name(r.match);
    row["budget_exhausted"] = r.budget_exhausted;
    row["nodes_explored"] = r.nodes_explored;
    invariants.push_back(std::move(row));
  }

  auto& lemmas = j["lemmas"] = nlohmann::json::array();
  for (const auto& r : report.lemmas) {
    lemmas.push_back(
        {{"name", r.name}, {"match", match_status_name(r.match)}, {"detail", r.detail}});
  }
  return j;
}

}  // namespace ahg
