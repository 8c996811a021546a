// Python bindings: the full pipeline (groups -> loops -> hypergraphs ->
// exact invariants -> closed-form reconciliation) under the module name
// `ahg`.  Thin wrappers only; every computation lives in the C++ core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ahg/algebra.hpp"
#include "ahg/formulas.hpp"
#include "ahg/hypergraph.hpp"
#include "ahg/invariants.hpp"
#include "ahg/verify.hpp"

namespace py = pybind11;
using namespace ahg;

namespace {

SearchBudget budget_of(std::int64_t node_limit) {
  if (node_limit <= 0) throw std::invalid_argument("budget must be positive");
  return SearchBudget{node_limit};
}

constexpr std::int64_t kDefaultBudget = 50'000'000;

}  // namespace

PYBIND11_MODULE(ahg, m) {
  m.doc() = "associating hypergraphs of the Moufang loops M(D_n,2): "
            "construction, exact invariants, closed-form reconciliation";

  py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<infeasible_error>(m, "InfeasibleError", PyExc_ValueError);

  // ---- algebra ----
  py::class_<GroupPartition>(m, "GroupPartition")
      .def_readonly("center", &GroupPartition::center)
      .def_readonly("rotations", &GroupPartition::rotations)
      .def_readonly("reflections", &GroupPartition::reflections);

  py::class_<Group>(m, "Group")
      .def_readonly("order", &Group::order)
      .def_readonly("table", &Group::table)
      .def_readonly("identity", &Group::identity)
      .def_readonly("names", &Group::names)
      .def("mul", &Group::mul, py::arg("a"), py::arg("b"))
      .def("inverse", &Group::inverse, py::arg("a"))
      .def("commutes", &Group::commutes, py::arg("a"), py::arg("b"));

  py::class_<DihedralData>(m, "DihedralData")
      .def_readonly("group", &DihedralData::group)
      .def_readonly("partition", &DihedralData::partition);

  m.def("dihedral_group", &dihedral_group, py::arg("n"),
        "D_n with rotations 0..n-1 and reflections n..2n-1, plus its "
        "center/rotation/reflection partition");

  py::enum_<LoopProvenance>(m, "LoopProvenance")
      .value("user_table", LoopProvenance::user_table)
      .value("builtin_order5", LoopProvenance::builtin_order5)
      .value("moufang_extension", LoopProvenance::moufang_extension);

  py::class_<Loop>(m, "Loop")
      .def_readonly("order", &Loop::order)
      .def_readonly("table", &Loop::table)
      .def_readonly("identity", &Loop::identity)
      .def_readonly("names", &Loop::names)
      .def_readonly("provenance", &Loop::provenance)
      .def_readonly("base_group_order", &Loop::base_group_order)
      .def("mul", &Loop::mul, py::arg("a"), py::arg("b"));

  m.def("validate_loop", &validate_loop, py::arg("table"), py::arg("identity"),
        py::arg("names") = std::vector<std::string>{},
        "Latin-square and identity checks; raises ValidationError naming the "
        "offending row or column");
  m.def("builtin_order5_loop", &builtin_order5_loop,
        "the canonical smallest nonassociative loop");
  m.def("moufang_extension", &moufang_extension, py::arg("group"),
        "the Chein double M(G,2): untagged copies 0..|G|-1, tagged |G|..2|G|-1");
  m.def("associates", &associates, py::arg("loop"), py::arg("x"), py::arg("y"), py::arg("z"));

  py::class_<MoufangCheck>(m, "MoufangCheck")
      .def_readonly("holds", &MoufangCheck::holds)
      .def_readonly("identity_id", &MoufangCheck::identity_id)
      .def_readonly("counterexample", &MoufangCheck::counterexample);

  m.def("check_moufang_identities", &check_moufang_identities, py::arg("loop"),
        "exhaustive scan of the three Moufang identities over all triples");
  m.def("nonassociative_witness", &nonassociative_witness, py::arg("loop"),
        "lexicographically first non-associating (x,y,z), or None");
  m.def("is_associative", &is_associative, py::arg("loop"));

  // ---- hypergraph ----
  py::class_<SupportHypergraph>(m, "SupportHypergraph")
      .def(py::init([](int vertex_count, std::vector<std::array<int, 3>> triples) {
             return SupportHypergraph::from_triples(vertex_count, std::move(triples));
           }),
           py::arg("vertex_count"), py::arg("edges"),
           "canonicalizes: sorts each triple, sorts the list, deduplicates")
      .def_readonly("vertex_count", &SupportHypergraph::vertex_count)
      .def_readonly("edges", &SupportHypergraph::edges);

  py::class_<AssociatingHypergraph>(m, "AssociatingHypergraph")
      .def_readonly("loop", &AssociatingHypergraph::loop)
      .def_readonly("vertex_count", &AssociatingHypergraph::vertex_count)
      .def_readonly("directed_edges", &AssociatingHypergraph::directed_edges)
      .def_readonly("support_edges", &AssociatingHypergraph::support_edges)
      .def_readonly("multiplicity", &AssociatingHypergraph::multiplicity)
      .def("support", &AssociatingHypergraph::support);

  m.def("build_hypergraph", &build_hypergraph, py::arg("loop"),
        "all ordered triples of distinct elements that associate");

  py::class_<DegreeData>(m, "DegreeData")
      .def_readonly("directed_degree", &DegreeData::directed_degree)
      .def_readonly("support_degree", &DegreeData::support_degree)
      .def_readonly("edge_sizes", &DegreeData::edge_sizes);

  m.def("degrees", &degrees, py::arg("hypergraph"));
  m.def(
      "distance",
      [](const SupportHypergraph& h, int u, int v) { return distance(h, u, v); },
      py::arg("hypergraph"), py::arg("u"), py::arg("v"),
      "fewest support edges joining u to v, or None when unreachable");
  m.def(
      "export_hypergraph",
      [](const AssociatingHypergraph& h, const std::string& format) {
        return export_hypergraph(h, parse_export_format(format));
      },
      py::arg("hypergraph"), py::arg("format"),
      "deterministic serialization: 'edge-json', 'incidence-csv', or 'support-list'");

  // ---- exact invariants ----
  py::enum_<InvariantKind>(m, "InvariantKind")
      .value("independence", InvariantKind::independence)
      .value("transversal", InvariantKind::transversal)
      .value("covering", InvariantKind::covering)
      .value("matching", InvariantKind::matching)
      .value("weak_chromatic", InvariantKind::weak_chromatic)
      .value("strong_chromatic", InvariantKind::strong_chromatic);

  m.def("invariant_name", &invariant_name, py::arg("kind"));

  py::class_<InvariantResult>(m, "InvariantResult")
      .def_readonly("kind", &InvariantResult::kind)
      .def_readonly("value", &InvariantResult::value)
      .def_readonly("witness_vertices", &InvariantResult::witness_vertices)
      .def_readonly("witness_edges", &InvariantResult::witness_edges)
      .def_readonly("witness_coloring", &InvariantResult::witness_coloring)
      .def_readonly("nodes_explored", &InvariantResult::nodes_explored)
      .def_readonly("budget_exhausted", &InvariantResult::budget_exhausted);

#define AHG_BIND_SOLVER(pyname, fn, doc)                                              \
  m.def(                                                                              \
      pyname,                                                                         \
      [](const SupportHypergraph& h, std::int64_t budget) {                           \
        return fn(h, budget_of(budget));                                              \
      },                                                                              \
      py::arg("hypergraph"), py::arg("budget") = kDefaultBudget, doc)

  AHG_BIND_SOLVER("independence_number", independence_number,
                  "alpha: largest vertex set containing no edge");
  AHG_BIND_SOLVER("transversal_number", transversal_number,
                  "tau: smallest vertex set meeting every edge");
  AHG_BIND_SOLVER("covering_number", covering_number,
                  "rho: fewest edges covering every vertex; raises "
                  "InfeasibleError on isolated vertices");
  AHG_BIND_SOLVER("matching_number", matching_number,
                  "nu: most pairwise disjoint edges");
  AHG_BIND_SOLVER("weak_chromatic_number", weak_chromatic_number,
                  "psi: fewest colors with no edge monochromatic");
  AHG_BIND_SOLVER("strong_chromatic_number", strong_chromatic_number,
                  "psi-bar: fewest colors with every edge rainbow");
#undef AHG_BIND_SOLVER

  m.def("verify_witness", &verify_witness, py::arg("hypergraph"), py::arg("result"),
        "polynomial re-validation of a solver witness against its value");

  py::class_<MatchingPolynomial>(m, "MatchingPolynomial")
      .def_readonly("vertex_count", &MatchingPolynomial::vertex_count)
      .def_readonly("coefficients", &MatchingPolynomial::coefficients)
      .def_readonly("nodes_explored", &MatchingPolynomial::nodes_explored)
      .def_readonly("truncated", &MatchingPolynomial::truncated)
      .def("__str__", &format_matching_polynomial);

  m.def(
      "matching_polynomial",
      [](const SupportHypergraph& h, std::int64_t budget) {
        return matching_polynomial(h, budget_of(budget));
      },
      py::arg("hypergraph"), py::arg("budget") = kDefaultBudget,
      "coefficient k counts the k-matchings");
  m.def("format_matching_polynomial", &format_matching_polynomial, py::arg("polynomial"));

  // ---- closed forms ----
  py::enum_<Parity>(m, "Parity").value("odd", Parity::odd).value("even", Parity::even);
  m.def("parity_of", &parity_of, py::arg("n"));

  py::class_<Fraction>(m, "Fraction")
      .def(py::init<std::int64_t>(), py::arg("num"))
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("num"), py::arg("den"))
      .def_readonly("num", &Fraction::num)
      .def_readonly("den", &Fraction::den)
      .def("is_integral", &Fraction::is_integral)
      .def("__str__", &Fraction::str)
      .def("__eq__", [](const Fraction& a, const Fraction& b) { return a == b; })
      .def("__float__",
           [](const Fraction& f) { return static_cast<double>(f.num) / f.den; });

  py::class_<CasePrediction>(m, "CasePrediction")
      .def_readonly("case_id", &CasePrediction::case_id)
      .def_readonly("tags", &CasePrediction::tags)
      .def_readonly("count", &CasePrediction::count);

  py::enum_<VertexClass>(m, "VertexClass")
      .value("untagged_center", VertexClass::untagged_center)
      .value("untagged_rotation", VertexClass::untagged_rotation)
      .value("untagged_reflection", VertexClass::untagged_reflection)
      .value("tagged_center", VertexClass::tagged_center)
      .value("tagged_rotation", VertexClass::tagged_rotation)
      .value("tagged_reflection", VertexClass::tagged_reflection);

  m.def("vertex_class_label", &vertex_class_label, py::arg("cls"));

  py::class_<DegreePrediction>(m, "DegreePrediction")
      .def_readonly("cls", &DegreePrediction::cls)
      .def_readonly("statement", &DegreePrediction::statement)
      .def_readonly("proof", &DegreePrediction::proof);

  py::class_<InvariantPrediction>(m, "InvariantPrediction")
      .def_readonly("independence", &InvariantPrediction::independence)
      .def_readonly("independence_alternate", &InvariantPrediction::independence_alternate)
      .def_readonly("transversal", &InvariantPrediction::transversal)
      .def_readonly("covering", &InvariantPrediction::covering)
      .def_readonly("matching", &InvariantPrediction::matching)
      .def_readonly("weak_chromatic", &InvariantPrediction::weak_chromatic)
      .def_readonly("strong_chromatic", &InvariantPrediction::strong_chromatic);

  m.def("predict_case_counts", &predict_case_counts, py::arg("n"));
  m.def("predict_total_edges", &predict_total_edges, py::arg("n"));
  m.def("predict_degrees", &predict_degrees, py::arg("n"));
  m.def("predict_invariants", &predict_invariants, py::arg("n"));

  // ---- reconciliation ----
  py::enum_<MatchStatus>(m, "MatchStatus")
      .value("match", MatchStatus::match)
      .value("mismatch", MatchStatus::mismatch)
      .value("inconclusive", MatchStatus::inconclusive);

  py::class_<CaseRow>(m, "CaseRow")
      .def_readonly("case_id", &CaseRow::case_id)
      .def_readonly("tags", &CaseRow::tags)
      .def_readonly("enumerated", &CaseRow::enumerated)
      .def_readonly("predicted", &CaseRow::predicted)
      .def_readonly("match", &CaseRow::match);

  py::class_<DegreeRow>(m, "DegreeRow")
      .def_readonly("cls", &DegreeRow::cls)
      .def_readonly("members", &DegreeRow::members)
      .def_readonly("directed_uniform", &DegreeRow::directed_uniform)
      .def_readonly("directed_values", &DegreeRow::directed_values)
      .def_readonly("support_uniform", &DegreeRow::support_uniform)
      .def_readonly("support_values", &DegreeRow::support_values)
      .def_readonly("predicted", &DegreeRow::predicted)
      .def_readonly("predicted_proof", &DegreeRow::predicted_proof)
      .def_readonly("match", &DegreeRow::match);

  py::class_<InvariantRow>(m, "InvariantRow")
      .def_readonly("kind", &InvariantRow::kind)
      .def_readonly("computed", &InvariantRow::computed)
      .def_readonly("predicted", &InvariantRow::predicted)
      .def_readonly("alternate_predicted", &InvariantRow::alternate_predicted)
      .def_readonly("match", &InvariantRow::match)
      .def_readonly("budget_exhausted", &InvariantRow::budget_exhausted)
      .def_readonly("nodes_explored", &InvariantRow::nodes_explored);

  py::class_<LemmaRow>(m, "LemmaRow")
      .def_readonly("name", &LemmaRow::name)
      .def_readonly("match", &LemmaRow::match)
      .def_readonly("detail", &LemmaRow::detail);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("n", &VerificationReport::n)
      .def_readonly("parity", &VerificationReport::parity)
      .def_readonly("enumerated_total", &VerificationReport::enumerated_total)
      .def_readonly("predicted_total", &VerificationReport::predicted_total)
      .def_readonly("total_match", &VerificationReport::total_match)
      .def_readonly("cases", &VerificationReport::cases)
      .def_readonly("degrees", &VerificationReport::degrees)
      .def_readonly("invariants", &VerificationReport::invariants)
      .def_readonly("lemmas", &VerificationReport::lemmas)
      .def("any_mismatch", &VerificationReport::any_mismatch)
      .def("any_inconclusive", &VerificationReport::any_inconclusive)
      .def("__str__", &render_table);

  m.def(
      "run_verification",
      [](int n, std::int64_t budget) { return run_verification(n, budget_of(budget)); },
      py::arg("n"), py::arg("budget") = kDefaultBudget,
      "enumerate M(D_n,2), solve every invariant, reconcile all closed forms");
  m.def(
      "run_range",
      [](int n_min, int n_max, std::int64_t budget) {
        return run_range(n_min, n_max, budget_of(budget));
      },
      py::arg("n_min"), py::arg("n_max"), py::arg("budget") = kDefaultBudget);
  m.def("render_table", &render_table, py::arg("report"));
  m.def(
      "report_json",
      [](const VerificationReport& r) { return report_to_json(r).dump(2) + "\n"; },
      py::arg("report"), "the structured report as a JSON string (stable keys)");
}
