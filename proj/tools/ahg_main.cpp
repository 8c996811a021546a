// ahg — build, measure, and reconcile associating hypergraphs of M(D_n,2).
//
// Exit codes: 0 success; 1 usage or input error; 2 a node budget ran out
// (invariants always; verify only with --strict); 3 --strict verify found a
// mathematical MISMATCH.  Diagnostics go to stderr; data goes to stdout or
// --out, never interleaved.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ahg/algebra.hpp"
#include "ahg/formulas.hpp"
#include "ahg/hypergraph.hpp"
#include "ahg/invariants.hpp"
#include "ahg/verify.hpp"

namespace {

constexpr std::int64_t kDefaultBudget = 50'000'000;

// --budget beats AHG_BUDGET beats the default.
std::int64_t resolve_budget(std::int64_t flag_value) {
  if (flag_value > 0) return flag_value;
  const char* env = std::getenv("AHG_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  char* end = nullptr;
  const long long parsed = std::strtoll(env, &end, 10);
  if (end == nullptr || *end != '\0' || parsed < 1)
    throw CLI::ValidationError("AHG_BUDGET must be a positive integer, got \"" +
                               std::string(env) + "\"");
  return parsed;
}

int emit(const std::string& data, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << data;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open \"" << out_path << "\" for writing\n";
    return 1;
  }
  f << data;
  f.flush();
  if (!f.good()) {
    std::cerr << "error: failed while writing \"" << out_path << "\"\n";
    return 1;
  }
  return 0;
}

std::string index_set_text(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

int cmd_build(int n, const std::string& format_tag, const std::string& out_path) {
  const ahg::ExportFormat format = ahg::parse_export_format(format_tag);
  const ahg::DihedralData dihedral = ahg::dihedral_group(n);
  const ahg::Loop loop = ahg::moufang_extension(dihedral.group);
  const ahg::AssociatingHypergraph h = ahg::build_hypergraph(loop);
  std::cerr << "M(D_" << n << ",2): " << h.vertex_count << " vertices, "
            << h.directed_edges.size() << " directed edges, " << h.support_edges.size()
            << " support edges\n";
  return emit(ahg::export_hypergraph(h, format), out_path);
}

int cmd_invariants(int n, const std::vector<std::string>& selection,
                   std::int64_t budget_flag) {
  const ahg::SearchBudget budget{resolve_budget(budget_flag)};
  const ahg::DihedralData dihedral = ahg::dihedral_group(n);
  const ahg::SupportHypergraph support =
      ahg::build_hypergraph(ahg::moufang_extension(dihedral.group)).support();

  bool exhausted = false;
  std::ostringstream out;
  for (const std::string& name : selection) {
    if (name == "matching-poly") {
      const ahg::MatchingPolynomial p = ahg::matching_polynomial(support, budget);
      out << "matching-poly = " << ahg::format_matching_polynomial(p);
      if (p.truncated) {
        out << "  INCONCLUSIVE (budget exhausted; coefficients partial)";
        exhausted = true;
      }
      out << "  nodes=" << p.nodes_explored << "\n";
      continue;
    }
    ahg::InvariantResult r;
    if (name == "alpha") r = ahg::independence_number(support, budget);
    else if (name == "tau") r = ahg::transversal_number(support, budget);
    else if (name == "rho") r = ahg::covering_number(support, budget);
    else if (name == "nu") r = ahg::matching_number(support, budget);
    else if (name == "chi") r = ahg::weak_chromatic_number(support, budget);
    else if (name == "chi-strong") r = ahg::strong_chromatic_number(support, budget);
    else
      throw CLI::ValidationError(
          "unknown invariant \"" + name +
          "\" (expected alpha, tau, rho, nu, chi, chi-strong, or matching-poly)");

    out << name << " = " << r.value;
    if (r.budget_exhausted) {
      out << "  INCONCLUSIVE (budget exhausted; value is the best bound found)";
      exhausted = true;
    } else {
      switch (r.kind) {
        case ahg::InvariantKind::independence:
        case ahg::InvariantKind::transversal:
          out << "  witness vertices " << index_set_text(r.witness_vertices);
          break;
        case ahg::InvariantKind::covering:
        case ahg::InvariantKind::matching:
          out << "  witness edges " << index_set_text(r.witness_edges);
          break;
        case ahg::InvariantKind::weak_chromatic:
        case ahg::InvariantKind::strong_chromatic:
          out << "  coloring " << index_set_text(r.witness_coloring);
          break;
      }
    }
    out << "  nodes=" << r.nodes_explored << "\n";
  }
  std::cout << out.str();
  return exhausted ? 2 : 0;
}

int cmd_verify(int n_min, int n_max, std::int64_t budget_flag, bool strict,
               const std::string& format, const std::string& out_path) {
  const ahg::SearchBudget budget{resolve_budget(budget_flag)};
  const std::vector<ahg::VerificationReport> reports =
      ahg::run_range(n_min, n_max, budget);

  std::string payload;
  if (format == "structured") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(ahg::report_to_json(r));
    payload = arr.dump(2) + "\n";
  } else {
    std::ostringstream out;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) out << "\n";
      out << ahg::render_table(reports[i]);
    }
    payload = out.str();
  }

  bool any_mismatch = false, any_inconclusive = false;
  for (const auto& r : reports) {
    const char* verdict = r.any_mismatch()
                              ? "has MISMATCH rows"
                              : (r.any_inconclusive() ? "has INCONCLUSIVE rows"
                                                      : "all rows MATCH");
    std::cerr << "n=" << r.n << ": " << verdict << "\n";
    any_mismatch = any_mismatch || r.any_mismatch();
    any_inconclusive = any_inconclusive || r.any_inconclusive();
  }

  const int emit_rc = emit(payload, out_path);
  if (emit_rc != 0) return emit_rc;
  if (strict && any_mismatch) return 3;
  if (strict && any_inconclusive) return 2;
  return 0;
}

// Table files: first line "order identity", then one row of the Cayley table
// per line, space-separated decimal indices.
ahg::Loop load_loop(const std::string& source) {
  if (source == "builtin-order5") return ahg::builtin_order5_loop();
  std::ifstream f(source);
  if (!f) throw ahg::validation_error("cannot read table file \"" + source + "\"");
  int order = 0, identity = 0;
  if (!(f >> order >> identity))
    throw ahg::validation_error("first line must be \"order identity\"");
  if (order < 1) throw ahg::validation_error("order must be positive");
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int r = 0; r < order; ++r)
    for (int c = 0; c < order; ++c)
      if (!(f >> table[r][c]))
        throw ahg::validation_error("row " + std::to_string(r) +
                                    " is malformed or truncated");
  return ahg::validate_loop(table, identity);
}

int cmd_loop_check(const std::string& source) {
  const ahg::Loop loop = load_loop(source);  // throws with row/column on bad tables
  std::ostringstream out;
  out << "source: " << source << "\n";
  out << "order: " << loop.order << "\n";
  out << "latin-square: valid\n";
  out << "identity: " << loop.identity << "\n";

  const ahg::MoufangCheck moufang = ahg::check_moufang_identities(loop);
  if (moufang.holds) {
    out << "moufang-identities: satisfied\n";
  } else {
    out << "moufang-identities: violated (identity " << moufang.identity_id << " at ("
        << moufang.counterexample[0] << "," << moufang.counterexample[1] << ","
        << moufang.counterexample[2] << "))\n";
  }

  const auto witness = ahg::nonassociative_witness(loop);
  if (witness) {
    out << "associative: no\n";
    out << "witness: (" << (*witness)[0] << "," << (*witness)[1] << "," << (*witness)[2]
        << ")\n";
  } else {
    out << "associative: yes\n";
  }
  std::cout << out.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"associating hypergraphs of the Moufang loops M(D_n,2)"};
  app.require_subcommand(1);

  int n = 0;
  std::string format = "edge-json";
  std::string out_path;
  auto* build = app.add_subcommand("build", "build the hypergraph and export it");
  build->add_option("--n", n, "dihedral parameter (n >= 3)")->required();
  build->add_option("--format", format, "edge-json | incidence-csv | support-list");
  build->add_option("--out", out_path, "output file (default: stdout)");

  std::vector<std::string> selection = {"alpha", "tau",        "rho",
                                        "nu",    "chi",        "chi-strong",
                                        "matching-poly"};
  std::int64_t budget_flag = 0;
  auto* invariants = app.add_subcommand("invariants", "compute exact invariants");
  invariants->add_option("--n", n, "dihedral parameter (n >= 3)")->required();
  invariants
      ->add_option("--select", selection,
                   "comma-separated subset of "
                   "alpha,tau,rho,nu,chi,chi-strong,matching-poly")
      ->delimiter(',');
  invariants->add_option("--budget", budget_flag, "search node budget per invariant")
      ->check(CLI::PositiveNumber);

  int n_min = 0, n_max = 0;
  bool strict = false;
  std::string verify_format = "table";
  auto* verify = app.add_subcommand("verify", "reconcile enumeration against formulas");
  verify->add_option("--n-min", n_min, "first n")->required();
  verify->add_option("--n-max", n_max, "last n")->required();
  verify->add_option("--budget", budget_flag, "search node budget per invariant")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--strict", strict,
                   "exit 3 on any MISMATCH, 2 on any INCONCLUSIVE");
  verify->add_option("--format", verify_format, "table | structured")
      ->check(CLI::IsMember({"table", "structured"}));
  verify->add_option("--out", out_path, "output file (default: stdout)");

  std::string source;
  auto* loop_check = app.add_subcommand("loop-check", "validate and probe a loop table");
  loop_check
      ->add_option("--source", source, "builtin-order5 or a Cayley table file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (build->parsed()) {
      if (n < 3) throw CLI::ValidationError("--n must be at least 3");
      return cmd_build(n, format, out_path);
    }
    if (invariants->parsed()) {
      if (n < 3) throw CLI::ValidationError("--n must be at least 3");
      return cmd_invariants(n, selection, budget_flag);
    }
    if (verify->parsed()) {
      if (n_min < 3 || n_min > n_max)
        throw CLI::ValidationError("need 3 <= --n-min <= --n-max");
      return cmd_verify(n_min, n_max, budget_flag, strict, verify_format, out_path);
    }
    if (loop_check->parsed()) return cmd_loop_check(source);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ahg::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
