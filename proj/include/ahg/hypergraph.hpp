#pragma once

// The associating hypergraph of a loop L: vertices are the elements of L,
// and an ordered triple (x,y,z) of pairwise distinct elements is a directed
// edge iff (xy)z = x(yz).  Collapsing each directed edge to its underlying
// 3-set gives the support hypergraph, which is 3-uniform; the multiplicity
// of a support edge (1..6) counts its associating orderings.
//
// Convention used throughout: anything that counts triples (case counts,
// vertex degrees) reads the directed edges; set-valued invariants
// (independence, transversal, covering, matching, colorings) read the
// support.  Reports repeat this note so numbers cannot be misread.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ahg/algebra.hpp"

namespace ahg {

// A plain 3-uniform hypergraph: edges are ascending triples in
// lexicographic order with no duplicates.  This is what the exact solvers
// consume; it can come from a loop or be built synthetically.
struct SupportHypergraph {
  int vertex_count = 0;
  std::vector<std::array<int, 3>> edges;

  // Canonicalizes arbitrary triples: sorts within each triple, sorts the
  // list, drops duplicates.  Throws std::invalid_argument on out-of-range
  // or non-distinct vertices.
  static SupportHypergraph from_triples(int vertex_count,
                                        std::vector<std::array<int, 3>> triples);
};

struct AssociatingHypergraph {
  Loop loop;
  int vertex_count = 0;
  std::vector<std::array<int, 3>> directed_edges;   // lexicographic
  std::vector<std::array<int, 3>> support_edges;    // ascending triples, lexicographic
  std::vector<int> multiplicity;                    // parallel to support_edges

  SupportHypergraph support() const { return {vertex_count, support_edges}; }
};

// Exhaustive scan over all ordered triples of pairwise distinct elements.
AssociatingHypergraph build_hypergraph(const Loop& l);

struct DegreeData {
  std::vector<std::int64_t> directed_degree;   // #directed edges containing v
  std::vector<std::int64_t> support_degree;    // #support edges containing v
  std::vector<int> edge_sizes;                 // per support edge; always 3 here
};
DegreeData degrees(const AssociatingHypergraph& h);

// Fewest support edges in a chain joining u to v, walking vertex
// co-occurrence; nullopt when unreachable.  Throws std::invalid_argument
// if u == v or either index is out of range.
std::optional<int> distance(const SupportHypergraph& h, int u, int v);
std::optional<int> distance(const AssociatingHypergraph& h, int u, int v);

enum class ExportFormat { edge_json, incidence_csv, support_list };

// Accepts the CLI spellings "edge-json", "incidence-csv", "support-list".
ExportFormat parse_export_format(std::string_view tag);

// Deterministic, byte-stable serializations:
//   edge-json:      one JSON object (n when the loop is a Chein double of
//                   D_n, vertex_count, vertex names, directed edge triples)
//   incidence-csv:  |V| x |support| 0/1 matrix; header row e0..e{k-1},
//                   first column the vertex names (RFC-4180 quoting)
//   support-list:   one line per support edge: "i j k multiplicity"
std::string export_hypergraph(const AssociatingHypergraph& h, ExportFormat format);

}  // namespace ahg
