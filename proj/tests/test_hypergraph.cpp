#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "ahg/algebra.hpp"
#include "ahg/hypergraph.hpp"

using namespace ahg;

namespace {

Loop d3_as_loop() {
  const Group g = dihedral_group(3).group;
  return validate_loop(g.table, g.identity, g.names);
}

bool has_directed(const AssociatingHypergraph& h, std::array<int, 3> t) {
  return std::find(h.directed_edges.begin(), h.directed_edges.end(), t) !=
         h.directed_edges.end();
}

}  // namespace

TEST_CASE("an associative loop associates everywhere: D_3 as a loop") {
  const AssociatingHypergraph h = build_hypergraph(d3_as_loop());
  // Every one of the 6*5*4 = 120 ordered triples of distinct elements
  // associates, so all C(6,3) = 20 supports appear with multiplicity 6.
  CHECK(h.vertex_count == 6);
  CHECK(h.directed_edges.size() == 120);
  CHECK(h.support_edges.size() == 20);
  for (int m : h.multiplicity) CHECK(m == 6);
  const DegreeData d = degrees(h);
  for (int v = 0; v < 6; ++v) {
    CHECK(d.directed_degree[v] == 60);
    CHECK(d.support_degree[v] == 10);
  }
}

TEST_CASE("M(D_3,2): frozen edge counts and full-multiplicity support") {
  const AssociatingHypergraph h = build_hypergraph(moufang_extension(dihedral_group(3).group));
  CHECK(h.vertex_count == 12);
  CHECK(h.directed_edges.size() == 564);
  CHECK(h.support_edges.size() == 94);
  REQUIRE(h.multiplicity.size() == 94);
  // Moufang loops: associativity of a triple is invariant under reordering,
  // so every support edge carries all six orderings.
  for (int m : h.multiplicity) CHECK(m == 6);
  CHECK(h.support().edges == h.support_edges);
}

TEST_CASE("M(D_3,2): frozen per-class degrees") {
  const AssociatingHypergraph h = build_hypergraph(moufang_extension(dihedral_group(3).group));
  const DegreeData d = degrees(h);
  // Vertex 0 = (e,0); 1,2 = untagged rotations; 3..5 = untagged reflections;
  // 6..11 = tagged copies.  Tagged degrees are flat at n = 3.
  CHECK(d.directed_degree[0] == 330);
  CHECK(d.directed_degree[1] == 168);
  CHECK(d.directed_degree[2] == 168);
  for (int v = 3; v < 12; ++v) CHECK(d.directed_degree[v] == 114);
  CHECK(d.support_degree[0] == 55);
  CHECK(d.support_degree[1] == 28);
  CHECK(d.support_degree[2] == 28);
  for (int v = 3; v < 12; ++v) CHECK(d.support_degree[v] == 19);
  REQUIRE(d.edge_sizes.size() == 94);
  for (int s : d.edge_sizes) CHECK(s == 3);
}

TEST_CASE("order-5 loop: directed edges are genuinely directed") {
  const AssociatingHypergraph h = build_hypergraph(builtin_order5_loop());
  CHECK(h.vertex_count == 5);
  CHECK(h.directed_edges.size() == 48);
  CHECK(h.support_edges.size() == 10);
  // (1,2,3) associates but its transposition (1,3,2) does not: outside the
  // Moufang world multiplicities drop below 6.
  CHECK(has_directed(h, {1, 2, 3}));
  CHECK_FALSE(has_directed(h, {1, 3, 2}));
  bool any_partial = false;
  for (int m : h.multiplicity) {
    CHECK(m >= 1);
    CHECK(m <= 6);
    if (m < 6) any_partial = true;
  }
  CHECK(any_partial);
  // Multiplicities add up to the directed count.
  std::int64_t sum = 0;
  for (int m : h.multiplicity) sum += m;
  CHECK(sum == 48);
}

TEST_CASE("directed edges agree with a direct associator rescan") {
  for (int n = 3; n <= 4; ++n) {
    const Loop l = moufang_extension(dihedral_group(n).group);
    const AssociatingHypergraph h = build_hypergraph(l);
    std::vector<std::array<int, 3>> expect;
    for (int x = 0; x < l.order; ++x)
      for (int y = 0; y < l.order; ++y)
        for (int z = 0; z < l.order; ++z) {
          if (x == y || y == z || x == z) continue;
          if (associates(l, x, y, z)) expect.push_back({x, y, z});
        }
    CHECK(h.directed_edges == expect);  // build order is the same lex scan
  }
}

TEST_CASE("support edges are canonical: ascending triples, lexicographic, deduplicated") {
  const AssociatingHypergraph h = build_hypergraph(builtin_order5_loop());
  for (const auto& e : h.support_edges) {
    CHECK(e[0] < e[1]);
    CHECK(e[1] < e[2]);
  }
  CHECK(std::is_sorted(h.support_edges.begin(), h.support_edges.end()));
  CHECK(std::adjacent_find(h.support_edges.begin(), h.support_edges.end()) ==
        h.support_edges.end());
}

TEST_CASE("from_triples canonicalizes and validates") {
  const SupportHypergraph h = SupportHypergraph::from_triples(6, {{5, 1, 3}, {1, 3, 5}, {0, 2, 1}});
  CHECK(h.edges == std::vector<std::array<int, 3>>{{0, 1, 2}, {1, 3, 5}});
  CHECK_THROWS_AS(SupportHypergraph::from_triples(4, {{0, 1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(SupportHypergraph::from_triples(4, {{0, 1, 1}}), std::invalid_argument);
}

TEST_CASE("distance walks the co-occurrence graph") {
  // Two edges sharing vertex 2: {0,1,2} and {2,3,4}, plus an isolated 5.
  const SupportHypergraph h{6, {{0, 1, 2}, {2, 3, 4}}};
  CHECK(distance(h, 0, 1) == 1);
  CHECK(distance(h, 0, 2) == 1);
  CHECK(distance(h, 0, 3) == 2);
  CHECK(distance(h, 0, 4) == 2);
  CHECK(distance(h, 3, 1) == 2);
  CHECK_FALSE(distance(h, 0, 5).has_value());
  CHECK_THROWS_AS(distance(h, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(distance(h, 0, 6), std::invalid_argument);
  CHECK_THROWS_AS(distance(h, -1, 0), std::invalid_argument);
}

TEST_CASE("export formats parse by CLI spelling only") {
  CHECK(parse_export_format("edge-json") == ExportFormat::edge_json);
  CHECK(parse_export_format("incidence-csv") == ExportFormat::incidence_csv);
  CHECK(parse_export_format("support-list") == ExportFormat::support_list);
  CHECK_THROWS_AS(parse_export_format("edge_json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_export_format(""), std::invalid_argument);
}

TEST_CASE("edge-json export carries the construction parameters") {
  const AssociatingHypergraph h = build_hypergraph(moufang_extension(dihedral_group(3).group));
  const std::string js = export_hypergraph(h, ExportFormat::edge_json);
  CHECK(js.find("\"n\": 3") != std::string::npos);
  CHECK(js.find("\"vertex_count\": 12") != std::string::npos);
  CHECK(js.find("(e,0)") != std::string::npos);
  CHECK(js.back() == '\n');
  // Byte-stable across calls.
  CHECK(js == export_hypergraph(h, ExportFormat::edge_json));
}

TEST_CASE("incidence-csv export: right shape, three ones per column") {
  const AssociatingHypergraph h = build_hypergraph(moufang_extension(dihedral_group(3).group));
  const std::string csv = export_hypergraph(h, ExportFormat::incidence_csv);
  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line.rfind("vertex,e0,e1,", 0) == 0);

  std::vector<int> column_sum(94, 0);
  int rows = 0;
  while (std::getline(in, line)) {
    // Vertex names contain commas, so they arrive quoted; the cells after
    // the closing quote are bare 0/1 fields.
    REQUIRE(line.front() == '"');
    const std::size_t close = line.find('"', 1);
    REQUIRE(close != std::string::npos);
    std::size_t pos = close + 1;
    int col = 0;
    while (pos < line.size()) {
      REQUIRE(line[pos] == ',');
      const char cell = line[pos + 1];
      CHECK((cell == '0' || cell == '1'));
      if (cell == '1') ++column_sum[col];
      ++col;
      pos += 2;
    }
    CHECK(col == 94);
    ++rows;
  }
  CHECK(rows == 12);
  for (int c = 0; c < 94; ++c) CHECK(column_sum[c] == 3);
}

TEST_CASE("support-list export: one line per support edge") {
  const AssociatingHypergraph h = build_hypergraph(moufang_extension(dihedral_group(3).group));
  const std::string txt = export_hypergraph(h, ExportFormat::support_list);
  std::istringstream in(txt);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    int i = -1, j = -1, k = -1, m = -1;
    fields >> i >> j >> k >> m;
    CHECK(fields);
    CHECK(i < j);
    CHECK(j < k);
    CHECK(m == 6);
    ++lines;
  }
  CHECK(lines == 94);
}
