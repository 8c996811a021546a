#include "ahg/hypergraph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ahg {

SupportHypergraph SupportHypergraph::from_triples(int vertex_count,
                                                  std::vector<std::array<int, 3>> triples) {
  for (auto& t : triples) {
    std::sort(t.begin(), t.end());
    if (t[0] < 0 || t[2] >= vertex_count)
      throw std::invalid_argument("edge vertex out of range");
    if (t[0] == t[1] || t[1] == t[2])
      throw std::invalid_argument("edge vertices must be pairwise distinct");
  }
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  return {vertex_count, std::move(triples)};
}

AssociatingHypergraph build_hypergraph(const Loop& l) {
  AssociatingHypergraph h;
  h.loop = l;
  h.vertex_count = l.order;
  const int m = l.order;
  // x < y < z in the outer loops would lose the orderings, so scan all
  // ordered triples; lexicographic emission order falls out for free.
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (y == x) continue;
      const int xy = l.table[x][y];
      for (int z = 0; z < m; ++z) {
        if (z == x || z == y) continue;
        if (l.table[xy][z] == l.table[x][l.table[y][z]])
          h.directed_edges.push_back({x, y, z});
      }
    }
  }
  // Group the directed edges by underlying 3-set.
  std::vector<std::array<int, 3>> sorted;
  sorted.reserve(h.directed_edges.size());
  for (auto t : h.directed_edges) {
    std::sort(t.begin(), t.end());
    sorted.push_back(t);
  }
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    h.support_edges.push_back(sorted[i]);
    h.multiplicity.push_back(static_cast<int>(j - i));
    i = j;
  }
  return h;
}

DegreeData degrees(const AssociatingHypergraph& h) {
  DegreeData d;
  d.directed_degree.assign(h.vertex_count, 0);
  d.support_degree.assign(h.vertex_count, 0);
  for (const auto& e : h.directed_edges)
    for (int v : e) ++d.directed_degree[v];
  for (const auto& e : h.support_edges)
    for (int v : e) ++d.support_degree[v];
  d.edge_sizes.assign(h.support_edges.size(), 3);
  return d;
}

std::optional<int> distance(const SupportHypergraph& h, int u, int v) {
  if (u < 0 || u >= h.vertex_count || v < 0 || v >= h.vertex_count)
    throw std::invalid_argument("distance: vertex out of range");
  if (u == v) throw std::invalid_argument("distance: vertices must be distinct");
  // BFS over vertex co-occurrence; each step crosses one support edge.
  std::vector<std::vector<int>> adj(h.vertex_count);
  for (const auto& e : h.edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[0]].push_back(e[2]);
    adj[e[1]].push_back(e[0]);
    adj[e[1]].push_back(e[2]);
    adj[e[2]].push_back(e[0]);
    adj[e[2]].push_back(e[1]);
  }
  std::vector<int> dist(h.vertex_count, -1);
  std::queue<int> q;
  dist[u] = 0;
  q.push(u);
  while (!q.empty()) {
    const int a = q.front();
    q.pop();
    if (a == v) return dist[a];
    for (int b : adj[a]) {
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        q.push(b);
      }
    }
  }
  return std::nullopt;
}

std::optional<int> distance(const AssociatingHypergraph& h, int u, int v) {
  return distance(SupportHypergraph{h.vertex_count, h.support_edges}, u, v);
}

ExportFormat parse_export_format(std::string_view tag) {
  if (tag == "edge-json") return ExportFormat::edge_json;
  if (tag == "incidence-csv") return ExportFormat::incidence_csv;
  if (tag == "support-list") return ExportFormat::support_list;
  throw std::invalid_argument("unknown export format \"" + std::string(tag) +
                              "\" (expected edge-json, incidence-csv, or support-list)");
}

namespace {

// RFC-4180 style: quote a field iff it contains a comma, quote, or newline.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string export_hypergraph(const AssociatingHypergraph& h, ExportFormat format) {
  switch (format) {
    case ExportFormat::edge_json: {
      nlohmann::json j;
      if (h.loop.provenance == LoopProvenance::moufang_extension)
        j["n"] = h.loop.base_group_order / 2;
      j["vertex_count"] = h.vertex_count;
      j["vertices"] = h.loop.names;
      auto& edges = j["directed_edges"] = nlohmann::json::array();
      for (const auto& e : h.directed_edges) edges.push_back({e[0], e[1], e[2]});
      return j.dump(2) + "\n";
    }
    case ExportFormat::incidence_csv: {
      std::ostringstream out;
      out << "vertex";
      for (std::size_t e = 0; e < h.support_edges.size(); ++e) out << ",e" << e;
      out << "\n";
      for (int v = 0; v < h.vertex_count; ++v) {
        out << csv_field(h.loop.names[v]);
        for (const auto& e : h.support_edges)
          out << ',' << ((e[0] == v || e[1] == v || e[2] == v) ? '1' : '0');
        out << "\n";
      }
      return out.str();
    }
    case ExportFormat::support_list: {
      std::ostringstream out;
      for (std::size_t i = 0; i < h.support_edges.size(); ++i) {
        const auto& e = h.support_edges[i];
        out << e[0] << ' ' << e[1] << ' ' << e[2] << ' ' << h.multiplicity[i] << "\n";
      }
      return out.str();
    }
  }
  throw std::invalid_argument("unknown export format");
}

}  // namespace ahg
