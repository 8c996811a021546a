#include "ahg/algebra.hpp"

#include <algorithm>

namespace ahg {

int Group::inverse(int a) const {
  for (int b = 0; b < order; ++b) {
    if (table[a][b] == identity && table[b][a] == identity) return b;
  }
  throw validation_error("element " + std::to_string(a) + " has no two-sided inverse");
}

namespace {

// Latin-square + identity checks shared by Group and Loop construction.
void check_table(const std::vector<std::vector<int>>& table, int identity) {
  const int m = static_cast<int>(table.size());
  if (m == 0) throw validation_error("empty multiplication table");
  if (identity < 0 || identity >= m)
    throw validation_error("identity index " + std::to_string(identity) + " out of range");
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(table[r].size()) != m)
      throw validation_error("row " + std::to_string(r) + " has wrong length");
    for (int c = 0; c < m; ++c) {
      const int v = table[r][c];
      if (v < 0 || v >= m)
        throw validation_error("row " + std::to_string(r) + ", column " + std::to_string(c) +
                               " holds out-of-range entry " + std::to_string(v));
    }
  }
  std::vector<char> seen(m);
  for (int r = 0; r < m; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < m; ++c) {
      if (seen[table[r][c]]++)
        throw validation_error("row " + std::to_string(r) + " repeats entry " +
                               std::to_string(table[r][c]));
    }
  }
  for (int c = 0; c < m; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < m; ++r) {
      if (seen[table[r][c]]++)
        throw validation_error("column " + std::to_string(c) + " repeats entry " +
                               std::to_string(table[r][c]));
    }
  }
  for (int a = 0; a < m; ++a) {
    if (table[identity][a] != a)
      throw validation_error("element " + std::to_string(identity) +
                             " is not a left identity at column " + std::to_string(a));
    if (table[a][identity] != a)
      throw validation_error("element " + std::to_string(identity) +
                             " is not a right identity at row " + std::to_string(a));
  }
}

std::string rotation_name(int i) {
  if (i == 0) return "e";
  if (i == 1) return "x";
  return "x^" + std::to_string(i);
}

std::string reflection_name(int i) {
  if (i == 0) return "y";
  if (i == 1) return "xy";
  return "x^" + std::to_string(i) + "y";
}

}  // namespace

DihedralData dihedral_group(int n) {
  if (n < 1) throw validation_error("dihedral parameter must be >= 1");
  const int m = 2 * n;
  Group g;
  g.order = m;
  g.identity = 0;
  g.table.assign(m, std::vector<int>(m));
  // Indices: i < n is x^i, n+i is x^i y.  With r = x^a, s = x^b y:
  //   x^a x^b = x^(a+b)        x^a (x^b y) = x^(a+b) y
  //   (x^a y) x^b = x^(a-b) y  (x^a y)(x^b y) = x^(a-b)
  auto rot = [n](int a) { return ((a % n) + n) % n; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      g.table[a][b] = rot(a + b);
      g.table[a][n + b] = n + rot(a + b);
      g.table[n + a][b] = n + rot(a - b);
      g.table[n + a][n + b] = rot(a - b);
    }
  }
  g.names.reserve(m);
  for (int i = 0; i < n; ++i) g.names.push_back(rotation_name(i));
  for (int i = 0; i < n; ++i) g.names.push_back(reflection_name(i));
  check_table(g.table, g.identity);

  // Partition by brute-force centrality: an element is central iff it
  // commutes with every element.  (For D_n that works out to {e} when n is
  // odd and {e, x^(n/2)} when n is even, but we do not assume it.)
  GroupPartition part;
  for (int a = 0; a < m; ++a) {
    bool central = true;
    for (int b = 0; b < m && central; ++b) central = g.commutes(a, b);
    if (central) {
      part.center.push_back(a);
    } else if (a < n) {
      part.rotations.push_back(a);
    } else {
      part.reflections.push_back(a);
    }
  }
  return {std::move(g), std::move(part)};
}

Loop validate_loop(const std::vector<std::vector<int>>& table, int identity,
                   std::vector<std::string> names) {
  check_table(table, identity);
  Loop l;
  l.order = static_cast<int>(table.size());
  l.table = table;
  l.identity = identity;
  if (names.empty()) {
    for (int i = 0; i < l.order; ++i) names.push_back(std::to_string(i));
  } else if (static_cast<int>(names.size()) != l.order) {
    throw validation_error("name list length does not match table size");
  }
  l.names = std::move(names);
  return l;
}

Loop builtin_order5_loop() {
  Loop l = validate_loop(
      {
          {0, 1, 2, 3, 4},
          {1, 0, 3, 4, 2},
          {2, 4, 0, 1, 3},
          {3, 2, 4, 0, 1},
          {4, 3, 1, 2, 0},
      },
      0);
  l.provenance = LoopProvenance::builtin_order5;
  return l;
}

Loop moufang_extension(const Group& g) {
  check_table(g.table, g.identity);
  const int m = g.order;
  std::vector<int> inv(m);
  for (int a = 0; a < m; ++a) inv[a] = g.inverse(a);

  Loop l;
  l.order = 2 * m;
  l.identity = moufang_index(g.identity, 0, m);
  l.provenance = LoopProvenance::moufang_extension;
  l.base_group_order = m;
  l.table.assign(l.order, std::vector<int>(l.order));
  for (int g1 = 0; g1 < m; ++g1) {
    for (int g2 = 0; g2 < m; ++g2) {
      l.table[g1][g2] = g.table[g1][g2];                            // (g1,0)(g2,0)
      l.table[g1][m + g2] = m + g.table[g2][g1];                    // (g1,0)(g2,1)
      l.table[m + g1][g2] = m + g.table[g1][inv[g2]];               // (g1,1)(g2,0)
      l.table[m + g1][m + g2] = g.table[inv[g2]][g1];               // (g1,1)(g2,1)
    }
  }
  l.names.reserve(l.order);
  for (int alpha = 0; alpha <= 1; ++alpha) {
    for (int i = 0; i < m; ++i) {
      const std::string base = g.names.empty() ? std::to_string(i) : g.names[i];
      l.names.push_back("(" + base + "," + std::to_string(alpha) + ")");
    }
  }
  check_table(l.table, l.identity);
  return l;
}

bool associates(const Loop& l, int x, int y, int z) {
  return l.table[l.table[x][y]][z] == l.table[x][l.table[y][z]];
}

MoufangCheck check_moufang_identities(const Loop& l) {
  const auto& t = l.table;
  const int m = l.order;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      for (int z = 0; z < m; ++z) {
        if (t[t[x][y]][t[z][x]] != t[t[x][t[y][z]]][x])
          return {false, 1, {x, y, z}};
        if (t[x][t[y][t[z][y]]] != t[t[t[x][y]][z]][y])
          return {false, 2, {x, y, z}};
        if (t[x][t[y][t[x][z]]] != t[t[t[x][y]][x]][z])
          return {false, 3, {x, y, z}};
      }
    }
  }
  return {};
}

std::optional<std::array<int, 3>> nonassociative_witness(const Loop& l) {
  for (int x = 0; x < l.order; ++x)
    for (int y = 0; y < l.order; ++y)
      for (int z = 0; z < l.order; ++z)
        if (!associates(l, x, y, z)) return std::array<int, 3>{x, y, z};
  return std::nullopt;
}

}  // namespace ahg
