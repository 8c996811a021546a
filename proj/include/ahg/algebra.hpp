#pragma once

// Finite groups, loops (quasigroups with identity), and the Chein double
// M(G,2): the Moufang loop of order 2|G| built from a group G and a formal
// tag u, with multiplication
//
//   (g1, 0)(g2, 0) = (g1 g2,      0)      (g1, 0)(g2, 1) = (g2 g1,      1)
//   (g1, 1)(g2, 0) = (g1 g2^-1,   1)      (g1, 1)(g2, 1) = (g2^-1 g1,   0)
//
// Elements of a structure of order m are the indices 0..m-1; index 0 is
// always the identity.  For M(G,2) the element (g, alpha) sits at index
// alpha*|G| + g, so the untagged copy of G occupies the first |G| slots.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ahg {

// Thrown when a multiplication table fails a structural check (not a Latin
// square, wrong identity, ...).  The message names the offending row/column.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Group {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[a][b] = a*b
  int identity = 0;
  std::vector<std::string> names;       // display string per element

  int mul(int a, int b) const { return table[a][b]; }
  int inverse(int a) const;             // unique two-sided inverse
  bool commutes(int a, int b) const { return table[a][b] == table[b][a]; }
};

// Conjugacy-driven split of a dihedral group's elements used by the degree
// formulas: central elements, non-central rotations R, reflections S.
struct GroupPartition {
  std::vector<int> center;
  std::vector<int> rotations;
  std::vector<int> reflections;
};

struct DihedralData {
  Group group;
  GroupPartition partition;
};

// D_n = <x, y | x^n = y^2 = e, x y = y x^-1>, order 2n, n >= 1.
// Element i in 0..n-1 is the rotation x^i; element n+i is the reflection
// x^i y.  The partition is computed by brute-force centrality tests, not
// from the parity of n.
DihedralData dihedral_group(int n);

enum class LoopProvenance { user_table, builtin_order5, moufang_extension };

struct Loop {
  int order = 0;
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::vector<std::string> names;
  LoopProvenance provenance = LoopProvenance::user_table;
  // For a Chein double this is the order of the base group (= order/2);
  // zero otherwise.  Triple classification needs it.
  int base_group_order = 0;

  int mul(int a, int b) const { return table[a][b]; }
};

// Checks that `table` is a Latin square of its own size with two-sided
// identity `identity`, and wraps it as a Loop.  Throws validation_error
// naming the first offending row or column.
Loop validate_loop(const std::vector<std::vector<int>>& table, int identity,
                   std::vector<std::string> names = {});

// The classic smallest loop that satisfies none of the Moufang identities:
// order 5, commutative, every element its own inverse.
Loop builtin_order5_loop();

// The Chein double M(G,2).  Always a Moufang loop; associative iff G is
// abelian.
Loop moufang_extension(const Group& g);

// Canonical index of (g, alpha) in M(G,2) and back.
inline int moufang_index(int g, int alpha, int group_order) {
  return alpha * group_order + g;
}
inline std::pair<int, int> moufang_coords(int vertex, int group_order) {
  return {vertex % group_order, vertex / group_order};
}

// Does (x*y)*z == x*(y*z) in l?
bool associates(const Loop& l, int x, int y, int z);

// Result of scanning all triples against the three Moufang identities
//   (1) (xy)(zx) = (x(yz))x
//   (2) x(y(zy)) = ((xy)z)y
//   (3) x(y(xz)) = ((xy)x)z
// Triples are scanned in lexicographic order, identities in order 1..3;
// the first violation is reported.
struct MoufangCheck {
  bool holds = true;
  int identity_id = 0;                       // 1..3 when !holds
  std::array<int, 3> counterexample{-1, -1, -1};
};
MoufangCheck check_moufang_identities(const Loop& l);

// Lexicographically first triple (x,y,z) with (xy)z != x(yz), if any.
std::optional<std::array<int, 3>> nonassociative_witness(const Loop& l);

inline bool is_associative(const Loop& l) {
  return !nonassociative_witness(l).has_value();
}

}  // namespace ahg
