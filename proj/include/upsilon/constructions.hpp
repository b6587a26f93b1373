#pragma once

#include <array>
#include <utility>

#include "upsilon/codes.hpp"
#include "upsilon/geometry.hpp"
#include "upsilon/tiling.hpp"

namespace upsilon {

// ---- Binary perfect codes (n = 2^t - 1, period 4) ----

/// {2x : x in C} over Z_4^n.
PeriodicTiling from_binary_perfect(const BlockCode& code);

/// Inverse direction: halves an all-even tiling, otherwise maps each entry
/// through xi (0,1 -> 0; 2,3 -> 1). The image is certified perfect.
BlockCode to_binary_perfect(const PeriodicTiling& tiling);

/// Codeword (c', x) becomes (2c', 2x) when wt(c') is even and (2c', 2x+1) when odd.
PeriodicTiling punctured_construction(const BlockCode& code);

/// A point X = 2w + 4v (w in C) whose tile contains a.
Point locate_tile_binary(const Point& a, const BlockCode& code);

// ---- Ternary perfect codes (n = 3^t - 1, period 12) ----

using Pair = std::array<Coord, 2>;

/// Residue pairs of Z~_3 x Z~_4 grouped into the classes [(0,0)], [(1,2)], [(2,0)],
/// with the covering adjustments for every (pair, target class).
struct ClassTable {
  std::array<std::array<Pair, 4>, 3> classes;
  /// adjust[x1][x2][target] = (u1,u2) + (y1,y2), a Z^2 point (not reduced).
  std::array<std::array<std::array<Pair, 3>, 4>, 3> adjust;

  int class_of(Coord x1, Coord x2) const;
};

/// The validated table (checked once on first use; throws std::logic_error on a bad entry).
const ClassTable& class_table();

Pair phi(Coord symbol);
Point Phi(const Point& word);
Coord psi(Coord x1, Coord x2);
Point Psi(const Point& reps);

struct Representative {
  Point b;  // in (Z~_3 x Z~_4)^nu
  Point y;  // in Lambda_n, a + y = b
};

Representative reduce_to_representative(const Point& a);

/// (Phi(C) + Lambda_n) reduced into the Z_12^{2 nu} window.
PeriodicTiling from_ternary_perfect(const BlockCode& code);

/// A codeword of Phi(C) + Lambda_n (unreduced) covering a.
Point locate_tile_ternary(const Point& a, const BlockCode& code);

}  // namespace upsilon
