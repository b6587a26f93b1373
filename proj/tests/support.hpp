#pragma once

// Shared helpers for the test binaries: seeded generators and brute-force
// oracles that do not go through the library's own shape tables.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "upsilon/geometry.hpp"
#include "upsilon/tiling.hpp"

namespace testsupport {

using upsilon::Coord;
using upsilon::Point;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed'1234'abcdULL);
  return gen;
}

inline Coord uniform(Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(rng()); }

inline Point random_point(std::size_t n, Coord lo, Coord hi) {
  Point x(n);
  for (auto& v : x) v = uniform(lo, hi);
  return x;
}

// Every point of {lo..hi}^n.
inline std::vector<Point> box(std::size_t n, Coord lo, Coord hi) {
  std::vector<Point> out;
  Point x(n);
  for (auto& v : x) v = lo;
  while (true) {
    out.push_back(x);
    std::size_t i = 0;
    while (i < n && x[i] == hi) x[i++] = lo;
    if (i == n) break;
    ++x[i];
  }
  return out;
}

// Cells of the tile at X built geometrically: the 2x...x2 block {X-1, X}^n
// plus one extra cell glued to each face of the block.
inline std::set<Point> tile_cells(const Point& x) {
  const std::size_t n = x.size();
  std::set<Point> cells;
  for (const auto& c : box(n, -1, 0)) {
    cells.insert(x + c);
    for (std::size_t i = 0; i < n; ++i) {
      Point arm = x + c;
      arm[i] += c[i] == -1 ? -1 : 1;
      cells.insert(arm);
    }
  }
  return cells;
}

inline std::set<Point> tile_cells_mod(const Point& x, Coord p) {
  std::set<Point> out;
  for (const auto& c : tile_cells(x)) out.insert(c.mod(p));
  return out;
}

struct NaiveCount {
  std::uint64_t multiply = 0;
  std::uint64_t uncovered = 0;
  bool exact() const { return multiply == 0 && uncovered == 0; }
};

// For each cell of the window, count the codewords whose tile contains it.
inline NaiveCount naive_verify(std::size_t n, Coord p, const std::vector<Point>& words) {
  std::vector<std::set<Point>> tiles;
  for (const auto& x : words) tiles.push_back(tile_cells_mod(x, p));
  NaiveCount r;
  for (const auto& a : box(n, 0, p - 1)) {
    int hits = 0;
    for (const auto& t : tiles) hits += t.count(a) ? 1 : 0;
    if (hits == 0) ++r.uncovered;
    if (hits > 1) ++r.multiply;
  }
  return r;
}

inline std::vector<Point> parse_words(const std::vector<std::string>& rows) {
  std::vector<Point> out;
  for (const auto& r : rows) {
    Point x(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) x[i] = r[i] - '0';
    out.push_back(x);
  }
  return out;
}

// A 16-word tiling of Z_4^7 that is not twice a binary code.
inline std::vector<Point> example_z4_7() {
  return parse_words({"0000000", "0000222", "2222000", "2222222", "2200201", "2200023", "0022201", "0022023",
                      "2020021", "2020203", "0202021", "0202203", "2002002", "2002220", "0220002", "0220220"});
}

inline std::vector<Point> lambda2_window() {
  return {{0, 0}, {0, 4}, {0, 8}, {3, 2}, {3, 6}, {3, 10}, {6, 0}, {6, 4}, {6, 8}, {9, 2}, {9, 6}, {9, 10}};
}

}  // namespace testsupport
