#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace upsilon {

using Coord = std::int64_t;
using CellIndex = std::uint64_t;

/// An integer vector in Z^n.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t n) : coords_(n, 0) {}
  Point(std::initializer_list<Coord> c) : coords_(c) {}
  explicit Point(std::vector<Coord> c) : coords_(std::move(c)) {}

  static Point unit(std::size_t n, std::size_t r, Coord scale = 1) {
    Point e(n);
    e[r] = scale;
    return e;
  }

  std::size_t size() const { return coords_.size(); }
  Coord& operator[](std::size_t i) { return coords_[i]; }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  auto begin() { return coords_.begin(); }
  auto end() { return coords_.end(); }
  const std::vector<Coord>& coords() const { return coords_; }

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  Point& operator*=(Coord k);
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Coord k, Point a) { return a *= k; }
  Point operator-() const { return Coord{-1} * *this; }

  /// Coordinatewise reduction into {0, ..., p-1}.
  Point mod(Coord p) const;

  /// "(a1,a2,...)"
  std::string to_string() const;
  /// "a1 a2 ..." (file/CLI form)
  std::string to_words() const;

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<Coord> coords_;
};

/// Non-negative remainder.
constexpr Coord floor_mod(Coord a, Coord m) {
  Coord r = a % m;
  return r < 0 ? r + m : r;
}

constexpr Coord floor_div(Coord a, Coord m) { return (a - floor_mod(a, m)) / m; }

std::size_t hamming_distance(const Point& x, const Point& y);
Coord manhattan_distance(const Point& x, const Point& y);
/// d_C(x, y) = sum_i max(0, |y_i - x_i| - 1). Not a metric.
Coord cross_distance(const Point& x, const Point& y);
Coord cross_weight(const Point& x);
/// d_C between the residue classes x + pZ^n and y + pZ^n. Requires p >= 4.
Coord torus_cross_distance(const Point& x, const Point& y, Coord p);

/// Offsets D = X - A such that codeword X covers cell A. The shape Upsilon_n
/// (core {-1,0}^n plus its Manhattan neighbours) seen from its codeword.
struct UpsilonShape {
  std::size_t n = 0;
  std::vector<Point> offsets;  // lexicographic order

  std::size_t size() const { return offsets.size(); }
};

/// 2^n (n+1), with overflow check.
std::uint64_t upsilon_size(std::size_t n);

UpsilonShape upsilon_offsets(std::size_t n);

/// True iff X + Upsilon_n contains a: every x_i in {a_i-1, ..., a_i+2}
/// and at most one x_i in {a_i-1, a_i+2}.
bool covers(const Point& x, const Point& a);

/// Torus form of covers: X + pZ^n covers a + pZ^n.
bool covers_mod(const Point& x, const Point& a, Coord p);

/// Mixed-radix little-endian indexing of the window {0..p-1}^n
/// (coordinate 1 varies fastest).
class Window {
 public:
  Window(std::size_t n, Coord p);

  std::size_t dimension() const { return n_; }
  Coord period() const { return p_; }
  CellIndex cell_count() const { return cells_; }
  /// Stride of coordinate i, i.e. p^i.
  CellIndex stride(std::size_t i) const { return strides_[i]; }

  /// Index of x mod p.
  CellIndex index_of(const Point& x) const;
  Point point_of(CellIndex idx) const;

 private:
  std::size_t n_;
  Coord p_;
  CellIndex cells_;
  std::vector<CellIndex> strides_;
};

/// p^n if it fits in CellIndex, otherwise throws BudgetExceeded.
CellIndex checked_window_size(std::size_t n, Coord p);

}  // namespace upsilon
