#include "upsilon/geometry.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "upsilon/error.hpp"

namespace upsilon {

namespace {

void require_same_length(const Point& x, const Point& y) {
  if (x.size() != y.size()) throw DimensionMismatch(x.size(), y.size());
}

constexpr std::size_t kMaxOffsetDimension = 16;

}  // namespace

Point& Point::operator+=(const Point& o) {
  require_same_length(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  require_same_length(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Point& Point::operator*=(Coord k) {
  for (auto& c : coords_) c *= k;
  return *this;
}

Point Point::mod(Coord p) const {
  Point r(*this);
  for (auto& c : r.coords_) c = floor_mod(c, p);
  return r;
}

std::string Point::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::string Point::to_words() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ' ';
    os << coords_[i];
  }
  return os.str();
}

std::size_t hamming_distance(const Point& x, const Point& y) {
  require_same_length(x, y);
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

Coord manhattan_distance(const Point& x, const Point& y) {
  require_same_length(x, y);
  Coord d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] > y[i] ? x[i] - y[i] : y[i] - x[i];
  return d;
}

Coord cross_distance(const Point& x, const Point& y) {
  require_same_length(x, y);
  Coord d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Coord delta = x[i] > y[i] ? x[i] - y[i] : y[i] - x[i];
    d += std::max<Coord>(0, delta - 1);
  }
  return d;
}

Coord cross_weight(const Point& x) { return cross_distance(x, Point(x.size())); }

Coord torus_cross_distance(const Point& x, const Point& y, Coord p) {
  require_same_length(x, y);
  if (p < 4) throw InvalidArgument("torus period must be >= 4, got " + std::to_string(p));
  Coord d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Coord r = floor_mod(y[i] - x[i], p);
    const Coord delta = std::min(r, p - r);
    d += std::max<Coord>(0, delta - 1);
  }
  return d;
}

std::uint64_t upsilon_size(std::size_t n) {
  if (n == 0) throw InvalidArgument("dimension must be >= 1");
  if (n > 58) throw InvalidArgument("dimension too large for shape size: " + std::to_string(n));
  return (std::uint64_t{1} << n) * (n + 1);
}

UpsilonShape upsilon_offsets(std::size_t n) {
  if (n == 0) throw InvalidArgument("dimension must be >= 1");
  if (n > kMaxOffsetDimension)
    throw InvalidArgument("offset enumeration limited to n <= " +
                          std::to_string(kMaxOffsetDimension));
  UpsilonShape shape;
  shape.n = n;
  shape.offsets.reserve(upsilon_size(n));
  const std::uint64_t core = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < core; ++mask) {
    Point d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = (mask >> i) & 1;
    shape.offsets.push_back(d);
    for (std::size_t i = 0; i < n; ++i) {
      // exceptional coordinate i; the core bit at i is ignored, so take only mask with bit i clear
      if ((mask >> i) & 1) continue;
      for (Coord e : {Coord{-1}, Coord{2}}) {
        Point arm(d);
        arm[i] = e;
        shape.offsets.push_back(std::move(arm));
      }
    }
  }
  std::sort(shape.offsets.begin(), shape.offsets.end());
  return shape;
}

bool covers(const Point& x, const Point& a) {
  require_same_length(x, a);
  int exceptional = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Coord d = x[i] - a[i];
    if (d < -1 || d > 2) return false;
    if (d == -1 || d == 2) ++exceptional;
  }
  return exceptional <= 1;
}

bool covers_mod(const Point& x, const Point& a, Coord p) {
  require_same_length(x, a);
  if (p < 4) throw InvalidArgument("torus period must be >= 4, got " + std::to_string(p));
  int exceptional = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Coord d = floor_mod(x[i] - a[i], p);
    if (d == 0 || d == 1) continue;
    if (d == 2 || d == p - 1) {
      ++exceptional;
      continue;
    }
    return false;
  }
  return exceptional <= 1;
}

CellIndex checked_window_size(std::size_t n, Coord p) {
  if (p < 1) throw InvalidArgument("period must be positive");
  CellIndex cells = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (cells > std::numeric_limits<CellIndex>::max() / static_cast<CellIndex>(p))
      throw BudgetExceeded("window " + std::to_string(p) + "^" + std::to_string(n) +
                           " overflows the cell index type");
    cells *= static_cast<CellIndex>(p);
  }
  return cells;
}

Window::Window(std::size_t n, Coord p) : n_(n), p_(p), cells_(checked_window_size(n, p)) {
  if (n == 0) throw InvalidArgument("dimension must be >= 1");
  strides_.resize(n);
  CellIndex s = 1;
  for (std::size_t i = 0; i < n; ++i) {
    strides_[i] = s;
    if (i + 1 < n) s *= static_cast<CellIndex>(p);
  }
}

CellIndex Window::index_of(const Point& x) const {
  if (x.size() != n_) throw DimensionMismatch(x.size(), n_);
  CellIndex idx = 0;
  for (std::size_t i = 0; i < n_; ++i)
    idx += static_cast<CellIndex>(floor_mod(x[i], p_)) * strides_[i];
  return idx;
}

Point Window::point_of(CellIndex idx) const {
  Point x(n_);
  const auto p = static_cast<CellIndex>(p_);
  for (std::size_t i = 0; i < n_; ++i) {
    x[i] = static_cast<Coord>(idx % p);
    idx /= p;
  }
  return x;
}

}  // namespace upsilon
