#include "upsilon/lattice.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "text_format.hpp"
#include "upsilon/error.hpp"
#include "upsilon/tiling.hpp"

namespace upsilon {

namespace {

using Wide = __int128;

Coord narrow(Wide v) {
  if (v > std::numeric_limits<Coord>::max() || v < std::numeric_limits<Coord>::min())
    throw BudgetExceeded("integer overflow in lattice arithmetic");
  return static_cast<Coord>(v);
}

Wide wmod(Wide a, Wide m) {
  Wide r = a % m;
  return r < 0 ? r + m : r;
}

// g = a*x + b*y, g >= 0
struct Egcd {
  Coord g, x, y;
};

Egcd egcd(Coord a, Coord b) {
  Coord old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Coord q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
    std::tie(old_t, t) = std::pair{t, old_t - q * t};
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

void require_square(const IntMatrix& m) {
  if (m.empty()) throw InvalidArgument("generator matrix is empty");
  for (const auto& row : m)
    if (row.size() != m.size()) throw InvalidArgument("generator matrix must be square");
}

}  // namespace

__int128 determinant(const IntMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  std::vector<std::vector<Wide>> a(n, std::vector<Wide>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  Wide sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Wide lhs, rhs, diff;
        if (__builtin_mul_overflow(a[i][j], a[k][k], &lhs) || __builtin_mul_overflow(a[i][k], a[k][j], &rhs) ||
            __builtin_sub_overflow(lhs, rhs, &diff))
          throw BudgetExceeded("determinant overflow");
        a[i][j] = diff / prev;  // exact by Sylvester's identity
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix hermite_basis_mod(const IntMatrix& rows, std::size_t n, Coord modulus) {
  if (modulus <= 0) throw InvalidArgument("modulus must be positive");
  IntMatrix h(n, std::vector<Coord>(n, 0));
  for (std::size_t i = 0; i < n; ++i) h[i][i] = modulus;
  for (const auto& input : rows) {
    if (input.size() != n) throw DimensionMismatch(input.size(), n);
    std::vector<Coord> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = floor_mod(input[j], modulus);
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      const auto [g, a, b] = egcd(h[j][j], v[j]);
      const Coord hf = h[j][j] / g, vf = v[j] / g;
      std::vector<Coord> pivot(n, 0), rest(n, 0);
      for (std::size_t c = j; c < n; ++c) {
        const Wide hc = h[j][c], vc = v[c];
        Wide pr = Wide(a) * hc + Wide(b) * vc;
        Wide rr = Wide(hf) * vc - Wide(vf) * hc;
        if (c > j) {
          pr = wmod(pr, modulus);
          rr = wmod(rr, modulus);
        }
        pivot[c] = narrow(pr);
        rest[c] = narrow(rr);
      }
      h[j] = std::move(pivot);
      v = std::move(rest);
    }
  }
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      const Coord q = floor_div(h[k][i], h[i][i]);
      if (q == 0) continue;
      for (std::size_t c = i; c < n; ++c) h[k][c] = narrow(Wide(h[k][c]) - Wide(q) * h[i][c]);
    }
  }
  return h;
}

IntegerLattice::IntegerLattice(IntMatrix generator) : generator_(std::move(generator)) {
  require_square(generator_);
  const Wide det = determinant(generator_);
  if (det == 0) throw InvalidArgument("generator matrix is singular");
  const Wide vol = det < 0 ? -det : det;
  if (vol > std::numeric_limits<Coord>::max()) throw BudgetExceeded("lattice volume overflows");
  volume_ = static_cast<std::uint64_t>(vol);
  // volume * Z^n lies in the lattice (adjugate argument), so a mod-volume Hermite basis is exact.
  hermite_ = hermite_basis_mod(generator_, generator_.size(), static_cast<Coord>(vol));
}

bool IntegerLattice::contains(const Point& x) const {
  const std::size_t n = dimension();
  if (x.size() != n) throw DimensionMismatch(x.size(), n);
  std::vector<Wide> r(x.begin(), x.end());
  for (std::size_t j = 0; j < n; ++j) {
    if (r[j] % hermite_[j][j] != 0) return false;
    const Wide q = r[j] / hermite_[j][j];
    if (q == 0) continue;
    for (std::size_t c = j; c < n; ++c) r[c] -= q * hermite_[j][c];
  }
  return true;
}

IntegerLattice lambda_n(std::size_t nu) {
  if (nu == 0) throw InvalidArgument("nu must be >= 1");
  const std::size_t n = 2 * nu;
  IntMatrix g(n, std::vector<Coord>(n, 0));
  for (std::size_t i = 0; i < nu; ++i) {
    g[2 * i][2 * i] = 3;
    g[2 * i][2 * i + 1] = 2;
    g[2 * i + 1][2 * i + 1] = 4;
  }
  return IntegerLattice(std::move(g));
}

std::vector<Point> window(const IntegerLattice& lattice, Coord p) {
  const std::size_t n = lattice.dimension();
  if (p < 1) throw InvalidArgument("period must be positive");
  for (std::size_t i = 0; i < n; ++i)
    if (!lattice.contains(Point::unit(n, i, p)))
      throw PreconditionError("lattice is not " + std::to_string(p) + "-periodic in coordinate " + std::to_string(i + 1));
  const auto& h = lattice.hermite_basis();
  // Each pivot divides p, and coefficient vectors in prod [0, p / h_ii) map bijectively onto the window.
  std::vector<Coord> range(n);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    range[i] = p / h[i][i];
    count *= static_cast<std::uint64_t>(range[i]);
  }
  if (count > (std::uint64_t{1} << 26)) throw BudgetExceeded("lattice window has " + std::to_string(count) + " points");
  std::vector<Point> pts;
  pts.reserve(count);
  std::vector<Coord> coef(n, 0);
  for (std::uint64_t k = 0; k < count; ++k) {
    Point x(n);
    for (std::size_t i = 0; i < n; ++i)
      if (coef[i])
        for (std::size_t c = i; c < n; ++c) x[c] += coef[i] * h[i][c];
    pts.push_back(x.mod(p));
    for (std::size_t i = 0; i < n && ++coef[i] == range[i]; ++i) coef[i] = 0;
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

bool is_lattice_tiling(const PeriodicTiling& tiling) {
  const Window& w = tiling.window();
  const auto& members = tiling.cell_indices();
  const auto in_set = [&](CellIndex c) { return std::binary_search(members.begin(), members.end(), c); };
  if (!in_set(0)) return false;
  const std::size_t n = w.dimension();
  const Coord p = w.period();
  const auto add = [&](CellIndex a, CellIndex b) {
    CellIndex out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto s = static_cast<CellIndex>(p);
      const CellIndex digit = (a % s + b % s) % s;
      out += digit * w.stride(i);
      a /= s;
      b /= s;
    }
    return out;
  };
  // Grow the subgroup generated so far one cyclic extension at a time; every element must stay inside the set.
  std::unordered_set<CellIndex> group{0};
  std::vector<CellIndex> elems{0};
  for (CellIndex x : members) {
    if (group.contains(x)) continue;
    const std::vector<CellIndex> base = elems;
    CellIndex shift = x;
    while (!group.contains(shift)) {
      for (CellIndex h : base) {
        const CellIndex y = add(h, shift);
        if (!in_set(y)) return false;
        group.insert(y);
        elems.push_back(y);
      }
      shift = add(shift, x);
    }
  }
  return elems.size() == members.size();
}

IntegerLattice lattice_of(const PeriodicTiling& tiling) {
  if (!is_lattice_tiling(tiling)) throw PreconditionError("codeword set is not closed under addition");
  IntMatrix rows;
  rows.reserve(tiling.size());
  for (const auto& x : tiling.codewords()) rows.push_back(x.coords());
  return IntegerLattice(hermite_basis_mod(rows, tiling.dimension(), tiling.period()));
}

void write_lattice(std::ostream& os, const IntegerLattice& lattice) {
  os << "LATTICE v1\n"
     << "n " << lattice.dimension() << "\n";
  for (const auto& row : lattice.generator()) os << Point(row).to_words() << "\n";
}

IntegerLattice read_lattice(std::istream& is) {
  detail::LineReader in(is);
  in.expect_exact("LATTICE v1");
  const auto n = in.keyed("n");
  if (n < 1 || n > 64) in.fail("n out of range");
  IntMatrix g;
  for (long long i = 0; i < n; ++i) g.push_back(in.integers(static_cast<std::size_t>(n)));
  in.expect_end();
  return IntegerLattice(std::move(g));
}

}  // namespace upsilon
