#include "upsilon/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "upsilon/error.hpp"
#include "upsilon/lattice.hpp"

namespace upsilon {

namespace {

void require_perfect(const BlockCode& code, int q) {
  if (code.q() != q)
    throw PreconditionError("expected a code over Z_" + std::to_string(q) + ", got q=" + std::to_string(code.q()));
  const auto verdict = is_perfect(code);
  if (!verdict) throw PreconditionError("code is not perfect: " + verdict.reason);
}

// Unique value in [a-1, a+2] congruent to 2w mod 4.
Coord binary_candidate(Coord a, Coord w) { return a - 1 + floor_mod(2 * w - (a - 1), 4); }

Point binary_candidate(const Point& a, const Point& w) {
  Point x(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) x[i] = binary_candidate(a[i], w[i]);
  return x;
}

bool in_lambda2(Coord d1, Coord d2) {
  // a(3,2) + b(0,4)
  if (floor_mod(d1, 3) != 0) return false;
  return floor_mod(d2 - 2 * (d1 / 3), 4) == 0;
}

ClassTable build_class_table() {
  ClassTable t;
  t.classes = {{
      {{{0, 0}, {0, 3}, {2, 2}, {2, 1}}},
      {{{1, 2}, {1, 1}, {0, 1}, {0, 2}}},
      {{{2, 0}, {1, 3}, {2, 3}, {1, 0}}},
  }};
  // Rows follow the class listing above; columns are target classes [(0,0)], [(1,2)], [(2,0)].
  const std::array<std::array<std::array<Pair, 3>, 4>, 3> rows = {{
      {{
          {{{0, 0}, {1, 2}, {2, 0}}},
          {{{0, 4}, {1, 2}, {2, 4}}},
          {{{3, 2}, {1, 2}, {2, 4}}},
          {{{3, 2}, {1, 2}, {2, 0}}},
      }},
      {{
          {{{3, 2}, {1, 2}, {2, 4}}},
          {{{3, 2}, {1, 2}, {2, 0}}},
          {{{0, 0}, {1, 2}, {-1, 2}}},
          {{{0, 4}, {1, 2}, {-1, 2}}},
      }},
      {{
          {{{3, 2}, {4, 0}, {2, 0}}},
          {{{0, 4}, {1, 2}, {2, 4}}},
          {{{3, 2}, {4, 4}, {2, 4}}},
          {{{0, 0}, {1, 2}, {2, 0}}},
      }},
  }};
  for (int c = 0; c < 3; ++c)
    for (int k = 0; k < 4; ++k) {
      const auto [x1, x2] = t.classes[c][k];
      t.adjust[x1][x2] = rows[c][k];
    }

  // Validate the transcription against the defining covering properties.
  std::array<int, 12> seen{};
  for (const auto& cls : t.classes)
    for (const auto& [x1, x2] : cls) {
      if (x1 < 0 || x1 > 2 || x2 < 0 || x2 > 3) throw std::logic_error("class table: pair out of range");
      ++seen[x1 * 4 + x2];
    }
  if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; }))
    throw std::logic_error("class table: classes do not partition Z3 x Z4");
  for (int c = 0; c < 3; ++c)
    for (const auto& [x1, x2] : t.classes[c])
      for (int target = 0; target < 3; ++target) {
        const auto [v1, v2] = t.adjust[x1][x2][target];
        const Coord d1 = v1 - x1, d2 = v2 - x2;
        const auto exceptional = [](Coord d) { return d == -1 || d == 2; };
        const auto inside = [](Coord d) { return d >= -1 && d <= 2; };
        const bool same_class = target == c;
        const bool ok = same_class ? (d1 == 0 || d1 == 1) && (d2 == 0 || d2 == 1)
                                   : inside(d1) && inside(d2) && !(exceptional(d1) && exceptional(d2));
        const auto rep = t.classes[target][0];
        if (!ok || !in_lambda2(v1 - rep[0], v2 - rep[1]))
          throw std::logic_error("class table: bad adjustment for (" + std::to_string(x1) + "," + std::to_string(x2) +
                                 ") toward class " + std::to_string(target));
      }
  return t;
}

}  // namespace

int ClassTable::class_of(Coord x1, Coord x2) const {
  for (int c = 0; c < 3; ++c)
    for (const auto& [y1, y2] : classes[c])
      if (y1 == x1 && y2 == x2) return c;
  throw InvalidArgument("pair (" + std::to_string(x1) + "," + std::to_string(x2) + ") outside Z3 x Z4");
}

const ClassTable& class_table() {
  static const ClassTable table = build_class_table();
  return table;
}

PeriodicTiling from_binary_perfect(const BlockCode& code) {
  require_perfect(code, 2);
  std::vector<Point> words;
  words.reserve(code.size());
  for (const auto& w : code.codewords()) words.push_back(Coord{2} * w);
  return PeriodicTiling(code.length(), 4, std::move(words));
}

BlockCode to_binary_perfect(const PeriodicTiling& tiling) {
  if (tiling.period() != 4) throw PreconditionError("binary recovery needs a period-4 tiling");
  if (!verify(tiling).is_tiling) throw PreconditionError("input is not a tiling");
  const auto& cw = tiling.codewords();
  const bool all_even = std::all_of(cw.begin(), cw.end(), [](const Point& x) {
    return std::all_of(x.begin(), x.end(), [](Coord v) { return v % 2 == 0; });
  });
  std::vector<Point> words;
  for (const auto& x : cw) {
    Point w(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) w[i] = all_even ? x[i] / 2 : (x[i] >= 2 ? 1 : 0);
    words.push_back(std::move(w));
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  BlockCode code(2, tiling.dimension(), std::move(words));
  const auto verdict = is_perfect(code);
  if (!verdict) throw PreconditionError("recovered code is not perfect: " + verdict.reason);
  return code;
}

PeriodicTiling punctured_construction(const BlockCode& code) {
  require_perfect(code, 2);
  if (code.length() < 3) throw PreconditionError("punctured construction needs length >= 3");
  const std::size_t n = code.length();
  std::vector<Point> words;
  words.reserve(code.size());
  for (const auto& w : code.codewords()) {
    std::size_t weight = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) weight += w[i] != 0;
    Point x = Coord{2} * w;
    if (weight % 2 == 1) x[n - 1] += 1;
    words.push_back(std::move(x));
  }
  return PeriodicTiling(n, 4, std::move(words));
}

Point locate_tile_binary(const Point& a, const BlockCode& code) {
  if (code.q() != 2) throw PreconditionError("binary locator needs a binary code");
  if (a.size() != code.length()) throw DimensionMismatch(a.size(), code.length());
  // X_i is forced by w_i; it is non-exceptional exactly when w_i matches this target bit.
  Point target(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Coord r = floor_mod(a[i], 4);
    target[i] = (r == 1 || r == 2) ? 1 : 0;
  }
  if (auto w = decode_within_1(code, target)) return binary_candidate(a, *w);
  for (const auto& w : code.codewords()) {
    Point x = binary_candidate(a, w);
    if (covers(x, a)) return x;
  }
  throw PreconditionError("no codeword covers " + a.to_string() + "; the code does not induce a tiling");
}

Pair phi(Coord symbol) {
  if (symbol < 0 || symbol > 2) throw InvalidArgument("ternary symbol out of range: " + std::to_string(symbol));
  return class_table().classes[symbol][0];
}

Point Phi(const Point& word) {
  Point out(2 * word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto [u, v] = phi(word[i]);
    out[2 * i] = u;
    out[2 * i + 1] = v;
  }
  return out;
}

Coord psi(Coord x1, Coord x2) { return class_table().class_of(x1, x2); }

Point Psi(const Point& reps) {
  if (reps.size() % 2 != 0) throw InvalidArgument("Psi needs an even-length point");
  Point out(reps.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = psi(reps[2 * i], reps[2 * i + 1]);
  return out;
}

Representative reduce_to_representative(const Point& a) {
  if (a.size() % 2 != 0) throw InvalidArgument("representatives are defined for even dimension");
  Representative r{Point(a.size()), Point(a.size())};
  for (std::size_t i = 0; i < a.size(); i += 2) {
    const Coord k = floor_div(a[i], 3);  // subtract k (3,2)
    const Coord b1 = a[i] - 3 * k;
    const Coord rest = a[i + 1] - 2 * k;
    const Coord b2 = floor_mod(rest, 4);  // then multiples of (0,4)
    r.b[i] = b1;
    r.b[i + 1] = b2;
    r.y[i] = b1 - a[i];
    r.y[i + 1] = b2 - a[i + 1];
  }
  return r;
}

PeriodicTiling from_ternary_perfect(const BlockCode& code) {
  require_perfect(code, 3);
  const std::size_t nu = code.length();
  const auto lattice_points = window(lambda_n(nu), 12);
  std::vector<Point> words;
  words.reserve(code.size() * lattice_points.size());
  for (const auto& w : code.codewords()) {
    const Point shift = Phi(w);
    for (const auto& lam : lattice_points) words.push_back((shift + lam).mod(12));
  }
  PeriodicTiling tiling(2 * nu, 12, std::move(words));
  if (tiling.has_duplicates()) throw std::logic_error("ternary construction produced colliding codewords");
  return tiling;
}

Point locate_tile_ternary(const Point& a, const BlockCode& code) {
  if (code.q() != 3) throw PreconditionError("ternary locator needs a ternary code");
  if (a.size() != 2 * code.length()) throw DimensionMismatch(a.size(), 2 * code.length());
  const auto rep = reduce_to_representative(a);
  const Point alpha = Psi(rep.b);
  const auto w = decode_within_1(code, alpha);
  if (!w) throw PreconditionError("no codeword within distance 1 of " + alpha.to_string() + "; the code is not perfect");
  const auto& table = class_table();
  Point x(a.size());
  for (std::size_t i = 0; i < code.length(); ++i) {
    const auto [v1, v2] = table.adjust[rep.b[2 * i]][rep.b[2 * i + 1]][(*w)[i]];
    x[2 * i] = v1;
    x[2 * i + 1] = v2;
  }
  return x - rep.y;
}

}  // namespace upsilon
