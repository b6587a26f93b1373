#include "upsilon/tiling.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <sstream>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "text_format.hpp"
#include "upsilon/error.hpp"

namespace upsilon {

namespace {

Coord checked_period(Coord p) {
  if (p < 4) throw InvalidArgument("tiling period must be >= 4, got " + std::to_string(p));
  return p;
}

}  // namespace

PeriodicTiling::PeriodicTiling(std::size_t n, Coord p, std::vector<Point> codewords)
    : window_(n, checked_period(p)),
      codewords_(std::move(codewords)) {
  cells_.reserve(codewords_.size());
  for (const auto& x : codewords_) {
    if (x.size() != n) throw DimensionMismatch(x.size(), n);
    for (auto v : x)
      if (v < 0 || v >= p)
        throw InvalidArgument("codeword entry " + std::to_string(v) + " outside [0," + std::to_string(p) + ")");
    cells_.push_back(window_.index_of(x));
  }
  std::sort(codewords_.begin(), codewords_.end());
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool PeriodicTiling::contains(const Point& x) const {
  return std::binary_search(cells_.begin(), cells_.end(), window_.index_of(x));
}

namespace {

using Counter = std::uint8_t;

struct ShardResult {
  std::uint64_t multiply = 0;
  std::uint64_t uncovered = 0;
  std::optional<CellIndex> first_bad;  // local index
};

// Marks all cells of the shard whose last coordinate equals `slice`.
class ShardMarker {
 public:
  ShardMarker(const Window& w, const std::vector<Point>& codewords)
      : w_(w), codewords_(codewords), m_(w.dimension() - 1), sums_(std::size_t{1} << m_) {}

  ShardResult run(Coord slice, std::vector<Counter>& counts) {
    std::fill(counts.begin(), counts.end(), Counter{0});
    const Coord p = w_.period();
    for (const auto& x : codewords_) {
      // last-coordinate offset forced by the slice
      const Coord r = floor_mod(x[m_] - slice, p);
      Coord last;
      if (r <= 2)
        last = r;
      else if (r == p - 1)
        last = -1;
      else
        continue;
      mark(x, last == -1 || last == 2, counts);
    }
    ShardResult res;
    for (CellIndex i = 0; i < counts.size(); ++i) {
      const Counter c = counts[i];
      if (c == 1) continue;
      if (!res.first_bad) res.first_bad = i;
      (c == 0 ? res.uncovered : res.multiply)++;
    }
    return res;
  }

 private:
  std::int64_t term(const Point& x, std::size_t i, Coord d) const {
    return floor_mod(x[i] - d, w_.period()) * static_cast<std::int64_t>(w_.stride(i));
  }

  static void bump(Counter& c) {
    if (c != 255) ++c;
  }

  void mark(const Point& x, bool last_exceptional, std::vector<Counter>& counts) {
    const std::size_t core = sums_.size();
    std::int64_t base = 0;
    for (std::size_t i = 0; i < m_; ++i) base += term(x, i, 0);
    sums_[0] = base;
    for (std::size_t mask = 1; mask < core; ++mask) {
      const auto b = static_cast<std::size_t>(std::countr_zero(mask));
      sums_[mask] = sums_[mask & (mask - 1)] + term(x, b, 1) - term(x, b, 0);
    }
    for (std::size_t mask = 0; mask < core; ++mask) bump(counts[static_cast<std::size_t>(sums_[mask])]);
    if (last_exceptional) return;
    for (std::size_t i = 0; i < m_; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      for (Coord e : {Coord{-1}, Coord{2}}) {
        const std::int64_t delta = term(x, i, e) - term(x, i, 0);
        for (std::size_t mask = 0; mask < core; ++mask)
          if (!(mask & bit)) bump(counts[static_cast<std::size_t>(sums_[mask] + delta)]);
      }
    }
  }

  const Window& w_;
  const std::vector<Point>& codewords_;
  std::size_t m_;
  std::vector<std::int64_t> sums_;
};

}  // namespace

std::optional<Coord> min_torus_cross_distance(const PeriodicTiling& tiling) {
  const auto& cw = tiling.codewords();
  if (cw.size() < 2) return std::nullopt;
  Coord best = std::numeric_limits<Coord>::max();
  for (std::size_t i = 0; i < cw.size(); ++i)
    for (std::size_t j = i + 1; j < cw.size(); ++j)
      best = std::min(best, torus_cross_distance(cw[i], cw[j], tiling.period()));
  return best;
}

VerificationReport verify(const PeriodicTiling& tiling, const VerifyOptions& options) {
  const Window& w = tiling.window();
  const std::size_t n = w.dimension();
  const Coord p = w.period();
  if (w.cell_count() > options.cell_budget)
    throw BudgetExceeded("window of " + std::to_string(w.cell_count()) + " cells exceeds budget " +
                         std::to_string(options.cell_budget));
  if (n - 1 > 40) throw BudgetExceeded("dimension too large for the marking kernel");

  const CellIndex shard_cells = w.cell_count() / static_cast<CellIndex>(p);
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t by_memory = std::max<std::uint64_t>(1, options.memory_budget / std::max<CellIndex>(1, shard_cells));
  threads = static_cast<unsigned>(std::min<std::uint64_t>({threads, by_memory, static_cast<std::uint64_t>(p)}));

  std::vector<ShardResult> results(static_cast<std::size_t>(p));
  std::atomic<Coord> next{0};
  const auto worker = [&] {
    std::vector<Counter> counts(shard_cells);
    ShardMarker marker(w, tiling.codewords());
    for (Coord s = next++; s < p; s = next++) results[static_cast<std::size_t>(s)] = marker.run(s, counts);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  VerificationReport rep;
  rep.cells_total = w.cell_count();
  rep.codewords = tiling.size();
  rep.shape_size = upsilon_size(n);
  for (std::size_t s = 0; s < results.size(); ++s) {
    rep.multiply_covered += results[s].multiply;
    rep.uncovered += results[s].uncovered;
    if (!rep.first_witness && results[s].first_bad) {
      CoverageWitness wit;
      wit.cell = w.point_of(static_cast<CellIndex>(s) * shard_cells + *results[s].first_bad);
      for (const auto& x : tiling.codewords())
        if (covers_mod(x, wit.cell, p)) wit.covering.push_back(x);
      rep.first_witness = std::move(wit);
    }
  }
  rep.is_tiling = rep.multiply_covered == 0 && rep.uncovered == 0;
  if (options.min_distance && tiling.size() >= 2) {
    const auto k = static_cast<std::uint64_t>(tiling.size());
    if (k <= options.pair_budget / k) rep.min_cross_distance = min_torus_cross_distance(tiling);
  }
  return rep;
}

PeriodicTiling normalize(const PeriodicTiling& tiling, const Point& x0) {
  if (x0.size() != tiling.dimension()) throw DimensionMismatch(x0.size(), tiling.dimension());
  if (!tiling.contains(x0)) throw PreconditionError(x0.to_string() + " is not a codeword");
  std::vector<Point> out;
  out.reserve(tiling.size());
  for (const auto& x : tiling.codewords()) out.push_back((x - x0).mod(tiling.period()));
  return PeriodicTiling(tiling.dimension(), tiling.period(), std::move(out));
}

PeriodicTiling permute(const PeriodicTiling& tiling, const std::vector<std::size_t>& sigma) {
  const std::size_t n = tiling.dimension();
  if (sigma.size() != n) throw DimensionMismatch(sigma.size(), n);
  std::vector<bool> seen(n, false);
  for (auto s : sigma) {
    if (s >= n || seen[s]) throw InvalidArgument("invalid permutation");
    seen[s] = true;
  }
  std::vector<Point> out;
  out.reserve(tiling.size());
  for (const auto& x : tiling.codewords()) {
    Point y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = x[sigma[i]];
    out.push_back(std::move(y));
  }
  return PeriodicTiling(n, tiling.period(), std::move(out));
}

PeriodicTiling reflect(const PeriodicTiling& tiling, const Point& signs) {
  const std::size_t n = tiling.dimension();
  if (signs.size() != n) throw DimensionMismatch(signs.size(), n);
  for (auto a : signs)
    if (a != 1 && a != -1) throw InvalidArgument("reflection entries must be +1 or -1");
  std::vector<Point> out;
  out.reserve(tiling.size());
  for (const auto& x : tiling.codewords()) {
    Point y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = floor_mod(signs[i] * x[i], tiling.period());
    out.push_back(std::move(y));
  }
  return PeriodicTiling(n, tiling.period(), std::move(out));
}

bool is_periodic_with(const PeriodicTiling& tiling, Coord p2) {
  const Coord p = tiling.period();
  if (p2 < 1 || p % p2 != 0)
    throw InvalidArgument(std::to_string(p2) + " does not divide the period " + std::to_string(p));
  for (const auto& x : tiling.codewords()) {
    for (std::size_t i = 0; i < tiling.dimension(); ++i) {
      Point y(x);
      y[i] += p2;
      if (!tiling.contains(y)) return false;
    }
  }
  return true;
}

Admissibility admissible_dimension(std::size_t n) {
  if (n == 0) throw InvalidArgument("dimension must be >= 1");
  const std::uint64_t m = n + 1;
  for (int base : {2, 3}) {
    std::uint64_t v = 1;
    int t = 0;
    while (v < m) {
      v *= static_cast<std::uint64_t>(base);
      ++t;
    }
    if (v == m) return {true, base, t};
  }
  return {};
}

NonexistenceCertificate nonexistence_certificate(std::size_t n) {
  using boost::multiprecision::cpp_int;
  if (n == 0) throw InvalidArgument("dimension must be >= 1");
  if (n > 4096) throw InvalidArgument("dimension too large for a certificate");
  NonexistenceCertificate cert;
  cert.n = n;
  cert.forced_period = n % 2 == 1 ? 4 : 12;
  const cpp_int shape = (cpp_int(1) << n) * (n + 1);
  const cpp_int win = boost::multiprecision::pow(cpp_int(cert.forced_period), static_cast<unsigned>(n));
  cert.shape_size = shape.str();
  cert.window_size = win.str();
  cert.divides = win % shape == 0;
  const std::string rel = cert.shape_size + (cert.divides ? " divides " : " does not divide ") + cert.window_size;
  cert.conclusion = cert.divides
                        ? "inconclusive: forced period " + std::to_string(cert.forced_period) + ", " + rel
                        : "no tiling: forced period " + std::to_string(cert.forced_period) + ", " + rel;
  return cert;
}

void write_tiling(std::ostream& os, const PeriodicTiling& tiling) {
  os << "TILING v1\n"
     << "n " << tiling.dimension() << "\n"
     << "p " << tiling.period() << "\n"
     << "count " << tiling.size() << "\n";
  std::string line;
  for (const auto& x : tiling.codewords()) {
    line.clear();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) line += ' ';
      line += std::to_string(x[i]);
    }
    line += '\n';
    os << line;
  }
}

PeriodicTiling read_tiling(std::istream& is) {
  detail::LineReader in(is);
  in.expect_exact("TILING v1");
  const auto n = in.keyed("n");
  const auto p = in.keyed("p");
  const auto count = in.keyed("count");
  if (n < 1 || n > 64) in.fail("n out of range");
  if (p < 4) in.fail("p must be >= 4");
  if (count < 0) in.fail("negative count");
  std::vector<Point> words;
  words.reserve(static_cast<std::size_t>(count));
  for (long long k = 0; k < count; ++k) {
    Point x(in.integers(static_cast<std::size_t>(n)));
    for (auto v : x)
      if (v < 0 || v >= p) in.fail("entry outside [0,p)");
    words.push_back(std::move(x));
  }
  in.expect_end();
  return PeriodicTiling(static_cast<std::size_t>(n), p, std::move(words));
}

std::string tiling_to_string(const PeriodicTiling& tiling) {
  std::ostringstream os;
  write_tiling(os, tiling);
  return os.str();
}

PeriodicTiling load_tiling(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidArgument("cannot open tiling file '" + path + "'");
  return read_tiling(f);
}

void save_tiling(const std::string& path, const PeriodicTiling& tiling) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write tiling file '" + path + "'");
  write_tiling(f, tiling);
}

}  // namespace upsilon
