#include "upsilon/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "upsilon/error.hpp"

namespace upsilon {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Exhausted:
      return "exhausted";
    case SearchStatus::SolutionLimit:
      return "solution-limit";
    case SearchStatus::BudgetExhausted:
      return "inconclusive (node budget exhausted)";
    case SearchStatus::RejectedByDivisibility:
      return "rejected-by-divisibility";
  }
  return "unknown";
}

bool divisibility_precheck(std::size_t n, Coord p) {
  using boost::multiprecision::cpp_int;
  if (n == 0 || p < 1) throw InvalidArgument("divisibility precheck needs n >= 1 and p >= 1");
  const cpp_int shape = (cpp_int(1) << n) * (n + 1);
  return boost::multiprecision::pow(cpp_int(p), static_cast<unsigned>(n)) % shape == 0;
}

namespace {

class Backtracker {
 public:
  explicit Backtracker(const SearchConfig& cfg)
      : cfg_(cfg), w_(cfg.n, cfg.p), covered_(w_.cell_count(), 0) {
    for (const auto& d : upsilon_offsets(cfg.n).offsets) offsets_.push_back(d);
  }

  SearchResult run() {
    SearchResult res;
    const auto start = std::chrono::steady_clock::now();
    if (cfg_.symmetry_breaking) place(0, tile_cells(Point(cfg_.n)));
    status_ = SearchStatus::Exhausted;
    dfs(res);
    res.status = status_;
    res.nodes = nodes_;
    res.backtracks = backtracks_;
    std::sort(res.solutions.begin(), res.solutions.end(),
              [](const PeriodicTiling& a, const PeriodicTiling& b) { return a.codewords() < b.codewords(); });
    res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
  }

 private:
  struct Frame {
    CellIndex cell;
    std::size_t next = 0;  // next offset to try
    bool placed = false;
    std::vector<CellIndex> tile;
  };

  std::vector<CellIndex> tile_cells(const Point& x) const {
    std::vector<CellIndex> cells;
    cells.reserve(offsets_.size());
    for (const auto& d : offsets_) cells.push_back(w_.index_of(x - d));
    return cells;
  }

  void place(CellIndex x, const std::vector<CellIndex>& cells) {
    for (auto c : cells) covered_[c] = 1;
    placed_.push_back(x);
  }

  void unplace(const std::vector<CellIndex>& cells) {
    for (auto c : cells) covered_[c] = 0;
    placed_.pop_back();
  }

  std::optional<CellIndex> first_uncovered(CellIndex from) const {
    for (CellIndex c = from; c < covered_.size(); ++c)
      if (!covered_[c]) return c;
    return std::nullopt;
  }

  void record(SearchResult& res) {
    std::vector<Point> words;
    words.reserve(placed_.size());
    for (auto x : placed_) words.push_back(w_.point_of(x));
    res.solutions.emplace_back(cfg_.n, cfg_.p, std::move(words));
    if (cfg_.max_solutions && res.solutions.size() >= cfg_.max_solutions) status_ = SearchStatus::SolutionLimit;
  }

  // Iterative so that long thin searches (n = 1, large p) do not exhaust the call stack.
  void dfs(SearchResult& res) {
    std::vector<Frame> stack;
    auto open = [&](CellIndex from) {
      if (auto c = first_uncovered(from)) {
        stack.push_back(Frame{*c, 0, false, {}});
        return true;
      }
      record(res);
      return false;
    };
    if (!open(0)) return;
    while (!stack.empty() && status_ == SearchStatus::Exhausted) {
      Frame& f = stack.back();
      if (f.placed) {
        unplace(f.tile);
        f.placed = false;
        ++backtracks_;
      }
      if (f.next == offsets_.size()) {
        stack.pop_back();
        continue;
      }
      const Point cell = w_.point_of(f.cell);
      const Point x = (cell + offsets_[f.next++]).mod(cfg_.p);
      if (++nodes_ > cfg_.node_budget) {
        status_ = SearchStatus::BudgetExhausted;
        break;
      }
      auto cells = tile_cells(x);
      if (std::any_of(cells.begin(), cells.end(), [&](CellIndex c) { return covered_[c] != 0; })) continue;
      place(w_.index_of(x), cells);
      f.tile = std::move(cells);
      f.placed = true;
      open(f.cell + 1);
    }
  }

  SearchConfig cfg_;
  Window w_;
  std::vector<Point> offsets_;
  std::vector<std::uint8_t> covered_;
  std::vector<CellIndex> placed_;
  std::uint64_t nodes_ = 0;
  std::uint64_t backtracks_ = 0;
  SearchStatus status_ = SearchStatus::Exhausted;
};

}  // namespace

SearchResult search_tilings(const SearchConfig& config) {
  if (config.p < 4) throw InvalidArgument("search period must be >= 4");
  const CellIndex cells = checked_window_size(config.n, config.p);
  if (config.n == 0) throw InvalidArgument("dimension must be >= 1");
  if (cells > kSearchCellLimit)
    throw BudgetExceeded("search window " + std::to_string(cells) +
                         " cells exceeds 10^6; use a construction plus verify for this size");
  if (!divisibility_precheck(config.n, config.p)) {
    SearchResult res;
    res.status = SearchStatus::RejectedByDivisibility;
    NonexistenceCertificate cert;
    cert.n = config.n;
    cert.forced_period = static_cast<int>(config.p);
    cert.shape_size = std::to_string(upsilon_size(config.n));
    cert.window_size = std::to_string(cells);
    cert.divides = false;
    cert.conclusion = "no tiling of Z_" + std::to_string(config.p) + "^" + std::to_string(config.n) + ": " +
                      cert.shape_size + " does not divide " + cert.window_size;
    res.certificate = cert;
    return res;
  }
  return Backtracker(config).run();
}

PeriodicTiling canonical_form(const PeriodicTiling& tiling) {
  const std::size_t n = tiling.dimension();
  const Coord p = tiling.period();
  if (n > 6) throw InvalidArgument("canonical form is limited to n <= 6");
  std::vector<std::size_t> sigma(n);
  std::optional<std::vector<Point>> best;
  std::vector<Point> cand(tiling.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    for (std::uint32_t flips = 0; flips < (1u << n); ++flips) {
      for (const auto& origin : tiling.codewords()) {
        for (std::size_t k = 0; k < tiling.size(); ++k) {
          const Point& x = tiling.codewords()[k];
          Point y(n);
          for (std::size_t i = 0; i < n; ++i) {
            const Coord v = x[sigma[i]] - origin[sigma[i]];
            y[i] = floor_mod((flips >> i) & 1 ? -v : v, p);
          }
          cand[k] = std::move(y);
        }
        std::sort(cand.begin(), cand.end());
        if (!best || cand < *best) best = cand;
      }
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return PeriodicTiling(n, p, best.value_or(std::vector<Point>{}));
}

}  // namespace upsilon
