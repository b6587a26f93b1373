#include "upsilon/audit.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "upsilon/error.hpp"

namespace upsilon {

bool AuditReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

const AuditCheck* AuditReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::uint64_t spencer_bound(std::size_t n) {
  // floor((n/3) * m) == floor(n*m / 3) for integer m
  const std::uint64_t m = n >= 1 ? (n - 1) / 2 : 0;
  return (n * m) / 3;
}

namespace {

std::string pair_name(std::size_t r, std::size_t s) {
  return "3e" + std::to_string(r + 1) + "+2e" + std::to_string(s + 1);
}

class Auditor {
 public:
  explicit Auditor(const PeriodicTiling& t) : t_(t), n_(t.dimension()), p_(t.period()) {}

  AuditReport run() {
    rep_.n = n_;
    rep_.p = p_;
    extract_f1();
    check_f1_structure();
    check_companions();
    check_cover_2e();
    check_low_weight_forms();
    check_pairing_1222();
    extract_f2_and_partition();
    check_forced_period();
    return std::move(rep_);
  }

 private:
  Point e(std::size_t r, Coord k = 1) const { return Point::unit(n_, r, k); }
  bool has(const Point& x) const { return t_.contains(x); }

  void add(std::string name, bool ok, std::string detail) {
    rep_.checks.push_back({std::move(name), ok, std::move(detail)});
  }

  void extract_f1() {
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t s = 0; s < n_; ++s)
        if (r != s && has(e(r, 3) + e(s, 2))) f1_.emplace_back(r, s);
    for (auto [r, s] : f1_) rep_.f1.emplace_back(r + 1, s + 1);
  }

  void check_f1_structure() {
    bool disjoint = true;
    std::string clash;
    for (std::size_t a = 0; a < f1_.size(); ++a)
      for (std::size_t b = a + 1; b < f1_.size(); ++b) {
        const auto [r1, s1] = f1_[a];
        const auto [r2, s2] = f1_[b];
        if (r1 == r2 || r1 == s2 || s1 == r2 || s1 == s2) {
          disjoint = false;
          clash = pair_name(r1, s1) + " vs " + pair_name(r2, s2);
        }
      }
    add("f1_disjoint_supports", disjoint, disjoint ? std::to_string(f1_.size()) + " codewords of form 3e_r+2e_s" : clash);

    if (n_ % 2 == 0) {
      add("f1_count_half_n", f1_.size() == n_ / 2,
          "|F1| = " + std::to_string(f1_.size()) + ", n/2 = " + std::to_string(n_ / 2));
      std::set<std::size_t> support;
      for (auto [r, s] : f1_) support.insert({r, s});
      add("f1_covers_all_coordinates", support.size() == n_,
          std::to_string(support.size()) + " of " + std::to_string(n_) + " coordinates");
    } else {
      add("f1_empty_for_odd_n", f1_.empty(), "|F1| = " + std::to_string(f1_.size()));
    }
  }

  void check_companions() {
    bool four = true, minus_four = true, minus_32 = true, chain = true;
    std::string miss;
    for (auto [r, s] : f1_) {
      const auto tag = pair_name(r, s);
      if (!has(e(s, 4))) four = false, miss += " 4e" + std::to_string(s + 1);
      if (!has(e(s, -4))) minus_four = false, miss += " -4e" + std::to_string(s + 1);
      if (!has(-(e(r, 3) + e(s, 2)))) minus_32 = false, miss += " -(" + tag + ")";
      if (p_ == 12 && (!has(e(r, 6) + e(s, 4)) || !has(e(r, 9) + e(s, 6)))) chain = false, miss += " chain(" + tag + ")";
    }
    const std::string none = f1_.empty() ? "vacuous (F1 empty)" : "all present";
    add("companion_4e_s", four, four ? none : "missing:" + miss);
    add("companion_minus_4e_s", minus_four, minus_four ? none : "missing:" + miss);
    add("companion_minus_3e_r_2e_s", minus_32, minus_32 ? none : "missing:" + miss);
    if (p_ == 12) add("chain_6e_r_4e_s_9e_r_6e_s", chain, chain ? none : "missing:" + miss);
  }

  // The codeword covering 2e_r is 4e_r or 3e_r + 2e_s.
  void check_cover_2e() {
    bool ok = true;
    std::string bad;
    for (std::size_t r = 0; r < n_; ++r) {
      const Point target = e(r, 2);
      std::vector<Point> coverers;
      for (const auto& x : t_.codewords())
        if (covers_mod(x, target, p_)) coverers.push_back(x);
      bool good = coverers.size() == 1;
      if (good) {
        const Point& x = coverers.front();
        bool match = x == e(r, 4).mod(p_);
        for (std::size_t s = 0; s < n_ && !match; ++s)
          if (s != r) match = x == (e(r, 3) + e(s, 2)).mod(p_);
        good = match;
      }
      if (!good) {
        ok = false;
        bad += " 2e" + std::to_string(r + 1);
      }
    }
    add("cover_2e_r", ok, ok ? "every 2e_r covered by 4e_r or some 3e_r+2e_s" : "violations at" + bad);
  }

  // Codewords in {0,1,2,3}^n with single 2 and single 3 are 3e_r+2e_s;
  // codewords in {0,1,4}^n with single 4 are 4e_r.
  void check_low_weight_forms() {
    if (n_ > 20) {
      add("d1_codewords_are_3e_r_2e_s", true, "skipped (n > 20)");
      add("d2_codewords_are_4e_r", true, "skipped (n > 20)");
      return;
    }
    bool d1_ok = true, d2_ok = true;
    std::string d1_bad, d2_bad;
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t s = 0; s < n_; ++s) {
        if (s == r) continue;
        for_each_binary_fill({r, s}, [&](Point x) {
          x[r] = 3;
          x[s] = 2;
          if (has(x) && x != e(r, 3) + e(s, 2)) d1_ok = false, d1_bad = x.to_string();
        });
      }
      for_each_binary_fill({r}, [&](Point x) {
        x[r] = 4;
        if (has(x) && x != e(r, 4)) d2_ok = false, d2_bad = x.to_string();
      });
    }
    add("d1_codewords_are_3e_r_2e_s", d1_ok, d1_ok ? "ok" : "unexpected codeword " + d1_bad);
    add("d2_codewords_are_4e_r", d2_ok, d2_ok ? "ok" : "unexpected codeword " + d2_bad);
  }

  // For 3e_r+2e_s in T and each k outside {r,s} there is exactly one j with a codeword
  // y_r = 1, y_s = y_k = y_j = 2, other entries in {0,1}.
  void check_pairing_1222() {
    if (f1_.empty() || n_ > 20) {
      add("d3_pairing_for_f1", true, f1_.empty() ? "vacuous (F1 empty)" : "skipped (n > 20)");
      return;
    }
    bool ok = true;
    std::string bad;
    for (auto [r, s] : f1_) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (k == r || k == s) continue;
        std::size_t partners = 0;
        for (std::size_t j = 0; j < n_; ++j) {
          if (j == r || j == s || j == k) continue;
          bool found = false;
          for_each_binary_fill({r, s, k, j}, [&](Point y) {
            y[r] = 1;
            y[s] = y[k] = y[j] = 2;
            found = found || has(y);
          });
          partners += found;
        }
        if (partners != 1) ok = false, bad += " (" + pair_name(r, s) + ", k=" + std::to_string(k + 1) + ")";
      }
    }
    add("d3_pairing_for_f1", ok, ok ? "unique partner for every k" : "violations:" + bad);
  }

  void extract_f2_and_partition() {
    std::set<std::array<std::size_t, 3>> f2;
    for (const auto& x : t_.codewords()) {
      std::vector<std::size_t> twos;
      bool rest_binary = true;
      for (std::size_t i = 0; i < n_; ++i) {
        if (x[i] == 2)
          twos.push_back(i);
        else if (x[i] != 0 && x[i] != 1)
          rest_binary = false;
      }
      if (rest_binary && twos.size() == 3) f2.insert({twos[0], twos[1], twos[2]});
    }
    for (const auto& b : f2) rep_.f2.push_back({b[0] + 1, b[1] + 1, b[2] + 1});

    std::vector<std::vector<int>> hits(n_, std::vector<int>(n_, 0));
    for (auto [r, s] : f1_) {
      ++hits[std::min(r, s)][std::max(r, s)];
    }
    for (const auto& b : f2) {
      ++hits[b[0]][b[1]];
      ++hits[b[0]][b[2]];
      ++hits[b[1]][b[2]];
    }
    bool ok = true;
    std::string bad;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (hits[i][j] != 1) {
          ok = false;
          bad += " {" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}x" + std::to_string(hits[i][j]);
        }
    add("pair_partition_f1_f2", ok,
        ok ? "every pair in exactly one of " + std::to_string(f1_.size()) + " F1 + " + std::to_string(f2.size()) + " F2 blocks"
           : "violations:" + bad);

    rep_.spencer_bound = spencer_bound(n_);
    rep_.spencer_applies = n_ % 6 != 5;
    const bool within = !rep_.spencer_applies || f2.size() <= rep_.spencer_bound;
    add("spencer_bound", within,
        "|F2| = " + std::to_string(f2.size()) + ", bound = " + std::to_string(rep_.spencer_bound) +
            (rep_.spencer_applies ? "" : " (not applicable, n = 5 mod 6)"));
  }

  void check_forced_period() {
    const Coord forced = n_ % 2 == 1 ? 4 : 12;
    if (p_ % forced != 0) {
      add("forced_period", false, "period " + std::to_string(p_) + " is not a multiple of forced period " + std::to_string(forced));
      return;
    }
    const bool ok = is_periodic_with(t_, forced);
    add("forced_period", ok, "periodic with " + std::to_string(forced) + ": " + (ok ? "yes" : "no"));
  }

  // Calls fn with every point that is 0/1 outside `fixed` (fixed coordinates left at 0).
  template <typename Fn>
  void for_each_binary_fill(std::initializer_list<std::size_t> fixed, Fn&& fn) const {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n_; ++i)
      if (std::find(fixed.begin(), fixed.end(), i) == fixed.end()) free.push_back(i);
    const std::uint64_t count = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      Point x(n_);
      for (std::size_t b = 0; b < free.size(); ++b) x[free[b]] = (mask >> b) & 1;
      fn(std::move(x));
    }
  }

  const PeriodicTiling& t_;
  std::size_t n_;
  Coord p_;
  std::vector<std::pair<std::size_t, std::size_t>> f1_;
  AuditReport rep_;
};

}  // namespace

AuditReport structural_audit(const PeriodicTiling& tiling, const VerificationReport& report) {
  if (!report.is_tiling || report.codewords != tiling.size() || report.cells_total != tiling.window().cell_count())
    throw PreconditionError("structural audit requires a verified tiling");
  if (!tiling.contains(Point(tiling.dimension())))
    throw PreconditionError("structural audit requires the origin as a codeword (normalize first)");
  return Auditor(tiling).run();
}

}  // namespace upsilon
