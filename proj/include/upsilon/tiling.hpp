#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "upsilon/geometry.hpp"

namespace upsilon {

/// A candidate periodic tiling T = codewords + pZ^n, stored by its window residues.
///
/// The codeword list is kept as given (sorted) so that a candidate with a
/// repeated codeword can still be loaded and rejected by verify(); every
/// verified tiling has distinct codewords.
class PeriodicTiling {
 public:
  PeriodicTiling(std::size_t n, Coord p, std::vector<Point> codewords);

  std::size_t dimension() const { return window_.dimension(); }
  Coord period() const { return window_.period(); }
  std::size_t size() const { return codewords_.size(); }
  const std::vector<Point>& codewords() const { return codewords_; }
  const Window& window() const { return window_; }
  /// Sorted, deduplicated window indices of the codewords.
  const std::vector<CellIndex>& cell_indices() const { return cells_; }

  bool has_duplicates() const { return cells_.size() != codewords_.size(); }
  /// Membership of an arbitrary point of Z^n (reduced mod p).
  bool contains(const Point& x) const;

  friend bool operator==(const PeriodicTiling& a, const PeriodicTiling& b) {
    return a.period() == b.period() && a.dimension() == b.dimension() && a.codewords_ == b.codewords_;
  }

 private:
  Window window_;
  std::vector<Point> codewords_;
  std::vector<CellIndex> cells_;
};

struct CoverageWitness {
  Point cell;
  std::vector<Point> covering;  // codewords whose tile contains the cell (empty when uncovered)
};

struct VerificationReport {
  bool is_tiling = false;
  std::uint64_t cells_total = 0;
  std::uint64_t multiply_covered = 0;
  std::uint64_t uncovered = 0;
  std::uint64_t codewords = 0;
  std::uint64_t shape_size = 0;
  std::optional<CoverageWitness> first_witness;
  std::optional<Coord> min_cross_distance;
};

struct VerifyOptions {
  unsigned threads = 0;                                 // 0 = hardware concurrency
  std::uint64_t cell_budget = std::uint64_t{1} << 31;   // largest window accepted
  std::uint64_t memory_budget = std::uint64_t{256} << 20;  // bytes of concurrently live shard counters
  bool min_distance = true;
  std::uint64_t pair_budget = std::uint64_t{100'000'000};  // max k^2 for the pairwise d_C scan
};

/// Exact-cover check of the p^n window: every cell must be covered exactly once.
VerificationReport verify(const PeriodicTiling& tiling, const VerifyOptions& options = {});

/// Minimum torus cross distance over distinct codeword pairs (nullopt for fewer than 2 codewords).
std::optional<Coord> min_torus_cross_distance(const PeriodicTiling& tiling);

/// Translate so that x0 becomes the origin.
PeriodicTiling normalize(const PeriodicTiling& tiling, const Point& x0);

/// Coordinate permutation: new coordinate i takes old coordinate sigma[i] (0-based).
PeriodicTiling permute(const PeriodicTiling& tiling, const std::vector<std::size_t>& sigma);

/// Sign flips: coordinates with a_i = -1 are negated mod p.
PeriodicTiling reflect(const PeriodicTiling& tiling, const Point& signs);

/// Invariance under x -> x + p2 e_i for every i. p2 must divide p.
bool is_periodic_with(const PeriodicTiling& tiling, Coord p2);

struct Admissibility {
  bool admissible = false;
  int base = 0;  // 2 (n = 2^t - 1) or 3 (n = 3^t - 1)
  int t = 0;
};

Admissibility admissible_dimension(std::size_t n);

struct NonexistenceCertificate {
  std::size_t n = 0;
  int forced_period = 0;   // 4 for odd n, 12 for even n
  std::string shape_size;  // 2^n (n+1), decimal
  std::string window_size; // forced_period^n, decimal
  bool divides = false;
  std::string conclusion;
};

NonexistenceCertificate nonexistence_certificate(std::size_t n);

// TILING v1 text format.
void write_tiling(std::ostream& os, const PeriodicTiling& tiling);
PeriodicTiling read_tiling(std::istream& is);
std::string tiling_to_string(const PeriodicTiling& tiling);
PeriodicTiling load_tiling(const std::string& path);
void save_tiling(const std::string& path, const PeriodicTiling& tiling);

}  // namespace upsilon
