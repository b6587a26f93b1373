#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "upsilon/tiling.hpp"

namespace upsilon {

struct SearchConfig {
  std::size_t n = 1;
  Coord p = 4;
  std::size_t max_solutions = 1;       // 0 = enumerate all
  bool symmetry_breaking = true;       // fix the origin as a codeword
  std::uint64_t node_budget = 10'000'000;
};

enum class SearchStatus {
  Exhausted,          // the whole tree was explored; solutions are all of them
  SolutionLimit,      // stopped after max_solutions
  BudgetExhausted,    // inconclusive
  RejectedByDivisibility,
};

std::string to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<PeriodicTiling> solutions;  // sorted lexicographically by codeword list
  std::uint64_t nodes = 0;
  std::uint64_t backtracks = 0;
  double elapsed_ms = 0.0;
  std::optional<NonexistenceCertificate> certificate;  // set when rejected by divisibility
};

/// 2^n (n+1) divides p^n.
bool divisibility_precheck(std::size_t n, Coord p);

/// Largest window the backtracker accepts.
inline constexpr std::uint64_t kSearchCellLimit = 1'000'000;

/// Exact-cover backtracking over the torus Z_p^n: branch on every placement
/// covering the lowest uncovered cell.
SearchResult search_tilings(const SearchConfig& config);

/// Lexicographically least codeword list over all translations to a codeword,
/// coordinate permutations and sign flips. Intended for n <= 6.
PeriodicTiling canonical_form(const PeriodicTiling& tiling);

}  // namespace upsilon
