#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "upsilon/tiling.hpp"

namespace upsilon {

struct AuditCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Structural facts every Upsilon_n tiling containing 0 must exhibit,
/// checked against window residues. Indices in f1/f2 are 1-based.
struct AuditReport {
  std::size_t n = 0;
  Coord p = 0;
  std::vector<std::pair<std::size_t, std::size_t>> f1;          // (r, s): 3e_r + 2e_s in T
  std::vector<std::array<std::size_t, 3>> f2;                   // {i, j, k}: 2 exactly there, 0/1 elsewhere
  std::uint64_t spencer_bound = 0;
  bool spencer_applies = false;  // n != 5 (mod 6)
  std::vector<AuditCheck> checks;

  bool passed() const;
  const AuditCheck* find(const std::string& name) const;
};

/// floor((n/3) floor((n-1)/2)), the packing triple system bound.
std::uint64_t spencer_bound(std::size_t n);

/// Runs the audit. `report` must come from verify() on the same tiling and
/// report an exact cover; the origin must be a codeword.
AuditReport structural_audit(const PeriodicTiling& tiling, const VerificationReport& report);

}  // namespace upsilon
