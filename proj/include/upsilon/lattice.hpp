#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "upsilon/geometry.hpp"

namespace upsilon {

using IntMatrix = std::vector<std::vector<Coord>>;

/// Full-rank integer lattice given by an n x n generator matrix (rows are basis vectors).
/// All arithmetic is exact; construction rejects singular generators.
class IntegerLattice {
 public:
  explicit IntegerLattice(IntMatrix generator);

  std::size_t dimension() const { return generator_.size(); }
  const IntMatrix& generator() const { return generator_; }
  /// Upper-triangular Hermite basis with positive pivots; entries right of a pivot reduced into [0, pivot).
  const IntMatrix& hermite_basis() const { return hermite_; }

  std::uint64_t volume() const { return volume_; }
  bool contains(const Point& x) const;

 private:
  IntMatrix generator_;
  IntMatrix hermite_;
  std::uint64_t volume_;
};

/// |det| by fraction-free (Bareiss) elimination. Throws on overflow.
__int128 determinant(const IntMatrix& m);

/// Hermite basis of the lattice spanned by rows plus modulus * Z^n.
IntMatrix hermite_basis_mod(const IntMatrix& rows, std::size_t n, Coord modulus);

/// Lattice generated by 3e_{2i-1} + 2e_{2i} and 4e_{2i}, i = 1..nu (dimension 2nu).
IntegerLattice lambda_n(std::size_t nu);

/// All lattice points in {0..p-1}^n, sorted. Requires p e_i in L for every i.
std::vector<Point> window(const IntegerLattice& lattice, Coord p);

class PeriodicTiling;

/// True iff the window codeword set is closed under addition mod p, i.e. the
/// periodic set is itself a lattice.
bool is_lattice_tiling(const PeriodicTiling& tiling);

/// The lattice T + pZ^n of a closed tiling. Throws PreconditionError when the set is not closed.
IntegerLattice lattice_of(const PeriodicTiling& tiling);

void write_lattice(std::ostream& os, const IntegerLattice& lattice);
IntegerLattice read_lattice(std::istream& is);

}  // namespace upsilon
