#pragma once

#include <cstdint>
#include <vector>

#include "cyclehom/coefficient_ring.hpp"
#include "cyclehom/fg_abelian_group.hpp"
#include "cyclehom/int_matrix.hpp"
#include "cyclehom/lattice.hpp"

namespace cyclehom::exact {

// Homology at the middle of  in --d_in--> middle --d_out--> out,
// over the given coefficient ring. Checks shapes and d_out * d_in = 0.
FgAbelianGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out,
                           const CoefficientRing& coeff);

// Transpose with entries interpreted in the coefficient ring (reduced into
// [0, n) for ModN). Rationals are rejected.
IntMatrix dualize(const IntMatrix& m, const CoefficientRing& coeff);

// Coordinates for chains with Z/n coefficients, lifted to integer lattices:
// the kernel of d_out mod n corresponds to the lattice spanned by the columns
// of `lattice`, and homology is Z^B / im(relations) in those coordinates.
// Derived by scaling the Smith right transform of d_out.
class ModCoordinates {
 public:
  ModCoordinates(const IntMatrix& d_in, const IntMatrix& d_out, BigInt n);

  std::int64_t ambient() const { return ambient_; }
  const IntMatrix& relations() const { return relations_; }

  // Lattice basis as chain-coordinate columns (V * diag(scale)).
  IntMatrix lattice() const;

  // Conjugates a chain endomorphism into lattice coordinates. The
  // endomorphism must preserve the kernel-mod-n lattice (chain maps do).
  IntMatrix lift_endo(const IntMatrix& sigma) const;

  // Expresses chain columns (lying in the kernel lattice mod n) in lattice
  // coordinates: solves lattice * x = cols exactly.
  IntMatrix lift_columns(const IntMatrix& cols) const;

  FgAbelianGroup homology() const;

 private:
  std::int64_t ambient_;
  BigInt n_;
  std::vector<BigInt> scale_;   // m_i = n / gcd(d_i, n), padded by 1
  IntMatrix v_, v_inv_;         // right transform of d_out and its inverse
  IntMatrix relations_;
};

}  // namespace cyclehom::exact
