#pragma once

#include <cstdint>
#include <vector>

#include "cyclehom/bigint.hpp"
#include "cyclehom/chain_complex.hpp"
#include "cyclehom/coefficient_ring.hpp"
#include "cyclehom/fg_abelian_group.hpp"
#include "cyclehom/group_action.hpp"
#include "cyclehom/int_matrix.hpp"
#include "cyclehom/simplicial.hpp"

namespace cyclehom::cycles {

using complexes::ChainComplex;
using complexes::SimplicialAbelianGroup;
using exact::IntMatrix;

// Classifying-space construction of G truncated at max_degree: degree i is
// free on G^i. Face 0 drops the first entry, face k (0 < k < i) multiplies
// the adjacent entries at slots k-1 and k, face i drops the last entry;
// degeneracy j inserts the identity at slot j.
SimplicialAbelianGroup bar_simplicial(const FiniteGroup& g, std::int64_t max_degree);

// Quotient of the bar construction by an entrywise symmetry action: degree
// i is free on the orbit classes of G^i. A face sends a class to the class
// of its image with multiplicity |orbit| / |image orbit| (the fibers of an
// equivariant surjection of orbits all have that size); degeneracies are
// injective and carry no multiplicity.
SimplicialAbelianGroup orbit_simplicial(const GroupAction& action,
                                        std::int64_t max_degree);

// Alternating-sum differential of orbit_simplicial, over the integers.
ChainComplex orbit_complex(const GroupAction& action, std::int64_t max_degree);

// The same complexes restricted to the non-degenerate bases (tuples with no
// identity entry, and their orbit classes), built directly. Degeneracies
// are coordinate inclusions, so deleting their spans is an exact quotient
// and homology is unchanged while ranks shrink from |G|^i to (|G|-1)^i.
ChainComplex normalized_bar_complex(const FiniteGroup& g, std::int64_t max_degree);
ChainComplex normalized_orbit_complex(const GroupAction& action,
                                      std::int64_t max_degree);

// One boundary matrix of normalized_bar_complex (degree 0 yields the empty
// map out of the single basis class).
IntMatrix normalized_bar_differential(const FiniteGroup& g, std::int64_t degree);

// An automorphism as a permutation matrix on the non-degenerate degree-i
// basis of normalized_bar_complex.
IntMatrix normalized_chain_symmetry(const FiniteGroup& g,
                                    const std::vector<std::int64_t>& automorphism,
                                    std::int64_t degree);

// H_degree of the orbit complex with the given coefficients, computed on
// the normalized complex. Requires degree <= max_degree - 1 so that the
// boundary arriving at the requested degree is inside the truncation.
FgAbelianGroup galois_homology(const GroupAction& action, const CoefficientRing& coeff,
                               std::int64_t degree, std::int64_t max_degree);

// H_degree(G; coeff) with no symmetry identification.
FgAbelianGroup group_homology(const FiniteGroup& g, const CoefficientRing& coeff,
                              std::int64_t degree, std::int64_t max_degree);

// Fixed subgroup of the induced symmetry action on H_degree(G; coeff).
// Integer and composite-modulus coefficients lift the generators through
// Smith coordinates and intersect their fixed spaces exactly; rational and
// prime-modulus coefficients evaluate a rank formula on one block matrix
// (the two routes are cross-checked in the tests).
FgAbelianGroup invariants_homology(const GroupAction& action, const CoefficientRing& coeff,
                                   std::int64_t degree, std::int64_t max_degree);

// Reference path for invariants_homology that always lifts through Smith
// coordinates; accepts Integers or any Z/n, rejects Rationals.
FgAbelianGroup invariants_homology_by_lifting(const GroupAction& action,
                                              const CoefficientRing& coeff,
                                              std::int64_t degree,
                                              std::int64_t max_degree);

// Multiplication by a scalar on a finitely generated abelian group. The
// composite of the pullback along a degree-d cover (the identity on
// classes) with the transfer back down acts on homology this way.
struct ScalarEndomorphism {
  BigInt scalar;
  FgAbelianGroup domain;
  FgAbelianGroup image;  // image of multiplication by the scalar

  bool is_zero() const { return image.is_trivial(); }
  bool is_identity() const;
};

ScalarEndomorphism transfer_scalar(const BigInt& scalar, const FgAbelianGroup& domain);

// Map induced on H_degree by a group homomorphism (entries hom[g] in the
// target), written in canonical coordinates on both sides: free coordinates
// first, then one coordinate per invariant factor in increasing order.
// Rows belonging to a torsion factor are reduced into [0, factor).
struct InducedMap {
  FgAbelianGroup source;
  FgAbelianGroup target;
  std::vector<BigInt> source_factors;  // 0 marks a free coordinate
  std::vector<BigInt> target_factors;
  IntMatrix matrix;  // target coordinates x source coordinates
};

InducedMap induced_map(const FiniteGroup& source, const FiniteGroup& target,
                       const std::vector<std::int64_t>& hom, std::int64_t degree,
                       const CoefficientRing& coeff, std::int64_t max_degree);

// Reduces torsion rows of a composite of induced-map matrices back into
// canonical range; row i is taken mod factors[i] when factors[i] > 0.
IntMatrix reduce_induced_rows(const IntMatrix& m, const std::vector<BigInt>& factors);

}  // namespace cyclehom::cycles
