#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cyclehom/chain_complex.hpp"
#include "cyclehom/coefficient_ring.hpp"
#include "cyclehom/fg_abelian_group.hpp"
#include "cyclehom/finite_group.hpp"
#include "cyclehom/int_matrix.hpp"

namespace cyclehom::spectral {

using complexes::ChainComplex;
using cycles::FiniteGroup;
using exact::IntMatrix;

// First-quadrant grid of free abelian groups with a horizontal differential
// (s,t) -> (s-1,t) and a vertical one (s,t) -> (s,t-1). Squares commute; the
// sign twist appears at totalization, not in storage. Entries outside the
// window are zero, so the grid is a genuinely bounded object; callers that
// want exact values of an ambient unbounded complex must build a larger
// window and read off the interior.
class DoubleComplex {
 public:
  // ranks[s][t]; horizontal[s][t] is the map out of (s,t) for s >= 1, with
  // horizontal[0][t] empty placeholders; vertical[s][t] likewise for t >= 1.
  // Squares must vanish in the coefficient ring (entries of a Z/n grid are
  // stored as canonical residues, so their integer products need not be 0).
  DoubleComplex(CoefficientRing coeff, std::vector<std::vector<std::int64_t>> ranks,
                std::vector<std::vector<IntMatrix>> horizontal,
                std::vector<std::vector<IntMatrix>> vertical);

  std::int64_t max_s() const { return static_cast<std::int64_t>(ranks_.size()) - 1; }
  std::int64_t max_t() const {
    return ranks_.empty() ? -1 : static_cast<std::int64_t>(ranks_[0].size()) - 1;
  }
  const CoefficientRing& coefficients() const { return coeff_; }
  // Zero outside the window.
  std::int64_t rank(std::int64_t s, std::int64_t t) const;
  const IntMatrix& horizontal(std::int64_t s, std::int64_t t) const;
  const IntMatrix& vertical(std::int64_t s, std::int64_t t) const;

  // The grid with the two directions exchanged.
  DoubleComplex transposed() const;

 private:
  void validate() const;

  CoefficientRing coeff_;
  std::vector<std::vector<std::int64_t>> ranks_;
  std::vector<std::vector<IntMatrix>> h_, v_;
};

// Total complex over the grid's ring: Tot_n = direct sum of the (s,t) with
// s+t = n, blocks ordered by ascending s, differential d_h + (-1)^s d_v. A
// zero top degree is appended so homology is available through max_s + max_t.
ChainComplex totalize(const DoubleComplex& dc);

// The grid whose row t is the bar chain complex of g for every t, with
// vertical maps the alternating face sums of the constant simplicial
// direction: out of level t that is sum_{j=0..t} (-1)^j id, i.e. the identity
// for even t >= 2 and zero for odd t. Its mod-l dual is the cochain grid
// whose rows are the dual bar complex and whose vertical maps alternate
// 0, id, 0, ... out of t = 0, 1, 2, ...; pages of that dual compute group
// cohomology along the bottom row. Entries are reduced mod n when coeff is
// Z/n and kept integral otherwise.
DoubleComplex build_constant_row_grid(const FiniteGroup& g, std::int64_t max_s,
                                      std::int64_t max_t, const CoefficientRing& coeff);

// One page of the spectral sequence of the dualized grid over F_l. Every
// entry is (Z/l)^dim. Page 1 carries the induced horizontal differentials
// d1[s][t] : E_1^{s,t} -> E_1^{s+1,t} written in the page's own coordinates;
// page 2 carries none (higher differentials are not modeled).
struct SpectralPage {
  int r = 1;
  BigInt modulus;
  std::vector<std::vector<FgAbelianGroup>> entries;    // [s][t]
  std::vector<std::vector<IntMatrix>> differentials;   // page 1 only

  std::int64_t dim(std::int64_t s, std::int64_t t) const;
  // True when every entry with t >= 1 vanishes (the degeneracy pattern that
  // makes the edge map an isomorphism).
  bool degenerate_above_bottom_row() const;
};

// Cohomological spectral sequence of the mod-l dual of a double complex:
// E_1 = vertical cohomology, d_1 induced horizontal, E_2 = its cohomology.
// The dual of the stored grid has increasing differentials, so pages live in
// the same first-quadrant window. All arithmetic is exact mod a prime l. The
// grid must be integral or already reduced mod a multiple of l, else the
// dual Hom(-, Z/l) is not computed from enough information. Page data is
// cached lazily, so a single run is not safe to share across threads.
class SpectralRun {
 public:
  SpectralRun(const DoubleComplex& dc, const BigInt& ell);  // CompositeModulus unless prime
  ~SpectralRun();
  SpectralRun(SpectralRun&&) noexcept;
  SpectralRun& operator=(SpectralRun&&) noexcept;

  std::int64_t max_s() const;
  std::int64_t max_t() const;
  const BigInt& modulus() const;

  SpectralPage page(int r) const;  // r in {1, 2}

  // dim over F_l of H^n of the dual total complex.
  std::int64_t total_cohomology_dim(std::int64_t n) const;

  // Matrix of H^n(total dual) -> E_2^{n,0} sending a cocycle class to its
  // bottom-row component. Defined when the bottom-row vertical maps of the
  // dual vanish (true for constant-direction grids); throws ValidationError
  // otherwise.
  IntMatrix edge_map(std::int64_t n) const;
  bool edge_is_isomorphism(std::int64_t n) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Single-shot conveniences over a fresh SpectralRun.
SpectralPage page(const DoubleComplex& dc, int r, const CoefficientRing& coeff);
IntMatrix edge_map(const DoubleComplex& dc, std::int64_t n, const CoefficientRing& coeff);

}  // namespace cyclehom::spectral
