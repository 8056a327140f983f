#pragma once

#include <cstdint>
#include <vector>

#include "cyclehom/coefficient_ring.hpp"
#include "cyclehom/fg_abelian_group.hpp"
#include "cyclehom/int_matrix.hpp"

namespace cyclehom::complexes {

using exact::IntMatrix;

// Chain complex C_0 .. C_N of free modules, treated as the truncation of a
// complex that may continue past degree N. Homology is therefore available
// only below the top degree; a genuinely bounded complex gets an extra zero
// degree appended by its builder. Differentials are integer matrices read
// through the coefficient ring (entries mod n for Z/n).
class ChainComplex {
 public:
  // differentials[i] is d_{i+1} : C_{i+1} -> C_i; shapes must match ranks and
  // consecutive differentials must compose to zero in the coefficient ring.
  ChainComplex(CoefficientRing coeff, std::vector<std::int64_t> ranks,
               std::vector<IntMatrix> differentials);

  std::int64_t top_degree() const { return static_cast<std::int64_t>(ranks_.size()) - 1; }
  std::int64_t rank(std::int64_t i) const;
  const CoefficientRing& coefficients() const { return coeff_; }

  // d_i : C_i -> C_{i-1}, 1 <= i <= top_degree().
  const IntMatrix& differential(std::int64_t i) const;

  FgAbelianGroup homology(std::int64_t i) const;

  // Homology in degrees lo..hi. Each differential is reduced once and the
  // summaries are shared between adjacent degrees; with parallelism > 1 the
  // reductions run on that many threads.
  std::vector<FgAbelianGroup> homology_range(std::int64_t lo, std::int64_t hi,
                                             int parallelism = 1) const;

  // Cohomology of Hom(C, A) with A the coefficient ring.
  FgAbelianGroup cohomology(std::int64_t i) const;

  // Base change from an integer complex.
  ChainComplex tensor(const CoefficientRing& target) const;

 private:
  void require_inner_degree(std::int64_t i) const;

  CoefficientRing coeff_;
  std::vector<std::int64_t> ranks_;
  std::vector<IntMatrix> diffs_;  // diffs_[i] = d_{i+1}
};

}  // namespace cyclehom::complexes
