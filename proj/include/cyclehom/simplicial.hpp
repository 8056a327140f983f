#pragma once

#include <cstdint>
#include <vector>

#include "cyclehom/chain_complex.hpp"
#include "cyclehom/int_matrix.hpp"

namespace cyclehom::complexes {

// Simplicial abelian group on free modules, truncated at a top degree: face
// matrices out of degrees 1..N and degeneracy matrices out of degrees
// 0..N-1. Construction checks every simplicial identity whose composites
// stay within the truncation.
class SimplicialAbelianGroup {
 public:
  // faces[i][k] : C_i -> C_{i-1} for k = 0..i (faces[0] stays empty);
  // degeneracies[i][j] : C_i -> C_{i+1} for j = 0..i, i < top degree.
  SimplicialAbelianGroup(std::vector<std::int64_t> ranks,
                         std::vector<std::vector<IntMatrix>> faces,
                         std::vector<std::vector<IntMatrix>> degeneracies);

  std::int64_t top_degree() const { return static_cast<std::int64_t>(ranks_.size()) - 1; }
  std::int64_t rank(std::int64_t i) const { return ranks_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::int64_t>& ranks() const { return ranks_; }
  const IntMatrix& face(std::int64_t i, std::int64_t k) const;
  const IntMatrix& degeneracy(std::int64_t i, std::int64_t j) const;

 private:
  void check_shapes() const;
  void check_identities() const;

  std::vector<std::int64_t> ranks_;
  std::vector<std::vector<IntMatrix>> faces_;
  std::vector<std::vector<IntMatrix>> degeneracies_;
};

// The associated chain complex with d_i = sum_k (-1)^k face_k.
ChainComplex alternating_sum_complex(const SimplicialAbelianGroup& s,
                                     const CoefficientRing& coeff);

// Quotient by the subcomplex spanned by degeneracy images. Same homology as
// the alternating-sum complex on much smaller ranks. When every degeneracy
// is a coefficient-one basis map the degenerate span is a coordinate
// subspace and the quotient is a plain submatrix; otherwise it is split off
// with a Smith reduction of the stacked degeneracies.
ChainComplex normalize(const SimplicialAbelianGroup& s, const CoefficientRing& coeff);

}  // namespace cyclehom::complexes
