#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclehom/bigint.hpp"
#include "cyclehom/errors.hpp"

namespace cyclehom {

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank + Z/t_1 + ... + Z/t_k with 2 <= t_1 | t_2 | ... | t_k.
class FgAbelianGroup {
 public:
  FgAbelianGroup() : free_rank_(0) {}
  FgAbelianGroup(std::int64_t free_rank, std::vector<BigInt> torsion);

  // Accepts a diagonal that may contain 1s (dropped) but must already
  // form a divisibility chain.
  static FgAbelianGroup from_invariant_factors(std::int64_t free_rank,
                                               const std::vector<BigInt>& diag);

  // Accepts torsion coefficients in any order with no chain condition and
  // canonicalizes them.
  static FgAbelianGroup from_torsion_multiset(std::int64_t free_rank,
                                              const std::vector<BigInt>& torsion);

  std::int64_t free_rank() const { return free_rank_; }
  const std::vector<BigInt>& torsion() const { return torsion_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }

  // Order of the torsion part.
  BigInt torsion_order() const;

  // Number of invariant factors divisible by p.
  std::int64_t torsion_rank_at(const BigInt& p) const;

  std::string to_string() const;

  friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
  }
  friend bool operator!=(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return !(a == b);
  }

 private:
  std::int64_t free_rank_;
  std::vector<BigInt> torsion_;
};

}  // namespace cyclehom
