#include "cyclehom/fg_abelian_group.hpp"

#include <algorithm>
#include <sstream>

namespace cyclehom {

FgAbelianGroup::FgAbelianGroup(std::int64_t free_rank, std::vector<BigInt> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  if (free_rank_ < 0) throw ValidationError("negative free rank");
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw ValidationError("torsion coefficient " + torsion_[i].str() + " below 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw ValidationError("torsion coefficients " + torsion_[i - 1].str() + ", " +
                            torsion_[i].str() + " violate the divisibility chain");
  }
}

FgAbelianGroup FgAbelianGroup::from_invariant_factors(std::int64_t free_rank,
                                                      const std::vector<BigInt>& diag) {
  std::vector<BigInt> torsion;
  for (const BigInt& d : diag)
    if (d > 1) torsion.push_back(d);
  return FgAbelianGroup(free_rank, std::move(torsion));
}

FgAbelianGroup FgAbelianGroup::from_torsion_multiset(std::int64_t free_rank,
                                                     const std::vector<BigInt>& torsion) {
  // Repeated pairwise gcd/lcm replacement converges to the invariant factors.
  std::vector<BigInt> work;
  for (const BigInt& t : torsion) {
    if (t < 1) throw ValidationError("torsion coefficient must be positive");
    if (t > 1) work.push_back(t);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size(); ++i)
      for (std::size_t j = i + 1; j < work.size(); ++j) {
        if (work[j] % work[i] == 0) continue;
        BigInt g = big_gcd(work[i], work[j]);
        BigInt l = work[i] / g * work[j];
        work[i] = g;
        work[j] = l;
        changed = true;
      }
  }
  std::erase_if(work, [](const BigInt& t) { return t == 1; });
  std::sort(work.begin(), work.end());
  return FgAbelianGroup(free_rank, std::move(work));
}

BigInt FgAbelianGroup::torsion_order() const {
  BigInt n = 1;
  for (const BigInt& t : torsion_) n *= t;
  return n;
}

std::int64_t FgAbelianGroup::torsion_rank_at(const BigInt& p) const {
  std::int64_t n = 0;
  for (const BigInt& t : torsion_)
    if (t % p == 0) ++n;
  return n;
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " + ";
    first = false;
  };
  if (free_rank_ == 1) {
    sep();
    os << "Z";
  } else if (free_rank_ > 1) {
    sep();
    os << "Z^" << free_rank_;
  }
  for (const BigInt& t : torsion_) {
    sep();
    os << "Z/" << t.str();
  }
  return os.str();
}

}  // namespace cyclehom
