#pragma once

#include <cstdint>
#include <vector>

#include "cyclehom/finite_group.hpp"

namespace cyclehom::cycles {

// A finite group of symmetries acting on a FiniteGroup by automorphisms,
// given by generating permutations. Construction verifies that every
// generator respects the multiplication table, closes the generators into
// the full symmetry group, and checks that its order divides the declared
// bound (for a Galois action this is the degree of the field extension).
class GroupAction {
 public:
  GroupAction(FiniteGroup group, std::int64_t declared_order,
              std::vector<std::vector<std::int64_t>> generators);

  static GroupAction trivial(FiniteGroup group);

  // Action whose declared order is the generated one, for inputs that carry
  // no separate symmetry-degree bound.
  static GroupAction generated(FiniteGroup group,
                               std::vector<std::vector<std::int64_t>> generators);

  const FiniteGroup& group() const { return group_; }
  std::int64_t declared_order() const { return declared_order_; }
  const std::vector<std::vector<std::int64_t>>& generators() const { return generators_; }
  // The generated symmetry group, lexicographically sorted; the identity
  // permutation is always present.
  const std::vector<std::vector<std::int64_t>>& elements() const { return elements_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }

 private:
  FiniteGroup group_;
  std::int64_t declared_order_;
  std::vector<std::vector<std::int64_t>> generators_;
  std::vector<std::vector<std::int64_t>> elements_;
};

// Tuples in G^degree are encoded big-endian in radix |G|: the first entry
// is the most significant digit, so code order is lexicographic order.
std::int64_t tuple_encode(const std::vector<std::int64_t>& tuple, std::int64_t radix);
std::vector<std::int64_t> tuple_decode(std::int64_t code, std::int64_t degree,
                                       std::int64_t radix);

// Orbits of the entrywise symmetry action on G^degree. Representatives are
// the lexicographically smallest tuples of their orbits, listed in
// increasing order.
struct OrbitBasis {
  std::int64_t degree = 0;
  std::vector<std::vector<std::int64_t>> representatives;
  std::vector<std::int64_t> representative_codes;
  std::vector<std::int64_t> sizes;

  std::int64_t orbit_count() const {
    return static_cast<std::int64_t>(representatives.size());
  }
};

OrbitBasis orbit_basis(const GroupAction& action, std::int64_t degree);

}  // namespace cyclehom::cycles
