#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cyclehom::cycles {

// Finite group given by an explicit multiplication table on indices 0..n-1.
// All group axioms are checked at construction; the identity may sit at any
// index. Groups are small by design (automorphism enumeration is brute
// force and refuses orders above 8).
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::vector<std::int64_t>> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::int64_t n);
  // Dihedral group of order 2n (symmetries of the n-gon).
  static FiniteGroup dihedral(std::int64_t n);
  static FiniteGroup quaternion();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

  std::int64_t order() const { return static_cast<std::int64_t>(table_.size()); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t inverse(std::int64_t a) const;
  std::int64_t identity() const { return identity_; }
  std::int64_t power(std::int64_t g, std::int64_t k) const;  // k may be negative
  bool is_abelian() const;
  const std::string& name() const { return name_; }
  FiniteGroup with_name(std::string name) const;

  // All automorphisms as permutations, lexicographically ordered. Brute
  // force over permutations fixing the identity; guarded to order <= 8.
  std::vector<std::vector<std::int64_t>> automorphisms() const;
  // The automorphisms of order dividing 2 (identity included).
  std::vector<std::vector<std::int64_t>> involutive_automorphisms() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

 private:
  void validate();

  std::string name_;
  std::vector<std::vector<std::int64_t>> table_;
  std::int64_t identity_ = 0;
  std::vector<std::int64_t> inverses_;
};

// Every group of order <= max_order (max_order <= 8), one per isomorphism
// class, ordered by (order, name).
std::vector<FiniteGroup> small_group_catalog(std::int64_t max_order);

}  // namespace cyclehom::cycles
