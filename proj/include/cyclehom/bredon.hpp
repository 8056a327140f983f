#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cyclehom::bredon {

// Bidegree (p, q) in the representation-graded theory for the two-element
// group. Every lattice point is legal; existence of classes is a separate
// question answered by point_dim.
struct Bidegree {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

// dim H^{p,q} of the point with mod-2 coefficients: 1 on the two cones
// q >= p >= 0 and q + 2 <= p <= 0, else 0.
int point_dim(Bidegree d);

// x_(a,b)·c^j: the point class of bidegree (a, b) times the j-th power of
// the projective-space generator c of bidegree (2, 1).
class BredonMonomial {
 public:
  // ValidationError when the base bidegree carries no point class or the
  // c-power is negative.
  BredonMonomial(Bidegree base, std::int64_t c_power);

  const Bidegree& base() const { return base_; }
  std::int64_t c_power() const { return c_power_; }
  Bidegree total() const { return {base_.p + 2 * c_power_, base_.q + c_power_}; }

  // "x_(a,b)·c^j"; the c factor is always written, including j = 0.
  std::string to_string() const;

  friend bool operator==(const BredonMonomial&, const BredonMonomial&) = default;

 private:
  Bidegree base_;
  std::int64_t c_power_;
};

// dim H^{p,q} of the infinite complex projective space with mod-2
// coefficients: the theory is free over the point on the powers of c, so
// this is the sum of point_dim(p - 2j, q - j) over j >= 0. The sum is
// finite; see the interval bounds in the implementation.
std::int64_t cp_dim(Bidegree d);

// All monomials of total bidegree (s, 0), in increasing c-power. The count
// equals cp_dim(s, 0); negative s yields the empty list.
std::vector<BredonMonomial> row_generators(std::int64_t s);

// Product of two monomials as far as the point-level ring structure is
// published: c-powers always add; x_(0,0) is the unit; a cross-cone product
// of base classes is zero; every other base product is left undetermined.
struct PartialProduct {
  enum class Kind { monomial, zero, undetermined };

  Kind kind = Kind::undetermined;
  std::optional<BredonMonomial> value;  // set exactly when kind == monomial
};

PartialProduct multiply_partial(const BredonMonomial& a, const BredonMonomial& b);

// Dimension table of the mod-2 cycle cohomology of the multiplicative group
// over the reals in degrees 0..max_degree; entry s is cp_dim(s, 0). The
// closed form is 1, 0, 0, 0 and then k - 1 at both degrees 2k and 2k + 1.
std::vector<std::int64_t> gm_over_r_table(std::int64_t max_degree);

}  // namespace cyclehom::bredon
