#include "cyclehom/bredon.hpp"

#include <algorithm>

#include "cyclehom/errors.hpp"

namespace cyclehom::bredon {

namespace {

bool in_positive_cone(Bidegree d) { return d.q >= d.p && d.p >= 0; }
bool in_negative_cone(Bidegree d) { return d.q + 2 <= d.p && d.p <= 0; }

std::int64_t floor_half(std::int64_t n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }
std::int64_t ceil_half(std::int64_t n) { return -floor_half(-n); }

std::int64_t interval_size(std::int64_t lo, std::int64_t hi) {
  return hi >= lo ? hi - lo + 1 : 0;
}

}  // namespace

int point_dim(Bidegree d) {
  return (in_positive_cone(d) || in_negative_cone(d)) ? 1 : 0;
}

BredonMonomial::BredonMonomial(Bidegree base, std::int64_t c_power)
    : base_(base), c_power_(c_power) {
  if (c_power < 0)
    throw ValidationError("c-power must be nonnegative, got " + std::to_string(c_power));
  if (point_dim(base) == 0)
    throw ValidationError("no point class in bidegree (" + std::to_string(base.p) + ", " +
                          std::to_string(base.q) + ")");
}

std::string BredonMonomial::to_string() const {
  return "x_(" + std::to_string(base_.p) + "," + std::to_string(base_.q) + ")·c^" +
         std::to_string(c_power_);
}

std::int64_t cp_dim(Bidegree d) {
  // The j-th summand point_dim(p - 2j, q - j) is nonzero only when the
  // shifted bidegree lands in a cone:
  //   positive cone:  q - j >= p - 2j >= 0   <=>  max(0, p - q) <= j <= floor(p/2)
  //   negative cone:  q - j + 2 <= p - 2j <= 0  <=>  ceil(p/2) <= j <= p - q - 2
  // Both intervals are finite, so the sum terminates, and they are disjoint
  // because no point class lies in both cones.
  const std::int64_t positive = interval_size(std::max<std::int64_t>(0, d.p - d.q),
                                              floor_half(d.p));
  const std::int64_t negative = interval_size(std::max<std::int64_t>(0, ceil_half(d.p)),
                                              d.p - d.q - 2);
  return positive + negative;
}

std::vector<BredonMonomial> row_generators(std::int64_t s) {
  std::vector<BredonMonomial> out;
  if (s < 0) return out;
  if (s == 0) {
    out.emplace_back(Bidegree{0, 0}, 0);
    return out;
  }
  // A monomial of total bidegree (s, 0) has base (s - 2j, -j). For s >= 1
  // only the negative cone contributes, which pins ceil(s/2) <= j <= s - 2;
  // this reproduces the published rows for both parities of s and is empty
  // for s = 1, 2, 3.
  for (std::int64_t j = ceil_half(s); j <= s - 2; ++j)
    out.emplace_back(Bidegree{s - 2 * j, -j}, j);
  return out;
}

PartialProduct multiply_partial(const BredonMonomial& a, const BredonMonomial& b) {
  const std::int64_t j = a.c_power() + b.c_power();
  const Bidegree unit{0, 0};
  // The unit rule takes precedence: (0, 0) lies in the positive cone, but
  // x_(0,0) is the identity of the ring, never a zero divisor.
  if (a.base() == unit) return {PartialProduct::Kind::monomial, BredonMonomial(b.base(), j)};
  if (b.base() == unit) return {PartialProduct::Kind::monomial, BredonMonomial(a.base(), j)};
  if (in_positive_cone(a.base()) != in_positive_cone(b.base()))
    return {PartialProduct::Kind::zero, std::nullopt};
  return {PartialProduct::Kind::undetermined, std::nullopt};
}

std::vector<std::int64_t> gm_over_r_table(std::int64_t max_degree) {
  std::vector<std::int64_t> table;
  for (std::int64_t s = 0; s <= max_degree; ++s) table.push_back(cp_dim({s, 0}));
  return table;
}

}  // namespace cyclehom::bredon
