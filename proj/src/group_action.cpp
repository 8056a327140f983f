#include "cyclehom/group_action.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "cyclehom/errors.hpp"

namespace cyclehom::cycles {

namespace {

bool is_permutation(const std::vector<std::int64_t>& p, std::int64_t n) {
  if (static_cast<std::int64_t>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (auto v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<std::vector<std::int64_t>> validate_and_close(
    const FiniteGroup& group, const std::vector<std::vector<std::int64_t>>& generators) {
  const std::int64_t n = group.order();
  for (std::size_t s = 0; s < generators.size(); ++s) {
    const auto& p = generators[s];
    if (!is_permutation(p, n))
      throw NotAnAutomorphism("generator " + std::to_string(s) +
                              " is not a permutation of the group");
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b)
        if (p[group.mul(a, b)] != group.mul(p[a], p[b]))
          throw NotAnAutomorphism("generator " + std::to_string(s) +
                                  " does not respect multiplication at (" +
                                  std::to_string(a) + ", " + std::to_string(b) + ")");
  }

  std::vector<std::int64_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<std::int64_t>> closure{id};
  std::vector<std::vector<std::int64_t>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& p : frontier)
      for (const auto& g : generators) {
        std::vector<std::int64_t> q(n);
        for (std::int64_t a = 0; a < n; ++a) q[a] = g[p[a]];
        if (closure.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return {closure.begin(), closure.end()};
}

}  // namespace

GroupAction::GroupAction(FiniteGroup group, std::int64_t declared_order,
                         std::vector<std::vector<std::int64_t>> generators)
    : group_(std::move(group)),
      declared_order_(declared_order),
      generators_(std::move(generators)) {
  if (declared_order_ < 1) throw ValidationError("declared symmetry order must be positive");
  elements_ = validate_and_close(group_, generators_);
  if (declared_order_ % order() != 0)
    throw ValidationError("generated symmetry group has order " + std::to_string(order()) +
                          ", which does not divide the declared order " +
                          std::to_string(declared_order_));
}

GroupAction GroupAction::generated(FiniteGroup group,
                                   std::vector<std::vector<std::int64_t>> generators) {
  const auto elements = validate_and_close(group, generators);
  return GroupAction(std::move(group), static_cast<std::int64_t>(elements.size()),
                     std::move(generators));
}

GroupAction GroupAction::trivial(FiniteGroup group) {
  return GroupAction(std::move(group), 1, {});
}

std::int64_t tuple_encode(const std::vector<std::int64_t>& tuple, std::int64_t radix) {
  std::int64_t code = 0;
  for (auto v : tuple) code = code * radix + v;
  return code;
}

std::vector<std::int64_t> tuple_decode(std::int64_t code, std::int64_t degree,
                                       std::int64_t radix) {
  std::vector<std::int64_t> tuple(degree);
  for (std::int64_t k = degree - 1; k >= 0; --k) {
    tuple[k] = code % radix;
    code /= radix;
  }
  return tuple;
}

OrbitBasis orbit_basis(const GroupAction& action, std::int64_t degree) {
  if (degree < 0) throw ValidationError("orbit degree must be nonnegative");
  const std::int64_t n = action.group().order();
  std::int64_t total = 1;
  for (std::int64_t k = 0; k < degree; ++k) total *= n;

  OrbitBasis basis;
  basis.degree = degree;
  std::vector<char> visited(total, 0);
  std::vector<std::int64_t> orbit;
  for (std::int64_t code = 0; code < total; ++code) {
    if (visited[code]) continue;
    const auto tuple = tuple_decode(code, degree, n);
    orbit.clear();
    for (const auto& p : action.elements()) {
      std::vector<std::int64_t> image(degree);
      for (std::int64_t k = 0; k < degree; ++k) image[k] = p[tuple[k]];
      orbit.push_back(tuple_encode(image, n));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (auto c : orbit) visited[c] = 1;
    basis.representatives.push_back(tuple);
    basis.representative_codes.push_back(code);
    basis.sizes.push_back(static_cast<std::int64_t>(orbit.size()));
  }
  return basis;
}

}  // namespace cyclehom::cycles
