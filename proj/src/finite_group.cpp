#include "cyclehom/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "cyclehom/errors.hpp"

namespace cyclehom::cycles {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<std::int64_t>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  validate();
}

void FiniteGroup::validate() {
  const auto n = static_cast<std::int64_t>(table_.size());
  if (n == 0) throw ValidationError("group table is empty");
  for (std::int64_t a = 0; a < n; ++a) {
    if (static_cast<std::int64_t>(table_[a].size()) != n)
      throw ValidationError("group table is not square at row " + std::to_string(a));
    for (std::int64_t b = 0; b < n; ++b)
      if (table_[a][b] < 0 || table_[a][b] >= n)
        throw ValidationError("closure fails: entry (" + std::to_string(a) + ", " +
                              std::to_string(b) + ") is out of range");
  }

  std::int64_t e = -1;
  for (std::int64_t c = 0; c < n; ++c) {
    bool two_sided = true;
    for (std::int64_t a = 0; a < n; ++a)
      if (table_[c][a] != a || table_[a][c] != a) {
        two_sided = false;
        break;
      }
    if (two_sided) {
      e = c;
      break;
    }
  }
  if (e < 0) throw ValidationError("identity axiom fails: no two-sided identity");
  identity_ = e;

  auto& inv = inverses_;
  inv.assign(n, -1);
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b)
      if (table_[a][b] == e && table_[b][a] == e) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0)
      throw ValidationError("inverse axiom fails: element " + std::to_string(a) +
                            " has no two-sided inverse");
  }

  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw ValidationError("associativity fails at (" + std::to_string(a) + ", " +
                                std::to_string(b) + ", " + std::to_string(c) + ")");
}

std::int64_t FiniteGroup::mul(std::int64_t a, std::int64_t b) const {
  if (a < 0 || a >= order() || b < 0 || b >= order())
    throw ValidationError("group element index out of range");
  return table_[a][b];
}

std::int64_t FiniteGroup::inverse(std::int64_t a) const {
  if (a < 0 || a >= order()) throw ValidationError("group element index out of range");
  return inverses_[a];
}

std::int64_t FiniteGroup::power(std::int64_t g, std::int64_t k) const {
  if (k < 0) return power(inverse(g), -k);
  std::int64_t acc = identity_;
  for (std::int64_t j = 0; j < k; ++j) acc = mul(acc, g);
  return acc;
}

bool FiniteGroup::is_abelian() const {
  for (std::int64_t a = 0; a < order(); ++a)
    for (std::int64_t b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

FiniteGroup FiniteGroup::with_name(std::string name) const {
  FiniteGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(std::int64_t n) {
  if (n < 1) throw ValidationError("cyclic group order must be positive");
  std::vector<std::vector<std::int64_t>> table(n, std::vector<std::int64_t>(n));
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return FiniteGroup("Z/" + std::to_string(n), std::move(table));
}

FiniteGroup FiniteGroup::dihedral(std::int64_t n) {
  if (n < 1) throw ValidationError("dihedral parameter must be positive");
  // Element a + n*b is r^a s^b; s r s = r^{-1}.
  const std::int64_t m = 2 * n;
  std::vector<std::vector<std::int64_t>> table(m, std::vector<std::int64_t>(m));
  for (std::int64_t x = 0; x < m; ++x)
    for (std::int64_t y = 0; y < m; ++y) {
      const std::int64_t a1 = x % n, b1 = x / n, a2 = y % n, b2 = y / n;
      const std::int64_t a = ((b1 == 0 ? a1 + a2 : a1 - a2) % n + n) % n;
      table[x][y] = a + n * ((b1 + b2) % 2);
    }
  return FiniteGroup("D_" + std::to_string(n), std::move(table));
}

FiniteGroup FiniteGroup::quaternion() {
  // Element 2*axis + sign: axes 1, i, j, k; sign 1 means negated.
  static constexpr std::int64_t kCycle[4][4][2] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  std::vector<std::vector<std::int64_t>> table(8, std::vector<std::int64_t>(8));
  for (std::int64_t x = 0; x < 8; ++x)
    for (std::int64_t y = 0; y < 8; ++y) {
      const std::int64_t ax = x / 2, sx = x % 2, ay = y / 2, sy = y % 2;
      const std::int64_t sign = (sx + sy + kCycle[ax][ay][0]) % 2;
      table[x][y] = 2 * kCycle[ax][ay][1] + sign;
    }
  return FiniteGroup("Q_8", std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::int64_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<std::vector<std::int64_t>> table(n, std::vector<std::int64_t>(n));
  for (std::int64_t x = 0; x < n; ++x)
    for (std::int64_t y = 0; y < n; ++y)
      table[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  return FiniteGroup(a.name() + " x " + b.name(), std::move(table));
}

std::vector<std::vector<std::int64_t>> FiniteGroup::automorphisms() const {
  const std::int64_t n = order();
  if (n > 8)
    throw ValidationError("automorphism enumeration is brute force and limited to order 8");
  std::vector<std::int64_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::int64_t>> result;
  do {
    if (perm[identity_] != identity_) continue;
    bool ok = true;
    for (std::int64_t a = 0; a < n && ok; ++a)
      for (std::int64_t b = 0; b < n; ++b)
        if (perm[table_[a][b]] != table_[perm[a]][perm[b]]) {
          ok = false;
          break;
        }
    if (ok) result.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

std::vector<std::vector<std::int64_t>> FiniteGroup::involutive_automorphisms() const {
  std::vector<std::vector<std::int64_t>> result;
  for (auto& s : automorphisms()) {
    bool involutive = true;
    for (std::int64_t a = 0; a < order(); ++a)
      if (s[s[a]] != a) {
        involutive = false;
        break;
      }
    if (involutive) result.push_back(s);
  }
  return result;
}

std::vector<FiniteGroup> small_group_catalog(std::int64_t max_order) {
  if (max_order < 1 || max_order > 8)
    throw ValidationError("catalog covers orders 1 through 8");
  std::vector<FiniteGroup> all;
  all.push_back(FiniteGroup::cyclic(1));
  all.push_back(FiniteGroup::cyclic(2));
  all.push_back(FiniteGroup::cyclic(3));
  all.push_back(FiniteGroup::cyclic(4));
  all.push_back(
      FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
  all.push_back(FiniteGroup::cyclic(5));
  all.push_back(FiniteGroup::cyclic(6));
  all.push_back(FiniteGroup::dihedral(3).with_name("S_3"));
  all.push_back(FiniteGroup::cyclic(7));
  all.push_back(FiniteGroup::cyclic(8));
  all.push_back(
      FiniteGroup::direct_product(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2)));
  all.push_back(FiniteGroup::direct_product(
      FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
      FiniteGroup::cyclic(2)));
  all.push_back(FiniteGroup::dihedral(4));
  all.push_back(FiniteGroup::quaternion());

  std::vector<FiniteGroup> kept;
  for (auto& g : all)
    if (g.order() <= max_order) kept.push_back(std::move(g));
  std::stable_sort(kept.begin(), kept.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    return std::make_pair(a.order(), a.name()) < std::make_pair(b.order(), b.name());
  });
  return kept;
}

}  // namespace cyclehom::cycles
