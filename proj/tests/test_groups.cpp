#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "cyclehom/bar_cycles.hpp"
#include "cyclehom/errors.hpp"
#include "cyclehom/finite_group.hpp"
#include "cyclehom/group_action.hpp"
#include "oracles.hpp"

using cyclehom::BigInt;
using cyclehom::NotAnAutomorphism;
using cyclehom::ValidationError;
using cyclehom::cycles::FiniteGroup;
using cyclehom::cycles::GroupAction;
using cyclehom::cycles::orbit_basis;
using cyclehom::cycles::tuple_decode;
using cyclehom::cycles::tuple_encode;

namespace {

using Table = std::vector<std::vector<std::int64_t>>;

GroupAction single_generator_action(const FiniteGroup& g,
                                    const std::vector<std::int64_t>& sigma) {
  return GroupAction(g, oracles::permutation_order(sigma), {sigma});
}

// sigma(a) = -a is an automorphism of any cyclic group.
std::vector<std::int64_t> inversion(std::int64_t n) {
  std::vector<std::int64_t> p(n);
  for (std::int64_t a = 0; a < n; ++a) p[a] = (n - a) % n;
  return p;
}

std::vector<std::int64_t> conjugation_by(const FiniteGroup& g, std::int64_t h) {
  std::vector<std::int64_t> p(g.order());
  for (std::int64_t a = 0; a < g.order(); ++a) p[a] = g.mul(g.mul(h, a), g.inverse(h));
  return p;
}

}  // namespace

TEST_CASE("group construction names the violated axiom") {
  CHECK_THROWS_WITH_AS(FiniteGroup("bad", Table{}), "group table is empty", ValidationError);
  CHECK_THROWS_WITH_AS(FiniteGroup("bad", Table{{0, 1}, {1}}),
                       "group table is not square at row 1", ValidationError);
  CHECK_THROWS_WITH_AS(FiniteGroup("bad", Table{{0, 1}, {1, 5}}),
                       "closure fails: entry (1, 1) is out of range", ValidationError);
  CHECK_THROWS_WITH_AS(FiniteGroup("bad", Table{{0, 0}, {0, 0}}),
                       "identity axiom fails: no two-sided identity", ValidationError);
  CHECK_THROWS_WITH_AS(FiniteGroup("bad", Table{{0, 1}, {1, 1}}),
                       "inverse axiom fails: element 1 has no two-sided inverse",
                       ValidationError);
  // A commutative loop: identity and two-sided inverses exist, but
  // (1*1)*2 = 4 while 1*(1*2) = 0.
  Table loop{{0, 1, 2, 3, 4},
             {1, 2, 4, 3, 0},
             {2, 4, 4, 0, 1},
             {3, 3, 0, 1, 2},
             {4, 0, 1, 2, 3}};
  CHECK_THROWS_WITH_AS(FiniteGroup("bad", loop), "associativity fails at (1, 1, 2)",
                       ValidationError);
}

TEST_CASE("factories produce the intended groups") {
  FiniteGroup c6 = FiniteGroup::cyclic(6);
  CHECK(c6.order() == 6);
  CHECK(c6.identity() == 0);
  CHECK(c6.is_abelian());
  CHECK(c6.inverse(2) == 4);
  CHECK(c6.power(5, 3) == 3);
  CHECK(c6.power(2, -1) == 4);
  CHECK(c6.name() == "Z/6");

  FiniteGroup d3 = FiniteGroup::dihedral(3);
  CHECK(d3.order() == 6);
  CHECK_FALSE(d3.is_abelian());
  const std::int64_t r = 1, s = 3;
  CHECK(d3.power(r, 3) == d3.identity());
  CHECK(d3.mul(s, s) == d3.identity());
  CHECK(d3.mul(d3.mul(s, r), s) == d3.inverse(r));

  FiniteGroup q8 = FiniteGroup::quaternion();
  CHECK(q8.order() == 8);
  CHECK_FALSE(q8.is_abelian());
  const std::int64_t minus_one = 1, i = 2, j = 4, k = 6;
  CHECK(q8.mul(i, i) == minus_one);
  CHECK(q8.mul(j, j) == minus_one);
  CHECK(q8.mul(k, k) == minus_one);
  CHECK(q8.mul(i, j) == k);
  CHECK(q8.mul(j, i) == q8.mul(minus_one, k));
  std::int64_t involutions = 0;
  for (std::int64_t a = 0; a < 8; ++a)
    if (a != q8.identity() && q8.mul(a, a) == q8.identity()) ++involutions;
  CHECK(involutions == 1);  // only -1; the dihedral group of order 8 has five

  FiniteGroup c2xc3 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
  CHECK(c2xc3.name() == "Z/2 x Z/3");
  CHECK(c2xc3.order() == 6);
  CHECK(c2xc3.is_abelian());
  // (1,1) generates, so the product is cyclic of order 6.
  std::int64_t gen = 1 * 3 + 1, acc = gen, steps = 1;
  while (acc != c2xc3.identity()) {
    acc = c2xc3.mul(acc, gen);
    ++steps;
  }
  CHECK(steps == 6);
}

TEST_CASE("catalog lists each small group once") {
  auto all = cyclehom::cycles::small_group_catalog(8);
  REQUIRE(all.size() == 14);
  std::vector<std::pair<std::int64_t, std::string>> seen;
  for (const auto& g : all) seen.emplace_back(g.order(), g.name());
  std::vector<std::pair<std::int64_t, std::string>> expected{
      {1, "Z/1"},         {2, "Z/2"},
      {3, "Z/3"},         {4, "Z/2 x Z/2"},
      {4, "Z/4"},         {5, "Z/5"},
      {6, "S_3"},         {6, "Z/6"},
      {7, "Z/7"},         {8, "D_4"},
      {8, "Q_8"},         {8, "Z/2 x Z/2 x Z/2"},
      {8, "Z/4 x Z/2"},   {8, "Z/8"},
  };
  CHECK(seen == expected);
  CHECK(cyclehom::cycles::small_group_catalog(6).size() == 8);
  CHECK_THROWS_AS(cyclehom::cycles::small_group_catalog(9), ValidationError);
  CHECK_THROWS_AS(cyclehom::cycles::small_group_catalog(0), ValidationError);

  // Isomorphism invariants separate every pair of same order.
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      if (all[a].order() != all[b].order()) continue;
      auto signature = [](const FiniteGroup& g) {
        std::multiset<std::int64_t> orders;
        for (std::int64_t x = 0; x < g.order(); ++x) {
          std::int64_t acc = x, ord = 1;
          while (acc != g.identity()) {
            acc = g.mul(acc, x);
            ++ord;
          }
          orders.insert(ord);
        }
        return std::make_pair(g.is_abelian(), orders);
      };
      CHECK(signature(all[a]) != signature(all[b]));
    }
}

TEST_CASE("automorphism groups have their classical orders") {
  // |Aut|: phi(n) for cyclic groups; S_3 and D_4 are complete up to center
  // (inner = S_3, Aut(D_4) = D_4); GL(2,2) = S_3 for the Klein group,
  // GL(3,2) of order 168 for the cube; Aut(Q_8) = S_4.
  std::map<std::string, std::int64_t> expected{
      {"Z/1", 1},  {"Z/2", 1},  {"Z/3", 2},   {"Z/4", 2},
      {"Z/2 x Z/2", 6}, {"Z/5", 4}, {"Z/6", 2}, {"S_3", 6},
      {"Z/7", 6},  {"Z/8", 4},  {"Z/4 x Z/2", 8}, {"Z/2 x Z/2 x Z/2", 168},
      {"D_4", 8},  {"Q_8", 24},
  };
  for (const auto& g : cyclehom::cycles::small_group_catalog(8)) {
    auto autos = g.automorphisms();
    CHECK_MESSAGE(static_cast<std::int64_t>(autos.size()) == expected.at(g.name()),
                  g.name());

    auto involutive = g.involutive_automorphisms();
    std::set<std::vector<std::int64_t>> all_set(autos.begin(), autos.end());
    for (const auto& s : involutive) {
      CHECK(all_set.count(s) == 1);
      for (std::int64_t a = 0; a < g.order(); ++a) CHECK(s[s[a]] == a);
    }

    // Composition closure on the smaller groups.
    if (g.order() <= 6) {
      for (const auto& p : autos)
        for (const auto& q : autos) {
          std::vector<std::int64_t> pq(g.order());
          for (std::int64_t a = 0; a < g.order(); ++a) pq[a] = p[q[a]];
          CHECK(all_set.count(pq) == 1);
        }
    }
  }
  FiniteGroup big = FiniteGroup::direct_product(FiniteGroup::cyclic(4), FiniteGroup::cyclic(4));
  CHECK_THROWS_AS(big.automorphisms(), ValidationError);
}

TEST_CASE("group actions validate generators and close them up") {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  GroupAction trivial = GroupAction::trivial(c3);
  CHECK(trivial.order() == 1);
  CHECK(trivial.elements()[0] == std::vector<std::int64_t>{0, 1, 2});

  GroupAction mu3 = GroupAction(c3, 2, {inversion(3)});
  CHECK(mu3.order() == 2);
  CHECK(mu3.declared_order() == 2);
  CHECK_NOTHROW(GroupAction(c3, 4, {inversion(3)}));  // order 2 divides 4
  CHECK_THROWS_AS(GroupAction(c3, 3, {inversion(3)}), ValidationError);

  FiniteGroup c4 = FiniteGroup::cyclic(4);
  CHECK_THROWS_AS(GroupAction(c4, 2, {{0, 1, 3, 2}}), NotAnAutomorphism);
  CHECK_THROWS_AS(GroupAction(c4, 2, {{0, 0, 1, 2}}), NotAnAutomorphism);
  CHECK_THROWS_AS(GroupAction(c4, 0, {}), ValidationError);

  // Inner automorphisms of S_3 generate a symmetry group of order 6.
  FiniteGroup s3 = FiniteGroup::dihedral(3).with_name("S_3");
  GroupAction inner(s3, 6, {conjugation_by(s3, 1), conjugation_by(s3, 3)});
  CHECK(inner.order() == 6);
}

TEST_CASE("tuple codes are big-endian lexicographic") {
  CHECK(tuple_encode({}, 5) == 0);
  CHECK(tuple_encode({2, 0, 1}, 3) == 2 * 9 + 0 * 3 + 1);
  CHECK(tuple_decode(19, 3, 3) == std::vector<std::int64_t>{2, 0, 1});
  for (std::int64_t code = 0; code < 27; ++code)
    CHECK(tuple_encode(tuple_decode(code, 3, 3), 3) == code);
}

TEST_CASE("orbit bases match the hand-counted examples") {
  FiniteGroup c3 = FiniteGroup::cyclic(3);
  GroupAction mu3(c3, 2, {inversion(3)});
  auto deg1 = orbit_basis(mu3, 1);
  CHECK(deg1.orbit_count() == 2);
  CHECK(deg1.representatives == std::vector<std::vector<std::int64_t>>{{0}, {1}});
  CHECK(deg1.sizes == std::vector<std::int64_t>{1, 2});
  auto deg2 = orbit_basis(mu3, 2);
  CHECK(deg2.orbit_count() == 5);

  FiniteGroup c4 = FiniteGroup::cyclic(4);
  GroupAction mu4(c4, 2, {inversion(4)});
  auto m4deg1 = orbit_basis(mu4, 1);
  CHECK(m4deg1.orbit_count() == 3);
  CHECK(m4deg1.sizes == std::vector<std::int64_t>{1, 2, 1});

  auto empty = orbit_basis(mu3, 0);
  CHECK(empty.orbit_count() == 1);
  CHECK(empty.representatives[0].empty());

  GroupAction trivial = GroupAction::trivial(c4);
  auto plain = orbit_basis(trivial, 2);
  CHECK(plain.orbit_count() == 16);
  CHECK(std::all_of(plain.sizes.begin(), plain.sizes.end(),
                    [](std::int64_t s) { return s == 1; }));
}

TEST_CASE("orbit representatives are minimal and faces are well defined") {
  for (const auto& g : cyclehom::cycles::small_group_catalog(6)) {
    for (const auto& sigma : g.automorphisms()) {
      GroupAction action = single_generator_action(g, sigma);
      for (std::int64_t degree = 1; degree <= 3; ++degree) {
        auto basis = orbit_basis(action, degree);
        std::int64_t total = 0;
        for (auto s : basis.sizes) total += s;
        std::int64_t expected = 1;
        for (std::int64_t k = 0; k < degree; ++k) expected *= g.order();
        CHECK(total == expected);

        // Representatives are the lexicographic minima of their orbits.
        for (std::int64_t o = 0; o < basis.orbit_count(); ++o) {
          const auto& rep = basis.representatives[o];
          for (const auto& p : action.elements()) {
            std::vector<std::int64_t> image(rep.size());
            for (std::size_t k = 0; k < rep.size(); ++k) image[k] = p[rep[k]];
            CHECK(tuple_encode(image, g.order()) >= basis.representative_codes[o]);
          }
        }

        // The face of a tuple and the face of any translate share an orbit.
        auto min_code = [&](const std::vector<std::int64_t>& t) {
          std::int64_t best = -1;
          for (const auto& p : action.elements()) {
            std::vector<std::int64_t> image(t.size());
            for (std::size_t k = 0; k < t.size(); ++k) image[k] = p[t[k]];
            std::int64_t c = tuple_encode(image, g.order());
            if (best < 0 || c < best) best = c;
          }
          return best;
        };
        auto face_of = [&](const std::vector<std::int64_t>& t, std::int64_t k) {
          std::vector<std::int64_t> face;
          const auto d = static_cast<std::int64_t>(t.size());
          if (k == 0)
            face.assign(t.begin() + 1, t.end());
          else if (k == d)
            face.assign(t.begin(), t.end() - 1);
          else {
            for (std::int64_t j = 0; j + 1 < k; ++j) face.push_back(t[j]);
            face.push_back(g.mul(t[k - 1], t[k]));
            for (std::int64_t j = k + 1; j < d; ++j) face.push_back(t[j]);
          }
          return face;
        };
        for (std::int64_t code = 0; code < expected; ++code) {
          const auto t = tuple_decode(code, degree, g.order());
          for (std::int64_t k = 0; k <= degree; ++k) {
            const auto face = face_of(t, k);
            for (const auto& p : action.elements()) {
              std::vector<std::int64_t> moved(t.size());
              for (std::size_t x = 0; x < t.size(); ++x) moved[x] = p[t[x]];
              CHECK(min_code(face) == min_code(face_of(moved, k)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("bar construction ranks and homology on pinned cases") {
  using cyclehom::CoefficientRing;
  using cyclehom::FgAbelianGroup;
  using cyclehom::cycles::bar_simplicial;
  using cyclehom::cycles::normalized_bar_complex;

  // One-point space: every degree has rank 1 and homology vanishes above 0.
  auto point = bar_simplicial(FiniteGroup::trivial(), 4);
  auto point_complex =
      cyclehom::complexes::alternating_sum_complex(point, CoefficientRing::integers());
  CHECK(point_complex.homology(0) == FgAbelianGroup(1, {}));
  for (std::int64_t i = 1; i <= 3; ++i)
    CHECK(point_complex.homology(i) == FgAbelianGroup());

  // Rank bookkeeping: |G|^i raw, (|G|-1)^i normalized.
  FiniteGroup s3 = FiniteGroup::dihedral(3).with_name("S_3");
  auto raw = bar_simplicial(s3, 2);
  CHECK(raw.ranks() == std::vector<std::int64_t>{1, 6, 36});
  auto norm = normalized_bar_complex(s3, 2);
  CHECK(norm.rank(0) == 1);
  CHECK(norm.rank(1) == 5);
  CHECK(norm.rank(2) == 25);

  // Two-element group, truncation 3: Z, Z/2, 0 (periodic resolution).
  auto c2 = cyclehom::complexes::alternating_sum_complex(
      bar_simplicial(FiniteGroup::cyclic(2), 3), CoefficientRing::integers());
  CHECK(c2.homology(0) == FgAbelianGroup(1, {}));
  CHECK(c2.homology(1) == FgAbelianGroup(0, {BigInt(2)}));
  CHECK(c2.homology(2) == FgAbelianGroup());

  // Raw and normalized complexes agree on homology over Z and Z/4.
  for (const auto& g : cyclehom::cycles::small_group_catalog(4)) {
    auto full = bar_simplicial(g, 3);
    for (const auto& coeff :
         {CoefficientRing::integers(), CoefficientRing::mod(BigInt(4))}) {
      auto a = cyclehom::complexes::alternating_sum_complex(full, coeff);
      auto b = normalized_bar_complex(g, 3);
      auto bc = coeff.is_integers() ? b : b.tensor(coeff);
      for (std::int64_t i = 0; i <= 2; ++i) CHECK(a.homology(i) == bc.homology(i));
    }
  }
}
