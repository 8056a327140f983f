#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cyclehom/chain_complex.hpp"
#include "cyclehom/simplicial.hpp"
#include "oracles.hpp"

using cyclehom::BigInt;
using cyclehom::CoefficientRing;
using cyclehom::FgAbelianGroup;
using namespace cyclehom::complexes;

namespace {

// Free simplicial abelian group on the 1-simplex: a monotone map [i] -> [1]
// is the count t of its zero values, faces drop a coordinate, degeneracies
// repeat one.
SimplicialAbelianGroup interval(std::int64_t top) {
  std::vector<std::int64_t> ranks;
  for (std::int64_t i = 0; i <= top; ++i) ranks.push_back(i + 2);
  std::vector<std::vector<IntMatrix>> faces(static_cast<std::size_t>(top) + 1);
  std::vector<std::vector<IntMatrix>> degeneracies(static_cast<std::size_t>(top));
  for (std::int64_t i = 1; i <= top; ++i)
    for (std::int64_t k = 0; k <= i; ++k) {
      std::vector<std::int64_t> row_of_col;
      for (std::int64_t t = 0; t <= i + 1; ++t) row_of_col.push_back(k < t ? t - 1 : t);
      faces[static_cast<std::size_t>(i)].push_back(
          IntMatrix::basis_map(i + 1, i + 2, row_of_col));
    }
  for (std::int64_t i = 0; i < top; ++i)
    for (std::int64_t j = 0; j <= i; ++j) {
      std::vector<std::int64_t> row_of_col;
      for (std::int64_t t = 0; t <= i + 1; ++t) row_of_col.push_back(j < t ? t + 1 : t);
      degeneracies[static_cast<std::size_t>(i)].push_back(
          IntMatrix::basis_map(i + 3, i + 2, row_of_col));
    }
  return SimplicialAbelianGroup(std::move(ranks), std::move(faces), std::move(degeneracies));
}

SimplicialAbelianGroup constant_z(std::int64_t top) {
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(top) + 1, 1);
  std::vector<std::vector<IntMatrix>> faces(static_cast<std::size_t>(top) + 1);
  std::vector<std::vector<IntMatrix>> degeneracies(static_cast<std::size_t>(top));
  for (std::int64_t i = 1; i <= top; ++i)
    faces[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1,
                                              IntMatrix::identity(1));
  for (std::int64_t i = 0; i < top; ++i)
    degeneracies[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1,
                                                     IntMatrix::identity(1));
  return SimplicialAbelianGroup(std::move(ranks), std::move(faces), std::move(degeneracies));
}

// Two-block complex: C_i = Z^{a_i} + Z^{b_i}, d_i carries the b-part of C_i
// into the a-part of C_{i-1}; consecutive differentials then compose to zero
// for any choice of the blocks M_i.
ChainComplex random_block_complex(std::mt19937& rng, std::int64_t top,
                                  const CoefficientRing& coeff) {
  std::uniform_int_distribution<std::int64_t> dim(0, 4);
  std::uniform_int_distribution<int> val(-4, 4);
  std::uniform_int_distribution<int> density(0, 99);
  std::vector<std::int64_t> a, b, ranks;
  for (std::int64_t i = 0; i <= top; ++i) {
    a.push_back(dim(rng));
    b.push_back(dim(rng));
    ranks.push_back(a.back() + b.back());
  }
  std::vector<IntMatrix> diffs;
  for (std::int64_t i = 1; i <= top; ++i) {
    IntMatrix d(ranks[static_cast<std::size_t>(i - 1)], ranks[static_cast<std::size_t>(i)]);
    for (std::int64_t r = 0; r < a[static_cast<std::size_t>(i - 1)]; ++r)
      for (std::int64_t c = 0; c < b[static_cast<std::size_t>(i)]; ++c)
        if (density(rng) < 55) {
          int v = val(rng);
          if (v != 0) d.set(r, a[static_cast<std::size_t>(i)] + c, v);
        }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(coeff, std::move(ranks), std::move(diffs));
}

// Unimodular matrix and its inverse, accumulated from elementary row
// operations.
std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937& rng, std::int64_t n) {
  std::vector<std::vector<BigInt>> t(static_cast<std::size_t>(n),
                                     std::vector<BigInt>(static_cast<std::size_t>(n), 0));
  auto inv = t;
  for (std::int64_t i = 0; i < n; ++i) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
                                           inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  if (n > 1) {
    std::uniform_int_distribution<std::int64_t> idx(0, n - 1);
    std::uniform_int_distribution<int> val(-2, 2);
    for (std::int64_t ops = 0; ops < 4 * n; ++ops) {
      std::int64_t r1 = idx(rng), r2 = idx(rng);
      int v = val(rng);
      if (r1 == r2 || v == 0) continue;
      for (std::int64_t j = 0; j < n; ++j) {
        t[static_cast<std::size_t>(r1)][static_cast<std::size_t>(j)] +=
            v * t[static_cast<std::size_t>(r2)][static_cast<std::size_t>(j)];
        inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(r2)] -=
            v * inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(r1)];
      }
    }
  }
  IntMatrix tm(n, n), im(n, n);
  for (std::int64_t r = 0; r < n; ++r)
    for (std::int64_t c = 0; c < n; ++c) {
      tm.set(r, c, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      im.set(r, c, inv[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
  return {std::move(tm), std::move(im)};
}

}  // namespace

TEST_CASE("interval simplicial group is contractible") {
  SimplicialAbelianGroup s = interval(5);
  ChainComplex c = alternating_sum_complex(s, CoefficientRing::integers());
  CHECK(c.homology(0) == FgAbelianGroup(1, {}));
  for (std::int64_t i = 1; i <= 4; ++i) CHECK(c.homology(i).is_trivial());

  ChainComplex n = normalize(s, CoefficientRing::integers());
  CHECK(n.rank(0) == 2);
  CHECK(n.rank(1) == 1);
  for (std::int64_t i = 2; i <= 5; ++i) CHECK(n.rank(i) == 0);
  CHECK(n.homology(0) == FgAbelianGroup(1, {}));
  for (std::int64_t i = 1; i <= 4; ++i) CHECK(n.homology(i).is_trivial());
}

TEST_CASE("constant simplicial group has alternating differentials") {
  SimplicialAbelianGroup s = constant_z(6);
  ChainComplex c = alternating_sum_complex(s, CoefficientRing::integers());
  for (std::int64_t i = 1; i <= 6; ++i) {
    CHECK(c.differential(i).is_zero() == (i % 2 == 1));
    if (i % 2 == 0) CHECK(c.differential(i) == IntMatrix::identity(1));
  }
  CHECK(c.homology(0) == FgAbelianGroup(1, {}));
  for (std::int64_t i = 1; i <= 5; ++i) CHECK(c.homology(i).is_trivial());

  ChainComplex n = normalize(s, CoefficientRing::integers());
  CHECK(n.rank(0) == 1);
  for (std::int64_t i = 1; i <= 6; ++i) CHECK(n.rank(i) == 0);
}

TEST_CASE("simplicial identity violations are reported") {
  SUBCASE("tampered basis-map degeneracy") {
    std::vector<std::int64_t> ranks = {2, 3, 4};
    std::vector<std::vector<IntMatrix>> faces(3);
    std::vector<std::vector<IntMatrix>> degeneracies(2);
    SimplicialAbelianGroup good = interval(2);
    for (std::int64_t k = 0; k <= 1; ++k) faces[1].push_back(good.face(1, k));
    for (std::int64_t k = 0; k <= 2; ++k) faces[2].push_back(good.face(2, k));
    degeneracies[0].push_back(IntMatrix::basis_map(3, 2, {1, 2}));  // should be {0, 2}
    for (std::int64_t j = 0; j <= 1; ++j) degeneracies[1].push_back(good.degeneracy(1, j));
    CHECK_THROWS_AS(
        SimplicialAbelianGroup(std::move(ranks), std::move(faces), std::move(degeneracies)),
        cyclehom::SimplicialIdentityViolation);
  }

  SUBCASE("tampered dense face goes through the matrix path") {
    SimplicialAbelianGroup good = interval(2);
    std::vector<std::int64_t> ranks = {2, 3, 4};
    std::vector<std::vector<IntMatrix>> faces(3);
    std::vector<std::vector<IntMatrix>> degeneracies(2);
    faces[1] = {good.face(1, 0), good.face(1, 1)};
    faces[2] = {good.face(2, 0), good.face(2, 1), good.face(2, 2)};
    IntMatrix dense = good.face(2, 1);
    dense.add_to(0, 0, 1);
    dense.add_to(2, 0, 1);  // two entries in one column: not a basis map
    faces[2][1] = dense;
    degeneracies[0] = {good.degeneracy(0, 0)};
    degeneracies[1] = {good.degeneracy(1, 0), good.degeneracy(1, 1)};
    CHECK_THROWS_AS(
        SimplicialAbelianGroup(std::move(ranks), std::move(faces), std::move(degeneracies)),
        cyclehom::SimplicialIdentityViolation);
  }
}

TEST_CASE("chain complex construction validates shapes and composition") {
  using cyclehom::DimensionMismatch;
  using cyclehom::NotAComplex;
  auto mat1 = [](std::int64_t v) {
    IntMatrix m(1, 1);
    m.set(0, 0, v);
    return m;
  };
  CHECK_THROWS_AS(ChainComplex(CoefficientRing::integers(), {1, 1, 1}, {mat1(1), mat1(1)}),
                  NotAComplex);
  CHECK_THROWS_AS(ChainComplex(CoefficientRing::integers(), {1, 2, 1}, {mat1(1), mat1(1)}),
                  DimensionMismatch);
  CHECK_THROWS_AS(ChainComplex(CoefficientRing::integers(), {1, 1}, {}), DimensionMismatch);

  // 2 * 2 = 4 vanishes mod 4 but not mod 8.
  CHECK_NOTHROW(ChainComplex(CoefficientRing::mod(4), {1, 1, 1}, {mat1(2), mat1(2)}));
  CHECK_THROWS_AS(ChainComplex(CoefficientRing::mod(8), {1, 1, 1}, {mat1(2), mat1(2)}),
                  NotAComplex);
}

TEST_CASE("periodic mod-3 resolution: homology, base change, cohomology") {
  auto mat1 = [](std::int64_t v) {
    IntMatrix m(1, 1);
    m.set(0, 0, v);
    return m;
  };
  ChainComplex c(CoefficientRing::integers(), {1, 1, 1, 1, 1},
                 {mat1(3), mat1(0), mat1(3), mat1(0)});

  CHECK(c.homology(0) == FgAbelianGroup(0, {3}));
  CHECK(c.homology(1).is_trivial());
  CHECK(c.homology(2) == FgAbelianGroup(0, {3}));
  CHECK(c.homology(3).is_trivial());

  ChainComplex mod3 = c.tensor(CoefficientRing::mod(3));
  for (std::int64_t i = 0; i <= 3; ++i) CHECK(mod3.homology(i) == FgAbelianGroup(0, {3}));

  ChainComplex rational = c.tensor(CoefficientRing::rationals());
  for (std::int64_t i = 0; i <= 3; ++i) CHECK(rational.homology(i).is_trivial());

  CHECK(c.cohomology(0).is_trivial());
  CHECK(c.cohomology(1) == FgAbelianGroup(0, {3}));
  CHECK(c.cohomology(2).is_trivial());
  CHECK(c.cohomology(3) == FgAbelianGroup(0, {3}));

  CHECK_THROWS_AS(mod3.tensor(CoefficientRing::mod(3)), cyclehom::ValidationError);
}

TEST_CASE("degree bounds and truncation") {
  auto mat1 = [](std::int64_t v) {
    IntMatrix m(1, 1);
    m.set(0, 0, v);
    return m;
  };
  ChainComplex c(CoefficientRing::integers(), {1, 1, 1}, {mat1(3), mat1(0)});
  CHECK_THROWS_AS(c.homology(2), cyclehom::TruncationTooSmall);
  CHECK_THROWS_AS(c.cohomology(2), cyclehom::TruncationTooSmall);
  CHECK_THROWS_AS(c.homology_range(0, 2), cyclehom::TruncationTooSmall);
  CHECK_THROWS_AS(c.homology(-1), cyclehom::ValidationError);
  CHECK_THROWS_AS(c.homology_range(1, 0), cyclehom::ValidationError);
  CHECK_THROWS_AS(c.differential(0), cyclehom::ValidationError);
  CHECK_THROWS_AS(c.differential(3), cyclehom::ValidationError);
}

TEST_CASE("range homology matches per-degree homology across rings") {
  std::mt19937 rng(20260816);
  std::vector<CoefficientRing> rings = {
      CoefficientRing::integers(), CoefficientRing::rationals(), CoefficientRing::mod(2),
      CoefficientRing::mod(4),     CoefficientRing::mod(5),      CoefficientRing::mod(6)};
  for (int trial = 0; trial < 40; ++trial) {
    ChainComplex c = random_block_complex(rng, 5, rings[trial % rings.size()]);
    auto range = c.homology_range(0, 4, trial % 3 + 1);
    REQUIRE(range.size() == 5);
    for (std::int64_t i = 0; i <= 4; ++i) CHECK(range[static_cast<std::size_t>(i)] == c.homology(i));
  }
}

TEST_CASE("integer homology determines field and mod-p dimensions") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 25; ++trial) {
    ChainComplex c = random_block_complex(rng, 4, CoefficientRing::integers());
    auto h = c.homology_range(0, 3);

    ChainComplex rational = c.tensor(CoefficientRing::rationals());
    for (std::int64_t i = 0; i <= 3; ++i) {
      CHECK(rational.homology(i).free_rank() == h[static_cast<std::size_t>(i)].free_rank());
      // independent rank oracle for the free part
      std::int64_t r_out = i == 0 ? 0 : oracles::rational_rank(c.differential(i));
      std::int64_t r_in = oracles::rational_rank(c.differential(i + 1));
      CHECK(h[static_cast<std::size_t>(i)].free_rank() == c.rank(i) - r_out - r_in);
    }

    for (BigInt p : {BigInt(2), BigInt(3)}) {
      ChainComplex mp = c.tensor(CoefficientRing::mod(p));
      for (std::int64_t i = 0; i <= 3; ++i) {
        const FgAbelianGroup& hi = h[static_cast<std::size_t>(i)];
        std::int64_t expected = hi.free_rank() + hi.torsion_rank_at(p) +
                                (i == 0 ? 0 : h[static_cast<std::size_t>(i - 1)].torsion_rank_at(p));
        CHECK(mp.homology(i) ==
              FgAbelianGroup(0, std::vector<BigInt>(static_cast<std::size_t>(expected), p)));
      }
    }
  }
}

TEST_CASE("normalization is invariant under unimodular change of basis") {
  std::mt19937 rng(777);
  SimplicialAbelianGroup s = interval(4);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<IntMatrix> t, tinv;
    for (std::int64_t i = 0; i <= 4; ++i) {
      auto [m, minv] = random_unimodular(rng, s.rank(i));
      t.push_back(std::move(m));
      tinv.push_back(std::move(minv));
    }
    std::vector<std::vector<IntMatrix>> faces(5);
    std::vector<std::vector<IntMatrix>> degeneracies(4);
    for (std::int64_t i = 1; i <= 4; ++i)
      for (std::int64_t k = 0; k <= i; ++k)
        faces[static_cast<std::size_t>(i)].push_back(
            t[static_cast<std::size_t>(i - 1)]
                .multiply(s.face(i, k))
                .multiply(tinv[static_cast<std::size_t>(i)]));
    for (std::int64_t i = 0; i < 4; ++i)
      for (std::int64_t j = 0; j <= i; ++j)
        degeneracies[static_cast<std::size_t>(i)].push_back(
            t[static_cast<std::size_t>(i + 1)]
                .multiply(s.degeneracy(i, j))
                .multiply(tinv[static_cast<std::size_t>(i)]));
    SimplicialAbelianGroup conjugated(s.ranks(), std::move(faces), std::move(degeneracies));

    ChainComplex n = normalize(conjugated, CoefficientRing::integers());
    CHECK(n.rank(0) == 2);
    CHECK(n.rank(1) == 1);
    CHECK(n.rank(2) == 0);
    CHECK(n.homology(0) == FgAbelianGroup(1, {}));
    for (std::int64_t i = 1; i <= 3; ++i) CHECK(n.homology(i).is_trivial());
  }
}
