// Acceptance gate: every shipped claim checked end to end, one line per
// criterion, nonzero exit when any of them fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cyclehom/bar_cycles.hpp"
#include "cyclehom/bredon.hpp"
#include "cyclehom/simplicial.hpp"
#include "cyclehom/smith.hpp"
#include "cyclehom/spectral.hpp"

namespace {

using cyclehom::BigInt;
using cyclehom::CoefficientRing;
using cyclehom::FgAbelianGroup;
using cyclehom::big_gcd;
using cyclehom::complexes::ChainComplex;
using cyclehom::complexes::SimplicialAbelianGroup;
using cyclehom::complexes::alternating_sum_complex;
using cyclehom::cycles::FiniteGroup;
using cyclehom::cycles::GroupAction;
using cyclehom::exact::IntMatrix;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

// Body returns an empty string on success, a short reason otherwise.
void criterion(int number, const std::string& label,
               const std::function<std::string()>& body) {
  std::string reason;
  try {
    reason = body();
  } catch (const std::exception& e) {
    reason = std::string("threw: ") + e.what();
  }
  if (reason.empty()) {
    std::printf("PASS criterion %d: %s\n", number, label.c_str());
  } else {
    ++failures;
    std::printf("FAIL criterion %d: %s — %s\n", number, label.c_str(), reason.c_str());
  }
  std::fflush(stdout);
}

std::optional<std::pair<int, std::string>> run_cli(const std::string& args) {
  const std::string command = std::string(CYCLEHOM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> chunk{};
  std::size_t got = 0;
  while ((got = fread(chunk.data(), 1, chunk.size(), pipe)) > 0) out.append(chunk.data(), got);
  const int status = pclose(pipe);
  if (status == -1 || !WIFEXITED(status)) return std::nullopt;
  return std::make_pair(WEXITSTATUS(status), std::move(out));
}

std::string describe(const FgAbelianGroup& h) { return h.to_string(); }

// -- criterion bodies -------------------------------------------------------

std::string row_dimension_closed_form() {
  const auto t0 = std::chrono::steady_clock::now();
  for (std::int64_t s : {1, 2, 3})
    if (cyclehom::bredon::cp_dim({s, 0}) != 0)
      return "row " + std::to_string(s) + " is nonzero";
  for (std::int64_t k = 1; k <= 50; ++k) {
    if (cyclehom::bredon::cp_dim({2 * k, 0}) != k - 1)
      return "row " + std::to_string(2 * k) + " misses k-1";
    if (cyclehom::bredon::cp_dim({2 * k + 1, 0}) != k - 1)
      return "row " + std::to_string(2 * k + 1) + " misses k-1";
  }
  const double dt = seconds_since(t0);
  if (dt >= 1.0) return "took " + std::to_string(dt) + " s, budget is 1 s";
  return "";
}

std::string cli_dimension_table() {
  const auto result = run_cli("bredon --gm-table 0..9");
  if (!result) return "could not run the CLI";
  if (result->first != 0) return "CLI exited with " + std::to_string(result->first);
  const nlohmann::json doc = nlohmann::json::parse(result->second, nullptr, false);
  if (doc.is_discarded()) return "CLI output is not JSON";
  const std::vector<int> expected = {1, 0, 0, 0, 1, 1, 2, 2, 3, 3};
  if (doc["rows"].size() != expected.size()) return "row count mismatch";
  for (std::size_t s = 0; s < expected.size(); ++s)
    if (doc["rows"][s]["dim"] != expected[s])
      return "degree " + std::to_string(s) + " reports " +
             doc["rows"][s]["dim"].dump() + ", expected " + std::to_string(expected[s]);
  return "";
}

std::string generator_table_strings() {
  for (std::int64_t k = 2; k <= 10; ++k) {
    // The published rows are an arithmetic progression: start at base
    // (0, -k) with exponent k, step the base by (-2, -1) and the exponent
    // by one, and stop at base (4-2k, 2-2k) with exponent 2k-2.
    std::string expected;
    std::int64_t a = 0, b = -k;
    for (std::int64_t e = k; e <= 2 * k - 2; ++e) {
      if (!expected.empty()) expected += ", ";
      expected += "x_(" + std::to_string(a) + "," + std::to_string(b) + ")·c^" +
                  std::to_string(e);
      a -= 2;
      b -= 1;
    }
    if (a + 2 != 4 - 2 * k || b + 1 != 2 - 2 * k)
      return "progression for k=" + std::to_string(k) + " ends off the published corner";

    std::string actual;
    for (const auto& monomial : cyclehom::bredon::row_generators(2 * k)) {
      if (!actual.empty()) actual += ", ";
      actual += monomial.to_string();
    }
    if (actual != expected)
      return "row " + std::to_string(2 * k) + " prints \"" + actual + "\", expected \"" +
             expected + "\"";
  }
  return "";
}

std::string cyclic_homology_closed_form() {
  const auto t0 = std::chrono::steady_clock::now();
  auto check_values = [](const std::vector<FgAbelianGroup>& h, std::int64_t m,
                         const std::string& route) -> std::string {
    for (std::int64_t i = 0; i <= 5; ++i) {
      const FgAbelianGroup expected = i == 0 ? FgAbelianGroup(1, {})
                                     : i % 2 == 1
                                         ? FgAbelianGroup(0, {BigInt(m)})
                                         : FgAbelianGroup();
      if (h[static_cast<std::size_t>(i)] != expected)
        return route + " m=" + std::to_string(m) + " degree " + std::to_string(i) + " is " +
               describe(h[static_cast<std::size_t>(i)]) + ", expected " + describe(expected);
    }
    return "";
  };

  // The production route reduces to the degeneracy-free quotient first.
  for (std::int64_t m = 2; m <= 6; ++m) {
    const auto h = cyclehom::cycles::normalized_bar_complex(FiniteGroup::cyclic(m), 6)
                       .homology_range(0, 5, 1);
    if (auto r = check_values(h, m, "reduced"); !r.empty()) return r;
  }
  // The unreduced complex reaches rank m^6 at the top; m = 6 at full rank
  // overruns the budget on one core and keeps to the route above.
  for (std::int64_t m = 2; m <= 5; ++m) {
    const auto h =
        alternating_sum_complex(cyclehom::cycles::bar_simplicial(FiniteGroup::cyclic(m), 6),
                                CoefficientRing::integers())
            .homology_range(0, 5, 1);
    if (auto r = check_values(h, m, "full"); !r.empty()) return r;
  }
  const double dt = seconds_since(t0);
  if (dt >= 30.0) return "took " + std::to_string(dt) + " s, budget is 30 s";
  return "";
}

std::string identified_equals_fixed() {
  const std::vector<CoefficientRing> coeffs = {CoefficientRing::rationals(),
                                               CoefficientRing::mod(BigInt(3)),
                                               CoefficientRing::mod(BigInt(5))};
  for (const auto& g : cyclehom::cycles::small_group_catalog(8)) {
    for (const auto& sigma : g.involutive_automorphisms()) {
      const GroupAction action(g, 2, {sigma});
      for (const auto& coeff : coeffs) {
        for (std::int64_t i = 0; i <= 3; ++i) {
          const FgAbelianGroup identified =
              cyclehom::cycles::galois_homology(action, coeff, i, 4);
          const FgAbelianGroup fixed =
              cyclehom::cycles::invariants_homology(action, coeff, i, 4);
          if (identified != fixed)
            return g.name() + " with " + coeff.to_string() + " at degree " +
                   std::to_string(i) + ": identified " + describe(identified) + ", fixed " +
                   describe(fixed);
        }
      }
    }
  }
  return "";
}

std::string spectral_window_collapse() {
  const std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                           FiniteGroup::cyclic(6),
                                           FiniteGroup::dihedral(3).with_name("s_3")};
  for (const auto& g : groups) {
    for (const std::int64_t ell : {2, 3}) {
      // One slot of window slack keeps every reported value equal to the
      // unbounded grid's, exactly as the CLI computes the 4x4 window.
      const auto grid =
          cyclehom::spectral::build_constant_row_grid(g, 5, 5, CoefficientRing::integers());
      const cyclehom::spectral::SpectralRun run(grid, BigInt(ell));
      const auto e2 = run.page(2);

      for (std::int64_t s = 0; s <= 4; ++s)
        for (std::int64_t t = 1; t <= 4; ++t)
          if (e2.dim(s, t) != 0)
            return g.name() + " mod " + std::to_string(ell) + ": E2(" + std::to_string(s) +
                   ", " + std::to_string(t) + ") is nonzero";

      // Independent oracle: dual cochain dimensions of the degeneracy-free
      // complex, nowhere near the grid machinery.
      const auto cochain =
          cyclehom::cycles::normalized_bar_complex(g, 5).tensor(CoefficientRing::mod(BigInt(ell)));
      for (std::int64_t s = 0; s <= 4; ++s) {
        const auto dim =
            static_cast<std::int64_t>(cochain.cohomology(s).torsion().size());
        if (e2.dim(s, 0) != dim)
          return g.name() + " mod " + std::to_string(ell) + ": bottom row at s=" +
                 std::to_string(s) + " is " + std::to_string(e2.dim(s, 0)) + ", cochain says " +
                 std::to_string(dim);
      }

      for (std::int64_t n = 0; n <= 4; ++n)
        if (!run.edge_is_isomorphism(n))
          return g.name() + " mod " + std::to_string(ell) + ": edge fails at degree " +
                 std::to_string(n);
    }
  }
  return "";
}

std::string boundary_squares(const ChainComplex& c, const std::string& what) {
  for (std::int64_t i = 1; i < c.top_degree(); ++i) {
    const IntMatrix square = c.differential(i).multiply(c.differential(i + 1));
    const bool zero = c.coefficients().is_mod()
                          ? square.is_zero_mod(c.coefficients().modulus())
                          : square.is_zero();
    if (!zero) return what + ": d∘d nonzero into degree " + std::to_string(i - 1);
  }
  return "";
}

std::string simplicial_identity_battery(const SimplicialAbelianGroup& s,
                                        const std::string& what) {
  const std::int64_t top = s.top_degree();
  for (std::int64_t i = 2; i <= top; ++i)
    for (std::int64_t a = 0; a < i; ++a)
      for (std::int64_t b = a + 1; b <= i; ++b)
        if (s.face(i - 1, a).multiply(s.face(i, b)) !=
            s.face(i - 1, b - 1).multiply(s.face(i, a)))
          return what + ": face-face identity fails at (" + std::to_string(a) + ", " +
                 std::to_string(b) + ") out of degree " + std::to_string(i);
  for (std::int64_t i = 0; i + 1 < top; ++i)
    for (std::int64_t a = 0; a <= i; ++a)
      for (std::int64_t b = a; b <= i; ++b)
        if (s.degeneracy(i + 1, a).multiply(s.degeneracy(i, b)) !=
            s.degeneracy(i + 1, b + 1).multiply(s.degeneracy(i, a)))
          return what + ": degeneracy-degeneracy identity fails at (" + std::to_string(a) +
                 ", " + std::to_string(b) + ") out of degree " + std::to_string(i);
  for (std::int64_t i = 0; i < top; ++i) {
    for (std::int64_t j = 0; j <= i; ++j) {
      for (std::int64_t a = 0; a <= i + 1; ++a) {
        const IntMatrix composite = s.face(i + 1, a).multiply(s.degeneracy(i, j));
        IntMatrix expected;
        if (a == j || a == j + 1)
          expected = IntMatrix::identity(s.rank(i));
        else if (a < j)
          expected = i >= 1 ? s.degeneracy(i - 1, j - 1).multiply(s.face(i, a)) : IntMatrix();
        else
          expected = i >= 1 ? s.degeneracy(i - 1, j).multiply(s.face(i, a - 1)) : IntMatrix();
        if (composite != expected)
          return what + ": mixed identity fails at face " + std::to_string(a) +
                 ", degeneracy " + std::to_string(j) + " out of degree " + std::to_string(i);
      }
    }
  }
  return "";
}

std::string property_suites() {
  // Boundary squares and simplicial identities across a construction sweep.
  for (const auto& g : cyclehom::cycles::small_group_catalog(6)) {
    const auto bar = cyclehom::cycles::bar_simplicial(g, 4);
    if (auto r = simplicial_identity_battery(bar, "bar of " + g.name()); !r.empty()) return r;

    const std::vector<ChainComplex> complexes = {
        cyclehom::cycles::normalized_bar_complex(g, 4),
        alternating_sum_complex(bar, CoefficientRing::integers()),
        alternating_sum_complex(bar, CoefficientRing::mod(BigInt(4))),
        cyclehom::cycles::normalized_orbit_complex(
            GroupAction::generated(g, g.involutive_automorphisms()), 4)};
    for (const auto& c : complexes)
      if (auto r = boundary_squares(c, "complex over " + g.name()); !r.empty()) return r;
  }

  // The reduced and unreduced complexes must agree on homology.
  for (const auto& g : cyclehom::cycles::small_group_catalog(8)) {
    const auto full = alternating_sum_complex(cyclehom::cycles::bar_simplicial(g, 5),
                                              CoefficientRing::integers())
                          .homology_range(0, 4, 1);
    const auto reduced =
        cyclehom::cycles::normalized_bar_complex(g, 5).homology_range(0, 4, 1);
    for (std::int64_t i = 0; i <= 4; ++i)
      if (full[static_cast<std::size_t>(i)] != reduced[static_cast<std::size_t>(i)])
        return "normalization disagreement for " + g.name() + " at degree " +
               std::to_string(i) + ": " + describe(full[static_cast<std::size_t>(i)]) +
               " vs " + describe(reduced[static_cast<std::size_t>(i)]);
  }

  // Covering composites act as scalars: image and identity structure.
  for (const auto& g : cyclehom::cycles::small_group_catalog(6)) {
    for (std::int64_t i = 0; i <= 3; ++i) {
      const FgAbelianGroup h =
          cyclehom::cycles::group_homology(g, CoefficientRing::integers(), i, 4);
      for (std::int64_t d = 1; d <= 3; ++d) {
        const auto endo = cyclehom::cycles::transfer_scalar(BigInt(d), h);
        std::vector<BigInt> image_torsion;
        for (const BigInt& t : h.torsion()) image_torsion.push_back(t / big_gcd(t, BigInt(d)));
        const FgAbelianGroup expected =
            FgAbelianGroup::from_torsion_multiset(h.free_rank(), image_torsion);
        if (endo.image != expected)
          return "scalar " + std::to_string(d) + " on H_" + std::to_string(i) + "(" +
                 g.name() + ") has image " + describe(endo.image) + ", expected " +
                 describe(expected);
        if (d == 1 && !endo.is_identity())
          return "scalar 1 on H_" + std::to_string(i) + "(" + g.name() + ") is not the identity";
      }
    }
  }

  // Smith reconstruction on a fixed random battery.
  std::mt19937 rng(20260816u);
  std::uniform_int_distribution<std::int64_t> dim_dist(1, 20);
  std::uniform_int_distribution<std::int64_t> value_dist(-9, 9);
  std::uniform_real_distribution<double> density_dist(0.1, 0.9);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t rows = dim_dist(rng), cols = dim_dist(rng);
    const double density = density_dist(rng);
    IntMatrix m(rows, cols);
    for (std::int64_t r = 0; r < rows; ++r)
      for (std::int64_t c = 0; c < cols; ++c)
        if (std::generate_canonical<double, 32>(rng) < density)
          m.set(r, c, BigInt(value_dist(rng)));

    const auto dec = cyclehom::exact::smith_normal_form(m);
    IntMatrix diagonal(rows, cols);
    for (std::size_t k = 0; k < dec.diag.size(); ++k) {
      if (dec.diag[k] < 1)
        return "trial " + std::to_string(trial) + ": diagonal entry below one";
      if (k > 0 && dec.diag[k] % dec.diag[k - 1] != 0)
        return "trial " + std::to_string(trial) + ": divisibility chain broken";
      diagonal.set(static_cast<std::int64_t>(k), static_cast<std::int64_t>(k), dec.diag[k]);
    }
    if (dec.left.multiply(m).multiply(dec.right) != diagonal)
      return "trial " + std::to_string(trial) + ": transforms do not reconstruct the diagonal";
    if (cyclehom::exact::invariant_factors(m) != dec.diag)
      return "trial " + std::to_string(trial) + ": factor lists disagree between routes";
  }
  return "";
}

std::string declared_limits() {
  std::printf(
      "INFO criterion 8: not reproduced at desk scale, by design: abutment identification "
      "over positive-dimensional symmetry; degree-4 invariants of the stable matrix family; "
      "the archimedean rank-one value (the multiplicative group of positive reals).\n");
  return "";
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();

  criterion(1, "projective-space row dimensions follow the k-1 closed form (k = 1..50, 1 s)",
            row_dimension_closed_form);
  criterion(2, "the CLI dimension table for degrees 0..9 emits the published sequence",
            cli_dimension_table);
  criterion(3, "even-row generator tables print the published strings verbatim (k = 2..10)",
            generator_table_strings);
  criterion(4, "cyclic-group homology matches the closed form (m = 2..6, degrees 0..5, 30 s)",
            cyclic_homology_closed_form);
  criterion(5, "identified classes equal fixed classes (order <= 8, all involutions, "
               "Q, Z/3, Z/5, degrees 0..3)",
            identified_equals_fixed);
  criterion(6, "constant-row spectral windows collapse onto group cohomology (4x4 window)",
            spectral_window_collapse);
  criterion(7, "property suites: boundary squares, simplicial identities, normalization "
               "agreement, covering scalars, Smith reconstruction",
            property_suites);
  criterion(8, "computations beyond desk scale are declared, not simulated", declared_limits);

  std::printf("%d of 8 criteria passed in %.1f s\n", 8 - failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
