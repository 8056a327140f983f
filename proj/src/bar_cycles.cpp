#include "cyclehom/bar_cycles.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "cyclehom/errors.hpp"
#include "cyclehom/homology.hpp"
#include "cyclehom/lattice.hpp"
#include "cyclehom/smith.hpp"

namespace cyclehom::cycles {

namespace {

std::int64_t power_count(std::int64_t base, std::int64_t exp) {
  std::int64_t out = 1;
  for (std::int64_t k = 0; k < exp; ++k) {
    out *= base;
    if (out > 100'000'000)
      throw ValidationError("basis of size " + std::to_string(base) + "^" +
                            std::to_string(exp) + " is too large for exact enumeration");
  }
  return out;
}

std::vector<std::int64_t> bar_face(const FiniteGroup& g,
                                   const std::vector<std::int64_t>& t, std::int64_t k) {
  const auto i = static_cast<std::int64_t>(t.size());
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(i - 1));
  if (k == 0) {
    out.assign(t.begin() + 1, t.end());
  } else if (k == i) {
    out.assign(t.begin(), t.end() - 1);
  } else {
    for (std::int64_t j = 0; j + 1 < k; ++j) out.push_back(t[j]);
    out.push_back(g.mul(t[k - 1], t[k]));
    for (std::int64_t j = k + 1; j < i; ++j) out.push_back(t[j]);
  }
  return out;
}

std::vector<std::int64_t> bar_degeneracy(const FiniteGroup& g,
                                         const std::vector<std::int64_t>& t,
                                         std::int64_t j) {
  std::vector<std::int64_t> out(t.begin(), t.begin() + j);
  out.push_back(g.identity());
  out.insert(out.end(), t.begin() + j, t.end());
  return out;
}

// Codes over the non-identity elements, in radix |G|-1; encode returns -1
// for tuples that contain the identity (degenerate ones).
struct NdCodec {
  const FiniteGroup* g;
  std::int64_t radix;
  std::vector<std::int64_t> nonid;
  std::vector<std::int64_t> digit_of;

  explicit NdCodec(const FiniteGroup& group) : g(&group), radix(group.order() - 1) {
    digit_of.assign(group.order(), -1);
    for (std::int64_t a = 0; a < group.order(); ++a)
      if (a != group.identity()) {
        digit_of[a] = static_cast<std::int64_t>(nonid.size());
        nonid.push_back(a);
      }
  }

  std::int64_t count(std::int64_t degree) const { return power_count(radix, degree); }

  std::vector<std::int64_t> decode(std::int64_t code, std::int64_t degree) const {
    std::vector<std::int64_t> t(degree);
    for (std::int64_t k = degree - 1; k >= 0; --k) {
      t[k] = nonid[code % radix];
      code /= radix;
    }
    return t;
  }

  std::int64_t encode(const std::vector<std::int64_t>& t) const {
    std::int64_t code = 0;
    for (auto a : t) {
      if (digit_of[a] < 0) return -1;
      code = code * radix + digit_of[a];
    }
    return code;
  }
};

struct NdOrbitLevel {
  std::vector<std::int64_t> rep_codes;
  std::vector<std::int64_t> sizes;
  std::unordered_map<std::int64_t, std::int64_t> index_of;
};

NdOrbitLevel nd_orbit_level(const GroupAction& action, const NdCodec& codec,
                            std::int64_t degree) {
  NdOrbitLevel level;
  const std::int64_t total = codec.count(degree);
  std::vector<char> visited(total, 0);
  std::vector<std::int64_t> orbit;
  for (std::int64_t code = 0; code < total; ++code) {
    if (visited[code]) continue;
    const auto t = codec.decode(code, degree);
    orbit.clear();
    for (const auto& p : action.elements()) {
      std::vector<std::int64_t> image(t.size());
      for (std::size_t k = 0; k < t.size(); ++k) image[k] = p[t[k]];
      orbit.push_back(codec.encode(image));
    }
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (auto c : orbit) visited[c] = 1;
    level.index_of.emplace(code, static_cast<std::int64_t>(level.rep_codes.size()));
    level.rep_codes.push_back(code);
    level.sizes.push_back(static_cast<std::int64_t>(orbit.size()));
  }
  return level;
}

std::int64_t nd_min_code(const GroupAction& action, const NdCodec& codec,
                         const std::vector<std::int64_t>& t) {
  std::int64_t best = -1;
  for (const auto& p : action.elements()) {
    std::vector<std::int64_t> image(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) image[k] = p[t[k]];
    const std::int64_t code = codec.encode(image);
    if (best < 0 || code < best) best = code;
  }
  return best;
}

void check_automorphism(const FiniteGroup& g, const std::vector<std::int64_t>& perm) {
  const std::int64_t n = g.order();
  if (static_cast<std::int64_t>(perm.size()) != n)
    throw NotAnAutomorphism("permutation must list one image per element");
  std::vector<char> seen(n, 0);
  for (auto v : perm) {
    if (v < 0 || v >= n || seen[v]) throw NotAnAutomorphism("images do not form a permutation");
    seen[v] = 1;
  }
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b]))
        throw NotAnAutomorphism("permutation does not respect multiplication at (" +
                                std::to_string(a) + ", " + std::to_string(b) + ")");
}

void check_homomorphism(const FiniteGroup& src, const FiniteGroup& dst,
                        const std::vector<std::int64_t>& hom) {
  if (static_cast<std::int64_t>(hom.size()) != src.order())
    throw NotAHomomorphism("map must list one image per source element");
  for (auto v : hom)
    if (v < 0 || v >= dst.order()) throw NotAHomomorphism("image index out of range");
  for (std::int64_t a = 0; a < src.order(); ++a)
    for (std::int64_t b = 0; b < src.order(); ++b)
      if (hom[src.mul(a, b)] != dst.mul(hom[a], hom[b]))
        throw NotAHomomorphism("map does not respect multiplication at (" +
                               std::to_string(a) + ", " + std::to_string(b) + ")");
}

void check_degree_window(std::int64_t degree, std::int64_t max_degree) {
  if (degree < 0) throw ValidationError("homology degree must be nonnegative");
  if (max_degree < degree + 1)
    throw TruncationTooSmall("degree " + std::to_string(degree) +
                             " needs truncation at least " + std::to_string(degree + 1) +
                             ", got " + std::to_string(max_degree));
}

struct ChainWindow {
  IntMatrix d_out;  // boundary leaving the requested degree
  IntMatrix d_in;   // boundary arriving at it
  std::vector<IntMatrix> sigmas;
};

ChainWindow chain_window(const GroupAction& action, std::int64_t degree) {
  ChainWindow w;
  w.d_out = normalized_bar_differential(action.group(), degree);
  w.d_in = normalized_bar_differential(action.group(), degree + 1);
  w.sigmas.reserve(action.generators().size());
  for (const auto& s : action.generators())
    w.sigmas.push_back(normalized_chain_symmetry(action.group(), s, degree));
  return w;
}

struct CanonicalCoords {
  FgAbelianGroup group;
  std::vector<BigInt> factors;  // 0 marks a free coordinate
  IntMatrix project;            // canonical x ambient
  IntMatrix section;            // ambient x canonical
};

// Canonical coordinates on Z^ambient / im(relations): free coordinates
// first, then one per invariant factor > 1 in increasing order.
CanonicalCoords canonicalize_presentation(std::int64_t ambient, const IntMatrix& relations) {
  exact::SmithOptions opts;
  opts.left = opts.left_inverse = true;
  exact::SmithResult s = exact::smith_reduce(relations, opts);
  std::vector<std::int64_t> keep;
  std::vector<BigInt> factors;
  for (std::int64_t r = s.rank; r < ambient; ++r) {
    keep.push_back(r);
    factors.emplace_back(0);
  }
  for (std::int64_t j = 0; j < s.rank; ++j)
    if (s.diag[static_cast<std::size_t>(j)] > 1) {
      keep.push_back(j);
      factors.push_back(s.diag[static_cast<std::size_t>(j)]);
    }
  CanonicalCoords out;
  out.project = s.left->submatrix_rows(keep);
  out.section = s.left_inverse->submatrix_cols(keep);
  out.factors = std::move(factors);
  out.group = FgAbelianGroup::from_invariant_factors(ambient - s.rank, s.diag);
  return out;
}

IntMatrix normalized_chain_map(const FiniteGroup& src, const FiniteGroup& dst,
                               const std::vector<std::int64_t>& hom, std::int64_t degree) {
  NdCodec cs(src), cd(dst);
  IntMatrix phi(cd.count(degree), cs.count(degree));
  for (std::int64_t col = 0; col < cs.count(degree); ++col) {
    auto t = cs.decode(col, degree);
    for (auto& a : t) a = hom[a];
    const std::int64_t row = cd.encode(t);
    if (row >= 0) phi.set(row, col, BigInt(1));
  }
  return phi;
}

}  // namespace

SimplicialAbelianGroup bar_simplicial(const FiniteGroup& g, std::int64_t max_degree) {
  if (max_degree < 0) throw ValidationError("truncation degree must be nonnegative");
  const std::int64_t n = g.order();
  std::vector<std::int64_t> ranks(max_degree + 1);
  for (std::int64_t i = 0; i <= max_degree; ++i) ranks[i] = power_count(n, i);

  std::vector<std::vector<IntMatrix>> faces(max_degree + 1);
  std::vector<std::vector<IntMatrix>> degeneracies(max_degree);
  for (std::int64_t i = 1; i <= max_degree; ++i) {
    for (std::int64_t k = 0; k <= i; ++k) {
      std::vector<std::int64_t> row_of_col(ranks[i]);
      for (std::int64_t code = 0; code < ranks[i]; ++code)
        row_of_col[code] = tuple_encode(bar_face(g, tuple_decode(code, i, n), k), n);
      faces[i].push_back(IntMatrix::basis_map(ranks[i - 1], ranks[i], row_of_col));
    }
  }
  for (std::int64_t i = 0; i < max_degree; ++i) {
    for (std::int64_t j = 0; j <= i; ++j) {
      std::vector<std::int64_t> row_of_col(ranks[i]);
      for (std::int64_t code = 0; code < ranks[i]; ++code)
        row_of_col[code] = tuple_encode(bar_degeneracy(g, tuple_decode(code, i, n), j), n);
      degeneracies[i].push_back(IntMatrix::basis_map(ranks[i + 1], ranks[i], row_of_col));
    }
  }
  return SimplicialAbelianGroup(std::move(ranks), std::move(faces), std::move(degeneracies));
}

SimplicialAbelianGroup orbit_simplicial(const GroupAction& action, std::int64_t max_degree) {
  if (max_degree < 0) throw ValidationError("truncation degree must be nonnegative");
  const FiniteGroup& g = action.group();
  const std::int64_t n = g.order();

  std::vector<OrbitBasis> levels;
  levels.reserve(max_degree + 1);
  std::vector<std::unordered_map<std::int64_t, std::int64_t>> index_of(max_degree + 1);
  for (std::int64_t i = 0; i <= max_degree; ++i) {
    levels.push_back(orbit_basis(action, i));
    for (std::int64_t o = 0; o < levels[i].orbit_count(); ++o)
      index_of[i].emplace(levels[i].representative_codes[o], o);
  }

  const auto min_code = [&](const std::vector<std::int64_t>& t) {
    std::int64_t best = -1;
    for (const auto& p : action.elements()) {
      std::vector<std::int64_t> image(t.size());
      for (std::size_t k = 0; k < t.size(); ++k) image[k] = p[t[k]];
      const std::int64_t code = tuple_encode(image, n);
      if (best < 0 || code < best) best = code;
    }
    return best;
  };

  std::vector<std::int64_t> ranks(max_degree + 1);
  for (std::int64_t i = 0; i <= max_degree; ++i) ranks[i] = levels[i].orbit_count();

  std::vector<std::vector<IntMatrix>> faces(max_degree + 1);
  std::vector<std::vector<IntMatrix>> degeneracies(max_degree);
  for (std::int64_t i = 1; i <= max_degree; ++i) {
    for (std::int64_t k = 0; k <= i; ++k) {
      IntMatrix f(ranks[i - 1], ranks[i]);
      for (std::int64_t o = 0; o < ranks[i]; ++o) {
        const auto u = bar_face(g, levels[i].representatives[o], k);
        const std::int64_t row = index_of[i - 1].at(min_code(u));
        f.set(row, o, BigInt(levels[i].sizes[o] / levels[i - 1].sizes[row]));
      }
      faces[i].push_back(std::move(f));
    }
  }
  for (std::int64_t i = 0; i < max_degree; ++i) {
    for (std::int64_t j = 0; j <= i; ++j) {
      std::vector<std::int64_t> row_of_col(ranks[i]);
      for (std::int64_t o = 0; o < ranks[i]; ++o) {
        const auto u = bar_degeneracy(g, levels[i].representatives[o], j);
        row_of_col[o] = index_of[i + 1].at(min_code(u));
      }
      degeneracies[i].push_back(IntMatrix::basis_map(ranks[i + 1], ranks[i], row_of_col));
    }
  }
  return SimplicialAbelianGroup(std::move(ranks), std::move(faces), std::move(degeneracies));
}

ChainComplex orbit_complex(const GroupAction& action, std::int64_t max_degree) {
  return complexes::alternating_sum_complex(orbit_simplicial(action, max_degree),
                                            CoefficientRing::integers());
}

IntMatrix normalized_bar_differential(const FiniteGroup& g, std::int64_t degree) {
  if (degree < 0) throw ValidationError("differential degree must be nonnegative");
  NdCodec codec(g);
  if (degree == 0) return IntMatrix(0, codec.count(0));
  IntMatrix d(codec.count(degree - 1), codec.count(degree));
  for (std::int64_t col = 0; col < codec.count(degree); ++col) {
    const auto t = codec.decode(col, degree);
    for (std::int64_t k = 0; k <= degree; ++k) {
      const std::int64_t row = codec.encode(bar_face(g, t, k));
      if (row >= 0) d.add_to(row, col, k % 2 ? BigInt(-1) : BigInt(1));
    }
  }
  return d;
}

IntMatrix normalized_chain_symmetry(const FiniteGroup& g,
                                    const std::vector<std::int64_t>& automorphism,
                                    std::int64_t degree) {
  check_automorphism(g, automorphism);
  NdCodec codec(g);
  const std::int64_t count = codec.count(degree);
  std::vector<std::int64_t> row_of_col(count);
  for (std::int64_t code = 0; code < count; ++code) {
    auto t = codec.decode(code, degree);
    for (auto& a : t) a = automorphism[a];
    row_of_col[code] = codec.encode(t);
  }
  return IntMatrix::basis_map(count, count, row_of_col);
}

ChainComplex normalized_orbit_complex(const GroupAction& action, std::int64_t max_degree) {
  if (max_degree < 0) throw ValidationError("truncation degree must be nonnegative");
  const FiniteGroup& g = action.group();
  NdCodec codec(g);

  std::vector<NdOrbitLevel> levels;
  levels.reserve(max_degree + 1);
  for (std::int64_t i = 0; i <= max_degree; ++i)
    levels.push_back(nd_orbit_level(action, codec, i));

  std::vector<std::int64_t> ranks(max_degree + 1);
  for (std::int64_t i = 0; i <= max_degree; ++i)
    ranks[i] = static_cast<std::int64_t>(levels[i].rep_codes.size());

  std::vector<IntMatrix> diffs;
  diffs.reserve(max_degree);
  for (std::int64_t i = 1; i <= max_degree; ++i) {
    IntMatrix d(ranks[i - 1], ranks[i]);
    for (std::int64_t o = 0; o < ranks[i]; ++o) {
      const auto t = codec.decode(levels[i].rep_codes[o], i);
      for (std::int64_t k = 0; k <= i; ++k) {
        const auto u = bar_face(g, t, k);
        if (codec.encode(u) < 0) continue;
        const std::int64_t row = levels[i - 1].index_of.at(nd_min_code(action, codec, u));
        BigInt coeff(levels[i].sizes[o] / levels[i - 1].sizes[row]);
        d.add_to(row, o, k % 2 ? BigInt(-coeff) : coeff);
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(CoefficientRing::integers(), std::move(ranks), std::move(diffs));
}

ChainComplex normalized_bar_complex(const FiniteGroup& g, std::int64_t max_degree) {
  return normalized_orbit_complex(GroupAction::trivial(g), max_degree);
}

FgAbelianGroup galois_homology(const GroupAction& action, const CoefficientRing& coeff,
                               std::int64_t degree, std::int64_t max_degree) {
  check_degree_window(degree, max_degree);
  ChainComplex c = normalized_orbit_complex(action, max_degree);
  if (!coeff.is_integers()) c = c.tensor(coeff);
  return c.homology(degree);
}

FgAbelianGroup group_homology(const FiniteGroup& g, const CoefficientRing& coeff,
                              std::int64_t degree, std::int64_t max_degree) {
  return galois_homology(GroupAction::trivial(g), coeff, degree, max_degree);
}

FgAbelianGroup invariants_homology(const GroupAction& action, const CoefficientRing& coeff,
                                   std::int64_t degree, std::int64_t max_degree) {
  check_degree_window(degree, max_degree);
  if (coeff.is_integers() || (coeff.is_mod() && !coeff.has_prime_modulus()))
    return invariants_homology_by_lifting(action, coeff, degree, max_degree);

  // Field case. With generators s_1..s_m, the block matrix
  //   M = [ d_out     0       ...  0      ]
  //       [ s_1 - 1  -d_in         0      ]
  //       [ ...            ...            ]
  //       [ s_m - 1   0        ... -d_in  ]
  // has kernel projecting onto { x in ker d_out : s x - x in im d_in },
  // with fibers of dimension m * dim ker d_in, so
  //   dim H^fixed = n_i + (m - 1) * rank d_in - rank M.
  ChainWindow w = chain_window(action, degree);
  const std::int64_t n_mid = w.d_in.rows();
  const std::int64_t n_next = w.d_in.cols();
  const auto m = static_cast<std::int64_t>(w.sigmas.size());

  IntMatrix block(w.d_out.rows() + m * n_mid, n_mid + m * n_next);
  w.d_out.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
    block.set(r, c, v);
  });
  for (std::int64_t s = 0; s < m; ++s) {
    const std::int64_t row0 = w.d_out.rows() + s * n_mid;
    const std::int64_t col0 = n_mid + s * n_next;
    w.sigmas[s].for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
      block.add_to(row0 + r, c, v);
    });
    for (std::int64_t d = 0; d < n_mid; ++d) block.add_to(row0 + d, d, BigInt(-1));
    w.d_in.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
      block.set(row0 + r, col0 + c, -v);
    });
  }

  if (coeff.is_rationals()) {
    const std::int64_t dim =
        n_mid + (m - 1) * exact::integer_rank(w.d_in) - exact::integer_rank(block);
    return FgAbelianGroup(dim, {});
  }
  const BigInt& p = coeff.modulus();
  const std::int64_t dim =
      n_mid + (m - 1) * exact::rank_mod_p(w.d_in, p) - exact::rank_mod_p(block, p);
  return FgAbelianGroup(0, std::vector<BigInt>(static_cast<std::size_t>(dim), p));
}

FgAbelianGroup invariants_homology_by_lifting(const GroupAction& action,
                                              const CoefficientRing& coeff,
                                              std::int64_t degree, std::int64_t max_degree) {
  check_degree_window(degree, max_degree);
  if (coeff.is_rationals())
    throw UnsupportedCoefficient(
        "the lifting path needs a lattice; rational invariants take the rank route");
  ChainWindow w = chain_window(action, degree);

  if (coeff.is_integers()) {
    IntMatrix kernel = exact::kernel_basis(w.d_out);
    IntMatrix relations = exact::solve_exact(kernel, w.d_in);
    std::vector<IntMatrix> endos;
    endos.reserve(w.sigmas.size());
    for (const auto& sigma : w.sigmas)
      endos.push_back(exact::solve_exact(kernel, sigma.multiply(kernel)));
    return exact::fixed_subquotient(kernel.cols(), relations, endos);
  }

  exact::ModCoordinates coords(w.d_in, w.d_out, coeff.modulus());
  std::vector<IntMatrix> endos;
  endos.reserve(w.sigmas.size());
  for (const auto& sigma : w.sigmas) endos.push_back(coords.lift_endo(sigma));
  return exact::fixed_subquotient(coords.ambient(), coords.relations(), endos);
}

bool ScalarEndomorphism::is_identity() const {
  if (scalar == 1) return true;
  if (domain.free_rank() > 0) return false;
  if (domain.torsion().empty()) return true;
  return (scalar - 1) % domain.torsion().back() == 0;
}

ScalarEndomorphism transfer_scalar(const BigInt& scalar, const FgAbelianGroup& domain) {
  if (scalar < 1) throw ValidationError("cover degree must be positive");
  std::vector<BigInt> torsion;
  for (const auto& t : domain.torsion()) {
    BigInt q = t / big_gcd(t, scalar);
    if (q > 1) torsion.push_back(std::move(q));
  }
  return ScalarEndomorphism{scalar, domain,
                            FgAbelianGroup(domain.free_rank(), std::move(torsion))};
}

IntMatrix reduce_induced_rows(const IntMatrix& m, const std::vector<BigInt>& factors) {
  if (static_cast<std::int64_t>(factors.size()) != m.rows())
    throw DimensionMismatch("reduce_induced_rows: one factor per row required");
  IntMatrix out(m.rows(), m.cols());
  m.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
    const BigInt& t = factors[static_cast<std::size_t>(r)];
    if (t == 0) {
      out.set(r, c, v);
      return;
    }
    BigInt red = v % t;
    if (red < 0) red += t;
    out.set(r, c, std::move(red));
  });
  return out;
}

InducedMap induced_map(const FiniteGroup& source, const FiniteGroup& target,
                       const std::vector<std::int64_t>& hom, std::int64_t degree,
                       const CoefficientRing& coeff, std::int64_t max_degree) {
  check_degree_window(degree, max_degree);
  check_homomorphism(source, target, hom);

  IntMatrix ds_out = normalized_bar_differential(source, degree);
  IntMatrix ds_in = normalized_bar_differential(source, degree + 1);
  IntMatrix dt_out = normalized_bar_differential(target, degree);
  IntMatrix dt_in = normalized_bar_differential(target, degree + 1);
  IntMatrix phi = normalized_chain_map(source, target, hom, degree);

  if (coeff.is_mod()) {
    exact::ModCoordinates src_coords(ds_in, ds_out, coeff.modulus());
    exact::ModCoordinates tgt_coords(dt_in, dt_out, coeff.modulus());
    IntMatrix lifted = tgt_coords.lift_columns(phi.multiply(src_coords.lattice()));
    CanonicalCoords cs = canonicalize_presentation(src_coords.ambient(), src_coords.relations());
    CanonicalCoords ct = canonicalize_presentation(tgt_coords.ambient(), tgt_coords.relations());
    IntMatrix matrix = reduce_induced_rows(
        ct.project.multiply(lifted).multiply(cs.section), ct.factors);
    return InducedMap{cs.group, ct.group, std::move(cs.factors), std::move(ct.factors),
                      std::move(matrix)};
  }

  IntMatrix src_kernel = exact::kernel_basis(ds_out);
  IntMatrix tgt_kernel = exact::kernel_basis(dt_out);
  IntMatrix lifted = exact::solve_exact(tgt_kernel, phi.multiply(src_kernel));
  CanonicalCoords cs =
      canonicalize_presentation(src_kernel.cols(), exact::solve_exact(src_kernel, ds_in));
  CanonicalCoords ct =
      canonicalize_presentation(tgt_kernel.cols(), exact::solve_exact(tgt_kernel, dt_in));
  IntMatrix matrix = ct.project.multiply(lifted).multiply(cs.section);

  if (coeff.is_integers()) {
    matrix = reduce_induced_rows(matrix, ct.factors);
    return InducedMap{cs.group, ct.group, std::move(cs.factors), std::move(ct.factors),
                      std::move(matrix)};
  }

  // Rationals: torsion coordinates die, the leading free blocks remain.
  std::int64_t src_free = 0, tgt_free = 0;
  while (src_free < static_cast<std::int64_t>(cs.factors.size()) && cs.factors[src_free] == 0)
    ++src_free;
  while (tgt_free < static_cast<std::int64_t>(ct.factors.size()) && ct.factors[tgt_free] == 0)
    ++tgt_free;
  std::vector<std::int64_t> rows(tgt_free), cols(src_free);
  for (std::int64_t r = 0; r < tgt_free; ++r) rows[r] = r;
  for (std::int64_t c = 0; c < src_free; ++c) cols[c] = c;
  return InducedMap{FgAbelianGroup(src_free, {}), FgAbelianGroup(tgt_free, {}),
                    std::vector<BigInt>(static_cast<std::size_t>(src_free), BigInt(0)),
                    std::vector<BigInt>(static_cast<std::size_t>(tgt_free), BigInt(0)),
                    matrix.submatrix_rows(rows).submatrix_cols(cols)};
}

}  // namespace cyclehom::cycles
