#include "cyclehom/simplicial.hpp"

#include <set>
#include <string>
#include <utility>

#include "cyclehom/errors.hpp"
#include "cyclehom/smith.hpp"

namespace cyclehom::complexes {

namespace {

// Targets-with-coefficients view of a basis map, one (row, value) per column.
using BasisRep = std::vector<std::pair<std::int64_t, BigInt>>;

BasisRep compose_reps(const BasisRep& outer, const BasisRep& inner) {
  BasisRep out;
  out.reserve(inner.size());
  for (const auto& [mid, v] : inner) {
    const auto& [row, w] = outer[static_cast<std::size_t>(mid)];
    out.push_back({row, v * w});
  }
  return out;
}

BasisRep identity_rep(std::int64_t n) {
  BasisRep out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) out.push_back({j, 1});
  return out;
}

std::string face_name(std::int64_t i, std::int64_t k) {
  return "face_" + std::to_string(k) + " out of degree " + std::to_string(i);
}

std::string degeneracy_name(std::int64_t i, std::int64_t j) {
  return "degeneracy_" + std::to_string(j) + " out of degree " + std::to_string(i);
}

// Walks every simplicial identity inside the truncation; Map is either an
// IntMatrix or a BasisRep, with composition/equality/identity supplied.
template <typename Map, typename GetF, typename GetS, typename Compose, typename Equal,
          typename MakeId>
void walk_identities(std::int64_t top, const std::vector<std::int64_t>& ranks, GetF face,
                     GetS degeneracy, Compose compose, Equal equal, MakeId make_identity) {
  auto fail = [](const std::string& lhs, const std::string& rhs) {
    throw SimplicialIdentityViolation(lhs + " != " + rhs);
  };

  for (std::int64_t i = 2; i <= top; ++i)
    for (std::int64_t k = 1; k <= i; ++k)
      for (std::int64_t j = 0; j < k; ++j) {
        Map lhs = compose(face(i - 1, j), face(i, k));
        Map rhs = compose(face(i - 1, k - 1), face(i, j));
        if (!equal(lhs, rhs))
          fail(face_name(i - 1, j) + " * " + face_name(i, k),
               face_name(i - 1, k - 1) + " * " + face_name(i, j));
      }

  for (std::int64_t i = 0; i + 2 <= top; ++i)
    for (std::int64_t b = 0; b <= i; ++b)
      for (std::int64_t a = 0; a <= b; ++a) {
        Map lhs = compose(degeneracy(i + 1, a), degeneracy(i, b));
        Map rhs = compose(degeneracy(i + 1, b + 1), degeneracy(i, a));
        if (!equal(lhs, rhs))
          fail(degeneracy_name(i + 1, a) + " * " + degeneracy_name(i, b),
               degeneracy_name(i + 1, b + 1) + " * " + degeneracy_name(i, a));
      }

  for (std::int64_t i = 0; i + 1 <= top; ++i)
    for (std::int64_t j = 0; j <= i; ++j)
      for (std::int64_t k = 0; k <= i + 1; ++k) {
        Map lhs = compose(face(i + 1, k), degeneracy(i, j));
        std::string lhs_name = face_name(i + 1, k) + " * " + degeneracy_name(i, j);
        if (k == j || k == j + 1) {
          if (!equal(lhs, make_identity(ranks[static_cast<std::size_t>(i)])))
            fail(lhs_name, "identity");
        } else if (k < j) {
          Map rhs = compose(degeneracy(i - 1, j - 1), face(i, k));
          if (!equal(lhs, rhs))
            fail(lhs_name, degeneracy_name(i - 1, j - 1) + " * " + face_name(i, k));
        } else {
          Map rhs = compose(degeneracy(i - 1, j), face(i, k - 1));
          if (!equal(lhs, rhs))
            fail(lhs_name, degeneracy_name(i - 1, j) + " * " + face_name(i, k - 1));
        }
      }
}

}  // namespace

SimplicialAbelianGroup::SimplicialAbelianGroup(std::vector<std::int64_t> ranks,
                                               std::vector<std::vector<IntMatrix>> faces,
                                               std::vector<std::vector<IntMatrix>> degeneracies)
    : ranks_(std::move(ranks)), faces_(std::move(faces)), degeneracies_(std::move(degeneracies)) {
  check_shapes();
  check_identities();
}

const IntMatrix& SimplicialAbelianGroup::face(std::int64_t i, std::int64_t k) const {
  if (i < 1 || i > top_degree() || k < 0 || k > i)
    throw ValidationError("face index out of range");
  return faces_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
}

const IntMatrix& SimplicialAbelianGroup::degeneracy(std::int64_t i, std::int64_t j) const {
  if (i < 0 || i >= top_degree() || j < 0 || j > i)
    throw ValidationError("degeneracy index out of range");
  return degeneracies_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

void SimplicialAbelianGroup::check_shapes() const {
  std::int64_t top = top_degree();
  if (top < 0) throw ValidationError("simplicial object needs at least one degree");
  for (std::int64_t r : ranks_)
    if (r < 0) throw ValidationError("ranks must be nonnegative");
  if (static_cast<std::int64_t>(faces_.size()) != top + 1 ||
      static_cast<std::int64_t>(degeneracies_.size()) != top)
    throw DimensionMismatch("face or degeneracy lists do not match the degree range");
  if (!faces_[0].empty()) throw DimensionMismatch("degree 0 has no faces");
  for (std::int64_t i = 1; i <= top; ++i) {
    if (static_cast<std::int64_t>(faces_[static_cast<std::size_t>(i)].size()) != i + 1)
      throw DimensionMismatch("degree " + std::to_string(i) + " needs " + std::to_string(i + 1) +
                              " faces");
    for (const IntMatrix& f : faces_[static_cast<std::size_t>(i)])
      if (f.rows() != ranks_[static_cast<std::size_t>(i - 1)] ||
          f.cols() != ranks_[static_cast<std::size_t>(i)])
        throw DimensionMismatch("face shape mismatch out of degree " + std::to_string(i));
  }
  for (std::int64_t i = 0; i < top; ++i) {
    if (static_cast<std::int64_t>(degeneracies_[static_cast<std::size_t>(i)].size()) != i + 1)
      throw DimensionMismatch("degree " + std::to_string(i) + " needs " + std::to_string(i + 1) +
                              " degeneracies");
    for (const IntMatrix& s : degeneracies_[static_cast<std::size_t>(i)])
      if (s.rows() != ranks_[static_cast<std::size_t>(i + 1)] ||
          s.cols() != ranks_[static_cast<std::size_t>(i)])
        throw DimensionMismatch("degeneracy shape mismatch out of degree " + std::to_string(i));
  }
}

void SimplicialAbelianGroup::check_identities() const {
  std::int64_t top = top_degree();

  std::vector<std::vector<BasisRep>> face_reps(faces_.size()), deg_reps(degeneracies_.size());
  bool all_basis = true;
  for (std::size_t i = 1; i < faces_.size() && all_basis; ++i)
    for (const IntMatrix& f : faces_[i]) {
      auto rep = f.as_basis_map();
      if (!rep) {
        all_basis = false;
        break;
      }
      face_reps[i].push_back(std::move(*rep));
    }
  for (std::size_t i = 0; i < degeneracies_.size() && all_basis; ++i)
    for (const IntMatrix& s : degeneracies_[i]) {
      auto rep = s.as_basis_map();
      if (!rep) {
        all_basis = false;
        break;
      }
      deg_reps[i].push_back(std::move(*rep));
    }

  if (all_basis) {
    walk_identities<BasisRep>(
        top, ranks_,
        [&](std::int64_t i, std::int64_t k) -> const BasisRep& {
          return face_reps[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        },
        [&](std::int64_t i, std::int64_t j) -> const BasisRep& {
          return deg_reps[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        },
        compose_reps, [](const BasisRep& a, const BasisRep& b) { return a == b; }, identity_rep);
    return;
  }

  walk_identities<IntMatrix>(
      top, ranks_,
      [&](std::int64_t i, std::int64_t k) -> const IntMatrix& {
        return faces_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      },
      [&](std::int64_t i, std::int64_t j) -> const IntMatrix& {
        return degeneracies_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      },
      [](const IntMatrix& a, const IntMatrix& b) { return a.multiply(b); },
      [](const IntMatrix& a, const IntMatrix& b) { return a == b; }, IntMatrix::identity);
}

namespace {

IntMatrix alternating_sum(const SimplicialAbelianGroup& s, std::int64_t i) {
  IntMatrix d(s.rank(i - 1), s.rank(i));
  BigInt sign = 1;
  for (std::int64_t k = 0; k <= i; ++k, sign = -sign) d.add_scaled(s.face(i, k), sign);
  return d;
}

}  // namespace

ChainComplex alternating_sum_complex(const SimplicialAbelianGroup& s,
                                     const CoefficientRing& coeff) {
  std::vector<IntMatrix> diffs;
  diffs.reserve(static_cast<std::size_t>(s.top_degree()));
  for (std::int64_t i = 1; i <= s.top_degree(); ++i) diffs.push_back(alternating_sum(s, i));
  return ChainComplex(coeff, s.ranks(), std::move(diffs));
}

ChainComplex normalize(const SimplicialAbelianGroup& s, const CoefficientRing& coeff) {
  std::int64_t top = s.top_degree();

  bool unit_basis = true;
  for (std::int64_t i = 0; i < top && unit_basis; ++i)
    for (std::int64_t j = 0; j <= i && unit_basis; ++j) {
      auto rep = s.degeneracy(i, j).as_basis_map();
      if (!rep) {
        unit_basis = false;
        break;
      }
      for (const auto& [row, v] : *rep)
        if (big_abs(v) != 1) {
          unit_basis = false;
          break;
        }
    }

  if (unit_basis) {
    // Degenerate elements span a coordinate subspace; quotienting is just
    // deleting their rows and columns.
    std::vector<std::vector<std::int64_t>> nondeg(static_cast<std::size_t>(top) + 1);
    for (std::int64_t i = 0; i <= top; ++i) {
      std::set<std::int64_t> degenerate;
      if (i >= 1)
        for (std::int64_t j = 0; j < i; ++j)
          s.degeneracy(i - 1, j).for_each(
              [&](std::int64_t r, std::int64_t, const BigInt&) { degenerate.insert(r); });
      for (std::int64_t b = 0; b < s.rank(i); ++b)
        if (!degenerate.count(b)) nondeg[static_cast<std::size_t>(i)].push_back(b);
    }
    std::vector<std::int64_t> ranks;
    std::vector<IntMatrix> diffs;
    for (std::int64_t i = 0; i <= top; ++i)
      ranks.push_back(static_cast<std::int64_t>(nondeg[static_cast<std::size_t>(i)].size()));
    for (std::int64_t i = 1; i <= top; ++i)
      diffs.push_back(alternating_sum(s, i)
                          .submatrix_rows(nondeg[static_cast<std::size_t>(i - 1)])
                          .submatrix_cols(nondeg[static_cast<std::size_t>(i)]));
    return ChainComplex(coeff, std::move(ranks), std::move(diffs));
  }

  // General splitting: project away the image of the stacked degeneracies
  // degree by degree via Smith transforms.
  std::vector<IntMatrix> project(static_cast<std::size_t>(top) + 1);
  std::vector<IntMatrix> section(static_cast<std::size_t>(top) + 1);
  project[0] = IntMatrix::identity(s.rank(0));
  section[0] = IntMatrix::identity(s.rank(0));
  for (std::int64_t i = 1; i <= top; ++i) {
    IntMatrix stacked(s.rank(i), 0);
    for (std::int64_t j = 0; j < i; ++j) stacked = stacked.hstack(s.degeneracy(i - 1, j));
    exact::SmithOptions opts;
    opts.left = opts.left_inverse = true;
    exact::SmithResult snf = exact::smith_reduce(stacked, opts);
    for (const BigInt& d : snf.diag)
      if (d != 1)
        throw ValidationError("degenerate subcomplex is not a direct summand in degree " +
                              std::to_string(i));
    std::vector<std::int64_t> tail;
    for (std::int64_t k = snf.rank; k < s.rank(i); ++k) tail.push_back(k);
    project[static_cast<std::size_t>(i)] = snf.left->submatrix_rows(tail);
    section[static_cast<std::size_t>(i)] = snf.left_inverse->submatrix_cols(tail);
  }
  std::vector<std::int64_t> ranks;
  std::vector<IntMatrix> diffs;
  for (std::int64_t i = 0; i <= top; ++i)
    ranks.push_back(project[static_cast<std::size_t>(i)].rows());
  for (std::int64_t i = 1; i <= top; ++i)
    diffs.push_back(project[static_cast<std::size_t>(i - 1)]
                        .multiply(alternating_sum(s, i))
                        .multiply(section[static_cast<std::size_t>(i)]));
  return ChainComplex(coeff, std::move(ranks), std::move(diffs));
}

}  // namespace cyclehom::complexes
