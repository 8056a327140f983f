#include "cyclehom/lattice.hpp"

#include <numeric>

namespace cyclehom::exact {

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithOptions opts;
  opts.right = true;
  SmithResult s = smith_reduce(m, opts);
  std::vector<std::int64_t> keep;
  for (std::int64_t c = s.rank; c < m.cols(); ++c) keep.push_back(c);
  return s.right->submatrix_cols(keep);
}

IntMatrix image_basis(const IntMatrix& m) {
  SmithOptions opts;
  opts.left_inverse = true;
  SmithResult s = smith_reduce(m, opts);
  IntMatrix out(m.rows(), s.rank);
  for (std::int64_t k = 0; k < s.rank; ++k) {
    const BigInt& d = s.diag[static_cast<std::size_t>(k)];
    for (std::int64_t r = 0; r < m.rows(); ++r) {
      const BigInt& v = s.left_inverse->get(r, k);
      if (v != 0) out.set(r, k, v * d);
    }
  }
  return out;
}

IntMatrix solve_exact(const IntMatrix& m, const IntMatrix& rhs) {
  if (rhs.rows() != m.rows()) throw DimensionMismatch("solve_exact: row count mismatch");
  SmithOptions opts;
  opts.left = opts.right = true;
  SmithResult s = smith_reduce(m, opts);
  IntMatrix lb = s.left->multiply(rhs);
  IntMatrix z(m.cols(), rhs.cols());
  bool bad = false;
  lb.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
    if (bad) return;
    if (r >= s.rank) {
      bad = true;
      return;
    }
    const BigInt& d = s.diag[static_cast<std::size_t>(r)];
    if (v % d != 0) {
      bad = true;
      return;
    }
    if (r < m.cols()) z.set(r, c, v / d);
  });
  if (bad) throw NoIntegralSolution("system has no integral solution");
  return s.right->multiply(z);
}

FgAbelianGroup quotient_group(const IntMatrix& basis, const IntMatrix& relations) {
  if (basis.rows() != relations.rows())
    throw DimensionMismatch("quotient_group: ambient dimension mismatch");
  IntMatrix y = solve_exact(basis, relations);
  SmithResult s = smith_reduce(y);
  return FgAbelianGroup::from_invariant_factors(basis.cols() - s.rank, s.diag);
}

FgAbelianGroup cokernel_group(std::int64_t ambient, const IntMatrix& relations) {
  if (relations.rows() != ambient)
    throw DimensionMismatch("cokernel_group: ambient dimension mismatch");
  SmithResult s = smith_reduce(relations);
  return FgAbelianGroup::from_invariant_factors(ambient - s.rank, s.diag);
}

FgAbelianGroup fixed_subquotient(std::int64_t ambient, const IntMatrix& relations,
                                 const std::vector<IntMatrix>& endos) {
  if (relations.rows() != ambient)
    throw DimensionMismatch("fixed_subquotient: relation rows must match ambient");
  for (const IntMatrix& s : endos)
    if (s.rows() != ambient || s.cols() != ambient)
      throw DimensionMismatch("fixed_subquotient: endomorphism shape mismatch");
  if (endos.empty()) return cokernel_group(ambient, relations);

  // x is fixed iff (s_i - 1) x = relations * y_i for some y_i, so the fixed
  // lattice is the projection to the first block of the kernel of
  // [ s_i - 1 | -relations (block i) ].
  std::int64_t g = static_cast<std::int64_t>(endos.size());
  std::int64_t a = relations.cols();
  IntMatrix big(g * ambient, ambient + g * a);
  for (std::int64_t i = 0; i < g; ++i) {
    endos[static_cast<std::size_t>(i)].for_each(
        [&](std::int64_t r, std::int64_t c, const BigInt& v) {
          big.add_to(i * ambient + r, c, v);
        });
    for (std::int64_t d = 0; d < ambient; ++d) big.add_to(i * ambient + d, d, -1);
    relations.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
      big.set(i * ambient + r, ambient + i * a + c, -v);
    });
  }
  IntMatrix w = kernel_basis(big);
  std::vector<std::int64_t> first_block(static_cast<std::size_t>(ambient));
  std::iota(first_block.begin(), first_block.end(), 0);
  IntMatrix gens = w.submatrix_rows(first_block);
  IntMatrix basis = image_basis(gens);
  return quotient_group(basis, relations);
}

std::int64_t rank_mod_p(const std::vector<BigInt>& invariant_factors, const BigInt& p) {
  std::int64_t r = 0;
  for (const BigInt& d : invariant_factors)
    if (d % p != 0) ++r;
  return r;
}

std::int64_t rank_mod_p(const IntMatrix& m, const BigInt& p) {
  // Composite moduli keep the invariant-factor reading; integer Smith
  // reduction can blow up entry sizes on matrices already reduced into
  // [0, n), so the prime case eliminates over the field instead.
  if (!is_prime(p)) return rank_mod_p(invariant_factors(m), p);

  // Left-looking sparse elimination: every echelon column is fully reduced
  // against the earlier ones at creation, so one pass in creation order
  // clears each pivot row of the work column.
  std::vector<std::vector<std::pair<std::int64_t, BigInt>>> echelon;
  std::vector<std::int64_t> pivot_rows;
  std::vector<BigInt> work(static_cast<std::size_t>(m.rows()));
  std::vector<std::int64_t> stamp(static_cast<std::size_t>(m.rows()), -1);
  std::vector<std::int64_t> touched;

  std::vector<std::vector<std::pair<std::int64_t, BigInt>>> columns(
      static_cast<std::size_t>(m.cols()));
  m.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
    BigInt rv = mod_floor(v, p);
    if (rv != 0) columns[static_cast<std::size_t>(c)].push_back({r, std::move(rv)});
  });

  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].empty()) continue;
    const auto round = static_cast<std::int64_t>(c);
    auto slot = [&](std::int64_t r) -> BigInt& {
      if (stamp[static_cast<std::size_t>(r)] != round) {
        stamp[static_cast<std::size_t>(r)] = round;
        work[static_cast<std::size_t>(r)] = 0;
        touched.push_back(r);
      }
      return work[static_cast<std::size_t>(r)];
    };
    touched.clear();
    for (auto& [r, v] : columns[c]) slot(r) = std::move(v);

    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const std::int64_t pr = pivot_rows[k];
      if (stamp[static_cast<std::size_t>(pr)] != round) continue;
      const BigInt factor = work[static_cast<std::size_t>(pr)];
      if (factor == 0) continue;
      for (const auto& [r, v] : echelon[k]) {
        BigInt& cell = slot(r);
        cell = mod_floor(cell - factor * v, p);
      }
    }

    std::int64_t pivot = -1;
    for (std::int64_t r : touched)
      if (work[static_cast<std::size_t>(r)] != 0 && (pivot < 0 || r < pivot)) pivot = r;
    if (pivot < 0) continue;

    const BigInt inv = std::get<1>(extended_gcd(work[static_cast<std::size_t>(pivot)], p));
    std::vector<std::pair<std::int64_t, BigInt>> column;
    for (std::int64_t r : touched) {
      const BigInt& v = work[static_cast<std::size_t>(r)];
      if (v != 0) column.push_back({r, mod_floor(v * inv, p)});
    }
    echelon.push_back(std::move(column));
    pivot_rows.push_back(pivot);
  }
  return static_cast<std::int64_t>(echelon.size());
}

IntMatrix kernel_basis_mod_p(const IntMatrix& m, const BigInt& p) {
  if (!is_prime(p)) throw CompositeModulus("kernel_basis_mod_p: modulus " + p.str() + " is not prime");
  SmithOptions opts;
  opts.right = true;
  SmithResult s = smith_reduce(m, opts);
  std::vector<std::int64_t> keep;
  for (std::int64_t k = 0; k < s.rank; ++k)
    if (s.diag[static_cast<std::size_t>(k)] % p == 0) keep.push_back(k);
  for (std::int64_t c = s.rank; c < m.cols(); ++c) keep.push_back(c);
  return s.right->submatrix_cols(keep).reduced_mod(p);
}

}  // namespace cyclehom::exact
