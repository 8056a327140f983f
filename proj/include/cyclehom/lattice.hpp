#pragma once

#include <cstdint>
#include <vector>

#include "cyclehom/fg_abelian_group.hpp"
#include "cyclehom/int_matrix.hpp"
#include "cyclehom/smith.hpp"

namespace cyclehom::exact {

// Columns form a basis of { x : m x = 0 }.
IntMatrix kernel_basis(const IntMatrix& m);

// Columns form a basis of the column span of m (a full-rank sublattice).
IntMatrix image_basis(const IntMatrix& m);

// Exact integer solution of m * x = rhs; throws NoIntegralSolution when none
// exists. When the kernel is nontrivial one particular solution is returned.
IntMatrix solve_exact(const IntMatrix& m, const IntMatrix& rhs);

// The group (column span of basis) / (column span of relations). basis must
// have independent columns and contain the relations' span.
FgAbelianGroup quotient_group(const IntMatrix& basis, const IntMatrix& relations);

// Z^ambient modulo the column span of relations.
FgAbelianGroup cokernel_group(std::int64_t ambient, const IntMatrix& relations);

// Fixed subgroup of Z^ambient / im(relations) under the endomorphisms, i.e.
// { x : (s - id) x lands in im(relations) for every s } / im(relations).
// Every endomorphism must carry im(relations) into itself.
FgAbelianGroup fixed_subquotient(std::int64_t ambient, const IntMatrix& relations,
                                 const std::vector<IntMatrix>& endos);

// Rank of m over F_p, by sparse elimination when p is prime; composite p
// falls back to counting invariant factors coprime to p (the unimodular
// Smith transforms stay invertible mod p, so the diagonal carries the rank).
std::int64_t rank_mod_p(const IntMatrix& m, const BigInt& p);
std::int64_t rank_mod_p(const std::vector<BigInt>& invariant_factors, const BigInt& p);

// Columns form a basis of { x : m x = 0 over F_p }, entries in [0, p).
// Requires p prime.
IntMatrix kernel_basis_mod_p(const IntMatrix& m, const BigInt& p);

}  // namespace cyclehom::exact
