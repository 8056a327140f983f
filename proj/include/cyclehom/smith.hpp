#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclehom/int_matrix.hpp"

namespace cyclehom::exact {

struct SmithOptions {
  bool left = false;
  bool right = false;
  bool left_inverse = false;
  bool right_inverse = false;
};

// diag holds the nonzero invariant factors d_1 | d_2 | ... | d_rank, each >= 1.
// left * m * right equals the diagonal extended by zeros; the transforms are
// unimodular and produced only when requested.
struct SmithResult {
  std::vector<BigInt> diag;
  std::int64_t rank = 0;
  std::optional<IntMatrix> left;
  std::optional<IntMatrix> right;
  std::optional<IntMatrix> left_inverse;
  std::optional<IntMatrix> right_inverse;
};

SmithResult smith_reduce(const IntMatrix& m, const SmithOptions& opts = {});

struct SmithDecomposition {
  std::vector<BigInt> diag;
  IntMatrix left;
  IntMatrix right;
  std::int64_t rank = 0;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

std::vector<BigInt> invariant_factors(const IntMatrix& m);
std::int64_t integer_rank(const IntMatrix& m);

}  // namespace cyclehom::exact
