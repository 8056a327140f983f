// Timing harness for the Smith engine on bar-type differentials of cyclic
// groups. Not a test; prints ranks, invariant factor counts, and wall time.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "cyclehom/lattice.hpp"
#include "cyclehom/smith.hpp"

using cyclehom::BigInt;
using cyclehom::exact::IntMatrix;

namespace {

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Degree-i differential of the bar complex of Z/m: faces drop the first
// entry, add adjacent entries mod m, or drop the last entry.
IntMatrix bar_differential(std::int64_t m, std::int64_t i) {
  std::int64_t cols = ipow(m, i), rows = ipow(m, i - 1);
  IntMatrix d(rows, cols);
  std::vector<std::int64_t> t(static_cast<std::size_t>(i));
  for (std::int64_t code = 0; code < cols; ++code) {
    std::int64_t x = code;
    for (std::int64_t k = i - 1; k >= 0; --k) {
      t[static_cast<std::size_t>(k)] = x % m;
      x /= m;
    }
    std::int64_t sign = 1;
    for (std::int64_t k = 0; k <= i; ++k) {
      std::int64_t r = 0;
      for (std::int64_t j = 0; j < i; ++j) {
        std::int64_t v;
        if (k == 0) {
          if (j == 0) continue;
          v = t[static_cast<std::size_t>(j)];
        } else if (k == i) {
          if (j == i - 1) continue;
          v = t[static_cast<std::size_t>(j)];
        } else {
          if (j == k) continue;
          v = j == k - 1
                  ? (t[static_cast<std::size_t>(k - 1)] + t[static_cast<std::size_t>(k)]) % m
                  : t[static_cast<std::size_t>(j)];
        }
        r = r * m + v;
      }
      d.add_to(r, code, sign);
      sign = -sign;
    }
  }
  return d;
}

// Same differential restricted to tuples with no identity entries; faces
// landing on a tuple containing the identity are dropped (normalized
// complex, basis (m-1)^i).
IntMatrix normalized_differential(std::int64_t m, std::int64_t i) {
  std::int64_t n = m - 1;
  std::int64_t cols = ipow(n, i), rows = ipow(n, i - 1);
  IntMatrix d(rows, cols);
  std::vector<std::int64_t> t(static_cast<std::size_t>(i));
  for (std::int64_t code = 0; code < cols; ++code) {
    std::int64_t x = code;
    for (std::int64_t k = i - 1; k >= 0; --k) {
      t[static_cast<std::size_t>(k)] = 1 + x % n;
      x /= n;
    }
    std::int64_t sign = 1;
    for (std::int64_t k = 0; k <= i; ++k, sign = -sign) {
      std::int64_t r = 0;
      bool degenerate = false;
      for (std::int64_t j = 0; j < i; ++j) {
        std::int64_t v;
        if (k == 0) {
          if (j == 0) continue;
          v = t[static_cast<std::size_t>(j)];
        } else if (k == i) {
          if (j == i - 1) continue;
          v = t[static_cast<std::size_t>(j)];
        } else {
          if (j == k) continue;
          v = j == k - 1
                  ? (t[static_cast<std::size_t>(k - 1)] + t[static_cast<std::size_t>(k)]) % m
                  : t[static_cast<std::size_t>(j)];
        }
        if (v == 0) {
          degenerate = true;
          break;
        }
        r = r * n + (v - 1);
      }
      if (degenerate) continue;
      d.add_to(r, code, sign);
    }
  }
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  std::int64_t m = argc > 1 ? std::atoll(argv[1]) : 6;
  std::int64_t top = argc > 2 ? std::atoll(argv[2]) : 6;
  bool norm = argc > 3 && argv[3][0] == 'n';
  for (std::int64_t i = 1; i <= top; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    IntMatrix d = norm ? normalized_differential(m, i) : bar_differential(m, i);
    auto t1 = std::chrono::steady_clock::now();
    auto factors = cyclehom::exact::invariant_factors(d);
    auto t2 = std::chrono::steady_clock::now();
    std::int64_t nontrivial = 0;
    BigInt largest = 0;
    for (const auto& f : factors)
      if (f > 1) {
        ++nontrivial;
        if (f > largest) largest = f;
      }
    std::printf("m=%lld d_%lld: %lldx%lld nnz=%lld rank=%zu nontrivial=%lld largest=%s "
                "build=%.2fs snf=%.2fs\n",
                static_cast<long long>(m), static_cast<long long>(i),
                static_cast<long long>(d.rows()), static_cast<long long>(d.cols()),
                static_cast<long long>(d.nnz()), factors.size(),
                static_cast<long long>(nontrivial), largest.str().c_str(),
                std::chrono::duration<double>(t1 - t0).count(),
                std::chrono::duration<double>(t2 - t1).count());
  }
  return 0;
}
