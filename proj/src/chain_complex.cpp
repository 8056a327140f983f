#include "cyclehom/chain_complex.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <utility>

#include "cyclehom/errors.hpp"
#include "cyclehom/homology.hpp"
#include "cyclehom/lattice.hpp"
#include "cyclehom/smith.hpp"

namespace cyclehom::complexes {

namespace {

// Runs fn(k) for k in [0, count) on up to `parallelism` threads; the first
// exception wins and is rethrown on the caller.
void parallel_for(std::int64_t count, int parallelism, const std::function<void(std::int64_t)>& fn) {
  int threads = parallelism < 1 ? 1 : static_cast<int>(std::min<std::int64_t>(parallelism, count));
  if (threads <= 1) {
    for (std::int64_t k = 0; k < count; ++k) fn(k);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        std::int64_t k = next.fetch_add(1);
        if (k >= count) return;
        try {
          fn(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

ChainComplex::ChainComplex(CoefficientRing coeff, std::vector<std::int64_t> ranks,
                           std::vector<IntMatrix> differentials)
    : coeff_(std::move(coeff)), ranks_(std::move(ranks)), diffs_(std::move(differentials)) {
  if (ranks_.empty()) throw ValidationError("chain complex needs at least one degree");
  for (std::int64_t r : ranks_)
    if (r < 0) throw ValidationError("chain complex ranks must be nonnegative");
  if (diffs_.size() + 1 != ranks_.size())
    throw DimensionMismatch("expected " + std::to_string(ranks_.size() - 1) +
                            " differentials, got " + std::to_string(diffs_.size()));
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    if (diffs_[i].rows() != ranks_[i] || diffs_[i].cols() != ranks_[i + 1])
      throw DimensionMismatch("differential d_" + std::to_string(i + 1) + " is " +
                              std::to_string(diffs_[i].rows()) + "x" +
                              std::to_string(diffs_[i].cols()) + ", expected " +
                              std::to_string(ranks_[i]) + "x" + std::to_string(ranks_[i + 1]));
  }
  for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
    IntMatrix square = diffs_[i].multiply(diffs_[i + 1]);
    bool ok = coeff_.is_mod() ? square.is_zero_mod(coeff_.modulus()) : square.is_zero();
    if (!ok)
      throw NotAComplex("d_" + std::to_string(i + 1) + " * d_" + std::to_string(i + 2) +
                        " is nonzero");
  }
}

std::int64_t ChainComplex::rank(std::int64_t i) const {
  if (i < 0 || i > top_degree()) throw ValidationError("degree out of range");
  return ranks_[static_cast<std::size_t>(i)];
}

const IntMatrix& ChainComplex::differential(std::int64_t i) const {
  if (i < 1 || i > top_degree()) throw ValidationError("differential index out of range");
  return diffs_[static_cast<std::size_t>(i - 1)];
}

void ChainComplex::require_inner_degree(std::int64_t i) const {
  if (i < 0 || i > top_degree()) throw ValidationError("degree out of range");
  if (i == top_degree())
    throw TruncationTooSmall("degree " + std::to_string(i) +
                             " needs the complex truncated above " + std::to_string(i));
}

FgAbelianGroup ChainComplex::homology(std::int64_t i) const {
  require_inner_degree(i);
  IntMatrix d_out = i == 0 ? IntMatrix(0, ranks_[0]) : diffs_[static_cast<std::size_t>(i - 1)];
  return exact::homology_at(diffs_[static_cast<std::size_t>(i)], d_out, coeff_);
}

std::vector<FgAbelianGroup> ChainComplex::homology_range(std::int64_t lo, std::int64_t hi,
                                                         int parallelism) const {
  if (lo > hi) throw ValidationError("empty homology range");
  require_inner_degree(lo);
  require_inner_degree(hi);

  std::vector<FgAbelianGroup> out(static_cast<std::size_t>(hi - lo + 1));
  if (coeff_.is_mod() && !coeff_.has_prime_modulus()) {
    parallel_for(hi - lo + 1, parallelism,
                 [&](std::int64_t k) { out[static_cast<std::size_t>(k)] = homology(lo + k); });
    return out;
  }

  // One invariant-factor summary per differential d_lo .. d_{hi+1} covers
  // every coefficient ring here; d_0 contributes an empty summary.
  std::int64_t first = lo == 0 ? 1 : lo;
  std::vector<std::vector<BigInt>> factors(static_cast<std::size_t>(hi + 2));
  parallel_for(hi + 2 - first, parallelism, [&](std::int64_t k) {
    std::int64_t d = first + k;
    factors[static_cast<std::size_t>(d)] =
        exact::invariant_factors(diffs_[static_cast<std::size_t>(d - 1)]);
  });

  for (std::int64_t i = lo; i <= hi; ++i) {
    const auto& in = factors[static_cast<std::size_t>(i + 1)];
    std::int64_t rank_out =
        i == 0 ? 0 : static_cast<std::int64_t>(factors[static_cast<std::size_t>(i)].size());
    FgAbelianGroup h;
    if (coeff_.is_mod()) {
      const BigInt& p = coeff_.modulus();
      std::int64_t rank_out_p =
          i == 0 ? 0 : exact::rank_mod_p(factors[static_cast<std::size_t>(i)], p);
      std::int64_t dim = ranks_[static_cast<std::size_t>(i)] - rank_out_p - exact::rank_mod_p(in, p);
      h = FgAbelianGroup(0, std::vector<BigInt>(static_cast<std::size_t>(dim), p));
    } else {
      std::int64_t free = ranks_[static_cast<std::size_t>(i)] - rank_out -
                          static_cast<std::int64_t>(in.size());
      h = coeff_.is_rationals() ? FgAbelianGroup(free, {})
                                : FgAbelianGroup::from_invariant_factors(free, in);
    }
    out[static_cast<std::size_t>(i - lo)] = std::move(h);
  }
  return out;
}

FgAbelianGroup ChainComplex::cohomology(std::int64_t i) const {
  require_inner_degree(i);
  IntMatrix delta_in =
      i == 0 ? IntMatrix(ranks_[0], 0) : diffs_[static_cast<std::size_t>(i - 1)].transpose();
  return exact::homology_at(delta_in, diffs_[static_cast<std::size_t>(i)].transpose(), coeff_);
}

ChainComplex ChainComplex::tensor(const CoefficientRing& target) const {
  if (!coeff_.is_integers())
    throw ValidationError("base change starts from an integer complex, this one is over " +
                          coeff_.to_string());
  std::vector<IntMatrix> diffs;
  diffs.reserve(diffs_.size());
  for (const IntMatrix& d : diffs_)
    diffs.push_back(target.is_mod() ? d.reduced_mod(target.modulus()) : d);
  return ChainComplex(target, ranks_, std::move(diffs));
}

}  // namespace cyclehom::complexes
