#include "cyclehom/homology.hpp"

namespace cyclehom::exact {

namespace {

void check_tower(const IntMatrix& d_in, const IntMatrix& d_out, const CoefficientRing& coeff) {
  if (d_out.cols() != d_in.rows())
    throw DimensionMismatch("homology_at: d_out has " + std::to_string(d_out.cols()) +
                            " columns but d_in has " + std::to_string(d_in.rows()) + " rows");
  IntMatrix prod = d_out.multiply(d_in);
  bool zero = coeff.is_mod() ? prod.is_zero_mod(coeff.modulus()) : prod.is_zero();
  if (!zero) throw NotAComplex("homology_at: d_out * d_in is nonzero over " + coeff.to_string());
}

}  // namespace

FgAbelianGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out,
                           const CoefficientRing& coeff) {
  check_tower(d_in, d_out, coeff);
  std::int64_t middle = d_in.rows();
  switch (coeff.kind()) {
    case CoefficientRing::Kind::Integers: {
      std::int64_t rank_out = integer_rank(d_out);
      std::vector<BigInt> factors_in = invariant_factors(d_in);
      std::int64_t rank_in = static_cast<std::int64_t>(factors_in.size());
      return FgAbelianGroup::from_invariant_factors(middle - rank_out - rank_in, factors_in);
    }
    case CoefficientRing::Kind::Rationals: {
      std::int64_t free = middle - integer_rank(d_out) - integer_rank(d_in);
      return FgAbelianGroup(free, {});
    }
    default: {
      const BigInt& n = coeff.modulus();
      if (is_prime(n)) {
        std::int64_t rp_out = rank_mod_p(d_out, n);
        std::int64_t rp_in = rank_mod_p(d_in, n);
        std::vector<BigInt> torsion(static_cast<std::size_t>(middle - rp_out - rp_in), n);
        return FgAbelianGroup(0, std::move(torsion));
      }
      return ModCoordinates(d_in, d_out, n).homology();
    }
  }
}

IntMatrix dualize(const IntMatrix& m, const CoefficientRing& coeff) {
  if (coeff.is_rationals())
    throw UnsupportedCoefficient("dualize: rational coefficients have no preferred lattice form");
  IntMatrix t = m.transpose();
  return coeff.is_mod() ? t.reduced_mod(coeff.modulus()) : t;
}

ModCoordinates::ModCoordinates(const IntMatrix& d_in, const IntMatrix& d_out, BigInt n)
    : ambient_(d_in.rows()), n_(std::move(n)) {
  if (n_ < 2) throw ValidationError("modulus must be at least 2");
  check_tower(d_in, d_out, CoefficientRing::mod(n_));

  SmithOptions opts;
  opts.right = opts.right_inverse = true;
  SmithResult s = smith_reduce(d_out, opts);
  v_ = std::move(*s.right);
  v_inv_ = std::move(*s.right_inverse);

  scale_.assign(static_cast<std::size_t>(ambient_), BigInt(1));
  for (std::int64_t i = 0; i < s.rank; ++i)
    scale_[static_cast<std::size_t>(i)] = n_ / big_gcd(s.diag[static_cast<std::size_t>(i)], n_);

  // Relations in lattice coordinates: columns of d_in and of n * identity,
  // both premultiplied by V^-1 and divided rowwise by the scales. The
  // divisions are exact because d_out * d_in = 0 mod n.
  IntMatrix lifted_in = v_inv_.multiply(d_in);
  IntMatrix rel(ambient_, d_in.cols() + ambient_);
  lifted_in.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
    const BigInt& m = scale_[static_cast<std::size_t>(r)];
    if (v % m != 0)
      throw NotAComplex("mod-n lift: boundary column leaves the kernel lattice");
    rel.set(r, c, v / m);
  });
  v_inv_.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
    const BigInt& m = scale_[static_cast<std::size_t>(r)];
    rel.set(r, d_in.cols() + c, v * (n_ / m));
  });
  relations_ = std::move(rel);
}

IntMatrix ModCoordinates::lattice() const {
  IntMatrix out(ambient_, ambient_);
  v_.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
    out.set(r, c, v * scale_[static_cast<std::size_t>(c)]);
  });
  return out;
}

IntMatrix ModCoordinates::lift_endo(const IntMatrix& sigma) const {
  if (sigma.rows() != ambient_ || sigma.cols() != ambient_)
    throw DimensionMismatch("lift_endo: endomorphism shape mismatch");
  IntMatrix t = v_inv_.multiply(sigma.multiply(v_));
  IntMatrix out(ambient_, ambient_);
  t.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
    BigInt scaled = v * scale_[static_cast<std::size_t>(c)];
    const BigInt& m = scale_[static_cast<std::size_t>(r)];
    if (scaled % m != 0)
      throw ValidationError("lift_endo: endomorphism does not preserve the kernel lattice");
    out.set(r, c, scaled / m);
  });
  return out;
}

IntMatrix ModCoordinates::lift_columns(const IntMatrix& cols) const {
  if (cols.rows() != ambient_) throw DimensionMismatch("lift_columns: row count mismatch");
  // lattice = V * diag(scale): solve by applying V^-1 then dividing rows.
  IntMatrix t = v_inv_.multiply(cols);
  IntMatrix out(ambient_, cols.cols());
  t.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
    const BigInt& m = scale_[static_cast<std::size_t>(r)];
    if (v % m != 0) throw NoIntegralSolution("lift_columns: column outside the kernel lattice");
    out.set(r, c, v / m);
  });
  return out;
}

FgAbelianGroup ModCoordinates::homology() const {
  return cokernel_group(ambient_, relations_);
}

}  // namespace cyclehom::exact
