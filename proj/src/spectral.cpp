#include "cyclehom/spectral.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

#include "cyclehom/bar_cycles.hpp"
#include "cyclehom/errors.hpp"
#include "cyclehom/simplicial.hpp"

namespace cyclehom::spectral {

namespace {

std::string at(std::int64_t s, std::int64_t t) {
  return "(" + std::to_string(s) + ", " + std::to_string(t) + ")";
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return t < 0 ? t + p : t;
}

// Sparse column-echelon form over F_p with combination tracking: echelon
// column k equals m * combo_k, pivots are normalized to 1, and a column that
// reduces to zero contributes its combination to the kernel. Entry values
// stay in [0, p), so all arithmetic fits in int64 for the small primes the
// pages use.
class FpEliminator {
 public:
  // (index, value) pairs sorted by index, values in (0, p).
  using SparseVec = std::vector<std::pair<std::int64_t, std::int64_t>>;

  FpEliminator(const IntMatrix& m, std::int64_t p) : rows_(m.rows()), cols_(m.cols()), p_(p) {
    std::vector<SparseVec> cols(static_cast<std::size_t>(cols_));
    m.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
      BigInt res = v % p;
      if (res < 0) res += p;
      if (res != 0)
        cols[static_cast<std::size_t>(c)].emplace_back(r, static_cast<std::int64_t>(res));
    });
    for (auto& col : cols) std::sort(col.begin(), col.end());

    for (std::int64_t j = 0; j < cols_; ++j) {
      SparseVec cur = std::move(cols[static_cast<std::size_t>(j)]);
      SparseVec combo{{j, 1}};
      bool inserted = false;
      while (!cur.empty()) {
        auto hit = pivot_to_col_.find(cur.front().first);
        if (hit == pivot_to_col_.end()) {
          const std::int64_t pivot = cur.front().first;
          const std::int64_t inv = mod_inverse(cur.front().second, p_);
          scale(cur, inv);
          scale(combo, inv);
          pivot_to_col_.emplace(pivot, static_cast<std::int64_t>(echelon_.size()));
          echelon_.push_back({std::move(cur), std::move(combo), pivot});
          inserted = true;
          break;
        }
        const Col& e = echelon_[static_cast<std::size_t>(hit->second)];
        std::int64_t c = cur.front().second;
        cur = axpy(cur, e.entries, p_ - c);
        combo = axpy(combo, e.combo, p_ - c);
      }
      if (!inserted) kernel_combos_.push_back(std::move(combo));
    }
    for (const auto& kv : pivot_to_col_) order_.push_back(kv.second);
    std::sort(order_.begin(), order_.end(), [&](std::int64_t a, std::int64_t b) {
      return echelon_[static_cast<std::size_t>(a)].pivot <
             echelon_[static_cast<std::size_t>(b)].pivot;
    });
  }

  std::int64_t rank() const { return static_cast<std::int64_t>(echelon_.size()); }
  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

  std::vector<std::int64_t> nonpivot_rows() const {
    std::vector<std::int64_t> out;
    for (std::int64_t r = 0; r < rows_; ++r)
      if (pivot_to_col_.find(r) == pivot_to_col_.end()) out.push_back(r);
    return out;
  }

  IntMatrix kernel() const {
    IntMatrix k(cols_, static_cast<std::int64_t>(kernel_combos_.size()));
    for (std::size_t j = 0; j < kernel_combos_.size(); ++j)
      for (const auto& [row, val] : kernel_combos_[j])
        k.set(row, static_cast<std::int64_t>(j), BigInt(val));
    return k;
  }

  // Reduces v (dense, length rows()) against the echelon in ascending pivot
  // order and returns the residual; v is in the column span iff the residual
  // vanishes. With combo != nullptr, fills the original-column combination
  // with m * combo = v - residual.
  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v,
                                   std::vector<std::int64_t>* combo) const {
    if (combo) combo->assign(static_cast<std::size_t>(cols_), 0);
    for (std::int64_t idx : order_) {
      const Col& e = echelon_[static_cast<std::size_t>(idx)];
      std::int64_t c = v[static_cast<std::size_t>(e.pivot)] % p_;
      if (c == 0) continue;
      for (const auto& [row, val] : e.entries) {
        auto& slot = v[static_cast<std::size_t>(row)];
        slot = (slot + (p_ - c) * val) % p_;
      }
      if (combo)
        for (const auto& [col, val] : e.combo) {
          auto& slot = (*combo)[static_cast<std::size_t>(col)];
          slot = (slot + c * val) % p_;
        }
    }
    return v;
  }

 private:
  struct Col {
    SparseVec entries;
    SparseVec combo;
    std::int64_t pivot = -1;
  };

  void scale(SparseVec& v, std::int64_t by) const {
    for (auto& [idx, val] : v) val = val * by % p_;
  }

  // a + s * b over F_p, both sorted; zero results dropped.
  SparseVec axpy(const SparseVec& a, const SparseVec& b, std::int64_t s) const {
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        std::int64_t val = s * b[j].second % p_;
        if (val != 0) out.emplace_back(b[j].first, val);
        ++j;
      } else {
        std::int64_t val = (a[i].second + s * b[j].second) % p_;
        if (val != 0) out.emplace_back(a[i].first, val);
        ++i, ++j;
      }
    }
    return out;
  }

  std::int64_t rows_, cols_, p_;
  std::vector<Col> echelon_;
  std::vector<SparseVec> kernel_combos_;
  std::unordered_map<std::int64_t, std::int64_t> pivot_to_col_;
  std::vector<std::int64_t> order_;
};

std::vector<std::int64_t> dense_column(const IntMatrix& m, std::int64_t j, std::int64_t p) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(m.rows()), 0);
  m.for_each([&](std::int64_t r, std::int64_t c, const BigInt& val) {
    if (c != j) return;
    BigInt res = val % p;
    if (res < 0) res += p;
    v[static_cast<std::size_t>(r)] = static_cast<std::int64_t>(res);
  });
  return v;
}

std::vector<std::int64_t> apply_mod(const IntMatrix& m, const std::vector<std::int64_t>& v,
                                    std::int64_t p) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(m.rows()), 0);
  m.for_each([&](std::int64_t r, std::int64_t c, const BigInt& val) {
    BigInt res = val % p;
    if (res < 0) res += p;
    auto& slot = out[static_cast<std::size_t>(r)];
    slot = (slot + static_cast<std::int64_t>(res) * v[static_cast<std::size_t>(c)]) % p;
  });
  return out;
}

// A subquotient ker(out) / im(in) of F_p^ambient with explicit coordinates:
// a kernel basis, and quotient coordinates given by the non-pivot rows of the
// image written in that basis. coords() is the linear projection with kernel
// exactly im(in), so classes compare equal iff their coordinates do.
struct Subquotient {
  std::int64_t ambient = 0;
  IntMatrix kernel;
  std::unique_ptr<FpEliminator> kernel_elim;
  std::unique_ptr<FpEliminator> image_elim;
  std::vector<std::int64_t> coord_rows;

  std::int64_t dim() const { return static_cast<std::int64_t>(coord_rows.size()); }

  std::vector<std::int64_t> coords(const std::vector<std::int64_t>& ambient_vec) const {
    std::vector<std::int64_t> in_kernel;
    std::vector<std::int64_t> residual = kernel_elim->reduce(ambient_vec, &in_kernel);
    for (std::int64_t r : residual)
      if (r != 0) throw Error("internal: vector to coordinatize is not a cocycle");
    std::vector<std::int64_t> reduced = image_elim->reduce(std::move(in_kernel), nullptr);
    std::vector<std::int64_t> out;
    out.reserve(coord_rows.size());
    for (std::int64_t r : coord_rows) out.push_back(reduced[static_cast<std::size_t>(r)]);
    return out;
  }

  std::vector<std::int64_t> representative(std::int64_t j, std::int64_t p) const {
    return dense_column(kernel, coord_rows[static_cast<std::size_t>(j)], p);
  }
};

Subquotient make_subquotient(const IntMatrix& out_map, const IntMatrix& in_map, std::int64_t p) {
  Subquotient q;
  q.ambient = out_map.cols();
  FpEliminator out_elim(out_map, p);
  q.kernel = out_elim.kernel();
  q.kernel_elim = std::make_unique<FpEliminator>(q.kernel, p);

  // With a vanishing outgoing map the kernel basis is the ambient one, so the
  // incoming map already is the image in kernel coordinates; this shortcut
  // carries the identity/zero columns of constant-direction grids.
  if (out_map.is_zero()) {
    q.image_elim = std::make_unique<FpEliminator>(in_map, p);
    q.coord_rows = q.image_elim->nonpivot_rows();
    return q;
  }

  IntMatrix image_in_coords(q.kernel.cols(), in_map.is_zero() ? 0 : in_map.cols());
  for (std::int64_t j = 0; j < image_in_coords.cols(); ++j) {
    std::vector<std::int64_t> in_kernel;
    std::vector<std::int64_t> residual = q.kernel_elim->reduce(dense_column(in_map, j, p), &in_kernel);
    for (std::int64_t r : residual)
      if (r != 0) throw Error("internal: image does not land in the kernel");
    for (std::size_t r = 0; r < in_kernel.size(); ++r)
      if (in_kernel[r] != 0)
        image_in_coords.set(static_cast<std::int64_t>(r), j, BigInt(in_kernel[r]));
  }
  q.image_elim = std::make_unique<FpEliminator>(image_in_coords, p);
  q.coord_rows = q.image_elim->nonpivot_rows();
  return q;
}

}  // namespace

DoubleComplex::DoubleComplex(CoefficientRing coeff, std::vector<std::vector<std::int64_t>> ranks,
                             std::vector<std::vector<IntMatrix>> horizontal,
                             std::vector<std::vector<IntMatrix>> vertical)
    : coeff_(std::move(coeff)), ranks_(std::move(ranks)), h_(std::move(horizontal)),
      v_(std::move(vertical)) {
  validate();
}

void DoubleComplex::validate() const {
  if (ranks_.empty() || ranks_[0].empty())
    throw NotADoubleComplex("the grid must contain at least the origin");
  const std::size_t height = ranks_[0].size();
  for (const auto& col : ranks_) {
    if (col.size() != height) throw NotADoubleComplex("the rank grid is ragged");
    for (std::int64_t r : col)
      if (r < 0) throw NotADoubleComplex("ranks must be nonnegative");
  }
  if (h_.size() != ranks_.size() || v_.size() != ranks_.size())
    throw NotADoubleComplex("differential grids do not match the rank grid");
  for (std::size_t s = 0; s < ranks_.size(); ++s)
    if (h_[s].size() != height || v_[s].size() != height)
      throw NotADoubleComplex("differential grids do not match the rank grid");

  const std::int64_t S = max_s(), T = max_t();
  auto is_zero = [&](const IntMatrix& m) {
    return coeff_.is_mod() ? m.is_zero_mod(coeff_.modulus()) : m.is_zero();
  };
  for (std::int64_t s = 0; s <= S; ++s) {
    for (std::int64_t t = 0; t <= T; ++t) {
      if (s >= 1) {
        const IntMatrix& m = h_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
        if (m.rows() != rank(s - 1, t) || m.cols() != rank(s, t))
          throw NotADoubleComplex("horizontal differential at " + at(s, t) + " is " +
                                  std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                  ", expected " + std::to_string(rank(s - 1, t)) + "x" +
                                  std::to_string(rank(s, t)));
        if (s >= 2 && !is_zero(horizontal(s - 1, t).multiply(m)))
          throw NotADoubleComplex("horizontal differentials do not square to zero at " + at(s, t));
      }
      if (t >= 1) {
        const IntMatrix& m = v_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
        if (m.rows() != rank(s, t - 1) || m.cols() != rank(s, t))
          throw NotADoubleComplex("vertical differential at " + at(s, t) + " is " +
                                  std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                  ", expected " + std::to_string(rank(s, t - 1)) + "x" +
                                  std::to_string(rank(s, t)));
        if (t >= 2 && !is_zero(vertical(s, t - 1).multiply(m)))
          throw NotADoubleComplex("vertical differentials do not square to zero at " + at(s, t));
      }
      if (s >= 1 && t >= 1) {
        IntMatrix gap = vertical(s - 1, t).multiply(horizontal(s, t));
        gap.add_scaled(horizontal(s, t - 1).multiply(vertical(s, t)), BigInt(-1));
        bool commutes = coeff_.is_mod() ? gap.is_zero_mod(coeff_.modulus()) : gap.is_zero();
        if (!commutes) throw NotADoubleComplex("the square at " + at(s, t) + " does not commute");
      }
    }
  }
}

std::int64_t DoubleComplex::rank(std::int64_t s, std::int64_t t) const {
  if (s < 0 || t < 0 || s > max_s() || t > max_t()) return 0;
  return ranks_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
}

const IntMatrix& DoubleComplex::horizontal(std::int64_t s, std::int64_t t) const {
  if (s < 1 || s > max_s() || t < 0 || t > max_t())
    throw NotADoubleComplex("no horizontal differential at " + at(s, t));
  return h_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
}

const IntMatrix& DoubleComplex::vertical(std::int64_t s, std::int64_t t) const {
  if (t < 1 || t > max_t() || s < 0 || s > max_s())
    throw NotADoubleComplex("no vertical differential at " + at(s, t));
  return v_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
}

DoubleComplex DoubleComplex::transposed() const {
  const std::int64_t S = max_s(), T = max_t();
  std::vector<std::vector<std::int64_t>> ranks(static_cast<std::size_t>(T + 1),
                                               std::vector<std::int64_t>(static_cast<std::size_t>(S + 1)));
  std::vector<std::vector<IntMatrix>> h(static_cast<std::size_t>(T + 1),
                                        std::vector<IntMatrix>(static_cast<std::size_t>(S + 1)));
  auto v = h;
  for (std::int64_t a = 0; a <= T; ++a) {
    for (std::int64_t b = 0; b <= S; ++b) {
      ranks[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = rank(b, a);
      if (a >= 1) h[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = vertical(b, a);
      if (b >= 1) v[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = horizontal(b, a);
    }
  }
  return DoubleComplex(coeff_, std::move(ranks), std::move(h), std::move(v));
}

ChainComplex totalize(const DoubleComplex& dc) {
  const std::int64_t S = dc.max_s(), T = dc.max_t(), top = S + T;
  auto blocks = [&](std::int64_t n) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;  // (s, offset)
    std::int64_t offset = 0;
    for (std::int64_t s = std::max<std::int64_t>(0, n - T); s <= std::min(S, n); ++s) {
      out.emplace_back(s, offset);
      offset += dc.rank(s, n - s);
    }
    return out;
  };
  auto total_rank = [&](std::int64_t n) {
    std::int64_t r = 0;
    for (std::int64_t s = std::max<std::int64_t>(0, n - T); s <= std::min(S, n); ++s)
      r += dc.rank(s, n - s);
    return r;
  };

  std::vector<std::int64_t> ranks;
  for (std::int64_t n = 0; n <= top; ++n) ranks.push_back(total_rank(n));
  ranks.push_back(0);

  std::vector<IntMatrix> diffs;
  for (std::int64_t n = 1; n <= top + 1; ++n) {
    IntMatrix d(total_rank(n - 1), total_rank(n));
    std::map<std::int64_t, std::int64_t> target_offset;
    for (const auto& [s, off] : blocks(n - 1)) target_offset[s] = off;
    for (const auto& [s, off] : blocks(n)) {
      const std::int64_t t = n - s;
      if (s >= 1) {
        const std::int64_t row0 = target_offset.at(s - 1);
        dc.horizontal(s, t).for_each([&](std::int64_t r, std::int64_t c, const BigInt& val) {
          d.add_to(row0 + r, off + c, val);
        });
      }
      if (t >= 1) {
        const std::int64_t row0 = target_offset.at(s);
        const bool flip = s % 2 != 0;
        dc.vertical(s, t).for_each([&](std::int64_t r, std::int64_t c, const BigInt& val) {
          d.add_to(row0 + r, off + c, flip ? BigInt(-val) : val);
        });
      }
    }
    diffs.push_back(std::move(d));
  }
  return ChainComplex(dc.coefficients(), std::move(ranks), std::move(diffs));
}

DoubleComplex build_constant_row_grid(const FiniteGroup& g, std::int64_t max_s,
                                      std::int64_t max_t, const CoefficientRing& coeff) {
  if (max_s < 0 || max_t < 0) throw ValidationError("grid bounds must be nonnegative");
  ChainComplex bar = complexes::alternating_sum_complex(cycles::bar_simplicial(g, max_s),
                                                        CoefficientRing::integers());
  auto reduce = [&](IntMatrix m) {
    return coeff.is_mod() ? m.reduced_mod(coeff.modulus()) : std::move(m);
  };

  std::vector<std::vector<std::int64_t>> ranks(static_cast<std::size_t>(max_s + 1),
                                               std::vector<std::int64_t>(static_cast<std::size_t>(max_t + 1)));
  std::vector<std::vector<IntMatrix>> h(static_cast<std::size_t>(max_s + 1),
                                        std::vector<IntMatrix>(static_cast<std::size_t>(max_t + 1)));
  auto v = h;
  for (std::int64_t s = 0; s <= max_s; ++s) {
    const std::int64_t n = bar.rank(s);
    IntMatrix d_s = s >= 1 ? reduce(bar.differential(s)) : IntMatrix();
    for (std::int64_t t = 0; t <= max_t; ++t) {
      ranks[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = n;
      if (s >= 1) h[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = d_s;
      if (t >= 1)
        v[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] =
            t % 2 == 0 ? IntMatrix::identity(n) : IntMatrix(n, n);
    }
  }
  return DoubleComplex(coeff, std::move(ranks), std::move(h), std::move(v));
}

std::int64_t SpectralPage::dim(std::int64_t s, std::int64_t t) const {
  if (s < 0 || t < 0 || s >= static_cast<std::int64_t>(entries.size())) return 0;
  const auto& col = entries[static_cast<std::size_t>(s)];
  if (t >= static_cast<std::int64_t>(col.size())) return 0;
  return static_cast<std::int64_t>(col[static_cast<std::size_t>(t)].torsion().size());
}

bool SpectralPage::degenerate_above_bottom_row() const {
  for (const auto& col : entries)
    for (std::size_t t = 1; t < col.size(); ++t)
      if (!col[t].is_trivial()) return false;
  return true;
}

struct SpectralRun::Impl {
  std::int64_t S = 0, T = 0;
  BigInt ell;
  std::int64_t p = 0;
  std::vector<std::vector<IntMatrix>> dh, dv;  // dual maps out of (s,t), reduced mod p
  std::vector<std::vector<Subquotient>> e1;
  std::vector<std::vector<IntMatrix>> d1;
  std::vector<std::vector<std::unique_ptr<FpEliminator>>> d1_elim;
  std::vector<std::vector<std::int64_t>> e2dim;
  mutable std::map<std::int64_t, std::unique_ptr<FpEliminator>> tot_elim;
  std::vector<std::vector<std::int64_t>> ranks;

  std::int64_t rank(std::int64_t s, std::int64_t t) const {
    if (s < 0 || t < 0 || s > S || t > T) return 0;
    return ranks[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> blocks(std::int64_t n) const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;  // (s, offset)
    std::int64_t offset = 0;
    for (std::int64_t s = std::max<std::int64_t>(0, n - T); s <= std::min(S, n); ++s) {
      out.emplace_back(s, offset);
      offset += rank(s, n - s);
    }
    return out;
  }

  std::int64_t total_rank(std::int64_t n) const {
    std::int64_t r = 0;
    for (std::int64_t s = std::max<std::int64_t>(0, n - T); s <= std::min(S, n); ++s)
      r += rank(s, n - s);
    return r;
  }

  // Differential of the dual total complex out of degree n, with the sign
  // (-1)^s on the vertical part.
  IntMatrix tot_matrix(std::int64_t n) const {
    IntMatrix d(total_rank(n + 1), total_rank(n));
    std::map<std::int64_t, std::int64_t> target_offset;
    for (const auto& [s, off] : blocks(n + 1)) target_offset[s] = off;
    for (const auto& [s, off] : blocks(n)) {
      const std::int64_t t = n - s;
      if (s < S) {
        const std::int64_t row0 = target_offset.at(s + 1);
        dh[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)].for_each(
            [&](std::int64_t r, std::int64_t c, const BigInt& val) {
              d.add_to(row0 + r, off + c, val);
            });
      }
      if (t < T) {
        const std::int64_t row0 = target_offset.at(s);
        const bool flip = s % 2 != 0;
        dv[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)].for_each(
            [&](std::int64_t r, std::int64_t c, const BigInt& val) {
              d.add_to(row0 + r, off + c, flip ? BigInt(ell - val) : val);
            });
      }
    }
    return d;
  }

  const FpEliminator& tot_eliminator(std::int64_t n) const {
    auto it = tot_elim.find(n);
    if (it == tot_elim.end())
      it = tot_elim.emplace(n, std::make_unique<FpEliminator>(tot_matrix(n), p)).first;
    return *it->second;
  }
};

SpectralRun::SpectralRun(const DoubleComplex& dc, const BigInt& ell) : impl_(new Impl) {
  if (!is_prime(ell))
    throw CompositeModulus("spectral pages need a prime modulus, got " + ell.str());
  if (ell > BigInt(std::numeric_limits<std::int32_t>::max()))
    throw ValidationError("page modulus " + ell.str() + " is too large");
  const CoefficientRing& ring = dc.coefficients();
  if (ring.is_rationals())
    throw UnsupportedCoefficient("pages mod " + ell.str() + " need an integral grid, not Q");
  if (ring.is_mod() && ring.modulus() % ell != 0)
    throw UnsupportedCoefficient("pages mod " + ell.str() + " cannot be read off a grid over " +
                                 ring.to_string());

  Impl& im = *impl_;
  im.S = dc.max_s();
  im.T = dc.max_t();
  im.ell = ell;
  im.p = static_cast<std::int64_t>(ell);
  im.ranks.resize(static_cast<std::size_t>(im.S + 1));
  for (std::int64_t s = 0; s <= im.S; ++s) {
    auto& col = im.ranks[static_cast<std::size_t>(s)];
    col.resize(static_cast<std::size_t>(im.T + 1));
    for (std::int64_t t = 0; t <= im.T; ++t) col[static_cast<std::size_t>(t)] = dc.rank(s, t);
  }

  // Dual differentials are transposes, read mod l; maps leaving the window
  // become maps into a zero module.
  auto grid = [&](auto fill) {
    std::vector<std::vector<IntMatrix>> g(static_cast<std::size_t>(im.S + 1),
                                          std::vector<IntMatrix>(static_cast<std::size_t>(im.T + 1)));
    for (std::int64_t s = 0; s <= im.S; ++s)
      for (std::int64_t t = 0; t <= im.T; ++t)
        g[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = fill(s, t);
    return g;
  };
  im.dh = grid([&](std::int64_t s, std::int64_t t) {
    return s < im.S ? dc.horizontal(s + 1, t).transpose().reduced_mod(ell)
                    : IntMatrix(0, im.rank(s, t));
  });
  im.dv = grid([&](std::int64_t s, std::int64_t t) {
    return t < im.T ? dc.vertical(s, t + 1).transpose().reduced_mod(ell)
                    : IntMatrix(0, im.rank(s, t));
  });

  // E_1: cohomology of the columns in the vertical direction.
  im.e1.resize(static_cast<std::size_t>(im.S + 1));
  for (std::int64_t s = 0; s <= im.S; ++s) {
    auto& col = im.e1[static_cast<std::size_t>(s)];
    col.resize(static_cast<std::size_t>(im.T + 1));
    for (std::int64_t t = 0; t <= im.T; ++t) {
      const IntMatrix& out = im.dv[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      IntMatrix in = t > 0 ? im.dv[static_cast<std::size_t>(s)][static_cast<std::size_t>(t - 1)]
                           : IntMatrix(im.rank(s, t), 0);
      col[static_cast<std::size_t>(t)] = make_subquotient(out, in, im.p);
    }
  }

  // d_1: the horizontal maps written in E_1 coordinates.
  im.d1 = grid([&](std::int64_t s, std::int64_t t) {
    const Subquotient& src = im.e1[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
    if (s == im.S) return IntMatrix(0, src.dim());
    const Subquotient& dst = im.e1[static_cast<std::size_t>(s + 1)][static_cast<std::size_t>(t)];
    const IntMatrix& map = im.dh[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
    IntMatrix d(dst.dim(), src.dim());
    for (std::int64_t j = 0; j < src.dim(); ++j) {
      std::vector<std::int64_t> image = apply_mod(map, src.representative(j, im.p), im.p);
      std::vector<std::int64_t> coords = dst.coords(image);
      for (std::size_t r = 0; r < coords.size(); ++r)
        if (coords[r] != 0) d.set(static_cast<std::int64_t>(r), j, BigInt(coords[r]));
    }
    return d;
  });
  im.d1_elim.resize(static_cast<std::size_t>(im.S + 1));
  for (std::int64_t s = 0; s <= im.S; ++s) {
    auto& col = im.d1_elim[static_cast<std::size_t>(s)];
    col.resize(static_cast<std::size_t>(im.T + 1));
    for (std::int64_t t = 0; t <= im.T; ++t)
      col[static_cast<std::size_t>(t)] = std::make_unique<FpEliminator>(
          im.d1[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)], im.p);
  }

  im.e2dim.resize(static_cast<std::size_t>(im.S + 1));
  for (std::int64_t s = 0; s <= im.S; ++s) {
    auto& col = im.e2dim[static_cast<std::size_t>(s)];
    col.resize(static_cast<std::size_t>(im.T + 1));
    for (std::int64_t t = 0; t <= im.T; ++t) {
      std::int64_t dim = im.e1[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)].dim() -
                         im.d1_elim[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]->rank();
      if (s > 0)
        dim -= im.d1_elim[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t)]->rank();
      col[static_cast<std::size_t>(t)] = dim;
    }
  }
}

SpectralRun::~SpectralRun() = default;
SpectralRun::SpectralRun(SpectralRun&&) noexcept = default;
SpectralRun& SpectralRun::operator=(SpectralRun&&) noexcept = default;

std::int64_t SpectralRun::max_s() const { return impl_->S; }
std::int64_t SpectralRun::max_t() const { return impl_->T; }
const BigInt& SpectralRun::modulus() const { return impl_->ell; }

SpectralPage SpectralRun::page(int r) const {
  if (r != 1 && r != 2) throw ValidationError("page must be 1 or 2, got " + std::to_string(r));
  const Impl& im = *impl_;
  SpectralPage out;
  out.r = r;
  out.modulus = im.ell;
  out.entries.resize(static_cast<std::size_t>(im.S + 1));
  for (std::int64_t s = 0; s <= im.S; ++s) {
    auto& col = out.entries[static_cast<std::size_t>(s)];
    col.resize(static_cast<std::size_t>(im.T + 1));
    for (std::int64_t t = 0; t <= im.T; ++t) {
      std::int64_t dim = r == 1 ? im.e1[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)].dim()
                                : im.e2dim[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
      col[static_cast<std::size_t>(t)] =
          FgAbelianGroup(0, std::vector<BigInt>(static_cast<std::size_t>(dim), im.ell));
    }
  }
  if (r == 1) out.differentials = im.d1;
  return out;
}

std::int64_t SpectralRun::total_cohomology_dim(std::int64_t n) const {
  const Impl& im = *impl_;
  if (n < 0 || n > im.S + im.T) return 0;
  std::int64_t dim = im.total_rank(n) - im.tot_eliminator(n).rank();
  if (n > 0) dim -= im.tot_eliminator(n - 1).rank();
  return dim;
}

IntMatrix SpectralRun::edge_map(std::int64_t n) const {
  const Impl& im = *impl_;
  if (n < 0 || n > im.S)
    throw ValidationError("edge map target E_2^(" + std::to_string(n) + ", 0) is outside the window");
  for (std::int64_t s = 0; s <= n; ++s)
    if (!im.dv[static_cast<std::size_t>(s)][0].is_zero())
      throw ValidationError(
          "the edge projection needs vanishing vertical maps on the bottom row, violated at " +
          at(s, 0));

  Subquotient h = make_subquotient(im.tot_matrix(n),
                                   n > 0 ? im.tot_matrix(n - 1) : IntMatrix(im.total_rank(0), 0),
                                   im.p);
  const Subquotient& e1q = im.e1[static_cast<std::size_t>(n)][0];
  Subquotient e2q = make_subquotient(
      im.d1[static_cast<std::size_t>(n)][0],
      n > 0 ? im.d1[static_cast<std::size_t>(n - 1)][0] : IntMatrix(e1q.dim(), 0), im.p);

  std::int64_t bottom_offset = -1;
  for (const auto& [s, off] : im.blocks(n))
    if (s == n) bottom_offset = off;

  IntMatrix edge(e2q.dim(), h.dim());
  for (std::int64_t j = 0; j < h.dim(); ++j) {
    std::vector<std::int64_t> cocycle = h.representative(j, im.p);
    std::vector<std::int64_t> bottom(static_cast<std::size_t>(im.rank(n, 0)), 0);
    if (bottom_offset >= 0)
      for (std::size_t r = 0; r < bottom.size(); ++r)
        bottom[r] = cocycle[static_cast<std::size_t>(bottom_offset) + r];
    std::vector<std::int64_t> coords = e2q.coords(e1q.coords(bottom));
    for (std::size_t r = 0; r < coords.size(); ++r)
      if (coords[r] != 0) edge.set(static_cast<std::int64_t>(r), j, BigInt(coords[r]));
  }
  return edge;
}

bool SpectralRun::edge_is_isomorphism(std::int64_t n) const {
  IntMatrix edge = edge_map(n);
  if (edge.rows() != edge.cols()) return false;
  return FpEliminator(edge, impl_->p).rank() == edge.rows();
}

SpectralPage page(const DoubleComplex& dc, int r, const CoefficientRing& coeff) {
  if (!coeff.is_mod())
    throw UnsupportedCoefficient("spectral pages are computed over Z/l with l prime, got " +
                                 coeff.to_string());
  return SpectralRun(dc, coeff.modulus()).page(r);
}

IntMatrix edge_map(const DoubleComplex& dc, std::int64_t n, const CoefficientRing& coeff) {
  if (!coeff.is_mod())
    throw UnsupportedCoefficient("spectral pages are computed over Z/l with l prime, got " +
                                 coeff.to_string());
  return SpectralRun(dc, coeff.modulus()).edge_map(n);
}

}  // namespace cyclehom::spectral
