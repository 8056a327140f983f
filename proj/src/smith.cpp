#include "cyclehom/smith.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

namespace cyclehom::exact {

namespace {

struct Cell {
  std::int64_t col;
  BigInt val;
};

// Row of nonzero cells sorted by column.
using Row = std::vector<Cell>;
using TRow = std::map<std::int64_t, BigInt>;

// Sparse bidirectional elimination working state. Rows hold sorted cell
// vectors and are rewritten by linear merges; per-column hash sets track
// which alive rows are nonzero where. Unit pivots are consumed first through
// a lazy Markowitz heap, then the general phase picks the entry of smallest
// magnitude and runs Euclidean reduction.
class Engine {
 public:
  Engine(const IntMatrix& m, const SmithOptions& opts)
      : nrows_(m.rows()),
        ncols_(m.cols()),
        opts_(opts),
        rows_(static_cast<std::size_t>(m.rows())),
        col_rows_(static_cast<std::size_t>(m.cols())),
        row_alive_(static_cast<std::size_t>(m.rows()), 1),
        col_alive_(static_cast<std::size_t>(m.cols()), 1) {
    m.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
      rows_[r].push_back({c, v});  // row-major traversal keeps rows sorted
      col_rows_[c].insert(r);
    });
    if (opts_.left) init_identity(left_rows_, nrows_);
    if (opts_.left_inverse) init_identity(left_inv_cols_, nrows_);
    if (opts_.right) init_identity(right_cols_, ncols_);
    if (opts_.right_inverse) init_identity(right_inv_rows_, ncols_);
  }

  SmithResult run() {
    seed_heap();
    while (true) {
      drain_heap();
      auto next = scan_min_entry();
      if (!next) break;
      auto [r, c] = *next;
      if (big_abs(value_at(r, c)) == 1)
        process_unit(r, c);
      else
        process_general(r, c);
    }
    heap_active_ = false;
    normalize_signs();
    fix_divisibility();
    return assemble();
  }

 private:
  static void init_identity(std::vector<TRow>& t, std::int64_t n) {
    t.assign(static_cast<std::size_t>(n), {});
    for (std::int64_t i = 0; i < n; ++i) t[i][i] = 1;
  }

  static Row::iterator find_cell(Row& row, std::int64_t c) {
    return std::lower_bound(row.begin(), row.end(), c,
                            [](const Cell& cell, std::int64_t col) { return cell.col < col; });
  }

  BigInt value_at(std::int64_t r, std::int64_t c) {
    auto it = find_cell(rows_[r], c);
    return it != rows_[r].end() && it->col == c ? it->val : BigInt(0);
  }

  // Single-cell write; linear shift, used only on rare paths.
  void set_value(std::int64_t r, std::int64_t c, BigInt v) {
    Row& row = rows_[r];
    auto it = find_cell(row, c);
    bool present = it != row.end() && it->col == c;
    if (v == 0) {
      if (present) {
        row.erase(it);
        col_rows_[c].erase(r);
      }
    } else if (present) {
      it->val = std::move(v);
    } else {
      row.insert(it, {c, std::move(v)});
      col_rows_[c].insert(r);
    }
  }

  // rows_[dst] += q * rows_[src], by sorted merge.
  void row_axpy(std::int64_t dst, std::int64_t src, const BigInt& q) {
    if (q == 0) return;
    const Row& s = rows_[src];
    Row& d = rows_[dst];
    Row out;
    out.reserve(d.size() + s.size());
    std::size_t i = 0, j = 0;
    const bool q_one = q == 1, q_neg_one = q == -1;
    while (i < d.size() || j < s.size()) {
      if (j >= s.size() || (i < d.size() && d[i].col < s[j].col)) {
        out.push_back(std::move(d[i]));
        ++i;
      } else if (i >= d.size() || s[j].col < d[i].col) {
        BigInt v = q_one ? s[j].val : q_neg_one ? BigInt(-s[j].val) : BigInt(q * s[j].val);
        col_rows_[s[j].col].insert(dst);
        if (heap_active_ && big_abs(v) == 1) push_candidate(dst, s[j].col);
        out.push_back({s[j].col, std::move(v)});
        ++j;
      } else {
        BigInt v = std::move(d[i].val);
        if (q_one)
          v += s[j].val;
        else if (q_neg_one)
          v -= s[j].val;
        else
          v += q * s[j].val;
        if (v == 0) {
          col_rows_[d[i].col].erase(dst);
        } else {
          if (heap_active_ && big_abs(v) == 1) push_candidate(dst, d[i].col);
          out.push_back({d[i].col, std::move(v)});
        }
        ++i;
        ++j;
      }
    }
    d = std::move(out);
    if (opts_.left) trow_axpy(left_rows_[dst], left_rows_[src], q);
    if (opts_.left_inverse) trow_axpy(left_inv_cols_[src], left_inv_cols_[dst], -q);
  }

  // column dst += q * column src; touches one cell per row holding src.
  void col_axpy(std::int64_t dst, std::int64_t src, const BigInt& q) {
    if (q == 0) return;
    std::vector<std::int64_t> touched(col_rows_[src].begin(), col_rows_[src].end());
    for (std::int64_t r : touched) {
      BigInt v = value_at(r, src);
      BigInt nv = value_at(r, dst) + q * v;
      if (heap_active_ && nv != 0 && big_abs(nv) == 1) push_candidate(r, dst);
      set_value(r, dst, std::move(nv));
    }
    mirror_col_axpy(dst, src, q);
  }

  void mirror_col_axpy(std::int64_t dst, std::int64_t src, const BigInt& q) {
    if (opts_.right) trow_axpy(right_cols_[dst], right_cols_[src], q);
    if (opts_.right_inverse) trow_axpy(right_inv_rows_[src], right_inv_rows_[dst], -q);
  }

  static void trow_axpy(TRow& dst, const TRow& src, const BigInt& q) {
    for (const auto& [k, v] : src) {
      auto [it, inserted] = dst.try_emplace(k, 0);
      it->second += q * v;
      if (it->second == 0) dst.erase(it);
    }
  }

  void swap_rows(std::int64_t r1, std::int64_t r2) {
    if (r1 == r2) return;
    for (const Cell& cell : rows_[r1]) col_rows_[cell.col].erase(r1);
    for (const Cell& cell : rows_[r2]) col_rows_[cell.col].erase(r2);
    std::swap(rows_[r1], rows_[r2]);
    for (const Cell& cell : rows_[r1]) col_rows_[cell.col].insert(r1);
    for (const Cell& cell : rows_[r2]) col_rows_[cell.col].insert(r2);
    if (opts_.left) std::swap(left_rows_[r1], left_rows_[r2]);
    if (opts_.left_inverse) std::swap(left_inv_cols_[r1], left_inv_cols_[r2]);
  }

  void swap_cols(std::int64_t c1, std::int64_t c2) {
    if (c1 == c2) return;
    std::set<std::int64_t> both;
    both.insert(col_rows_[c1].begin(), col_rows_[c1].end());
    both.insert(col_rows_[c2].begin(), col_rows_[c2].end());
    for (std::int64_t r : both) {
      BigInt v1 = value_at(r, c1), v2 = value_at(r, c2);
      set_value(r, c1, std::move(v2));
      set_value(r, c2, std::move(v1));
    }
    if (opts_.right) std::swap(right_cols_[c1], right_cols_[c2]);
    if (opts_.right_inverse) std::swap(right_inv_rows_[c1], right_inv_rows_[c2]);
  }

  void negate_row(std::int64_t r) {
    for (Cell& cell : rows_[r]) cell.val = -cell.val;
    if (opts_.left)
      for (auto& [k, v] : left_rows_[r]) v = -v;
    if (opts_.left_inverse)
      for (auto& [k, v] : left_inv_cols_[r]) v = -v;
  }

  void push_candidate(std::int64_t r, std::int64_t c) {
    heap_.push({score(r, c), r, c});
  }

  std::int64_t score(std::int64_t r, std::int64_t c) const {
    return (static_cast<std::int64_t>(rows_[r].size()) - 1) *
           (static_cast<std::int64_t>(col_rows_[c].size()) - 1);
  }

  void seed_heap() {
    heap_active_ = true;
    for (std::int64_t r = 0; r < nrows_; ++r)
      for (const Cell& cell : rows_[r])
        if (big_abs(cell.val) == 1) push_candidate(r, cell.col);
  }

  void drain_heap() {
    while (!heap_.empty()) {
      auto [s, r, c] = heap_.top();
      heap_.pop();
      if (!row_alive_[r] || !col_alive_[c]) continue;
      BigInt v = value_at(r, c);
      if (big_abs(v) != 1) continue;
      std::int64_t fresh = score(r, c);
      if (fresh > s) {
        heap_.push({fresh, r, c});
        continue;
      }
      process_unit(r, c);
    }
  }

  std::vector<std::int64_t> sorted_col_members(std::int64_t c) const {
    std::vector<std::int64_t> v(col_rows_[c].begin(), col_rows_[c].end());
    std::sort(v.begin(), v.end());
    return v;
  }

  void process_unit(std::int64_t r, std::int64_t c) {
    const BigInt v = value_at(r, c);  // +-1
    for (std::int64_t r2 : sorted_col_members(c)) {
      if (r2 == r) continue;
      BigInt a = value_at(r2, c);
      if (a == 0) continue;
      row_axpy(r2, r, v == 1 ? BigInt(-a) : a);
    }
    clear_pivot_row(r, c, v);
    retire(r, c);
  }

  // Column operations eliminating the pivot row touch no other row once the
  // pivot column is clean, so the matrix side collapses to dropping the row
  // wholesale; only the right transforms see the individual operations.
  void clear_pivot_row(std::int64_t r, std::int64_t c, const BigInt& v) {
    Row& row = rows_[r];
    Row pivot_only;
    for (Cell& cell : row) {
      if (cell.col == c) {
        pivot_only.push_back(std::move(cell));
        continue;
      }
      if (opts_.right || opts_.right_inverse)
        mirror_col_axpy(cell.col, c, v == 1 ? BigInt(-cell.val) : cell.val);
      col_rows_[cell.col].erase(r);
    }
    row = std::move(pivot_only);
  }

  void process_general(std::int64_t r, std::int64_t c) {
    while (true) {
      reduce_column(r, c);
      if (!reduce_row(r, c)) break;
    }
    retire(r, c);
  }

  // Clears column c against the pivot; swaps a smaller remainder into the
  // pivot seat whenever one appears.
  void reduce_column(std::int64_t r, std::int64_t c) {
    while (true) {
      const BigInt v = value_at(r, c);
      bool swapped = false;
      for (std::int64_t r2 : sorted_col_members(c)) {
        if (r2 == r) continue;
        BigInt a = value_at(r2, c);
        if (a == 0) continue;
        BigInt q = div_nearest(a, v);
        row_axpy(r2, r, -q);
        if (value_at(r2, c) != 0) {
          swap_rows(r, r2);
          swapped = true;
          break;
        }
      }
      if (!swapped) return;
    }
  }

  bool reduce_row(std::int64_t r, std::int64_t c) {
    bool swapped_any = false;
    while (true) {
      const BigInt v = value_at(r, c);
      bool swapped = false;
      std::vector<std::int64_t> others;
      for (const Cell& cell : rows_[r])
        if (cell.col != c) others.push_back(cell.col);
      for (std::int64_t c2 : others) {
        BigInt b = value_at(r, c2);
        if (b == 0) continue;
        BigInt q = div_nearest(b, v);
        col_axpy(c2, c, -q);
        if (value_at(r, c2) != 0) {
          swap_cols(c, c2);
          swapped = swapped_any = true;
          break;
        }
      }
      if (!swapped) return swapped_any;
    }
  }

  void retire(std::int64_t r, std::int64_t c) {
    row_alive_[r] = 0;
    col_alive_[c] = 0;
    pivots_.push_back({r, c});
  }

  std::optional<std::pair<std::int64_t, std::int64_t>> scan_min_entry() {
    std::optional<std::pair<std::int64_t, std::int64_t>> best;
    BigInt best_abs = 0;
    for (std::int64_t r = 0; r < nrows_; ++r) {
      if (!row_alive_[r]) continue;
      for (const Cell& cell : rows_[r]) {
        BigInt a = big_abs(cell.val);
        if (!best || a < best_abs) {
          best = {r, cell.col};
          best_abs = std::move(a);
        }
      }
    }
    return best;
  }

  void normalize_signs() {
    for (auto& [r, c] : pivots_)
      if (value_at(r, c) < 0) negate_row(r);
  }

  // Enforces d_i | d_j along the pivot order. Each repair keeps both pivot
  // rows and columns singleton, so it only ever touches the four cells of
  // the 2x2 block.
  void fix_divisibility() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < pivots_.size(); ++i) {
        for (std::size_t j = i + 1; j < pivots_.size(); ++j) {
          auto [ri, ci] = pivots_[i];
          auto [rj, cj] = pivots_[j];
          BigInt a = value_at(ri, ci), b = value_at(rj, cj);
          if (b % a == 0) continue;
          auto [g, s, t] = extended_gcd(a, b);
          BigInt ag = a / g, bg = b / g;
          row_axpy(ri, rj, 1);
          col_2x2(ci, cj, s, t, -bg, ag);
          row_axpy(rj, ri, -t * bg);
          changed = true;
        }
      }
    }
  }

  // Simultaneous column operation: (C_i, C_j) <- (w11 C_i + w21 C_j,
  // w12 C_i + w22 C_j), mirrored into the right transforms.
  void col_2x2(std::int64_t ci, std::int64_t cj, const BigInt& w11, const BigInt& w21,
               const BigInt& w12, const BigInt& w22) {
    std::set<std::int64_t> touched;
    touched.insert(col_rows_[ci].begin(), col_rows_[ci].end());
    touched.insert(col_rows_[cj].begin(), col_rows_[cj].end());
    for (std::int64_t r : touched) {
      BigInt x = value_at(r, ci), y = value_at(r, cj);
      set_value(r, ci, w11 * x + w21 * y);
      set_value(r, cj, w12 * x + w22 * y);
    }
    if (opts_.right) trow_2x2(right_cols_[ci], right_cols_[cj], w11, w21, w12, w22);
    if (opts_.right_inverse)
      trow_2x2(right_inv_rows_[ci], right_inv_rows_[cj], w22, -w12, -w21, w11);
  }

  static void trow_2x2(TRow& u, TRow& w, const BigInt& w11, const BigInt& w21,
                       const BigInt& w12, const BigInt& w22) {
    std::set<std::int64_t> keys;
    for (const auto& [k, v] : u) keys.insert(k);
    for (const auto& [k, v] : w) keys.insert(k);
    for (std::int64_t k : keys) {
      auto iu = u.find(k);
      auto iw = w.find(k);
      BigInt x = iu == u.end() ? BigInt(0) : iu->second;
      BigInt y = iw == w.end() ? BigInt(0) : iw->second;
      BigInt nx = w11 * x + w21 * y, ny = w12 * x + w22 * y;
      if (nx == 0) u.erase(k); else u[k] = std::move(nx);
      if (ny == 0) w.erase(k); else w[k] = std::move(ny);
    }
  }

  SmithResult assemble() {
    SmithResult out;
    out.rank = static_cast<std::int64_t>(pivots_.size());
    out.diag.reserve(pivots_.size());
    for (auto& [r, c] : pivots_) out.diag.push_back(value_at(r, c));

    std::vector<std::int64_t> row_order, col_order;
    row_order.reserve(static_cast<std::size_t>(nrows_));
    col_order.reserve(static_cast<std::size_t>(ncols_));
    for (auto& [r, c] : pivots_) {
      row_order.push_back(r);
      col_order.push_back(c);
    }
    for (std::int64_t r = 0; r < nrows_; ++r)
      if (row_alive_[r]) row_order.push_back(r);
    for (std::int64_t c = 0; c < ncols_; ++c)
      if (col_alive_[c]) col_order.push_back(c);

    if (opts_.left) {
      IntMatrix left(nrows_, nrows_);
      for (std::int64_t k = 0; k < nrows_; ++k)
        for (const auto& [j, v] : left_rows_[row_order[k]]) left.set(k, j, v);
      out.left = std::move(left);
    }
    if (opts_.left_inverse) {
      IntMatrix linv(nrows_, nrows_);
      for (std::int64_t k = 0; k < nrows_; ++k)
        for (const auto& [j, v] : left_inv_cols_[row_order[k]]) linv.set(j, k, v);
      out.left_inverse = std::move(linv);
    }
    if (opts_.right) {
      IntMatrix right(ncols_, ncols_);
      for (std::int64_t k = 0; k < ncols_; ++k)
        for (const auto& [j, v] : right_cols_[col_order[k]]) right.set(j, k, v);
      out.right = std::move(right);
    }
    if (opts_.right_inverse) {
      IntMatrix rinv(ncols_, ncols_);
      for (std::int64_t k = 0; k < ncols_; ++k)
        for (const auto& [j, v] : right_inv_rows_[col_order[k]]) rinv.set(k, j, v);
      out.right_inverse = std::move(rinv);
    }
    return out;
  }

  std::int64_t nrows_, ncols_;
  SmithOptions opts_;
  std::vector<Row> rows_;
  std::vector<std::unordered_set<std::int64_t>> col_rows_;
  std::vector<char> row_alive_, col_alive_;
  std::vector<TRow> left_rows_, left_inv_cols_, right_cols_, right_inv_rows_;
  std::vector<std::pair<std::int64_t, std::int64_t>> pivots_;

  using HeapEntry = std::tuple<std::int64_t, std::int64_t, std::int64_t>;
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>> heap_;
  bool heap_active_ = false;
};

}  // namespace

SmithResult smith_reduce(const IntMatrix& m, const SmithOptions& opts) {
  Engine engine(m, opts);
  return engine.run();
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  SmithOptions opts;
  opts.left = opts.right = true;
  SmithResult r = smith_reduce(m, opts);
  return {std::move(r.diag), std::move(*r.left), std::move(*r.right), r.rank};
}

std::vector<BigInt> invariant_factors(const IntMatrix& m) {
  return smith_reduce(m).diag;
}

std::int64_t integer_rank(const IntMatrix& m) { return smith_reduce(m).rank; }

}  // namespace cyclehom::exact
