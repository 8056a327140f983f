#include "cyclehom/int_matrix.hpp"

#include <sstream>

namespace cyclehom::exact {

namespace {
const BigInt kZero = 0;
}

IntMatrix::IntMatrix(std::int64_t rows, std::int64_t cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw ValidationError("negative matrix dimension");
  dense_ = rows * cols <= kDenseLimit;
  if (dense_) buf_.assign(static_cast<std::size_t>(rows * cols), BigInt(0));
}

IntMatrix IntMatrix::identity(std::int64_t n) {
  IntMatrix m(n, n);
  for (std::int64_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  std::int64_t r = static_cast<std::int64_t>(rows.size());
  std::int64_t c = r == 0 ? 0 : static_cast<std::int64_t>(rows[0].size());
  IntMatrix m(r, c);
  for (std::int64_t i = 0; i < r; ++i) {
    if (static_cast<std::int64_t>(rows[i].size()) != c)
      throw DimensionMismatch("ragged row list");
    for (std::int64_t j = 0; j < c; ++j)
      if (rows[i][j] != 0) m.set(i, j, rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::basis_map(std::int64_t rows, std::int64_t cols,
                               const std::vector<std::int64_t>& row_of_col) {
  if (static_cast<std::int64_t>(row_of_col.size()) != cols)
    throw DimensionMismatch("basis_map: one target row per column required");
  IntMatrix m(rows, cols);
  for (std::int64_t j = 0; j < cols; ++j) {
    if (row_of_col[j] < 0 || row_of_col[j] >= rows)
      throw DimensionMismatch("basis_map: target row out of range");
    m.set(row_of_col[j], j, 1);
  }
  return m;
}

std::int64_t IntMatrix::nnz() const {
  if (!dense_) return static_cast<std::int64_t>(map_.size());
  std::int64_t n = 0;
  for (const auto& v : buf_)
    if (v != 0) ++n;
  return n;
}

const BigInt& IntMatrix::get(std::int64_t r, std::int64_t c) const {
  if (!in_range(r, c)) throw DimensionMismatch("matrix index out of range");
  if (dense_) return buf_[static_cast<std::size_t>(r * cols_ + c)];
  auto it = map_.find({r, c});
  return it == map_.end() ? kZero : it->second;
}

void IntMatrix::set(std::int64_t r, std::int64_t c, BigInt v) {
  if (!in_range(r, c)) throw DimensionMismatch("matrix index out of range");
  if (dense_) {
    buf_[static_cast<std::size_t>(r * cols_ + c)] = std::move(v);
  } else if (v == 0) {
    map_.erase({r, c});
  } else {
    map_[{r, c}] = std::move(v);
  }
}

void IntMatrix::add_to(std::int64_t r, std::int64_t c, const BigInt& delta) {
  if (delta == 0) return;
  if (!in_range(r, c)) throw DimensionMismatch("matrix index out of range");
  if (dense_) {
    buf_[static_cast<std::size_t>(r * cols_ + c)] += delta;
    return;
  }
  auto [it, inserted] = map_.try_emplace({r, c}, delta);
  if (!inserted) {
    it->second += delta;
    if (it->second == 0) map_.erase(it);
  }
}

void IntMatrix::add_scaled(const IntMatrix& other, const BigInt& s) {
  if (other.rows_ != rows_ || other.cols_ != cols_)
    throw DimensionMismatch("add_scaled: shape mismatch");
  if (s == 0) return;
  other.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) { add_to(r, c, s * v); });
}

void IntMatrix::for_each(
    const std::function<void(std::int64_t, std::int64_t, const BigInt&)>& fn) const {
  if (dense_) {
    for (std::int64_t r = 0; r < rows_; ++r)
      for (std::int64_t c = 0; c < cols_; ++c) {
        const BigInt& v = buf_[static_cast<std::size_t>(r * cols_ + c)];
        if (v != 0) fn(r, c, v);
      }
    return;
  }
  for (const auto& [rc, v] : map_) fn(rc.first, rc.second, v);
}

void IntMatrix::for_each_in_row(
    std::int64_t r, const std::function<void(std::int64_t, const BigInt&)>& fn) const {
  if (r < 0 || r >= rows_) throw DimensionMismatch("row index out of range");
  if (dense_) {
    for (std::int64_t c = 0; c < cols_; ++c) {
      const BigInt& v = buf_[static_cast<std::size_t>(r * cols_ + c)];
      if (v != 0) fn(c, v);
    }
    return;
  }
  auto lo = map_.lower_bound({r, 0});
  for (auto it = lo; it != map_.end() && it->first.first == r; ++it)
    fn(it->first.second, it->second);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) { t.set(c, r, v); });
  return t;
}

IntMatrix IntMatrix::multiply(const IntMatrix& other) const {
  if (cols_ != other.rows_)
    throw DimensionMismatch("multiply: " + std::to_string(cols_) + " columns against " +
                            std::to_string(other.rows_) + " rows");
  IntMatrix out(rows_, other.cols_);
  for_each([&](std::int64_t i, std::int64_t k, const BigInt& a) {
    other.for_each_in_row(k, [&](std::int64_t j, const BigInt& b) { out.add_to(i, j, a * b); });
  });
  return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& other) const {
  if (other.rows_ != rows_) throw DimensionMismatch("hstack: row count mismatch");
  IntMatrix out(rows_, cols_ + other.cols_);
  for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) { out.set(r, c, v); });
  other.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) { out.set(r, cols_ + c, v); });
  return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& other) const {
  if (other.cols_ != cols_) throw DimensionMismatch("vstack: column count mismatch");
  IntMatrix out(rows_ + other.rows_, cols_);
  for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) { out.set(r, c, v); });
  other.for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) { out.set(rows_ + r, c, v); });
  return out;
}

IntMatrix IntMatrix::submatrix_rows(const std::vector<std::int64_t>& keep) const {
  std::vector<std::int64_t> pos(static_cast<std::size_t>(rows_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= rows_) throw DimensionMismatch("submatrix_rows: index out of range");
    pos[static_cast<std::size_t>(keep[i])] = static_cast<std::int64_t>(i);
  }
  IntMatrix out(static_cast<std::int64_t>(keep.size()), cols_);
  for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
    if (pos[static_cast<std::size_t>(r)] >= 0) out.set(pos[static_cast<std::size_t>(r)], c, v);
  });
  return out;
}

IntMatrix IntMatrix::submatrix_cols(const std::vector<std::int64_t>& keep) const {
  std::vector<std::int64_t> pos(static_cast<std::size_t>(cols_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= cols_) throw DimensionMismatch("submatrix_cols: index out of range");
    pos[static_cast<std::size_t>(keep[i])] = static_cast<std::int64_t>(i);
  }
  IntMatrix out(rows_, static_cast<std::int64_t>(keep.size()));
  for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
    if (pos[static_cast<std::size_t>(c)] >= 0) out.set(r, pos[static_cast<std::size_t>(c)], v);
  });
  return out;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix out(rows_, cols_);
  for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) { out.set(r, c, -v); });
  return out;
}

IntMatrix IntMatrix::reduced_mod(const BigInt& n) const {
  if (n < 1) throw ValidationError("reduced_mod: modulus must be positive");
  IntMatrix out(rows_, cols_);
  for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) { out.set(r, c, mod_floor(v, n)); });
  return out;
}

bool IntMatrix::is_zero_mod(const BigInt& n) const {
  bool zero = true;
  for_each([&](std::int64_t, std::int64_t, const BigInt& v) {
    if (v % n != 0) zero = false;
  });
  return zero;
}

std::optional<std::vector<std::pair<std::int64_t, BigInt>>> IntMatrix::as_basis_map() const {
  std::vector<std::pair<std::int64_t, BigInt>> map(static_cast<std::size_t>(cols_), {-1, 0});
  bool ok = true;
  for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) {
    auto& slot = map[static_cast<std::size_t>(c)];
    if (slot.first >= 0) ok = false;
    slot = {r, v};
  });
  if (!ok) return std::nullopt;
  for (const auto& [r, v] : map)
    if (r < 0) return std::nullopt;
  return map;
}

std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, BigInt>> IntMatrix::entries() const {
  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, BigInt>> out;
  out.reserve(static_cast<std::size_t>(nnz()));
  for_each([&](std::int64_t r, std::int64_t c, const BigInt& v) { out.push_back({{r, c}, v}); });
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.entries() == b.entries();
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::int64_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::int64_t c = 0; c < cols_; ++c) {
      if (c) os << " ";
      os << get(r, c).str();
    }
  }
  os << "] (" << rows_ << "x" << cols_ << ")";
  return os.str();
}

}  // namespace cyclehom::exact
