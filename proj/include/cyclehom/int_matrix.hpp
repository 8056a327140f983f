#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclehom/bigint.hpp"
#include "cyclehom/coefficient_ring.hpp"
#include "cyclehom/errors.hpp"

namespace cyclehom::exact {

// Integer matrix with arbitrary-precision entries. Zero entries are never
// stored. Small matrices use a dense buffer, larger ones an ordered
// coordinate map; the split is an internal detail.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0), dense_(true) {}
  IntMatrix(std::int64_t rows, std::int64_t cols);

  static IntMatrix zero(std::int64_t rows, std::int64_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix identity(std::int64_t n);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  // Column j maps to row_of_col[j] with coefficient 1.
  static IntMatrix basis_map(std::int64_t rows, std::int64_t cols,
                             const std::vector<std::int64_t>& row_of_col);

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  std::int64_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  const BigInt& get(std::int64_t r, std::int64_t c) const;
  void set(std::int64_t r, std::int64_t c, BigInt v);
  void add_to(std::int64_t r, std::int64_t c, const BigInt& delta);

  // this += s * other
  void add_scaled(const IntMatrix& other, const BigInt& s);

  // Row-major traversal of nonzero entries.
  void for_each(const std::function<void(std::int64_t, std::int64_t, const BigInt&)>& fn) const;
  void for_each_in_row(std::int64_t r,
                       const std::function<void(std::int64_t, const BigInt&)>& fn) const;

  IntMatrix transpose() const;
  IntMatrix multiply(const IntMatrix& other) const;
  IntMatrix hstack(const IntMatrix& other) const;
  IntMatrix vstack(const IntMatrix& other) const;
  IntMatrix submatrix_rows(const std::vector<std::int64_t>& keep) const;
  IntMatrix submatrix_cols(const std::vector<std::int64_t>& keep) const;
  IntMatrix negated() const;

  // Entries reduced into [0, n).
  IntMatrix reduced_mod(const BigInt& n) const;
  bool is_zero_mod(const BigInt& n) const;

  // (row, coefficient) per column when every column has exactly one nonzero
  // entry; nullopt otherwise.
  std::optional<std::vector<std::pair<std::int64_t, BigInt>>> as_basis_map() const;

  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, BigInt>> entries() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return a.multiply(b); }

  std::string to_string() const;

 private:
  static constexpr std::int64_t kDenseLimit = 4096;

  bool in_range(std::int64_t r, std::int64_t c) const {
    return r >= 0 && r < rows_ && c >= 0 && c < cols_;
  }

  std::int64_t rows_, cols_;
  bool dense_;
  std::vector<BigInt> buf_;                        // dense storage
  std::map<std::pair<std::int64_t, std::int64_t>, BigInt> map_;  // sparse storage
};

}  // namespace cyclehom::exact
