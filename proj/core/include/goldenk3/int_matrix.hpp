#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "goldenk3/integer.hpp"
#include "goldenk3/lattice_map.hpp"

namespace goldenk3 {

/// Dense row-major integer matrix of arbitrary shape.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from(const LatticeMap& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Integer trace() const;
  /// Only for 2x2 matrices; throws std::invalid_argument otherwise.
  LatticeMap to_lattice_map() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix power(const IntMatrix& m, unsigned long k);

/// Block-diagonal sum [[a, 0], [0, b]].
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace goldenk3
