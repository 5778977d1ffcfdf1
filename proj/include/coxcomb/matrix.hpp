#ifndef COXCOMB_MATRIX_HPP
#define COXCOMB_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "coxcomb/numeric.hpp"

namespace coxcomb {

/// Dense integer matrix with exact entries, row-major. Empty shapes
/// (0 rows or 0 columns) are legal and encode trivial groups and zero maps.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Int>& entries() const { return entries_; }

  IntegerMatrix transpose() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;

  /// Exact determinant (square matrices; 1 for the empty matrix),
  /// fraction-free Bareiss elimination.
  Int determinant() const;
  bool is_unimodular() const;

  /// Horizontal concatenation [this | rhs]; row counts must agree.
  IntegerMatrix hconcat(const IntegerMatrix& rhs) const;
  std::vector<Int> column(std::size_t j) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Int& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Int& factor);
  void negate_row(std::size_t i);

  bool operator==(const IntegerMatrix& rhs) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

}  // namespace coxcomb

#endif
