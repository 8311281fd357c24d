#pragma once

#include <cstddef>
#include <vector>

#include "caus/rational.hpp"

namespace caus {

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  /// Stacks the given vectors as rows; all must have length `cols`.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  std::vector<RationalVector> row_list() const;

  RationalMatrix transpose() const;
  RationalVector apply(const RationalVector& x) const;

  /// Appends the rows of `other`; column counts must agree.
  void append_rows(const RationalMatrix& other);
  void append_row(const RationalVector& r);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

/// Reduces `m` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot column of each remaining row.
std::vector<std::size_t> rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

/// Rows form a basis of { x : m x = 0 }, in reduced echelon form.
RationalMatrix null_space(const RationalMatrix& m);

/// Inverse of a square matrix; throws InvalidArgument when singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace caus
