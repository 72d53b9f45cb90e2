#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace jensen {

// All elimination arithmetic is exact: entry growth during elimination is
// unbounded in principle and machine-word overflow would silently corrupt
// results.
using Int = boost::multiprecision::cpp_int;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_int_rows(const std::vector<std::vector<std::int32_t>>& rows,
                              std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix multiply(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const = default;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

// Smith normal form A = U * S * V with unimodular U, V. The diagonal is
// nonnegative and forms a divisibility chain. V_inv is the exact inverse
// of V. det_u/det_v are tracked during the elimination; the factorization
// and the inverse are re-verified before returning.
struct SnfResult {
  std::vector<Int> diagonal;  // length min(rows, cols)
  Matrix u, v, v_inv;
  int det_u = 1, det_v = 1;

  Matrix s_matrix(std::size_t rows, std::size_t cols) const;
  std::size_t rank() const;  // nonzero diagonal entries
};

SnfResult smith_normal_form(const Matrix& a);

// A generating set for the row module of `a` with at most cols() rows, in
// integer echelon form (strictly increasing leading columns). Row
// operations only, so the generated Z-module is unchanged.
Matrix row_module_basis(const Matrix& a);

}  // namespace jensen
