#pragma once

// Exact integer-matrix algebra: Smith normal form, integer-span membership
// and presentations of finitely generated abelian quotients Z^r / L.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace multisec {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

IntVector make_int_vector(std::initializer_list<long> values);
std::string to_string(const IntVector& v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors, all of length `rows`.
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(const IntVector& v) const;
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

Integer determinant(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);

/// left * A * right == diag(diag) (padded with zeros to A's shape).
struct SmithDecomposition {
  IntMatrix left;
  IntMatrix right;
  std::vector<Integer> diag;  // length min(rows, cols), non-negative, divisibility chain

  std::size_t rank() const;
  IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

SmithDecomposition snf(const IntMatrix& a);

/// Integer coefficients c with columns * c == v, if any exist.
std::optional<IntVector> solve_membership(const IntVector& v, const IntMatrix& columns);

/// Basis (as columns) of the integer kernel {c : columns * c == 0}.
IntMatrix integer_kernel(const IntMatrix& columns);

/// Z^r / (column span of L) written as (Z/d_1 + ... + Z/d_k) + Z^f.
struct QuotientPresentation {
  std::size_t ambient_rank = 0;
  std::size_t free_rank = 0;
  std::vector<Integer> invariant_factors;  // each > 1, d_i | d_{i+1}
  IntMatrix projection;                    // (k + f) x r: torsion rows first, then free rows

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool is_finite() const { return free_rank == 0; }
  /// Group order for finite quotients.
  Integer order() const;
  std::string describe() const;
};

/// Coordinates of a quotient element: torsion entries reduced into [0, d_i).
struct QuotientElement {
  IntVector torsion;
  IntVector free;

  bool is_zero() const;
  bool operator==(const QuotientElement&) const = default;
};

QuotientPresentation quotient(const IntMatrix& columns);
QuotientElement push_to_quotient(const IntVector& v, const QuotientPresentation& q);

}  // namespace multisec
