#include "multisec/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace multisec {

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

std::string to_string(const IntVector& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i].get_str();
  }
  out << ')';
  return out.str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw DimensionMismatch("column " + std::to_string(j) + " has length " +
                              std::to_string(columns[j].size()) + ", expected " +
                              std::to_string(rows));
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  IntVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

namespace {

// Fraction-free (Bareiss) elimination. Returns the rank; for square input
// `det` receives the determinant.
std::size_t bareiss(IntMatrix m, Integer* det) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Integer prev = 1;
  int sign = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      m.swap_rows(pivot, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  if (det) {
    if (rows != cols) throw DimensionMismatch("determinant of a non-square matrix");
    *det = (r < rows) ? Integer(0) : Integer(sign * prev);
    if (rows == 0) *det = 1;
  }
  return r;
}

// floor division quotient, so that a - q*b has the sign of b's remainder convention
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

Integer determinant(const IntMatrix& a) {
  Integer det;
  bareiss(a, &det);
  return det;
}

std::size_t rank(const IntMatrix& a) { return bareiss(a, nullptr); }

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diag.begin(), diag.end(), [](const Integer& d) { return d != 0; }));
}

IntMatrix SmithDecomposition::diagonal_matrix(std::size_t rows, std::size_t cols) const {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
  return d;
}

SmithDecomposition snf(const IntMatrix& a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntMatrix m = a;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| in the trailing block, first in (row, col) order.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (m(i, j) == 0) continue;
          if (pi == rows || abs(m(i, j)) < abs(m(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) break;  // trailing block is zero

      m.swap_rows(t, pi);
      left.swap_rows(t, pi);
      m.swap_cols(t, pj);
      right.swap_cols(t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        Integer q = -floor_div(m(i, t), m(t, t));
        m.add_row_multiple(i, t, q);
        left.add_row_multiple(i, t, q);
        if (m(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        Integer q = -floor_div(m(t, j), m(t, t));
        m.add_col_multiple(j, t, q);
        right.add_col_multiple(j, t, q);
        if (m(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column of the pivot are clear; enforce divisibility.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            m.add_row_multiple(t, i, 1);
            left.add_row_multiple(t, i, 1);
            divides_all = false;
            break;
          }
        }
      if (!divides_all) continue;

      if (m(t, t) < 0) {
        m.negate_row(t);
        left.negate_row(t);
      }
      break;
    }
  }

  SmithDecomposition out{std::move(left), std::move(right), {}};
  out.diag.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diag.push_back(m(t, t));
  return out;
}

std::optional<IntVector> solve_membership(const IntVector& v, const IntMatrix& columns) {
  if (v.size() != columns.rows())
    throw DimensionMismatch("membership: vector length " + std::to_string(v.size()) +
                            " vs ambient rank " + std::to_string(columns.rows()));
  const SmithDecomposition s = snf(columns);
  const IntVector y = s.left * v;
  IntVector z(columns.cols());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const bool pivot = i < s.diag.size() && s.diag[i] != 0;
    if (!pivot) {
      if (y[i] != 0) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(y[i].get_mpz_t(), s.diag[i].get_mpz_t())) return std::nullopt;
    z[i] = y[i] / s.diag[i];
  }
  IntVector c = s.right * z;
  if (columns * c != v) throw std::logic_error("membership witness failed to verify");
  return c;
}

IntMatrix integer_kernel(const IntMatrix& columns) {
  const SmithDecomposition s = snf(columns);
  const std::size_t r = s.rank();
  std::vector<IntVector> basis;
  for (std::size_t j = r; j < columns.cols(); ++j) basis.push_back(s.right.column(j));
  return IntMatrix::from_columns(columns.cols(), basis);
}

Integer QuotientPresentation::order() const {
  if (!is_finite()) throw std::domain_error("order of an infinite group");
  Integer n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

std::string QuotientPresentation::describe() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& d : invariant_factors) {
    if (!first) out << " + ";
    out << "Z/" << d.get_str();
    first = false;
  }
  if (free_rank > 0) {
    if (!first) out << " + ";
    out << "Z";
    if (free_rank > 1) out << '^' << free_rank;
  }
  return out.str();
}

bool QuotientElement::is_zero() const {
  auto zero = [](const Integer& x) { return x == 0; };
  return std::all_of(torsion.begin(), torsion.end(), zero) &&
         std::all_of(free.begin(), free.end(), zero);
}

QuotientPresentation quotient(const IntMatrix& columns) {
  const std::size_t r = columns.rows();
  const SmithDecomposition s = snf(columns);
  const std::size_t rk = s.rank();

  QuotientPresentation q;
  q.ambient_rank = r;
  q.free_rank = r - rk;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < rk; ++i) {
    if (s.diag[i] > 1) {
      q.invariant_factors.push_back(s.diag[i]);
      kept.push_back(i);
    }
  }
  for (std::size_t i = rk; i < r; ++i) kept.push_back(i);

  q.projection = IntMatrix(kept.size(), r);
  for (std::size_t k = 0; k < kept.size(); ++k)
    for (std::size_t j = 0; j < r; ++j) q.projection(k, j) = s.left(kept[k], j);
  return q;
}

QuotientElement push_to_quotient(const IntVector& v, const QuotientPresentation& q) {
  if (v.size() != q.ambient_rank)
    throw DimensionMismatch("push_to_quotient: vector length " + std::to_string(v.size()) +
                            " vs ambient rank " + std::to_string(q.ambient_rank));
  const IntVector y = q.projection * v;
  const std::size_t k = q.invariant_factors.size();
  QuotientElement e;
  e.torsion.reserve(k);
  for (std::size_t i = 0; i < k; ++i) e.torsion.push_back(mod_nonneg(y[i], q.invariant_factors[i]));
  e.free.assign(y.begin() + static_cast<std::ptrdiff_t>(k), y.end());
  return e;
}

}  // namespace multisec
