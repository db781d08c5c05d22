#pragma once

// Dense exact matrices over Q or F_p, plus the elimination engine the rest of
// the toolkit reduces to (rank, kernels, linear solves).
//
// Elimination runs on sparse rows internally: the structure maps in this
// toolkit are tall and mostly zero, and the dense API would otherwise
// materialize matrices with tens of millions of entries.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bialg/rational.hpp"

namespace bialg {

/// Sparse vector: (index, nonzero value) pairs sorted by index.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// Row-major dense matrix; every entry lives in field().
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);
  /// Entries given row by row; each is reduced into f.
  Matrix(Field f, std::size_t rows, std::size_t cols,
         std::vector<Rational> entries);
  static Matrix identity(Field f, std::size_t n);
  /// Convenience for tests: nested integer rows.
  static Matrix from_rows(Field f,
                          const std::vector<std::vector<std::int64_t>>& rows);
  /// Builds a rows x cols matrix from sparse columns.
  static Matrix from_columns(Field f, std::size_t rows,
                             std::span<const SparseVec> cols);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& entry(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Scalar at(std::size_t r, std::size_t c) const {
    return Scalar(field_, entry(r, c));
  }
  void set(std::size_t r, std::size_t c, const Rational& v);

  SparseVec column(std::size_t c) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, const Scalar& s);

/// Kronecker product with row-major pairing: row (i, k) of a (x) b is
/// i * b.rows() + k, column (j, l) is j * b.cols() + l.
Matrix kron(const Matrix& a, const Matrix& b);

std::size_t rank(const Matrix& a);

/// Null-space basis from Gauss-Jordan elimination, one column per free
/// variable. Each basis column has a 1 in its free coordinate and zeros in
/// the other free coordinates, so two kernels are equal iff their bases are.
Matrix kernel_basis(const Matrix& a);

/// Some x with a * x = b, or nullopt when b is outside the column space.
/// Free variables are set to zero; when a has full column rank the solution
/// is the unique one.
std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b);

// ------------------------------------------------------------------------
// Sparse-column entry points used by the FinVect backend.

/// A matrix given by its sparse columns.
struct SparseColumns {
  Field field;
  std::size_t rows = 0;
  std::vector<SparseVec> cols;

  static SparseColumns of(const Matrix& m);
};

std::size_t rank(const SparseColumns& a);
/// Kernel basis columns (vectors of length a.cols.size()).
std::vector<SparseVec> kernel_basis(const SparseColumns& a);
/// Solution columns (length a.cols.size()) or nullopt when unsolvable.
std::optional<std::vector<SparseVec>> solve_right(const SparseColumns& a,
                                                  const SparseColumns& b);

/// Adds coeff * v into acc (both sorted sparse vectors).
void axpy(Field f, const Rational& coeff, const SparseVec& v, SparseVec& acc);

}  // namespace bialg
