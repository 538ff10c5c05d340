#pragma once

// Exact linear algebra over the rationals: sparse row reduction for the large
// catalecticant-type systems and a small dense matrix for Hessians and
// multiplication maps.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "apolar/ring.hpp"

namespace apolar::linalg {

/// Sorted by index, no explicit zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

Rational entry(const SparseVector& v, std::size_t index);
/// a += scale * b
void add_scaled(SparseVector& a, const Rational& scale, const SparseVector& b);

struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVector> row_data;

  static SparseMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& columns);
};

/// Fully reduced row echelon form: pivot entries equal 1 and pivot columns
/// are zero outside their row. Pivot columns are increasing.
struct Echelon {
  std::size_t cols = 0;
  std::vector<std::size_t> pivots;
  std::vector<SparseVector> rows;

  std::size_t rank() const { return pivots.size(); }
};

Echelon reduced_row_echelon(const SparseMatrix& m);

/// One vector per non-pivot column c: e_c minus its expression in pivots.
std::vector<SparseVector> kernel_basis(const Echelon& e);

/// Incremental span: reports whether each inserted vector enlarged it.
class SpanBuilder {
 public:
  bool insert(SparseVector v);
  std::size_t rank() const { return rows_.size(); }
  /// Reduce against the current span; empty result means membership.
  SparseVector reduce(SparseVector v) const;

 private:
  std::map<std::size_t, SparseVector> rows_;  // keyed by leading index
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rank() const;
  Rational determinant() const;
  SparseMatrix sparse() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace apolar::linalg
